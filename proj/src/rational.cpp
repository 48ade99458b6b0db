// Copyright 2026 The zkgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zkg/rational.hpp"

#include <cmath>
#include <string>

#include "zkg/error.hpp"

namespace zkg {

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() &&
         s.find_first_not_of("0123456789") == std::string::npos;
}

Integer parse_integer(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  if (!all_digits(body)) throw SpecError("not an integer: '" + text + "'");
  Integer value(body);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw SpecError("bad denominator in '" + text + "'");
    const Integer den(den_text);
    if (den == 0) throw SpecError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw SpecError("bad decimal '" + text + "'");
    const bool negative = !whole.empty() && whole[0] == '-';
    std::string whole_digits = whole;
    if (!whole_digits.empty() && (whole_digits[0] == '-' || whole_digits[0] == '+')) {
      whole_digits.erase(0, 1);
    }
    if (whole_digits.empty()) whole_digits = "0";
    if (!all_digits(whole_digits)) throw SpecError("bad decimal '" + text + "'");
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Rational value(Integer(whole_digits) * scale + Integer(frac), scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text));
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 bits of mantissa scaled to an integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational value{Integer(scaled)};
  if (exponent > 0) {
    value *= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(exponent)));
  } else if (exponent < 0) {
    value /= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(-exponent)));
  }
  return value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace zkg
