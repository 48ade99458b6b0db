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

#ifndef ZKG_ERROR_HPP_
#define ZKG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace zkg {

// Raised when an operation's domain precondition is violated (unknown state,
// threshold below its domain, ambiguous inference, ...). The CLI maps these to
// exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed input documents and bad command lines (exit code 2).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zkg

#endif  // ZKG_ERROR_HPP_
