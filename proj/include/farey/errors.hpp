// Copyright 2026 The farey-rank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef FAREY_ERRORS_HPP_
#define FAREY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace farey {

// Input outside an operation's domain (negative slope, x outside [0,1],
// rank index out of range, oracle called past its size limit, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input: fractions, polygon files.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search came back empty, e.g. no fraction with a bounded denominator
// inside the requested interval.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace farey

#endif  // FAREY_ERRORS_HPP_
