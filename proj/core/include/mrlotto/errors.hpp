// Copyright 2026 The mrlotto Authors
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

#ifndef MRLOTTO_ERRORS_HPP_
#define MRLOTTO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mrlotto {

// Vector lengths (resource types T or contests C) disagree.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// An argument lies outside the domain of a formula (negative budget, NaN,
// probability vector that does not sum to one, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Both players have zero effective resources; the game value is undefined.
class DegenerateGameError : public DomainError {
 public:
  explicit DegenerateGameError(const std::string& what) : DomainError(what) {}
};

}  // namespace mrlotto

#endif  // MRLOTTO_ERRORS_HPP_
