// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace anyonkit {

/** Base class for every error raised by the library. */
class AnyonError : public std::runtime_error {
 public:
  explicit AnyonError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Malformed user input: cycle notation, group specs, labels. */
class ParseError : public AnyonError {
 public:
  explicit ParseError(const std::string& msg) : AnyonError(msg) {}
};

/** A precondition on arguments was violated (wrong modulus, angle out of range, ...). */
class DomainError : public AnyonError {
 public:
  explicit DomainError(const std::string& msg) : AnyonError(msg) {}
};

class OrderCapExceeded : public AnyonError {
 public:
  explicit OrderCapExceeded(const std::string& msg) : AnyonError(msg) {}
};

/**
 * A numerical step produced a value that should have been integral, rational
 * or a permutation but was not within tolerance. Signals an internal bug or
 * a pathological random draw, not user error.
 */
class NumericalError : public AnyonError {
 public:
  explicit NumericalError(const std::string& msg) : AnyonError(msg) {}
};

}  // namespace anyonkit
