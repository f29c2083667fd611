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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anyonkit {

/**
 * A bijection of the points {0, ..., n-1}. Text I/O uses the usual 1-based
 * disjoint-cycle notation, e.g. "(1,2)(3,4)".
 *
 * Products compose right to left: (a * b)(x) = a(b(x)).
 */
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  /** Identity on `degree` points. */
  explicit Permutation(std::size_t degree);
  /** Takes 0-based images; throws ParseError unless they form a bijection. */
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  std::span<const Point> images() const { return images_; }
  Point operator()(Point x) const { return images_[x]; }

  bool is_identity() const;
  Permutation inverse() const;
  /** Least m >= 1 with p^m = identity. */
  std::size_t order() const;
  Permutation pow(long long exponent) const;
  /** Multiset of cycle lengths (including fixed points), sorted descending. */
  std::vector<std::size_t> cycle_type() const;

  /** Disjoint-cycle notation, 1-based, "()" for the identity. */
  std::string to_string() const;
  /** Compact notation without commas, e.g. "(123)", used in rendered tables. */
  std::string to_compact_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

std::size_t element_order(const Permutation& h);

/** Parses disjoint-cycle notation with points in 1..degree. */
Permutation parse_permutation(std::string_view text, std::size_t degree);

/** Parses a semicolon-separated generator list, e.g. "(1,2)(3,4);(1,2,3)". */
std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace anyonkit
