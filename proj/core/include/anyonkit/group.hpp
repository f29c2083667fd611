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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "anyonkit/permutation.hpp"

namespace anyonkit {

/**
 * A finite permutation group held as a fully enumerated element list.
 *
 * Elements are sorted lexicographically by image sequence, so the identity
 * is always element 0 and the order is identical across runs. All products
 * go through a cached index-based multiplication table; this is meant for
 * groups of a few thousand elements at most.
 */
class FiniteGroup {
 public:
  using Index = std::uint32_t;
  static constexpr std::size_t kDefaultOrderCap = 2048;

  FiniteGroup() = default;

  /**
   * Builds the group from an element list that is already closed under
   * multiplication. The list is re-sorted into canonical order. Throws
   * DomainError if the set is not a group.
   */
  static FiniteGroup from_elements(std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  static constexpr std::size_t identity_index() { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const {
    return mul_table_[a * elements_.size() + b];
  }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /** Index of x * g * x^-1. */
  std::size_t conjugate(std::size_t x, std::size_t g) const {
    return multiply(multiply(x, g), inverse(x));
  }

  std::optional<std::size_t> find(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }
  /** Throws DomainError when p is not an element. */
  std::size_t index_of(const Permutation& p) const;

  bool is_abelian() const;
  /** Least common multiple of the element orders. */
  std::size_t exponent() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::vector<Index> mul_table_;
  std::vector<Index> inverse_;
  std::unordered_map<Permutation, Index, PermutationHash> lookup_;
};

/** Closure of the generators; throws OrderCapExceeded past `order_cap` elements. */
FiniteGroup generate_group(std::span<const Permutation> generators,
                           std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/**
 * Standard permutation groups:
 *   'S' symmetric on n points, 'A' alternating on n points,
 *   'D' dihedral of order 2n on n points (rotation (1..n), reflection fixing 1;
 *       for n = 4 this is <(1,2,3,4),(2,4)> with (1,3)(2,4) central),
 *   'Z' cyclic of order n generated by (1,...,n).
 */
FiniteGroup named_group(char family, std::size_t n,
                        std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/** Parses "S3", "A5", "D4", "Z6" (case-insensitive family letter). */
FiniteGroup named_group(std::string_view spec,
                        std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

struct ConjugacyClass {
  std::size_t index = 0;
  /** Element indices in ascending (canonical) order; members[0] is the representative. */
  std::vector<std::size_t> members;

  std::size_t representative() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

/**
 * Conjugacy classes sorted by (order of representative, class size,
 * representative image sequence). Class 0 is the identity class.
 */
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group);

/** Maps each element index to the index of its class. */
std::vector<std::size_t> class_lookup(const FiniteGroup& group,
                                      const std::vector<ConjugacyClass>& classes);

/** {g : gh = hg}; throws DomainError if h is not in the group. */
FiniteGroup centralizer(const FiniteGroup& group, const Permutation& h);

/**
 * Conjugators x_1..x_k with x_i * h_1 * x_i^-1 = h_i, where h_i runs over the
 * members of one class in member order. Each x_i is the first element in
 * canonical order with that property.
 */
struct Transversal {
  std::size_t class_index = 0;
  std::vector<std::size_t> reps;
};

Transversal right_transversal(const FiniteGroup& group, const ConjugacyClass& cls);
Transversal right_transversal(const FiniteGroup& group, std::size_t class_index);

}  // namespace anyonkit
