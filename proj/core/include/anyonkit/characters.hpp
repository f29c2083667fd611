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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anyonkit/group.hpp"

namespace anyonkit {

/**
 * Class multiplication coefficients: c(i, j, k) is the number of pairs
 * (x, y) in C_i x C_j with x * y = z for a fixed z in C_k.
 */
class ClassAlgebra {
 public:
  ClassAlgebra() = default;
  explicit ClassAlgebra(std::size_t num_classes)
      : r_(num_classes), c_(num_classes * num_classes * num_classes, 0) {}

  std::size_t num_classes() const { return r_; }
  long long operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * r_ + j) * r_ + k];
  }
  long long& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * r_ + j) * r_ + k];
  }

 private:
  std::size_t r_ = 0;
  std::vector<long long> c_;
};

ClassAlgebra class_structure_constants(const FiniteGroup& group,
                                       const std::vector<ConjugacyClass>& classes);
ClassAlgebra class_structure_constants(const FiniteGroup& group);

/** Irreducible complex characters; rows are irreps, columns are classes. */
struct CharacterTable {
  std::size_t group_order = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<Permutation> class_representatives;
  /** Element index (in the group the table was built for) -> class index. */
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> degrees;
  Eigen::MatrixXcd values;

  std::size_t num_irreps() const { return degrees.size(); }
  std::size_t num_classes() const { return class_sizes.size(); }
  std::complex<double> operator()(std::size_t irrep, std::size_t cls) const {
    return values(static_cast<Eigen::Index>(irrep), static_cast<Eigen::Index>(cls));
  }
  /** Character of `irrep` at a group element given by index. */
  std::complex<double> at_element(std::size_t irrep, std::size_t element) const {
    return (*this)(irrep, class_of[element]);
  }
};

struct CharacterTableOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  int max_attempts = 20;
  /** Minimum gap between eigenvalues of the random class-matrix combination. */
  double separation = 1e-6;
};

/**
 * Burnside's method: diagonalize a random real combination of the class
 * matrices, read central characters off the eigenvectors and rescale them
 * to characters. Rows come out in canonical order: trivial first, then by
 * degree, then lexicographically by (real, imag) across the class order.
 *
 * Throws NumericalError if no draw separates the eigenvalues within the
 * retry budget.
 */
CharacterTable character_table(const FiniteGroup& group, const std::vector<ConjugacyClass>& classes,
                               const CharacterTableOptions& options = {});
CharacterTable character_table(const FiniteGroup& group, const CharacterTableOptions& options = {});

struct CharacterValidation {
  double row_residual = 0.0;
  double column_residual = 0.0;
  long long degree_square_sum = 0;
  bool degree_sum_ok = false;
  bool bounded = false;  // |chi(g)| <= chi(1) everywhere
  bool passed = false;
  std::vector<std::string> failures;

  double max_residual() const { return std::max(row_residual, column_residual); }
};

/** Orthogonality and degree checks; passes iff every residual is below 1e-8. */
CharacterValidation validate(const CharacterTable& table);

}  // namespace anyonkit
