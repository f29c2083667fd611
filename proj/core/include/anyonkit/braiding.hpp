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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "anyonkit/characters.hpp"
#include "anyonkit/group.hpp"
#include "anyonkit/quantum_double.hpp"

namespace anyonkit {

/** Unitary matrices of one irrep, indexed by element index of the group. */
using IrrepMatrices = std::vector<Eigen::MatrixXcd>;

/**
 * An explicit unitary model of irrep `irrep` of `group`, cut out of the
 * regular representation: project onto the isotypic component, then split
 * off one copy with the eigenspace of a random right-multiplication operator.
 * Throws NumericalError if the traces do not reproduce the character to 1e-8
 * within the retry budget.
 */
IrrepMatrices irrep_matrices(const FiniteGroup& group, const CharacterTable& table,
                             std::size_t irrep, std::uint64_t seed = 0x1bb5eedULL);

/**
 * The internal Hilbert space of a particle, basis |h_i, v_j> ordered by class
 * member first, charge component second. Holds a reference to the double,
 * which must outlive it.
 */
class InternalSpace {
 public:
  struct BasisState {
    std::size_t member = 0;
    std::size_t component = 0;
  };

  InternalSpace(const QuantumDouble& dbl, std::size_t particle, std::uint64_t seed = 0x1bb5eedULL);

  const QuantumDouble& quantum_double() const { return *dbl_; }
  const Particle& particle() const { return dbl_->particle(particle_); }
  std::size_t dimension() const { return class_size_ * degree_; }
  std::size_t degree() const { return degree_; }
  std::size_t index(BasisState s) const { return s.member * degree_ + s.component; }
  BasisState state(std::size_t index) const { return {index / degree_, index % degree_}; }
  /** Group element index of the flux carried by a basis state. */
  std::size_t flux(std::size_t index) const;
  const IrrepMatrices& charge_matrices() const { return charge_; }

  /**
   * Action of g: |h_i, v> -> |g h_i g^-1, alpha(x_k^-1 g x_i) v> where x_k
   * conjugates h_1 onto g h_i g^-1.
   */
  Eigen::MatrixXcd group_action(std::size_t g) const;

 private:
  const QuantumDouble* dbl_;
  std::size_t particle_;
  std::size_t class_size_;
  std::size_t degree_;
  IrrepMatrices charge_;
};

/** Image of one basis state under g, as a coefficient vector over the basis. */
Eigen::VectorXcd flux_metamorphosis(const InternalSpace& space, std::size_t g,
                                    InternalSpace::BasisState state);

/**
 * R : V_p (x) V_q -> V_q (x) V_p, |h, v> (x) |h', v'> -> (h . |h', v'>) (x) |h, v>.
 * Tensor indices are left-factor major.
 */
Eigen::MatrixXcd braid_matrix(const InternalSpace& p, const InternalSpace& q);

/** R_qp R_pq on V_p (x) V_q. */
Eigen::MatrixXcd monodromy(const InternalSpace& p, const InternalSpace& q);

/** (1/|H|) tr R^-2; must agree with QuantumDouble::s_entry. */
std::complex<double> s_oracle(const InternalSpace& p, const InternalSpace& q);

/** max |s1 s2 s1 - s2 s1 s2| for sigma_1 = R (x) 1, sigma_2 = 1 (x) R on V^(x)3. */
double yang_baxter_residual(const InternalSpace& space);

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace anyonkit
