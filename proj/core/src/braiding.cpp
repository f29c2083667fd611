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

#include "anyonkit/braiding.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "anyonkit/errors.hpp"

namespace anyonkit {

namespace {

constexpr double kCharacterTolerance = 1e-8;
constexpr double kClusterGap = 1e-6;
constexpr int kMaxAttempts = 20;

bool check_irrep(const FiniteGroup& group, const CharacterTable& table, std::size_t irrep,
                 const IrrepMatrices& mats) {
  const auto d = static_cast<Eigen::Index>(table.degrees[irrep]);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (std::abs(mats[g].trace() - table.at_element(irrep, g)) > kCharacterTolerance) return false;
    if ((mats[g] * mats[g].adjoint() - id).cwiseAbs().maxCoeff() > kCharacterTolerance) return false;
  }
  return true;
}

}  // namespace

IrrepMatrices irrep_matrices(const FiniteGroup& group, const CharacterTable& table,
                             std::size_t irrep, std::uint64_t seed) {
  const std::size_t m = group.order();
  const std::size_t d = table.degrees.at(irrep);
  IrrepMatrices mats(m);

  if (d == 1) {
    for (std::size_t g = 0; g < m; ++g) {
      mats[g] = Eigen::MatrixXcd::Constant(1, 1, table.at_element(irrep, g));
    }
    return mats;
  }

  const auto mi = static_cast<Eigen::Index>(m);
  const auto di = static_cast<Eigen::Index>(d);
  // Isotypic projector (d/m) sum_g conj(chi(g)) L(g), with L(g) e_x = e_{gx}.
  Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(mi, mi);
  for (std::size_t g = 0; g < m; ++g) {
    const std::complex<double> w =
        std::conj(table.at_element(irrep, g)) * static_cast<double>(d) / static_cast<double>(m);
    for (std::size_t x = 0; x < m; ++x) {
      projector(static_cast<Eigen::Index>(group.multiply(g, x)), static_cast<Eigen::Index>(x)) += w;
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Orthonormal basis of the d^2-dimensional isotypic component.
    Eigen::MatrixXcd probe(mi, di * di);
    for (Eigen::Index i = 0; i < probe.size(); ++i) probe(i) = {gauss(rng), gauss(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(projector * probe);
    const Eigen::MatrixXcd basis =
        qr.householderQ() * Eigen::MatrixXcd::Identity(mi, di * di);

    // A random Hermitian combination of right multiplications commutes with
    // the left action; its eigenspaces inside the component are irreducible.
    Eigen::MatrixXcd right = Eigen::MatrixXcd::Zero(mi, mi);
    for (std::size_t h = 0; h < m; ++h) {
      const std::complex<double> c{gauss(rng), gauss(rng)};
      const std::size_t h_inv = group.inverse(h);
      for (std::size_t x = 0; x < m; ++x) {
        // R(h) e_x = e_{x h^-1}
        right(static_cast<Eigen::Index>(group.multiply(x, h_inv)), static_cast<Eigen::Index>(x)) += c;
      }
    }
    const Eigen::MatrixXcd hermitian = right + right.adjoint();
    const Eigen::MatrixXcd reduced = basis.adjoint() * hermitian * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(reduced);
    if (eig.info() != Eigen::Success) continue;
    const Eigen::VectorXd& values = eig.eigenvalues();
    if (std::abs(values(di - 1) - values(0)) > kClusterGap) continue;
    if (values.size() > di && std::abs(values(di) - values(di - 1)) < kClusterGap) continue;

    const Eigen::MatrixXcd copy = basis * eig.eigenvectors().leftCols(di);
    for (std::size_t g = 0; g < m; ++g) {
      Eigen::MatrixXcd left_copy(mi, di);
      for (std::size_t x = 0; x < m; ++x) {
        left_copy.row(static_cast<Eigen::Index>(group.multiply(g, x))) =
            copy.row(static_cast<Eigen::Index>(x));
      }
      mats[g] = copy.adjoint() * left_copy;
    }
    if (check_irrep(group, table, irrep, mats)) return mats;
  }
  throw NumericalError("could not split off irrep " + std::to_string(irrep) +
                       " from the regular representation");
}

InternalSpace::InternalSpace(const QuantumDouble& dbl, std::size_t particle, std::uint64_t seed)
    : dbl_(&dbl), particle_(particle) {
  const Particle& p = dbl.particle(particle);
  const FluxSector& sector = dbl.sector(p.class_index);
  class_size_ = p.class_size;
  degree_ = p.charge_degree;
  charge_ = irrep_matrices(sector.centralizer, sector.charges, p.irrep_index, seed);
}

std::size_t InternalSpace::flux(std::size_t index) const {
  return dbl_->sector(particle().class_index).cls.members[index / degree_];
}

Eigen::MatrixXcd InternalSpace::group_action(std::size_t g) const {
  const FiniteGroup& group = dbl_->group();
  const FluxSector& sector = dbl_->sector(particle().class_index);
  const auto dim = static_cast<Eigen::Index>(dimension());
  const auto d = static_cast<Eigen::Index>(degree_);
  Eigen::MatrixXcd action = Eigen::MatrixXcd::Zero(dim, dim);
  const auto& members = sector.cls.members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t target = group.conjugate(g, members[i]);
    const auto k = static_cast<std::size_t>(
        std::lower_bound(members.begin(), members.end(), target) - members.begin());
    const std::size_t xk = sector.transversal.reps[k];
    const std::size_t xi = sector.transversal.reps[i];
    const std::size_t n = group.multiply(group.multiply(group.inverse(xk), g), xi);
    const std::size_t local = sector.to_centralizer[n];
    if (local == FluxSector::kNotInCentralizer) {
      throw NumericalError("x_k^-1 g x_i left the centralizer; transversal is inconsistent");
    }
    action.block(static_cast<Eigen::Index>(k) * d, static_cast<Eigen::Index>(i) * d, d, d) =
        charge_[local];
  }
  return action;
}

Eigen::VectorXcd flux_metamorphosis(const InternalSpace& space, std::size_t g,
                                    InternalSpace::BasisState state) {
  return space.group_action(g).col(static_cast<Eigen::Index>(space.index(state)));
}

Eigen::MatrixXcd braid_matrix(const InternalSpace& p, const InternalSpace& q) {
  const auto dp = static_cast<Eigen::Index>(p.dimension());
  const auto dq = static_cast<Eigen::Index>(q.dimension());
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(dp * dq, dp * dq);
  // Group actions on V_q are shared by all basis states of V_p with the same flux.
  std::vector<Eigen::MatrixXcd> actions(static_cast<std::size_t>(dp));
  for (Eigen::Index u = 0; u < dp; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    if (uu % p.degree() == 0) {
      actions[uu] = q.group_action(p.flux(uu));
    } else {
      actions[uu] = actions[uu - uu % p.degree()];
    }
    const Eigen::MatrixXcd& act = actions[uu];
    for (Eigen::Index w = 0; w < dq; ++w) {
      for (Eigen::Index w2 = 0; w2 < dq; ++w2) {
        const std::complex<double> v = act(w2, w);
        if (v != 0.0) r(w2 * dp + u, u * dq + w) = v;
      }
    }
  }
  return r;
}

Eigen::MatrixXcd monodromy(const InternalSpace& p, const InternalSpace& q) {
  return braid_matrix(q, p) * braid_matrix(p, q);
}

std::complex<double> s_oracle(const InternalSpace& p, const InternalSpace& q) {
  // The monodromy is unitary, so its inverse is the adjoint.
  const Eigen::MatrixXcd inverse = monodromy(p, q).adjoint();
  return inverse.trace() / static_cast<double>(p.quantum_double().group().order());
}

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double yang_baxter_residual(const InternalSpace& space) {
  const Eigen::MatrixXcd r = braid_matrix(space, space);
  const auto d = static_cast<Eigen::Index>(space.dimension());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd s1 = kronecker(r, id);
  const Eigen::MatrixXcd s2 = kronecker(id, r);
  return (s1 * s2 * s1 - s2 * s1 * s2).cwiseAbs().maxCoeff();
}

}  // namespace anyonkit
