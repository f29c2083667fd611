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

#include "anyonkit/quantum_double.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "anyonkit/errors.hpp"

namespace anyonkit {

namespace {

constexpr double kIntegerTolerance = 1e-6;
constexpr double kSpinTolerance = 1e-6;
constexpr double kMatrixTolerance = 1e-9;
constexpr double kModularTolerance = 1e-8;

}  // namespace

std::string particle_label(std::size_t index) {
  std::string label;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    label.insert(label.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return label;
}

QuantumDouble::QuantumDouble(FiniteGroup group, const CharacterTableOptions& options)
    : group_(std::move(group)), classes_(conjugacy_classes(group_)) {
  sectors_.reserve(classes_.size());
  for (const auto& cls : classes_) {
    FluxSector sector;
    sector.cls = cls;
    sector.transversal = right_transversal(group_, cls);
    sector.centralizer = centralizer(group_, group_.element(cls.representative()));
    sector.charges = character_table(sector.centralizer, options);
    sector.to_centralizer.assign(group_.order(), FluxSector::kNotInCentralizer);
    for (std::size_t i = 0; i < sector.centralizer.order(); ++i) {
      sector.to_centralizer[group_.index_of(sector.centralizer.element(i))] = i;
    }
    sectors_.push_back(std::move(sector));
  }

  for (const auto& sector : sectors_) {
    for (std::size_t alpha = 0; alpha < sector.charges.num_irreps(); ++alpha) {
      Particle p;
      p.index = particles_.size();
      p.class_index = sector.cls.index;
      p.irrep_index = alpha;
      p.label = particle_label(p.index);
      p.class_size = sector.cls.size();
      p.charge_degree = sector.charges.degrees[alpha];
      p.quantum_dimension = p.class_size * p.charge_degree;
      particles_.push_back(std::move(p));
    }
  }
  for (auto& p : particles_) p.spin = anyonkit::spin(*this, p.class_index, p.irrep_index);
}

std::size_t QuantumDouble::particle_index(std::size_t class_index, std::size_t irrep_index) const {
  for (const auto& p : particles_) {
    if (p.class_index == class_index && p.irrep_index == irrep_index) return p.index;
  }
  throw DomainError("no particle with class " + std::to_string(class_index) + " and irrep " +
                    std::to_string(irrep_index));
}

std::size_t QuantumDouble::particle_by_label(std::string_view label) const {
  for (const auto& p : particles_) {
    if (p.label == label) return p.index;
  }
  throw ParseError("unknown particle label '" + std::string(label) + "'");
}

std::complex<double> QuantumDouble::charge_character(std::size_t class_index,
                                                     std::size_t irrep_index,
                                                     std::size_t element) const {
  const FluxSector& sector = sectors_[class_index];
  const std::size_t local = sector.to_centralizer[element];
  if (local == FluxSector::kNotInCentralizer) {
    throw DomainError("element is not in the centralizer of the flux representative");
  }
  return sector.charges.at_element(irrep_index, local);
}

std::complex<double> QuantumDouble::s_entry(std::size_t p, std::size_t q) const {
  const Particle& a = particles_.at(p);
  const Particle& b = particles_.at(q);
  const FluxSector& sa = sectors_[a.class_index];
  const FluxSector& sb = sectors_[b.class_index];

  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i < sa.cls.size(); ++i) {
    const std::size_t hi = sa.cls.members[i];
    const std::size_t xi = sa.transversal.reps[i];
    for (std::size_t j = 0; j < sb.cls.size(); ++j) {
      const std::size_t hj = sb.cls.members[j];
      if (group_.multiply(hi, hj) != group_.multiply(hj, hi)) continue;
      const std::size_t xj = sb.transversal.reps[j];
      // x_i^-1 h_j x_i lies in N_A because it commutes with x_i^-1 h_i x_i = h_1.
      const std::size_t in_a = group_.multiply(group_.multiply(group_.inverse(xi), hj), xi);
      const std::size_t in_b = group_.multiply(group_.multiply(group_.inverse(xj), hi), xj);
      total += std::conj(charge_character(a.class_index, a.irrep_index, in_a)) *
               std::conj(charge_character(b.class_index, b.irrep_index, in_b));
    }
  }
  return total / static_cast<double>(group_.order());
}

long long QuantumDouble::quantum_dimension_square_sum() const {
  long long sum = 0;
  for (const auto& p : particles_) {
    sum += static_cast<long long>(p.quantum_dimension * p.quantum_dimension);
  }
  return sum;
}

std::vector<Particle> enumerate_particles(const FiniteGroup& group) {
  return QuantumDouble(group).particles();
}

Rational spin(const QuantumDouble& dbl, std::size_t class_index, std::size_t irrep_index) {
  const FluxSector& sector = dbl.sector(class_index);
  const std::size_t rep = sector.cls.representative();
  const auto order = static_cast<std::int64_t>(dbl.group().element(rep).order());
  const std::complex<double> z = dbl.charge_character(class_index, irrep_index, rep) /
                                 static_cast<double>(sector.charges.degrees[irrep_index]);
  if (std::abs(std::abs(z) - 1.0) > kSpinTolerance) {
    throw NumericalError("charge does not act on the flux as a phase");
  }
  double s = std::arg(z) / (2.0 * std::numbers::pi);
  if (s < 0) s += 1.0;
  const double scaled = s * static_cast<double>(order);
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) / static_cast<double>(order) > kSpinTolerance) {
    throw NumericalError("spin is not a multiple of 1/" + std::to_string(order));
  }
  const auto num = static_cast<std::int64_t>(rounded) % order;
  return Rational(num, order);
}

ModularResiduals modular_residuals(const QuantumDouble& dbl, const ModularData& md) {
  ModularResiduals res;
  const auto n = md.s.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  res.symmetry = (md.s - md.s.transpose()).cwiseAbs().maxCoeff();
  res.unitarity = (md.s * md.s.adjoint() - id).cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd s2 = md.s * md.s;
  const Eigen::MatrixXcd st = md.s * md.t.asDiagonal();
  res.st_cubed = (st * st * st - s2).cwiseAbs().maxCoeff();

  Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    perm(p, static_cast<Eigen::Index>(md.conjugation[static_cast<std::size_t>(p)])) = 1.0;
  }
  res.conjugation = (s2 - perm).cwiseAbs().maxCoeff();

  res.conjugation_involution = true;
  for (std::size_t p = 0; p < md.conjugation.size(); ++p) {
    if (md.conjugation[md.conjugation[p]] != p) res.conjugation_involution = false;
  }

  const auto order = static_cast<double>(dbl.group().order());
  for (Eigen::Index q = 0; q < n; ++q) {
    const double expect =
        static_cast<double>(dbl.particle(static_cast<std::size_t>(q)).quantum_dimension) / order;
    res.vacuum_row = std::max(res.vacuum_row, std::abs(md.s(0, q) - expect));
  }
  return res;
}

ModularData modular_data(const QuantumDouble& dbl) {
  const auto n = static_cast<Eigen::Index>(dbl.num_particles());
  ModularData md;
  md.s.resize(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p; q < n; ++q) {
      md.s(p, q) = dbl.s_entry(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
      md.s(q, p) = q == p ? md.s(p, q)
                          : dbl.s_entry(static_cast<std::size_t>(q), static_cast<std::size_t>(p));
    }
  }
  md.t.resize(n);
  for (Eigen::Index p = 0; p < n; ++p) {
    const double phase =
        2.0 * std::numbers::pi * to_double(dbl.particle(static_cast<std::size_t>(p)).spin);
    md.t(p) = std::polar(1.0, phase);
  }

  const Eigen::MatrixXcd s2 = md.s * md.s;
  md.conjugation.assign(static_cast<std::size_t>(n), 0);
  for (Eigen::Index p = 0; p < n; ++p) {
    Eigen::Index hit = -1;
    for (Eigen::Index q = 0; q < n; ++q) {
      const std::complex<double> v = s2(p, q);
      if (std::abs(v - 1.0) < kMatrixTolerance) {
        if (hit >= 0) throw NumericalError("S^2 row has two unit entries");
        hit = q;
      } else if (std::abs(v) >= kMatrixTolerance) {
        throw NumericalError("S^2 is not a permutation matrix");
      }
    }
    if (hit < 0) throw NumericalError("S^2 row has no unit entry");
    md.conjugation[static_cast<std::size_t>(p)] = static_cast<std::size_t>(hit);
  }

  const ModularResiduals res = modular_residuals(dbl, md);
  if (res.symmetry > kMatrixTolerance) throw NumericalError("S is not symmetric");
  if (res.unitarity > kMatrixTolerance) throw NumericalError("S is not unitary");
  if (!res.conjugation_involution) throw NumericalError("C = S^2 is not an involution");
  if (res.st_cubed > kModularTolerance) throw NumericalError("(ST)^3 != S^2");
  return md;
}

FusionTable::FusionTable(std::vector<std::string> labels, std::vector<std::size_t> dimensions,
                         std::vector<Rational> spins)
    : labels_(std::move(labels)),
      dims_(std::move(dimensions)),
      spins_(std::move(spins)),
      n_(labels_.size() * labels_.size() * labels_.size(), 0) {}

std::vector<std::pair<std::size_t, int>> FusionTable::channels(std::size_t a, std::size_t b) const {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t c = 0; c < size(); ++c) {
    if (int m = (*this)(a, b, c); m > 0) out.emplace_back(c, m);
  }
  return out;
}

std::size_t FusionTable::dual(std::size_t a) const {
  std::size_t found = size();
  for (std::size_t b = 0; b < size(); ++b) {
    if ((*this)(a, b, 0) >= 1) {
      if (found != size() || (*this)(a, b, 0) != 1) {
        throw NumericalError("particle " + labels_[a] + " has no unique antiparticle");
      }
      found = b;
    }
  }
  if (found == size()) throw NumericalError("particle " + labels_[a] + " has no antiparticle");
  return found;
}

long long fusion_coefficient(const ModularData& md, std::size_t a, std::size_t b, std::size_t c) {
  const auto n = md.s.rows();
  const auto ia = static_cast<Eigen::Index>(a);
  const auto ib = static_cast<Eigen::Index>(b);
  const auto ic = static_cast<Eigen::Index>(c);
  std::complex<double> sum = 0.0;
  for (Eigen::Index d = 0; d < n; ++d) {
    const std::complex<double> denom = md.s(0, d);
    if (std::abs(denom) < 1e-14) throw NumericalError("zero vacuum-row entry in Verlinde sum");
    sum += md.s(ia, d) * md.s(ib, d) * std::conj(md.s(ic, d)) / denom;
  }
  const double rounded = std::round(sum.real());
  if (std::abs(sum - rounded) > kIntegerTolerance || rounded < 0) {
    throw NumericalError("Verlinde sum is not a nonnegative integer");
  }
  return static_cast<long long>(rounded);
}

long long fusion_coefficient(const QuantumDouble& dbl, const ModularData& md, std::size_t class_a,
                             std::size_t alpha, std::size_t class_b, std::size_t beta,
                             std::size_t class_c, std::size_t gamma) {
  return fusion_coefficient(md, dbl.particle_index(class_a, alpha), dbl.particle_index(class_b, beta),
                            dbl.particle_index(class_c, gamma));
}

FusionTable fusion_table(const QuantumDouble& dbl, const ModularData& md) {
  const std::size_t n = dbl.num_particles();
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<Rational> spins;
  for (const auto& p : dbl.particles()) {
    labels.push_back(p.label);
    dims.push_back(p.quantum_dimension);
    spins.push_back(p.spin);
  }
  FusionTable table(std::move(labels), std::move(dims), std::move(spins));

  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd ratio(ni, ni);  // S_ad / S_0d
  for (Eigen::Index a = 0; a < ni; ++a) {
    for (Eigen::Index d = 0; d < ni; ++d) {
      if (std::abs(md.s(0, d)) < 1e-14) throw NumericalError("zero vacuum-row entry in Verlinde sum");
      ratio(a, d) = md.s(a, d) / md.s(0, d);
    }
  }
  const Eigen::MatrixXcd s_conj = md.s.conjugate();
  for (Eigen::Index a = 0; a < ni; ++a) {
    for (Eigen::Index b = a; b < ni; ++b) {
      const Eigen::VectorXcd weight = ratio.row(a).transpose().cwiseProduct(md.s.row(b).transpose());
      const Eigen::VectorXcd sums = s_conj * weight;
      for (Eigen::Index c = 0; c < ni; ++c) {
        const double rounded = std::round(sums(c).real());
        if (std::abs(sums(c) - rounded) > kIntegerTolerance || rounded < 0) {
          throw NumericalError("Verlinde sum for " + table.labels()[static_cast<std::size_t>(a)] +
                               " x " + table.labels()[static_cast<std::size_t>(b)] +
                               " is not a nonnegative integer");
        }
        const auto m = static_cast<int>(rounded);
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        const auto uc = static_cast<std::size_t>(c);
        table(ua, ub, uc) = m;
        table(ub, ua, uc) = m;
      }
    }
  }

  // Commutativity holds by construction.
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (table(0, b, c) != (b == c ? 1 : 0)) throw NumericalError("vacuum is not the fusion identity");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    (void)table.dual(a);
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < n; ++c) {
        total += static_cast<std::size_t>(table(a, b, c)) * table.dimensions()[c];
      }
      if (total != table.dimensions()[a] * table.dimensions()[b]) {
        throw NumericalError("fusion of " + table.labels()[a] + " x " + table.labels()[b] +
                             " does not conserve quantum dimension");
      }
    }
  }
  return table;
}

bool check_associativity(const FusionTable& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          long long left = 0;
          long long right = 0;
          for (std::size_t e = 0; e < n; ++e) {
            left += static_cast<long long>(t(a, b, e)) * t(e, c, d);
            right += static_cast<long long>(t(b, c, e)) * t(a, e, d);
          }
          if (left != right) return false;
        }
      }
    }
  }
  return true;
}

Rational fusion_probability(const FusionTable& table, std::size_t a, std::size_t b, std::size_t c) {
  const auto& d = table.dimensions();
  return Rational(static_cast<std::int64_t>(table(a, b, c)) * static_cast<std::int64_t>(d[c]),
                  static_cast<std::int64_t>(d[a] * d[b]));
}

std::size_t antiparticle(const ModularData& md, const FusionTable& table, std::size_t p) {
  const std::size_t via_c = md.conjugation.at(p);
  const std::size_t via_fusion = table.dual(p);
  if (via_c != via_fusion) {
    throw NumericalError("C = S^2 and the fusion table disagree on the antiparticle of " +
                         table.labels()[p]);
  }
  if (table.spins()[p] != table.spins()[via_c]) {
    throw NumericalError("antiparticle of " + table.labels()[p] + " has a different spin");
  }
  return via_c;
}

}  // namespace anyonkit
