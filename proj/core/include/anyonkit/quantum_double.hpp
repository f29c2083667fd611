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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "anyonkit/characters.hpp"
#include "anyonkit/group.hpp"
#include "anyonkit/rational.hpp"

namespace anyonkit {

/**
 * One flux sector of D(H): a conjugacy class, the conjugators that carry its
 * representative onto each member, and the centralizer of the representative
 * together with its character table (the possible charges).
 */
struct FluxSector {
  ConjugacyClass cls;
  Transversal transversal;
  FiniteGroup centralizer;
  CharacterTable charges;
  /** Parent element index -> centralizer element index, or kNotInCentralizer. */
  std::vector<std::size_t> to_centralizer;

  static constexpr std::size_t kNotInCentralizer = static_cast<std::size_t>(-1);
};

/** A superselection sector (flux class, centralizer irrep). */
struct Particle {
  std::size_t index = 0;
  std::size_t class_index = 0;
  std::size_t irrep_index = 0;
  std::string label;
  std::size_t class_size = 1;
  std::size_t charge_degree = 1;
  std::size_t quantum_dimension = 1;
  /** Topological spin in [0, 1); its denominator divides the order of the flux. */
  Rational spin{0};

  bool is_vacuum() const { return class_index == 0 && irrep_index == 0; }
};

/** Spreadsheet-style labels: A..Z, AA..AZ, BA, ... */
std::string particle_label(std::size_t index);

/**
 * The particle content of the quantum double of a finite group. Construction
 * computes classes, transversals, centralizers and their character tables;
 * everything else is derived on demand from those.
 */
class QuantumDouble {
 public:
  explicit QuantumDouble(FiniteGroup group, const CharacterTableOptions& options = {});

  const FiniteGroup& group() const { return group_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<FluxSector>& sectors() const { return sectors_; }
  const FluxSector& sector(std::size_t class_index) const { return sectors_.at(class_index); }

  const std::vector<Particle>& particles() const { return particles_; }
  const Particle& particle(std::size_t p) const { return particles_.at(p); }
  std::size_t num_particles() const { return particles_.size(); }
  /** Throws DomainError for an unknown (class, irrep) pair. */
  std::size_t particle_index(std::size_t class_index, std::size_t irrep_index) const;
  /** Lookup by display label; throws ParseError for unknown labels. */
  std::size_t particle_by_label(std::string_view label) const;
  static constexpr std::size_t vacuum() { return 0; }

  /** chi_alpha(g) for g (parent element index) in the centralizer of sector A. */
  std::complex<double> charge_character(std::size_t class_index, std::size_t irrep_index,
                                        std::size_t element) const;

  /**
   * S entry from the character double sum over commuting class-member pairs,
   * each member conjugated back into the centralizer by its transversal element.
   */
  std::complex<double> s_entry(std::size_t p, std::size_t q) const;

  long long quantum_dimension_square_sum() const;

 private:
  FiniteGroup group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<FluxSector> sectors_;
  std::vector<Particle> particles_;
};

/** List of particles in canonical (class, irrep) order; same as QuantumDouble::particles(). */
std::vector<Particle> enumerate_particles(const FiniteGroup& group);

/**
 * Spin of (A, alpha) from alpha(h_1) = exp(2 pi i s) * 1, reconstructed as an
 * exact fraction with denominator order(h_1). Throws NumericalError if the
 * character ratio is not within 1e-6 of such a root of unity.
 */
Rational spin(const QuantumDouble& dbl, std::size_t class_index, std::size_t irrep_index);

struct ModularData {
  Eigen::MatrixXcd s;
  Eigen::VectorXcd t;
  /** Charge conjugation C = S^2 as a permutation of particle indices. */
  std::vector<std::size_t> conjugation;
};

struct ModularResiduals {
  double symmetry = 0.0;
  double unitarity = 0.0;
  double st_cubed = 0.0;       // |(ST)^3 - S^2|
  double vacuum_row = 0.0;     // |S_0q - d_q/|H||
  double conjugation = 0.0;    // distance of S^2 from the permutation matrix
  bool conjugation_involution = false;
};

/**
 * Assembles S, T and C. Throws NumericalError when S fails to be symmetric
 * and unitary to 1e-9, when S^2 does not round to a permutation at 1e-9, or
 * when (ST)^3 = S^2 fails at 1e-8.
 */
ModularData modular_data(const QuantumDouble& dbl);
ModularResiduals modular_residuals(const QuantumDouble& dbl, const ModularData& md);

/** N^C_{AB} stored densely; indices are particle indices. */
class FusionTable {
 public:
  FusionTable() = default;
  FusionTable(std::vector<std::string> labels, std::vector<std::size_t> dimensions,
              std::vector<Rational> spins);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& dimensions() const { return dims_; }
  const std::vector<Rational>& spins() const { return spins_; }

  int operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return n_[(a * size() + b) * size() + c];
  }
  int& operator()(std::size_t a, std::size_t b, std::size_t c) {
    return n_[(a * size() + b) * size() + c];
  }

  /** Channels of a x b with their multiplicities, in particle order. */
  std::vector<std::pair<std::size_t, int>> channels(std::size_t a, std::size_t b) const;
  /** The unique b with N^0_{ab} >= 1; throws NumericalError if not unique. */
  std::size_t dual(std::size_t a) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> dims_;
  std::vector<Rational> spins_;
  std::vector<int> n_;
};

/** Verlinde sum, rounded; throws NumericalError if not within 1e-6 of a nonnegative integer. */
long long fusion_coefficient(const ModularData& md, std::size_t a, std::size_t b, std::size_t c);
long long fusion_coefficient(const QuantumDouble& dbl, const ModularData& md, std::size_t class_a,
                             std::size_t alpha, std::size_t class_b, std::size_t beta,
                             std::size_t class_c, std::size_t gamma);

/**
 * Full fusion tensor. Checks commutativity, the vacuum identity, the unique
 * antiparticle and sum_C N d_C = d_A d_B, throwing NumericalError on failure.
 * Associativity is O(n^5) and lives in check_associativity().
 */
FusionTable fusion_table(const QuantumDouble& dbl, const ModularData& md);

/** True iff sum_E N^E_{AB} N^D_{EC} = sum_F N^F_{BC} N^D_{AF} for all A, B, C, D. */
bool check_associativity(const FusionTable& table);

/** P(AB -> C) = N^C_{AB} d_C / (d_A d_B). */
Rational fusion_probability(const FusionTable& table, std::size_t a, std::size_t b, std::size_t c);

/**
 * Antiparticle through C = S^2, cross-checked against the fusion table and
 * the spin. Throws NumericalError on any disagreement.
 */
std::size_t antiparticle(const ModularData& md, const FusionTable& table, std::size_t p);

}  // namespace anyonkit
