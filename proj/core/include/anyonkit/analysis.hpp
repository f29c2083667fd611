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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anyonkit/quantum_double.hpp"

namespace anyonkit {

class InternalSpace;

// ---------------------------------------------------------------------------
// Closed subsystems

enum class SubsystemMethod { kExhaustive, kGeneratedClosure };

struct SubsystemReport {
  /** Sorted particle-index sets, each containing the vacuum; ordered by size, then lexicographically. */
  std::vector<std::vector<std::size_t>> closed_sets;
  SubsystemMethod method = SubsystemMethod::kExhaustive;
};

/** True iff the set holds the vacuum and is closed under fusion and antiparticles. */
bool is_closed(const FusionTable& table, const std::vector<std::size_t>& set);

/** Smallest closed set containing the vacuum and `seed`. */
std::vector<std::size_t> fusion_closure(const FusionTable& table, const std::vector<std::size_t>& seed);

/**
 * Every closed subsystem when the table has at most `exhaustive_limit`
 * particles; otherwise the closures of all generating sets of size <= 2, plus
 * the full set.
 */
SubsystemReport closed_subsystems(const FusionTable& table, std::size_t exhaustive_limit = 16);

/** The fusion table restricted to a (closed) subset, relabelled in subset order. */
FusionTable restrict_table(const FusionTable& table, const std::vector<std::size_t>& subset);

/**
 * Multiplicity of the vacuum in P^{x n} for n = 0..max_power (entry n).
 */
std::vector<long long> vacuum_multiplicities(const FusionTable& table, std::size_t particle,
                                             std::size_t max_power);

// ---------------------------------------------------------------------------
// Majorana census

struct MajoranaReport {
  std::vector<std::size_t> self_dual;
  std::vector<std::pair<std::size_t, std::size_t>> dual_pairs;
  bool all_majorana() const { return dual_pairs.empty(); }
};

MajoranaReport majorana_census(const FusionTable& table);

// ---------------------------------------------------------------------------
// Fusion-table symmetries

enum class SymmetryProfile { kDimensionAndSpin, kDimensionOnly };

/**
 * All label permutations pi fixing the vacuum with
 * N^{pi C}_{pi A, pi B} = N^C_{AB}, restricted to permutations that preserve
 * the chosen profile. pi is returned as image vectors. Throws DomainError for
 * more than `max_particles` particles or when the backtracking search visits
 * more than `node_cap` nodes.
 */
std::vector<std::vector<std::size_t>> fusion_symmetries(const FusionTable& table,
                                                        SymmetryProfile profile,
                                                        std::size_t max_particles = 24,
                                                        std::size_t node_cap = 20'000'000);

// ---------------------------------------------------------------------------
// Matching against externally labelled particle tables

/**
 * A particle as printed in a reference table. The flux is cycle notation for
 * any member of the flux class; `trivial_charge` disambiguates charges of equal
 * degree and spin when known.
 */
struct ReferenceParticle {
  std::string label;
  std::string flux;
  std::size_t charge_degree = 1;
  Rational spin{0};
  std::optional<bool> trivial_charge;
};

/**
 * Maps reference labels to particle indices by (flux cycle type, class size
 * implied by it, charge degree, spin, trivial-charge flag). Remaining ties
 * are broken in canonical particle order. Throws ParseError when a reference
 * particle has no unused match.
 */
std::map<std::string, std::size_t> match_reference_labels(
    const QuantumDouble& dbl, const std::vector<ReferenceParticle>& reference);

// ---------------------------------------------------------------------------
// Braiding-based identities

/** |tr R^2 - sum_C N^C_{AB} d_C exp(2 pi i (s_C - s_A - s_B))| for one pair. */
double spin_statistics_residual(const InternalSpace& a, const InternalSpace& b,
                                const FusionTable& table);

// ---------------------------------------------------------------------------
// Consistency report

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

struct ConsistencyReport {
  std::size_t group_order = 0;
  std::size_t particle_count = 0;
  long long dimension_square_sum = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_text() const;
};

struct ConsistencyOptions {
  bool associativity = true;
  /** Braiding oracle checks run only for groups up to this order. */
  std::size_t braiding_order_limit = 24;
  bool braiding = true;
};

/** Runs every invariant and records pass/fail with residuals; never throws for failed checks. */
ConsistencyReport consistency_report(const QuantumDouble& dbl, const ConsistencyOptions& options = {});
ConsistencyReport consistency_report(const FiniteGroup& group, const ConsistencyOptions& options = {});

}  // namespace anyonkit
