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
#include <vector>

namespace anyonkit {

/** Closed-form anyons of the cyclic double D(Z/N): flux a and charge n, both mod N. */
struct ZNParticle {
  std::size_t modulus = 1;
  std::size_t flux = 0;
  std::size_t charge = 0;

  ZNParticle() = default;
  /** Throws DomainError unless modulus >= 1 and flux, charge < modulus. */
  ZNParticle(std::size_t modulus, std::size_t flux, std::size_t charge);

  bool is_vacuum() const { return flux == 0 && charge == 0; }
  ZNParticle antiparticle() const;
  friend bool operator==(const ZNParticle&, const ZNParticle&) = default;
};

/** |a,n> x |a',n'> = |a+a', n+n'>. */
ZNParticle zn_fuse(const ZNParticle& p, const ZNParticle& q);

/** Exchange phase of two identical particles, exp(2 pi i n a / N). */
std::complex<double> zn_braid_phase(const ZNParticle& p);

/** Full-winding phase exp(2 pi i (n a' + n' a) / N). */
std::complex<double> zn_monodromy_phase(const ZNParticle& p, const ZNParticle& q);

struct MajoranaCensus {
  std::vector<ZNParticle> self_dual;
  /** Self-dual particles other than the vacuum and (N/2, N/2); nonempty for even N. */
  std::vector<ZNParticle> beyond_dyon_claim;
  std::string note;
};

/** Every particle equal to its own antiparticle (2a = 2n = 0 mod N). */
MajoranaCensus zn_majorana(std::size_t modulus);

/**
 * Aharonov-Bohm type differential cross sections, implemented exactly as
 * the closed forms
 *   distinguishable: sin^2(pi (n a' + n' a) / N) / (2 pi p sin^2(theta/2))
 *   identical:       sin^2(2 pi n a / N) / (2 pi p sin^2(theta/2))
 *                  + sin^2(2 pi n a / N) / (2 pi p cos^2(theta/2))
 * Note the two sine arguments differ by a factor of two for p = q; both are
 * kept as written. Throws DomainError for momentum <= 0, theta outside
 * (0, 2 pi), or theta = pi in the identical case.
 */
double cross_section_distinguishable(const ZNParticle& p, const ZNParticle& q, double momentum,
                                     double theta);
double cross_section_identical(const ZNParticle& p, double momentum, double theta);

struct ZNEquivalenceReport {
  std::size_t modulus = 0;
  std::size_t particle_count = 0;
  bool fusion_matches = false;
  bool monodromy_matches = false;
  bool spins_match = false;
  bool conjugation_matches = false;
  double max_phase_residual = 0.0;
  std::vector<std::string> mismatches;

  bool passed() const {
    return fusion_matches && monodromy_matches && spins_match && conjugation_matches;
  }
};

/**
 * Builds Z/N as a permutation group, runs the general pipeline (particles,
 * spins, S, Verlinde fusion, explicit braiding) and compares everything with
 * the closed forms above. Throws DomainError if N exceeds `cap`, and
 * NumericalError on any mismatch when `throw_on_mismatch` is set.
 */
ZNEquivalenceReport zn_equivalence_oracle(std::size_t modulus, std::size_t cap = 8,
                                          bool throw_on_mismatch = true);

}  // namespace anyonkit
