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

#include "anyonkit/abelian.hpp"

#include <cmath>
#include <numbers>

#include "anyonkit/braiding.hpp"
#include "anyonkit/errors.hpp"
#include "anyonkit/group.hpp"
#include "anyonkit/quantum_double.hpp"

namespace anyonkit {

namespace {

constexpr double kPhaseTolerance = 1e-9;

void require_same_modulus(const ZNParticle& p, const ZNParticle& q) {
  if (p.modulus != q.modulus) {
    throw DomainError("Z/N particles with moduli " + std::to_string(p.modulus) + " and " +
                      std::to_string(q.modulus));
  }
}

std::complex<double> root_of_unity(std::size_t numerator, std::size_t modulus) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator % modulus) /
                       static_cast<double>(modulus);
  return std::polar(1.0, angle);
}

std::string describe(const ZNParticle& p) {
  return "(" + std::to_string(p.flux) + "," + std::to_string(p.charge) + ")";
}

}  // namespace

ZNParticle::ZNParticle(std::size_t modulus, std::size_t flux, std::size_t charge)
    : modulus(modulus), flux(flux), charge(charge) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  if (flux >= modulus || charge >= modulus) {
    throw DomainError("flux and charge must lie in [0, " + std::to_string(modulus) + ")");
  }
}

ZNParticle ZNParticle::antiparticle() const {
  return {modulus, (modulus - flux) % modulus, (modulus - charge) % modulus};
}

ZNParticle zn_fuse(const ZNParticle& p, const ZNParticle& q) {
  require_same_modulus(p, q);
  return {p.modulus, (p.flux + q.flux) % p.modulus, (p.charge + q.charge) % p.modulus};
}

std::complex<double> zn_braid_phase(const ZNParticle& p) {
  return root_of_unity(p.charge * p.flux, p.modulus);
}

std::complex<double> zn_monodromy_phase(const ZNParticle& p, const ZNParticle& q) {
  require_same_modulus(p, q);
  return root_of_unity(p.charge * q.flux + q.charge * p.flux, p.modulus);
}

MajoranaCensus zn_majorana(std::size_t modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  MajoranaCensus census;
  for (std::size_t a = 0; a < modulus; ++a) {
    for (std::size_t n = 0; n < modulus; ++n) {
      ZNParticle p(modulus, a, n);
      if (p.antiparticle() == p) {
        census.self_dual.push_back(p);
        const bool dyon = modulus % 2 == 0 && a == modulus / 2 && n == modulus / 2;
        if (!p.is_vacuum() && !dyon) census.beyond_dyon_claim.push_back(p);
      }
    }
  }
  if (!census.beyond_dyon_claim.empty()) {
    census.note =
        "pure flux (N/2,0) and pure charge (0,N/2) are self-dual as well as the dyon (N/2,N/2)";
  }
  return census;
}

double cross_section_distinguishable(const ZNParticle& p, const ZNParticle& q, double momentum,
                                     double theta) {
  require_same_modulus(p, q);
  if (!(momentum > 0.0)) throw DomainError("momentum must be positive");
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    throw DomainError("scattering angle must lie in (0, 2 pi)");
  }
  const auto winding = static_cast<double>((p.charge * q.flux + q.charge * p.flux) % p.modulus);
  const double s = std::sin(std::numbers::pi * winding / static_cast<double>(p.modulus));
  const double half = std::sin(theta / 2.0);
  return s * s / (2.0 * std::numbers::pi * momentum * half * half);
}

double cross_section_identical(const ZNParticle& p, double momentum, double theta) {
  if (!(momentum > 0.0)) throw DomainError("momentum must be positive");
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    throw DomainError("scattering angle must lie in (0, 2 pi)");
  }
  if (std::abs(theta - std::numbers::pi) < 1e-12) {
    throw DomainError("identical-particle cross section is singular at theta = pi");
  }
  const auto winding = static_cast<double>((p.charge * p.flux) % p.modulus);
  const double s = std::sin(2.0 * std::numbers::pi * winding / static_cast<double>(p.modulus));
  const double sin_half = std::sin(theta / 2.0);
  const double cos_half = std::cos(theta / 2.0);
  const double scale = 2.0 * std::numbers::pi * momentum;
  return s * s / (scale * sin_half * sin_half) + s * s / (scale * cos_half * cos_half);
}

ZNEquivalenceReport zn_equivalence_oracle(std::size_t modulus, std::size_t cap,
                                          bool throw_on_mismatch) {
  if (modulus == 0 || modulus > cap) {
    throw DomainError("Z/N oracle needs 1 <= N <= " + std::to_string(cap));
  }
  ZNEquivalenceReport report;
  report.modulus = modulus;

  const QuantumDouble dbl(named_group('Z', modulus));
  const ModularData md = modular_data(dbl);
  const FusionTable table = fusion_table(dbl, md);
  report.particle_count = dbl.num_particles();

  // Identify each general particle with (a, n): flux = g^a for the generator
  // g = (1..N), charge chi with chi(g) = exp(2 pi i n / N).
  const FiniteGroup& group = dbl.group();
  std::vector<Permutation::Point> images(modulus);
  for (std::size_t i = 0; i < modulus; ++i) images[i] = static_cast<Permutation::Point>((i + 1) % modulus);
  const Permutation generator(std::move(images));
  std::vector<std::size_t> log_of(group.order());
  for (std::size_t a = 0; a < modulus; ++a) log_of[group.index_of(generator.pow(static_cast<long long>(a)))] = a;
  const std::size_t gen_idx = group.index_of(generator);

  std::vector<ZNParticle> closed_form;
  for (const auto& p : dbl.particles()) {
    const std::size_t a = log_of[dbl.sector(p.class_index).cls.representative()];
    const std::complex<double> chi = dbl.charge_character(p.class_index, p.irrep_index, gen_idx);
    double turns = std::arg(chi) / (2.0 * std::numbers::pi) * static_cast<double>(modulus);
    auto n = static_cast<long long>(std::llround(turns));
    n = ((n % static_cast<long long>(modulus)) + static_cast<long long>(modulus)) %
        static_cast<long long>(modulus);
    closed_form.emplace_back(modulus, a, static_cast<std::size_t>(n));
  }

  report.fusion_matches = report.particle_count == modulus * modulus;
  report.spins_match = true;
  report.conjugation_matches = true;
  report.monodromy_matches = true;
  if (!report.fusion_matches) report.mismatches.push_back("particle count is not N^2");

  std::vector<InternalSpace> spaces;
  spaces.reserve(dbl.num_particles());
  for (std::size_t p = 0; p < dbl.num_particles(); ++p) spaces.emplace_back(dbl, p);

  for (std::size_t p = 0; p < dbl.num_particles(); ++p) {
    const ZNParticle& zp = closed_form[p];
    const Rational expected_spin(static_cast<std::int64_t>((zp.flux * zp.charge) % modulus),
                                 static_cast<std::int64_t>(modulus));
    if (dbl.particle(p).spin != expected_spin) {
      report.spins_match = false;
      report.mismatches.push_back("spin of " + describe(zp));
    }
    const std::size_t anti = md.conjugation[p];
    if (!(closed_form[anti] == zp.antiparticle())) {
      report.conjugation_matches = false;
      report.mismatches.push_back("antiparticle of " + describe(zp));
    }
    for (std::size_t q = 0; q < dbl.num_particles(); ++q) {
      const ZNParticle fused = zn_fuse(zp, closed_form[q]);
      for (std::size_t c = 0; c < dbl.num_particles(); ++c) {
        const int expected = closed_form[c] == fused ? 1 : 0;
        if (table(p, q, c) != expected) {
          if (report.fusion_matches) {
            report.mismatches.push_back("fusion " + describe(zp) + " x " + describe(closed_form[q]));
          }
          report.fusion_matches = false;
        }
      }
      const Eigen::MatrixXcd m = monodromy(spaces[p], spaces[q]);
      double residual = std::abs(m(0, 0) - zn_monodromy_phase(zp, closed_form[q]));
      if (p == q) {
        const Eigen::MatrixXcd r = braid_matrix(spaces[p], spaces[p]);
        residual = std::max(residual, std::abs(r(0, 0) - zn_braid_phase(zp)));
      }
      report.max_phase_residual = std::max(report.max_phase_residual, residual);
      if (residual > kPhaseTolerance) {
        report.monodromy_matches = false;
        report.mismatches.push_back("monodromy " + describe(zp) + " , " + describe(closed_form[q]));
      }
    }
  }

  if (throw_on_mismatch && !report.passed()) {
    throw NumericalError("Z/" + std::to_string(modulus) +
                         " closed forms disagree with the general pipeline: " +
                         report.mismatches.front());
  }
  return report;
}

}  // namespace anyonkit
