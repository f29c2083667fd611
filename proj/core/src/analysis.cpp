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

#include "anyonkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "anyonkit/braiding.hpp"
#include "anyonkit/errors.hpp"

namespace anyonkit {

// ---------------------------------------------------------------------------
// Closed subsystems

bool is_closed(const FusionTable& table, const std::vector<std::size_t>& set) {
  std::vector<bool> in(table.size(), false);
  for (std::size_t p : set) in.at(p) = true;
  if (!in[0]) return false;
  for (std::size_t a : set) {
    if (!in[table.dual(a)]) return false;
    for (std::size_t b : set) {
      for (std::size_t c = 0; c < table.size(); ++c) {
        if (table(a, b, c) > 0 && !in[c]) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> fusion_closure(const FusionTable& table,
                                        const std::vector<std::size_t>& seed) {
  std::vector<bool> in(table.size(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  auto add = [&](std::size_t p) {
    if (!in[p]) {
      in[p] = true;
      members.push_back(p);
    }
  };
  for (std::size_t p : seed) add(p);
  // Members only grow, so sweeping pairs until nothing changes reaches the fixpoint.
  for (bool grew = true; grew;) {
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(table.dual(members[i]));
      for (std::size_t j = 0; j <= i; ++j) {
        for (const auto& [c, m] : table.channels(members[i], members[j])) add(c);
      }
    }
    grew = members.size() != before;
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubsystemReport closed_subsystems(const FusionTable& table, std::size_t exhaustive_limit) {
  const std::size_t n = table.size();
  SubsystemReport report;
  std::set<std::vector<std::size_t>> found;

  if (n <= exhaustive_limit && n <= 32) {
    report.method = SubsystemMethod::kExhaustive;
    std::vector<std::uint32_t> products(n * n, 0);
    std::vector<std::uint32_t> duals(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      duals[a] = 1u << table.dual(a);
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& [c, m] : table.channels(a, b)) products[a * n + b] |= 1u << c;
      }
    }
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t rest = 0; rest < subsets; ++rest) {
      const auto mask = static_cast<std::uint32_t>((rest << 1) | 1u);
      bool closed = true;
      for (std::size_t a = 0; a < n && closed; ++a) {
        if (!(mask >> a & 1u)) continue;
        if ((duals[a] & ~mask) != 0) closed = false;
        for (std::size_t b = a; b < n && closed; ++b) {
          if ((mask >> b & 1u) && (products[a * n + b] & ~mask) != 0) closed = false;
        }
      }
      if (!closed) continue;
      std::vector<std::size_t> set;
      for (std::size_t a = 0; a < n; ++a) {
        if (mask >> a & 1u) set.push_back(a);
      }
      found.insert(std::move(set));
    }
  } else {
    report.method = SubsystemMethod::kGeneratedClosure;
    found.insert(fusion_closure(table, {}));
    for (std::size_t a = 1; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) found.insert(fusion_closure(table, {a, b}));
    }
    std::vector<std::size_t> everything(n);
    std::iota(everything.begin(), everything.end(), std::size_t{0});
    found.insert(std::move(everything));
  }

  report.closed_sets.assign(found.begin(), found.end());
  std::stable_sort(report.closed_sets.begin(), report.closed_sets.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return report;
}

FusionTable restrict_table(const FusionTable& table, const std::vector<std::size_t>& subset) {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<Rational> spins;
  for (std::size_t p : subset) {
    labels.push_back(table.labels()[p]);
    dims.push_back(table.dimensions()[p]);
    spins.push_back(table.spins()[p]);
  }
  FusionTable sub(std::move(labels), std::move(dims), std::move(spins));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      for (std::size_t c = 0; c < subset.size(); ++c) {
        sub(a, b, c) = table(subset[a], subset[b], subset[c]);
      }
    }
  }
  return sub;
}

std::vector<long long> vacuum_multiplicities(const FusionTable& table, std::size_t particle,
                                             std::size_t max_power) {
  const std::size_t n = table.size();
  std::vector<long long> power(n, 0);  // multiplicities in P^{x k}
  power[0] = 1;
  std::vector<long long> out{1};
  for (std::size_t k = 1; k <= max_power; ++k) {
    std::vector<long long> next(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (power[x] == 0) continue;
      for (const auto& [c, m] : table.channels(x, particle)) next[c] += power[x] * m;
    }
    power = std::move(next);
    out.push_back(power[0]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Majorana census

MajoranaReport majorana_census(const FusionTable& table) {
  MajoranaReport report;
  for (std::size_t a = 0; a < table.size(); ++a) {
    const std::size_t b = table.dual(a);
    if (b == a) {
      report.self_dual.push_back(a);
    } else if (a < b) {
      report.dual_pairs.emplace_back(a, b);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Fusion-table symmetries

namespace {

class SymmetrySearch {
 public:
  SymmetrySearch(const FusionTable& table, SymmetryProfile profile, std::size_t node_cap)
      : table_(table),
        n_(table.size()),
        node_cap_(node_cap),
        candidates_(n_),
        image_(n_),
        used_(n_, false) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        const bool same = table.dimensions()[a] == table.dimensions()[b] &&
                          (profile == SymmetryProfile::kDimensionOnly ||
                           table.spins()[a] == table.spins()[b]);
        if (same) candidates_[a].push_back(b);
      }
    }
  }

  std::vector<std::vector<std::size_t>> run() {
    image_[0] = 0;
    used_[0] = true;
    extend(1);
    return std::move(found_);
  }

 private:
  // Checks every triple whose largest index is k once image_[0..k] is fixed.
  bool consistent(std::size_t k) const {
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = 0; b <= k; ++b) {
        for (std::size_t c = 0; c <= k; ++c) {
          if (a != k && b != k && c != k) continue;
          if (table_(image_[a], image_[b], image_[c]) != table_(a, b, c)) return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t k) {
    if (++nodes_ > node_cap_) throw DomainError("fusion symmetry search exceeded its node cap");
    if (k == n_) {
      found_.push_back(image_);
      return;
    }
    for (std::size_t target : candidates_[k]) {
      if (used_[target] || target == 0) continue;
      image_[k] = target;
      used_[target] = true;
      if (consistent(k)) extend(k + 1);
      used_[target] = false;
    }
  }

  const FusionTable& table_;
  std::size_t n_;
  std::size_t node_cap_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<std::vector<std::size_t>> fusion_symmetries(const FusionTable& table,
                                                        SymmetryProfile profile,
                                                        std::size_t max_particles,
                                                        std::size_t node_cap) {
  if (table.size() > max_particles) {
    throw DomainError("fusion symmetry search limited to " + std::to_string(max_particles) +
                      " particles");
  }
  if (table.size() == 0) return {};
  return SymmetrySearch(table, profile, node_cap).run();
}

// ---------------------------------------------------------------------------
// Reference matching

std::map<std::string, std::size_t> match_reference_labels(
    const QuantumDouble& dbl, const std::vector<ReferenceParticle>& reference) {
  const FiniteGroup& group = dbl.group();
  std::vector<bool> taken(dbl.num_particles(), false);
  std::map<std::string, std::size_t> mapping;

  for (const auto& ref : reference) {
    const Permutation flux = parse_permutation(ref.flux, group.degree());
    const auto cycle_type = flux.cycle_type();
    std::size_t chosen = dbl.num_particles();
    for (const auto& p : dbl.particles()) {
      if (taken[p.index]) continue;
      const Permutation& rep = group.element(dbl.sector(p.class_index).cls.representative());
      if (rep.cycle_type() != cycle_type) continue;
      if (p.charge_degree != ref.charge_degree || p.spin != ref.spin) continue;
      if (ref.trivial_charge && (p.irrep_index == 0) != *ref.trivial_charge) continue;
      chosen = p.index;
      break;
    }
    if (chosen == dbl.num_particles()) {
      throw ParseError("no particle matches reference entry " + ref.label);
    }
    taken[chosen] = true;
    mapping[ref.label] = chosen;
  }
  return mapping;
}

// ---------------------------------------------------------------------------
// Braiding identities

double spin_statistics_residual(const InternalSpace& a, const InternalSpace& b,
                                const FusionTable& table) {
  const std::size_t ia = a.particle().index;
  const std::size_t ib = b.particle().index;
  const std::complex<double> lhs = monodromy(a, b).trace();
  std::complex<double> rhs = 0.0;
  for (const auto& [c, m] : table.channels(ia, ib)) {
    const Rational phase = table.spins()[c] - table.spins()[ia] - table.spins()[ib];
    rhs += static_cast<double>(m) * static_cast<double>(table.dimensions()[c]) *
           std::polar(1.0, 2.0 * std::numbers::pi * to_double(phase));
  }
  return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Consistency report

bool ConsistencyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ConsistencyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ConsistencyReport::to_text() const {
  std::ostringstream out;
  out << "group order " << group_order << ", " << particle_count << " particles, sum d^2 = "
      << dimension_square_sum << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ');
    out << "residual " << c.residual;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << (passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return out.str();
}

namespace {

void add_check(ConsistencyReport& report, std::string name, bool ok, double residual = 0.0,
               std::string detail = {}) {
  report.checks.push_back({std::move(name), ok, residual, std::move(detail)});
}

}  // namespace

ConsistencyReport consistency_report(const QuantumDouble& dbl, const ConsistencyOptions& options) {
  ConsistencyReport report;
  const std::size_t order = dbl.group().order();
  const std::size_t n = dbl.num_particles();
  report.group_order = order;
  report.particle_count = n;
  report.dimension_square_sum = dbl.quantum_dimension_square_sum();

  add_check(report, "dimension_sum",
            report.dimension_square_sum == static_cast<long long>(order * order), 0.0,
            std::to_string(report.dimension_square_sum) + " vs |H|^2 = " +
                std::to_string(order * order));

  double char_residual = 0.0;
  bool chars_ok = true;
  for (const auto& sector : dbl.sectors()) {
    const CharacterValidation v = validate(sector.charges);
    char_residual = std::max(char_residual, v.max_residual());
    chars_ok = chars_ok && v.passed;
  }
  add_check(report, "character_orthogonality", chars_ok, char_residual);

  bool spins_ok = true;
  for (const auto& p : dbl.particles()) {
    if ((p.class_index == 0 || p.irrep_index == 0) && p.spin != Rational(0)) spins_ok = false;
  }
  add_check(report, "pure_charge_and_flux_spin_zero", spins_ok);

  ModularData md;
  try {
    md = modular_data(dbl);
  } catch (const NumericalError& e) {
    add_check(report, "modular_data", false, 0.0, e.what());
    return report;
  }
  const ModularResiduals res = modular_residuals(dbl, md);
  add_check(report, "s_symmetric", res.symmetry < 1e-9, res.symmetry);
  add_check(report, "s_unitary", res.unitarity < 1e-9, res.unitarity);
  add_check(report, "s_squared_permutation", res.conjugation < 1e-9, res.conjugation);
  add_check(report, "conjugation_involution", res.conjugation_involution);
  add_check(report, "st_cubed_equals_s_squared", res.st_cubed < 1e-8, res.st_cubed);
  add_check(report, "vacuum_row", res.vacuum_row < 1e-9, res.vacuum_row);

  FusionTable table;
  try {
    table = fusion_table(dbl, md);
  } catch (const NumericalError& e) {
    add_check(report, "verlinde_fusion", false, 0.0, e.what());
    return report;
  }
  add_check(report, "verlinde_fusion", true, 0.0,
            "integral, commutative, vacuum identity, unique antiparticle, dimension consistent");

  if (options.associativity) {
    add_check(report, "fusion_associative", check_associativity(table));
  }

  bool normalized = true;
  for (std::size_t a = 0; a < n && normalized; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Rational total{0};
      for (std::size_t c = 0; c < n; ++c) total += fusion_probability(table, a, b, c);
      if (total != Rational(1)) {
        normalized = false;
        break;
      }
    }
  }
  add_check(report, "probabilities_normalized", normalized);

  bool anti_ok = true;
  std::string anti_detail;
  for (std::size_t p = 0; p < n; ++p) {
    try {
      (void)antiparticle(md, table, p);
    } catch (const NumericalError& e) {
      anti_ok = false;
      anti_detail = e.what();
    }
  }
  add_check(report, "antiparticle_agreement", anti_ok, 0.0, anti_detail);

  if (options.braiding && order <= options.braiding_order_limit) {
    std::vector<InternalSpace> spaces;
    spaces.reserve(n);
    for (std::size_t p = 0; p < n; ++p) spaces.emplace_back(dbl, p);
    double oracle = 0.0;
    double statistics = 0.0;
    double yang_baxter = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const auto s = md.s(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
        oracle = std::max(oracle, std::abs(s_oracle(spaces[p], spaces[q]) - s));
        statistics = std::max(statistics, spin_statistics_residual(spaces[p], spaces[q], table));
      }
      if (spaces[p].dimension() <= 3) {
        yang_baxter = std::max(yang_baxter, yang_baxter_residual(spaces[p]));
      }
    }
    add_check(report, "s_matches_braiding_trace", oracle < 1e-8, oracle);
    add_check(report, "spin_statistics_trace", statistics < 1e-8, statistics);
    add_check(report, "yang_baxter", yang_baxter < 1e-9, yang_baxter, "particles of dimension <= 3");
  }
  return report;
}

ConsistencyReport consistency_report(const FiniteGroup& group, const ConsistencyOptions& options) {
  return consistency_report(QuantumDouble(group), options);
}

}  // namespace anyonkit
