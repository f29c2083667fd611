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


#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "anyonkit/abelian.hpp"
#include "anyonkit/analysis.hpp"
#include "anyonkit/errors.hpp"
#include "anyonkit/group.hpp"
#include "anyonkit/quantum_double.hpp"
#include "anyonkit_cli/app.hpp"
#include "usage_error.hpp"

namespace anyonkit::cli {

namespace {

using C = ColumnType;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

FiniteGroup make_group(const GroupSpec& spec) {
  const bool named = !spec.name.empty();
  const bool gens = !spec.generators.empty();
  if (named == gens) throw UsageError("give exactly one of --group or --gens");
  try {
    if (named) return named_group(spec.name, spec.order_cap);
    if (spec.degree == 0) throw UsageError("--gens needs --degree");
    auto generators = parse_generators(spec.generators, spec.degree);
    return generate_group(generators, spec.order_cap);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

CharacterTableOptions table_options(const Options& o) {
  CharacterTableOptions opt;
  if (o.seed) opt.seed = *o.seed;
  return opt;
}

std::string flux_label(const QuantumDouble& dbl, std::size_t class_index) {
  return dbl.group().element(dbl.classes()[class_index].representative()).to_compact_string();
}

std::string fusion_cell(const FusionTable& t, std::size_t a, std::size_t b) {
  std::vector<std::string> terms;
  for (auto [c, n] : t.channels(a, b))
    terms.push_back(n >= 2 ? std::to_string(n) + "." + t.labels()[c] : t.labels()[c]);
  return join(terms, " + ");
}

std::string dimension_note(const QuantumDouble& dbl) {
  auto order = static_cast<long long>(dbl.group().order());
  return "sum d^2 = " + std::to_string(dbl.quantum_dimension_square_sum()) + " = |G|^2 = " +
         std::to_string(order * order);
}

void add_checks(OutputDocument& doc, const ConsistencyReport& report) {
  auto& s = doc.add_section("checks", "Consistency checks",
                            {{"check", C::kString}, {"status", C::kString}, {"residual", C::kReal},
                             {"detail", C::kString}});
  for (const auto& c : report.checks)
    s.rows.push_back({c.name, std::string(c.passed ? "pass" : "fail"), c.residual, c.detail});
  s.notes.push_back("group order " + std::to_string(report.group_order) + ", " +
                    std::to_string(report.particle_count) + " particles");
  s.notes.push_back("sum d^2 = " + std::to_string(report.dimension_square_sum));
  s.notes.push_back(report.passed() ? "all checks passed" : "SOME CHECKS FAILED");
}

void particles_section(OutputDocument& doc, const QuantumDouble& dbl) {
  auto& s = doc.add_section("particles", "Particles",
                            {{"particle", C::kString}, {"flux", C::kString}, {"class size", C::kInteger},
                             {"charge", C::kString}, {"charge dim", C::kInteger}, {"spin", C::kRational},
                             {"dim", C::kInteger}});
  for (const auto& p : dbl.particles())
    s.rows.push_back({p.label, flux_label(dbl, p.class_index), static_cast<long long>(p.class_size),
                      "chi" + std::to_string(p.irrep_index + 1), static_cast<long long>(p.charge_degree),
                      p.spin, static_cast<long long>(p.quantum_dimension)});
  s.notes.push_back(std::to_string(dbl.num_particles()) + " particles");
  s.notes.push_back(dimension_note(dbl));
}

void chartable_sections(OutputDocument& doc, const FiniteGroup& g, const Options& o) {
  auto classes = conjugacy_classes(g);
  auto t = character_table(g, classes, table_options(o));
  auto& cs = doc.add_section("classes", "Conjugacy classes",
                             {{"class", C::kInteger}, {"representative", C::kString}, {"size", C::kInteger},
                              {"order", C::kInteger}});
  std::vector<Column> cols{{"irrep", C::kString}, {"degree", C::kInteger}};
  for (const auto& cls : classes) {
    const auto& rep = g.element(cls.representative());
    cs.rows.push_back({static_cast<long long>(cls.index), rep.to_compact_string(),
                       static_cast<long long>(cls.size()), static_cast<long long>(rep.order())});
    cols.push_back({rep.to_compact_string(), C::kComplex});
  }
  auto& s = doc.add_section("chartable", "Character table", cols);
  for (std::size_t r = 0; r < t.num_irreps(); ++r) {
    std::vector<Cell> row{"chi" + std::to_string(r + 1), static_cast<long long>(t.degrees[r])};
    for (std::size_t c = 0; c < t.num_classes(); ++c) row.emplace_back(t(r, c));
    s.rows.push_back(std::move(row));
  }
}

void smatrix_sections(OutputDocument& doc, const QuantumDouble& dbl, const ModularData& md) {
  std::vector<Column> cols{{"", C::kString}};
  for (const auto& p : dbl.particles()) cols.push_back({p.label, C::kComplex});
  auto& s = doc.add_section("smatrix", "S matrix", cols);
  for (std::size_t a = 0; a < dbl.num_particles(); ++a) {
    std::vector<Cell> row{dbl.particle(a).label};
    for (std::size_t b = 0; b < dbl.num_particles(); ++b)
      row.emplace_back(md.s(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
    s.rows.push_back(std::move(row));
  }
  auto& t = doc.add_section("tmatrix", "T matrix (diagonal) and charge conjugation",
                            {{"particle", C::kString}, {"spin", C::kRational}, {"T", C::kComplex},
                             {"antiparticle", C::kString}});
  for (std::size_t a = 0; a < dbl.num_particles(); ++a)
    t.rows.push_back({dbl.particle(a).label, dbl.particle(a).spin, md.t(static_cast<Eigen::Index>(a)),
                      dbl.particle(md.conjugation[a]).label});
}

void fusion_section(OutputDocument& doc, const FusionTable& t) {
  std::vector<Column> cols{{"x", C::kString}};
  for (const auto& l : t.labels()) cols.push_back({l, C::kString});
  auto& s = doc.add_section("fusion", "Fusion rules", cols);
  for (std::size_t a = 0; a < t.size(); ++a) {
    std::vector<Cell> row{t.labels()[a]};
    for (std::size_t b = 0; b < t.size(); ++b) row.emplace_back(fusion_cell(t, a, b));
    s.rows.push_back(std::move(row));
  }
}

std::size_t label_index(const QuantumDouble& dbl, const std::string& label) {
  try {
    return dbl.particle_by_label(label);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

void prob_section(OutputDocument& doc, const QuantumDouble& dbl, const FusionTable& t, const Options& o) {
  auto& s = doc.add_section("probabilities", "Fusion probabilities P(AB -> C) = N d_C / (d_A d_B)",
                            {{"A", C::kString}, {"B", C::kString}, {"C", C::kString}, {"N", C::kInteger},
                             {"P", C::kRational}});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!o.pair.empty()) {
    if (o.pair.size() != 2) throw UsageError("--pair takes two particle labels");
    pairs.emplace_back(label_index(dbl, o.pair[0]), label_index(dbl, o.pair[1]));
  } else {
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a; b < t.size(); ++b) pairs.emplace_back(a, b);
  }
  bool normalized = true;
  for (auto [a, b] : pairs) {
    Rational total(0);
    for (auto [c, n] : t.channels(a, b)) {
      Rational p = fusion_probability(t, a, b, c);
      total += p;
      s.rows.push_back({t.labels()[a], t.labels()[b], t.labels()[c], static_cast<long long>(n), p});
    }
    normalized = normalized && total == Rational(1);
  }
  s.notes.push_back(normalized ? "every pair sums to 1" : "NORMALIZATION FAILED");
  if (!normalized) throw NumericalError("fusion probabilities do not sum to one");
}

void subsystems_section(OutputDocument& doc, const FusionTable& t) {
  auto report = closed_subsystems(t);
  auto& s = doc.add_section("subsystems", "Subsystems closed under fusion",
                            {{"size", C::kInteger}, {"particles", C::kString}});
  for (const auto& set : report.closed_sets) {
    std::vector<std::string> names;
    for (auto i : set) names.push_back(t.labels()[i]);
    s.rows.push_back({static_cast<long long>(set.size()), "{" + join(names, ",") + "}"});
  }
  s.notes.push_back(std::to_string(report.closed_sets.size()) + " closed sets (" +
                    (report.method == SubsystemMethod::kExhaustive ? "exhaustive search"
                                                                   : "closures of sets of size <= 2") +
                    ")");
}

std::string label_cycles(const std::vector<std::size_t>& pi, const std::vector<std::string>& labels) {
  std::vector<bool> seen(pi.size(), false);
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (seen[i] || pi[i] == i) continue;
    std::vector<std::string> cycle;
    for (std::size_t j = i; !seen[j]; j = pi[j]) {
      seen[j] = true;
      cycle.push_back(labels[j]);
    }
    out += "(" + join(cycle, " ") + ")";
  }
  return out.empty() ? "()" : out;
}

void symmetries_section(OutputDocument& doc, const FusionTable& t, const Options& o) {
  SymmetryProfile profile;
  if (o.profile == "dimspin")
    profile = SymmetryProfile::kDimensionAndSpin;
  else if (o.profile == "dim")
    profile = SymmetryProfile::kDimensionOnly;
  else
    throw UsageError("--profile must be dim or dimspin");
  auto syms = fusion_symmetries(t, profile);
  auto& s = doc.add_section("symmetries", "Label permutations fixing the fusion table",
                            {{"#", C::kInteger}, {"permutation", C::kString}});
  for (std::size_t k = 0; k < syms.size(); ++k)
    s.rows.push_back({static_cast<long long>(k), label_cycles(syms[k], t.labels())});
  s.notes.push_back(std::to_string(syms.size()) + " symmetries, profile " +
                    (profile == SymmetryProfile::kDimensionOnly ? "dimension only" : "dimension and spin"));
}

ZNParticle parse_zn(const std::string& text, std::size_t n) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("particle must be 'flux,charge': " + text);
  try {
    std::size_t a = std::stoul(text.substr(0, comma));
    std::size_t q = std::stoul(text.substr(comma + 1));
    return ZNParticle(n, a, q);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const std::logic_error&) {
    throw UsageError("particle must be 'flux,charge': " + text);
  }
}

std::string zn_label(const ZNParticle& p) {
  return "(" + std::to_string(p.flux) + "," + std::to_string(p.charge) + ")";
}

void abelian_sections(OutputDocument& doc, const Options& o) {
  const std::size_t n = o.modulus;
  if (n == 0) throw UsageError("abelian needs --n N with N >= 1");
  auto& s = doc.add_section("particles", "Z/" + std::to_string(n) + " anyons |a,n>",
                            {{"particle", C::kString}, {"flux", C::kInteger}, {"charge", C::kInteger},
                             {"spin", C::kRational}, {"antiparticle", C::kString},
                             {"exchange phase", C::kComplex}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t q = 0; q < n; ++q) {
      ZNParticle p(n, a, q);
      s.rows.push_back({zn_label(p), static_cast<long long>(a), static_cast<long long>(q),
                        Rational(static_cast<std::int64_t>((a * q) % n), static_cast<std::int64_t>(n)),
                        zn_label(p.antiparticle()), zn_braid_phase(p)});
    }
  auto census = zn_majorana(n);
  auto& m = doc.add_section("majorana", "Self-dual particles", {{"particle", C::kString}});
  for (const auto& p : census.self_dual) m.rows.push_back({zn_label(p)});
  if (!census.note.empty()) m.notes.push_back(census.note);

  if (o.particles.empty()) return;
  auto semi = o.particles.find(';');
  if (semi == std::string::npos) throw UsageError("--particles must be 'a,n;a2,n2'");
  ZNParticle p = parse_zn(o.particles.substr(0, semi), n);
  ZNParticle q = parse_zn(o.particles.substr(semi + 1), n);
  if (!(o.momentum > 0)) throw UsageError("--momentum must be positive");
  if (o.theta_steps < 2) throw UsageError("--theta-steps must be at least 2");
  auto& x = doc.add_section("cross_sections",
                            "Cross sections for " + zn_label(p) + " on " + zn_label(q) +
                                ", momentum " + format_cell_text(o.momentum),
                            {{"theta", C::kReal}, {"distinguishable", C::kReal}, {"identical", C::kReal}});
  for (std::size_t k = 1; k < o.theta_steps; ++k) {
    double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(o.theta_steps);
    std::vector<Cell> row{theta, cross_section_distinguishable(p, q, o.momentum, theta)};
    if (2 * k == o.theta_steps)
      row.emplace_back(std::monostate{});
    else
      row.emplace_back(cross_section_identical(p, o.momentum, theta));
    x.rows.push_back(std::move(row));
  }
  x.notes.push_back("monodromy phase " + format_cell_text(zn_monodromy_phase(p, q)));
  x.notes.push_back("identical column uses the first particle with itself");
}

bool is_cyclic_name(const std::string& name) {
  return name.size() >= 2 && (name[0] == 'Z' || name[0] == 'z');
}

}  // namespace

std::string GroupSpec::describe() const {
  if (!name.empty()) return name;
  return "gens " + generators + " degree " + std::to_string(degree);
}

OutputDocument build_document(const Options& o) {
  OutputDocument doc;
  doc.command = o.command;

  if (o.command == "abelian") {
    doc.group_spec = "Z" + std::to_string(o.modulus);
    abelian_sections(doc, o);
    if (o.verify) {
      auto r = zn_equivalence_oracle(o.modulus, std::max<std::size_t>(o.modulus, 8), false);
      auto& s = doc.add_section("checks", "Consistency checks",
                                {{"check", C::kString}, {"status", C::kString}, {"residual", C::kReal},
                                 {"detail", C::kString}});
      s.rows.push_back({std::string("cyclic_closed_forms"), std::string(r.passed() ? "pass" : "fail"),
                        r.max_phase_residual, join(r.mismatches, "; ")});
    }
    return doc;
  }

  doc.group_spec = o.group.describe();
  FiniteGroup group = make_group(o.group);

  if (o.command == "chartable") {
    chartable_sections(doc, group, o);
    if (o.verify) add_checks(doc, consistency_report(QuantumDouble(group, table_options(o))));
    return doc;
  }

  QuantumDouble dbl(group, table_options(o));
  if (o.command == "particles") {
    particles_section(doc, dbl);
  } else if (o.command == "verify") {
    add_checks(doc, consistency_report(dbl));
    if (is_cyclic_name(o.group.name)) {
      auto r = zn_equivalence_oracle(group.order(), group.order(), false);
      auto& s = doc.sections.back();
      s.rows.push_back({std::string("cyclic_closed_forms"), std::string(r.passed() ? "pass" : "fail"),
                        r.max_phase_residual, join(r.mismatches, "; ")});
      if (!r.passed()) s.notes.back() = "SOME CHECKS FAILED";
    }
    return doc;
  } else {
    ModularData md = modular_data(dbl);
    if (o.command == "smatrix") {
      smatrix_sections(doc, dbl, md);
    } else {
      FusionTable table = fusion_table(dbl, md);
      if (o.command == "fusion")
        fusion_section(doc, table);
      else if (o.command == "prob")
        prob_section(doc, dbl, table, o);
      else if (o.command == "subsystems")
        subsystems_section(doc, table);
      else if (o.command == "symmetries")
        symmetries_section(doc, table, o);
      else
        throw UsageError("unknown command '" + o.command + "'");
    }
  }
  if (o.verify) add_checks(doc, consistency_report(dbl));
  return doc;
}

}  // namespace anyonkit::cli
