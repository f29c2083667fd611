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


#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "anyonkit/errors.hpp"
#include "anyonkit/quantum_double.hpp"
#include "catch_amalgamated.hpp"
#include "reference_tables.hpp"

using namespace anyonkit;

namespace {

struct Fixture {
  explicit Fixture(const char* spec)
      : dbl(named_group(spec)), md(modular_data(dbl)), table(fusion_table(dbl, md)) {}
  QuantumDouble dbl;
  ModularData md;
  FusionTable table;
};

std::size_t by_ref(const Fixture& f, const std::vector<ReferenceParticle>& ref, const std::string& label) {
  return match_reference_labels(f.dbl, ref).at(label);
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(1, 3)) == "1/3");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational("2/6") == Rational(1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(to_double(Rational(3, 4)) == 0.75);
}

TEST_CASE("particle labels") {
  CHECK(particle_label(0) == "A");
  CHECK(particle_label(25) == "Z");
  CHECK(particle_label(26) == "AA");
  CHECK(particle_label(27) == "AB");
  CHECK(particle_label(52) == "BA");
}

TEST_CASE("S3 particles") {
  Fixture f("S3");
  REQUIRE(f.dbl.num_particles() == 8);
  CHECK(f.dbl.quantum_dimension_square_sum() == 36);
  CHECK(f.dbl.particle(0).is_vacuum());
  std::vector<std::size_t> dims;
  for (const auto& p : f.dbl.particles()) dims.push_back(p.quantum_dimension);
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 3, 3, 2, 2, 2});
  CHECK(f.dbl.particle_by_label("E") == 4);
  CHECK_THROWS_AS(f.dbl.particle_by_label("Z"), ParseError);
  CHECK(enumerate_particles(named_group("S3")).size() == 8);
  CHECK_THROWS_AS(f.dbl.particle_index(1, 5), DomainError);
}

TEST_CASE("S3 vacuum row is d/|H|") {
  Fixture f("S3");
  const double expected[] = {1, 1, 2, 3, 3, 2, 2, 2};
  for (std::size_t q = 0; q < 8; ++q) {
    CHECK(std::abs(f.md.s(0, static_cast<Eigen::Index>(q)) - expected[q] / 6.0) < 1e-12);
    CHECK(std::abs(f.dbl.s_entry(0, q) - expected[q] / 6.0) < 1e-12);
  }
}

TEST_CASE("Z2 S matrix entries are plus or minus one half") {
  Fixture f("Z2");
  REQUIRE(f.dbl.num_particles() == 4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      CHECK(std::abs(std::abs(f.md.s(i, j).real()) - 0.5) < 1e-12);
      CHECK(std::abs(f.md.s(i, j).imag()) < 1e-12);
    }
  // particles: (e, +), (e, -), (g, +), (g, -); flux meets charge gives -1/2
  CHECK(std::abs(f.md.s(1, 2) + 0.5) < 1e-12);
  CHECK(std::abs(f.md.s(1, 3) + 0.5) < 1e-12);
  CHECK(std::abs(f.md.s(3, 3) - 0.5) < 1e-12);
  CHECK(f.dbl.particle(3).spin == Rational(1, 2));
}

TEST_CASE("T is diagonal with spin phases") {
  Fixture f("S3");
  for (std::size_t p = 0; p < f.dbl.num_particles(); ++p) {
    auto expected = std::polar(1.0, 2 * std::numbers::pi * to_double(f.dbl.particle(p).spin));
    CHECK(std::abs(f.md.t(static_cast<Eigen::Index>(p)) - expected) < 1e-12);
  }
}

TEST_CASE("spin denominators divide the flux order") {
  for (const char* spec : {"S3", "A4", "S4", "D4", "A5", "Z6"}) {
    QuantumDouble dbl(named_group(spec));
    for (const auto& p : dbl.particles()) {
      const auto& g = dbl.group();
      auto order = g.element(dbl.classes()[p.class_index].representative()).order();
      REQUIRE(static_cast<std::size_t>(p.spin.denominator()) <= order);
      REQUIRE(order % static_cast<std::size_t>(p.spin.denominator()) == 0);
      REQUIRE(p.spin >= Rational(0));
      REQUIRE(p.spin < Rational(1));
      REQUIRE(spin(dbl, p.class_index, p.irrep_index) == p.spin);
      if (p.class_index == 0 || p.irrep_index == 0) REQUIRE(p.spin == Rational(0));
    }
  }
}

TEST_CASE("S3 fusion of D with itself") {
  Fixture f("S3");
  auto ref = testing::s3_reference();
  std::size_t d = by_ref(f, ref, "D");
  long long weighted = 0;
  for (std::size_t c = 0; c < f.table.size(); ++c)
    weighted += f.table(d, d, c) * static_cast<long long>(f.table.dimensions()[c]);
  CHECK(weighted == 9);
  CHECK(fusion_probability(f.table, d, d, 0) == Rational(1, 9));
}

TEST_CASE("S3 three-dimensional fusions") {
  Fixture f("S3");
  auto ref = testing::s3_reference();
  auto id = [&](const char* l) { return by_ref(f, ref, l); };
  for (const char* x : {"C", "F", "G", "H"}) {
    auto channels = f.table.channels(id(x), id(x));
    std::vector<std::pair<std::size_t, int>> expected{{id("A"), 1}, {id("B"), 1}, {id(x), 1}};
    std::sort(expected.begin(), expected.end());
    CHECK(channels == expected);
  }
  CHECK(f.table(id("F"), id("G"), id("C")) == 1);
  CHECK(f.table(id("F"), id("G"), id("H")) == 1);
  CHECK(f.table(id("F"), id("G"), id("A")) == 0);
}

TEST_CASE("fusion probabilities sum to one") {
  for (const char* spec : {"S3", "A4", "D4"}) {
    Fixture f(spec);
    for (std::size_t a = 0; a < f.table.size(); ++a)
      for (std::size_t b = 0; b < f.table.size(); ++b) {
        Rational total(0);
        for (std::size_t c = 0; c < f.table.size(); ++c) total += fusion_probability(f.table, a, b, c);
        REQUIRE(total == Rational(1));
      }
  }
}

TEST_CASE("vectorized and scalar Verlinde agree") {
  Fixture f("A4");
  for (std::size_t a = 0; a < f.table.size(); ++a)
    for (std::size_t b = 0; b < f.table.size(); ++b)
      for (std::size_t c = 0; c < f.table.size(); ++c)
        REQUIRE(fusion_coefficient(f.md, a, b, c) == f.table(a, b, c));
  const auto& pb = f.dbl.particle(5);
  const auto& pc = f.dbl.particle(9);
  CHECK(fusion_coefficient(f.dbl, f.md, pb.class_index, pb.irrep_index, pc.class_index,
                           pc.irrep_index, 0, 0) == f.table(5, 9, 0));
}

TEST_CASE("A4 conjugation swaps the two nontrivial one-dimensional pure charges and the 3-cycle fluxes") {
  Fixture f("A4");
  auto ref = testing::a4_reference();
  std::size_t b = by_ref(f, ref, "B");
  std::size_t c = by_ref(f, ref, "C");
  CHECK(f.md.conjugation[b] == c);
  CHECK(f.md.conjugation[c] == b);
  CHECK(antiparticle(f.md, f.table, b) == c);
  CHECK(f.table(b, c, 0) == 1);
  std::size_t fixed = 0;
  for (std::size_t p = 0; p < f.table.size(); ++p) fixed += (f.md.conjugation[p] == p);
  CHECK(fixed == 6);
}

TEST_CASE("associativity holds and a broken table is caught") {
  Fixture f("S3");
  CHECK(check_associativity(f.table));
  FusionTable broken = f.table;
  broken(2, 2, 2) = 0;
  CHECK_FALSE(check_associativity(broken));
}

TEST_CASE("modular residuals are tiny") {
  for (const char* spec : {"S3", "D4", "Z6"}) {
    Fixture f(spec);
    auto r = modular_residuals(f.dbl, f.md);
    CHECK(r.symmetry < 1e-9);
    CHECK(r.unitarity < 1e-9);
    CHECK(r.st_cubed < 1e-8);
    CHECK(r.vacuum_row < 1e-12);
    CHECK(r.conjugation < 1e-9);
    CHECK(r.conjugation_involution);
  }
}
