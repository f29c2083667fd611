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
#include <random>

#include "anyonkit/characters.hpp"
#include "anyonkit/group.hpp"
#include "catch_amalgamated.hpp"

using namespace anyonkit;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kTol = 1e-9;

bool close(std::complex<double> a, std::complex<double> b, double tol = kTol) {
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("S3 class structure constant against brute force") {
  auto g = named_group("S3");
  auto classes = conjugacy_classes(g);
  auto c = class_structure_constants(g, classes);
  long long transposition_pairs = 0;
  for (std::size_t x : classes[1].members)
    for (std::size_t y : classes[1].members)
      transposition_pairs += (g.element(x) * g.element(y)).is_identity();
  CHECK(transposition_pairs == 3);
  CHECK(c(1, 1, 0) == transposition_pairs);

  // every constant recomputed from raw permutation products
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const Permutation& z = g.element(classes[k].representative());
        long long count = 0;
        for (std::size_t x : classes[i].members)
          for (std::size_t y : classes[j].members) count += (g.element(x) * g.element(y) == z);
        REQUIRE(c(i, j, k) == count);
      }
}

TEST_CASE("S3 character table") {
  auto t = character_table(named_group("S3"));
  REQUIRE(t.num_irreps() == 3);
  CHECK(t.degrees == std::vector<std::size_t>{1, 1, 2});
  CHECK(close(t(1, 1), -1.0));
  CHECK(close(t(1, 2), 1.0));
  CHECK(close(t(2, 0), 2.0));
  CHECK(close(t(2, 1), 0.0));
  CHECK(close(t(2, 2), -1.0));
  CHECK(validate(t).passed);
}

TEST_CASE("Z3 characters are cube roots of unity") {
  auto t = character_table(named_group("Z3"));
  const std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi / 3);
  REQUIRE(t.num_irreps() == 3);
  CHECK(close(t(0, 1), 1.0));
  CHECK(close(t(1, 1), std::conj(w)));
  CHECK(close(t(1, 2), w));
  CHECK(close(t(2, 1), w));
  CHECK(close(t(2, 2), std::conj(w)));
}

TEST_CASE("A5 character table") {
  auto t = character_table(named_group("A5"));
  CHECK(t.degrees == std::vector<std::size_t>{1, 3, 3, 4, 5});
  const double phi = (1 + std::sqrt(5.0)) / 2;
  for (std::size_t r : {1u, 2u}) {
    double a = t(r, 3).real();
    double b = t(r, 4).real();
    CHECK_THAT(a + b, WithinAbs(1.0, kTol));
    CHECK_THAT(std::abs(a - b), WithinAbs(std::sqrt(5.0), kTol));
    CHECK((close(a, phi) || close(a, 1 - phi)));
  }
  CHECK(close(t(3, 3), -1.0));
  CHECK(close(t(4, 3), 0.0));
  CHECK(close(t(4, 1), 1.0));
  auto v = validate(t);
  CHECK(v.passed);
  CHECK(v.degree_square_sum == 60);
}

TEST_CASE("character tables do not depend on the seed") {
  for (const char* spec : {"S4", "A4", "D4", "A5", "Z6"}) {
    auto g = named_group(spec);
    auto reference = character_table(g);
    for (std::uint64_t seed : {1ULL, 99ULL, 123456789ULL}) {
      CharacterTableOptions opt;
      opt.seed = seed;
      auto other = character_table(g, opt);
      REQUIRE(other.degrees == reference.degrees);
      REQUIRE((other.values - reference.values).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("random groups: orthogonality, degrees and trivial row") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Permutation::Point> images(n);
      for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Permutation::Point>(i);
      std::shuffle(images.begin(), images.end(), rng);
      gens.emplace_back(images);
    }
    auto g = generate_group(gens);
    auto t = character_table(g);
    auto v = validate(t);
    REQUIRE(v.passed);
    REQUIRE(t.num_irreps() == t.num_classes());
    long long sum = 0;
    for (auto d : t.degrees) {
      REQUIRE(g.order() % d == 0);
      sum += static_cast<long long>(d * d);
    }
    REQUIRE(sum == static_cast<long long>(g.order()));
    for (std::size_t c = 0; c < t.num_classes(); ++c) REQUIRE(close(t(0, c), 1.0));
    REQUIRE(std::is_sorted(t.degrees.begin() + 1, t.degrees.end()));
  }
}

TEST_CASE("validate flags a corrupted table") {
  auto t = character_table(named_group("S3"));
  t.values(2, 1) = 0.5;
  auto v = validate(t);
  CHECK_FALSE(v.passed);
  CHECK(v.max_residual() > 1e-3);
}
