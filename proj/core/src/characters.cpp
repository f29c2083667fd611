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

#include "anyonkit/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "anyonkit/errors.hpp"

namespace anyonkit {

ClassAlgebra class_structure_constants(const FiniteGroup& group,
                                       const std::vector<ConjugacyClass>& classes) {
  const auto cls_of = class_lookup(group, classes);
  ClassAlgebra algebra(classes.size());
  for (const auto& target : classes) {
    const std::size_t z = target.representative();
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::size_t y = group.multiply(group.inverse(x), z);
      ++algebra(cls_of[x], cls_of[y], target.index);
    }
  }
  return algebra;
}

ClassAlgebra class_structure_constants(const FiniteGroup& group) {
  return class_structure_constants(group, conjugacy_classes(group));
}

namespace {

constexpr double kDegreeTolerance = 1e-6;
constexpr double kSnapTolerance = 1e-9;
constexpr double kOrderTolerance = 1e-6;

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < kSnapTolerance ? r : x;
}

// Returns false when this draw could not separate the irreps.
bool try_burnside(const ClassAlgebra& algebra, const std::vector<std::size_t>& sizes,
                  std::size_t group_order, std::mt19937_64& rng, CharacterTable& out,
                  double separation) {
  const auto r = static_cast<Eigen::Index>(algebra.num_classes());
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const double t = coeff(rng);
    for (Eigen::Index j = 0; j < r; ++j) {
      for (Eigen::Index k = 0; k < r; ++k) {
        combo(j, k) += t * static_cast<double>(algebra(static_cast<std::size_t>(i),
                                                       static_cast<std::size_t>(j),
                                                       static_cast<std::size_t>(k)));
      }
    }
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(combo);
  if (solver.info() != Eigen::Success) return false;
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  for (Eigen::Index a = 0; a < r; ++a) {
    for (Eigen::Index b = a + 1; b < r; ++b) {
      if (std::abs(lambda(a) - lambda(b)) < separation) return false;
    }
  }

  const Eigen::MatrixXcd vecs = solver.eigenvectors();
  out.values.resize(r, r);
  out.degrees.assign(static_cast<std::size_t>(r), 0);
  for (Eigen::Index row = 0; row < r; ++row) {
    // Column `row` of vecs is proportional to the central character omega,
    // normalized so that omega(identity class) = 1.
    const std::complex<double> pivot = vecs(0, row);
    if (std::abs(pivot) < 1e-12) return false;
    Eigen::VectorXcd omega = vecs.col(row) / pivot;

    double norm = 0.0;
    for (Eigen::Index i = 0; i < r; ++i) {
      norm += std::norm(omega(i)) / static_cast<double>(sizes[static_cast<std::size_t>(i)]);
    }
    const double degree = std::sqrt(static_cast<double>(group_order) / norm);
    const double rounded = std::round(degree);
    if (rounded < 1.0 || std::abs(degree - rounded) > kDegreeTolerance) return false;
    out.degrees[static_cast<std::size_t>(row)] = static_cast<std::size_t>(rounded);

    for (Eigen::Index i = 0; i < r; ++i) {
      std::complex<double> chi =
          omega(i) * rounded / static_cast<double>(sizes[static_cast<std::size_t>(i)]);
      out.values(row, i) = {snap(chi.real()), snap(chi.imag())};
    }
  }
  return true;
}

// Three-way comparison of two complex values with a tolerance, real part first.
int fuzzy_compare(std::complex<double> a, std::complex<double> b) {
  if (std::abs(a.real() - b.real()) > kOrderTolerance) return a.real() < b.real() ? -1 : 1;
  if (std::abs(a.imag() - b.imag()) > kOrderTolerance) return a.imag() < b.imag() ? -1 : 1;
  return 0;
}

void canonicalize_rows(CharacterTable& table) {
  const auto r = static_cast<Eigen::Index>(table.num_irreps());
  auto is_trivial = [&](Eigen::Index row) {
    for (Eigen::Index c = 0; c < r; ++c) {
      if (std::abs(table.values(row, c) - 1.0) > kOrderTolerance) return false;
    }
    return true;
  };

  std::vector<Eigen::Index> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const bool ta = is_trivial(a);
    const bool tb = is_trivial(b);
    if (ta != tb) return ta;
    const auto da = table.degrees[static_cast<std::size_t>(a)];
    const auto db = table.degrees[static_cast<std::size_t>(b)];
    if (da != db) return da < db;
    for (Eigen::Index c = 0; c < r; ++c) {
      int cmp = fuzzy_compare(table.values(a, c), table.values(b, c));
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });

  Eigen::MatrixXcd sorted(r, r);
  std::vector<std::size_t> degrees(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    sorted.row(i) = table.values.row(order[static_cast<std::size_t>(i)]);
    degrees[static_cast<std::size_t>(i)] = table.degrees[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
  }
  table.values = std::move(sorted);
  table.degrees = std::move(degrees);
}

}  // namespace

CharacterTable character_table(const FiniteGroup& group, const std::vector<ConjugacyClass>& classes,
                               const CharacterTableOptions& options) {
  CharacterTable table;
  table.group_order = group.order();
  for (const auto& cls : classes) {
    table.class_sizes.push_back(cls.size());
    table.class_representatives.push_back(group.element(cls.representative()));
  }
  table.class_of = class_lookup(group, classes);

  const ClassAlgebra algebra = class_structure_constants(group, classes);
  std::mt19937_64 rng(options.seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    if (!try_burnside(algebra, table.class_sizes, group.order(), rng, table, options.separation)) {
      continue;
    }
    canonicalize_rows(table);
    return table;
  }
  throw NumericalError("character table: eigenvalues not separated after " +
                       std::to_string(options.max_attempts) + " attempts");
}

CharacterTable character_table(const FiniteGroup& group, const CharacterTableOptions& options) {
  return character_table(group, conjugacy_classes(group), options);
}

CharacterValidation validate(const CharacterTable& table) {
  constexpr double kPass = 1e-8;
  CharacterValidation report;
  const auto r = static_cast<Eigen::Index>(table.num_irreps());
  const auto order = static_cast<double>(table.group_order);

  if (table.num_irreps() != table.num_classes()) {
    report.failures.push_back("number of irreps differs from number of classes");
  }

  for (Eigen::Index a = 0; a < r; ++a) {
    for (Eigen::Index b = 0; b < r; ++b) {
      std::complex<double> row_sum = 0.0;
      std::complex<double> col_sum = 0.0;
      for (Eigen::Index i = 0; i < r; ++i) {
        row_sum += static_cast<double>(table.class_sizes[static_cast<std::size_t>(i)]) *
                   table.values(a, i) * std::conj(table.values(b, i));
        col_sum += table.values(i, a) * std::conj(table.values(i, b));
      }
      row_sum /= order;
      const double row_expect = a == b ? 1.0 : 0.0;
      const double col_expect =
          a == b ? order / static_cast<double>(table.class_sizes[static_cast<std::size_t>(a)]) : 0.0;
      report.row_residual = std::max(report.row_residual, std::abs(row_sum - row_expect));
      report.column_residual = std::max(report.column_residual, std::abs(col_sum - col_expect));
    }
  }

  for (auto d : table.degrees) report.degree_square_sum += static_cast<long long>(d * d);
  report.degree_sum_ok = report.degree_square_sum == static_cast<long long>(table.group_order);
  if (!report.degree_sum_ok) report.failures.push_back("sum of squared degrees differs from |G|");

  report.bounded = true;
  for (Eigen::Index a = 0; a < r; ++a) {
    for (Eigen::Index i = 0; i < r; ++i) {
      if (std::abs(table.values(a, i)) > static_cast<double>(table.degrees[static_cast<std::size_t>(a)]) + kPass) {
        report.bounded = false;
      }
    }
  }
  if (!report.bounded) report.failures.push_back("|chi(g)| exceeds chi(1)");
  if (report.row_residual >= kPass) report.failures.push_back("row orthogonality residual too large");
  if (report.column_residual >= kPass) {
    report.failures.push_back("column orthogonality residual too large");
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace anyonkit
