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

#include "anyonkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "anyonkit/errors.hpp"

namespace anyonkit {

namespace {

// Greedy generating set: walk the elements in canonical order and keep every
// element that is not yet in the subgroup spanned by the ones kept so far.
std::vector<Permutation> greedy_generators(const FiniteGroup& g) {
  std::vector<Permutation> gens;
  std::vector<bool> in_span(g.order(), false);
  in_span[FiniteGroup::identity_index()] = true;
  std::vector<std::size_t> span_list{FiniteGroup::identity_index()};
  std::vector<std::size_t> gen_idx;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (in_span[x]) continue;
    gens.push_back(g.element(x));
    gen_idx.push_back(x);
    // Re-close: BFS from everything already reached using all generators.
    std::vector<std::size_t> frontier = span_list;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t a : frontier) {
        for (std::size_t s : gen_idx) {
          std::size_t b = g.multiply(a, s);
          if (!in_span[b]) {
            in_span[b] = true;
            span_list.push_back(b);
            next.push_back(b);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw DomainError("a group needs at least one element");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  FiniteGroup g;
  g.degree_ = elements.front().degree();
  g.elements_ = std::move(elements);
  const std::size_t n = g.elements_.size();
  if (!g.elements_.front().is_identity()) throw DomainError("element set lacks the identity");

  g.lookup_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.elements_[i].degree() != g.degree_) throw DomainError("mixed permutation degrees");
    g.lookup_.emplace(g.elements_[i], static_cast<Index>(i));
  }

  g.mul_table_.resize(n * n);
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = g.lookup_.find(g.elements_[a] * g.elements_[b]);
      if (it == g.lookup_.end()) throw DomainError("element set is not closed under composition");
      g.mul_table_[a * n + b] = it->second;
      if (it->second == 0) g.inverse_[a] = static_cast<Index>(b);
    }
  }
  g.generators_ = greedy_generators(g);
  return g;
}

std::optional<std::size_t> FiniteGroup::find(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx) throw DomainError("permutation " + p.to_string() + " is not in the group");
  return *idx;
}

bool FiniteGroup::is_abelian() const {
  for (const auto& a : generators_) {
    for (const auto& b : generators_) {
      if (a * b != b * a) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (const auto& x : elements_) e = std::lcm(e, x.order());
  return e;
}

FiniteGroup generate_group(std::span<const Permutation> generators, std::size_t order_cap) {
  if (generators.empty()) throw DomainError("generator list is empty");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generators have different degrees");
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Permutation next = elements[head] * s;
      if (seen.insert(next).second) {
        if (elements.size() >= order_cap) {
          throw OrderCapExceeded("group order exceeds cap of " + std::to_string(order_cap));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  FiniteGroup g = FiniteGroup::from_elements(std::move(elements));
  return g;
}

FiniteGroup named_group(char family, std::size_t n, std::size_t order_cap) {
  if (n == 0) throw DomainError("group parameter must be positive");
  using Point = Permutation::Point;
  auto cycle = [&](std::size_t first, std::size_t last) {
    // (first, first+1, ..., last) in 1-based points on n points
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t p = first; p < last; ++p) images[p - 1] = static_cast<Point>(p);
    images[last - 1] = static_cast<Point>(first - 1);
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  switch (std::toupper(static_cast<unsigned char>(family))) {
    case 'S':
      if (n >= 2) {
        gens = {cycle(1, 2), cycle(1, n)};
      }
      break;
    case 'A':
      if (n >= 3) {
        gens.push_back(cycle(1, 3));
        if (n >= 4) gens.push_back(n % 2 == 1 ? cycle(1, n) : cycle(2, n));
      }
      break;
    case 'D': {
      if (n < 3) throw DomainError("dihedral group D" + std::to_string(n) + " needs n >= 3");
      std::vector<Point> refl(n);
      refl[0] = 0;
      for (std::size_t i = 1; i < n; ++i) refl[i] = static_cast<Point>(n - i);
      gens = {cycle(1, n), Permutation(std::move(refl))};
      break;
    }
    case 'Z':
      if (n >= 2) gens = {cycle(1, n)};
      break;
    default:
      throw ParseError(std::string("unsupported group family '") + family + "'");
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return generate_group(gens, order_cap);
}

FiniteGroup named_group(std::string_view spec, std::size_t order_cap) {
  if (spec.size() < 2) throw ParseError("group spec '" + std::string(spec) + "' is too short");
  std::size_t n = 0;
  for (char c : spec.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("group spec '" + std::string(spec) + "' must look like S3, A5, D4, Z6");
    }
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > 100000) throw ParseError("group parameter too large");
  }
  return named_group(spec.front(), n, order_cap);
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    ConjugacyClass cls;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t c = group.conjugate(x, g);
      if (!assigned[c]) {
        assigned[c] = true;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }

  auto key = [&](const ConjugacyClass& c) {
    return std::make_tuple(group.element(c.representative()).order(), c.size(), c.representative());
  };
  std::sort(classes.begin(), classes.end(),
            [&](const ConjugacyClass& a, const ConjugacyClass& b) { return key(a) < key(b); });
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].index = i;
  return classes;
}

std::vector<std::size_t> class_lookup(const FiniteGroup& group,
                                      const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> lookup(group.order());
  for (const auto& cls : classes) {
    for (std::size_t m : cls.members) lookup[m] = cls.index;
  }
  return lookup;
}

FiniteGroup centralizer(const FiniteGroup& group, const Permutation& h) {
  const std::size_t hi = group.index_of(h);
  std::vector<Permutation> elements;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (group.multiply(g, hi) == group.multiply(hi, g)) elements.push_back(group.element(g));
  }
  return FiniteGroup::from_elements(std::move(elements));
}

Transversal right_transversal(const FiniteGroup& group, const ConjugacyClass& cls) {
  Transversal t;
  t.class_index = cls.index;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  t.reps.assign(cls.size(), kUnset);
  std::size_t remaining = cls.size();
  const std::size_t h1 = cls.representative();
  for (std::size_t x = 0; x < group.order() && remaining > 0; ++x) {
    std::size_t c = group.conjugate(x, h1);
    auto it = std::lower_bound(cls.members.begin(), cls.members.end(), c);
    auto slot = static_cast<std::size_t>(it - cls.members.begin());
    if (t.reps[slot] == kUnset) {
      t.reps[slot] = x;
      --remaining;
    }
  }
  return t;
}

Transversal right_transversal(const FiniteGroup& group, std::size_t class_index) {
  auto classes = conjugacy_classes(group);
  if (class_index >= classes.size()) throw DomainError("class index out of range");
  return right_transversal(group, classes[class_index]);
}

}  // namespace anyonkit
