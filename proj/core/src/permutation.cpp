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

#include "anyonkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "anyonkit/errors.hpp"

namespace anyonkit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x]) {
      throw ParseError("permutation images are not a bijection");
    }
    hit[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<Point>(i);
  }
  return inv;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, len);
  return result;
}

Permutation Permutation::pow(long long exponent) const {
  const auto n = static_cast<long long>(order());
  long long e = ((exponent % n) + n) % n;
  Permutation result(images_.size());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

namespace {

std::string cycles_to_string(const std::vector<Permutation::Point>& images, bool commas) {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      if (!first && commas) out += ',';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

std::string Permutation::to_string() const { return cycles_to_string(images_, true); }

std::string Permutation::to_compact_string() const {
  // Commas are only dropped when every point is a single digit.
  return cycles_to_string(images_, images_.size() > 9);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("cannot compose permutations of different degree");
  }
  Permutation r(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

std::size_t element_order(const Permutation& h) { return h.order(); }

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("degree must be positive");
  std::vector<Permutation::Point> images(degree);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("bad cycle notation '" + std::string(text) + "': " + what);
  };

  skip_ws();
  if (pos == text.size()) throw fail("empty input");
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Permutation::Point> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = pos;
      unsigned long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > degree) break;
        ++pos;
      }
      if (pos == start) throw fail("expected a point");
      if (value == 0 || value > degree) {
        throw fail("point out of range 1.." + std::to_string(degree));
      }
      auto point = static_cast<Permutation::Point>(value - 1);
      if (used[point]) throw fail("repeated point " + std::to_string(value));
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("unexpected character '" + std::string(1, text[pos]) + "'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    gens.push_back(parse_permutation(text.substr(start, end - start), degree));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return gens;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (auto x : p.images()) h = h * 1000003u ^ x;
  return h;
}

}  // namespace anyonkit
