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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anyonkit_cli/output_document.hpp"

namespace anyonkit::cli {

enum ExitCode : int { kSuccess = 0, kComputationFailure = 1, kUsageError = 2 };

enum class Format { kText, kCsv, kJson };

struct GroupSpec {
  std::string name;  // "S3", or empty when generators are given
  std::string generators;
  std::size_t degree = 0;
  std::size_t order_cap = 2048;

  std::string describe() const;
};

struct Options {
  std::string command;
  GroupSpec group;
  Format format = Format::kText;
  bool decimal = false;
  bool verify = false;
  std::optional<std::uint64_t> seed;

  // command-specific
  std::vector<std::string> pair;    // prob: two labels
  std::string profile = "dimspin";  // symmetries
  std::size_t modulus = 0;          // abelian
  std::string particles;            // abelian: "a,n;a',n'"
  double momentum = 1.0;            // abelian
  std::size_t theta_steps = 12;     // abelian
};

/** Builds the document for a parsed command. Throws AnyonError subclasses. */
OutputDocument build_document(const Options& options);

std::string render(const OutputDocument& doc, Format format, bool decimal);

/** Parses argv, runs the command and writes to the streams; returns the exit code. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyonkit::cli
