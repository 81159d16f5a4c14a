// Copyright 2026 The gvks Authors
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

// File formats: instance and packing JSON, SVG rendering, seeded generator.

#ifndef GVKS_IO_HPP_
#define GVKS_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gvks/gvks_solver.hpp"
#include "gvks/types.hpp"

namespace gvks::io {

// Text that is not JSON. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

// Well-formed JSON that does not follow the schema (missing field, wrong
// type, item invariants) raises ContractError.
KnapsackInstance parse_instance(std::string_view text);
Packing parse_packing(std::string_view text);

std::string instance_to_json(const KnapsackInstance& instance);
std::string packing_to_json(const Packing& packing);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// 1000 x 1000 user units, y axis pointing up as in the packing coordinates.
// Containers are outlined, items filled, rotated items hatched.
std::string render_svg(const Packing& packing, const KnapsackInstance& instance);

enum class Profile { kUniform, kSkewedWide, kSkewedTall, kHeavyVector };

// Throws ContractError for an unknown name.
Profile parse_profile(std::string_view name);
std::string_view to_string(Profile profile);

// Deterministic for a fixed (seed, n, d, profile, rotations). All numbers are
// multiples of 1e-4.
KnapsackInstance generate_instance(std::uint64_t seed, std::size_t n,
                                   std::size_t d, Profile profile,
                                   bool rotations = false);

struct RunReport {
  std::size_t n = 0;
  std::size_t d = 0;
  bool rotations = false;
  double solver_profit = 0.0;
  std::optional<double> oracle_profit;
  double ms = 0.0;
  GvksStats stats;
  SolverParams params;

  // solver / oracle, 1 when both are zero; empty without an oracle.
  std::optional<double> ratio() const;
  // ms is left out when include_timing is false.
  std::string to_json(bool include_timing = true) const;
};

}  // namespace gvks::io

#endif  // GVKS_IO_HPP_
