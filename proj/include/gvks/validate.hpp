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

#ifndef GVKS_VALIDATE_HPP_
#define GVKS_VALIDATE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gvks/types.hpp"

namespace gvks {

enum class ViolationKind {
  kOverlap,
  kOutOfBounds,
  kWeight,
  kRotationNotAllowed,
  kProfitMismatch,
};

struct Violation {
  ViolationKind kind;
  // Offending item ids (or container indices rendered as strings). The second
  // is empty for single-object violations.
  std::string first;
  std::string second;
  // Weight dimension for kWeight, otherwise 0.
  std::size_t dimension = 0;
  // How far the constraint is exceeded (overlap area, weight overshoot, ...).
  double magnitude = 0.0;

  std::string describe() const;
};

using ValidityReport = std::vector<Violation>;

// Checks the feasibility of `packing` for `instance`: containment in the unit
// square, pairwise interior-disjointness, per-dimension weight sums, rotation
// permission and the profit total. Throws StructuralError if a placement names
// an unknown item or the same item twice.
ValidityReport validate_packing(const Packing& packing,
                                const KnapsackInstance& instance);

// Pairwise interior-disjointness and containment in the unit square.
ValidityReport container_config_valid(std::span<const Container> containers);

// Open-rectangle overlap area of [ax, ax+aw] x [ay, ay+ah] and the second box;
// 0 when they only touch or the overlap is within kTol on either axis.
double interior_overlap(double ax, double ay, double aw, double ah, double bx,
                        double by, double bw, double bh);

}  // namespace gvks

#endif  // GVKS_VALIDATE_HPP_
