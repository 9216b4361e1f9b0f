// Copyright 2026 The selkit Authors.
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

#ifndef SELKIT_HARD_H_
#define SELKIT_HARD_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "selkit/core_model.h"
#include "selkit/sel.h"

namespace selkit {

// Two main-task instances glued into one harder instance: the texts are
// joined by a single space and the partner's annotations move right by
// `offset_shift` characters.
struct HardInstance {
  std::string base_id;
  std::string partner_id;
  std::string text;
  SelStructure target;
  int64_t offset_shift = 0;

  friend bool operator==(const HardInstance &, const HardInstance &) = default;
};

// Copy of `inst` with every non-implicit span moved right by `shift`.
CanonicalInstance ShiftOffsets(const CanonicalInstance &inst, int64_t shift);

// Throws Error if the partner has an empty target or the tasks differ.
HardInstance Compose(const CanonicalInstance &base,
                     const CanonicalInstance &partner, Task task);

// Builds |train| * m hard instances ordered by (base index, draw index).
// Each base draws m partners uniformly with replacement from the instances
// with non-empty targets, using a random stream seeded from (seed, base
// index), so the result does not depend on processing order.
//
// Throws Error if m < 1 or no instance has a non-empty target.
std::vector<HardInstance> BuildHardSet(std::span<const CanonicalInstance> train,
                                       int m, uint64_t seed, Task task);

}  // namespace selkit

#endif  // SELKIT_HARD_H_
