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

#include "selkit/hard.h"

#include <random>

#include "selkit/utf8.h"

namespace selkit {
namespace {

void Shift(Span *span, int64_t shift) {
  if (span->implicit()) return;
  span->start += shift;
  span->end += shift;
}

std::mt19937_64 StreamFor(uint64_t seed, uint64_t index) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(index),
                    static_cast<uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

CanonicalInstance ShiftOffsets(const CanonicalInstance &inst, int64_t shift) {
  CanonicalInstance out = inst;
  for (auto &e : out.entities) Shift(&e.span, shift);
  for (auto &ev : out.events) {
    Shift(&ev.trigger.span, shift);
    for (auto &arg : ev.arguments) Shift(&arg.span, shift);
  }
  for (auto &s : out.sentiments) {
    Shift(&s.aspect, shift);
    Shift(&s.opinion, shift);
  }
  return out;
}

HardInstance Compose(const CanonicalInstance &base,
                     const CanonicalInstance &partner, Task task) {
  if (IsEmptyTarget(partner)) {
    throw Error("hard partner " + partner.id + " has an empty target");
  }
  HardInstance out;
  out.base_id = base.id;
  out.partner_id = partner.id;
  out.offset_shift = CharLength(base.text) + 1;
  out.text = base.text + " " + partner.text;
  out.target = StructureOf(base, task);
  SelStructure tail = StructureOf(ShiftOffsets(partner, out.offset_shift), task);
  for (auto &root : tail.roots) out.target.roots.push_back(std::move(root));
  return out;
}

std::vector<HardInstance> BuildHardSet(std::span<const CanonicalInstance> train,
                                       int m, uint64_t seed, Task task) {
  if (m < 1) throw Error("hard-stage partner count must be at least 1");
  std::vector<size_t> pool;
  for (size_t i = 0; i < train.size(); ++i) {
    if (!IsEmptyTarget(train[i])) pool.push_back(i);
  }
  if (pool.empty()) {
    throw Error("no instance with a non-empty target to use as hard partner");
  }
  std::vector<HardInstance> out;
  out.reserve(train.size() * static_cast<size_t>(m));
  for (size_t i = 0; i < train.size(); ++i) {
    std::mt19937_64 rng = StreamFor(seed, i);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int j = 0; j < m; ++j) {
      out.push_back(Compose(train[i], train[pool[pick(rng)]], task));
    }
  }
  return out;
}

}  // namespace selkit
