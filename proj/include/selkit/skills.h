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

#ifndef SELKIT_SKILLS_H_
#define SELKIT_SKILLS_H_

#include <string>
#include <vector>

#include "selkit/core_model.h"
#include "selkit/prompt.h"
#include "selkit/sel.h"

namespace selkit {

// One easy-stage training instance: a basic skill derived from a main-task
// instance by restricting the prompt and projecting the target.
struct SkillInstance {
  std::string parent_id;
  std::string skill;  // e.g. "re.skill2"
  PromptSpec prompt_spec;
  SelStructure target;

  friend bool operator==(const SkillInstance &, const SkillInstance &) = default;
};

// Skill instances of `inst` in skill order. Unconstrained skills are always
// emitted (with an empty target for empty gold); constrained skills get one
// instance per distinct constraint value found in the gold target, in order
// of first appearance.
//
// Throws Error if the instance and schema tasks differ.
std::vector<SkillInstance> Decompose(const CanonicalInstance &inst,
                                     const Schema &schema);

}  // namespace selkit

#endif  // SELKIT_SKILLS_H_
