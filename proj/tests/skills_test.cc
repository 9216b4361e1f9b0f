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

#include "selkit/skills.h"

#include <algorithm>
#include <map>

#include "doctest.h"
#include "test_util.h"

namespace selkit {
namespace {

using testing::ReferenceInstance;
using testing::ReferenceSchema;

std::vector<const SkillInstance *> OfSkill(
    const std::vector<SkillInstance> &all, const std::string &skill) {
  std::vector<const SkillInstance *> out;
  for (const auto &s : all) {
    if (s.skill == skill) out.push_back(&s);
  }
  return out;
}

TEST_CASE("RE skill 1 lists all typed entities") {
  const auto skills = Decompose(ReferenceInstance("re"), ReferenceSchema("re"));
  const auto s1 = OfSkill(skills, "re.skill1");
  REQUIRE(s1.size() == 1);
  CHECK(Serialize(s1[0]->target) ==
        "((task: demonstrator) (material: hand-built, symbolic resources) "
        "(method: stochastic processes))");
  CHECK(OfSkill(skills, "re.skill2").size() == 2);
  CHECK(OfSkill(skills, "re.skill3").size() == 1);
  CHECK(OfSkill(skills, "re.skill4").size() == 2);
}

TEST_CASE("NER skills") {
  const auto skills = Decompose(ReferenceInstance("ner"), ReferenceSchema("ner"));
  const auto s1 = OfSkill(skills, "ner.skill1");
  REQUIRE(s1.size() == 1);
  CHECK(Serialize(s1[0]->target) == "((location) (person))");
  const auto s2 = OfSkill(skills, "ner.skill2");
  REQUIRE(s2.size() == 2);
  CHECK(s2[0]->prompt_spec.constraint->Render() == "[Ent] location");
  CHECK(s2[0]->prompt_spec.schema_entries.empty());
  CHECK(Serialize(s2[1]->target) == "((person: Fischler))");
}

TEST_CASE("empty gold emits only unconstrained skills") {
  const std::map<Task, std::vector<std::string>> expected = {
      {Task::kNer, {"ner.skill1"}},
      {Task::kRe, {"re.skill1", "re.skill3"}},
      {Task::kEe, {"ee.skill1"}},
      {Task::kAste, {"aste.skill1", "aste.skill3"}},
      {Task::kAsqp,
       {"asqp.skill1", "asqp.skill2", "asqp.skill3", "asqp.skill4"}},
  };
  for (const auto &[task, tags] : expected) {
    CanonicalInstance inst{.id = "e", .task = task, .text = "nothing"};
    const auto skills = Decompose(inst, testing::ToySchema(task));
    std::vector<std::string> got;
    for (const auto &s : skills) {
      got.push_back(s.skill);
      CHECK(Serialize(s.target) == "()");
      CHECK_FALSE(s.prompt_spec.constraint.has_value());
    }
    CHECK(got == tags);
  }
}

TEST_CASE("ASQP skills keep one role slot each") {
  const auto skills =
      Decompose(ReferenceInstance("asqp"), ReferenceSchema("asqp"));
  REQUIRE(skills.size() == 4);
  CHECK(Serialize(skills[0].target) == "((category: food quality))");
  CHECK(Serialize(skills[2].target) ==
        "((category: food quality (opinion: delicious)))");
  CHECK(BuildPrompt(skills[1].prompt_spec, "t") ==
        "[HC] [HA] [Cat] category [Arg] aspect [Text] t");
}

TEST_CASE("identical constraint texts share one instance") {
  CanonicalInstance inst{.id = "d", .task = Task::kRe, .text = "x y x z"};
  inst.entities = {{Span{0, 1, "x"}, "task"},
                   {Span{2, 3, "y"}, "method"},
                   {Span{4, 5, "x"}, "task"},
                   {Span{6, 7, "z"}, "method"}};
  inst.relations = {{0, "used for", 1}, {2, "part of", 3}};
  const auto skills = Decompose(inst, testing::ToySchema(Task::kRe));
  const auto s2 = OfSkill(skills, "re.skill2");
  REQUIRE(s2.size() == 1);
  CHECK(Serialize(s2[0]->target) ==
        "((task: x (used for: y)) (task: x (part of: z)))");
}

TEST_CASE("schema mismatch") {
  CHECK_THROWS_AS(Decompose(ReferenceInstance("ner"), ReferenceSchema("re")),
                  Error);
}

TEST_CASE("decomposition is deterministic") {
  testing::Gen gen(9);
  const Schema schema = testing::ToySchema(Task::kEe);
  for (int i = 0; i < 50; ++i) {
    const auto inst = gen.Instance(Task::kEe, schema, "d");
    CHECK(Decompose(inst, schema) == Decompose(inst, schema));
  }
}

}  // namespace
}  // namespace selkit
