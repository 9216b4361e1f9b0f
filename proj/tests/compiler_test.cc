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


#include "selkit/compiler.h"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_util.h"

namespace selkit {
namespace {

using testing::TempDir;

std::string Slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<CanonicalInstance> ToyNer() {
  const std::vector<std::tuple<std::string, std::vector<Entity>>> rows = {
      {"Obama visited Paris", {{{0, 5, "Obama"}, "person"},
                               {{14, 19, "Paris"}, "location"}}},
      {"Acme hired Lee", {{{0, 4, "Acme"}, "organization"},
                          {{11, 14, "Lee"}, "person"}}},
      {"Rome and Oslo", {{{0, 4, "Rome"}, "location"},
                         {{9, 13, "Oslo"}, "location"}}},
      {"Kim left", {{{0, 3, "Kim"}, "person"}}},
  };
  std::vector<CanonicalInstance> out;
  for (const auto &[text, entities] : rows) {
    CanonicalInstance inst{.id = "n" + std::to_string(out.size()),
                           .task = Task::kNer, .text = text};
    inst.entities = entities;
    out.push_back(std::move(inst));
  }
  return out;
}

CompileConfig ToyConfig(const std::filesystem::path &dir) {
  CompileConfig c;
  c.task = Task::kNer;
  c.schema_path = dir / "schema.json";
  c.inputs = {dir / "train.jsonl"};
  c.output_dir = dir / "out";
  c.stages = {Stage::kEasy, Stage::kHard, Stage::kMain};
  c.m = 2;
  return c;
}

std::filesystem::path WriteToy(const std::string &name) {
  const auto dir = TempDir(name);
  WriteSchema(testing::ToySchema(Task::kNer), dir / "schema.json");
  WriteCanonical(ToyNer(), dir / "train.jsonl");
  return dir;
}

TEST_CASE("stage sizes for a small NER set") {
  const auto instances = ToyNer();
  const auto compiled = Compile(ToyConfig("unused"), instances,
                                testing::ToySchema(Task::kNer));
  const auto &ex = compiled.examples;
  CHECK(ex.at(Stage::kMain).size() == 4);
  CHECK(ex.at(Stage::kHard).size() == 8);
  // One label-set example plus one per distinct category.
  CHECK(ex.at(Stage::kEasy).size() == 4 + (2 + 2 + 1 + 1));
  CHECK(compiled.summary.per_skill.at("ner.skill1") == 4);
  CHECK(compiled.summary.per_skill.at("ner.skill2") == 6);
  CHECK(compiled.summary.instances == 4);
  CHECK(compiled.summary.empty_targets == 0);

  const auto &main = ex.at(Stage::kMain);
  CHECK(main[0].id == "n0");
  CHECK(main[0].target == "((person: Obama) (location: Paris))");
  CHECK(main[0].input.ends_with("[Text] Obama visited Paris"));
  CHECK_FALSE(main[0].skill.has_value());
  for (const auto &h : ex.at(Stage::kHard)) {
    CHECK(h.id.find("#hard.") != std::string::npos);
    CHECK(h.meta.contains("partner_id"));
    CHECK(h.meta.contains("offset_shift"));
  }
  for (const auto &e : ex.at(Stage::kEasy)) {
    CHECK(e.skill.has_value());
    CHECK(e.meta.contains("parent_id"));
  }
}

TEST_CASE("only requested stages are built") {
  auto config = ToyConfig("unused");
  config.stages = {Stage::kMain};
  config.m.reset();
  const auto compiled =
      Compile(config, ToyNer(), testing::ToySchema(Task::kNer));
  CHECK(compiled.examples.size() == 1);
  CHECK(compiled.examples.contains(Stage::kMain));
}

TEST_CASE("configuration errors") {
  auto config = ToyConfig("unused");
  config.m.reset();
  CHECK_THROWS_AS(CheckConfig(config), Error);
  config.m = 0;
  CHECK_THROWS_AS(CheckConfig(config), Error);
  config.m = 1;
  CHECK_NOTHROW(CheckConfig(config));

  CHECK_THROWS_AS(
      Compile(config, ToyNer(), testing::ToySchema(Task::kRe)), Error);
  auto bad = ToyNer();
  bad[1].entities[0].category = "vehicle";
  CHECK_THROWS_AS(Compile(config, bad, testing::ToySchema(Task::kNer)), Error);
}

TEST_CASE("compile writes stage files, summary and manifest") {
  const auto dir = WriteToy("compile_files");
  const CompileSummary summary = RunCompile(ToyConfig(dir));
  for (const char *f : {"easy.jsonl", "hard.jsonl", "main.jsonl",
                        "summary.json", "manifest.json"}) {
    CHECK(std::filesystem::exists(dir / "out" / f));
  }
  CHECK(ReadCompiled(dir / "out" / "main.jsonl").size() == 4);
  const Json s = Json::parse(Slurp(dir / "out" / "summary.json"));
  CHECK(s["stages"]["hard"] == 8);
  const Json m = Json::parse(Slurp(dir / "out" / "manifest.json"));
  CHECK(m["m"] == 2);
  CHECK(m["seed"] == 42);
  CHECK(summary.files.size() == 3);
}

TEST_CASE("merged output holds every stage") {
  const auto dir = WriteToy("compile_merge");
  auto config = ToyConfig(dir);
  config.merge_stages = true;
  RunCompile(config);
  const auto merged = ReadCompiled(dir / "out" / "merged.jsonl");
  CHECK(merged.size() == 4 + 8 + 10);
  CHECK_FALSE(std::filesystem::exists(dir / "out" / "main.jsonl"));
  CHECK(ReadCompiled(dir / "out" / "merged.jsonl",
                     std::set<Stage>{Stage::kHard}).size() == 8);
}

TEST_CASE("identical runs produce identical bytes") {
  const auto dir = WriteToy("compile_determinism");
  auto a = ToyConfig(dir);
  a.output_dir = dir / "a";
  auto b = ToyConfig(dir);
  b.output_dir = dir / "b";
  RunCompile(a);
  RunCompile(b);
  for (const char *f : {"easy.jsonl", "hard.jsonl", "main.jsonl",
                        "summary.json"}) {
    CAPTURE(f);
    CHECK(Slurp(dir / "a" / f) == Slurp(dir / "b" / f));
  }
  auto c = ToyConfig(dir);
  c.output_dir = dir / "c";
  c.seed = 43;
  RunCompile(c);
  CHECK(Slurp(dir / "a" / "main.jsonl") == Slurp(dir / "c" / "main.jsonl"));
}

TEST_CASE("low-resource sampling happens before stage building") {
  auto config = ToyConfig("unused");
  config.low_resource_ratio = 0.5;
  const auto compiled =
      Compile(config, ToyNer(), testing::ToySchema(Task::kNer));
  CHECK(compiled.summary.instances == 2);
  CHECK(compiled.examples.at(Stage::kMain).size() == 2);
  CHECK(compiled.examples.at(Stage::kHard).size() == 4);
}

TEST_CASE("inspect shows each kind of example") {
  const auto compiled = Compile(ToyConfig("unused"), ToyNer(),
                                testing::ToySchema(Task::kNer));
  const Schema schema = testing::ToySchema(Task::kNer);
  const std::string main = Inspect(compiled.examples.at(Stage::kMain)[0]);
  CHECK(main.find("stage:  main") != std::string::npos);
  CHECK(main.find("person: Obama") != std::string::npos);
  CHECK(main.find("round trip: ok") != std::string::npos);

  const std::string hard =
      Inspect(compiled.examples.at(Stage::kHard)[0], schema);
  CHECK(hard.find("meta:   partner_id") != std::string::npos);
  CHECK(hard.find("round trip: ok") != std::string::npos);

  const std::string easy = Inspect(compiled.examples.at(Stage::kEasy)[1]);
  CHECK(easy.find("skill:  ner.skill2") != std::string::npos);

  CompiledExample broken = compiled.examples.at(Stage::kMain)[0];
  broken.target = "((person: Obama)";
  CHECK(Inspect(broken).find("MISMATCH") != std::string::npos);
}

}  // namespace
}  // namespace selkit
