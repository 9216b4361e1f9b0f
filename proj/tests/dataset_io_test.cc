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

#include "selkit/dataset_io.h"

#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "selkit/sel.h"
#include "selkit/utf8.h"
#include "test_util.h"

namespace selkit {
namespace {

using testing::DataDir;

std::string ErrorOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

TEST_CASE("read a three-line fixture") {
  const auto instances = ReadCanonical(DataDir() / "three.jsonl");
  REQUIRE(instances.size() == 3);
  CHECK(instances[0].id == "conll03-ref");
  CHECK(instances[1].relations.size() == 3);
  CHECK(instances[2].task == Task::kAste);
}

TEST_CASE("an inverted span names the offending id") {
  const std::string msg =
      ErrorOf([] { ReadCanonical(DataDir() / "bad_span.jsonl"); });
  CHECK(msg.find("broken-7") != std::string::npos);
  CHECK(msg.find(":2:") != std::string::npos);
}

TEST_CASE("a malformed line names its line number") {
  const std::string msg =
      ErrorOf([] { ReadCanonical(DataDir() / "malformed.jsonl"); });
  CHECK(msg.find("malformed.jsonl:3") != std::string::npos);
}

TEST_CASE("missing files are reported with their path") {
  const std::string msg =
      ErrorOf([] { ReadCanonical(DataDir() / "no_such_file.jsonl"); });
  CHECK(msg.find("no_such_file.jsonl") != std::string::npos);
}

TEST_CASE("null aspect and opinion become implicit spans") {
  const auto instances = ReadCanonical(DataDir() / "acos_null.jsonl");
  REQUIRE(instances.size() == 1);
  const auto &quads = instances[0].sentiments;
  CHECK(quads[0].aspect.implicit());
  CHECK(quads[0].opinion.implicit());
  CHECK(quads[1].aspect.implicit());
  CHECK_FALSE(quads[1].opinion.implicit());
  CHECK(Serialize(StructureOf(instances[0], Task::kAsqp)) ==
        "((category: laptop general (aspect: null) (opinion: null) "
        "(polarity: positive)) (category: laptop general (aspect: null) "
        "(opinion: again) (polarity: positive)))");
}

TEST_CASE("canonical write/read round trip") {
  const auto dir = testing::TempDir("canonical_rt");
  std::vector<CanonicalInstance> all;
  for (const char *t : {"ner", "re", "ee", "aste", "asqp"}) {
    all.push_back(testing::ReferenceInstance(t));
  }
  for (const auto &inst : ReadCanonical(DataDir() / "acos_null.jsonl")) {
    all.push_back(inst);
  }
  WriteCanonical(all, dir / "x.jsonl");
  CHECK(ReadCanonical(dir / "x.jsonl") == all);
}

TEST_CASE("multibyte text keeps its offsets") {
  const auto dir = testing::TempDir("utf8");
  const auto instances = ReadCanonical(DataDir() / "utf8.jsonl");
  REQUIRE(instances.size() == 1);
  WriteCanonical(instances, dir / "u.jsonl");
  const auto back = ReadCanonical(dir / "u.jsonl");
  REQUIRE(back == instances);
  for (const auto &e : back[0].entities) {
    CHECK(testing::Gen::Substr(back[0].text, e.span.start, e.span.end) ==
          e.span.text);
  }
}

TEST_CASE("convert the reference BIO sentence") {
  ConversionReport report;
  const auto out =
      ConvertConllBio(DataDir() / "conll_example.bio", &report);
  REQUIRE(out.size() == 1);
  const auto &inst = out[0];
  CHECK(inst.text == "Only France and Britain backed Fischler 's proposal .");
  REQUIRE(inst.entities.size() == 3);
  CHECK(inst.entities[0] == Entity{{5, 11, "France"}, "location"});
  CHECK(inst.entities[1] == Entity{{16, 23, "Britain"}, "location"});
  CHECK(inst.entities[2] == Entity{{31, 39, "Fischler"}, "person"});
  CHECK(ValidateStructure(inst).empty());
  CHECK(report.dangling_inside_tags == 0);
}

TEST_CASE("convert multi-column CoNLL with a dangling inside tag") {
  ConversionReport report;
  const auto out = ConvertConllBio(DataDir() / "conll_mixed.bio", &report);
  REQUIRE(out.size() == 3);
  CHECK(out[0].text == "EU rejects German call");
  CHECK(out[0].entities.size() == 2);
  CHECK(out[0].entities[1].category == "miscellaneous");
  REQUIRE(out[1].entities.size() == 1);
  CHECK(out[1].entities[0] == Entity{{0, 15, "Peter Blackburn"}, "person"});
  CHECK(IsEmptyTarget(out[2]));
  CHECK(report.dangling_inside_tags == 1);
  CHECK(report.sentences == 3);
  CHECK(report.entities == 3);
}

TEST_CASE("conversion preserves surface text") {
  std::istringstream in("Zürich B-LOC\nist O\nschön O\n\nx B-foo\ny I-bar\n");
  ConversionReport report;
  const auto out = ConvertConllBio(in, "s", &report);
  REQUIRE(out.size() == 2);
  CHECK(out[0].text == "Zürich ist schön");
  CHECK(out[0].entities[0].span == Span{0, 6, "Zürich"});
  CHECK(out[1].entities.size() == 2);
  CHECK(out[1].entities[0].category == "foo");
  CHECK(out[1].id == "s1");
  CHECK(report.dangling_inside_tags == 1);
  for (const auto &inst : out) CHECK(ValidateStructure(inst).empty());
}

TEST_CASE("low-resource sizes") {
  CHECK(LowResourceSize(1266, 0.05) == 63);
  CHECK(LowResourceSize(1266, 0.01) == 13);
  CHECK(LowResourceSize(1266, 0.10) == 127);
  CHECK(LowResourceSize(10, 0.01) == 1);
  CHECK(LowResourceSize(10, 0.25) == 2);  // 2.5 rounds to even
  CHECK(LowResourceSize(10, 0.35) == 4);  // 3.5 rounds to even
  CHECK(LowResourceSize(10, 1.0) == 10);
}

TEST_CASE("low-resource sampling") {
  std::vector<int> items(1266);
  for (int i = 0; i < 1266; ++i) items[static_cast<size_t>(i)] = i;
  const auto a = SampleLowResource(items, 0.05, 1);
  CHECK(a.size() == 63);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(a == SampleLowResource(items, 0.05, 1));
  CHECK(a != SampleLowResource(items, 0.05, 2));
  CHECK(SampleLowResource(items, 1.0, 3) == items);
  CHECK(SampleLowResource(std::vector<int>(10, 0), 0.01, 3).size() == 1);
  CHECK_THROWS_AS(SampleLowResource(items, 0.0, 1), Error);
  CHECK_THROWS_AS(SampleLowResource(items, 1.5, 1), Error);
}

TEST_CASE("compiled write/read round trip with stage filter") {
  testing::Gen gen(4);
  std::vector<CompiledExample> examples;
  for (int i = 0; i < 1000; ++i) {
    CompiledExample ex;
    ex.id = "ex" + std::to_string(i);
    ex.stage = gen.Pick(std::vector<Stage>{Stage::kEasy, Stage::kHard,
                                           Stage::kMain});
    if (ex.stage == Stage::kEasy) ex.skill = "re.skill" + std::to_string(gen.Int(1, 4));
    ex.input = "[HE] [Text] " + gen.Pick(testing::Words()) + " \"quoted\"\n";
    ex.target = Serialize(gen.Structure());
    if (gen.Coin()) ex.meta["parent_id"] = "p" + std::to_string(i);
    if (gen.Coin()) ex.meta["offset_shift"] = std::to_string(gen.Int(0, 99));
    examples.push_back(std::move(ex));
  }
  const auto dir = testing::TempDir("compiled_rt");
  WriteCompiled(examples, dir / "c.jsonl");
  CHECK(ReadCompiled(dir / "c.jsonl") == examples);

  const auto hard = ReadCompiled(dir / "c.jsonl", std::set{Stage::kHard});
  size_t expected = 0;
  for (const auto &ex : examples) expected += ex.stage == Stage::kHard;
  CHECK(hard.size() == expected);
  for (const auto &ex : hard) CHECK(ex.stage == Stage::kHard);
}

TEST_CASE("compiled record field order is stable") {
  CompiledExample ex{"a", Stage::kEasy, "ner.skill1", "in", "()", {{"k", "v"}}};
  CHECK(ToJson(ex).dump() ==
        R"j({"id":"a","stage":"easy","skill":"ner.skill1","input":"in",)j"
        R"j("target":"()","meta":{"k":"v"}})j");
}

TEST_CASE("predictions and schema files") {
  const auto dir = testing::TempDir("preds");
  std::vector<PredictionRecord> preds = {{"a", "((x: y))"}, {"b", "garbage ("}};
  WritePredictions(preds, dir / "p.jsonl");
  CHECK(ReadPredictions(dir / "p.jsonl") == preds);

  const Schema schema = testing::ReferenceSchema("ee");
  WriteSchema(schema, dir / "s.json");
  CHECK(ReadSchema(dir / "s.json") == schema);
  CHECK(schema.event_types.size() == 33);
  CHECK(schema.argument_roles.size() == 22);
}

TEST_CASE("stage names") {
  CHECK(StageFromName("hard") == Stage::kHard);
  CHECK_THROWS_AS(StageFromName("medium"), Error);
}

}  // namespace
}  // namespace selkit
