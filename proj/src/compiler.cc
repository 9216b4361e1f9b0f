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

#include "selkit/hard.h"
#include "selkit/prompt.h"
#include "selkit/sel.h"
#include "selkit/skills.h"

namespace selkit {
namespace {

void WriteJsonFile(const Json &j, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << "\n";
  if (!out.flush()) throw Error("write to " + path.string() + " failed");
}

}  // namespace

void CheckConfig(const CompileConfig &config) {
  if (config.stages.empty()) throw Error("no stages requested");
  if (config.stages.contains(Stage::kHard)) {
    if (!config.m) throw Error("the hard stage needs an explicit m");
    if (*config.m < 1) throw Error("m must be at least 1");
  }
  if (config.low_resource_ratio) {
    const double r = *config.low_resource_ratio;
    if (!(r > 0.0 && r <= 1.0)) {
      throw Error("low-resource ratio must be in (0, 1]");
    }
  }
}

std::vector<CompiledExample> CompileMain(
    const std::vector<CanonicalInstance> &instances, const Schema &schema,
    int *normalized) {
  const PromptSpec prompt = MainPrompt(schema);
  std::vector<CompiledExample> out;
  out.reserve(instances.size());
  for (const auto &inst : instances) {
    int changed = 0;
    CompiledExample ex;
    ex.id = inst.id;
    ex.stage = Stage::kMain;
    ex.input = BuildPrompt(prompt, inst.text);
    ex.target = Serialize(StructureOf(inst, schema.task, &changed));
    if (changed > 0) ex.meta["normalized_spans"] = std::to_string(changed);
    if (normalized != nullptr) *normalized += changed;
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<CompiledExample> CompileEasy(
    const std::vector<CanonicalInstance> &instances, const Schema &schema) {
  std::vector<CompiledExample> out;
  for (const auto &inst : instances) {
    std::map<std::string, int> seen;
    for (auto &skill : Decompose(inst, schema)) {
      CompiledExample ex;
      ex.id = inst.id + "#" + skill.skill + "." +
              std::to_string(seen[skill.skill]++);
      ex.stage = Stage::kEasy;
      ex.skill = skill.skill;
      ex.input = BuildPrompt(skill.prompt_spec, inst.text);
      ex.target = Serialize(skill.target);
      ex.meta["parent_id"] = inst.id;
      if (skill.prompt_spec.constraint) {
        ex.meta["constraint"] = skill.prompt_spec.constraint->Render();
      }
      out.push_back(std::move(ex));
    }
  }
  return out;
}

std::vector<CompiledExample> CompileHard(
    const std::vector<CanonicalInstance> &instances, const Schema &schema,
    int m, uint64_t seed) {
  const PromptSpec prompt = MainPrompt(schema);
  std::vector<HardInstance> hard =
      BuildHardSet(instances, m, seed, schema.task);
  std::vector<CompiledExample> out;
  out.reserve(hard.size());
  for (size_t i = 0; i < hard.size(); ++i) {
    const HardInstance &h = hard[i];
    CompiledExample ex;
    ex.id = h.base_id + "#hard." + std::to_string(i % static_cast<size_t>(m));
    ex.stage = Stage::kHard;
    ex.input = BuildPrompt(prompt, h.text);
    ex.target = Serialize(h.target);
    ex.meta["base_id"] = h.base_id;
    ex.meta["partner_id"] = h.partner_id;
    ex.meta["offset_shift"] = std::to_string(h.offset_shift);
    out.push_back(std::move(ex));
  }
  return out;
}

CompiledStages Compile(const CompileConfig &config,
                       std::vector<CanonicalInstance> instances,
                       const Schema &schema) {
  CheckConfig(config);
  if (schema.task != config.task) {
    throw Error("schema is for task " + std::string(TaskName(schema.task)) +
                " but task " + std::string(TaskName(config.task)) +
                " was requested");
  }
  if (auto problems = ValidateSchema(schema); !problems.empty()) {
    throw Error("invalid schema: " + problems.front());
  }
  for (const auto &inst : instances) {
    if (auto problems = ValidateInstance(inst, schema); !problems.empty()) {
      throw Error("instance " + inst.id + ": " + problems.front());
    }
  }
  if (config.low_resource_ratio) {
    instances =
        SampleLowResource(instances, *config.low_resource_ratio, config.seed);
  }

  CompiledStages result;
  CompileSummary &summary = result.summary;
  summary.instances = instances.size();
  for (const auto &inst : instances) {
    if (IsEmptyTarget(inst)) ++summary.empty_targets;
  }
  if (config.stages.contains(Stage::kEasy)) {
    result.examples[Stage::kEasy] = CompileEasy(instances, schema);
  }
  if (config.stages.contains(Stage::kHard)) {
    result.examples[Stage::kHard] =
        CompileHard(instances, schema, *config.m, config.seed);
  }
  if (config.stages.contains(Stage::kMain)) {
    result.examples[Stage::kMain] =
        CompileMain(instances, schema, &summary.normalized_spans);
  } else {
    CompileMain(instances, schema, &summary.normalized_spans);
  }
  for (const auto &[stage, examples] : result.examples) {
    summary.per_stage[stage] = examples.size();
    for (const auto &ex : examples) {
      if (ex.skill) ++summary.per_skill[*ex.skill];
    }
  }
  return result;
}

CompileSummary RunCompile(const CompileConfig &config) {
  CheckConfig(config);
  const Schema schema = ReadSchema(config.schema_path);
  std::vector<CanonicalInstance> instances;
  for (const auto &path : config.inputs) {
    for (auto &inst : ReadCanonical(path)) instances.push_back(std::move(inst));
  }
  CompiledStages compiled = Compile(config, std::move(instances), schema);

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec || !std::filesystem::is_directory(config.output_dir)) {
    throw Error("cannot create output directory " +
                config.output_dir.string());
  }
  CompileSummary &summary = compiled.summary;
  if (config.merge_stages) {
    std::vector<CompiledExample> merged;
    for (auto &[stage, examples] : compiled.examples) {
      for (auto &ex : examples) merged.push_back(std::move(ex));
    }
    const auto path = config.output_dir / "merged.jsonl";
    WriteCompiled(merged, path);
    summary.files.push_back(path);
  } else {
    for (const auto &[stage, examples] : compiled.examples) {
      const auto path =
          config.output_dir / (std::string(StageName(stage)) + ".jsonl");
      WriteCompiled(examples, path);
      summary.files.push_back(path);
    }
  }
  WriteJsonFile(ToJson(summary), config.output_dir / "summary.json");
  WriteJsonFile(ToJson(config), config.output_dir / "manifest.json");
  return summary;
}

Json ToJson(const CompileConfig &config) {
  Json inputs = Json::array();
  for (const auto &p : config.inputs) inputs.push_back(p.string());
  Json stages = Json::array();
  for (Stage s : config.stages) stages.push_back(StageName(s));
  Json m = nullptr;
  if (config.m) m = *config.m;
  Json ratio = nullptr;
  if (config.low_resource_ratio) ratio = *config.low_resource_ratio;
  return Json{{"task", TaskName(config.task)},
              {"schema", config.schema_path.string()},
              {"inputs", std::move(inputs)},
              {"output_dir", config.output_dir.string()},
              {"stages", std::move(stages)},
              {"m", m},
              {"seed", config.seed},
              {"low_resource_ratio", ratio},
              {"merge_stages", config.merge_stages}};
}

Json ToJson(const CompileSummary &summary) {
  Json stages = Json::object();
  for (const auto &[stage, n] : summary.per_stage) {
    stages[std::string(StageName(stage))] = n;
  }
  Json skills = Json::object();
  for (const auto &[skill, n] : summary.per_skill) skills[skill] = n;
  Json files = Json::array();
  for (const auto &f : summary.files) files.push_back(f.filename().string());
  return Json{{"instances", summary.instances},
              {"empty_targets", summary.empty_targets},
              {"empty_target_ratio", summary.empty_target_ratio()},
              {"normalized_spans", summary.normalized_spans},
              {"stages", std::move(stages)},
              {"skills", std::move(skills)},
              {"files", std::move(files)}};
}

std::string Inspect(const CompiledExample &example,
                    const std::optional<Schema> &schema) {
  std::ostringstream out;
  out << "id:     " << example.id << "\n"
      << "stage:  " << StageName(example.stage) << "\n";
  if (example.skill) out << "skill:  " << *example.skill << "\n";
  for (const auto &[k, v] : example.meta) {
    out << "meta:   " << k << " = " << v << "\n";
  }
  out << "input:  " << example.input << "\n"
      << "target: " << example.target << "\n";
  ParseResult parsed = schema ? Parse(example.target, *schema)
                              : Parse(example.target);
  out << "tree:\n";
  std::istringstream tree(RenderTree(parsed.structure));
  for (std::string line; std::getline(tree, line);) {
    out << "  " << line << "\n";
  }
  const bool round_trip = parsed.diagnostics.clean() &&
                          Serialize(parsed.structure) == example.target;
  out << "round trip: " << (round_trip ? "ok" : "MISMATCH") << "\n";
  if (!parsed.diagnostics.clean()) {
    out << "parse: dropped " << parsed.diagnostics.dropped_fragments
        << ", auto-closed " << parsed.diagnostics.auto_closed_parens << "\n";
  }
  return out.str();
}

}  // namespace selkit
