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

#ifndef SELKIT_COMPILER_H_
#define SELKIT_COMPILER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selkit/core_model.h"
#include "selkit/dataset_io.h"

namespace selkit {

struct CompileConfig {
  Task task = Task::kNer;
  std::filesystem::path schema_path;
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output_dir;
  std::set<Stage> stages;
  std::optional<int> m;  // required when the hard stage is requested
  uint64_t seed = 42;
  std::optional<double> low_resource_ratio;
  bool merge_stages = false;
};

// Throws Error on an invalid combination of settings.
void CheckConfig(const CompileConfig &config);

struct CompileSummary {
  size_t instances = 0;
  size_t empty_targets = 0;
  int normalized_spans = 0;
  std::map<Stage, size_t> per_stage;
  std::map<std::string, size_t> per_skill;
  std::vector<std::filesystem::path> files;

  double empty_target_ratio() const {
    return instances == 0 ? 0.0
                          : static_cast<double>(empty_targets) /
                                static_cast<double>(instances);
  }
};

struct CompiledStages {
  std::map<Stage, std::vector<CompiledExample>> examples;
  CompileSummary summary;
};

// The three stage builders. Instances must already be valid for `schema`.
std::vector<CompiledExample> CompileMain(
    const std::vector<CanonicalInstance> &instances, const Schema &schema,
    int *normalized = nullptr);
std::vector<CompiledExample> CompileEasy(
    const std::vector<CanonicalInstance> &instances, const Schema &schema);
std::vector<CompiledExample> CompileHard(
    const std::vector<CanonicalInstance> &instances, const Schema &schema,
    int m, uint64_t seed);

// In-memory compilation of the requested stages. Validates every instance
// against the schema and applies low-resource sampling first.
CompiledStages Compile(const CompileConfig &config,
                       std::vector<CanonicalInstance> instances,
                       const Schema &schema);

// Reads inputs, compiles and writes one file per stage (or merged.jsonl),
// summary.json and manifest.json into config.output_dir.
CompileSummary RunCompile(const CompileConfig &config);

Json ToJson(const CompileConfig &config);
Json ToJson(const CompileSummary &summary);

// Human-readable view of one compiled example: metadata, input, target,
// parsed target tree and whether the tree re-serializes to the target.
std::string Inspect(const CompiledExample &example,
                    const std::optional<Schema> &schema = std::nullopt);

}  // namespace selkit

#endif  // SELKIT_COMPILER_H_
