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

#ifndef SELKIT_DATASET_IO_H_
#define SELKIT_DATASET_IO_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "selkit/core_model.h"

namespace selkit {

// All files are UTF-8 with one JSON record per line.

enum class Stage { kEasy, kHard, kMain };

std::string_view StageName(Stage stage);
Stage StageFromName(std::string_view name);  // throws Error

// One row of a compiled training file: the full prompt+text input and the
// serialized target.
struct CompiledExample {
  std::string id;
  Stage stage = Stage::kMain;
  std::optional<std::string> skill;
  std::string input;
  std::string target;
  std::map<std::string, std::string> meta;

  friend bool operator==(const CompiledExample &,
                         const CompiledExample &) = default;
};

struct PredictionRecord {
  std::string id;
  std::string output;

  friend bool operator==(const PredictionRecord &,
                         const PredictionRecord &) = default;
};

using Json = nlohmann::ordered_json;

Json ToJson(const Schema &schema);
Json ToJson(const CanonicalInstance &inst);
Json ToJson(const CompiledExample &ex);
Json ToJson(const PredictionRecord &pred);

// Decoders throw Error describing the first problem found.
Schema SchemaFromJson(const Json &j);
CanonicalInstance InstanceFromJson(const Json &j);
CompiledExample CompiledFromJson(const Json &j);
PredictionRecord PredictionFromJson(const Json &j);

Schema ReadSchema(const std::filesystem::path &path);
void WriteSchema(const Schema &schema, const std::filesystem::path &path);

// Reads and structurally validates instances (span bounds and texts,
// relation indices). Errors name the line number or instance id.
std::vector<CanonicalInstance> ReadCanonical(const std::filesystem::path &path);
void WriteCanonical(const std::vector<CanonicalInstance> &instances,
                    const std::filesystem::path &path);

// `stages`, when given, keeps only examples of those stages.
std::vector<CompiledExample> ReadCompiled(
    const std::filesystem::path &path,
    const std::optional<std::set<Stage>> &stages = std::nullopt);
void WriteCompiled(const std::vector<CompiledExample> &examples,
                   const std::filesystem::path &path);
void WriteCompiled(const std::vector<CompiledExample> &examples,
                   std::ostream &out);

std::vector<PredictionRecord> ReadPredictions(
    const std::filesystem::path &path);
void WritePredictions(const std::vector<PredictionRecord> &preds,
                      const std::filesystem::path &path);

struct ConversionReport {
  int sentences = 0;
  int entities = 0;
  int dangling_inside_tags = 0;  // I-X with no open X run; started a new one
};

// Token-per-line BIO input: the first column is the token and the last
// column the tag; blank lines end sentences and -DOCSTART- lines are
// skipped. Tokens are joined by single spaces. CoNLL-2003 type codes map to
// full names (LOC -> location, PER -> person, ORG -> organization,
// MISC -> miscellaneous); any other type is lowercased.
std::vector<CanonicalInstance> ConvertConllBio(std::istream &in,
                                               const std::string &id_prefix,
                                               ConversionReport *report);
std::vector<CanonicalInstance> ConvertConllBio(
    const std::filesystem::path &path, ConversionReport *report);

// max(1, round-half-to-even(n * ratio)), capped at n.
size_t LowResourceSize(size_t n, double ratio);

// Uniform sample without replacement of LowResourceSize(|items|, ratio)
// items, in their original order. Throws Error unless 0 < ratio <= 1.
template <typename T>
std::vector<T> SampleLowResource(const std::vector<T> &items, double ratio,
                                 uint64_t seed) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw Error("low-resource ratio must be in (0, 1]");
  }
  std::vector<T> out;
  if (items.empty()) return out;
  std::mt19937_64 rng(seed);
  std::sample(items.begin(), items.end(), std::back_inserter(out),
              LowResourceSize(items.size(), ratio), rng);
  return out;
}

}  // namespace selkit

#endif  // SELKIT_DATASET_IO_H_
