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

#ifndef SELKIT_PROMPT_H_
#define SELKIT_PROMPT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selkit/core_model.h"

namespace selkit {

// Hint tokens say what to extract.
enum class Hint {
  kEntityCategory,  // [HEC]
  kEntitySpan,      // [HES]
  kEntity,          // [HE]
  kRelation,        // [HR]
  kTrigger,         // [HT]
  kArgument,        // [HA]
  kCategory,        // [HC]
};

// Markers introduce schema entries and constraints. The enumeration order
// is the order in which schema groups are rendered.
enum class Marker {
  kCategory,  // [Cat]
  kEntity,    // [Ent]
  kRelation,  // [Rel]
  kTrigger,   // [Tri]
  kArgument,  // [Arg]
};

inline constexpr std::string_view kTextToken = "[Text]";

std::string_view HintToken(Hint hint);
std::string_view MarkerToken(Marker marker);
// Both throw Error for tokens outside the reserved vocabulary.
Hint HintFromToken(std::string_view token);
Marker MarkerFromToken(std::string_view token);

// Every reserved token, for registering as atomic vocabulary items.
std::vector<std::string> ReservedTokens();

struct Constraint {
  Marker marker = Marker::kEntity;
  std::string label;
  std::optional<std::string> span;  // rendered as "label: span"

  std::string Render() const;

  friend bool operator==(const Constraint &, const Constraint &) = default;
};

struct SchemaEntry {
  Marker marker = Marker::kEntity;
  std::string label;

  friend bool operator==(const SchemaEntry &, const SchemaEntry &) = default;
};

struct PromptSpec {
  std::vector<Hint> hints;
  std::optional<Constraint> constraint;
  std::vector<SchemaEntry> schema_entries;

  friend bool operator==(const PromptSpec &, const PromptSpec &) = default;
};

// hints, constraint, schema entries (grouped by marker in enum order and
// sorted by label within a group), "[Text]", text; single-space joined.
// Throws Error if hints is empty.
std::string BuildPrompt(const PromptSpec &spec, std::string_view text);

// Hints of the full task.
std::vector<Hint> MainHints(Task task);

// Schema entries of each marker group of a task. Sentiment tasks use fixed
// role-slot labels rather than the schema's inventories where the target
// language does.
std::vector<SchemaEntry> SchemaGroup(const Schema &schema, Marker marker);

// Prompt of the full task: main hints plus every relevant schema group.
PromptSpec MainPrompt(const Schema &schema);

}  // namespace selkit

#endif  // SELKIT_PROMPT_H_
