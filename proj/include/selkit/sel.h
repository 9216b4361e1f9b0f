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

#ifndef SELKIT_SEL_H_
#define SELKIT_SEL_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "selkit/core_model.h"

namespace selkit {

// Structural extraction language: a bracketed forest of labeled records.
//
//   structure := '(' node* ')'
//   node      := '(' label (': ' value)? node* ')'
//
// Sibling nodes are joined by one space, and a node's children follow its
// head after one space. Example:
//
//   ((location: France) (person: Fischler))
struct SelNode {
  std::string label;
  std::optional<std::string> value;
  std::vector<SelNode> children;

  friend bool operator==(const SelNode &, const SelNode &) = default;
};

struct SelStructure {
  std::vector<SelNode> roots;

  friend bool operator==(const SelStructure &, const SelStructure &) = default;
};

struct ParseDiagnostics {
  bool recovered = false;
  int dropped_fragments = 0;
  int auto_closed_parens = 0;
  std::vector<std::string> notes;

  bool clean() const { return !recovered; }
};

struct ParseResult {
  SelStructure structure;
  ParseDiagnostics diagnostics;
};

// A label or value is serializable when it is non-empty, holds no '(' or
// ')', has no leading/trailing whitespace, and has no whitespace other than
// single ' ' separators. Labels additionally may not contain ": " or end
// with ':'.
bool IsValidLabel(std::string_view label);
bool IsValidValue(std::string_view value);

// Throws Error if any node violates the text rules above.
std::string Serialize(const SelStructure &structure);

// Best-effort recursive-descent parse; never throws. Inside a node head the
// longest `known_labels` entry followed by ": " wins; otherwise the first
// ": " separates label from value. Missing closing parens at end of input
// are supplied and counted; text that is not part of a node is dropped and
// counted.
ParseResult Parse(std::string_view text,
                  const std::set<std::string> &known_labels = {});
ParseResult Parse(std::string_view text, const Schema &schema);

// Makes a span text serializable: deletes '(' and ')', collapses whitespace
// runs to one space and trims. Returns std::nullopt if nothing is left.
std::optional<std::string> NormalizeValue(std::string_view text);

// Target structure of an instance for `task`. Ordering is recomputed from
// offsets so annotation list order never matters; exact duplicate
// annotations collapse. If `normalized` is given it receives the number of
// span texts that needed NormalizeValue to change them.
//
// Throws Error when task != inst.task or a span normalizes to nothing.
SelStructure StructureOf(const CanonicalInstance &inst, Task task,
                         int *normalized = nullptr);

// Indented multi-line rendering for human inspection.
std::string RenderTree(const SelStructure &structure);

}  // namespace selkit

#endif  // SELKIT_SEL_H_
