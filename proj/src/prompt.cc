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

#include "selkit/prompt.h"

#include <algorithm>
#include <array>

namespace selkit {
namespace {

constexpr std::array<std::pair<Hint, std::string_view>, 7> kHints = {{
    {Hint::kEntityCategory, "[HEC]"},
    {Hint::kEntitySpan, "[HES]"},
    {Hint::kEntity, "[HE]"},
    {Hint::kRelation, "[HR]"},
    {Hint::kTrigger, "[HT]"},
    {Hint::kArgument, "[HA]"},
    {Hint::kCategory, "[HC]"},
}};

constexpr std::array<std::pair<Marker, std::string_view>, 5> kMarkers = {{
    {Marker::kCategory, "[Cat]"},
    {Marker::kEntity, "[Ent]"},
    {Marker::kRelation, "[Rel]"},
    {Marker::kTrigger, "[Tri]"},
    {Marker::kArgument, "[Arg]"},
}};

std::vector<SchemaEntry> Entries(Marker marker,
                                 const std::set<std::string> &labels) {
  std::vector<SchemaEntry> out;
  for (const auto &label : labels) out.push_back({marker, label});
  return out;
}

}  // namespace

std::string_view HintToken(Hint hint) {
  for (const auto &[h, token] : kHints) {
    if (h == hint) return token;
  }
  throw Error("unknown hint");
}

std::string_view MarkerToken(Marker marker) {
  for (const auto &[m, token] : kMarkers) {
    if (m == marker) return token;
  }
  throw Error("unknown marker");
}

Hint HintFromToken(std::string_view token) {
  for (const auto &[h, t] : kHints) {
    if (t == token) return h;
  }
  throw Error("unknown hint token \"" + std::string(token) + "\"");
}

Marker MarkerFromToken(std::string_view token) {
  for (const auto &[m, t] : kMarkers) {
    if (t == token) return m;
  }
  throw Error("unknown marker token \"" + std::string(token) + "\"");
}

std::vector<std::string> ReservedTokens() {
  std::vector<std::string> out;
  for (const auto &[h, t] : kHints) out.emplace_back(t);
  for (const auto &[m, t] : kMarkers) out.emplace_back(t);
  out.emplace_back(kTextToken);
  return out;
}

std::string Constraint::Render() const {
  std::string out(MarkerToken(marker));
  out += ' ';
  out += label;
  if (span) out += ": " + *span;
  return out;
}

std::string BuildPrompt(const PromptSpec &spec, std::string_view text) {
  if (spec.hints.empty()) throw Error("prompt needs at least one hint");
  std::string out;
  for (Hint h : spec.hints) {
    out += HintToken(h);
    out += ' ';
  }
  if (spec.constraint) {
    out += spec.constraint->Render();
    out += ' ';
  }
  std::vector<SchemaEntry> entries = spec.schema_entries;
  std::sort(entries.begin(), entries.end(),
            [](const SchemaEntry &a, const SchemaEntry &b) {
              return std::tie(a.marker, a.label) < std::tie(b.marker, b.label);
            });
  for (const auto &e : entries) {
    out += MarkerToken(e.marker);
    out += ' ';
    out += e.label;
    out += ' ';
  }
  out += kTextToken;
  out += ' ';
  out += text;
  return out;
}

std::vector<Hint> MainHints(Task task) {
  switch (task) {
    case Task::kNer:
      return {Hint::kEntityCategory, Hint::kEntitySpan};
    case Task::kRe:
    case Task::kAste:
      return {Hint::kEntity, Hint::kRelation};
    case Task::kEe:
      return {Hint::kTrigger, Hint::kArgument};
    case Task::kAsqp:
      return {Hint::kCategory, Hint::kArgument};
  }
  throw Error("unknown task");
}

std::vector<SchemaEntry> SchemaGroup(const Schema &schema, Marker marker) {
  switch (schema.task) {
    case Task::kNer:
    case Task::kRe:
      if (marker == Marker::kEntity) {
        return Entries(marker, schema.entity_categories);
      }
      if (marker == Marker::kRelation) return Entries(marker, schema.relations);
      break;
    case Task::kEe:
      if (marker == Marker::kTrigger) {
        return Entries(marker, schema.event_types);
      }
      if (marker == Marker::kArgument) {
        return Entries(marker, schema.argument_roles);
      }
      break;
    case Task::kAste:
      if (marker == Marker::kEntity) {
        return Entries(marker, {"aspect", "opinion"});
      }
      if (marker == Marker::kRelation) {
        return Entries(marker, schema.polarities);
      }
      break;
    case Task::kAsqp:
      if (marker == Marker::kCategory) return {{marker, "category"}};
      if (marker == Marker::kArgument) {
        return Entries(marker, {"aspect", "opinion", "polarity"});
      }
      break;
  }
  return {};
}

PromptSpec MainPrompt(const Schema &schema) {
  PromptSpec spec;
  spec.hints = MainHints(schema.task);
  for (const auto &[marker, token] : kMarkers) {
    for (auto &e : SchemaGroup(schema, marker)) {
      spec.schema_entries.push_back(std::move(e));
    }
  }
  return spec;
}

}  // namespace selkit
