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

#ifndef SELKIT_CORE_MODEL_H_
#define SELKIT_CORE_MODEL_H_

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace selkit {

// Raised for contract violations on inputs: unknown task names, dangling
// references, malformed records.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Task { kNer, kRe, kEe, kAste, kAsqp };

std::string_view TaskName(Task task);
Task TaskFromName(std::string_view name);  // throws Error

inline constexpr std::string_view kNullText = "null";

// Character span [start, end) into an instance text. The implicit span
// (ACOS-style absent aspect or opinion) is start = end = -1 with text "null".
struct Span {
  int64_t start = 0;
  int64_t end = 0;
  std::string text;

  static Span Implicit() { return Span{-1, -1, std::string(kNullText)}; }
  bool implicit() const { return start == -1 && end == -1; }

  friend bool operator==(const Span &, const Span &) = default;
  friend auto operator<=>(const Span &, const Span &) = default;
};

struct Entity {
  Span span;
  std::string category;

  friend bool operator==(const Entity &, const Entity &) = default;
  friend auto operator<=>(const Entity &, const Entity &) = default;
};

// Head and tail index into CanonicalInstance::entities.
struct RelationTriple {
  size_t head = 0;
  std::string relation;
  size_t tail = 0;

  friend bool operator==(const RelationTriple &,
                         const RelationTriple &) = default;
};

struct Argument {
  Span span;
  std::string role;

  friend bool operator==(const Argument &, const Argument &) = default;
  friend auto operator<=>(const Argument &, const Argument &) = default;
};

struct Event {
  Entity trigger;  // category is the event type
  std::vector<Argument> arguments;

  friend bool operator==(const Event &, const Event &) = default;
};

struct SentimentTuple {
  std::optional<std::string> category;  // present for ASQP only
  Span aspect;
  Span opinion;
  std::string polarity;

  friend bool operator==(const SentimentTuple &,
                         const SentimentTuple &) = default;
};

inline const std::set<std::string> &Polarities() {
  static const std::set<std::string> kPolarities = {"negative", "neutral",
                                                    "positive"};
  return kPolarities;
}

struct Schema {
  Task task = Task::kNer;
  std::set<std::string> entity_categories;
  std::set<std::string> relations;
  std::set<std::string> event_types;
  std::set<std::string> argument_roles;
  std::set<std::string> aspect_categories;
  std::set<std::string> polarities;

  // Every label a well-formed target for this schema may carry, including
  // the fixed role-slot labels used by the sentiment tasks.
  std::set<std::string> AllLabels() const;

  friend bool operator==(const Schema &, const Schema &) = default;
};

// Violations of the Schema invariant: relevant label sets non-empty,
// irrelevant ones empty.
std::vector<std::string> ValidateSchema(const Schema &schema);

struct CanonicalInstance {
  std::string id;
  Task task = Task::kNer;
  std::string text;
  std::vector<Entity> entities;
  std::vector<RelationTriple> relations;
  std::vector<Event> events;
  std::vector<SentimentTuple> sentiments;

  friend bool operator==(const CanonicalInstance &,
                         const CanonicalInstance &) = default;
};

// Structural checks only: span bounds, span/text agreement, dangling
// relation indices, task-irrelevant annotations, sentiment tuple shape.
std::vector<std::string> ValidateStructure(const CanonicalInstance &inst);

// ValidateStructure plus schema membership of every label. Empty iff the
// instance is well formed for `schema`.
std::vector<std::string> ValidateInstance(const CanonicalInstance &inst,
                                          const Schema &schema);

// True iff every annotation list relevant to the instance's task is empty.
// For RE the entity list counts: an RE target with entities is non-empty.
bool IsEmptyTarget(const CanonicalInstance &inst);

}  // namespace selkit

#endif  // SELKIT_CORE_MODEL_H_
