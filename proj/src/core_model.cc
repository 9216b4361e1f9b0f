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

#include "selkit/core_model.h"

#include <array>

#include "selkit/utf8.h"

namespace selkit {
namespace {

constexpr std::array<std::pair<Task, std::string_view>, 5> kTaskNames = {{
    {Task::kNer, "ner"},
    {Task::kRe, "re"},
    {Task::kEe, "ee"},
    {Task::kAste, "aste"},
    {Task::kAsqp, "asqp"},
}};

void CheckSpan(const Span &span, std::string_view text, int64_t text_len,
               bool allow_implicit, const std::string &what,
               std::vector<std::string> *out) {
  if (span.implicit()) {
    if (!allow_implicit) {
      out->push_back(what + ": implicit span not allowed here");
    } else if (span.text != kNullText) {
      out->push_back(what + ": implicit span must carry text \"null\"");
    }
    return;
  }
  if (span.start < 0 || span.end > text_len) {
    out->push_back(what + ": span [" + std::to_string(span.start) + ", " +
                   std::to_string(span.end) + ") out of range");
    return;
  }
  if (span.start >= span.end) {
    out->push_back(what + ": degenerate span [" + std::to_string(span.start) +
                   ", " + std::to_string(span.end) + ")");
    return;
  }
  std::string actual = CharSubstr(text, span.start, span.end);
  if (actual != span.text) {
    out->push_back(what + ": span text \"" + span.text +
                   "\" does not match \"" + actual + "\"");
  }
}

void CheckLabel(const std::string &label, const std::set<std::string> &allowed,
                const std::string &what, std::vector<std::string> *out) {
  if (label.empty()) {
    out->push_back(what + ": empty label");
  } else if (!allowed.contains(label)) {
    out->push_back(what + ": label \"" + label + "\" not in schema");
  }
}

bool UsesEntities(Task t) { return t == Task::kNer || t == Task::kRe; }

}  // namespace

std::string_view TaskName(Task task) {
  for (const auto &[t, name] : kTaskNames) {
    if (t == task) return name;
  }
  return "unknown";
}

Task TaskFromName(std::string_view name) {
  for (const auto &[t, n] : kTaskNames) {
    if (n == name) return t;
  }
  throw Error("unknown task \"" + std::string(name) + "\"");
}

std::set<std::string> Schema::AllLabels() const {
  std::set<std::string> labels = {"aspect", "opinion", "category",
                                  "polarity"};
  for (const auto *s : {&entity_categories, &relations, &event_types,
                        &argument_roles, &polarities}) {
    labels.insert(s->begin(), s->end());
  }
  return labels;
}

std::vector<std::string> ValidateSchema(const Schema &schema) {
  struct Slot {
    const char *name;
    const std::set<std::string> *values;
    bool relevant;
  };
  const Task t = schema.task;
  const Slot slots[] = {
      {"entity_categories", &schema.entity_categories, UsesEntities(t)},
      {"relations", &schema.relations, t == Task::kRe},
      {"event_types", &schema.event_types, t == Task::kEe},
      {"argument_roles", &schema.argument_roles, t == Task::kEe},
      {"aspect_categories", &schema.aspect_categories, t == Task::kAsqp},
      {"polarities", &schema.polarities,
       t == Task::kAste || t == Task::kAsqp},
  };
  std::vector<std::string> out;
  for (const auto &slot : slots) {
    if (slot.relevant && slot.values->empty()) {
      out.push_back(std::string(slot.name) + " must be non-empty for task " +
                    std::string(TaskName(t)));
    } else if (!slot.relevant && !slot.values->empty()) {
      out.push_back(std::string(slot.name) + " must be empty for task " +
                    std::string(TaskName(t)));
    }
  }
  for (const auto &p : schema.polarities) {
    if (!Polarities().contains(p)) {
      out.push_back("unknown polarity \"" + p + "\"");
    }
  }
  return out;
}

std::vector<std::string> ValidateStructure(const CanonicalInstance &inst) {
  std::vector<std::string> out;
  const int64_t len = CharLength(inst.text);
  const Task t = inst.task;

  if (!UsesEntities(t) && !inst.entities.empty()) {
    out.push_back("entities present for task " + std::string(TaskName(t)));
  }
  if (t != Task::kRe && !inst.relations.empty()) {
    out.push_back("relations present for task " + std::string(TaskName(t)));
  }
  if (t != Task::kEe && !inst.events.empty()) {
    out.push_back("events present for task " + std::string(TaskName(t)));
  }
  if (t != Task::kAste && t != Task::kAsqp && !inst.sentiments.empty()) {
    out.push_back("sentiments present for task " + std::string(TaskName(t)));
  }

  for (size_t i = 0; i < inst.entities.size(); ++i) {
    const auto &e = inst.entities[i];
    const std::string what = "entity " + std::to_string(i);
    CheckSpan(e.span, inst.text, len, false, what, &out);
    if (e.category.empty()) out.push_back(what + ": empty category");
  }
  for (size_t i = 0; i < inst.relations.size(); ++i) {
    const auto &r = inst.relations[i];
    const std::string what = "relation " + std::to_string(i);
    if (r.head >= inst.entities.size()) {
      out.push_back(what + ": dangling head index " + std::to_string(r.head));
    }
    if (r.tail >= inst.entities.size()) {
      out.push_back(what + ": dangling tail index " + std::to_string(r.tail));
    }
    if (r.relation.empty()) out.push_back(what + ": empty relation label");
  }
  for (size_t i = 0; i < inst.events.size(); ++i) {
    const auto &ev = inst.events[i];
    const std::string what = "event " + std::to_string(i);
    CheckSpan(ev.trigger.span, inst.text, len, false, what + " trigger", &out);
    if (ev.trigger.category.empty()) out.push_back(what + ": empty type");
    for (size_t j = 0; j < ev.arguments.size(); ++j) {
      const std::string awhat = what + " argument " + std::to_string(j);
      CheckSpan(ev.arguments[j].span, inst.text, len, false, awhat, &out);
      if (ev.arguments[j].role.empty()) out.push_back(awhat + ": empty role");
    }
  }
  for (size_t i = 0; i < inst.sentiments.size(); ++i) {
    const auto &s = inst.sentiments[i];
    const std::string what = "sentiment " + std::to_string(i);
    const bool quad = t == Task::kAsqp;
    CheckSpan(s.aspect, inst.text, len, quad, what + " aspect", &out);
    CheckSpan(s.opinion, inst.text, len, quad, what + " opinion", &out);
    if (quad && !s.category) out.push_back(what + ": missing category");
    if (!quad && s.category) out.push_back(what + ": unexpected category");
    if (!Polarities().contains(s.polarity)) {
      out.push_back(what + ": unknown polarity \"" + s.polarity + "\"");
    }
  }
  return out;
}

std::vector<std::string> ValidateInstance(const CanonicalInstance &inst,
                                          const Schema &schema) {
  std::vector<std::string> out = ValidateStructure(inst);
  if (inst.task != schema.task) {
    out.push_back("instance task " + std::string(TaskName(inst.task)) +
                  " does not match schema task " +
                  std::string(TaskName(schema.task)));
  }
  for (size_t i = 0; i < inst.entities.size(); ++i) {
    if (inst.entities[i].category.empty()) continue;
    CheckLabel(inst.entities[i].category, schema.entity_categories,
               "entity " + std::to_string(i), &out);
  }
  for (size_t i = 0; i < inst.relations.size(); ++i) {
    if (inst.relations[i].relation.empty()) continue;
    CheckLabel(inst.relations[i].relation, schema.relations,
               "relation " + std::to_string(i), &out);
  }
  for (size_t i = 0; i < inst.events.size(); ++i) {
    const auto &ev = inst.events[i];
    const std::string what = "event " + std::to_string(i);
    if (!ev.trigger.category.empty()) {
      CheckLabel(ev.trigger.category, schema.event_types, what, &out);
    }
    for (size_t j = 0; j < ev.arguments.size(); ++j) {
      if (ev.arguments[j].role.empty()) continue;
      CheckLabel(ev.arguments[j].role, schema.argument_roles,
                 what + " argument " + std::to_string(j), &out);
    }
  }
  for (size_t i = 0; i < inst.sentiments.size(); ++i) {
    const auto &s = inst.sentiments[i];
    const std::string what = "sentiment " + std::to_string(i);
    if (s.category) {
      CheckLabel(*s.category, schema.aspect_categories, what, &out);
    }
    if (Polarities().contains(s.polarity)) {
      CheckLabel(s.polarity, schema.polarities, what, &out);
    }
  }
  return out;
}

bool IsEmptyTarget(const CanonicalInstance &inst) {
  switch (inst.task) {
    case Task::kNer:
      return inst.entities.empty();
    case Task::kRe:
      return inst.entities.empty() && inst.relations.empty();
    case Task::kEe:
      return inst.events.empty();
    case Task::kAste:
    case Task::kAsqp:
      return inst.sentiments.empty();
  }
  return true;
}

}  // namespace selkit
