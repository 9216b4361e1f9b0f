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

#include "selkit/skills.h"

#include <algorithm>
#include <utility>

namespace selkit {
namespace {

SelNode Bare(const SelNode &node, bool keep_value) {
  return SelNode{node.label, keep_value ? node.value : std::nullopt, {}};
}

void PushUnique(std::vector<SelNode> *out, SelNode node) {
  if (std::find(out->begin(), out->end(), node) == out->end()) {
    out->push_back(std::move(node));
  }
}


class Builder {
 public:
  Builder(const CanonicalInstance &inst, const Schema &schema)
      : inst_(inst), schema_(schema), main_(StructureOf(inst, inst.task)) {}

  std::vector<SkillInstance> Run() {
    switch (inst_.task) {
      case Task::kNer:
        Ner();
        break;
      case Task::kRe:
      case Task::kAste:
        Relational();
        break;
      case Task::kEe:
        Events();
        break;
      case Task::kAsqp:
        Quads();
        break;
    }
    return std::move(out_);
  }

 private:
  void Emit(int skill, std::vector<Hint> hints,
            std::optional<Constraint> constraint,
            std::vector<SchemaEntry> schema_entries,
            std::vector<SelNode> roots) {
    SkillInstance s;
    s.parent_id = inst_.id;
    s.skill = std::string(TaskName(inst_.task)) + ".skill" +
              std::to_string(skill);
    s.prompt_spec = PromptSpec{std::move(hints), std::move(constraint),
                               std::move(schema_entries)};
    s.target.roots = std::move(roots);
    out_.push_back(std::move(s));
  }

  // Distinct (label, value) heads in order of first appearance.
  std::vector<std::pair<std::string, std::optional<std::string>>> Heads(
      bool with_children_only) const {
    std::vector<std::pair<std::string, std::optional<std::string>>> heads;
    for (const auto &root : main_.roots) {
      if (with_children_only && root.children.empty()) continue;
      std::pair key{root.label, root.value};
      if (std::find(heads.begin(), heads.end(), key) == heads.end()) {
        heads.push_back(std::move(key));
      }
    }
    return heads;
  }

  std::vector<SelNode> RootsMatching(const std::string &label,
                                     const std::optional<std::string> &value,
                                     bool with_children_only) const {
    std::vector<SelNode> out;
    for (const auto &root : main_.roots) {
      if (root.label != label || root.value != value) continue;
      if (with_children_only && root.children.empty()) continue;
      out.push_back(root);
    }
    return out;
  }

  void Ner() {
    std::vector<SelNode> categories;
    for (const auto &root : main_.roots) {
      PushUnique(&categories, Bare(root, false));
    }
    Emit(1, {Hint::kEntityCategory}, std::nullopt,
         SchemaGroup(schema_, Marker::kEntity), categories);
    for (const auto &c : categories) {
      std::vector<SelNode> roots;
      for (const auto &root : main_.roots) {
        if (root.label == c.label) roots.push_back(root);
      }
      Emit(2, {Hint::kEntityCategory, Hint::kEntitySpan},
           Constraint{Marker::kEntity, c.label, std::nullopt}, {},
           std::move(roots));
    }
  }

  // RE and ASTE share a shape: term nodes with relation children hanging
  // under the head term.
  void Relational() {
    const std::vector<Hint> both = {Hint::kEntity, Hint::kRelation};

    std::vector<SelNode> terms;
    for (const auto &root : main_.roots) terms.push_back(Bare(root, true));
    Emit(1, {Hint::kEntity}, std::nullopt, SchemaGroup(schema_, Marker::kEntity),
         std::move(terms));

    for (const auto &[label, value] : Heads(true)) {
      Emit(2, both, Constraint{Marker::kEntity, label, value},
           SchemaGroup(schema_, Marker::kRelation),
           RootsMatching(label, value, true));
    }

    std::vector<SelNode> relations;
    for (const auto &root : main_.roots) {
      for (const auto &child : root.children) {
        PushUnique(&relations, Bare(child, false));
      }
    }
    Emit(3, {Hint::kRelation}, std::nullopt,
         SchemaGroup(schema_, Marker::kRelation), relations);

    for (const auto &r : relations) {
      std::vector<SelNode> roots;
      for (const auto &root : main_.roots) {
        SelNode head = Bare(root, true);
        for (const auto &child : root.children) {
          if (child.label == r.label) head.children.push_back(child);
        }
        if (!head.children.empty()) roots.push_back(std::move(head));
      }
      Emit(4, both, Constraint{Marker::kRelation, r.label, std::nullopt},
           SchemaGroup(schema_, Marker::kEntity), std::move(roots));
    }
  }

  void Events() {
    std::vector<SelNode> triggers;
    for (const auto &root : main_.roots) triggers.push_back(Bare(root, true));
    Emit(1, {Hint::kTrigger}, std::nullopt, SchemaGroup(schema_, Marker::kTrigger),
         std::move(triggers));
    for (const auto &[label, value] : Heads(false)) {
      Emit(2, {Hint::kTrigger, Hint::kArgument},
           Constraint{Marker::kTrigger, label, value},
           SchemaGroup(schema_, Marker::kArgument),
           RootsMatching(label, value, false));
    }
  }

  void Quads() {
    const SchemaEntry category{Marker::kCategory, "category"};
    std::vector<SelNode> categories;
    for (const auto &root : main_.roots) {
      PushUnique(&categories, Bare(root, true));
    }
    Emit(1, {Hint::kCategory}, std::nullopt, {category}, categories);

    int skill = 2;
    for (const char *slot : {"aspect", "opinion", "polarity"}) {
      std::vector<SelNode> roots;
      for (const auto &root : main_.roots) {
        SelNode node = Bare(root, true);
        for (const auto &child : root.children) {
          if (child.label == slot) node.children.push_back(child);
        }
        PushUnique(&roots, std::move(node));
      }
      Emit(skill++, {Hint::kCategory, Hint::kArgument}, std::nullopt,
           {category, {Marker::kArgument, slot}}, std::move(roots));
    }
  }

  const CanonicalInstance &inst_;
  const Schema &schema_;
  const SelStructure main_;
  std::vector<SkillInstance> out_;
};

}  // namespace

std::vector<SkillInstance> Decompose(const CanonicalInstance &inst,
                                     const Schema &schema) {
  if (inst.task != schema.task) {
    throw Error("instance " + inst.id + " does not belong to a " +
                std::string(TaskName(schema.task)) + " schema");
  }
  return Builder(inst, schema).Run();
}

}  // namespace selkit
