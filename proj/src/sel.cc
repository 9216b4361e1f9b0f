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

#include "selkit/sel.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "selkit/utf8.h"

namespace selkit {
namespace {

constexpr int kMaxDepth = 64;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsParen(char c) { return c == '(' || c == ')'; }

// Trims and collapses whitespace runs to a single ' '.
std::string Squeeze(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

bool IsValidText(std::string_view s) {
  if (s.empty() || s.front() == ' ' || s.back() == ' ') return false;
  char prev = 0;
  for (char c : s) {
    if (IsParen(c)) return false;
    if (IsSpace(c) && c != ' ') return false;
    if (c == ' ' && prev == ' ') return false;
    prev = c;
  }
  return true;
}

void SerializeNode(const SelNode &node, std::string *out) {
  if (!IsValidLabel(node.label)) {
    throw Error("unserializable label \"" + node.label + "\"");
  }
  out->push_back('(');
  out->append(node.label);
  if (node.value) {
    if (!IsValidValue(*node.value)) {
      throw Error("unserializable value \"" + *node.value + "\"");
    }
    out->append(": ");
    out->append(*node.value);
  }
  for (const auto &child : node.children) {
    out->push_back(' ');
    SerializeNode(child, out);
  }
  out->push_back(')');
}

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string> &known_labels)
      : text_(text), known_labels_(known_labels) {}

  ParseResult Run() {
    ParseResult result;
    SkipSpace();
    if (AtEnd()) {
      Note("empty output");
      diag_.recovered = true;
      result.diagnostics = std::move(diag_);
      return result;
    }
    size_t open = text_.find('(', pos_);
    if (open == std::string_view::npos) {
      Drop("no opening parenthesis");
      pos_ = text_.size();
    } else {
      if (open != pos_) Drop("text before structure");
      pos_ = open + 1;
      ParseChildren(&result.structure.roots, 0);
      SkipSpace();
      if (!AtEnd()) Drop("text after structure");
    }
    diag_.recovered =
        diag_.dropped_fragments > 0 || diag_.auto_closed_parens > 0;
    result.diagnostics = std::move(diag_);
    return result;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(text_[pos_])) ++pos_;
  }

  void Note(std::string note) { diag_.notes.push_back(std::move(note)); }

  void Drop(const std::string &why) {
    ++diag_.dropped_fragments;
    Note("dropped fragment at byte " + std::to_string(pos_) + ": " + why);
  }

  // Reads siblings up to and including the closing ')' of the enclosing
  // list. `depth` is the nesting level of that list.
  void ParseChildren(std::vector<SelNode> *out, int depth) {
    while (true) {
      SkipSpace();
      if (AtEnd()) {
        ++diag_.auto_closed_parens;
        Note("auto-closed parenthesis at depth " + std::to_string(depth));
        return;
      }
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        return;
      }
      if (c == '(') {
        ++pos_;
        if (auto node = ParseNode(depth + 1)) out->push_back(std::move(*node));
        continue;
      }
      Drop("stray text");
      while (!AtEnd() && !IsParen(text_[pos_])) ++pos_;
    }
  }

  // Called just past a node's '('.
  std::optional<SelNode> ParseNode(int depth) {
    if (depth > kMaxDepth) {
      Drop("nesting deeper than " + std::to_string(kMaxDepth));
      SkipBalanced();
      return std::nullopt;
    }
    const size_t head_start = pos_;
    while (!AtEnd() && !IsParen(text_[pos_])) ++pos_;
    const std::string head = Squeeze(text_.substr(head_start, pos_ - head_start));

    SelNode node;
    ParseChildren(&node.children, depth);
    if (!SplitHead(head, &node)) {
      Drop("node without a usable label");
      return std::nullopt;
    }
    return node;
  }

  // Consumes input up to the ')' that closes an already-opened node.
  void SkipBalanced() {
    int open = 1;
    while (!AtEnd() && open > 0) {
      if (text_[pos_] == '(') ++open;
      if (text_[pos_] == ')') --open;
      ++pos_;
    }
  }

  bool SplitHead(const std::string &head, SelNode *node) const {
    size_t best = 0;
    for (const auto &label : known_labels_) {
      if (label.size() > best && head.size() >= label.size() + 2 &&
          head.compare(0, label.size(), label) == 0 &&
          head.compare(label.size(), 2, ": ") == 0) {
        best = label.size();
      }
    }
    std::string label;
    std::string value;
    if (best > 0) {
      label = head.substr(0, best);
      value = head.substr(best + 2);
    } else if (size_t sep = head.find(": "); sep != std::string::npos) {
      label = head.substr(0, sep);
      value = head.substr(sep + 2);
    } else {
      label = head;
    }
    if (value.empty() && !label.empty() && label.back() == ':') {
      label.pop_back();
    }
    label = Squeeze(label);
    value = Squeeze(value);
    if (!IsValidLabel(label)) return false;
    node->label = std::move(label);
    if (!value.empty()) node->value = std::move(value);
    return true;
  }

  std::string_view text_;
  const std::set<std::string> &known_labels_;
  size_t pos_ = 0;
  ParseDiagnostics diag_;
};

// ---------------------------------------------------------------------------
// Target construction.

class ValueNormalizer {
 public:
  explicit ValueNormalizer(int *counter) : counter_(counter) {}

  std::string operator()(const Span &span) {
    auto value = NormalizeValue(span.text);
    if (!value) {
      throw Error("span text \"" + span.text + "\" is empty after removing "
                  "parentheses");
    }
    if (*value != span.text && counter_ != nullptr) ++*counter_;
    return *value;
  }

 private:
  int *counter_;
};

using SpanKey = std::pair<int64_t, int64_t>;

SpanKey KeyOf(const Span &s) { return {s.start, s.end}; }

// Entities become roots in text order; each relation hangs under its head
// entity's node, children ordered by tail position.
SelStructure EntityForest(const std::vector<Entity> &entities,
                          const std::vector<RelationTriple> &relations,
                          ValueNormalizer &norm) {
  using EntityKey = std::tuple<int64_t, int64_t, std::string>;
  auto key_of = [](const Entity &e) {
    return EntityKey{e.span.start, e.span.end, e.category};
  };

  std::map<EntityKey, const Entity *> unique;  // ordered by text position
  for (const auto &e : entities) unique.emplace(key_of(e), &e);
  std::map<EntityKey, size_t> slot;
  for (const auto &[key, e] : unique) slot.emplace(key, slot.size());

  // Children of one head: (tail start, tail end, relation, tail text).
  using ChildKey = std::tuple<int64_t, int64_t, std::string, std::string>;
  std::vector<std::set<ChildKey>> children(unique.size());
  for (const auto &r : relations) {
    if (r.head >= entities.size() || r.tail >= entities.size()) {
      throw Error("relation references a missing entity");
    }
    const Span &tail = entities[r.tail].span;
    children[slot.at(key_of(entities[r.head]))].insert(
        {tail.start, tail.end, r.relation, tail.text});
  }

  SelStructure out;
  size_t i = 0;
  for (const auto &[key, e] : unique) {
    SelNode node{e->category, norm(e->span), {}};
    for (const auto &[start, end, relation, text] : children[i++]) {
      node.children.push_back(SelNode{relation, norm(Span{start, end, text}), {}});
    }
    out.roots.push_back(std::move(node));
  }
  return out;
}

SelStructure EventForest(const std::vector<Event> &events,
                         ValueNormalizer &norm) {
  std::vector<Event> sorted = events;
  for (auto &ev : sorted) {
    std::sort(ev.arguments.begin(), ev.arguments.end());
    ev.arguments.erase(std::unique(ev.arguments.begin(), ev.arguments.end()),
                       ev.arguments.end());
  }
  std::sort(sorted.begin(), sorted.end(), [](const Event &a, const Event &b) {
    return std::tie(a.trigger, a.arguments) < std::tie(b.trigger, b.arguments);
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  SelStructure out;
  for (const auto &ev : sorted) {
    SelNode node{ev.trigger.category, norm(ev.trigger.span), {}};
    for (const auto &arg : ev.arguments) {
      node.children.push_back(SelNode{arg.role, norm(arg.span), {}});
    }
    out.roots.push_back(std::move(node));
  }
  return out;
}

SelStructure TripletForest(const std::vector<SentimentTuple> &tuples,
                           ValueNormalizer &norm) {
  std::vector<Entity> terms;
  std::vector<RelationTriple> links;
  for (const auto &t : tuples) {
    terms.push_back(Entity{t.aspect, "aspect"});
    terms.push_back(Entity{t.opinion, "opinion"});
    links.push_back(RelationTriple{terms.size() - 2, t.polarity,
                                   terms.size() - 1});
  }
  return EntityForest(terms, links, norm);
}

SelStructure QuadForest(const std::vector<SentimentTuple> &tuples,
                        ValueNormalizer &norm) {
  auto anchor = [](const SentimentTuple &t) -> int64_t {
    if (!t.aspect.implicit()) return t.aspect.start;
    if (!t.opinion.implicit()) return t.opinion.start;
    return -1;
  };
  auto key = [&](const SentimentTuple &t) {
    return std::make_tuple(anchor(t), KeyOf(t.aspect), KeyOf(t.opinion),
                           t.category.value_or(""), t.polarity);
  };
  std::vector<SentimentTuple> sorted = tuples;
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto &a, const auto &b) { return key(a) < key(b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  auto term = [&](const Span &s) {
    return s.implicit() ? std::string(kNullText) : norm(s);
  };
  SelStructure out;
  for (const auto &t : sorted) {
    SelNode node{"category", norm(Span{0, 0, t.category.value_or("")}), {}};
    node.children.push_back(SelNode{"aspect", term(t.aspect), {}});
    node.children.push_back(SelNode{"opinion", term(t.opinion), {}});
    node.children.push_back(SelNode{"polarity", t.polarity, {}});
    out.roots.push_back(std::move(node));
  }
  return out;
}

void RenderNode(const SelNode &node, int depth, std::string *out) {
  out->append(static_cast<size_t>(depth) * 2, ' ');
  out->append(node.label);
  if (node.value) out->append(": " + *node.value);
  out->push_back('\n');
  for (const auto &child : node.children) RenderNode(child, depth + 1, out);
}

}  // namespace

bool IsValidLabel(std::string_view label) {
  return IsValidText(label) && label.back() != ':';
}

bool IsValidValue(std::string_view value) { return IsValidText(value); }

std::string Serialize(const SelStructure &structure) {
  std::string out = "(";
  for (size_t i = 0; i < structure.roots.size(); ++i) {
    if (i > 0) out.push_back(' ');
    SerializeNode(structure.roots[i], &out);
  }
  out.push_back(')');
  return out;
}

ParseResult Parse(std::string_view text,
                  const std::set<std::string> &known_labels) {
  return Parser(text, known_labels).Run();
}

ParseResult Parse(std::string_view text, const Schema &schema) {
  return Parse(text, schema.AllLabels());
}

std::optional<std::string> NormalizeValue(std::string_view text) {
  std::string stripped;
  for (char c : text) {
    if (!IsParen(c)) stripped.push_back(c);
  }
  std::string out = Squeeze(stripped);
  if (out.empty()) return std::nullopt;
  return out;
}

SelStructure StructureOf(const CanonicalInstance &inst, Task task,
                         int *normalized) {
  if (task != inst.task) {
    throw Error("instance " + inst.id + " is a " +
                std::string(TaskName(inst.task)) + " instance, not " +
                std::string(TaskName(task)));
  }
  ValueNormalizer norm(normalized);
  switch (task) {
    case Task::kNer:
      return EntityForest(inst.entities, {}, norm);
    case Task::kRe:
      return EntityForest(inst.entities, inst.relations, norm);
    case Task::kEe:
      return EventForest(inst.events, norm);
    case Task::kAste:
      return TripletForest(inst.sentiments, norm);
    case Task::kAsqp:
      return QuadForest(inst.sentiments, norm);
  }
  throw Error("unknown task");
}

std::string RenderTree(const SelStructure &structure) {
  std::string out;
  for (const auto &root : structure.roots) RenderNode(root, 0, &out);
  return out;
}

}  // namespace selkit
