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

#include "selkit/scorer.h"

#include <cstdio>
#include <sstream>
#include <utility>

#include "selkit/utf8.h"

namespace selkit {
namespace {

constexpr size_t kMaxNotes = 200;
constexpr char kSep = '\x1f';
constexpr std::string_view kUnknownType = "unknown";

// Character start offsets of every (possibly overlapping) occurrence.
std::vector<int64_t> Occurrences(const std::string &text,
                                 const std::string &needle) {
  std::vector<int64_t> out;
  if (needle.empty()) return out;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    out.push_back(CharOffset(text, pos));
  }
  return out;
}

class Grounder {
 public:
  Grounder(const std::string &text, GroundingReport *report)
      : text_(text), report_(report) {}

  using Counters = std::map<std::pair<std::string, std::string>, size_t>;

  // Next unconsumed occurrence of `value` for mentions labeled `label`.
  GroundedSpan Consume(const std::string &value, const std::string &label,
                       Counters *counters) {
    size_t &next = (*counters)[{value, label}];
    GroundedSpan span = At(value, next);
    ++next;
    Count(span, label);
    return span;
  }

  GroundedSpan Leftmost(const std::string &value, const std::string &label) {
    GroundedSpan span = At(value, 0);
    Count(span, label);
    return span;
  }

  void Count(const GroundedSpan &span, const std::string &label) {
    ++report_->mentions;
    if (!span.grounded) {
      ++report_->ungrounded;
      report_->notes.push_back("ungrounded " + label + " \"" + span.text +
                               "\"");
    }
  }

  Counters global;

 private:
  GroundedSpan At(const std::string &value, size_t k) {
    GroundedSpan span{value, -1, -1, false};
    auto &occ = cache_[value];
    if (!occ) occ = Occurrences(text_, value);
    if (k < occ->size()) {
      span.start = (*occ)[k];
      span.end = span.start + CharLength(value);
      span.grounded = true;
    }
    return span;
  }

  const std::string &text_;
  GroundingReport *report_;
  std::map<std::string, std::optional<std::vector<int64_t>>> cache_;
};

// Entity roots with their relation children, shared by RE and ASTE.
struct TermNode {
  const SelNode *node;
  GroundedEntity entity;
};

std::vector<TermNode> GroundTerms(const SelStructure &parsed, Grounder &g,
                                  GroundingReport *report) {
  std::vector<TermNode> terms;
  for (const auto &root : parsed.roots) {
    if (!root.value) {
      report->notes.push_back("valueless node \"" + root.label + "\" ignored");
      continue;
    }
    terms.push_back(
        {&root, GroundedEntity{g.Consume(*root.value, root.label, &g.global),
                               root.label}});
  }
  return terms;
}

GroundedEntity ResolveTail(const std::string &value,
                           const std::vector<TermNode> &terms,
                           const std::string &preferred_label, Grounder &g) {
  const GroundedEntity *fallback = nullptr;
  for (const auto &t : terms) {
    if (!t.entity.span.grounded || t.entity.span.text != value) continue;
    if (preferred_label.empty() || t.entity.category == preferred_label) {
      return t.entity;
    }
    if (fallback == nullptr) fallback = &t.entity;
  }
  if (fallback != nullptr) return *fallback;
  return GroundedEntity{g.Leftmost(value, "tail"), std::string(kUnknownType)};
}

void GroundRelational(const SelStructure &parsed, Grounder &g,
                      GroundedPrediction *out, bool sentiment,
                      bool with_relations) {
  std::vector<TermNode> terms = GroundTerms(parsed, g, &out->diagnostics);
  for (const auto &t : terms) {
    if (!sentiment) out->entities.push_back(t.entity);
    if (!with_relations) continue;
    for (const auto &child : t.node->children) {
      if (!child.value) continue;
      GroundedEntity tail =
          ResolveTail(*child.value, terms, sentiment ? "opinion" : "", g);
      if (sentiment) {
        out->sentiments.push_back(GroundedSentiment{
            std::nullopt, t.entity.span, tail.span, child.label});
      } else {
        out->relations.push_back(
            GroundedRelation{t.entity, child.label, std::move(tail)});
      }
    }
  }
}

void GroundEvents(const SelStructure &parsed, Grounder &g,
                  GroundedPrediction *out) {
  for (const auto &root : parsed.roots) {
    if (!root.value) {
      out->diagnostics.notes.push_back("valueless trigger \"" + root.label +
                                       "\" ignored");
      continue;
    }
    GroundedEvent ev;
    ev.trigger = GroundedEntity{g.Consume(*root.value, root.label, &g.global),
                                root.label};
    Grounder::Counters local;
    for (const auto &child : root.children) {
      if (!child.value) continue;
      ev.arguments.push_back(
          GroundedArgument{g.Consume(*child.value, child.label, &local),
                           child.label});
    }
    out->events.push_back(std::move(ev));
  }
}

void GroundQuads(const SelStructure &parsed, Grounder &g,
                 GroundedPrediction *out) {
  for (const auto &root : parsed.roots) {
    GroundedSentiment s;
    s.category = root.value.value_or("");
    bool seen_aspect = false, seen_opinion = false, seen_polarity = false;
    for (const auto &child : root.children) {
      const std::string value = child.value.value_or("");
      if (child.label == "aspect" && !seen_aspect) {
        s.aspect.text = value;
        seen_aspect = true;
      } else if (child.label == "opinion" && !seen_opinion) {
        s.opinion.text = value;
        seen_opinion = true;
      } else if (child.label == "polarity" && !seen_polarity) {
        s.polarity = value;
        seen_polarity = true;
      }
    }
    for (GroundedSpan *span : {&s.aspect, &s.opinion}) {
      if (span->text == kNullText || span->text.empty()) continue;
      *span = g.Leftmost(span->text, span == &s.aspect ? "aspect" : "opinion");
    }
    out->sentiments.push_back(std::move(s));
  }
}

std::string Join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto &p : parts) {
    if (!out.empty()) out.push_back(kSep);
    out += p;
  }
  return out;
}

std::string SpanKey(int64_t start, int64_t end) {
  return std::to_string(start) + ":" + std::to_string(end);
}

std::string SpanKey(const Span &s) { return SpanKey(s.start, s.end); }

std::string SpanKey(const GroundedSpan &s) {
  if (!s.grounded) return "?" + s.text;
  return SpanKey(s.start, s.end);
}

std::string QuadText(const Span &s) {
  if (s.implicit()) return std::string(kNullText);
  return NormalizeValue(s.text).value_or("");
}

double Ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

GroundedPrediction Ground(const SelStructure &parsed, const std::string &text,
                          const Schema &schema, Task task) {
  (void)schema;
  GroundedPrediction out;
  Grounder g(text, &out.diagnostics);
  switch (task) {
    case Task::kNer:
    case Task::kRe:
      GroundRelational(parsed, g, &out, false, task == Task::kRe);
      break;
    case Task::kAste:
      GroundRelational(parsed, g, &out, true, true);
      break;
    case Task::kEe:
      GroundEvents(parsed, g, &out);
      break;
    case Task::kAsqp:
      GroundQuads(parsed, g, &out);
      break;
  }
  return out;
}

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kEntity:
      return "entity";
    case Metric::kRelationStrict:
      return "relation_strict";
    case Metric::kTrigger:
      return "trigger";
    case Metric::kArgument:
      return "argument";
    case Metric::kTriplet:
      return "triplet";
    case Metric::kQuad:
      return "quad";
  }
  return "unknown";
}

std::vector<Metric> MetricsFor(Task task) {
  switch (task) {
    case Task::kNer:
      return {Metric::kEntity};
    case Task::kRe:
      return {Metric::kEntity, Metric::kRelationStrict};
    case Task::kEe:
      return {Metric::kTrigger, Metric::kArgument};
    case Task::kAste:
      return {Metric::kTriplet};
    case Task::kAsqp:
      return {Metric::kQuad};
  }
  return {};
}

std::set<std::string> GoldKeys(const CanonicalInstance &gold, Metric metric) {
  std::set<std::string> keys;
  switch (metric) {
    case Metric::kEntity:
      for (const auto &e : gold.entities) {
        keys.insert(Join({SpanKey(e.span), e.category}));
      }
      break;
    case Metric::kRelationStrict:
      for (const auto &r : gold.relations) {
        if (r.head >= gold.entities.size() || r.tail >= gold.entities.size()) {
          continue;
        }
        const Entity &h = gold.entities[r.head];
        const Entity &t = gold.entities[r.tail];
        keys.insert(Join({SpanKey(h.span), h.category, r.relation,
                          SpanKey(t.span), t.category}));
      }
      break;
    case Metric::kTrigger:
      for (const auto &ev : gold.events) {
        keys.insert(Join({SpanKey(ev.trigger.span), ev.trigger.category}));
      }
      break;
    case Metric::kArgument:
      for (const auto &ev : gold.events) {
        for (const auto &a : ev.arguments) {
          keys.insert(Join({ev.trigger.category, a.role, SpanKey(a.span)}));
        }
      }
      break;
    case Metric::kTriplet:
      for (const auto &s : gold.sentiments) {
        keys.insert(Join({SpanKey(s.aspect), SpanKey(s.opinion), s.polarity}));
      }
      break;
    case Metric::kQuad:
      for (const auto &s : gold.sentiments) {
        keys.insert(Join({s.category.value_or(""), QuadText(s.aspect),
                          QuadText(s.opinion), s.polarity}));
      }
      break;
  }
  return keys;
}

std::set<std::string> PredictedKeys(const GroundedPrediction &pred,
                                    Metric metric) {
  std::set<std::string> keys;
  switch (metric) {
    case Metric::kEntity:
      for (const auto &e : pred.entities) {
        keys.insert(Join({SpanKey(e.span), e.category}));
      }
      break;
    case Metric::kRelationStrict:
      for (const auto &r : pred.relations) {
        keys.insert(Join({SpanKey(r.head.span), r.head.category, r.relation,
                          SpanKey(r.tail.span), r.tail.category}));
      }
      break;
    case Metric::kTrigger:
      for (const auto &ev : pred.events) {
        keys.insert(Join({SpanKey(ev.trigger.span), ev.trigger.category}));
      }
      break;
    case Metric::kArgument:
      for (const auto &ev : pred.events) {
        for (const auto &a : ev.arguments) {
          keys.insert(Join({ev.trigger.category, a.role, SpanKey(a.span)}));
        }
      }
      break;
    case Metric::kTriplet:
      for (const auto &s : pred.sentiments) {
        keys.insert(Join({SpanKey(s.aspect), SpanKey(s.opinion), s.polarity}));
      }
      break;
    case Metric::kQuad:
      for (const auto &s : pred.sentiments) {
        keys.insert(Join({s.category.value_or(""), s.aspect.text,
                          s.opinion.text, s.polarity}));
      }
      break;
  }
  return keys;
}

double MetricCounts::precision() const {
  if (n_pred == 0 && n_gold == 0) return 1.0;
  return Ratio(tp, n_pred);
}

double MetricCounts::recall() const {
  if (n_pred == 0 && n_gold == 0) return 1.0;
  return Ratio(tp, n_gold);
}

double MetricCounts::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

ScoreReport Score(const std::vector<CanonicalInstance> &gold,
                  const std::vector<PredictionRecord> &preds, Task task,
                  const Schema &schema) {
  std::map<std::string, const CanonicalInstance *> by_id;
  for (const auto &g : gold) {
    if (!by_id.emplace(g.id, &g).second) {
      throw Error("duplicate gold id " + g.id);
    }
  }
  std::map<std::string, const PredictionRecord *> pred_by_id;
  std::vector<std::string> unknown;
  for (const auto &p : preds) {
    if (!by_id.contains(p.id)) {
      unknown.push_back(p.id);
    } else if (!pred_by_id.emplace(p.id, &p).second) {
      throw Error("duplicate prediction id " + p.id);
    }
  }
  if (!unknown.empty()) {
    std::string msg = "predictions reference unknown ids:";
    for (const auto &id : unknown) msg += " " + id;
    throw Error(msg);
  }

  const std::set<std::string> labels = schema.AllLabels();
  ScoreReport report;
  report.task = task;
  for (Metric m : MetricsFor(task)) report.metrics[m] = {};
  ScoreDiagnostics &diag = report.diagnostics;
  auto note = [&](const std::string &id, const std::string &msg) {
    if (diag.notes.size() < kMaxNotes) diag.notes.push_back(id + ": " + msg);
  };

  for (const auto &g : gold) {
    ++diag.instances;
    SelStructure parsed;
    if (auto it = pred_by_id.find(g.id); it != pred_by_id.end()) {
      ++diag.predictions;
      ParseResult pr = Parse(it->second->output, labels);
      parsed = std::move(pr.structure);
      if (pr.diagnostics.recovered) ++diag.recovered_outputs;
      diag.dropped_fragments += pr.diagnostics.dropped_fragments;
      diag.auto_closed_parens += pr.diagnostics.auto_closed_parens;
      for (const auto &n : pr.diagnostics.notes) note(g.id, n);
    } else {
      ++diag.missing_predictions;
      note(g.id, "no prediction");
    }

    GroundedPrediction grounded = Ground(parsed, g.text, schema, task);
    diag.mentions += grounded.diagnostics.mentions;
    diag.ungrounded_mentions += grounded.diagnostics.ungrounded;
    for (const auto &n : grounded.diagnostics.notes) note(g.id, n);

    for (auto &[metric, counts] : report.metrics) {
      const std::set<std::string> gk = GoldKeys(g, metric);
      const std::set<std::string> pk = PredictedKeys(grounded, metric);
      MetricCounts c;
      c.n_gold = static_cast<int64_t>(gk.size());
      c.n_pred = static_cast<int64_t>(pk.size());
      for (const auto &k : pk) c.tp += gk.contains(k) ? 1 : 0;
      counts += c;
    }
  }
  return report;
}

Json ToJson(const ScoreReport &report) {
  Json metrics = Json::object();
  for (const auto &[metric, c] : report.metrics) {
    metrics[std::string(MetricName(metric))] = Json{
        {"tp", c.tp},          {"n_pred", c.n_pred},
        {"n_gold", c.n_gold},  {"precision", c.precision()},
        {"recall", c.recall()}, {"f1", c.f1()}};
  }
  const ScoreDiagnostics &d = report.diagnostics;
  return Json{{"task", TaskName(report.task)},
              {"metrics", std::move(metrics)},
              {"diagnostics",
               {{"instances", d.instances},
                {"predictions", d.predictions},
                {"missing_predictions", d.missing_predictions},
                {"recovered_outputs", d.recovered_outputs},
                {"dropped_fragments", d.dropped_fragments},
                {"auto_closed_parens", d.auto_closed_parens},
                {"mentions", d.mentions},
                {"ungrounded_mentions", d.ungrounded_mentions},
                {"notes", d.notes}}}};
}

std::string FormatTable(const ScoreReport &report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-16s %8s %8s %8s %9s %9s %9s\n",
                "metric", "tp", "pred", "gold", "P", "R", "F1");
  out << line;
  for (const auto &[metric, c] : report.metrics) {
    std::snprintf(line, sizeof(line), "%-16s %8lld %8lld %8lld %9s %9s %9s\n",
                  std::string(MetricName(metric)).c_str(),
                  static_cast<long long>(c.tp),
                  static_cast<long long>(c.n_pred),
                  static_cast<long long>(c.n_gold), Fixed(c.precision()).c_str(),
                  Fixed(c.recall()).c_str(), Fixed(c.f1()).c_str());
    out << line;
  }
  const ScoreDiagnostics &d = report.diagnostics;
  out << "\ninstances " << d.instances << ", predictions " << d.predictions
      << ", missing " << d.missing_predictions << "\n"
      << "recovered outputs " << d.recovered_outputs << ", dropped fragments "
      << d.dropped_fragments << ", auto-closed parens "
      << d.auto_closed_parens << "\n"
      << "mentions " << d.mentions << ", ungrounded " << d.ungrounded_mentions
      << "\n";
  return out.str();
}

}  // namespace selkit
