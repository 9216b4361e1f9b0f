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

#ifndef SELKIT_SCORER_H_
#define SELKIT_SCORER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selkit/core_model.h"
#include "selkit/dataset_io.h"
#include "selkit/sel.h"

namespace selkit {

// A predicted surface string resolved to character offsets. Ungrounded
// spans keep start = end = -1 and never match gold.
struct GroundedSpan {
  std::string text;
  int64_t start = -1;
  int64_t end = -1;
  bool grounded = false;
};

struct GroundedEntity {
  GroundedSpan span;
  std::string category;
};

struct GroundedRelation {
  GroundedEntity head;
  std::string relation;
  GroundedEntity tail;  // category "unknown" when no co-predicted entity
};

struct GroundedArgument {
  GroundedSpan span;
  std::string role;
};

struct GroundedEvent {
  GroundedEntity trigger;
  std::vector<GroundedArgument> arguments;
};

// ASTE triplets are offset-level; ASQP quads only use the texts.
struct GroundedSentiment {
  std::optional<std::string> category;
  GroundedSpan aspect;
  GroundedSpan opinion;
  std::string polarity;
};

struct GroundingReport {
  int mentions = 0;
  int ungrounded = 0;
  std::vector<std::string> notes;
};

struct GroundedPrediction {
  std::vector<GroundedEntity> entities;
  std::vector<GroundedRelation> relations;
  std::vector<GroundedEvent> events;
  std::vector<GroundedSentiment> sentiments;
  GroundingReport diagnostics;
};

// Maps every predicted mention to offsets in `text`. Mentions with the same
// (text, label) take successive occurrences left to right; event arguments
// do so per event. Relation tails (and ASTE opinions hanging under an
// aspect) resolve to the first co-predicted entity node with the same text
// and inherit its offsets and category; failing that, the leftmost
// occurrence with category "unknown".
GroundedPrediction Ground(const SelStructure &parsed, const std::string &text,
                          const Schema &schema, Task task);

enum class Metric { kEntity, kRelationStrict, kTrigger, kArgument, kTriplet, kQuad };

std::string_view MetricName(Metric metric);
std::vector<Metric> MetricsFor(Task task);

// Match keys for set-based comparison. Two tuples match iff their keys are
// equal.
std::set<std::string> GoldKeys(const CanonicalInstance &gold, Metric metric);
std::set<std::string> PredictedKeys(const GroundedPrediction &pred,
                                    Metric metric);

struct MetricCounts {
  int64_t tp = 0;
  int64_t n_pred = 0;
  int64_t n_gold = 0;

  // Zero denominators give 0, except that a metric with no predictions and
  // no gold scores 1 on all three.
  double precision() const;
  double recall() const;
  double f1() const;

  MetricCounts &operator+=(const MetricCounts &o) {
    tp += o.tp;
    n_pred += o.n_pred;
    n_gold += o.n_gold;
    return *this;
  }
};

struct ScoreDiagnostics {
  int instances = 0;
  int predictions = 0;
  int missing_predictions = 0;
  int recovered_outputs = 0;
  int dropped_fragments = 0;
  int auto_closed_parens = 0;
  int mentions = 0;
  int ungrounded_mentions = 0;
  std::vector<std::string> notes;  // capped; prefixed with instance id
};

struct ScoreReport {
  Task task = Task::kNer;
  std::map<Metric, MetricCounts> metrics;
  ScoreDiagnostics diagnostics;
};

// Micro-averaged scores over the corpus. Gold instances without a
// prediction are scored as empty output. Throws Error if a prediction names
// an unknown or repeated id, or gold ids repeat.
ScoreReport Score(const std::vector<CanonicalInstance> &gold,
                  const std::vector<PredictionRecord> &preds, Task task,
                  const Schema &schema);

Json ToJson(const ScoreReport &report);
std::string FormatTable(const ScoreReport &report);

}  // namespace selkit

#endif  // SELKIT_SCORER_H_
