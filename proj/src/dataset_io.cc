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

#include "selkit/dataset_io.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "selkit/utf8.h"

namespace selkit {
namespace {

std::ifstream OpenIn(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream OpenOut(const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

void Finish(std::ofstream &out, const std::filesystem::path &path) {
  out.flush();
  if (!out) throw Error("write to " + path.string() + " failed");
}

// Calls fn(json, line_number) for every non-blank line.
template <typename Fn>
void ForEachRecord(const std::filesystem::path &path, Fn fn) {
  std::ifstream in = OpenIn(path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception &e) {
      throw Error(path.string() + ":" + std::to_string(line_no) +
                  ": malformed record: " + e.what());
    }
    try {
      fn(j);
    } catch (const Json::exception &e) {
      throw Error(path.string() + ":" + std::to_string(line_no) + ": " +
                  e.what());
    } catch (const Error &e) {
      throw Error(path.string() + ":" + std::to_string(line_no) + ": " +
                  e.what());
    }
  }
  if (in.bad()) throw Error("read from " + path.string() + " failed");
}

Json SetToJson(const std::set<std::string> &s) {
  Json a = Json::array();
  for (const auto &v : s) a.push_back(v);
  return a;
}

std::set<std::string> SetFromJson(const Json &j, const char *key) {
  std::set<std::string> out;
  if (!j.contains(key) || j.at(key).is_null()) return out;
  for (const auto &v : j.at(key)) out.insert(v.get<std::string>());
  return out;
}

Json SpanToJson(const Span &s) {
  if (s.implicit()) return nullptr;
  return Json{{"start", s.start}, {"end", s.end}, {"text", s.text}};
}

Span SpanFromJson(const Json &j) {
  if (j.is_null()) return Span::Implicit();
  return Span{j.at("start").get<int64_t>(), j.at("end").get<int64_t>(),
              j.at("text").get<std::string>()};
}

const Json &ListOrEmpty(const Json &j, const char *key) {
  static const Json kEmpty = Json::array();
  if (!j.contains(key) || j.at(key).is_null()) return kEmpty;
  return j.at(key);
}

std::string CategoryName(const std::string &type) {
  static const std::map<std::string, std::string> kConll = {
      {"LOC", "location"},
      {"PER", "person"},
      {"ORG", "organization"},
      {"MISC", "miscellaneous"},
  };
  if (auto it = kConll.find(type); it != kConll.end()) return it->second;
  std::string out = type;
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kEasy:
      return "easy";
    case Stage::kHard:
      return "hard";
    case Stage::kMain:
      return "main";
  }
  return "unknown";
}

Stage StageFromName(std::string_view name) {
  for (Stage s : {Stage::kEasy, Stage::kHard, Stage::kMain}) {
    if (StageName(s) == name) return s;
  }
  throw Error("unknown stage \"" + std::string(name) + "\"");
}

Json ToJson(const Schema &schema) {
  return Json{{"task", TaskName(schema.task)},
              {"entity_categories", SetToJson(schema.entity_categories)},
              {"relations", SetToJson(schema.relations)},
              {"event_types", SetToJson(schema.event_types)},
              {"argument_roles", SetToJson(schema.argument_roles)},
              {"aspect_categories", SetToJson(schema.aspect_categories)},
              {"polarities", SetToJson(schema.polarities)}};
}

Schema SchemaFromJson(const Json &j) {
  Schema s;
  s.task = TaskFromName(j.at("task").get<std::string>());
  s.entity_categories = SetFromJson(j, "entity_categories");
  s.relations = SetFromJson(j, "relations");
  s.event_types = SetFromJson(j, "event_types");
  s.argument_roles = SetFromJson(j, "argument_roles");
  s.aspect_categories = SetFromJson(j, "aspect_categories");
  s.polarities = SetFromJson(j, "polarities");
  return s;
}

Json ToJson(const CanonicalInstance &inst) {
  Json entities = Json::array();
  for (const auto &e : inst.entities) {
    entities.push_back(Json{{"start", e.span.start},
                            {"end", e.span.end},
                            {"text", e.span.text},
                            {"category", e.category}});
  }
  Json relations = Json::array();
  for (const auto &r : inst.relations) {
    relations.push_back(
        Json{{"head", r.head}, {"relation", r.relation}, {"tail", r.tail}});
  }
  Json events = Json::array();
  for (const auto &ev : inst.events) {
    Json args = Json::array();
    for (const auto &a : ev.arguments) {
      args.push_back(Json{{"start", a.span.start},
                          {"end", a.span.end},
                          {"text", a.span.text},
                          {"role", a.role}});
    }
    events.push_back(Json{{"trigger",
                           {{"start", ev.trigger.span.start},
                            {"end", ev.trigger.span.end},
                            {"text", ev.trigger.span.text},
                            {"category", ev.trigger.category}}},
                          {"arguments", std::move(args)}});
  }
  Json sentiments = Json::array();
  for (const auto &s : inst.sentiments) {
    Json category = nullptr;
    if (s.category) category = *s.category;
    sentiments.push_back(Json{{"category", category},
                              {"aspect", SpanToJson(s.aspect)},
                              {"opinion", SpanToJson(s.opinion)},
                              {"polarity", s.polarity}});
  }
  return Json{{"id", inst.id},
              {"task", TaskName(inst.task)},
              {"text", inst.text},
              {"entities", std::move(entities)},
              {"relations", std::move(relations)},
              {"events", std::move(events)},
              {"sentiments", std::move(sentiments)}};
}

CanonicalInstance InstanceFromJson(const Json &j) {
  CanonicalInstance inst;
  inst.id = j.at("id").get<std::string>();
  try {
    inst.task = TaskFromName(j.at("task").get<std::string>());
    inst.text = j.at("text").get<std::string>();
    for (const auto &e : ListOrEmpty(j, "entities")) {
      inst.entities.push_back(
          Entity{SpanFromJson(e), e.at("category").get<std::string>()});
    }
    for (const auto &r : ListOrEmpty(j, "relations")) {
      const auto head = r.at("head").get<int64_t>();
      const auto tail = r.at("tail").get<int64_t>();
      if (head < 0 || tail < 0) throw Error("negative entity index");
      inst.relations.push_back(
          RelationTriple{static_cast<size_t>(head),
                         r.at("relation").get<std::string>(),
                         static_cast<size_t>(tail)});
    }
    for (const auto &ev : ListOrEmpty(j, "events")) {
      Event event;
      const Json &t = ev.at("trigger");
      event.trigger = Entity{SpanFromJson(t), t.at("category").get<std::string>()};
      for (const auto &a : ListOrEmpty(ev, "arguments")) {
        event.arguments.push_back(
            Argument{SpanFromJson(a), a.at("role").get<std::string>()});
      }
      inst.events.push_back(std::move(event));
    }
    for (const auto &s : ListOrEmpty(j, "sentiments")) {
      SentimentTuple tuple;
      if (s.contains("category") && !s.at("category").is_null()) {
        tuple.category = s.at("category").get<std::string>();
      }
      tuple.aspect = SpanFromJson(s.contains("aspect") ? s.at("aspect") : Json());
      tuple.opinion =
          SpanFromJson(s.contains("opinion") ? s.at("opinion") : Json());
      tuple.polarity = s.at("polarity").get<std::string>();
      inst.sentiments.push_back(std::move(tuple));
    }
  } catch (const Json::exception &e) {
    throw Error("instance " + inst.id + ": " + e.what());
  } catch (const Error &e) {
    throw Error("instance " + inst.id + ": " + e.what());
  }
  return inst;
}

Json ToJson(const CompiledExample &ex) {
  Json skill = nullptr;
  if (ex.skill) skill = *ex.skill;
  Json meta = Json::object();
  for (const auto &[k, v] : ex.meta) meta[k] = v;
  return Json{{"id", ex.id},
              {"stage", StageName(ex.stage)},
              {"skill", skill},
              {"input", ex.input},
              {"target", ex.target},
              {"meta", std::move(meta)}};
}

CompiledExample CompiledFromJson(const Json &j) {
  CompiledExample ex;
  ex.id = j.at("id").get<std::string>();
  ex.stage = StageFromName(j.at("stage").get<std::string>());
  if (j.contains("skill") && !j.at("skill").is_null()) {
    ex.skill = j.at("skill").get<std::string>();
  }
  ex.input = j.at("input").get<std::string>();
  ex.target = j.at("target").get<std::string>();
  if (j.contains("meta")) {
    for (const auto &[k, v] : j.at("meta").items()) {
      ex.meta[k] = v.get<std::string>();
    }
  }
  return ex;
}

Json ToJson(const PredictionRecord &pred) {
  return Json{{"id", pred.id}, {"output", pred.output}};
}

PredictionRecord PredictionFromJson(const Json &j) {
  return PredictionRecord{j.at("id").get<std::string>(),
                          j.at("output").get<std::string>()};
}

Schema ReadSchema(const std::filesystem::path &path) {
  std::ifstream in = OpenIn(path);
  try {
    return SchemaFromJson(Json::parse(in));
  } catch (const Json::exception &e) {
    throw Error(path.string() + ": malformed schema: " + e.what());
  } catch (const Error &e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void WriteSchema(const Schema &schema, const std::filesystem::path &path) {
  std::ofstream out = OpenOut(path);
  out << ToJson(schema).dump(2) << "\n";
  Finish(out, path);
}

std::vector<CanonicalInstance> ReadCanonical(const std::filesystem::path &path) {
  std::vector<CanonicalInstance> out;
  ForEachRecord(path, [&](const Json &j) {
    CanonicalInstance inst = InstanceFromJson(j);
    if (auto problems = ValidateStructure(inst); !problems.empty()) {
      throw Error("instance " + inst.id + ": " + problems.front());
    }
    out.push_back(std::move(inst));
  });
  return out;
}

void WriteCanonical(const std::vector<CanonicalInstance> &instances,
                    const std::filesystem::path &path) {
  std::ofstream out = OpenOut(path);
  for (const auto &inst : instances) out << ToJson(inst).dump() << "\n";
  Finish(out, path);
}

std::vector<CompiledExample> ReadCompiled(
    const std::filesystem::path &path,
    const std::optional<std::set<Stage>> &stages) {
  std::vector<CompiledExample> out;
  ForEachRecord(path, [&](const Json &j) {
    CompiledExample ex = CompiledFromJson(j);
    if (!stages || stages->contains(ex.stage)) out.push_back(std::move(ex));
  });
  return out;
}

void WriteCompiled(const std::vector<CompiledExample> &examples,
                   std::ostream &out) {
  for (const auto &ex : examples) out << ToJson(ex).dump() << "\n";
}

void WriteCompiled(const std::vector<CompiledExample> &examples,
                   const std::filesystem::path &path) {
  std::ofstream out = OpenOut(path);
  WriteCompiled(examples, out);
  Finish(out, path);
}

std::vector<PredictionRecord> ReadPredictions(
    const std::filesystem::path &path) {
  std::vector<PredictionRecord> out;
  ForEachRecord(path,
                [&](const Json &j) { out.push_back(PredictionFromJson(j)); });
  return out;
}

void WritePredictions(const std::vector<PredictionRecord> &preds,
                      const std::filesystem::path &path) {
  std::ofstream out = OpenOut(path);
  for (const auto &p : preds) out << ToJson(p).dump() << "\n";
  Finish(out, path);
}

std::vector<CanonicalInstance> ConvertConllBio(std::istream &in,
                                               const std::string &id_prefix,
                                               ConversionReport *report) {
  ConversionReport local;
  ConversionReport &rep = report != nullptr ? *report : local;
  std::vector<CanonicalInstance> out;

  CanonicalInstance cur;
  std::string open_type;  // type of the entity run being extended, if any
  auto flush = [&] {
    if (cur.text.empty()) return;
    cur.id = id_prefix + std::to_string(out.size());
    cur.task = Task::kNer;
    rep.entities += static_cast<int>(cur.entities.size());
    ++rep.sentences;
    out.push_back(std::move(cur));
    cur = CanonicalInstance{};
    open_type.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream cols(line);
    std::vector<std::string> fields;
    for (std::string f; cols >> f;) fields.push_back(f);
    if (fields.empty()) {
      flush();
      continue;
    }
    if (fields.front() == "-DOCSTART-") continue;

    const std::string &token = fields.front();
    const std::string tag = fields.size() > 1 ? fields.back() : "O";
    if (!cur.text.empty()) cur.text += ' ';
    const int64_t start = CharLength(cur.text);
    cur.text += token;
    const int64_t end = CharLength(cur.text);

    const bool begin = tag.rfind("B-", 0) == 0;
    const bool inside = tag.rfind("I-", 0) == 0;
    if (!begin && !inside) {
      open_type.clear();
      continue;
    }
    const std::string type = tag.substr(2);
    if (inside && type == open_type) {
      Entity &e = cur.entities.back();
      e.span.end = end;
      e.span.text = CharSubstr(cur.text, e.span.start, end);
      continue;
    }
    if (inside) ++rep.dangling_inside_tags;
    cur.entities.push_back(Entity{Span{start, end, token}, CategoryName(type)});
    open_type = type;
  }
  flush();
  return out;
}

std::vector<CanonicalInstance> ConvertConllBio(
    const std::filesystem::path &path, ConversionReport *report) {
  std::ifstream in = OpenIn(path);
  return ConvertConllBio(in, path.stem().string() + "-", report);
}

size_t LowResourceSize(size_t n, double ratio) {
  if (n == 0) return 0;
  const double scaled = std::nearbyint(static_cast<double>(n) * ratio);
  size_t k = scaled < 1.0 ? 1 : static_cast<size_t>(scaled);
  return std::min(k, n);
}

}  // namespace selkit
