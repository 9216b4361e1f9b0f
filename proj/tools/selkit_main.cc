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

// Command-line front end.
//
// Sample usage:
//   selkit compile --task re --schema re.schema.json --input train.jsonl
//       --output out/ --stages easy,hard,main --m 2
//   selkit score --task re --schema re.schema.json --gold test.jsonl
//       --predictions preds.jsonl --report report.json
//   selkit inspect --compiled out/easy.jsonl --id doc7#re.skill2.0
//   selkit convert --input eng.train --output train.jsonl
//   selkit sample --input train.jsonl --ratio 0.05 --seed 1 --output s.jsonl

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selkit/compiler.h"
#include "selkit/dataset_io.h"
#include "selkit/scorer.h"

namespace {

using selkit::Error;

std::set<selkit::Stage> ParseStages(const std::string &list) {
  std::set<selkit::Stage> stages;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item == "all") {
      stages = {selkit::Stage::kEasy, selkit::Stage::kHard,
                selkit::Stage::kMain};
    } else if (!item.empty()) {
      stages.insert(selkit::StageFromName(item));
    }
  }
  return stages;
}

void WriteText(const std::string &text, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw Error("write to " + path + " failed");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Compile staged extraction training files and score outputs."};
  app.require_subcommand(1);

  // compile
  auto *compile = app.add_subcommand(
      "compile", "Build easy/hard/main training files from canonical data.");
  std::string task_name, schema_path, output_dir, stages = "all";
  std::vector<std::string> inputs;
  int m = 0;
  uint64_t seed = 42;
  double ratio = 0.0;
  bool merge = false;
  compile->add_option("--task", task_name, "ner, re, ee, aste or asqp")
      ->required();
  compile->add_option("--schema", schema_path, "Schema file")->required();
  compile->add_option("--input", inputs, "Canonical instance file(s)")
      ->required();
  compile->add_option("--output", output_dir, "Output directory")->required();
  compile->add_option("--stages", stages,
                      "Comma-separated subset of easy,hard,main, or all")
      ->capture_default_str();
  auto *m_opt = compile->add_option(
      "--m", m, "Hard partners per instance (required with the hard stage)");
  compile->add_option("--seed", seed, "Random seed")->capture_default_str();
  auto *ratio_opt = compile->add_option(
      "--low-resource", ratio, "Keep only this fraction of the input, (0, 1]");
  compile->add_flag("--merge", merge,
                    "Write one mixed file instead of one per stage");

  // score
  auto *score = app.add_subcommand("score", "Score predictions against gold.");
  std::string gold_path, pred_path, report_path;
  score->add_option("--task", task_name, "Task name")->required();
  score->add_option("--schema", schema_path, "Schema file")->required();
  score->add_option("--gold", gold_path, "Gold canonical file")->required();
  score->add_option("--predictions", pred_path, "Prediction records")
      ->required();
  score->add_option("--report", report_path, "Write the report as JSON here");

  // inspect
  auto *inspect =
      app.add_subcommand("inspect", "Pretty-print one compiled example.");
  std::string compiled_path, example_id;
  inspect->add_option("--compiled", compiled_path, "Compiled file")
      ->required();
  inspect->add_option("--id", example_id, "Example id")->required();
  inspect->add_option("--schema", schema_path,
                      "Schema file, for label-aware parsing");

  // convert
  auto *convert = app.add_subcommand(
      "convert", "Convert a BIO-tagged CoNLL file to canonical NER records.");
  std::string in_path, out_path;
  convert->add_option("--input", in_path, "BIO file")->required();
  convert->add_option("--output", out_path, "Canonical output file")
      ->required();

  // sample
  auto *sample = app.add_subcommand(
      "sample", "Draw a low-resource subset of a canonical file.");
  sample->add_option("--input", in_path, "Canonical input file")->required();
  sample->add_option("--output", out_path, "Canonical output file")
      ->required();
  sample->add_option("--ratio", ratio, "Fraction to keep, (0, 1]")
      ->required();
  sample->add_option("--seed", seed, "Random seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      selkit::CompileConfig config;
      config.task = selkit::TaskFromName(task_name);
      config.schema_path = schema_path;
      for (const auto &p : inputs) config.inputs.emplace_back(p);
      config.output_dir = output_dir;
      config.stages = ParseStages(stages);
      if (m_opt->count() > 0) config.m = m;
      config.seed = seed;
      if (ratio_opt->count() > 0) config.low_resource_ratio = ratio;
      config.merge_stages = merge;
      selkit::CompileSummary summary = selkit::RunCompile(config);
      std::cout << selkit::ToJson(summary).dump(2) << "\n";
    } else if (score->parsed()) {
      const selkit::Task task = selkit::TaskFromName(task_name);
      const selkit::Schema schema = selkit::ReadSchema(schema_path);
      if (schema.task != task) {
        throw Error("schema task does not match --task");
      }
      selkit::ScoreReport report =
          selkit::Score(selkit::ReadCanonical(gold_path),
                        selkit::ReadPredictions(pred_path), task, schema);
      std::cout << selkit::FormatTable(report);
      if (!report_path.empty()) {
        WriteText(selkit::ToJson(report).dump(2) + "\n", report_path);
      }
    } else if (inspect->parsed()) {
      std::optional<selkit::Schema> schema;
      if (!schema_path.empty()) schema = selkit::ReadSchema(schema_path);
      bool found = false;
      for (const auto &ex : selkit::ReadCompiled(compiled_path)) {
        if (ex.id == example_id) {
          std::cout << selkit::Inspect(ex, schema);
          found = true;
          break;
        }
      }
      if (!found) throw Error("no example with id " + example_id);
    } else if (convert->parsed()) {
      selkit::ConversionReport report;
      auto instances = selkit::ConvertConllBio(in_path, &report);
      selkit::WriteCanonical(instances, out_path);
      std::cout << "sentences " << report.sentences << ", entities "
                << report.entities << ", dangling I- tags "
                << report.dangling_inside_tags << "\n";
    } else if (sample->parsed()) {
      auto instances = selkit::ReadCanonical(in_path);
      auto kept = selkit::SampleLowResource(instances, ratio, seed);
      selkit::WriteCanonical(kept, out_path);
      std::cout << "kept " << kept.size() << " of " << instances.size()
                << "\n";
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
