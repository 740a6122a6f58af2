// Copyright 2026 The Turnaround Authors
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

#ifndef TURNAROUND_TOOLS_COMMANDS_H_
#define TURNAROUND_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "turnaround/pipeline.h"

namespace turnaround::tools {

// Flag values shared by the subcommands, after config-file and default
// resolution.
struct RunConfig {
  std::string corpus_path;
  std::string model_path;
  std::string out_dir = ".";
  std::string spec_path;
  std::string stopwords_path;

  int k_topics = 20;
  std::optional<double> alpha;  // unset: 50 / k_topics
  double beta = 0.01;
  int lda_iters = 1000;
  int infer_iters = 100;
  double svm_c = 1.0;
  int svm_epochs = 100;
  int folds = 10;
  int min_df = 5;
  int min_token_length = 3;
  std::uint64_t seed = 42;
  int threads = 1;

  std::string mode = "cv";  // score-years: "cv" or "resub"
  bool svg = false;
  bool identity_oracle = false;
  int top_words = 10;

  PipelineSettings Settings() const;
};

// Each command writes its artifacts, prints a summary to `out`, and throws
// turnaround::Error on failure.
void RunIngest(const RunConfig& config, std::ostream& out);
void RunTrain(const RunConfig& config, std::ostream& out);
void RunEvaluate(const RunConfig& config, std::ostream& out);
void RunScoreYears(const RunConfig& config, std::ostream& out);
void RunTrends(const RunConfig& config, std::ostream& out);
void RunSynth(const RunConfig& config, std::ostream& out);
void RunPredict(const RunConfig& config, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace turnaround::tools

#endif  // TURNAROUND_TOOLS_COMMANDS_H_
