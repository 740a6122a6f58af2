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

// Command-line front end: ingest, train, evaluate, score-years, trends,
// synth and predict.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "turnaround/error.h"

namespace {

using turnaround::tools::RunConfig;

void AddCorpusFlags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--corpus", c.corpus_path, "JSON-Lines corpus")->required();
  cmd->add_option("--stopwords", c.stopwords_path,
                  "Stopword file, one token per line (default: bundled list)");
  cmd->add_option("--min-df", c.min_df, "Minimum document frequency")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-token-length", c.min_token_length,
                  "Minimum token length")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void AddModelFlags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--k-topics", c.k_topics, "Number of LDA topics")
      ->capture_default_str()
      ->check(CLI::Range(2, 100000));
  cmd->add_option("--alpha", c.alpha,
                  "Document-topic prior (default 50/K, 2.5 at K=20)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--beta", c.beta, "Topic-word prior")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--lda-iters", c.lda_iters, "Gibbs sweeps for training")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--infer-iters", c.infer_iters,
                  "Gibbs sweeps for fold-in inference")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--svm-c", c.svm_c, "SVM regularization constant C")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--svm-epochs", c.svm_epochs, "SVM passes over the data")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void AddSeed(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--seed", c.seed, "Seed for every random choice")
      ->capture_default_str();
}

void AddOut(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--out", c.out_dir, "Output directory")->capture_default_str();
}

void AddEvaluationFlags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--folds", c.folds, "Cross-validation folds")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  cmd->add_option("--threads", c.threads, "Folds trained in parallel")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--oracle-identity", c.identity_oracle,
                "Test mode: predict every document's true year");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect turnaround years in a timestamped document corpus"};
  app.set_config("--config", "", "TOML/INI file of flag values");
  app.require_subcommand(1);
  RunConfig config;

  auto* ingest = app.add_subcommand("ingest", "Validate a corpus and print statistics");
  AddCorpusFlags(ingest, config);

  auto* train = app.add_subcommand("train", "Train topic model and year classifier");
  AddCorpusFlags(train, config);
  AddModelFlags(train, config);
  AddSeed(train, config);
  train->add_option("--model", config.model_path, "Model file to write")->required();

  auto* evaluate = app.add_subcommand("evaluate", "k-fold cross-validation report");
  AddCorpusFlags(evaluate, config);
  AddModelFlags(evaluate, config);
  AddSeed(evaluate, config);
  AddOut(evaluate, config);
  AddEvaluationFlags(evaluate, config);

  auto* score = app.add_subcommand("score-years", "Rank years by innovation score");
  AddCorpusFlags(score, config);
  AddModelFlags(score, config);
  AddSeed(score, config);
  AddOut(score, config);
  AddEvaluationFlags(score, config);
  score->add_option("--mode", config.mode,
                    "Predictions from cross-validation (cv) or resubstitution (resub)")
      ->capture_default_str()
      ->check(CLI::IsMember({"cv", "resub"}));
  score->add_flag("--svg", config.svg, "Also write a bar chart");

  auto* trends = app.add_subcommand("trends", "Per-year mean topic proportions");
  AddCorpusFlags(trends, config);
  AddModelFlags(trends, config);
  AddSeed(trends, config);
  AddOut(trends, config);
  trends->add_option("--top-words", config.top_words, "Terms listed per topic")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  trends->add_flag("--svg", config.svg, "Also write a line chart");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic epoch corpus");
  synth->add_option("--spec", config.spec_path, "Epoch specification file")->required();
  AddOut(synth, config);

  auto* predict = app.add_subcommand("predict", "Predict the year of text on stdin");
  predict->add_option("--model", config.model_path, "Model file")->required();
  predict->add_option("--infer-iters", config.infer_iters,
                      "Gibbs sweeps for fold-in inference")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  AddSeed(predict, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "turnaround: error: " << e.what() << '\n';
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  namespace t = turnaround::tools;
  try {
    if (*ingest) t::RunIngest(config, std::cout);
    if (*train) t::RunTrain(config, std::cout);
    if (*evaluate) t::RunEvaluate(config, std::cout);
    if (*score) t::RunScoreYears(config, std::cout);
    if (*trends) t::RunTrends(config, std::cout);
    if (*synth) t::RunSynth(config, std::cout);
    if (*predict) t::RunPredict(config, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "turnaround: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
