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

#ifndef TURNAROUND_PIPELINE_H_
#define TURNAROUND_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "turnaround/corpus.h"
#include "turnaround/tokenizer.h"
#include "turnaround/topics.h"
#include "turnaround/vocabulary.h"
#include "turnaround/yearclf.h"

namespace turnaround {

enum class Predictor {
  kModel,
  // Predicts every document's true year. Test plumbing only.
  kIdentityOracle,
};

// Everything needed to go from raw text to predicted years. The seeds inside
// `lda`, `infer` and `svm` are ignored; the pipeline functions take a single
// seed and derive the rest from it.
struct PipelineSettings {
  TokenizerOptions tokenizer;
  int min_df = 5;
  LdaOptions lda;
  InferOptions infer;
  SvmOptions svm;
  Predictor predictor = Predictor::kModel;
};

struct TrainedPipeline {
  Vocabulary vocab;
  TopicModel topics;
  YearClassifier classifier;
  // Training-time theta for every corpus document, in corpus order.
  std::vector<TopicDistribution> thetas;
  // Documents with no in-vocabulary token. They get a uniform theta and are
  // left out of classifier training.
  std::vector<std::size_t> empty_documents;
};

// Builds the vocabulary, trains LDA on every document and the classifier on
// the nonempty ones.
TrainedPipeline TrainPipeline(const Corpus& corpus,
                              const PipelineSettings& settings,
                              std::uint64_t seed);

// Predictions for the training documents themselves, from their
// training-time theta.
std::vector<PredictionRecord> ResubstitutionPredictions(
    const Corpus& corpus, const TrainedPipeline& pipeline);

// Identity predictions, or train + resubstitution, depending on the
// settings' predictor.
std::vector<PredictionRecord> PredictInSample(const Corpus& corpus,
                                              const PipelineSettings& settings,
                                              std::uint64_t seed);

// The model file: a CHRONO-LDA section followed by a CHRONO-SVM section.
struct StoredModel {
  TopicModel topics;
  YearClassifier classifier;
};

void WriteModel(const TopicModel& topics, const YearClassifier& classifier,
                std::ostream& out);
StoredModel ReadModel(std::istream& in, std::string_view source = "<model>");
StoredModel LoadModel(const std::filesystem::path& path);

struct TextPrediction {
  Inference inference;
  std::vector<double> scores;
  Year year = 0;
};

// Tokenizes raw text against the model vocabulary, folds it in, and
// classifies it.
TextPrediction PredictText(const StoredModel& model, std::string_view text,
                           const InferOptions& options);

}  // namespace turnaround

#endif  // TURNAROUND_PIPELINE_H_
