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

#include "turnaround/pipeline.h"

#include <fstream>

#include "turnaround/error.h"
#include "turnaround/text_format.h"

namespace turnaround {

TrainedPipeline TrainPipeline(const Corpus& corpus,
                              const PipelineSettings& settings,
                              std::uint64_t seed) {
  Vocabulary vocab = Vocabulary::Build(corpus, settings.min_df,
                                       settings.tokenizer);
  std::vector<BowVector> bows;
  bows.reserve(corpus.size());
  for (const Document& doc : corpus.documents()) {
    bows.push_back(Vectorize(doc, vocab, settings.tokenizer));
  }

  LdaOptions lda = settings.lda;
  lda.seed = seed;
  LdaFit fit = TrainLda(bows, vocab, lda);

  std::vector<std::size_t> empty;
  std::vector<TopicDistribution> features;
  std::vector<Year> labels;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    if (bows[d].empty()) {
      empty.push_back(d);
      continue;
    }
    features.push_back(fit.thetas[d]);
    labels.push_back(corpus[d].year);
  }
  SvmOptions svm = settings.svm;
  svm.seed = seed;
  YearClassifier classifier = TrainSvm(features, labels, svm);

  return TrainedPipeline{std::move(vocab), std::move(fit.model),
                         std::move(classifier), std::move(fit.thetas),
                         std::move(empty)};
}

std::vector<PredictionRecord> ResubstitutionPredictions(
    const Corpus& corpus, const TrainedPipeline& pipeline) {
  if (pipeline.thetas.size() != corpus.size()) {
    throw Error("pipeline was trained on a different corpus");
  }
  std::vector<PredictionRecord> records;
  records.reserve(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    records.push_back({corpus[d].id, corpus[d].year,
                       pipeline.classifier.PredictYear(pipeline.thetas[d])});
  }
  return records;
}

std::vector<PredictionRecord> PredictInSample(const Corpus& corpus,
                                              const PipelineSettings& settings,
                                              std::uint64_t seed) {
  if (settings.predictor == Predictor::kIdentityOracle) {
    std::vector<PredictionRecord> records;
    for (const Document& doc : corpus.documents()) {
      records.push_back({doc.id, doc.year, doc.year});
    }
    return records;
  }
  return ResubstitutionPredictions(corpus,
                                   TrainPipeline(corpus, settings, seed));
}

void WriteModel(const TopicModel& topics, const YearClassifier& classifier,
                std::ostream& out) {
  const ClassicLocale classic(out);
  if (classifier.dim() != topics.num_topics()) {
    throw Error("classifier dimension does not match the topic count");
  }
  WriteTopicModel(topics, out);
  WriteYearClassifier(classifier, out);
}

StoredModel ReadModel(std::istream& in, std::string_view source) {
  LineReader reader(in, std::string(source));
  TopicModel topics = ReadTopicModel(reader);
  YearClassifier classifier = ReadYearClassifier(reader);
  if (classifier.dim() != topics.num_topics()) {
    reader.Fail("classifier dimension does not match the topic count");
  }
  std::string extra;
  while (reader.Next(&extra)) {
    if (!Trim(extra).empty()) reader.Fail("unexpected content after model");
  }
  return StoredModel{std::move(topics), std::move(classifier)};
}

StoredModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path.string() + "'");
  return ReadModel(in, path.string());
}

TextPrediction PredictText(const StoredModel& model, std::string_view text,
                           const InferOptions& options) {
  // The vocabulary already excludes short tokens and stopwords, so any
  // tokenizer settings used at training time give the same counts here.
  TokenizerOptions raw;
  raw.min_length = 1;
  raw.stopwords = nullptr;
  const Vocabulary vocab = model.topics.MakeVocabulary();
  TextPrediction out;
  out.inference = InferTheta(model.topics, Vectorize(text, vocab, raw), options);
  out.scores = model.classifier.DecisionScores(out.inference.theta);
  out.year = model.classifier.PredictYear(out.inference.theta);
  return out;
}

}  // namespace turnaround
