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

#include "turnaround/crossval.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "turnaround/error.h"
#include "turnaround/rng.h"

namespace turnaround {
namespace {

struct FoldResult {
  std::vector<PredictionRecord> records;  // parallel to the fold's indices
  std::size_t empty_documents = 0;
};

FoldResult RunFold(const Corpus& corpus, const PipelineSettings& settings,
                   const std::vector<std::size_t>& test,
                   std::uint64_t fold_seed) {
  FoldResult result;
  if (settings.predictor == Predictor::kIdentityOracle) {
    for (std::size_t d : test) {
      result.records.push_back({corpus[d].id, corpus[d].year, corpus[d].year});
    }
    return result;
  }

  std::vector<std::size_t> train;
  train.reserve(corpus.size() - test.size());
  for (std::size_t d = 0, t = 0; d < corpus.size(); ++d) {
    if (t < test.size() && test[t] == d) {
      ++t;
    } else {
      train.push_back(d);
    }
  }
  if (train.empty()) throw Error("cross-validation fold has no training data");

  const TrainedPipeline pipeline =
      TrainPipeline(corpus.Subset(train), settings, fold_seed);
  for (std::size_t d : test) {
    InferOptions infer = settings.infer;
    infer.seed = DeriveSeed(fold_seed, d);
    const Inference inference = InferTheta(
        pipeline.topics, Vectorize(corpus[d], pipeline.vocab, settings.tokenizer),
        infer);
    if (inference.empty_document) ++result.empty_documents;
    result.records.push_back({corpus[d].id, corpus[d].year,
                              pipeline.classifier.PredictYear(inference.theta)});
  }
  return result;
}

}  // namespace

std::vector<std::vector<std::size_t>> StratifiedFolds(const Corpus& corpus,
                                                      int k,
                                                      std::uint64_t seed) {
  if (k < 2) throw Error("cross-validation needs k >= 2");
  if (static_cast<std::size_t>(k) > corpus.size()) {
    throw Error("cross-validation k=" + std::to_string(k) + " exceeds the " +
                std::to_string(corpus.size()) + " documents");
  }
  std::vector<std::vector<std::size_t>> folds(k);
  Rng rng(seed);
  std::size_t dealer = 0;
  for (Year year : corpus.present_years()) {
    std::vector<std::size_t> docs = corpus.DocumentsInYear(year);
    rng.Shuffle(std::span<std::size_t>(docs));
    for (std::size_t d : docs) {
      folds[dealer % k].push_back(d);
      ++dealer;
    }
  }
  for (auto& fold : folds) std::sort(fold.begin(), fold.end());
  return folds;
}

EvaluationReport CrossValidate(const Corpus& corpus,
                               const PipelineSettings& settings, int k,
                               std::uint64_t seed, int threads) {
  EvaluationReport report;
  report.folds = StratifiedFolds(corpus, k, seed);

  std::vector<FoldResult> results(k);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (int f = next++; f < k; f = next++) {
      try {
        results[f] = RunFold(corpus, settings, report.folds[f],
                             seed + static_cast<std::uint64_t>(f));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::clamp(threads, 1, k);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<PredictionRecord> by_doc(corpus.size());
  for (int f = 0; f < k; ++f) {
    report.fold_mae.push_back(MeanAbsoluteError(results[f].records));
    report.empty_documents += results[f].empty_documents;
    for (std::size_t i = 0; i < report.folds[f].size(); ++i) {
      by_doc[report.folds[f][i]] = results[f].records[i];
    }
  }
  double sum = 0.0;
  for (double mae : report.fold_mae) sum += mae;
  report.mean_mae = sum / static_cast<double>(k);
  report.records = std::move(by_doc);
  report.confusion =
      BuildConfusionMatrix(report.records, corpus.present_years());
  return report;
}

}  // namespace turnaround
