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

#ifndef TURNAROUND_CROSSVAL_H_
#define TURNAROUND_CROSSVAL_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "turnaround/chronometrics.h"
#include "turnaround/corpus.h"
#include "turnaround/pipeline.h"

namespace turnaround {

// Year-stratified partition of the corpus into k folds.
//
// Years are visited in ascending order; each year's documents are shuffled
// by one generator seeded with `seed` and dealt round-robin, with the dealer
// position carried over from year to year. Fold sizes and per-year counts
// therefore differ by at most one between folds. Each fold lists document
// indices in corpus order.
std::vector<std::vector<std::size_t>> StratifiedFolds(const Corpus& corpus,
                                                      int k,
                                                      std::uint64_t seed);

struct EvaluationReport {
  std::vector<std::vector<std::size_t>> folds;
  std::vector<double> fold_mae;
  double mean_mae = 0.0;
  ConfusionMatrix confusion;
  // Held-out predictions for every document, in corpus order.
  std::vector<PredictionRecord> records;
  // Held-out documents with no token in their fold's vocabulary.
  std::size_t empty_documents = 0;

  friend bool operator==(const EvaluationReport&,
                         const EvaluationReport&) = default;
};

// k-fold cross-validation of the whole pipeline. Fold f trains on the other
// folds with seed + f and folds in its held-out documents one at a time,
// each with a seed derived from (seed + f, document index). Results do not
// depend on `threads`.
EvaluationReport CrossValidate(const Corpus& corpus,
                               const PipelineSettings& settings, int k,
                               std::uint64_t seed, int threads = 1);

}  // namespace turnaround

#endif  // TURNAROUND_CROSSVAL_H_
