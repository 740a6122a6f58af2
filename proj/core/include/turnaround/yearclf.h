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

#ifndef TURNAROUND_YEARCLF_H_
#define TURNAROUND_YEARCLF_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "turnaround/corpus.h"
#include "turnaround/text_format.h"
#include "turnaround/topics.h"

namespace turnaround {

struct SvmOptions {
  double c = 1.0;
  int epochs = 100;
  std::uint64_t seed = 42;
  friend bool operator==(const SvmOptions&, const SvmOptions&) = default;
};

// One-vs-rest linear classifier over topic-distribution features. Class c
// scores a feature vector x as weights(c) . x + bias(c); the predicted year
// is the arg max, ties going to the earliest year.
class YearClassifier {
 public:
  // `weights` is |classes| x dim, row-major.
  YearClassifier(std::vector<Year> classes, int dim,
                 std::vector<double> weights, std::vector<double> biases,
                 SvmOptions options = {});

  const std::vector<Year>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  int dim() const { return dim_; }
  const SvmOptions& options() const { return options_; }

  std::span<const double> weights(std::size_t c) const {
    return {weights_.data() + c * dim_, static_cast<std::size_t>(dim_)};
  }
  double bias(std::size_t c) const { return biases_[c]; }

  std::vector<double> DecisionScores(std::span<const double> features) const;
  Year PredictYear(std::span<const double> features) const;

  std::vector<double> DecisionScores(const TopicDistribution& theta) const {
    return DecisionScores(theta.theta);
  }
  Year PredictYear(const TopicDistribution& theta) const {
    return PredictYear(theta.theta);
  }

  friend bool operator==(const YearClassifier&,
                         const YearClassifier&) = default;

 private:
  std::vector<Year> classes_;
  int dim_;
  std::vector<double> weights_;
  std::vector<double> biases_;
  SvmOptions options_;
};

// Trains one binary L2-regularized hinge-loss machine per distinct label
// with Pegasos-style stochastic subgradient steps:
//   lambda = 1 / (C n),  step_t = 1 / (lambda t)
// The bias is an extra weight on a constant feature of 1 and is regularized
// with the rest. Each epoch visits the examples once in an order drawn from
// the seeded generator; all machines share that order. Iterates are
// projected onto the ball of radius 1/sqrt(lambda).
YearClassifier TrainSvm(std::span<const TopicDistribution> features,
                        std::span<const Year> labels,
                        const SvmOptions& options = {});

// lambda/2 |(w, b)|^2 + mean hinge loss of the one-vs-rest machine for
// classes()[class_index] on the given data. Equals 1 at w = 0, b = 0.
double OneVsRestObjective(const YearClassifier& clf, std::size_t class_index,
                          std::span<const TopicDistribution> features,
                          std::span<const Year> labels);

struct PredictionRecord {
  std::string doc_id;
  Year true_year = 0;
  Year predicted_year = 0;

  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

// "CHRONO-SVM 1" section; reals carry kModelDigits significant digits.
void WriteYearClassifier(const YearClassifier& clf, std::ostream& out);
YearClassifier ReadYearClassifier(std::istream& in,
                                  std::string_view source = "<model>");
YearClassifier ReadYearClassifier(LineReader& reader);

}  // namespace turnaround

#endif  // TURNAROUND_YEARCLF_H_
