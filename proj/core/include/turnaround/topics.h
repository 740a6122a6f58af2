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

#ifndef TURNAROUND_TOPICS_H_
#define TURNAROUND_TOPICS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turnaround/corpus.h"
#include "turnaround/text_format.h"
#include "turnaround/vocabulary.h"

namespace turnaround {

// Per-document topic proportions; a point on the K-simplex.
struct TopicDistribution {
  std::vector<double> theta;

  std::size_t size() const { return theta.size(); }
  // Lowest index among the maxima.
  int Argmax() const;

  static TopicDistribution Uniform(int num_topics);

  friend bool operator==(const TopicDistribution&,
                         const TopicDistribution&) = default;
};

// Trained topic-word distributions together with the vocabulary they index.
// Immutable after construction; safe to share across threads.
class TopicModel {
 public:
  struct TrainingInfo {
    int iterations = 0;
    std::uint64_t seed = 0;
    friend bool operator==(const TrainingInfo&, const TrainingInfo&) = default;
  };

  // `phi` is K x V, row-major. Every row must lie on the simplex.
  TopicModel(int num_topics, double alpha, double beta,
             std::vector<std::string> terms, std::vector<double> phi,
             TrainingInfo info);

  int num_topics() const { return num_topics_; }
  int vocab_size() const { return static_cast<int>(terms_.size()); }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const TrainingInfo& info() const { return info_; }
  const std::vector<std::string>& terms() const { return terms_; }

  double phi(int topic, int term) const {
    return phi_[static_cast<std::size_t>(topic) * terms_.size() + term];
  }
  std::span<const double> Row(int topic) const {
    return {phi_.data() + static_cast<std::size_t>(topic) * terms_.size(),
            terms_.size()};
  }

  // Rebuilds the vocabulary the model was trained over.
  Vocabulary MakeVocabulary() const;

  friend bool operator==(const TopicModel&, const TopicModel&) = default;

 private:
  int num_topics_;
  double alpha_;
  double beta_;
  std::vector<std::string> terms_;
  std::vector<double> phi_;
  TrainingInfo info_;
};

inline constexpr double DefaultAlpha(int num_topics) {
  return 50.0 / num_topics;
}

struct LdaOptions {
  int num_topics = 20;
  // Symmetric document-topic prior; unset selects DefaultAlpha(num_topics).
  std::optional<double> alpha;
  double beta = 0.01;
  int iterations = 1000;
  std::uint64_t seed = 42;
  // Log-likelihood is recorded after iteration 1 and every
  // `likelihood_interval` iterations; 0 disables the trace.
  int likelihood_interval = 50;

  double ResolvedAlpha() const {
    return alpha.value_or(DefaultAlpha(num_topics));
  }
};

struct LikelihoodSample {
  int iteration = 0;
  double log_likelihood = 0.0;
};

struct LdaFit {
  TopicModel model;
  // One per input document; empty documents get the uniform distribution.
  std::vector<TopicDistribution> thetas;
  std::vector<LikelihoodSample> likelihood_trace;
};

// Collapsed Gibbs sampling over token-topic assignments.
//
// Documents are visited in input order and each document's tokens in term-id
// order (the order of its BowVector entries, each repeated `count` times).
// Topics are initialized uniformly at random. phi and theta are point
// estimates from the final sample:
//   phi[k][w]   = (n_kw + beta)  / (n_k + V beta)
//   theta[d][k] = (n_dk + alpha) / (n_d + K alpha)
// Identical inputs give bit-identical output.
LdaFit TrainLda(std::span<const BowVector> docs, const Vocabulary& vocab,
                const LdaOptions& options);

// log p(w | z) + log p(z) for the given assignment counts, in the standard
// collapsed form. Exposed for tests and benchmarks.
double CollapsedLogLikelihood(std::span<const int> topic_term_counts,
                              std::span<const int> topic_totals,
                              std::span<const int> doc_topic_counts,
                              std::span<const int> doc_lengths, int num_topics,
                              int vocab_size, double alpha, double beta);

struct InferOptions {
  int iterations = 100;
  std::uint64_t seed = 42;
};

struct Inference {
  TopicDistribution theta;
  // Set when the document had no in-vocabulary tokens; theta is uniform.
  bool empty_document = false;
};

// Fold-in Gibbs sampling with phi held fixed:
//   p(z = k) ∝ (n_dk + alpha) phi[k][w]
Inference InferTheta(const TopicModel& model, const BowVector& doc,
                     const InferOptions& options);

struct WeightedTerm {
  std::string term;
  double probability = 0.0;
};

// The n most probable terms of a topic; ties in lexicographic order.
std::vector<WeightedTerm> TopWords(const TopicModel& model, int topic, int n);

// Mean theta per present year, for one topic.
struct TrendSeries {
  int topic = 0;
  std::vector<std::pair<Year, double>> mean_theta;
};

// One series per topic; thetas[i] belongs to corpus[i].
std::vector<TrendSeries> TopicTrends(std::span<const TopicDistribution> thetas,
                                     const Corpus& corpus);

// Header "topic,year,mean_theta".
void WriteTrendsCsv(std::span<const TrendSeries> trends, std::ostream& out);

// Line-oriented text format, starting with the line "CHRONO-LDA 1". Reals
// carry kModelDigits significant digits, so Write(Read(Write(m))) is
// byte-identical to Write(m).
void WriteTopicModel(const TopicModel& model, std::ostream& out);
// Reads one model section. Stops after the last phi row, so a classifier
// section may follow in the same stream.
TopicModel ReadTopicModel(std::istream& in, std::string_view source = "<model>");
TopicModel ReadTopicModel(LineReader& reader);

}  // namespace turnaround

#endif  // TURNAROUND_TOPICS_H_
