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

#include <cmath>
#include <numeric>

#include "turnaround/error.h"
#include "turnaround/rng.h"
#include "turnaround/topics.h"

namespace turnaround {
namespace {

// Samples an index from unnormalized cumulative weights.
int SampleCumulative(std::span<const double> cumulative, Rng& rng) {
  const double u = rng.Uniform() * cumulative.back();
  const int n = static_cast<int>(cumulative.size());
  for (int k = 0; k < n; ++k) {
    if (u < cumulative[k]) return k;
  }
  return n - 1;
}

}  // namespace

double CollapsedLogLikelihood(std::span<const int> topic_term_counts,
                              std::span<const int> topic_totals,
                              std::span<const int> doc_topic_counts,
                              std::span<const int> doc_lengths, int num_topics,
                              int vocab_size, double alpha, double beta) {
  const double k = num_topics;
  const double v = vocab_size;
  double ll = k * (std::lgamma(v * beta) - v * std::lgamma(beta));
  for (int n : topic_term_counts) ll += std::lgamma(n + beta);
  for (int n : topic_totals) ll -= std::lgamma(n + v * beta);

  const double d = static_cast<double>(doc_lengths.size());
  ll += d * (std::lgamma(k * alpha) - k * std::lgamma(alpha));
  for (int n : doc_topic_counts) ll += std::lgamma(n + alpha);
  for (int n : doc_lengths) ll -= std::lgamma(n + k * alpha);
  return ll;
}

LdaFit TrainLda(std::span<const BowVector> docs, const Vocabulary& vocab,
                const LdaOptions& options) {
  const int num_topics = options.num_topics;
  const double alpha = options.ResolvedAlpha();
  const double beta = options.beta;
  if (num_topics < 2) throw Error("LDA needs at least 2 topics");
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw Error("LDA hyperparameters must be positive");
  }
  if (options.iterations < 1) throw Error("LDA needs at least 1 iteration");
  if (vocab.empty()) throw Error("LDA needs a nonempty vocabulary");
  const int vocab_size = static_cast<int>(vocab.size());
  const std::size_t num_docs = docs.size();
  const std::size_t kk = static_cast<std::size_t>(num_topics);

  // Flattened tokens in scan order.
  std::vector<int> words;
  std::vector<std::size_t> offsets{0};
  for (const BowVector& doc : docs) {
    for (const BowEntry& e : doc.entries) {
      if (e.term < 0 || e.term >= vocab_size || e.count < 1) {
        throw Error("bag-of-words entry out of range for the vocabulary");
      }
      words.insert(words.end(), e.count, e.term);
    }
    offsets.push_back(words.size());
  }
  if (words.empty()) throw Error("LDA needs at least one nonempty document");

  std::vector<int> z(words.size());
  std::vector<int> word_topic(static_cast<std::size_t>(vocab_size) * kk, 0);
  std::vector<int> topic_total(kk, 0);
  std::vector<int> doc_topic(num_docs * kk, 0);
  std::vector<int> doc_length(num_docs, 0);

  Rng rng(options.seed);
  for (std::size_t d = 0; d < num_docs; ++d) {
    doc_length[d] = static_cast<int>(offsets[d + 1] - offsets[d]);
    for (std::size_t i = offsets[d]; i < offsets[d + 1]; ++i) {
      const int k = static_cast<int>(rng.Below(kk));
      z[i] = k;
      ++word_topic[words[i] * kk + k];
      ++topic_total[k];
      ++doc_topic[d * kk + k];
    }
  }

  std::vector<LikelihoodSample> trace;
  auto record = [&](int iteration) {
    trace.push_back({iteration,
                     CollapsedLogLikelihood(word_topic, topic_total, doc_topic,
                                            doc_length, num_topics, vocab_size,
                                            alpha, beta)});
  };

  const double v_beta = vocab_size * beta;
  std::vector<double> cumulative(kk);
  for (int iter = 1; iter <= options.iterations; ++iter) {
    for (std::size_t d = 0; d < num_docs; ++d) {
      int* nd = &doc_topic[d * kk];
      for (std::size_t i = offsets[d]; i < offsets[d + 1]; ++i) {
        const int w = words[i];
        int* nw = &word_topic[w * kk];
        int k = z[i];
        --nd[k];
        --nw[k];
        --topic_total[k];
        double acc = 0.0;
        for (std::size_t t = 0; t < kk; ++t) {
          acc += (nd[t] + alpha) * (nw[t] + beta) / (topic_total[t] + v_beta);
          cumulative[t] = acc;
        }
        k = SampleCumulative(cumulative, rng);
        z[i] = k;
        ++nd[k];
        ++nw[k];
        ++topic_total[k];
      }
    }
    if (options.likelihood_interval > 0 &&
        (iter == 1 || iter % options.likelihood_interval == 0)) {
      record(iter);
    }
  }

  std::vector<double> phi(kk * vocab_size);
  for (std::size_t k = 0; k < kk; ++k) {
    const double denom = topic_total[k] + v_beta;
    for (int w = 0; w < vocab_size; ++w) {
      phi[k * vocab_size + w] = (word_topic[w * kk + k] + beta) / denom;
    }
  }

  std::vector<TopicDistribution> thetas;
  thetas.reserve(num_docs);
  for (std::size_t d = 0; d < num_docs; ++d) {
    TopicDistribution theta;
    theta.theta.resize(kk);
    const double denom = doc_length[d] + num_topics * alpha;
    for (std::size_t k = 0; k < kk; ++k) {
      theta.theta[k] = (doc_topic[d * kk + k] + alpha) / denom;
    }
    thetas.push_back(std::move(theta));
  }

  return LdaFit{
      TopicModel(num_topics, alpha, beta, vocab.terms(), std::move(phi),
                 {options.iterations, options.seed}),
      std::move(thetas), std::move(trace)};
}

Inference InferTheta(const TopicModel& model, const BowVector& doc,
                     const InferOptions& options) {
  const int num_topics = model.num_topics();
  const std::size_t kk = static_cast<std::size_t>(num_topics);
  if (options.iterations < 1) throw Error("inference needs at least 1 iteration");

  std::vector<int> words;
  for (const BowEntry& e : doc.entries) {
    if (e.term < 0 || e.term >= model.vocab_size() || e.count < 1) {
      throw Error("bag-of-words entry out of range for the topic model");
    }
    words.insert(words.end(), e.count, e.term);
  }
  if (words.empty()) {
    return {TopicDistribution::Uniform(num_topics), true};
  }

  const double alpha = model.alpha();
  Rng rng(options.seed);
  std::vector<int> z(words.size());
  std::vector<int> doc_topic(kk, 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    z[i] = static_cast<int>(rng.Below(kk));
    ++doc_topic[z[i]];
  }

  std::vector<double> cumulative(kk);
  for (int iter = 0; iter < options.iterations; ++iter) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      --doc_topic[z[i]];
      double acc = 0.0;
      for (std::size_t t = 0; t < kk; ++t) {
        acc += (doc_topic[t] + alpha) * model.phi(static_cast<int>(t), words[i]);
        cumulative[t] = acc;
      }
      const int k = acc > 0.0 ? SampleCumulative(cumulative, rng)
                              : static_cast<int>(rng.Below(kk));
      z[i] = k;
      ++doc_topic[k];
    }
  }

  TopicDistribution theta;
  theta.theta.resize(kk);
  const double denom = static_cast<double>(words.size()) + num_topics * alpha;
  for (std::size_t k = 0; k < kk; ++k) {
    theta.theta[k] = (doc_topic[k] + alpha) / denom;
  }
  return {std::move(theta), false};
}

}  // namespace turnaround
