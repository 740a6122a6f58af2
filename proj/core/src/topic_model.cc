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

#include <algorithm>
#include <cmath>
#include <map>

#include "turnaround/error.h"
#include "turnaround/text_format.h"
#include "turnaround/topics.h"

namespace turnaround {
namespace {

constexpr double kSimplexTolerance = 1e-9;
constexpr std::string_view kModelHeader = "CHRONO-LDA 1";

void CheckRow(std::span<const double> row, int topic) {
  double sum = 0.0;
  for (double p : row) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error("phi row " + std::to_string(topic) +
                  " has a negative or non-finite entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw Error("phi row " + std::to_string(topic) + " sums to " +
                FormatDouble(sum) + ", not 1");
  }
}

}  // namespace

int TopicDistribution::Argmax() const {
  return static_cast<int>(std::max_element(theta.begin(), theta.end()) -
                          theta.begin());
}

TopicDistribution TopicDistribution::Uniform(int num_topics) {
  return {std::vector<double>(num_topics, 1.0 / num_topics)};
}

TopicModel::TopicModel(int num_topics, double alpha, double beta,
                       std::vector<std::string> terms, std::vector<double> phi,
                       TrainingInfo info)
    : num_topics_(num_topics),
      alpha_(alpha),
      beta_(beta),
      terms_(std::move(terms)),
      phi_(std::move(phi)),
      info_(info) {
  if (num_topics_ < 2) throw Error("topic model needs at least 2 topics");
  if (terms_.empty()) throw Error("topic model needs a nonempty vocabulary");
  if (!(alpha_ > 0.0) || !(beta_ > 0.0)) {
    throw Error("topic model hyperparameters must be positive");
  }
  if (phi_.size() != static_cast<std::size_t>(num_topics_) * terms_.size()) {
    throw Error("phi has the wrong shape");
  }
  for (int k = 0; k < num_topics_; ++k) CheckRow(Row(k), k);
}

Vocabulary TopicModel::MakeVocabulary() const {
  return Vocabulary::FromTerms(terms_);
}

std::vector<WeightedTerm> TopWords(const TopicModel& model, int topic, int n) {
  if (topic < 0 || topic >= model.num_topics()) {
    throw Error("topic " + std::to_string(topic) + " out of range [0, " +
                std::to_string(model.num_topics()) + ")");
  }
  if (n < 1) throw Error("top-word count must be >= 1");
  std::span<const double> row = model.Row(topic);
  std::vector<int> order(row.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  // Terms are stored sorted, so a stable sort on probability keeps
  // lexicographic order among ties.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return row[a] > row[b]; });
  const std::size_t count = std::min<std::size_t>(n, order.size());
  std::vector<WeightedTerm> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({model.terms()[order[i]], row[order[i]]});
  }
  return out;
}

std::vector<TrendSeries> TopicTrends(std::span<const TopicDistribution> thetas,
                                     const Corpus& corpus) {
  if (thetas.size() != corpus.size()) {
    throw Error("topic trends need one theta per document");
  }
  const std::size_t k = thetas.front().size();
  std::map<Year, std::pair<std::vector<double>, int>> sums;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    if (thetas[d].size() != k) throw Error("inconsistent theta dimensions");
    auto& [sum, count] = sums[corpus[d].year];
    sum.resize(k, 0.0);
    for (std::size_t t = 0; t < k; ++t) sum[t] += thetas[d].theta[t];
    ++count;
  }
  std::vector<TrendSeries> trends(k);
  for (std::size_t t = 0; t < k; ++t) {
    trends[t].topic = static_cast<int>(t);
    for (const auto& [year, acc] : sums) {
      trends[t].mean_theta.emplace_back(year, acc.first[t] / acc.second);
    }
  }
  return trends;
}

void WriteTrendsCsv(std::span<const TrendSeries> trends, std::ostream& out) {
  const ClassicLocale classic(out);
  out << "topic,year,mean_theta\n";
  for (const TrendSeries& series : trends) {
    for (const auto& [year, mean] : series.mean_theta) {
      out << series.topic << ',' << year << ',' << FormatDouble(mean) << '\n';
    }
  }
}

void WriteTopicModel(const TopicModel& model, std::ostream& out) {
  const ClassicLocale classic(out);
  out << kModelHeader << '\n';
  out << "topics " << model.num_topics() << '\n';
  out << "terms " << model.vocab_size() << '\n';
  out << "alpha " << FormatDouble(model.alpha(), kModelDigits) << '\n';
  out << "beta " << FormatDouble(model.beta(), kModelDigits) << '\n';
  out << "seed " << model.info().seed << '\n';
  out << "iterations " << model.info().iterations << '\n';
  out << "vocabulary\n";
  for (const std::string& term : model.terms()) out << term << '\n';
  out << "phi\n";
  for (int k = 0; k < model.num_topics(); ++k) {
    bool first = true;
    for (double p : model.Row(k)) {
      if (!first) out << ' ';
      out << FormatDouble(p, kModelDigits);
      first = false;
    }
    out << '\n';
  }
}

TopicModel ReadTopicModel(LineReader& reader) {
  if (reader.Expect(kModelHeader) != kModelHeader) {
    reader.Fail("expected header '" + std::string(kModelHeader) + "'");
  }
  const std::int64_t k = ExpectIntField(reader, "topics");
  const std::int64_t v = ExpectIntField(reader, "terms");
  if (k < 2 || v < 1) reader.Fail("bad model dimensions");
  const double alpha = ExpectDoubleField(reader, "alpha");
  const double beta = ExpectDoubleField(reader, "beta");
  const std::uint64_t seed = ExpectUintField(reader, "seed");
  const std::int64_t iterations = ExpectIntField(reader, "iterations");

  if (reader.Expect("vocabulary") != "vocabulary") {
    reader.Fail("expected 'vocabulary'");
  }
  std::vector<std::string> terms;
  terms.reserve(v);
  for (std::int64_t i = 0; i < v; ++i) {
    std::string term = reader.Expect("vocabulary term");
    if (term.empty() || SplitFields(term).size() != 1) {
      reader.Fail("bad vocabulary term");
    }
    if (!terms.empty() && !(terms.back() < term)) {
      reader.Fail("vocabulary terms must be strictly increasing");
    }
    terms.push_back(std::move(term));
  }
  if (reader.Expect("phi") != "phi") reader.Fail("expected 'phi'");
  std::vector<double> phi;
  phi.reserve(k * v);
  for (std::int64_t row = 0; row < k; ++row) {
    std::string line = reader.Expect("phi row");
    auto fields = SplitFields(line);
    if (static_cast<std::int64_t>(fields.size()) != v) {
      reader.Fail("phi row has " + std::to_string(fields.size()) +
                  " entries, expected " + std::to_string(v));
    }
    for (std::string_view field : fields) {
      double p = 0;
      if (!ParseDouble(field, &p)) reader.Fail("bad phi entry");
      phi.push_back(p);
    }
  }
  try {
    return TopicModel(static_cast<int>(k), alpha, beta, std::move(terms),
                      std::move(phi),
                      {static_cast<int>(iterations), seed});
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    reader.Fail(e.what());
  }
}

TopicModel ReadTopicModel(std::istream& in, std::string_view source) {
  LineReader reader(in, std::string(source));
  return ReadTopicModel(reader);
}

}  // namespace turnaround
