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

#include "turnaround/yearclf.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "turnaround/error.h"
#include "turnaround/rng.h"

namespace turnaround {
namespace {

constexpr std::string_view kSvmHeader = "CHRONO-SVM 1";

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

YearClassifier::YearClassifier(std::vector<Year> classes, int dim,
                               std::vector<double> weights,
                               std::vector<double> biases, SvmOptions options)
    : classes_(std::move(classes)),
      dim_(dim),
      weights_(std::move(weights)),
      biases_(std::move(biases)),
      options_(options) {
  if (classes_.empty()) throw Error("classifier needs at least one class");
  for (std::size_t i = 1; i < classes_.size(); ++i) {
    if (classes_[i - 1] >= classes_[i]) {
      throw Error("classifier classes must be strictly increasing");
    }
  }
  if (dim_ < 1) throw Error("classifier feature dimension must be >= 1");
  if (weights_.size() != classes_.size() * dim_ ||
      biases_.size() != classes_.size()) {
    throw Error("classifier weights have the wrong shape");
  }
}

std::vector<double> YearClassifier::DecisionScores(
    std::span<const double> features) const {
  if (features.size() != static_cast<std::size_t>(dim_)) {
    throw Error("feature dimension " + std::to_string(features.size()) +
                " does not match classifier dimension " +
                std::to_string(dim_));
  }
  std::vector<double> scores(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    scores[c] = Dot(weights(c), features) + biases_[c];
  }
  return scores;
}

Year YearClassifier::PredictYear(std::span<const double> features) const {
  const std::vector<double> scores = DecisionScores(features);
  // max_element returns the first maximum, i.e. the earliest year.
  return classes_[std::max_element(scores.begin(), scores.end()) -
                  scores.begin()];
}

YearClassifier TrainSvm(std::span<const TopicDistribution> features,
                        std::span<const Year> labels,
                        const SvmOptions& options) {
  if (features.size() != labels.size()) {
    throw Error("feature and label counts differ (" +
                std::to_string(features.size()) + " vs " +
                std::to_string(labels.size()) + ")");
  }
  if (features.size() < 2) throw Error("SVM needs at least 2 examples");
  if (!(options.c > 0.0)) throw Error("SVM C must be positive");
  if (options.epochs < 1) throw Error("SVM needs at least 1 epoch");

  const std::size_t n = features.size();
  const std::size_t dim = features.front().size();
  if (dim == 0) throw Error("SVM features must be nonempty");
  for (const TopicDistribution& x : features) {
    if (x.size() != dim) throw Error("inconsistent feature dimensions");
  }

  std::vector<Year> classes(labels.begin(), labels.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.size() < 2) {
    throw Error("SVM needs at least 2 distinct labels");
  }
  std::vector<std::size_t> label_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    label_index[i] = std::lower_bound(classes.begin(), classes.end(),
                                      labels[i]) -
                     classes.begin();
  }

  // Augmented weights (w, b) per class.
  const std::size_t stride = dim + 1;
  const std::size_t num_classes = classes.size();
  std::vector<double> w(num_classes * stride, 0.0);

  const double lambda = 1.0 / (options.c * static_cast<double>(n));
  const double radius = 1.0 / std::sqrt(lambda);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(options.seed);
  std::uint64_t t = 0;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    rng.Shuffle(std::span<std::size_t>(order));
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double shrink = 1.0 - eta * lambda;
      const std::vector<double>& x = features[i].theta;
      for (std::size_t c = 0; c < num_classes; ++c) {
        double* wc = &w[c * stride];
        const double y = label_index[i] == c ? 1.0 : -1.0;
        double margin = wc[dim];
        for (std::size_t j = 0; j < dim; ++j) margin += wc[j] * x[j];
        margin *= y;
        double norm2 = 0.0;
        for (std::size_t j = 0; j <= dim; ++j) {
          double step = shrink * wc[j];
          if (margin < 1.0) step += eta * y * (j < dim ? x[j] : 1.0);
          wc[j] = step;
          norm2 += step * step;
        }
        const double norm = std::sqrt(norm2);
        if (norm > radius) {
          const double scale = radius / norm;
          for (std::size_t j = 0; j <= dim; ++j) wc[j] *= scale;
        }
      }
    }
  }

  std::vector<double> weights(num_classes * dim);
  std::vector<double> biases(num_classes);
  for (std::size_t c = 0; c < num_classes; ++c) {
    std::copy_n(&w[c * stride], dim, &weights[c * dim]);
    biases[c] = w[c * stride + dim];
  }
  return YearClassifier(std::move(classes), static_cast<int>(dim),
                        std::move(weights), std::move(biases), options);
}

double OneVsRestObjective(const YearClassifier& clf, std::size_t class_index,
                          std::span<const TopicDistribution> features,
                          std::span<const Year> labels) {
  if (features.size() != labels.size() || features.empty()) {
    throw Error("objective needs matching, nonempty features and labels");
  }
  const double n = static_cast<double>(features.size());
  const double lambda = 1.0 / (clf.options().c * n);
  std::span<const double> w = clf.weights(class_index);
  const double b = clf.bias(class_index);
  const Year year = clf.classes().at(class_index);
  double loss = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const double y = labels[i] == year ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - y * (Dot(w, features[i].theta) + b));
  }
  return 0.5 * lambda * (Dot(w, w) + b * b) + loss / n;
}

void WriteYearClassifier(const YearClassifier& clf, std::ostream& out) {
  const ClassicLocale classic(out);
  out << kSvmHeader << '\n';
  out << "classes " << clf.num_classes() << '\n';
  out << "dim " << clf.dim() << '\n';
  out << "c " << FormatDouble(clf.options().c, kModelDigits) << '\n';
  out << "epochs " << clf.options().epochs << '\n';
  out << "seed " << clf.options().seed << '\n';
  // One line per class: year, bias, then the weights.
  for (std::size_t c = 0; c < clf.num_classes(); ++c) {
    out << clf.classes()[c] << ' ' << FormatDouble(clf.bias(c), kModelDigits);
    for (double w : clf.weights(c)) out << ' ' << FormatDouble(w, kModelDigits);
    out << '\n';
  }
}

YearClassifier ReadYearClassifier(LineReader& reader) {
  if (reader.Expect(kSvmHeader) != kSvmHeader) {
    reader.Fail("expected header '" + std::string(kSvmHeader) + "'");
  }
  const std::int64_t num_classes = ExpectIntField(reader, "classes");
  const std::int64_t dim = ExpectIntField(reader, "dim");
  if (num_classes < 1 || dim < 1) reader.Fail("bad classifier dimensions");
  SvmOptions options;
  options.c = ExpectDoubleField(reader, "c");
  options.epochs = static_cast<int>(ExpectIntField(reader, "epochs"));
  options.seed = ExpectUintField(reader, "seed");

  std::vector<Year> classes;
  std::vector<double> weights;
  std::vector<double> biases;
  for (std::int64_t c = 0; c < num_classes; ++c) {
    std::string line = reader.Expect("class row");
    auto fields = SplitFields(line);
    if (static_cast<std::int64_t>(fields.size()) != dim + 2) {
      reader.Fail("class row has " + std::to_string(fields.size()) +
                  " fields, expected " + std::to_string(dim + 2));
    }
    std::int64_t year = 0;
    double bias = 0;
    if (!ParseInt(fields[0], &year)) reader.Fail("bad class year");
    if (!ParseDouble(fields[1], &bias)) reader.Fail("bad class bias");
    classes.push_back(static_cast<Year>(year));
    biases.push_back(bias);
    for (std::int64_t j = 0; j < dim; ++j) {
      double w = 0;
      if (!ParseDouble(fields[j + 2], &w)) reader.Fail("bad class weight");
      weights.push_back(w);
    }
  }
  try {
    return YearClassifier(std::move(classes), static_cast<int>(dim),
                          std::move(weights), std::move(biases), options);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    reader.Fail(e.what());
  }
}

YearClassifier ReadYearClassifier(std::istream& in, std::string_view source) {
  LineReader reader(in, std::string(source));
  return ReadYearClassifier(reader);
}

}  // namespace turnaround
