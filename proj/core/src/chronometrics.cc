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

#include "turnaround/chronometrics.h"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "turnaround/error.h"
#include "turnaround/text_format.h"

namespace turnaround {

double MeanAbsoluteError(std::span<const PredictionRecord> records) {
  if (records.empty()) throw Error("mean absolute error of no records");
  long long total = 0;
  for (const PredictionRecord& r : records) {
    total += std::abs(PredictionError(r));
  }
  return static_cast<double>(total) / static_cast<double>(records.size());
}

ConfusionMatrix::ConfusionMatrix(std::vector<Year> classes)
    : classes_(std::move(classes)) {
  for (std::size_t i = 1; i < classes_.size(); ++i) {
    if (classes_[i - 1] >= classes_[i]) {
      throw Error("confusion matrix classes must be strictly increasing");
    }
  }
  counts_.assign(classes_.size() * classes_.size(), 0);
}

long long ConfusionMatrix::Total() const {
  long long total = 0;
  for (long long c : counts_) total += c;
  return total;
}

long long ConfusionMatrix::RowTotal(std::size_t true_index) const {
  long long total = 0;
  for (std::size_t j = 0; j < classes_.size(); ++j) {
    total += count(true_index, j);
  }
  return total;
}

std::size_t ConfusionMatrix::IndexOf(Year year) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), year);
  if (it == classes_.end() || *it != year) {
    throw Error("year " + std::to_string(year) +
                " is not a confusion matrix class");
  }
  return it - classes_.begin();
}

void ConfusionMatrix::Add(Year true_year, Year predicted_year) {
  ++counts_[IndexOf(true_year) * classes_.size() + IndexOf(predicted_year)];
}

ConfusionMatrix BuildConfusionMatrix(std::span<const PredictionRecord> records,
                                     std::vector<Year> classes) {
  ConfusionMatrix matrix(std::move(classes));
  for (const PredictionRecord& r : records) {
    matrix.Add(r.true_year, r.predicted_year);
  }
  return matrix;
}

void WriteConfusionCsv(const ConfusionMatrix& matrix, std::ostream& out) {
  const ClassicLocale classic(out);
  out << "true\\predicted";
  for (Year y : matrix.classes()) out << ',' << y;
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << matrix.classes()[i];
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      out << ',' << matrix.count(i, j);
    }
    out << '\n';
  }
}

double FutureNormalizer(Year year, Year year_end) {
  return year < year_end ? 1.0 / static_cast<double>(year_end - year) : 0.0;
}

double PastNormalizer(Year year, Year year_begin) {
  return year > year_begin ? 1.0 / static_cast<double>(year - year_begin)
                           : 0.0;
}

double ComposeInnovationScore(std::int64_t err_future, std::int64_t err_past,
                              std::int64_t n_papers, double norm_future,
                              double norm_past) {
  const double n = static_cast<double>(n_papers);
  return static_cast<double>(err_future) / n * norm_future -
         static_cast<double>(err_past) / n * norm_past;
}

YearScore InnovationScore(std::span<const PredictionRecord> records_for_year,
                          Year year, Year year_begin, Year year_end) {
  if (records_for_year.empty()) {
    throw Error("year " + std::to_string(year) + " has no records to score");
  }
  if (year < year_begin || year > year_end) {
    throw Error("year " + std::to_string(year) + " outside [" +
                std::to_string(year_begin) + ", " + std::to_string(year_end) +
                "]");
  }
  YearScore s;
  s.year = year;
  s.n_papers = static_cast<std::int64_t>(records_for_year.size());
  for (const PredictionRecord& r : records_for_year) {
    if (r.true_year != year) {
      throw Error("record '" + r.doc_id + "' belongs to year " +
                  std::to_string(r.true_year) + ", not " +
                  std::to_string(year));
    }
    if (r.predicted_year > year) {
      ++s.n_future;
      s.err_future += r.predicted_year - year;
    } else if (r.predicted_year < year) {
      ++s.n_past;
      s.err_past += year - r.predicted_year;
    }
  }
  s.norm_future = FutureNormalizer(year, year_end);
  s.norm_past = PastNormalizer(year, year_begin);
  s.score = ComposeInnovationScore(s.err_future, s.err_past, s.n_papers,
                                   s.norm_future, s.norm_past);
  return s;
}

std::vector<YearScore> RankYears(std::span<const PredictionRecord> records,
                                 const Corpus& corpus) {
  std::map<Year, std::vector<PredictionRecord>> by_year;
  for (const PredictionRecord& r : records) by_year[r.true_year].push_back(r);
  std::vector<YearScore> scores;
  for (Year year : corpus.present_years()) {
    auto it = by_year.find(year);
    if (it == by_year.end()) continue;
    scores.push_back(InnovationScore(it->second, year, corpus.year_begin(),
                                     corpus.year_end()));
    by_year.erase(it);
  }
  if (!by_year.empty()) {
    throw Error("record year " + std::to_string(by_year.begin()->first) +
                " is not a corpus year");
  }
  std::sort(scores.begin(), scores.end(),
            [](const YearScore& a, const YearScore& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.year < b.year;
            });
  return scores;
}

void WriteYearScoresCsv(std::span<const YearScore> scores, std::ostream& out) {
  const ClassicLocale classic(out);
  out << "year,score,err_future,err_past,n_papers,n_future,n_past,"
         "norm_future,norm_past\n";
  for (const YearScore& s : scores) {
    out << s.year << ',' << FormatDouble(s.score) << ',' << s.err_future << ','
        << s.err_past << ',' << s.n_papers << ',' << s.n_future << ','
        << s.n_past << ',' << FormatDouble(s.norm_future) << ','
        << FormatDouble(s.norm_past) << '\n';
  }
}

}  // namespace turnaround
