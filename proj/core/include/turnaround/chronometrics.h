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

#ifndef TURNAROUND_CHRONOMETRICS_H_
#define TURNAROUND_CHRONOMETRICS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "turnaround/corpus.h"
#include "turnaround/yearclf.h"

namespace turnaround {

// Signed prediction error in years: predicted - true.
inline int PredictionError(const PredictionRecord& record) {
  return record.predicted_year - record.true_year;
}

// Mean of |PredictionError| over the records. Throws on an empty list.
double MeanAbsoluteError(std::span<const PredictionRecord> records);

// Rows are true years and columns predicted years, both over `classes`.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::vector<Year> classes);

  const std::vector<Year>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  long long count(std::size_t true_index, std::size_t predicted_index) const {
    return counts_[true_index * classes_.size() + predicted_index];
  }
  long long Total() const;
  long long RowTotal(std::size_t true_index) const;

  // Throws when either year is not one of the classes.
  void Add(Year true_year, Year predicted_year);

  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;

 private:
  std::size_t IndexOf(Year year) const;

  std::vector<Year> classes_;
  std::vector<long long> counts_;
};

ConfusionMatrix BuildConfusionMatrix(std::span<const PredictionRecord> records,
                                     std::vector<Year> classes);

// First row and column hold the class years; the corner cell is
// "true\predicted".
void WriteConfusionCsv(const ConfusionMatrix& matrix, std::ostream& out);

// Innovation score of one year and the pieces it is built from.
//
// With P the year's records, Future = {p : yhat > y}, Past = {p : yhat < y}:
//   err_future = sum over Future of (yhat - y)
//   err_past   = sum over Past of (y - yhat)
//   score = err_future / |P| * norm_future - err_past / |P| * norm_past
// The normalizers divide by the largest mean error attainable in each
// direction, norm_future = 1 / (Y_e - y) and norm_past = 1 / (y - Y_b). At
// y = Y_e (resp. Y_b) that direction has no room and its normalizer is 0.
struct YearScore {
  Year year = 0;
  double score = 0.0;
  std::int64_t err_future = 0;
  std::int64_t err_past = 0;
  std::int64_t n_papers = 0;
  std::int64_t n_future = 0;
  std::int64_t n_past = 0;
  double norm_future = 0.0;
  double norm_past = 0.0;

  friend bool operator==(const YearScore&, const YearScore&) = default;
};

double FutureNormalizer(Year year, Year year_end);
double PastNormalizer(Year year, Year year_begin);

// The score formula applied to stored components.
double ComposeInnovationScore(std::int64_t err_future, std::int64_t err_past,
                              std::int64_t n_papers, double norm_future,
                              double norm_past);

// All records must have true_year == year, and year must lie in
// [year_begin, year_end].
YearScore InnovationScore(std::span<const PredictionRecord> records_for_year,
                          Year year, Year year_begin, Year year_end);

// Scores every present year that has at least one record, ordered by score
// descending and then by year ascending. The year range is the corpus's.
std::vector<YearScore> RankYears(std::span<const PredictionRecord> records,
                                 const Corpus& corpus);

// Header "year,score,err_future,err_past,n_papers,n_future,n_past,
// norm_future,norm_past"; rows in the given order.
void WriteYearScoresCsv(std::span<const YearScore> scores, std::ostream& out);

}  // namespace turnaround

#endif  // TURNAROUND_CHRONOMETRICS_H_
