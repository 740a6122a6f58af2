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
#include <sstream>

#include "gtest/gtest.h"
#include "testing/oracles.h"
#include "turnaround/chronometrics.h"
#include "turnaround/error.h"
#include "turnaround/rng.h"

namespace turnaround {
namespace {

std::vector<PredictionRecord> ForYear(Year y, std::vector<Year> predicted) {
  std::vector<PredictionRecord> out;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    out.push_back({"d" + std::to_string(i), y, predicted[i]});
  }
  return out;
}

TEST(ErrorTest, SignedDifference) {
  EXPECT_EQ(PredictionError({"a", 2005, 2005}), 0);
  EXPECT_EQ(PredictionError({"a", 2005, 2008}), 3);
  EXPECT_EQ(PredictionError({"a", 2005, 2003}), -2);
}

TEST(MaeTest, Examples) {
  EXPECT_DOUBLE_EQ(MeanAbsoluteError(ForYear(2000, {2000, 2000})), 0.0);
  std::vector<PredictionRecord> r = {{"a", 2000, 2003}, {"b", 2000, 1999}};
  EXPECT_DOUBLE_EQ(MeanAbsoluteError(r), 2.0);
  EXPECT_THROW(MeanAbsoluteError({}), Error);
}

TEST(MaeTest, PermutationInvariant) {
  Rng rng(1);
  std::vector<PredictionRecord> r;
  for (int i = 0; i < 50; ++i) {
    r.push_back({"d", 1990 + static_cast<Year>(rng.Below(20)),
                 1990 + static_cast<Year>(rng.Below(20))});
  }
  const double mae = MeanAbsoluteError(r);
  for (int t = 0; t < 10; ++t) {
    rng.Shuffle(std::span<PredictionRecord>(r));
    EXPECT_DOUBLE_EQ(MeanAbsoluteError(r), mae);
  }
}

TEST(ConfusionTest, DirectTally) {
  std::vector<PredictionRecord> r = {{"a", 2000, 2001}, {"b", 2001, 2001}};
  ConfusionMatrix m = BuildConfusionMatrix(r, {2000, 2001});
  EXPECT_EQ(m.count(0, 0), 0);
  EXPECT_EQ(m.count(0, 1), 1);
  EXPECT_EQ(m.count(1, 0), 0);
  EXPECT_EQ(m.count(1, 1), 1);
  EXPECT_EQ(m.Total(), 2);
  std::ostringstream csv;
  WriteConfusionCsv(m, csv);
  EXPECT_EQ(csv.str(), "true\\predicted,2000,2001\n2000,0,1\n2001,0,1\n");
}

TEST(ConfusionTest, PerfectPredictionsAreDiagonalAndTotalsMatch) {
  std::vector<Year> classes = {2000, 2002, 2003};
  std::vector<PredictionRecord> r;
  for (Year y : classes) {
    for (int i = 0; i < 3; ++i) r.push_back({"x", y, y});
  }
  ConfusionMatrix m = BuildConfusionMatrix(r, classes);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.count(i, j), i == j ? 3 : 0);
    EXPECT_EQ(m.RowTotal(i), 3);
  }
  EXPECT_EQ(m.Total(), static_cast<long long>(r.size()));
  r.push_back({"y", 2001, 2000});
  EXPECT_THROW(BuildConfusionMatrix(r, classes), Error);
}

TEST(InnovationScoreTest, HandCase) {
  auto r = ForYear(2005, {2008, 2009, 2005, 2003});
  YearScore s = InnovationScore(r, 2005, 2000, 2010);
  EXPECT_EQ(s.err_future, 7);
  EXPECT_EQ(s.err_past, 2);
  EXPECT_EQ(s.n_papers, 4);
  EXPECT_EQ(s.n_future, 2);
  EXPECT_EQ(s.n_past, 1);
  EXPECT_DOUBLE_EQ(s.norm_future, 0.2);
  EXPECT_DOUBLE_EQ(s.norm_past, 0.2);
  EXPECT_NEAR(s.score, 0.25, 1e-12);
  EXPECT_NEAR(testing::BruteForceInnovationScore(r, 2005, 2000, 2010), 0.25, 1e-12);
}

TEST(InnovationScoreTest, ExactPredictionsScoreZero) {
  YearScore s = InnovationScore(ForYear(2003, {2003, 2003}), 2003, 2000, 2010);
  EXPECT_EQ(s.score, 0.0);
  EXPECT_EQ(s.err_future, 0);
  EXPECT_EQ(s.err_past, 0);
}

TEST(InnovationScoreTest, RangeBoundaries) {
  YearScore last = InnovationScore(ForYear(2010, {2010, 2004}), 2010, 2000, 2010);
  EXPECT_EQ(last.n_future, 0);
  EXPECT_EQ(last.norm_future, 0.0);
  EXPECT_DOUBLE_EQ(last.score, -(6.0 / 2) * (1.0 / 10));

  YearScore first = InnovationScore(ForYear(2000, {2000, 2004}), 2000, 2000, 2010);
  EXPECT_EQ(first.n_past, 0);
  EXPECT_EQ(first.norm_past, 0.0);
  EXPECT_DOUBLE_EQ(first.score, (4.0 / 2) * (1.0 / 10));
}

TEST(InnovationScoreTest, Errors) {
  EXPECT_THROW(InnovationScore({}, 2000, 2000, 2001), Error);
  EXPECT_THROW(InnovationScore(ForYear(2001, {2001}), 2000, 2000, 2001), Error);
  EXPECT_THROW(InnovationScore(ForYear(2003, {2003}), 2003, 2000, 2001), Error);
}

TEST(InnovationScoreTest, MatchesBruteForceOnRandomInstances) {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Year yb = 1950 + static_cast<Year>(rng.Below(50));
    const Year ye = yb + 1 + static_cast<Year>(rng.Below(40));
    const Year y = yb + static_cast<Year>(rng.Below(ye - yb + 1));
    std::vector<Year> predicted(1 + rng.Below(30));
    for (Year& p : predicted) p = yb + static_cast<Year>(rng.Below(ye - yb + 1));
    auto r = ForYear(y, predicted);
    YearScore s = InnovationScore(r, y, yb, ye);
    EXPECT_NEAR(s.score, testing::BruteForceInnovationScore(r, y, yb, ye), 1e-12);
    EXPECT_EQ(s.score, ComposeInnovationScore(s.err_future, s.err_past,
                                              s.n_papers, s.norm_future,
                                              s.norm_past));
    EXPECT_LE(s.n_future + s.n_past, s.n_papers);
    if (s.n_future == 0) { EXPECT_EQ(s.err_future, 0); }
    if (s.n_past == 0) { EXPECT_EQ(s.err_past, 0); }
    if (s.n_past == 0 && s.n_future > 0) { EXPECT_GT(s.score, 0.0); }
    if (s.n_future == 0 && s.n_past > 0) { EXPECT_LT(s.score, 0.0); }
  }
}

TEST(InnovationScoreTest, LinearInFutureError) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Year yb = 2000, ye = 2020;
    const Year y = yb + static_cast<Year>(rng.Below(ye - yb));  // < ye
    std::vector<Year> predicted(1 + rng.Below(10));
    for (Year& p : predicted) p = yb + static_cast<Year>(rng.Below(ye - yb + 1));
    // One future record with room to move up.
    predicted[0] = y + 1 + static_cast<Year>(rng.Below(ye - y - 1 + 1));
    if (predicted[0] >= ye) predicted[0] = ye - 1;
    if (predicted[0] <= y) continue;
    auto r = ForYear(y, predicted);
    YearScore before = InnovationScore(r, y, yb, ye);
    r[0].predicted_year += 1;
    YearScore after = InnovationScore(r, y, yb, ye);
    EXPECT_NEAR(after.score - before.score,
                before.norm_future / static_cast<double>(before.n_papers), 1e-12);
  }
}

Corpus YearsCorpus(std::vector<Year> years) {
  std::vector<Document> docs;
  for (std::size_t i = 0; i < years.size(); ++i) {
    docs.push_back({"d" + std::to_string(i), years[i], ""});
  }
  return Corpus(std::move(docs));
}

TEST(RankYearsTest, SingleYear) {
  Corpus corpus = YearsCorpus({2000, 2000});
  auto r = ForYear(2000, {2000, 2000});
  auto ranked = RankYears(r, corpus);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].year, 2000);
}

TEST(RankYearsTest, FutureShiftedYearFirst) {
  Corpus corpus = YearsCorpus({2000, 2005, 2010});
  std::vector<PredictionRecord> r = {
      {"a", 2000, 2000}, {"b", 2005, 2010}, {"c", 2010, 2010}};
  auto ranked = RankYears(r, corpus);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].year, 2005);
  EXPECT_GT(ranked[0].score, 0.0);
  // Remaining zero scores in year order.
  EXPECT_EQ(ranked[1].year, 2000);
  EXPECT_EQ(ranked[2].year, 2010);
}

TEST(RankYearsTest, SortedPermutationOfScoredYears) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Year> years;
    std::vector<PredictionRecord> r;
    for (int i = 0; i < 40; ++i) {
      const Year y = 1990 + static_cast<Year>(rng.Below(15));
      years.push_back(y);
    }
    Corpus corpus = YearsCorpus(years);
    for (std::size_t i = 0; i < years.size(); ++i) {
      const auto& present = corpus.present_years();
      r.push_back({"d", years[i], present[rng.Below(present.size())]});
    }
    auto ranked = RankYears(r, corpus);
    std::vector<Year> scored;
    for (const auto& s : ranked) scored.push_back(s.year);
    std::sort(scored.begin(), scored.end());
    EXPECT_EQ(scored, corpus.present_years());
    for (std::size_t i = 1; i < ranked.size(); ++i) {
      const auto& a = ranked[i - 1];
      const auto& b = ranked[i];
      EXPECT_TRUE(a.score > b.score || (a.score == b.score && a.year < b.year));
    }
  }
}

TEST(RankYearsTest, YearsWithoutRecordsAreSkipped) {
  Corpus corpus = YearsCorpus({2000, 2001, 2002});
  std::vector<PredictionRecord> r = {{"a", 2000, 2002}, {"b", 2002, 2002}};
  auto ranked = RankYears(r, corpus);
  EXPECT_EQ(ranked.size(), 2u);
  std::vector<PredictionRecord> stray = {{"x", 1999, 2000}};
  EXPECT_THROW(RankYears(stray, corpus), Error);
}

TEST(YearScoresCsvTest, Columns) {
  auto r = ForYear(2005, {2008, 2009, 2005, 2003});
  std::vector<YearScore> s = {InnovationScore(r, 2005, 2000, 2010)};
  std::ostringstream csv;
  WriteYearScoresCsv(s, csv);
  EXPECT_EQ(csv.str(),
            "year,score,err_future,err_past,n_papers,n_future,n_past,"
            "norm_future,norm_past\n"
            "2005,0.25,7,2,4,2,1,0.2,0.2\n");
}

}  // namespace
}  // namespace turnaround
