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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "testing/cli.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"
#include "turnaround/chronometrics.h"
#include "turnaround/crossval.h"
#include "turnaround/pipeline.h"
#include "turnaround/rng.h"
#include "turnaround/synthgen.h"
#include "turnaround/topics.h"
#include "turnaround/yearclf.h"

namespace turnaround {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Every trained topic model and theta seen by the suite goes through here.
struct SimplexAudit {
  long long rows = 0;
  long long bad = 0;
  double worst = 0.0;

  void Row(std::span<const double> row) {
    ++rows;
    double sum = 0.0;
    bool negative = false;
    for (double v : row) {
      sum += v;
      negative = negative || v < 0.0;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
    if (negative || std::abs(sum - 1.0) > 1e-9) ++bad;
  }
  void Model(const TopicModel& m) {
    for (int k = 0; k < m.num_topics(); ++k) Row(m.Row(k));
  }
  void Thetas(std::span<const TopicDistribution> thetas) {
    for (const auto& t : thetas) Row(t.theta);
  }
};

SimplexAudit audit;

std::string Sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string Fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Outcome OracleEquivalence() {
  Rng rng(1);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Year yb = 1950 + static_cast<Year>(rng.Below(60));
    const Year ye = yb + 1 + static_cast<Year>(rng.Below(40));
    const Year y = yb + static_cast<Year>(rng.Below(ye - yb + 1));
    std::vector<PredictionRecord> r(1 + rng.Below(50));
    for (auto& rec : r) {
      rec = {"d", y, yb + static_cast<Year>(rng.Below(ye - yb + 1))};
    }
    const double got = InnovationScore(r, y, yb, ye).score;
    worst = std::max(
        worst, std::abs(got - testing::BruteForceInnovationScore(r, y, yb, ye)));
  }
  return {worst <= 1e-12, "max |diff| " + Sci(worst)};
}

PipelineSettings PlantedSettings() {
  PipelineSettings s;
  s.lda.num_topics = 6;
  return s;
}

Outcome PlantedEpochRecovery() {
  int hits = 0;
  int within_epoch_best = 0;
  double slowest = 0.0;
  std::ostringstream detail;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto start = std::chrono::steady_clock::now();
    const SyntheticCorpus synth = testing::PlantedEpochSpec(seed).Generate();
    const EvaluationReport report =
        CrossValidate(synth.corpus, PlantedSettings(), 10, seed);
    const auto ranked = RankYears(report.records, synth.corpus);
    slowest = std::max(slowest, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - start)
                                    .count());
    std::set<Year> top3;
    for (std::size_t i = 0; i < 3 && i < ranked.size(); ++i) {
      top3.insert(ranked[i].year);
    }
    bool all = true;
    for (Year b : synth.truth.boundaries) all = all && top3.count(b);
    hits += all;

    // Informational: is each boundary the best year of its own epoch?
    bool best = true;
    for (std::size_t e = 1; e < synth.truth.epochs.size(); ++e) {
      const EpochSpec& epoch = synth.truth.epochs[e];
      auto in_epoch = std::find_if(ranked.begin(), ranked.end(), [&](auto& s) {
        return s.year >= epoch.start && s.year <= epoch.end;
      });
      best = best && in_epoch != ranked.end() && in_epoch->year == epoch.start;
    }
    within_epoch_best += best;

    detail << " seed" << seed << "=[";
    for (std::size_t i = 0; i < 3 && i < ranked.size(); ++i) {
      detail << (i ? "," : "") << ranked[i].year;
    }
    detail << "]";
  }
  std::cout << "INFO [2] boundaries ranked first within their epoch in "
            << within_epoch_best << "/10 seeds\n";
  return {hits >= 8 && slowest < 120.0,
          std::to_string(hits) + "/10 seeds with both boundaries in top 3, "
              "slowest seed " + Fixed(slowest, 1) + " s;" + detail.str()};
}

Outcome LdaClusterRecovery() {
  const auto start = std::chrono::steady_clock::now();
  const auto data = testing::MakeTwoClusterData(100, 50, 25, 7);
  LdaOptions opts;
  opts.num_topics = 2;
  opts.iterations = 250;
  opts.seed = 7;
  const LdaFit fit = TrainLda(data.bows, data.vocab, opts);
  audit.Model(fit.model);
  audit.Thetas(fit.thetas);
  // Purity: majority cluster per argmax topic.
  int counts[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t d = 0; d < fit.thetas.size(); ++d) {
    ++counts[fit.thetas[d].Argmax()][data.cluster[d]];
  }
  const int majority = std::max(counts[0][0], counts[0][1]) +
                       std::max(counts[1][0], counts[1][1]);
  const double purity =
      static_cast<double>(majority) / static_cast<double>(fit.thetas.size());
  double ll_first = 0.0, ll_late = -INFINITY;
  int late_iter = 0;
  for (const auto& s : fit.likelihood_trace) {
    if (s.iteration == 1) ll_first = s.log_likelihood;
    if (s.iteration >= 200) {
      ll_late = s.log_likelihood;
      late_iter = s.iteration;
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return {purity >= 0.95 && ll_late > ll_first && secs < 30.0,
          "purity " + Fixed(purity) + ", loglik iter 1 " + Fixed(ll_first, 1) +
              " -> iter " + std::to_string(late_iter) + " " +
              Fixed(ll_late, 1) + ", " + Fixed(secs, 2) + " s"};
}

Outcome SvmSanity() {
  Rng rng(5);
  // Two theta clusters around opposite corners of a 4-simplex.
  std::vector<TopicDistribution> x;
  std::vector<Year> y;
  for (int i = 0; i < 200; ++i) {
    const int c = i % 2;
    std::vector<double> t(4);
    for (int k = 0; k < 4; ++k) t[k] = 0.05 + 0.1 * rng.Uniform();
    t[c == 0 ? 0 : 3] += 1.5;
    const double sum = std::accumulate(t.begin(), t.end(), 0.0);
    for (double& v : t) v /= sum;
    x.push_back({t});
    y.push_back(c == 0 ? 2001 : 2009);
  }
  const YearClassifier clf = TrainSvm(x, y);
  int correct = 0;
  for (std::size_t i = 0; i < x.size(); ++i) correct += clf.PredictYear(x[i]) == y[i];
  const double accuracy = correct / static_cast<double>(x.size());

  bool members = true;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> t(4);
    for (double& v : t) v = rng.Uniform();
    const Year p = clf.PredictYear(t);
    members = members && (p == 2001 || p == 2009);
  }

  int invariant = 0;
  for (int m = 0; m < 100; ++m) {
    const int classes = 2 + static_cast<int>(rng.Below(8));
    const int dim = 1 + static_cast<int>(rng.Below(10));
    std::vector<Year> years(classes);
    for (int c = 0; c < classes; ++c) years[c] = 1990 + 2 * c;
    std::vector<double> w(static_cast<std::size_t>(classes) * dim), b(classes),
        shifted(classes);
    for (double& v : w) v = 2.0 * rng.Uniform() - 1.0;
    const double shift = 10.0 * rng.Uniform() - 5.0;
    for (int c = 0; c < classes; ++c) {
      b[c] = 2.0 * rng.Uniform() - 1.0;
      shifted[c] = b[c] + shift;
    }
    const YearClassifier base(years, dim, w, b);
    const YearClassifier moved(years, dim, w, shifted);
    bool same = true;
    for (int i = 0; i < 50; ++i) {
      std::vector<double> t(dim);
      for (double& v : t) v = rng.Uniform();
      same = same && base.PredictYear(t) == moved.PredictYear(t);
    }
    invariant += same;
  }
  return {accuracy >= 0.95 && members && invariant == 100,
          "accuracy " + Fixed(accuracy) + ", class membership " +
              (members ? "ok" : "violated") + ", bias-shift invariant " +
              std::to_string(invariant) + "/100"};
}

Corpus YearCorpus(const std::vector<Year>& years, int per_year) {
  std::vector<Document> docs;
  for (Year y : years) {
    for (int i = 0; i < per_year; ++i) {
      docs.push_back({std::to_string(y) + "-" + std::to_string(i), y, ""});
    }
  }
  return Corpus(std::move(docs));
}

Outcome Metrics() {
  PipelineSettings identity;
  identity.predictor = Predictor::kIdentityOracle;

  // 27 present years with four gaps, as in a conference series with
  // skipped proceedings.
  std::vector<Year> years;
  for (Year y = 1987; y <= 2017; ++y) {
    if (y != 1989 && y != 1994 && y != 1996 && y != 1997) years.push_back(y);
  }
  const Corpus corpus = YearCorpus(years, 3);
  const EvaluationReport r = CrossValidate(corpus, identity, 3, 42);
  const std::size_t n = r.confusion.classes().size();
  bool diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && r.confusion.count(i, j) != 0) diagonal = false;
    }
  }

  Rng rng(6);
  bool totals = true;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PredictionRecord> recs(rng.Below(100));
    for (auto& rec : recs) {
      rec = {"d", years[rng.Below(years.size())], years[rng.Below(years.size())]};
    }
    totals = totals &&
             BuildConfusionMatrix(recs, years).Total() ==
                 static_cast<long long>(recs.size());
  }
  totals = totals && r.confusion.Total() == static_cast<long long>(r.records.size());
  return {r.mean_mae == 0.0 && diagonal && totals && n == 27,
          "identity MAE " + Fixed(r.mean_mae, 1) + ", diagonal " +
              (diagonal ? "yes" : "no") + ", totals " +
              (totals ? "match" : "mismatch") + ", matrix " +
              std::to_string(n) + "x" + std::to_string(n)};
}

Outcome CrossValidationMechanics() {
  std::vector<Document> docs;
  Rng rng(8);
  for (int i = 0; i < 97; ++i) {
    docs.push_back({"d" + std::to_string(i),
                    2000 + static_cast<Year>(rng.Below(9)), ""});
  }
  const Corpus corpus(std::move(docs));
  bool partition = true, balanced = true;
  for (int k : {2, 5, 10}) {
    const auto folds = StratifiedFolds(corpus, k, 42);
    std::vector<int> seen(corpus.size(), 0);
    for (const auto& f : folds) {
      for (std::size_t d : f) ++seen[d];
    }
    partition = partition && std::all_of(seen.begin(), seen.end(),
                                         [](int s) { return s == 1; });
    for (Year y : corpus.present_years()) {
      std::vector<int> per_fold;
      for (const auto& f : folds) {
        per_fold.push_back(static_cast<int>(std::count_if(
            f.begin(), f.end(), [&](std::size_t d) { return corpus[d].year == y; })));
      }
      const auto [lo, hi] = std::minmax_element(per_fold.begin(), per_fold.end());
      balanced = balanced && *hi - *lo <= 1;
    }
  }
  const auto loo = StratifiedFolds(corpus, static_cast<int>(corpus.size()), 42);
  bool singletons = loo.size() == corpus.size();
  for (const auto& f : loo) singletons = singletons && f.size() == 1;
  PipelineSettings identity;
  identity.predictor = Predictor::kIdentityOracle;
  const EvaluationReport r =
      CrossValidate(corpus, identity, static_cast<int>(corpus.size()), 42);
  singletons = singletons && r.records.size() == corpus.size();
  return {partition && balanced && singletons,
          std::string("disjoint cover ") + (partition ? "ok" : "broken") +
              ", per-year balance " + (balanced ? "ok" : "broken") +
              ", leave-one-out " + (singletons ? "ok" : "broken")};
}

Outcome Determinism() {
  testing::TempDir dir("acceptance_determinism");
  testing::WriteText(dir / "spec.txt",
                     "seed = 3\ntopics = 3\nwords_per_topic = 10\n"
                     "epoch = 2000 2003 6 50 0.8 0.1 0.1\n"
                     "epoch = 2004 2007 6 50 0.1 0.8 0.1\n"
                     "epoch = 2008 2010 6 50 0.1 0.1 0.8\n");
  const std::string corpus = (dir / "corpus.jsonl").string();
  auto synth = testing::RunCli(
      {"synth", "--spec", (dir / "spec.txt").string(), "--out",
       dir.path().string()},
      dir.path());
  if (synth.exit_code != 0) return {false, "synth failed: " + synth.err};
  const std::vector<std::string> flags = {
      "--corpus", corpus, "--k-topics", "3", "--lda-iters", "200",
      "--min-df", "2", "--seed", "17"};
  std::vector<std::string> files;
  for (int run = 0; run < 2; ++run) {
    const fs::path out = dir / ("run" + std::to_string(run));
    fs::create_directories(out);
    const std::string model = (out / "model.txt").string();
    std::vector<std::vector<std::string>> commands = {
        {"train", "--model", model},
        {"evaluate", "--out", out.string(), "--folds", "5"},
        {"score-years", "--out", out.string(), "--folds", "5"}};
    for (auto& cmd : commands) {
      cmd.insert(cmd.end(), flags.begin(), flags.end());
      auto r = testing::RunCli(cmd, dir.path());
      if (r.exit_code != 0) return {false, cmd[0] + " failed: " + r.err};
    }
    if (run == 0) {
      std::istringstream in(testing::ReadFile(model));
      const StoredModel m = ReadModel(in);
      audit.Model(m.topics);
    }
  }
  int identical = 0;
  const std::vector<std::string> artifacts = {
      "model.txt", "confusion.csv", "predictions.csv", "year_scores_cv.csv"};
  for (const auto& name : artifacts) {
    const std::string a = testing::ReadFile(dir / "run0" / name);
    const std::string b = testing::ReadFile(dir / "run1" / name);
    identical += !a.empty() && a == b;
  }
  return {identical == static_cast<int>(artifacts.size()),
          std::to_string(identical) + "/" + std::to_string(artifacts.size()) +
              " artifacts byte-identical"};
}

Outcome BoundaryBehavior() {
  auto recs = [](Year y, std::vector<Year> p) {
    std::vector<PredictionRecord> r;
    for (Year v : p) r.push_back({"d", y, v});
    return r;
  };
  const YearScore at_end = InnovationScore(recs(2010, {2010, 2004, 2008}), 2010, 2000, 2010);
  const YearScore at_begin = InnovationScore(recs(2000, {2000, 2006, 2001}), 2000, 2000, 2010);
  const YearScore exact = InnovationScore(recs(2004, {2004, 2004, 2004}), 2004, 2000, 2010);
  const YearScore hand = InnovationScore(recs(2005, {2008, 2009, 2005, 2003}), 2005, 2000, 2010);
  const bool end_ok = at_end.err_future == 0 && at_end.norm_future == 0.0 &&
                      at_end.score == -(8.0 / 3) * (1.0 / 10);
  const bool begin_ok = at_begin.err_past == 0 && at_begin.norm_past == 0.0 &&
                        at_begin.score == (7.0 / 3) * (1.0 / 10);
  const bool exact_ok = exact.score == 0.0;
  const bool hand_ok = std::abs(hand.score - 0.25) <= 1e-12;
  return {end_ok && begin_ok && exact_ok && hand_ok,
          std::string("y=Ye ") + (end_ok ? "ok" : "bad") + ", y=Yb " +
              (begin_ok ? "ok" : "bad") + ", exact " +
              (exact_ok ? "ok" : "bad") + ", hand case " +
              Fixed(hand.score, 6)};
}

}  // namespace
}  // namespace turnaround

int main() {
  using turnaround::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  // Criterion 4 audits models trained by the others, so it runs last.
  std::vector<Criterion> criteria = {
      {1, "innovation score matches brute force", turnaround::OracleEquivalence},
      {2, "planted epoch boundaries in top 3", turnaround::PlantedEpochRecovery},
      {3, "LDA two-cluster recovery", turnaround::LdaClusterRecovery},
      {5, "SVM sanity", turnaround::SvmSanity},
      {6, "metrics", turnaround::Metrics},
      {7, "cross-validation mechanics", turnaround::CrossValidationMechanics},
      {8, "CLI determinism", turnaround::Determinism},
      {9, "innovation score boundaries", turnaround::BoundaryBehavior},
      {4, "simplex invariants", [] {
         using turnaround::audit;
         // One full pipeline on a planted corpus, including fold-in thetas.
         const auto corpus = turnaround::testing::PlantedEpochSpec(1).Generate().corpus;
         const auto p = turnaround::TrainPipeline(corpus, turnaround::PlantedSettings(), 1);
         audit.Model(p.topics);
         audit.Thetas(p.thetas);
         turnaround::InferOptions infer;
         for (std::size_t d = 0; d < corpus.size(); d += 25) {
           const auto bow = turnaround::Vectorize(corpus[d], p.vocab);
           audit.Row(turnaround::InferTheta(p.topics, bow, infer).theta.theta);
         }
         return Outcome{audit.rows > 0 && audit.bad == 0,
                        std::to_string(audit.rows) + " rows checked, " +
                            std::to_string(audit.bad) + " off-simplex, max |sum-1| " +
                            turnaround::Sci(audit.worst)};
       }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name
              << " (" << turnaround::Fixed(secs, 1) << " s): " << o.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
