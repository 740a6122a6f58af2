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

#include "commands.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <locale>
#include <map>
#include <sstream>

#include "svg_chart.h"
#include "turnaround/chronometrics.h"
#include "turnaround/corpus.h"
#include "turnaround/crossval.h"
#include "turnaround/error.h"
#include "turnaround/synthgen.h"
#include "turnaround/text_format.h"
#include "turnaround/topics.h"

namespace turnaround::tools {
namespace {

namespace fs = std::filesystem;

void Require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(std::string("missing required flag ") + flag);
}

fs::path OutDir(const RunConfig& config) {
  fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error("cannot create output directory '" + dir.string() +
                "': " + ec.message());
  }
  return dir;
}

// Writes through a string so a failed command leaves no half-written file.
void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << contents;
  if (!out.flush()) throw Error("cannot write '" + path.string() + "'");
}

template <typename Fn>
std::string Render(Fn&& fn) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  fn(s);
  return s.str();
}

std::string JoinDoubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += FormatDouble(values[i]);
  }
  return out;
}

Corpus LoadCorpus(const RunConfig& config) {
  Require(config.corpus_path, "--corpus");
  return IngestJsonl(config.corpus_path);
}

std::vector<YearScore> ScoreAndWrite(const Corpus& corpus,
                                     const std::vector<PredictionRecord>& records,
                                     const RunConfig& config,
                                     const std::string& label,
                                     std::ostream& out) {
  const fs::path dir = OutDir(config);
  std::vector<YearScore> scores = RankYears(records, corpus);
  const fs::path csv = dir / ("year_scores_" + label + ".csv");
  WriteFile(csv, Render([&](std::ostream& s) { WriteYearScoresCsv(scores, s); }));
  out << "year_scores_csv " << csv.string() << '\n';
  if (config.svg) {
    std::vector<YearScore> by_year = scores;
    std::sort(by_year.begin(), by_year.end(),
              [](const YearScore& a, const YearScore& b) { return a.year < b.year; });
    std::vector<std::pair<std::string, double>> bars;
    for (const YearScore& s : by_year) bars.emplace_back(std::to_string(s.year), s.score);
    const fs::path svg = dir / ("year_scores_" + label + ".svg");
    WriteFile(svg, Render([&](std::ostream& s) {
                WriteBarChart("Year innovation scores (" + label + ")", bars, s);
              }));
    out << "year_scores_svg " << svg.string() << '\n';
  }
  return scores;
}

}  // namespace

PipelineSettings RunConfig::Settings() const {
  PipelineSettings s;
  if (min_token_length < 1) throw Error("--min-token-length must be >= 1");
  s.tokenizer.min_length = static_cast<std::size_t>(min_token_length);
  if (!stopwords_path.empty()) {
    s.tokenizer.stopwords =
        std::make_shared<const StopwordSet>(LoadStopwords(stopwords_path));
  }
  s.min_df = min_df;
  s.lda.num_topics = k_topics;
  s.lda.alpha = alpha;
  s.lda.beta = beta;
  s.lda.iterations = lda_iters;
  s.lda.likelihood_interval = 0;
  s.infer.iterations = infer_iters;
  s.svm.c = svm_c;
  s.svm.epochs = svm_epochs;
  s.predictor = identity_oracle ? Predictor::kIdentityOracle : Predictor::kModel;
  return s;
}

void RunIngest(const RunConfig& config, std::ostream& out) {
  const Corpus corpus = LoadCorpus(config);
  const PipelineSettings settings = config.Settings();
  std::size_t no_tokens = 0;
  for (const Document& doc : corpus.documents()) {
    if (Tokenize(doc.text, settings.tokenizer).empty()) ++no_tokens;
  }
  std::size_t vocab_terms = 0;
  std::size_t empty_after_vocab = corpus.size();
  try {
    const Vocabulary vocab =
        Vocabulary::Build(corpus, settings.min_df, settings.tokenizer);
    vocab_terms = vocab.size();
    empty_after_vocab = 0;
    for (const Document& doc : corpus.documents()) {
      if (Vectorize(doc, vocab, settings.tokenizer).empty()) ++empty_after_vocab;
    }
  } catch (const Error&) {
    // An empty vocabulary is reported, not fatal, at ingest time.
  }
  out << "documents " << corpus.size() << '\n';
  out << "year_begin " << corpus.year_begin() << '\n';
  out << "year_end " << corpus.year_end() << '\n';
  out << "present_years " << corpus.present_years().size() << '\n';
  out << "min_df " << settings.min_df << '\n';
  out << "vocabulary_terms " << vocab_terms << '\n';
  out << "empty_after_tokenization " << no_tokens << '\n';
  out << "empty_after_vectorization " << empty_after_vocab << '\n';
  for (Year y : corpus.present_years()) {
    out << "year " << y << ' ' << corpus.DocumentsInYear(y).size() << '\n';
  }
}

void RunTrain(const RunConfig& config, std::ostream& out) {
  Require(config.model_path, "--model");
  const Corpus corpus = LoadCorpus(config);
  const TrainedPipeline pipeline =
      TrainPipeline(corpus, config.Settings(), config.seed);
  const std::string model = Render([&](std::ostream& s) {
    WriteModel(pipeline.topics, pipeline.classifier, s);
  });
  const fs::path path(config.model_path);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  WriteFile(path, model);
  out << "model " << path.string() << '\n';
  out << "topics " << pipeline.topics.num_topics() << '\n';
  out << "terms " << pipeline.topics.vocab_size() << '\n';
  out << "classes " << pipeline.classifier.num_classes() << '\n';
  out << "empty_documents " << pipeline.empty_documents.size() << '\n';
}

void RunEvaluate(const RunConfig& config, std::ostream& out) {
  const Corpus corpus = LoadCorpus(config);
  const EvaluationReport report = CrossValidate(
      corpus, config.Settings(), config.folds, config.seed, config.threads);
  const fs::path dir = OutDir(config);
  const fs::path confusion = dir / "confusion.csv";
  const fs::path predictions = dir / "predictions.csv";
  WriteFile(confusion, Render([&](std::ostream& s) {
              WriteConfusionCsv(report.confusion, s);
            }));
  WriteFile(predictions, Render([&](std::ostream& s) {
              s << "id,true_year,predicted_year,error\n";
              for (const PredictionRecord& r : report.records) {
                s << r.doc_id << ',' << r.true_year << ',' << r.predicted_year
                  << ',' << PredictionError(r) << '\n';
              }
            }));
  const std::string text = Render([&](std::ostream& s) {
    s << "# turnaround evaluation report\n";
    s << "predictor = "
      << (config.identity_oracle ? "identity-oracle" : "model") << '\n';
    s << "documents = " << corpus.size() << '\n';
    s << "classes = " << corpus.present_years().size() << '\n';
    s << "folds = " << config.folds << '\n';
    s << "seed = " << config.seed << '\n';
    s << "fold_mae = " << JoinDoubles(report.fold_mae) << '\n';
    s << "mean_mae = " << FormatDouble(report.mean_mae) << '\n';
    s << "empty_documents = " << report.empty_documents << '\n';
    s << "confusion_csv = " << confusion.string() << '\n';
    s << "predictions_csv = " << predictions.string() << '\n';
  });
  const fs::path report_path = dir / "report.txt";
  WriteFile(report_path, text);
  out << "mean_mae " << FormatDouble(report.mean_mae) << '\n';
  out << "report " << report_path.string() << '\n';
}

void RunScoreYears(const RunConfig& config, std::ostream& out) {
  const Corpus corpus = LoadCorpus(config);
  const PipelineSettings settings = config.Settings();
  std::vector<PredictionRecord> records;
  if (config.mode == "cv") {
    records = CrossValidate(corpus, settings, config.folds, config.seed,
                            config.threads)
                  .records;
  } else if (config.mode == "resub") {
    records = PredictInSample(corpus, settings, config.seed);
  } else {
    throw Error("--mode must be 'cv' or 'resub', got '" + config.mode + "'");
  }
  const std::vector<YearScore> scores =
      ScoreAndWrite(corpus, records, config, config.mode, out);
  for (std::size_t i = 0; i < scores.size() && i < 5; ++i) {
    out << "rank " << i + 1 << ' ' << scores[i].year << ' '
        << FormatDouble(scores[i].score) << '\n';
  }
}

void RunTrends(const RunConfig& config, std::ostream& out) {
  const Corpus corpus = LoadCorpus(config);
  const PipelineSettings settings = config.Settings();
  const Vocabulary vocab =
      Vocabulary::Build(corpus, settings.min_df, settings.tokenizer);
  std::vector<BowVector> bows;
  for (const Document& doc : corpus.documents()) {
    bows.push_back(Vectorize(doc, vocab, settings.tokenizer));
  }
  LdaOptions lda = settings.lda;
  lda.seed = config.seed;
  const LdaFit fit = TrainLda(bows, vocab, lda);
  const std::vector<TrendSeries> trends = TopicTrends(fit.thetas, corpus);

  const fs::path dir = OutDir(config);
  const fs::path csv = dir / "trends.csv";
  WriteFile(csv, Render([&](std::ostream& s) { WriteTrendsCsv(trends, s); }));
  const fs::path topics = dir / "topics.txt";
  WriteFile(topics, Render([&](std::ostream& s) {
              for (int k = 0; k < fit.model.num_topics(); ++k) {
                s << "topic " << k;
                for (const WeightedTerm& t :
                     TopWords(fit.model, k, config.top_words)) {
                  s << ' ' << t.term << ':' << FormatDouble(t.probability, 4);
                }
                s << '\n';
              }
            }));
  out << "trends_csv " << csv.string() << '\n';
  out << "topics_txt " << topics.string() << '\n';
  if (config.svg) {
    std::vector<Series> series;
    for (const TrendSeries& t : trends) {
      Series s{"topic " + std::to_string(t.topic), {}};
      for (const auto& [year, mean] : t.mean_theta) s.points.emplace_back(year, mean);
      series.push_back(std::move(s));
    }
    const fs::path svg = dir / "trends.svg";
    WriteFile(svg, Render([&](std::ostream& s) {
                WriteLineChart("Topic popularity by year", series, s);
              }));
    out << "trends_svg " << svg.string() << '\n';
  }
}

void RunSynth(const RunConfig& config, std::ostream& out) {
  Require(config.spec_path, "--spec");
  std::ifstream in(config.spec_path);
  if (!in) throw Error("cannot open spec file '" + config.spec_path + "'");
  const SynthSpec spec = ParseSynthSpec(in, config.spec_path);
  const SyntheticCorpus synth = spec.Generate();
  const fs::path dir = OutDir(config);
  const fs::path corpus = dir / "corpus.jsonl";
  const fs::path truth = dir / "truth.txt";
  WriteFile(corpus, Render([&](std::ostream& s) { WriteCorpusJsonl(synth.corpus, s); }));
  WriteFile(truth, Render([&](std::ostream& s) { WriteTruth(synth.truth, s); }));
  out << "documents " << synth.corpus.size() << '\n';
  out << "corpus " << corpus.string() << '\n';
  out << "truth " << truth.string() << '\n';
}

void RunPredict(const RunConfig& config, std::istream& in, std::ostream& out,
                std::ostream& err) {
  Require(config.model_path, "--model");
  const StoredModel model = LoadModel(config.model_path);
  const std::string text(std::istreambuf_iterator<char>(in), {});
  InferOptions infer;
  infer.iterations = config.infer_iters;
  infer.seed = config.seed;
  const TextPrediction prediction = PredictText(model, text, infer);
  if (prediction.inference.empty_document) {
    err << "warning: no in-vocabulary tokens; using the uniform topic "
           "distribution\n";
  }
  out << "year " << prediction.year << '\n';
  out << "theta " << JoinDoubles(prediction.inference.theta.theta) << '\n';
  for (std::size_t c = 0; c < prediction.scores.size(); ++c) {
    out << "score " << model.classifier.classes()[c] << ' '
        << FormatDouble(prediction.scores[c]) << '\n';
  }
}

}  // namespace turnaround::tools
