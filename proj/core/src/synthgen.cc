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

#include "turnaround/synthgen.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "turnaround/error.h"
#include "turnaround/rng.h"
#include "turnaround/text_format.h"

namespace turnaround {
namespace {

constexpr double kSimplexTolerance = 1e-9;

bool OnSimplex(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= kSimplexTolerance;
}

std::vector<double> Cumulative(std::span<const double> p) {
  std::vector<double> c(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = acc += p[i];
  return c;
}

std::size_t Draw(const std::vector<double>& cumulative, Rng& rng) {
  const double u = rng.Uniform() * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  // Zero-weight trailing entries can leave u == back(); step back onto the
  // last positive entry.
  std::size_t i = std::min<std::size_t>(it - cumulative.begin(),
                                        cumulative.size() - 1);
  while (i > 0 && cumulative[i] == cumulative[i - 1]) --i;
  return i;
}

std::vector<double> ParseMixture(std::span<const std::string_view> fields,
                                 LineReader& reader) {
  std::vector<double> mixture;
  for (std::string_view f : fields) {
    double v = 0;
    if (!ParseDouble(f, &v)) reader.Fail("bad mixture weight '" + std::string(f) + "'");
    mixture.push_back(v);
  }
  return mixture;
}

std::int64_t FieldInt(std::string_view f, LineReader& reader) {
  std::int64_t v = 0;
  if (!ParseInt(f, &v)) reader.Fail("bad integer '" + std::string(f) + "'");
  return v;
}

void WriteEpoch(const EpochSpec& e, std::ostream& out) {
  out << "epoch = " << e.start << ' ' << e.end << ' ' << e.docs_per_year << ' '
      << e.doc_length;
  for (double m : e.mixture) out << ' ' << FormatDouble(m);
  out << '\n';
}

// "key = value" with the key's value returned through `value`.
bool SplitKeyValue(std::string_view line, std::string_view* key,
                   std::string_view* value) {
  const std::size_t eq = line.find('=');
  if (eq == std::string_view::npos) return false;
  *key = Trim(line.substr(0, eq));
  *value = Trim(line.substr(eq + 1));
  return !key->empty();
}

EpochSpec ParseEpochLine(std::string_view value, LineReader& reader) {
  auto fields = SplitFields(value);
  if (fields.size() < 5) {
    reader.Fail("epoch needs: start end docs_per_year doc_length mixture...");
  }
  EpochSpec e;
  e.start = static_cast<Year>(FieldInt(fields[0], reader));
  e.end = static_cast<Year>(FieldInt(fields[1], reader));
  e.docs_per_year = static_cast<int>(FieldInt(fields[2], reader));
  e.doc_length = static_cast<int>(FieldInt(fields[3], reader));
  e.mixture = ParseMixture(std::span(fields).subspan(4), reader);
  return e;
}

}  // namespace

std::string SyntheticWord(int index) {
  std::string letters;
  do {
    letters.push_back(static_cast<char>('a' + index % 26));
    index /= 26;
  } while (index > 0);
  while (letters.size() < 3) letters.push_back('a');
  std::reverse(letters.begin(), letters.end());
  return "w" + letters;
}

TopicWordMatrix DisjointTopicWords(int num_topics, int words_per_topic,
                                   double leakage) {
  if (num_topics < 1 || words_per_topic < 1) {
    throw Error("topic-word matrix needs positive dimensions");
  }
  if (!(leakage >= 0.0 && leakage < 1.0)) {
    throw Error("leakage must lie in [0, 1)");
  }
  const int vocab = num_topics * words_per_topic;
  const int others = vocab - words_per_topic;
  TopicWordMatrix rows(num_topics, std::vector<double>(vocab, 0.0));
  for (int k = 0; k < num_topics; ++k) {
    const double own = (others > 0 ? 1.0 - leakage : 1.0) / words_per_topic;
    const double rest = others > 0 ? leakage / others : 0.0;
    for (int w = 0; w < vocab; ++w) {
      rows[k][w] = (w / words_per_topic == k) ? own : rest;
    }
  }
  return rows;
}

SyntheticCorpus GenerateCorpus(std::span<const EpochSpec> epochs,
                               const TopicWordMatrix& topic_word,
                               std::uint64_t seed, int blend_width) {
  if (topic_word.empty()) throw Error("topic-word matrix has no topics");
  const std::size_t num_topics = topic_word.size();
  const std::size_t vocab = topic_word.front().size();
  if (vocab == 0) throw Error("topic-word matrix has no words");
  for (const auto& row : topic_word) {
    if (row.size() != vocab) throw Error("ragged topic-word matrix");
    if (!OnSimplex(row)) throw Error("topic-word row is not a distribution");
  }
  if (epochs.empty()) throw Error("no epochs given");
  if (blend_width < 0) throw Error("blend width must be >= 0");

  for (std::size_t e = 0; e < epochs.size(); ++e) {
    const EpochSpec& spec = epochs[e];
    const std::string name = "epoch " + std::to_string(e + 1);
    if (spec.start > spec.end) throw Error(name + " starts after it ends");
    if (spec.start < kMinYear || spec.end > kMaxYear) {
      throw Error(name + " has years outside the supported range");
    }
    if (spec.mixture.size() != num_topics) {
      throw Error(name + " mixture has " + std::to_string(spec.mixture.size()) +
                  " weights for " + std::to_string(num_topics) + " topics");
    }
    if (!OnSimplex(spec.mixture)) {
      throw Error(name + " mixture is not a distribution");
    }
    if (spec.docs_per_year < 1 || spec.doc_length < 1) {
      throw Error(name + " needs docs_per_year >= 1 and doc_length >= 1");
    }
    if (e > 0) {
      const EpochSpec& prev = epochs[e - 1];
      if (spec.start <= prev.end) {
        throw Error(name + " overlaps the previous epoch");
      }
      if (spec.start != prev.end + 1) {
        throw Error(name + " leaves a gap after the previous epoch");
      }
    }
    if (e + 1 < epochs.size() && blend_width > spec.end - spec.start + 1) {
      throw Error("blend width exceeds the length of " + name);
    }
  }

  std::vector<std::string> words(vocab);
  for (std::size_t w = 0; w < vocab; ++w) {
    words[w] = SyntheticWord(static_cast<int>(w));
  }
  std::vector<std::vector<double>> word_cdf;
  for (const auto& row : topic_word) word_cdf.push_back(Cumulative(row));

  Rng rng(seed);
  std::vector<Document> docs;
  SyntheticTruth truth;
  truth.seed = seed;
  truth.epochs.assign(epochs.begin(), epochs.end());
  for (std::size_t e = 0; e < epochs.size(); ++e) {
    const EpochSpec& spec = epochs[e];
    if (e > 0) truth.boundaries.push_back(spec.start);
    for (Year y = spec.start; y <= spec.end; ++y) {
      std::vector<double> mixture = spec.mixture;
      if (e + 1 < epochs.size() && blend_width > 0) {
        const int to_boundary = spec.end + 1 - y;  // 1 for the last year
        if (to_boundary <= blend_width) {
          const double weight =
              static_cast<double>(blend_width + 1 - to_boundary) /
              (blend_width + 1);
          for (std::size_t k = 0; k < num_topics; ++k) {
            mixture[k] = (1.0 - weight) * spec.mixture[k] +
                         weight * epochs[e + 1].mixture[k];
          }
        }
      }
      const std::vector<double> topic_cdf = Cumulative(mixture);
      for (int n = 0; n < spec.docs_per_year; ++n) {
        std::string text;
        for (int t = 0; t < spec.doc_length; ++t) {
          const std::size_t k = Draw(topic_cdf, rng);
          const std::size_t w = Draw(word_cdf[k], rng);
          if (t > 0) text.push_back(' ');
          text += words[w];
        }
        docs.push_back({"syn-" + std::to_string(y) + "-" + std::to_string(n),
                        y, std::move(text)});
      }
    }
  }
  return SyntheticCorpus{Corpus(std::move(docs)), std::move(truth)};
}

SyntheticCorpus SynthSpec::Generate() const {
  return GenerateCorpus(epochs,
                        DisjointTopicWords(num_topics, words_per_topic, leakage),
                        seed, blend_width);
}

SynthSpec ParseSynthSpec(std::istream& in, std::string_view source) {
  LineReader reader(in, std::string(source));
  SynthSpec spec;
  std::set<std::string, std::less<>> seen;
  std::string line;
  while (reader.Next(&line)) {
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::string_view key, value;
    if (!SplitKeyValue(body, &key, &value)) reader.Fail("expected 'key = value'");
    if (key == "epoch") {
      spec.epochs.push_back(ParseEpochLine(value, reader));
      continue;
    }
    if (!seen.emplace(key).second) {
      reader.Fail("duplicate key '" + std::string(key) + "'");
    }
    if (key == "seed") {
      if (!ParseUint(value, &spec.seed)) reader.Fail("bad seed");
    } else if (key == "topics") {
      spec.num_topics = static_cast<int>(FieldInt(value, reader));
    } else if (key == "words_per_topic") {
      spec.words_per_topic = static_cast<int>(FieldInt(value, reader));
    } else if (key == "leakage") {
      if (!ParseDouble(value, &spec.leakage)) reader.Fail("bad leakage");
    } else if (key == "blend_width") {
      spec.blend_width = static_cast<int>(FieldInt(value, reader));
    } else {
      reader.Fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (spec.num_topics < 1) reader.Fail("missing or invalid 'topics'");
  if (spec.words_per_topic < 1) {
    reader.Fail("missing or invalid 'words_per_topic'");
  }
  if (spec.epochs.empty()) reader.Fail("no 'epoch' lines");
  return spec;
}

void WriteSynthSpec(const SynthSpec& spec, std::ostream& out) {
  const ClassicLocale classic(out);
  out << "seed = " << spec.seed << '\n';
  out << "topics = " << spec.num_topics << '\n';
  out << "words_per_topic = " << spec.words_per_topic << '\n';
  out << "leakage = " << FormatDouble(spec.leakage) << '\n';
  out << "blend_width = " << spec.blend_width << '\n';
  for (const EpochSpec& e : spec.epochs) WriteEpoch(e, out);
}

void WriteTruth(const SyntheticTruth& truth, std::ostream& out) {
  const ClassicLocale classic(out);
  out << "seed = " << truth.seed << '\n';
  out << "boundaries =";
  for (Year b : truth.boundaries) out << ' ' << b;
  out << '\n';
  for (const EpochSpec& e : truth.epochs) WriteEpoch(e, out);
}

SyntheticTruth ReadTruth(std::istream& in, std::string_view source) {
  LineReader reader(in, std::string(source));
  SyntheticTruth truth;
  std::string line;
  while (reader.Next(&line)) {
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::string_view key, value;
    if (!SplitKeyValue(body, &key, &value)) reader.Fail("expected 'key = value'");
    if (key == "seed") {
      if (!ParseUint(value, &truth.seed)) reader.Fail("bad seed");
    } else if (key == "boundaries") {
      for (std::string_view f : SplitFields(value)) {
        truth.boundaries.push_back(static_cast<Year>(FieldInt(f, reader)));
      }
    } else if (key == "epoch") {
      truth.epochs.push_back(ParseEpochLine(value, reader));
    } else {
      reader.Fail("unknown key '" + std::string(key) + "'");
    }
  }
  return truth;
}

}  // namespace turnaround
