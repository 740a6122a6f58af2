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

#ifndef TURNAROUND_SYNTHGEN_H_
#define TURNAROUND_SYNTHGEN_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turnaround/corpus.h"

// Synthetic corpora with planted topic epochs, for end-to-end checks of the
// turnaround-year detector against a known answer.
namespace turnaround {

struct EpochSpec {
  Year start = 0;
  Year end = 0;
  // Topic proportions shared by every document of the epoch.
  std::vector<double> mixture;
  int docs_per_year = 1;
  int doc_length = 1;

  friend bool operator==(const EpochSpec&, const EpochSpec&) = default;
};

struct SyntheticTruth {
  // Start year of every epoch but the first.
  std::vector<Year> boundaries;
  std::vector<EpochSpec> epochs;
  std::uint64_t seed = 0;

  friend bool operator==(const SyntheticTruth&,
                         const SyntheticTruth&) = default;
};

struct SyntheticCorpus {
  Corpus corpus;
  SyntheticTruth truth;
};

// K x V topic-word distributions; every row on the simplex.
using TopicWordMatrix = std::vector<std::vector<double>>;

// Name of synthetic word `index`: "w" followed by at least three base-26
// letters ("waaa", "waab", ...). Survives the default tokenizer unchanged.
std::string SyntheticWord(int index);

// Topic k puts (1 - leakage) uniformly on its own block of
// `words_per_topic` words and spreads `leakage` uniformly over all other
// words.
TopicWordMatrix DisjointTopicWords(int num_topics, int words_per_topic,
                                   double leakage = 0.0);

// Standard LDA generative process with a fixed mixture per epoch: each token
// draws a topic from the mixture, then a word from that topic's row.
// Epochs must be given in order, contiguous and non-overlapping.
//
// With blend_width = w > 0, the last w years before each boundary ramp
// linearly toward the next epoch's mixture: the year b - w + i - 1 uses
// weight i / (w + 1) on the next mixture, for i = 1..w.
//
// Document ids are "syn-<year>-<n>". Identical inputs give identical output.
SyntheticCorpus GenerateCorpus(std::span<const EpochSpec> epochs,
                               const TopicWordMatrix& topic_word,
                               std::uint64_t seed, int blend_width = 0);

// Parsed epoch specification file.
//
//   # comment
//   seed = 7
//   topics = 6
//   words_per_topic = 40
//   leakage = 0.05
//   blend_width = 0
//   epoch = <start> <end> <docs_per_year> <doc_length> <m_1> ... <m_K>
//
// One "epoch" line per epoch, in year order. Every other key may appear at
// most once; seed, leakage and blend_width are optional.
struct SynthSpec {
  std::uint64_t seed = 1;
  int num_topics = 0;
  int words_per_topic = 0;
  double leakage = 0.0;
  int blend_width = 0;
  std::vector<EpochSpec> epochs;

  SyntheticCorpus Generate() const;
};

SynthSpec ParseSynthSpec(std::istream& in, std::string_view source = "<spec>");
void WriteSynthSpec(const SynthSpec& spec, std::ostream& out);

// Same key-value style: seed, boundaries, then one epoch line per epoch.
void WriteTruth(const SyntheticTruth& truth, std::ostream& out);
SyntheticTruth ReadTruth(std::istream& in, std::string_view source = "<truth>");

}  // namespace turnaround

#endif  // TURNAROUND_SYNTHGEN_H_
