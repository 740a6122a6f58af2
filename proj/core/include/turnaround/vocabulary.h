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

#ifndef TURNAROUND_VOCABULARY_H_
#define TURNAROUND_VOCABULARY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turnaround/corpus.h"
#include "turnaround/tokenizer.h"

namespace turnaround {

struct BowEntry {
  int term = 0;
  int count = 0;

  friend bool operator==(const BowEntry&, const BowEntry&) = default;
};

// Sparse term counts with strictly increasing term ids and counts >= 1.
struct BowVector {
  std::vector<BowEntry> entries;

  bool empty() const { return entries.empty(); }
  long long total_count() const;

  friend bool operator==(const BowVector&, const BowVector&) = default;
};

// Sorted term list. A term's column id is its position, so lookup is a
// binary search and the id assignment does not depend on document order.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Terms with document frequency >= min_df, lexicographically sorted.
  // Throws when no term survives.
  static Vocabulary Build(const Corpus& corpus, int min_df,
                          const TokenizerOptions& options = {});

  // From an explicit term list; terms must be strictly increasing.
  // `doc_freq` may be empty, in which case every frequency is 0.
  static Vocabulary FromTerms(std::vector<std::string> terms,
                              std::vector<int> doc_freq = {});

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::string& term(int id) const { return terms_[id]; }
  const std::vector<std::string>& terms() const { return terms_; }
  int doc_freq(int id) const { return doc_freq_[id]; }
  int min_df() const { return min_df_; }

  std::optional<int> Find(std::string_view token) const;

 private:
  std::vector<std::string> terms_;
  std::vector<int> doc_freq_;
  int min_df_ = 0;
};

// Counts in-vocabulary tokens; unknown tokens are dropped.
BowVector Vectorize(std::string_view text, const Vocabulary& vocab,
                    const TokenizerOptions& options = {});
inline BowVector Vectorize(const Document& doc, const Vocabulary& vocab,
                           const TokenizerOptions& options = {}) {
  return Vectorize(doc.text, vocab, options);
}

}  // namespace turnaround

#endif  // TURNAROUND_VOCABULARY_H_
