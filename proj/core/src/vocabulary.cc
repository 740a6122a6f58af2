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

#include "turnaround/vocabulary.h"

#include <algorithm>
#include <map>

#include "turnaround/error.h"

namespace turnaround {

long long BowVector::total_count() const {
  long long total = 0;
  for (const BowEntry& e : entries) total += e.count;
  return total;
}

Vocabulary Vocabulary::Build(const Corpus& corpus, int min_df,
                             const TokenizerOptions& options) {
  if (min_df < 1) throw Error("min_df must be >= 1");
  std::map<std::string, int> df;
  for (const Document& doc : corpus.documents()) {
    std::vector<std::string> tokens = Tokenize(doc.text, options);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    for (std::string& token : tokens) ++df[std::move(token)];
  }
  Vocabulary vocab;
  vocab.min_df_ = min_df;
  for (auto& [term, count] : df) {
    if (count >= min_df) {
      vocab.terms_.push_back(term);
      vocab.doc_freq_.push_back(count);
    }
  }
  if (vocab.terms_.empty()) {
    throw Error("empty vocabulary (no token reaches min_df=" +
                std::to_string(min_df) + ")");
  }
  return vocab;
}

Vocabulary Vocabulary::FromTerms(std::vector<std::string> terms,
                                 std::vector<int> doc_freq) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!(terms[i - 1] < terms[i])) {
      throw Error("vocabulary terms must be strictly increasing ('" +
                  terms[i - 1] + "' before '" + terms[i] + "')");
    }
  }
  if (doc_freq.empty()) doc_freq.assign(terms.size(), 0);
  if (doc_freq.size() != terms.size()) {
    throw Error("vocabulary doc_freq size mismatch");
  }
  Vocabulary vocab;
  vocab.terms_ = std::move(terms);
  vocab.doc_freq_ = std::move(doc_freq);
  return vocab;
}

std::optional<int> Vocabulary::Find(std::string_view token) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), token,
      [](const std::string& a, std::string_view b) { return a < b; });
  if (it == terms_.end() || *it != token) return std::nullopt;
  return static_cast<int>(it - terms_.begin());
}

BowVector Vectorize(std::string_view text, const Vocabulary& vocab,
                    const TokenizerOptions& options) {
  std::map<int, int> counts;
  for (const std::string& token : Tokenize(text, options)) {
    if (auto id = vocab.Find(token)) ++counts[*id];
  }
  BowVector bow;
  bow.entries.reserve(counts.size());
  for (auto [term, count] : counts) bow.entries.push_back({term, count});
  return bow;
}

}  // namespace turnaround
