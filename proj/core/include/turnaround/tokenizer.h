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

#ifndef TURNAROUND_TOKENIZER_H_
#define TURNAROUND_TOKENIZER_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace turnaround {

using StopwordSet = std::unordered_set<std::string>;

// The English list bundled from core/data/stopwords_en.txt.
std::shared_ptr<const StopwordSet> DefaultStopwords();

// One token per line; blank lines and lines starting with '#' are skipped.
// Entries are lowercased.
StopwordSet ParseStopwords(std::string_view text);
StopwordSet LoadStopwords(const std::filesystem::path& path);

struct TokenizerOptions {
  std::size_t min_length = 3;
  std::shared_ptr<const StopwordSet> stopwords = DefaultStopwords();
};

// Lowercased maximal runs of ASCII letters, at least `min_length` long,
// with stopwords removed. Every other byte, including digits, punctuation
// and non-ASCII UTF-8 bytes, separates tokens.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerOptions& options = {});

}  // namespace turnaround

#endif  // TURNAROUND_TOKENIZER_H_
