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

#include "turnaround/tokenizer.h"

#include <fstream>
#include <sstream>

#include "turnaround/error.h"
#include "turnaround/text_format.h"

namespace turnaround {
namespace internal {
extern const std::string_view kBundledStopwords;
}  // namespace internal

namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char ToLowerAscii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::shared_ptr<const StopwordSet> DefaultStopwords() {
  static const std::shared_ptr<const StopwordSet> kDefault =
      std::make_shared<const StopwordSet>(
          ParseStopwords(internal::kBundledStopwords));
  return kDefault;
}

StopwordSet ParseStopwords(std::string_view text) {
  StopwordSet words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view entry = Trim(text.substr(pos, end - pos));
    if (!entry.empty() && entry.front() != '#') {
      std::string word(entry);
      for (char& c : word) c = ToLowerAscii(c);
      words.insert(std::move(word));
    }
    pos = end + 1;
  }
  return words;
}

StopwordSet LoadStopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword file '" + path.string() + "'");
  std::ostringstream contents;
  contents << in.rdbuf();
  return ParseStopwords(contents.str());
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerOptions& options) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.size() >= options.min_length &&
        !(options.stopwords && options.stopwords->contains(current))) {
      tokens.push_back(current);
    }
    current.clear();
  };
  for (char c : text) {
    if (IsAsciiAlpha(c)) {
      current.push_back(ToLowerAscii(c));
    } else if (!current.empty()) {
      flush();
    }
  }
  if (!current.empty()) flush();
  return tokens;
}

}  // namespace turnaround
