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

#ifndef TURNAROUND_CORPUS_H_
#define TURNAROUND_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace turnaround {

// Calendar year. Predictions and labels are always whole years.
using Year = int;

inline constexpr Year kMinYear = 1000;
inline constexpr Year kMaxYear = 3000;

struct Document {
  std::string id;
  Year year = 0;
  std::string text;

  friend bool operator==(const Document&, const Document&) = default;
};

// An immutable, validated collection of documents in input order.
//
// Invariants checked on construction: at least one document, ids non-empty
// and unique, every year within [kMinYear, kMaxYear].
class Corpus {
 public:
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const Document& operator[](std::size_t i) const { return documents_[i]; }
  std::size_t size() const { return documents_.size(); }

  Year year_begin() const { return present_years_.front(); }
  Year year_end() const { return present_years_.back(); }
  // Distinct document years, ascending.
  const std::vector<Year>& present_years() const { return present_years_; }

  // Indices of the documents published in `year`, in corpus order.
  std::vector<std::size_t> DocumentsInYear(Year year) const;

  // A corpus over a subset of the documents, in the given index order.
  Corpus Subset(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<Document> documents_;
  std::vector<Year> present_years_;
};

// Reads a JSON-Lines corpus: one {"id": str, "year": int, "text": str}
// object per line. Unknown fields are ignored and blank lines skipped.
// Errors name the offending line; duplicate ids name both lines.
Corpus ReadCorpusJsonl(std::istream& in, std::string_view source = "<input>");
Corpus IngestJsonl(const std::filesystem::path& path);

void WriteCorpusJsonl(const Corpus& corpus, std::ostream& out);

}  // namespace turnaround

#endif  // TURNAROUND_CORPUS_H_
