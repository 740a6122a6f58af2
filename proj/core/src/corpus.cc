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

#include "turnaround/corpus.h"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "turnaround/error.h"
#include "turnaround/text_format.h"

namespace turnaround {
namespace {

void CheckYear(Year year, const std::string& id) {
  if (year < kMinYear || year > kMaxYear) {
    throw Error("document '" + id + "' has year " + std::to_string(year) +
                " outside [" + std::to_string(kMinYear) + ", " +
                std::to_string(kMaxYear) + "]");
  }
}

}  // namespace

Corpus::Corpus(std::vector<Document> documents)
    : documents_(std::move(documents)) {
  if (documents_.empty()) throw Error("empty corpus");
  std::unordered_set<std::string_view> ids;
  ids.reserve(documents_.size());
  for (const Document& doc : documents_) {
    if (doc.id.empty()) throw Error("document with empty id");
    if (!ids.insert(doc.id).second) {
      throw Error("duplicate document id '" + doc.id + "'");
    }
    CheckYear(doc.year, doc.id);
    present_years_.push_back(doc.year);
  }
  std::sort(present_years_.begin(), present_years_.end());
  present_years_.erase(
      std::unique(present_years_.begin(), present_years_.end()),
      present_years_.end());
}

std::vector<std::size_t> Corpus::DocumentsInYear(Year year) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (documents_[i].year == year) out.push_back(i);
  }
  return out;
}

Corpus Corpus::Subset(const std::vector<std::size_t>& indices) const {
  std::vector<Document> docs;
  docs.reserve(indices.size());
  for (std::size_t i : indices) docs.push_back(documents_.at(i));
  return Corpus(std::move(docs));
}

Corpus ReadCorpusJsonl(std::istream& in, std::string_view source) {
  const std::string src(source);
  std::vector<Document> docs;
  std::unordered_map<std::string, std::size_t> id_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(src, line_no, "malformed JSON record");
    }
    if (!record.is_object()) {
      throw ParseError(src, line_no, "record is not a JSON object");
    }
    auto id = record.find("id");
    auto year = record.find("year");
    auto text = record.find("text");
    if (id == record.end() || !id->is_string()) {
      throw ParseError(src, line_no, "missing string field 'id'");
    }
    if (year == record.end() || !year->is_number_integer()) {
      throw ParseError(src, line_no, "missing integer field 'year'");
    }
    if (text == record.end() || !text->is_string()) {
      throw ParseError(src, line_no, "missing string field 'text'");
    }

    Document doc;
    doc.id = id->get<std::string>();
    if (doc.id.empty()) throw ParseError(src, line_no, "empty document id");
    const auto raw_year = year->get<std::int64_t>();
    if (raw_year < kMinYear || raw_year > kMaxYear) {
      throw ParseError(src, line_no,
                       "year " + std::to_string(raw_year) + " outside [" +
                           std::to_string(kMinYear) + ", " +
                           std::to_string(kMaxYear) + "]");
    }
    doc.year = static_cast<Year>(raw_year);
    doc.text = text->get<std::string>();

    auto [it, inserted] = id_line.emplace(doc.id, line_no);
    if (!inserted) {
      throw ParseError(src, line_no,
                       "duplicate document id '" + doc.id +
                           "' (first seen on line " +
                           std::to_string(it->second) + ", again on line " +
                           std::to_string(line_no) + ")");
    }
    docs.push_back(std::move(doc));
  }
  if (docs.empty()) throw Error(src + ": empty corpus");
  return Corpus(std::move(docs));
}

Corpus IngestJsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path.string() + "'");
  return ReadCorpusJsonl(in, path.string());
}

void WriteCorpusJsonl(const Corpus& corpus, std::ostream& out) {
  const ClassicLocale classic(out);
  for (const Document& doc : corpus.documents()) {
    nlohmann::ordered_json record;
    record["id"] = doc.id;
    record["year"] = doc.year;
    record["text"] = doc.text;
    out << record.dump() << '\n';
  }
}

}  // namespace turnaround
