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

#ifndef TURNAROUND_TEXT_FORMAT_H_
#define TURNAROUND_TEXT_FORMAT_H_

#include <cstddef>
#include <cstdint>
#include <ios>
#include <istream>
#include <locale>
#include <string>
#include <string_view>
#include <vector>

// Locale-independent number formatting and the small line reader shared by
// the model, truth and spec file parsers.
namespace turnaround {

// Imbues the classic locale on a stream for the lifetime of the object, so
// integers written with << never pick up digit grouping.
class ClassicLocale {
 public:
  explicit ClassicLocale(std::ios_base& stream)
      : stream_(stream), saved_(stream.imbue(std::locale::classic())) {}
  ~ClassicLocale() { stream_.imbue(saved_); }
  ClassicLocale(const ClassicLocale&) = delete;
  ClassicLocale& operator=(const ClassicLocale&) = delete;

 private:
  std::ios_base& stream_;
  std::locale saved_;
};

// Number of significant digits used for every real value in model files.
inline constexpr int kModelDigits = 12;

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value);
// `digits` significant digits, %g style.
std::string FormatDouble(double value, int digits);

// Whole-string parses; return false on any trailing garbage.
bool ParseDouble(std::string_view text, double* out);
bool ParseInt(std::string_view text, std::int64_t* out);
bool ParseUint(std::string_view text, std::uint64_t* out);

// Splits on runs of ASCII whitespace.
std::vector<std::string_view> SplitFields(std::string_view line);
std::string_view Trim(std::string_view text);

// Reads lines while tracking the line number for error messages.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // False at end of input. Strips a trailing '\r'.
  bool Next(std::string* line);
  // Like Next() but raises ParseError at end of input.
  std::string Expect(std::string_view what);
  // Returns the next line without consuming it.
  bool Peek(std::string* line);

  [[noreturn]] void Fail(const std::string& message) const;

  std::size_t line_number() const { return line_number_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_number_ = 0;
  bool has_peeked_ = false;
  std::string peeked_;
};

// Helpers for "key value" lines; each raises ParseError on mismatch.
std::string ExpectField(LineReader& reader, std::string_view key);
std::int64_t ExpectIntField(LineReader& reader, std::string_view key);
std::uint64_t ExpectUintField(LineReader& reader, std::string_view key);
double ExpectDoubleField(LineReader& reader, std::string_view key);

}  // namespace turnaround

#endif  // TURNAROUND_TEXT_FORMAT_H_
