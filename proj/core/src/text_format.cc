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

#include "turnaround/text_format.h"

#include <array>
#include <charconv>
#include <cmath>

#include "turnaround/error.h"

namespace turnaround {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::string FormatDouble(double value) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string FormatDouble(double value, int digits) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, digits);
  return std::string(buf.data(), end);
}

bool ParseDouble(std::string_view text, double* out) {
  if (text.empty()) return false;
  // from_chars rejects a leading '+', which we never write anyway.
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size() &&
         std::isfinite(*out);
}

bool ParseInt(std::string_view text, std::int64_t* out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool ParseUint(std::string_view text, std::uint64_t* out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

bool LineReader::Next(std::string* line) {
  if (has_peeked_) {
    has_peeked_ = false;
    *line = std::move(peeked_);
    ++line_number_;
    return true;
  }
  if (!std::getline(in_, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  ++line_number_;
  return true;
}

bool LineReader::Peek(std::string* line) {
  if (!has_peeked_) {
    if (!std::getline(in_, peeked_)) return false;
    if (!peeked_.empty() && peeked_.back() == '\r') peeked_.pop_back();
    has_peeked_ = true;
  }
  *line = peeked_;
  return true;
}

std::string LineReader::Expect(std::string_view what) {
  std::string line;
  if (!Next(&line)) {
    throw ParseError(source_, line_number_ + 1,
                     "unexpected end of input, expected " + std::string(what));
  }
  return line;
}

void LineReader::Fail(const std::string& message) const {
  throw ParseError(source_, line_number_, message);
}

std::string ExpectField(LineReader& reader, std::string_view key) {
  std::string line = reader.Expect(key);
  auto fields = SplitFields(line);
  if (fields.size() != 2 || fields[0] != key) {
    reader.Fail("expected '" + std::string(key) + " <value>'");
  }
  return std::string(fields[1]);
}

std::int64_t ExpectIntField(LineReader& reader, std::string_view key) {
  std::int64_t v = 0;
  if (!ParseInt(ExpectField(reader, key), &v)) {
    reader.Fail("bad integer for '" + std::string(key) + "'");
  }
  return v;
}

std::uint64_t ExpectUintField(LineReader& reader, std::string_view key) {
  std::uint64_t v = 0;
  if (!ParseUint(ExpectField(reader, key), &v)) {
    reader.Fail("bad unsigned integer for '" + std::string(key) + "'");
  }
  return v;
}

double ExpectDoubleField(LineReader& reader, std::string_view key) {
  double v = 0;
  if (!ParseDouble(ExpectField(reader, key), &v)) {
    reader.Fail("bad number for '" + std::string(key) + "'");
  }
  return v;
}

}  // namespace turnaround
