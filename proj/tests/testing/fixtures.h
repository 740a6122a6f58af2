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

#ifndef TURNAROUND_TESTS_TESTING_FIXTURES_H_
#define TURNAROUND_TESTS_TESTING_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "turnaround/corpus.h"
#include "turnaround/rng.h"
#include "turnaround/synthgen.h"
#include "turnaround/vocabulary.h"

namespace turnaround::testing {

// Documents drawn from one of two disjoint word pools, uniformly.
struct TwoClusterData {
  Vocabulary vocab;
  std::vector<BowVector> bows;
  std::vector<int> cluster;
};

inline TwoClusterData MakeTwoClusterData(int docs_per_cluster, int doc_length,
                                         int words_per_cluster,
                                         std::uint64_t seed) {
  std::vector<std::string> terms;
  for (int c = 0; c < 2; ++c) {
    for (int w = 0; w < words_per_cluster; ++w) {
      terms.push_back(std::string(1, static_cast<char>('a' + c)) + "word" +
                      std::to_string(100 + w));
    }
  }
  // "a..." sorts before "b...", and the numeric suffixes are equal width.
  TwoClusterData data{Vocabulary::FromTerms(terms), {}, {}};
  Rng rng(seed);
  for (int d = 0; d < 2 * docs_per_cluster; ++d) {
    const int c = d % 2;
    std::vector<int> counts(2 * words_per_cluster, 0);
    for (int t = 0; t < doc_length; ++t) {
      ++counts[c * words_per_cluster + static_cast<int>(rng.Below(words_per_cluster))];
    }
    BowVector bow;
    for (int w = 0; w < 2 * words_per_cluster; ++w) {
      if (counts[w] > 0) bow.entries.push_back({w, counts[w]});
    }
    data.bows.push_back(std::move(bow));
    data.cluster.push_back(c);
  }
  return data;
}

// Three abrupt epochs of ten years each (1990-1999, 2000-2009, 2010-2019)
// over six topics. Epoch e puts 0.45 on each of topics 2e and 2e+1 and
// 0.025 on the other four; topics own disjoint 30-word blocks.
inline SynthSpec PlantedEpochSpec(std::uint64_t seed, int docs_per_year = 20,
                                  int doc_length = 100) {
  SynthSpec spec;
  spec.seed = seed;
  spec.num_topics = 6;
  spec.words_per_topic = 30;
  for (int e = 0; e < 3; ++e) {
    EpochSpec epoch;
    epoch.start = 1990 + 10 * e;
    epoch.end = epoch.start + 9;
    epoch.mixture.assign(6, 0.025);
    epoch.mixture[2 * e] = 0.45;
    epoch.mixture[2 * e + 1] = 0.45;
    epoch.docs_per_year = docs_per_year;
    epoch.doc_length = doc_length;
    spec.epochs.push_back(epoch);
  }
  return spec;
}

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& name) {
    path_ = std::filesystem::temp_directory_path() /
            ("turnaround_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void WriteText(const std::filesystem::path& path,
                      const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace turnaround::testing

#endif  // TURNAROUND_TESTS_TESTING_FIXTURES_H_
