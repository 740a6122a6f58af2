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

#ifndef TURNAROUND_RNG_H_
#define TURNAROUND_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace turnaround {

// Seedable generator with a platform-independent output sequence.
//
// The engine is std::mt19937_64, whose sequence is fixed by the C++ standard.
// The standard distributions are not (their algorithms are left to the
// library vendor), so every derived quantity here is computed by hand:
//   Uniform()  = (next() >> 11) * 2^-53, a double in [0, 1)
//   Below(n)   = rejection sampling on the top bits, exact and unbiased
//   Shuffle()  = Fisher-Yates from the back using Below()
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  double Uniform();
  std::uint64_t Below(std::uint64_t n);

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(Below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer over (base, stream); used to give independent seeds to
// per-document and per-fold work without depending on execution order.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream);

}  // namespace turnaround

#endif  // TURNAROUND_RNG_H_
