// Copyright 2026 The LPPA Authors.
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

#ifndef LPPA_RANDOM_H_
#define LPPA_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace lppa {

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Seed for job `index` under `master_seed`. Independent of scheduling, so
// parallel and sequential runs draw identical streams.
std::uint64_t DeriveSeed(std::uint64_t master_seed, std::uint64_t index);

// Deterministic generator with a portable bounded-integer draw. Standard
// distributions are implementation-defined, so they are avoided here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). `bound` must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  const T& Pick(std::span<const T> items) {
    return items[Below(items.size())];
  }

  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = Below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lppa

#endif  // LPPA_RANDOM_H_
