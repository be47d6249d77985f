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

#ifndef LPPA_TESTS_SUPPORT_FIXTURES_H_
#define LPPA_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "lppa/note.h"
#include "lppa/phi_dictionary.h"

namespace lppa::testing {

// SPI-style notes built from templates with the gold PHI known by
// construction. Independent of the mock transport and the rule tagger.
Corpus SpiFixtureCorpus(std::size_t n, std::uint64_t seed);

// Random dictionary over a tiny alphabet so that gold and prediction share
// mentions often. Mentions vary in case, spacing and edge punctuation.
PhiDictionary RandomPhi(std::mt19937_64& rng, int max_per_type = 3);

// A random perturbation of `gold`: drops, duplicates, retypes and adds
// mentions.
PhiDictionary PerturbPhi(const PhiDictionary& gold, std::mt19937_64& rng);

inline std::size_t Uniform(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// Whole file as bytes; empty string when missing.
inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline std::string Golden(const std::string& name) {
  return ReadFile(std::filesystem::path(LPPA_GOLDEN_DIR) / name);
}

}  // namespace lppa::testing

#endif  // LPPA_TESTS_SUPPORT_FIXTURES_H_
