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

#ifndef LPPA_SYNTH_H_
#define LPPA_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lppa/annotator.h"
#include "lppa/chat.h"
#include "lppa/note.h"
#include "lppa/phi_dictionary.h"

namespace lppa {

// ---------------------------------------------------------------------------
// Structured clinical records (eICU-shaped JSONL).

using FieldValue =
    std::variant<std::monostate, bool, std::int64_t, double, std::string>;

struct Field {
  std::string key;
  FieldValue value;
  friend bool operator==(const Field&, const Field&) = default;
};

// Insertion-ordered key/value map.
using FieldMap = std::vector<Field>;

enum class Gender { kMale, kFemale, kUnknown };

struct StructuredRecord {
  FieldMap patient;
  std::vector<FieldMap> allergy;
  std::vector<FieldMap> diagnosis;
  std::vector<FieldMap> lab;
  std::vector<FieldMap> medication;
  std::vector<FieldMap> treatment;

  // From patient["gender"]; anything but male/female is kUnknown.
  Gender gender() const;
  friend bool operator==(const StructuredRecord&,
                         const StructuredRecord&) = default;
};

// One JSON object with keys patient/allergy/diagnosis/lab/medication/
// treatment. Section values may be an object or a list of objects. Field
// values must be scalars. Throws ParseError.
StructuredRecord RecordFromJsonLine(std::string_view line);
std::vector<StructuredRecord> ReadRecordsFile(const std::filesystem::path& path);

// Python-literal rendering, e.g. {'gender': 'female', 'age': 69,
// 'admissionheight': 172.5}. Floats always carry a fraction ("32.0").
std::string RenderFieldValue(const FieldValue& value);
std::string RenderFieldMap(const FieldMap& fields);

// ---------------------------------------------------------------------------
// Identity simulation.

struct CityEntry {
  std::string city;
  std::string state;
  // First three ZIP digits; two random digits complete the code.
  std::string zip_prefix;
};

struct IdentityPools {
  std::vector<std::string> female_first;
  std::vector<std::string> male_first;
  std::vector<std::string> last;
  std::vector<std::string> streets;
  std::vector<CityEntry> cities;
  std::vector<std::string> email_domains;
};

// Reads female_first_names.txt, male_first_names.txt, last_names.txt,
// streets.txt and cities.txt ("City,ST,zip3" per line) from `dir`. Email
// domains come from email_domains.txt when present, else a built-in list of
// real providers. Throws IoError or EmptyPool.
IdentityPools LoadIdentityPools(const std::filesystem::path& dir);

struct SimulatedIdentity {
  std::string name;     // "First Last"
  std::string phone;    // NNN-NNN-NNNN
  std::string address;  // "<number> <Street>, <City>, <ST> <ZIP>"
  std::optional<std::string> email;
  friend bool operator==(const SimulatedIdentity&,
                         const SimulatedIdentity&) = default;
};

// Deterministic in (pools, record gender, seed). Throws EmptyPool.
SimulatedIdentity SimulateIdentity(const StructuredRecord& record,
                                   const IdentityPools& pools,
                                   std::uint64_t seed, bool with_email = false);

// ---------------------------------------------------------------------------
// Prompt builders.

// Example-guided generation prompt. Only single-note requests are
// supported; `exemplars` (optional) are appended to the user turn as
// structural references. Throws std::invalid_argument if n_requested != 1.
ChatRequest BuildAegPrompt(int n_requested = 1,
                           const std::vector<std::string>& exemplars = {});

// Structured-record prompt. Identity fields are written into the PATIENT
// INFORMATION block after the record's own fields.
ChatRequest BuildSpiPrompt(const StructuredRecord& record,
                           const SimulatedIdentity& identity,
                           std::string_view exemplar);

// ---------------------------------------------------------------------------
// Reply handling.

struct GeneratedNote {
  std::string text;
  PhiDictionary phi;
  std::vector<std::string> repairs;
};

// Splits at the last "PHI:" (any case). Strips a leading "Clinical Note:",
// a trailing comma and wrapping quotes from the note part, and parses the
// remainder leniently. Throws MissingMarker, or ParseError for an empty
// note or unparseable PHI block.
GeneratedNote ParseGeneration(std::string_view reply);

// Mentions not found in the note (case- and whitespace-insensitive) and
// identity fields the note does not contain. Never throws.
std::vector<std::string> ValidateGenerated(
    std::string_view note_text, const PhiDictionary& phi,
    const SimulatedIdentity* identity = nullptr);

// ---------------------------------------------------------------------------
// Corpus assembly.

// a ++ b in a seeded uniform order. Ids of `b` that collide get a "-b"
// suffix (repeated until unique).
Corpus MixCorpora(const Corpus& a, const Corpus& b, std::uint64_t seed);

// Chat-format fine-tuning file, one line per record:
//   {"messages":[{"role":"system",...},{"role":"user",...},
//                {"role":"assistant","content":<canonical PHI JSON>}]}
// Validates every record first; throws MissingGold without writing.
// Returns the number of lines written.
std::size_t ExportTrainingSet(const Corpus& corpus, std::ostream& out);
std::string TrainingLine(const NoteRecord& record);

// ---------------------------------------------------------------------------
// Generation runs.

enum class GenerationMode { kAeg, kSpi };

struct GenerationJob {
  GenerationMode mode = GenerationMode::kAeg;
  std::uint64_t seed = 0;
  std::vector<std::string> exemplars;
  std::optional<StructuredRecord> record;
  std::optional<SimulatedIdentity> identity;
};

// Throws std::invalid_argument when the mode's inputs are missing.
ChatRequest BuildGenerationRequest(const GenerationJob& job,
                                   std::string_view model = "");

struct GenerationConfig {
  GenerationMode mode = GenerationMode::kAeg;
  std::size_t count = 0;
  std::uint64_t master_seed = 0;
  std::vector<std::string> exemplars;
  // SPI only: records are used round-robin.
  std::vector<StructuredRecord> records;
  // SPI only: rotate through exemplars instead of always using the first.
  bool rotate_exemplars = false;
  bool with_email = false;
  std::string id_prefix;
  std::string model;
};

struct GenerationOutcome {
  std::optional<NoteRecord> note;
  std::vector<std::string> warnings;
  std::string error;
};

// Job i uses DeriveSeed(master_seed, i), so the result does not depend on
// `parallelism`.
GenerationJob MakeGenerationJob(const GenerationConfig& config,
                                const IdentityPools* pools, std::size_t index);

std::vector<GenerationOutcome> GenerateCorpus(const GenerationConfig& config,
                                              const IdentityPools* pools,
                                              ChatTransport& transport,
                                              const RetryPolicy& retry,
                                              const Sleeper& sleep,
                                              int parallelism);

// The two bundled example-guided exemplars (fully synthetic).
std::vector<std::string> LoadExemplars(const std::filesystem::path& dir);

}  // namespace lppa

#endif  // LPPA_SYNTH_H_
