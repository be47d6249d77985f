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

#include "lppa/synth.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "lppa/errors.h"
#include "lppa/normalize.h"
#include "lppa/prompts.h"
#include "lppa/random.h"
#include "lppa/text.h"

namespace lppa {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kSectionNames[] = {"allergy", "diagnosis", "lab",
                                              "medication", "treatment"};

std::vector<FieldMap>* SectionOf(StructuredRecord& r, std::string_view name) {
  if (name == "allergy") return &r.allergy;
  if (name == "diagnosis") return &r.diagnosis;
  if (name == "lab") return &r.lab;
  if (name == "medication") return &r.medication;
  if (name == "treatment") return &r.treatment;
  return nullptr;
}

const std::vector<FieldMap>& SectionOf(const StructuredRecord& r,
                                       std::string_view name) {
  return *SectionOf(const_cast<StructuredRecord&>(r), name);
}

FieldMap FieldMapFromJson(const ordered_json& j, std::string_view where) {
  if (!j.is_object()) {
    throw ParseError("record section '" + std::string(where) +
                     "' must be an object");
  }
  FieldMap out;
  for (const auto& [key, v] : j.items()) {
    FieldValue value;
    if (v.is_null()) {
      value = std::monostate{};
    } else if (v.is_boolean()) {
      value = v.get<bool>();
    } else if (v.is_number_integer()) {
      value = v.get<std::int64_t>();
    } else if (v.is_number_float()) {
      value = v.get<double>();
    } else if (v.is_string()) {
      value = v.get<std::string>();
    } else {
      throw ParseError("field '" + key + "' in '" + std::string(where) +
                       "' is not a scalar");
    }
    out.push_back(Field{key, std::move(value)});
  }
  return out;
}

// Python repr of a float: shortest round-trip digits, positional notation
// for decimal exponents in [-4, 16), otherwise scientific with a signed
// two-digit exponent.
std::string PythonFloat(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  std::string sci(buf, end);
  bool negative = sci[0] == '-';
  if (negative) sci.erase(0, 1);
  std::size_t e_pos = sci.find('e');
  std::string digits = sci.substr(0, e_pos);
  digits.erase(std::remove(digits.begin(), digits.end(), '.'), digits.end());
  int exponent = std::stoi(sci.substr(e_pos + 1));
  std::string out;
  if (exponent >= -4 && exponent < 16) {
    if (exponent < 0) {
      out = "0." + std::string(-exponent - 1, '0') + digits;
    } else if (static_cast<std::size_t>(exponent) + 1 >= digits.size()) {
      out = digits + std::string(exponent + 1 - digits.size(), '0') + ".0";
    } else {
      out = digits.substr(0, exponent + 1) + "." + digits.substr(exponent + 1);
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    char exp_buf[16];
    std::snprintf(exp_buf, sizeof exp_buf, "e%c%02d", exponent < 0 ? '-' : '+',
                  std::abs(exponent));
    out += exp_buf;
  }
  return negative ? "-" + out : out;
}

std::string PythonString(std::string_view s) {
  bool has_single = s.find('\'') != std::string_view::npos;
  bool has_double = s.find('"') != std::string_view::npos;
  char quote = (has_single && !has_double) ? '"' : '\'';
  std::string out(1, quote);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c == quote) out += '\\';
        out += c;
    }
  }
  out += quote;
  return out;
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = text::Trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(t);
  }
  return lines;
}

std::string ReadWholeFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Digits(Rng& rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += static_cast<char>('0' + rng.Below(10));
  return out;
}

void SetField(FieldMap& fields, const std::string& key, std::string value) {
  for (Field& f : fields) {
    if (f.key == key) {
      f.value = std::move(value);
      return;
    }
  }
  fields.push_back(Field{key, std::move(value)});
}

std::string_view StripPrefixIgnoreCase(std::string_view s,
                                       std::string_view prefix) {
  if (s.size() >= prefix.size() &&
      text::EqualsIgnoreCase(s.substr(0, prefix.size()), prefix)) {
    return s.substr(prefix.size());
  }
  return s;
}

}  // namespace

Gender StructuredRecord::gender() const {
  for (const Field& f : patient) {
    if (f.key != "gender") continue;
    if (const auto* s = std::get_if<std::string>(&f.value)) {
      std::string g = text::AsciiLower(text::Trim(*s));
      if (g == "female") return Gender::kFemale;
      if (g == "male") return Gender::kMale;
    }
  }
  return Gender::kUnknown;
}

StructuredRecord RecordFromJsonLine(std::string_view line) {
  ordered_json j = ordered_json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError("record line is not a JSON object");
  }
  StructuredRecord record;
  auto patient = j.find("patient");
  if (patient == j.end()) throw ParseError("record has no 'patient' section");
  record.patient = FieldMapFromJson(*patient, "patient");
  for (std::string_view name : kSectionNames) {
    auto it = j.find(std::string(name));
    if (it == j.end() || it->is_null()) continue;
    std::vector<FieldMap>& section = *SectionOf(record, name);
    if (it->is_array()) {
      for (const auto& entry : *it) {
        section.push_back(FieldMapFromJson(entry, name));
      }
    } else {
      section.push_back(FieldMapFromJson(*it, name));
    }
  }
  return record;
}

std::vector<StructuredRecord> ReadRecordsFile(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<StructuredRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::Trim(line).empty()) continue;
    try {
      records.push_back(RecordFromJsonLine(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return records;
}

std::string RenderFieldValue(const FieldValue& value) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "None"; }
    std::string operator()(bool b) const { return b ? "True" : "False"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return PythonFloat(d); }
    std::string operator()(const std::string& s) const {
      return PythonString(s);
    }
  };
  return std::visit(Visitor{}, value);
}

std::string RenderFieldMap(const FieldMap& fields) {
  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ", ";
    out += PythonString(fields[i].key);
    out += ": ";
    out += RenderFieldValue(fields[i].value);
  }
  out += "}";
  return out;
}

IdentityPools LoadIdentityPools(const std::filesystem::path& dir) {
  IdentityPools pools;
  pools.female_first = ReadLines(dir / "female_first_names.txt");
  pools.male_first = ReadLines(dir / "male_first_names.txt");
  pools.last = ReadLines(dir / "last_names.txt");
  pools.streets = ReadLines(dir / "streets.txt");
  for (const std::string& line : ReadLines(dir / "cities.txt")) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, ',')) parts.emplace_back(text::Trim(part));
    if (parts.size() != 3 || parts[2].size() != 3 ||
        !std::all_of(parts[2].begin(), parts[2].end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw IoError("bad city entry '" + line + "', expected City,ST,zip3");
    }
    pools.cities.push_back(CityEntry{parts[0], parts[1], parts[2]});
  }
  if (std::filesystem::exists(dir / "email_domains.txt")) {
    pools.email_domains = ReadLines(dir / "email_domains.txt");
  } else {
    pools.email_domains = {"gmail.com",   "yahoo.com",  "outlook.com",
                           "hotmail.com", "icloud.com", "aol.com"};
  }
  if (pools.female_first.empty() || pools.male_first.empty() ||
      pools.last.empty() || pools.streets.empty() || pools.cities.empty() ||
      pools.email_domains.empty()) {
    throw EmptyPool("identity pools in " + dir.string() + " are incomplete");
  }
  return pools;
}

SimulatedIdentity SimulateIdentity(const StructuredRecord& record,
                                   const IdentityPools& pools,
                                   std::uint64_t seed, bool with_email) {
  if (pools.last.empty() || pools.streets.empty() || pools.cities.empty()) {
    throw EmptyPool("surname, street and city pools must be non-empty");
  }
  Rng rng(seed);
  std::string first;
  switch (record.gender()) {
    case Gender::kFemale:
      if (pools.female_first.empty()) throw EmptyPool("no female first names");
      first = pools.female_first[rng.Below(pools.female_first.size())];
      break;
    case Gender::kMale:
      if (pools.male_first.empty()) throw EmptyPool("no male first names");
      first = pools.male_first[rng.Below(pools.male_first.size())];
      break;
    case Gender::kUnknown: {
      std::size_t total = pools.female_first.size() + pools.male_first.size();
      if (total == 0) throw EmptyPool("no first names");
      std::size_t k = rng.Below(total);
      first = k < pools.female_first.size()
                  ? pools.female_first[k]
                  : pools.male_first[k - pools.female_first.size()];
      break;
    }
  }
  const std::string& last = pools.last[rng.Below(pools.last.size())];

  SimulatedIdentity id;
  id.name = first + " " + last;
  std::string digits = Digits(rng, 10);
  id.phone = digits.substr(0, 3) + "-" + digits.substr(3, 3) + "-" +
             digits.substr(6, 4);
  std::int64_t number = rng.Between(100, 9999);
  const std::string& street = pools.streets[rng.Below(pools.streets.size())];
  const CityEntry& city = pools.cities[rng.Below(pools.cities.size())];
  std::string zip = city.zip_prefix + Digits(rng, 2);
  id.address = std::to_string(number) + " " + street + ", " + city.city + ", " +
               city.state + " " + zip;
  if (with_email) {
    if (pools.email_domains.empty()) throw EmptyPool("no email domains");
    std::string local = text::AsciiLower(first) + "." + text::AsciiLower(last);
    if (rng.Below(2) == 1) local += std::to_string(rng.Between(1, 99));
    id.email =
        local + "@" + pools.email_domains[rng.Below(pools.email_domains.size())];
  }
  return id;
}

ChatRequest BuildAegPrompt(int n_requested,
                           const std::vector<std::string>& exemplars) {
  if (n_requested != 1) {
    throw std::invalid_argument("only one note per generation call is supported");
  }
  ChatRequest req;
  req.system = std::string(prompts::kAegSystem);
  req.user = std::string(prompts::kAegUser);
  if (!exemplars.empty()) {
    req.user += "\n\nHere are some example clinical notes:";
    for (const std::string& ex : exemplars) {
      req.user += "\n<EXAMPLE>\n";
      req.user += ex;
      req.user += "\n<END OF EXAMPLE>";
    }
  }
  req.temperature = 1.0;
  return req;
}

ChatRequest BuildSpiPrompt(const StructuredRecord& record,
                           const SimulatedIdentity& identity,
                           std::string_view exemplar) {
  FieldMap patient = record.patient;
  SetField(patient, "name", identity.name);
  SetField(patient, "phone", identity.phone);
  SetField(patient, "address", identity.address);
  if (identity.email) SetField(patient, "email", *identity.email);

  std::string user(prompts::kSpiUserHead);
  user += RenderFieldMap(patient);
  user += "\n";
  for (std::string_view name : kSectionNames) {
    std::string header = text::AsciiLower(name);
    for (char& c : header) c = static_cast<char>(std::toupper(c));
    user += header;
    user += "\n";
    const std::vector<FieldMap>& entries = SectionOf(record, name);
    if (entries.empty()) {
      user += "{}\n";
    }
    for (const FieldMap& entry : entries) {
      user += RenderFieldMap(entry);
      user += "\n";
    }
  }
  user += prompts::kSpiUserMiddle;
  user += exemplar;
  user += prompts::kSpiUserTail;

  ChatRequest req;
  req.system = std::string(prompts::kSpiSystem);
  req.user = std::move(user);
  req.temperature = 1.0;
  return req;
}

GeneratedNote ParseGeneration(std::string_view reply) {
  std::size_t marker = std::string_view::npos;
  for (std::size_t pos = text::FindIgnoreCase(reply, "PHI:");
       pos != std::string_view::npos;
       pos = text::FindIgnoreCase(reply, "PHI:", pos + 1)) {
    marker = pos;
  }
  if (marker == std::string_view::npos) {
    throw MissingMarker("generation reply has no \"PHI:\" marker");
  }
  std::string_view note = text::Trim(reply.substr(0, marker));
  note = text::Trim(StripPrefixIgnoreCase(note, "Clinical Note:"));
  while (!note.empty() && note.back() == ',') {
    note = text::Trim(note.substr(0, note.size() - 1));
  }
  if (note.size() >= 2 && note.front() == '"' && note.back() == '"') {
    note = text::Trim(note.substr(1, note.size() - 2));
  }
  if (note.empty()) throw ParseError("generation reply has an empty note");

  PhiParseResult phi =
      ParsePhiDictionary(reply.substr(marker + 4), /*strict=*/false);
  return GeneratedNote{std::string(note), std::move(phi.dictionary),
                       std::move(phi.warnings)};
}

std::vector<std::string> ValidateGenerated(std::string_view note_text,
                                           const PhiDictionary& phi,
                                           const SimulatedIdentity* identity) {
  const NormalizationPolicy policy{true, true, false};
  const std::string note = NormalizeMention(note_text, policy);
  std::vector<std::string> warnings;
  for (EntityType t : kAllEntityTypes) {
    for (const std::string& m : phi.mentions(t)) {
      if (note.find(NormalizeMention(m, policy)) == std::string::npos) {
        warnings.push_back(std::string(EntityTypeName(t)) + " mention '" + m +
                           "' not found in note");
      }
    }
  }
  if (identity) {
    auto check = [&](std::string_view field, const std::string& value) {
      if (note.find(NormalizeMention(value, policy)) == std::string::npos) {
        warnings.push_back("identity field '" + std::string(field) + "' ('" +
                           value + "') missing from note");
      }
    };
    check("name", identity->name);
    check("phone", identity->phone);
    check("address", identity->address);
    if (identity->email) check("email", *identity->email);
  }
  return warnings;
}

Corpus MixCorpora(const Corpus& a, const Corpus& b, std::uint64_t seed) {
  Corpus mixed;
  mixed.reserve(a.size() + b.size());
  std::unordered_set<std::string> ids;
  for (const NoteRecord& n : a) {
    mixed.push_back(n);
    ids.insert(n.id);
  }
  for (const NoteRecord& n : b) {
    NoteRecord copy = n;
    while (ids.count(copy.id)) copy.id += "-b";
    ids.insert(copy.id);
    mixed.push_back(std::move(copy));
  }
  Rng rng(seed);
  rng.Shuffle(std::span<NoteRecord>(mixed));
  return mixed;
}

std::string TrainingLine(const NoteRecord& record) {
  if (!record.phi) throw MissingGold(record.id);
  ordered_json line;
  line["messages"] = ordered_json::array(
      {ordered_json{{"role", "system"},
                    {"content", std::string(prompts::kTaskSystem)}},
       ordered_json{{"role", "user"},
                    {"content", BuildTaskPrompt(record.text).user}},
       ordered_json{{"role", "assistant"},
                    {"content", SerializePhiDictionary(*record.phi)}}});
  return line.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

std::size_t ExportTrainingSet(const Corpus& corpus, std::ostream& out) {
  for (const NoteRecord& r : corpus) {
    if (!r.phi) throw MissingGold(r.id);
  }
  for (const NoteRecord& r : corpus) out << TrainingLine(r) << '\n';
  return corpus.size();
}

ChatRequest BuildGenerationRequest(const GenerationJob& job,
                                   std::string_view model) {
  ChatRequest req;
  if (job.mode == GenerationMode::kAeg) {
    req = BuildAegPrompt(1, job.exemplars);
  } else {
    if (!job.record || !job.identity) {
      throw std::invalid_argument("SPI job needs a record and an identity");
    }
    req = BuildSpiPrompt(*job.record, *job.identity,
                         job.exemplars.empty() ? "" : job.exemplars.front());
  }
  req.model = std::string(model);
  req.seed = job.seed;
  return req;
}

GenerationJob MakeGenerationJob(const GenerationConfig& config,
                                const IdentityPools* pools, std::size_t index) {
  GenerationJob job;
  job.mode = config.mode;
  job.seed = DeriveSeed(config.master_seed, index);
  if (config.mode == GenerationMode::kAeg) {
    job.exemplars = config.exemplars;
    return job;
  }
  if (config.records.empty()) {
    throw std::invalid_argument("SPI generation needs structured records");
  }
  if (!pools) throw std::invalid_argument("SPI generation needs identity pools");
  job.record = config.records[index % config.records.size()];
  job.identity = SimulateIdentity(*job.record, *pools, job.seed,
                                  config.with_email);
  if (!config.exemplars.empty()) {
    std::size_t k = config.rotate_exemplars ? index % config.exemplars.size() : 0;
    job.exemplars = {config.exemplars[k]};
  }
  return job;
}

std::vector<GenerationOutcome> GenerateCorpus(const GenerationConfig& config,
                                              const IdentityPools* pools,
                                              ChatTransport& transport,
                                              const RetryPolicy& retry,
                                              const Sleeper& sleep,
                                              int parallelism) {
  std::vector<GenerationOutcome> outcomes(config.count);
  const std::string prefix =
      config.id_prefix.empty()
          ? std::string(config.mode == GenerationMode::kAeg ? "aeg" : "spi")
          : config.id_prefix;
  ParallelFor(config.count, parallelism, [&](std::size_t i) {
    GenerationOutcome& out = outcomes[i];
    try {
      GenerationJob job = MakeGenerationJob(config, pools, i);
      ChatRequest request = BuildGenerationRequest(job, config.model);
      GeneratedNote generated = CompleteWithRetry(
          transport, request, retry, sleep,
          [](const std::string& reply) { return ParseGeneration(reply); });
      out.warnings = ValidateGenerated(
          generated.text, generated.phi,
          job.identity ? &*job.identity : nullptr);
      char id[32];
      std::snprintf(id, sizeof id, "%05zu", i);
      NoteRecord note;
      note.id = prefix + "-" + id;
      note.text = std::move(generated.text);
      note.phi = std::move(generated.phi);
      note.source = config.mode == GenerationMode::kAeg ? NoteSource::kAeg
                                                        : NoteSource::kSpi;
      out.note = std::move(note);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  });
  return outcomes;
}

std::vector<std::string> LoadExemplars(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("exemplar directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> exemplars;
  for (const auto& f : files) {
    std::string body = ReadWholeFile(f);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) {
      body.pop_back();
    }
    exemplars.push_back(std::move(body));
  }
  return exemplars;
}

}  // namespace lppa
