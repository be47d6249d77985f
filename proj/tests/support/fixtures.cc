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

#include "fixtures.h"

#include <array>
#include <cctype>
#include <cstdio>

#include "lppa/entity_type.h"

namespace lppa::testing {
namespace {

constexpr std::array kFirst = {"Isla",   "Mateo",  "Priya",  "Jonas",
                               "Amara",  "Felix",  "Noor",   "Tobias",
                               "Leilani", "Arjun", "Sofia",  "Quentin",
                               "Hana",   "Rafael", "Maeve",  "Desmond"};
constexpr std::array kLast = {"Wilson",  "Okafor",  "Lindqvist", "Moreau",
                              "Tanaka",  "Brennan", "Castillo",  "Haddad",
                              "Kowalski", "Ferreira", "Nakamura", "Oduya",
                              "Gallagher", "Rinaldi", "Schmidt",  "Varga"};
constexpr std::array kStreets = {"Cedar Boulevard", "Maple Avenue",
                                 "Harbor Road",     "Willow Lane",
                                 "Summit Drive",    "Orchard Court",
                                 "Granite Street",  "Lakeview Parkway"};
struct Place {
  const char* city;
  const char* state;
};
constexpr std::array kPlaces = {
    Place{"Dallas", "TX"},    Place{"Tucson", "AZ"},  Place{"Omaha", "NE"},
    Place{"Raleigh", "NC"},   Place{"Boise", "ID"},   Place{"Spokane", "WA"},
    Place{"Madison", "WI"},   Place{"Albany", "NY"},  Place{"Dayton", "OH"},
    Place{"Savannah", "GA"}};
constexpr std::array kOrgs = {"Riverside Medical Center", "Mercy Hospital",
                              "Northgate Clinic", "St. Brigid Hospital",
                              "Lakeshore Health System"};
constexpr std::array kDomains = {"gmail.com", "yahoo.com", "outlook.com",
                                 "icloud.com", "proton.me"};
constexpr std::array kMonths = {"January", "February", "March",
                                "April",   "May",      "June",
                                "July",    "August",   "September",
                                "October", "November", "December"};
constexpr std::array kRelations = {"daughter", "son", "wife", "husband",
                                   "sister", "brother"};
constexpr std::array kDiagnoses = {
    "acute respiratory failure", "sepsis", "congestive heart failure",
    "diabetic ketoacidosis",     "pneumonia", "atrial fibrillation"};
constexpr std::array kFiller = {
    "Vital signs were notable for mild tachycardia.",
    "Chest radiograph showed no acute process.",
    "She was started on broad-spectrum antibiotics.",
    "Renal function remained stable throughout the stay.",
    "Pain was controlled with acetaminophen.",
    "Physical therapy evaluated the patient and recommended home exercise.",
    "No focal neurological deficits were identified."};

template <typename A>
const auto& Pick(std::mt19937_64& rng, const A& a) {
  return a[Uniform(rng, a.size())];
}

std::string Digits(std::mt19937_64& rng, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
  return s;
}

std::string Phone(std::mt19937_64& rng) {
  std::string a = std::to_string(200 + Uniform(rng, 800));
  std::string b = std::to_string(200 + Uniform(rng, 800));
  std::string c = Digits(rng, 4);
  switch (Uniform(rng, 3)) {
    case 0:
      return a + "-" + b + "-" + c;
    case 1:
      return "(" + a + ") " + b + "-" + c;
    default:
      return a + "." + b + "." + c;
  }
}

std::string Date(std::mt19937_64& rng) {
  const int year = 2095 + static_cast<int>(Uniform(rng, 10));
  const int month = 1 + static_cast<int>(Uniform(rng, 12));
  const int day = 1 + static_cast<int>(Uniform(rng, 28));
  const int hour = static_cast<int>(Uniform(rng, 24));
  const int minute = static_cast<int>(Uniform(rng, 60));
  char buf[64];
  switch (Uniform(rng, 6)) {
    case 0:
      std::snprintf(buf, sizeof buf, "%04d-%02d-%02d %02d:%02d:00", year,
                    month, day, hour, minute);
      break;
    case 1:
      std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
      break;
    case 2:
      std::snprintf(buf, sizeof buf, "%s %d, %04d", kMonths[month - 1], day,
                    year);
      break;
    case 3:
      std::snprintf(buf, sizeof buf, "%02d/%02d/%04d", month, day, year);
      break;
    case 4:
      std::snprintf(buf, sizeof buf, "%d %s %04d", day, kMonths[month - 1],
                    year);
      break;
    default:
      std::snprintf(buf, sizeof buf, "%d:%02d %s", 1 + hour % 12, minute,
                    hour < 12 ? "AM" : "PM");
      break;
  }
  return buf;
}

class NoteBuilder {
 public:
  void Text(const std::string& s) { text_ += s; }
  void Phi(EntityType type, const std::string& mention) {
    text_ += mention;
    phi_.Add(type, mention);
  }
  std::string text() const { return text_; }
  const PhiDictionary& phi() const { return phi_; }

 private:
  std::string text_;
  PhiDictionary phi_;
};

NoteRecord MakeNote(std::mt19937_64& rng, std::size_t index) {
  const std::string first = Pick(rng, kFirst);
  const std::string last = Pick(rng, kLast);
  const std::string name = first + " " + last;
  const bool female = rng() % 2 == 0;
  const Place& place = Pick(rng, kPlaces);
  const std::string zip = Digits(rng, 5);
  const std::string street =
      std::to_string(100 + Uniform(rng, 9800)) + " " + Pick(rng, kStreets);
  const std::string doctor = Pick(rng, kLast);
  const std::string relative =
      std::string(Pick(rng, kFirst)) + " " + last;

  NoteBuilder b;
  b.Text("Chief Complaint:  ");
  b.Text(Pick(rng, kDiagnoses));
  b.Text("    History Of Present Illness:  ");
  b.Phi(EntityType::kPerson, name);
  b.Text(" is a ");
  b.Phi(EntityType::kAge, std::to_string(19 + Uniform(rng, 70)));
  b.Text(female ? " y.o. female" : " y.o. male");
  b.Text(" admitted to ");
  b.Phi(EntityType::kOrganization, Pick(rng, kOrgs));
  b.Text(" on ");
  b.Phi(EntityType::kDateTime, Date(rng));
  b.Text(". ");
  b.Text(Pick(rng, kFiller));
  b.Text(" Seen by Dr. ");
  b.Phi(EntityType::kPerson, doctor);
  b.Text(" on ");
  b.Phi(EntityType::kDateTime, Date(rng));
  b.Text(". ");
  b.Text(Pick(rng, kFiller));
  b.Text("\nAddress: ");
  b.Phi(EntityType::kLocation, street + ", " + place.city);
  b.Text(", " + std::string(place.state) + " ");
  b.Phi(EntityType::kZip, zip);
  b.Text("\nPhone: ");
  b.Phi(EntityType::kPhoneNumber, Phone(rng));
  b.Text("\nEmail: ");
  std::string local = rng() % 2 ? first + "." + last
                                : std::string(1, first[0]) + last + Digits(rng, 2);
  for (char& c : local) c = static_cast<char>(std::tolower(c));
  b.Phi(EntityType::kEmail, local + "@" + Pick(rng, kDomains));
  b.Text("\nMRN: ");
  b.Phi(EntityType::kId, Digits(rng, 7));
  if (rng() % 2 == 0) {
    b.Text("\nPatient portal: ");
    b.Phi(EntityType::kUrl, "https://portal.example-health.org/patients/" +
                                Digits(rng, 6));
  } else {
    b.Text("\nRecords were shared via ");
    b.Phi(EntityType::kUrl, "www.records" + Digits(rng, 2) + ".org/intake");
    b.Text(".");
  }
  if (rng() % 3 == 0) {
    b.Text("\nZip code: ");
    b.Phi(EntityType::kZip, Digits(rng, 5));
  }
  b.Text("\nEmergency contact: her ");
  b.Text(Pick(rng, kRelations));
  b.Text(", ");
  b.Phi(EntityType::kPerson, relative);
  b.Text(", reachable at ");
  b.Phi(EntityType::kPhoneNumber, Phone(rng));
  b.Text(". Follow-up visit scheduled for ");
  b.Phi(EntityType::kDateTime, Date(rng));
  b.Text(".");

  char id[32];
  std::snprintf(id, sizeof id, "fx-%05zu", index);
  NoteRecord note;
  note.id = id;
  note.text = b.text();
  note.phi = b.phi();
  note.source = NoteSource::kSpi;
  return note;
}

const std::array<std::string, 8> kMentionAlphabet = {
    "john doe", "Doe", "45", "may 3, 2023", "Boston", "555-123-4567",
    "Mercy Hospital", "a@b.org"};

std::string Variant(const std::string& base, std::mt19937_64& rng) {
  std::string s = base;
  switch (Uniform(rng, 4)) {
    case 0:
      for (char& c : s) c = static_cast<char>(std::toupper(c));
      break;
    case 1:
      s = "  " + s + " ";
      break;
    case 2:
      s += ".";
      break;
    default:
      break;
  }
  return s;
}

}  // namespace

Corpus SpiFixtureCorpus(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corpus corpus;
  corpus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) corpus.push_back(MakeNote(rng, i));
  return corpus;
}

PhiDictionary RandomPhi(std::mt19937_64& rng, int max_per_type) {
  PhiDictionary phi;
  for (EntityType t : kAllEntityTypes) {
    // Leave most types empty, as real notes do.
    if (Uniform(rng, 3) != 0) continue;
    const std::size_t k = Uniform(rng, max_per_type + 1);
    for (std::size_t i = 0; i < k; ++i) {
      phi.Add(t, Variant(kMentionAlphabet[Uniform(rng, 4)], rng));
    }
  }
  return phi;
}

PhiDictionary PerturbPhi(const PhiDictionary& gold, std::mt19937_64& rng) {
  PhiDictionary pred;
  for (EntityType t : kAllEntityTypes) {
    for (const std::string& m : gold.mentions(t)) {
      switch (Uniform(rng, 6)) {
        case 0:
          break;  // dropped
        case 1:
          pred.Add(t, m);
          pred.Add(t, Variant(m, rng));
          break;
        case 2:
          pred.Add(kAllEntityTypes[Uniform(rng, kNumEntityTypes)], m);
          break;
        default:
          pred.Add(t, Variant(m, rng));
          break;
      }
    }
  }
  if (Uniform(rng, 2) == 0) {
    pred.Add(kAllEntityTypes[Uniform(rng, kNumEntityTypes)],
             kMentionAlphabet[Uniform(rng, kMentionAlphabet.size())]);
  }
  return pred;
}

}  // namespace lppa::testing
