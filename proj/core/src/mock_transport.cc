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

#include "lppa/mock_transport.h"

#include "lppa/prompts.h"
#include "lppa/random.h"
#include "lppa/text.h"

namespace lppa {
namespace {

constexpr std::string_view kFirst[] = {"Jimmy", "Emily", "Carlos", "Priya",
                                       "Grace", "Owen",  "Mei",    "Hassan"};
constexpr std::string_view kLast[] = {"Chen",   "Turner", "Alvarez", "Patel",
                                      "Nguyen", "Brooks", "Kim",     "Okafor"};
constexpr std::string_view kHospitals[] = {
    "Midtown Medical Center", "Riverside General Hospital",
    "Lakeshore Health System", "Saint Anne Clinic"};
constexpr std::string_view kCities[] = {"Atlanta", "Denver", "Boston",
                                        "Seattle", "Houston"};
constexpr std::string_view kComplaints[] = {
    "chest pain", "shortness of breath", "a fall at home",
    "abdominal pain", "fever and cough", "syncope"};
constexpr std::string_view kMonths[] = {"January", "March", "May",
                                        "July",    "September", "November"};
constexpr std::string_view kDomains[] = {"gmail.com", "yahoo.com",
                                         "outlook.com"};

template <std::size_t N>
std::string Pick(Rng& rng, const std::string_view (&items)[N]) {
  return std::string(items[rng.Below(N)]);
}

std::uint64_t RequestSeed(const ChatRequest& request) {
  // FNV-1a, stable across platforms.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : request.user) {
    h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  return Mix64(h ^ Mix64(request.seed.value_or(0)));
}

// Value of 'key': '...' inside a rendered patient block.
std::string QuotedField(std::string_view user, std::string_view key) {
  std::string needle = "'" + std::string(key) + "': ";
  std::size_t pos = user.find(needle);
  if (pos == std::string_view::npos) return "";
  pos += needle.size();
  if (pos >= user.size()) return "";
  char quote = user[pos];
  if (quote != '\'' && quote != '"') {
    std::size_t end = user.find_first_of(",}", pos);
    return std::string(user.substr(pos, end - pos));
  }
  std::size_t end = user.find(quote, pos + 1);
  if (end == std::string_view::npos) return "";
  return std::string(user.substr(pos + 1, end - pos - 1));
}

struct Draft {
  std::string note;
  PhiDictionary phi;
};

std::string Reply(const Draft& d) {
  return "Clinical note: " + d.note + "\nPHI: " + SerializePhiDictionary(d.phi);
}

std::string DateText(Rng& rng) {
  return Pick(rng, kMonths) + " " + std::to_string(rng.Between(1, 28)) + ", " +
         std::to_string(rng.Between(2019, 2024));
}

std::string PhoneText(Rng& rng) {
  auto digits = [&](int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += static_cast<char>('0' + rng.Below(10));
    return s;
  };
  return digits(3) + "-" + digits(3) + "-" + digits(4);
}

Draft ExampleGuidedNote(Rng& rng) {
  Draft d;
  std::string first = Pick(rng, kFirst);
  std::string last = Pick(rng, kLast);
  std::string doctor = Pick(rng, kFirst);
  std::string age = std::to_string(rng.Between(18, 95));
  std::string date = DateText(rng);
  std::string hospital = Pick(rng, kHospitals);
  std::string city = Pick(rng, kCities);
  std::string phone = PhoneText(rng);
  std::string mrn = std::to_string(rng.Between(1000000, 9999999));
  std::string complaint = Pick(rng, kComplaints);

  d.note = "Chief Complaint: " + complaint +
           ". History Of Present Illness: " + first + " " + last + " is a " +
           age + "-year-old patient from " + city + " who presented to " +
           hospital + " on " + date + " with " + complaint +
           ". Patient was evaluated by Dr. " + doctor +
           " in the emergency department. MRN: " + mrn +
           ". Vital signs were stable and labs were drawn. Plan: admit for "
           "observation and follow up with primary care. Contact number on "
           "file is " + phone + ".";
  d.phi.Add(EntityType::kPerson, first + " " + last);
  d.phi.Add(EntityType::kPerson, doctor);
  d.phi.Add(EntityType::kLocation, city);
  d.phi.Add(EntityType::kOrganization, hospital);
  d.phi.Add(EntityType::kAge, age);
  d.phi.Add(EntityType::kPhoneNumber, phone);
  d.phi.Add(EntityType::kDateTime, date);
  d.phi.Add(EntityType::kId, mrn);
  return d;
}

Draft StructuredNote(Rng& rng, std::string_view user) {
  Draft d;
  std::string name = QuotedField(user, "name");
  std::string phone = QuotedField(user, "phone");
  std::string address = QuotedField(user, "address");
  std::string age = QuotedField(user, "age");
  std::string gender = QuotedField(user, "gender");
  std::string admitted = QuotedField(user, "hospitaladmittime");
  std::string diagnosis = QuotedField(user, "diagnosisname");
  if (name.empty()) name = Pick(rng, kFirst) + " " + Pick(rng, kLast);
  if (diagnosis.empty()) diagnosis = "an acute illness";
  std::string doctor = Pick(rng, kLast);
  std::string relative = Pick(rng, kFirst) + " " +
                         name.substr(name.find(' ') == std::string::npos
                                         ? 0
                                         : name.find(' ') + 1);
  std::string email = text::AsciiLower(name);
  for (char& c : email) {
    if (c == ' ') c = '.';
  }
  email += "@" + Pick(rng, kDomains);

  d.note = "Patient Name: " + name + ". ";
  if (!age.empty()) {
    d.note += "The patient is a " + age + " y.o. " +
              (gender.empty() ? std::string("patient") : gender) + ". ";
  }
  if (!admitted.empty()) d.note += "Admitted on " + admitted + ". ";
  d.note += "Home address: " + address + ". Phone: " + phone +
            ". Email: " + email + ". The patient was treated for " + diagnosis +
            " under the care of Dr. " + doctor +
            ". Emergency contact is " + relative +
            " (spouse). Discharge planning was discussed with the family.";
  d.phi.Add(EntityType::kPerson, name);
  d.phi.Add(EntityType::kPerson, doctor);
  d.phi.Add(EntityType::kPerson, relative);
  if (!age.empty()) d.phi.Add(EntityType::kAge, age);
  if (!admitted.empty()) d.phi.Add(EntityType::kDateTime, admitted);
  if (!address.empty()) d.phi.Add(EntityType::kLocation, address);
  if (!phone.empty()) d.phi.Add(EntityType::kPhoneNumber, phone);
  d.phi.Add(EntityType::kEmail, email);
  return d;
}

}  // namespace

SyntheticTransport::SyntheticTransport(Ruleset rules)
    : rules_(std::move(rules)) {}

std::string SyntheticTransport::Complete(const ChatRequest& request) {
  ++calls_;
  if (request.system == prompts::kTaskSystem) {
    std::string_view note = request.user;
    if (note.substr(0, prompts::kTaskUserPrefix.size()) ==
        prompts::kTaskUserPrefix) {
      note.remove_prefix(prompts::kTaskUserPrefix.size());
    }
    return SerializePhiDictionary(TagText(note, rules_));
  }
  Rng rng(RequestSeed(request));
  if (request.system == prompts::kSpiSystem) {
    return Reply(StructuredNote(rng, request.user));
  }
  return Reply(ExampleGuidedNote(rng));
}

}  // namespace lppa
