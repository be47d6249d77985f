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

#ifndef LPPA_ENTITY_TYPE_H_
#define LPPA_ENTITY_TYPE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace lppa {

// The closed set of PHI categories. Enumerator order is the canonical order
// used for serialization, prompts and reports.
enum class EntityType : int {
  kPerson = 0,
  kLocation,
  kOrganization,
  kAge,
  kPhoneNumber,
  kEmail,
  kDateTime,
  kZip,
  kProfession,
  kUsername,
  kId,
  kUrl,
};

inline constexpr std::size_t kNumEntityTypes = 12;

inline constexpr std::array<EntityType, kNumEntityTypes> kAllEntityTypes = {
    EntityType::kPerson,      EntityType::kLocation, EntityType::kOrganization,
    EntityType::kAge,         EntityType::kPhoneNumber, EntityType::kEmail,
    EntityType::kDateTime,    EntityType::kZip,      EntityType::kProfession,
    EntityType::kUsername,    EntityType::kId,       EntityType::kUrl,
};

// Wire name, e.g. "PHONE_NUMBER".
std::string_view EntityTypeName(EntityType type);

// Exact, case-sensitive lookup of a wire name.
std::optional<EntityType> EntityTypeFromName(std::string_view name);

constexpr std::size_t Index(EntityType type) {
  return static_cast<std::size_t>(type);
}

}  // namespace lppa

#endif  // LPPA_ENTITY_TYPE_H_
