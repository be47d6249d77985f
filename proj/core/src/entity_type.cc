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

#include "lppa/entity_type.h"

namespace lppa {
namespace {

constexpr std::array<std::string_view, kNumEntityTypes> kNames = {
    "PERSON", "LOCATION", "ORGANIZATION", "AGE",      "PHONE_NUMBER", "EMAIL",
    "DATE_TIME", "ZIP",  "PROFESSION",   "USERNAME", "ID",           "URL",
};

}  // namespace

std::string_view EntityTypeName(EntityType type) { return kNames[Index(type)]; }

std::optional<EntityType> EntityTypeFromName(std::string_view name) {
  for (EntityType t : kAllEntityTypes) {
    if (kNames[Index(t)] == name) return t;
  }
  return std::nullopt;
}

}  // namespace lppa
