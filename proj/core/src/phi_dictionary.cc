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

#include "lppa/phi_dictionary.h"

#include <optional>

#include "json.hpp"
#include "lppa/errors.h"
#include "lppa/text.h"

namespace lppa {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool IsBlank(std::string_view s) { return text::Trim(s).empty(); }

// Returns the end (exclusive) of the balanced {...} block starting at `open`,
// skipping braces inside JSON string literals.
std::optional<std::size_t> BalancedBlockEnd(std::string_view s,
                                            std::size_t open) {
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = open; i < s.size(); ++i) {
    char c = s[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i + 1;
    }
  }
  return std::nullopt;
}

std::optional<json> TryParseObject(std::string_view s) {
  json j = json::parse(s.begin(), s.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

std::string NumberText(const json& v) { return v.dump(); }

class Builder {
 public:
  explicit Builder(bool strict) : strict_(strict) {}

  void AddKey(const std::string& key, const json& value) {
    std::optional<EntityType> type = EntityTypeFromName(key);
    if (!type) {
      Reject("unknown key '" + key + "'");
      Warn("dropped unknown key '" + key + "'");
      return;
    }
    if (value.is_array()) {
      for (const json& item : value) AddItem(*type, key, item);
    } else if (value.is_string()) {
      Reject("value of '" + key + "' is not a list");
      Warn("wrapped bare string under '" + key + "'");
      AddItem(*type, key, value);
    } else if (value.is_number()) {
      Reject("value of '" + key + "' is not a list");
      Warn("wrapped bare number under '" + key + "'");
      AddItem(*type, key, value);
    } else if (value.is_null()) {
      Reject("value of '" + key + "' is null");
      Warn("treated null under '" + key + "' as empty");
    } else {
      Reject("value of '" + key + "' is not a list");
      Warn("dropped non-list value under '" + key + "'");
    }
  }

  PhiParseResult Finish() && {
    return PhiParseResult{std::move(dict_), std::move(warnings_)};
  }

  void Warn(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  void AddItem(EntityType type, const std::string& key, const json& item) {
    if (item.is_string()) {
      std::string s = item.get<std::string>();
      if (IsBlank(s)) {
        Reject("blank mention under '" + key + "'");
        Warn("dropped blank mention under '" + key + "'");
        return;
      }
      dict_.Add(type, std::move(s));
    } else if (item.is_number()) {
      Reject("non-string mention under '" + key + "'");
      Warn("coerced number " + NumberText(item) + " under '" + key + "'");
      dict_.Add(type, NumberText(item));
    } else {
      Reject("non-string mention under '" + key + "'");
      Warn("dropped non-string mention under '" + key + "'");
    }
  }

  void Reject(const std::string& why) const {
    if (strict_) throw SchemaError(why);
  }

  bool strict_;
  PhiDictionary dict_;
  std::vector<std::string> warnings_;
};

}  // namespace

void PhiDictionary::Add(EntityType type, std::string mention) {
  if (IsBlank(mention)) throw SchemaError("blank PHI mention");
  entries_[Index(type)].push_back(std::move(mention));
}

void PhiDictionary::Set(EntityType type, std::vector<std::string> mentions) {
  for (const std::string& m : mentions) {
    if (IsBlank(m)) throw SchemaError("blank PHI mention");
  }
  entries_[Index(type)] = std::move(mentions);
}

bool PhiDictionary::empty() const { return size() == 0; }

std::size_t PhiDictionary::size() const {
  std::size_t n = 0;
  for (const auto& list : entries_) n += list.size();
  return n;
}

PhiParseResult ParsePhiDictionary(std::string_view text, bool strict) {
  Builder builder(strict);
  std::optional<json> object = TryParseObject(text);
  if (!object) {
    if (strict) throw ParseError("reply is not a single JSON object");
    for (std::size_t open = text.find('{'); open != std::string_view::npos;
         open = text.find('{', open + 1)) {
      std::optional<std::size_t> end = BalancedBlockEnd(text, open);
      if (!end) break;
      object = TryParseObject(text.substr(open, *end - open));
      if (object) {
        builder.Warn("extracted JSON object from surrounding text");
        break;
      }
    }
    if (!object) throw ParseError("no JSON object found in reply");
  }
  for (const auto& [key, value] : object->items()) builder.AddKey(key, value);
  return std::move(builder).Finish();
}

std::string SerializePhiDictionary(const PhiDictionary& dict) {
  ordered_json out = ordered_json::object();
  for (EntityType t : kAllEntityTypes) {
    const auto& list = dict.mentions(t);
    if (list.empty()) continue;
    out[std::string(EntityTypeName(t))] = list;
  }
  return out.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

}  // namespace lppa
