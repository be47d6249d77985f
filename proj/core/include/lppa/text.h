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

#ifndef LPPA_TEXT_H_
#define LPPA_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

// Byte-level ASCII helpers. Bytes >= 0x80 (UTF-8 continuation and lead
// bytes) count as word characters so multibyte letters never act as
// boundaries.
namespace lppa::text {

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool IsAsciiAlnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

inline bool IsWordChar(char c) {
  return IsAsciiAlnum(c) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
}

inline bool IsAsciiPunct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u >= 0x21 && u <= 0x7e && !IsAsciiAlnum(c);
}

inline char ToLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string AsciiLower(std::string_view s);
std::string_view Trim(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// Finds `needle` in `hay` starting at `from`; npos when absent.
std::size_t FindIgnoreCase(std::string_view hay, std::string_view needle,
                           std::size_t from = 0);

// Number of UTF-8 code points (bytes that are not continuation bytes).
std::size_t CodePointCount(std::string_view s);

}  // namespace lppa::text

#endif  // LPPA_TEXT_H_
