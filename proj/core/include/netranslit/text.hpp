// core/include/netranslit/text.hpp

// Copyright 2026 The netranslit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NETRANSLIT_TEXT_HPP_
#define NETRANSLIT_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace netranslit {
namespace text {

// Canonical composition (NFC) of a UTF-8 string. Target-script text is
// normalized at every ingestion boundary so byte equality coincides with
// canonical equality.
std::string nfc(std::string_view utf8);

bool is_ascii(std::string_view s);

// ASCII-only case folding; bytes outside A-Z pass through.
std::string ascii_lower(std::string_view s);

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }

// Trims outer whitespace and collapses internal runs to single spaces.
std::string collapse_spaces(std::string_view s);

std::string trim(std::string_view s);

// Whitespace-separated fields, empty fields dropped.
std::vector<std::string> split_whitespace(std::string_view s);

// Splits on a separator byte, keeping empty fields.
std::vector<std::string> split(std::string_view s, char sep);

// Splits into lines on '\n', dropping a trailing '\r' on each line. A final
// unterminated line is kept; a trailing newline does not create an empty one.
std::vector<std::string> split_lines(std::string_view s);

}  // namespace text
}  // namespace netranslit

#endif  // NETRANSLIT_TEXT_HPP_
