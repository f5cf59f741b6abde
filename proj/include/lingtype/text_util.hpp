// Copyright 2026 The lingtype Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINGTYPE_TEXT_UTIL_HPP_
#define LINGTYPE_TEXT_UTIL_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lingtype {

/// Decodes the UTF-8 sequence starting at text[pos]; advances pos past it.
/// Malformed bytes decode as U+FFFD and advance by one byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

/// ASCII lowering plus the Latin-1 supplement block (À-Þ → à-þ), which covers
/// the accented forms of the harness languages (é, í, ü, ...).
std::string fold_case(std::string_view text);

/// Collapses every whitespace run to a single space and trims the ends.
std::string collapse_whitespace(std::string_view text);

std::string trim(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

/// Whitespace-delimited fields, empty fields dropped.
std::vector<std::string> split_whitespace(std::string_view text);

bool is_cjk_char(char32_t cp);        // ideographs and kana
bool is_kana(char32_t cp);
bool is_cjk_punct(char32_t cp);       // CJK symbol/punctuation and fullwidth blocks
bool contains_cjk(std::string_view text);
bool contains_kana(std::string_view text);

std::string read_file(const std::string& path);          // throws ParseError
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace lingtype

#endif  // LINGTYPE_TEXT_UTIL_HPP_
