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

#ifndef LINGTYPE_LANGUAGE_HPP_
#define LINGTYPE_LANGUAGE_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace lingtype {

/// Closed language set. Order matches the report column order.
enum class Lang { kEn, kDe, kFr, kZh, kJa, kEs };

enum class ScriptClass { kSpaceDelimited, kCjk };

inline constexpr std::array<Lang, 6> kAllLanguages = {
    Lang::kEn, Lang::kDe, Lang::kFr, Lang::kZh, Lang::kJa, Lang::kEs};

std::string_view lang_code(Lang lang);       // "en", "de", ...
std::string_view lang_display_name(Lang lang);
ScriptClass lang_script(Lang lang);

/// Throws UnknownLanguage for codes outside the closed set; loading data with
/// an unknown code must fail loudly, never fall back to a default.
Lang parse_lang(std::string_view code);

std::vector<Lang> parse_lang_list(std::string_view csv);

}  // namespace lingtype

#endif  // LINGTYPE_LANGUAGE_HPP_
