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

#include "lingtype/language.hpp"

#include "lingtype/errors.hpp"
#include "lingtype/text_util.hpp"

namespace lingtype {

namespace {

struct LanguageInfo {
  std::string_view code;
  std::string_view display_name;
  ScriptClass script;
};

constexpr std::array<LanguageInfo, 6> kInfo = {{
    {"en", "English", ScriptClass::kSpaceDelimited},
    {"de", "German", ScriptClass::kSpaceDelimited},
    {"fr", "French", ScriptClass::kSpaceDelimited},
    {"zh", "Chinese", ScriptClass::kCjk},
    {"ja", "Japanese", ScriptClass::kCjk},
    {"es", "Spanish", ScriptClass::kSpaceDelimited},
}};

}  // namespace

std::string_view lang_code(Lang lang) {
  return kInfo[static_cast<std::size_t>(lang)].code;
}

std::string_view lang_display_name(Lang lang) {
  return kInfo[static_cast<std::size_t>(lang)].display_name;
}

ScriptClass lang_script(Lang lang) {
  return kInfo[static_cast<std::size_t>(lang)].script;
}

Lang parse_lang(std::string_view code) {
  for (std::size_t i = 0; i < kInfo.size(); ++i) {
    if (kInfo[i].code == code) return static_cast<Lang>(i);
  }
  throw UnknownLanguage("unknown language code: '" + std::string(code) + "'");
}

std::vector<Lang> parse_lang_list(std::string_view csv) {
  std::vector<Lang> out;
  for (const std::string& part : split(csv, ',')) {
    const std::string code = trim(part);
    if (code.empty()) continue;
    out.push_back(parse_lang(code));
  }
  return out;
}

}  // namespace lingtype
