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

#include "lingtype/translation.hpp"

#include <cctype>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lingtype/errors.hpp"
#include "lingtype/rng.hpp"
#include "lingtype/text_util.hpp"

namespace lingtype {

using nlohmann::json;

std::string translate_text(Translator& tr, const std::string& text, Lang from,
                           Lang to) {
  if (from == to) return text;
  return tr.translate(text, from, to);
}

// ---------------------------------------------------------------------------
// Table stub

TableStubTranslator TableStubTranslator::from_file(const std::string& path) {
  TableStubTranslator t;
  std::istringstream in(read_file(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected lang-pair<TAB>source<TAB>target");
    }
    std::vector<std::string> pair = split(trim(fields[0]), '-');
    if (pair.size() != 2) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": bad language pair '" + fields[0] + "'");
    }
    t.add(parse_lang(pair[0]), parse_lang(pair[1]), fields[1], fields[2]);
  }
  return t;
}

void TableStubTranslator::add(Lang from, Lang to, const std::string& source,
                              const std::string& target) {
  tables_[{from, to}][fold_case(source)] = target;
}

void TableStubTranslator::add_bidirectional(Lang from, Lang to,
                                            const std::string& source,
                                            const std::string& target) {
  add(from, to, source, target);
  add(to, from, target, source);
}

std::optional<std::string> TableStubTranslator::lookup(
    Lang from, Lang to, const std::string& word) const {
  auto table = tables_.find({from, to});
  if (table == tables_.end()) return std::nullopt;
  auto it = table->second.find(fold_case(word));
  if (it == table->second.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_word_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0 && c != '-' &&
         c != '_' && c != '\'';
}

}  // namespace

std::string TableStubTranslator::translate(const std::string& text, Lang from,
                                           Lang to) {
  if (from == to) return text;
  calls_.fetch_add(1);
  auto table = tables_.find({from, to});
  std::string out;
  for (const std::string& token : split_whitespace(text)) {
    // Peel leading/trailing ASCII punctuation so "clue," still maps.
    std::size_t b = 0, e = token.size();
    while (b < e && is_word_punct(token[b])) ++b;
    while (e > b && is_word_punct(token[e - 1])) --e;
    const std::string core = token.substr(b, e - b);
    std::string mapped = core;
    if (table != tables_.end() && !core.empty()) {
      auto it = table->second.find(fold_case(core));
      if (it != table->second.end()) mapped = it->second;
    }
    if (!out.empty()) out.push_back(' ');
    out += token.substr(0, b) + mapped + token.substr(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Backend-driven translation

std::string BackendTranslator::translator_id() const {
  return "backend:" + backend_->model_id();
}

std::string BackendTranslator::translate(const std::string& text, Lang from,
                                         Lang to) {
  if (from == to) return text;
  if (text.empty()) return text;
  const std::string prompt =
      "Translate the following text to " + std::string(lang_display_name(to)) +
      ". Output only the translation.\n\n" + text;
  SessionHandle session("translate#" +
                        std::to_string(session_counter_.fetch_add(1)));
  try {
    return query(*backend_, session, prompt).text;
  } catch (const BackendRefusal& e) {
    throw TranslatorError(std::string("translator backend refused: ") +
                          e.what());
  }
}

// ---------------------------------------------------------------------------
// Cache

std::string translation_content_hash(const std::string& translator_id,
                                     Lang from, Lang to,
                                     const std::string& source_text) {
  std::string key = translator_id;
  key += '\x1F';
  key += lang_code(from);
  key += '\x1F';
  key += lang_code(to);
  key += '\x1F';
  key += source_text;
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(key)));
  return buf;
}

TranslationCache::TranslationCache(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<TranslationRecord> TranslationCache::lookup(
    const std::string& content_hash, const std::string& source_text) const {
  const std::string path = dir_ + "/" + content_hash + ".json";
  if (!std::filesystem::exists(path)) return std::nullopt;
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  TranslationRecord rec;
  rec.source_text = j.value("source_text", "");
  if (rec.source_text != source_text) return std::nullopt;  // hash collision
  rec.source_lang = parse_lang(j.value("source_lang", "en"));
  rec.target_lang = parse_lang(j.value("target_lang", "en"));
  rec.target_text = j.value("target_text", "");
  rec.translator_id = j.value("translator_id", "");
  rec.content_hash = content_hash;
  return rec;
}

void TranslationCache::store(const TranslationRecord& rec) const {
  json j;
  j["source_text"] = rec.source_text;
  j["source_lang"] = std::string(lang_code(rec.source_lang));
  j["target_lang"] = std::string(lang_code(rec.target_lang));
  j["target_text"] = rec.target_text;
  j["translator_id"] = rec.translator_id;
  j["content_hash"] = rec.content_hash;
  write_file_atomic(dir_ + "/" + rec.content_hash + ".json", j.dump());
}

CachingTranslator::CachingTranslator(std::shared_ptr<Translator> inner,
                                     std::string cache_dir)
    : inner_(std::move(inner)), cache_(std::move(cache_dir)) {}

std::string CachingTranslator::translator_id() const {
  return inner_->translator_id();
}

std::string CachingTranslator::translate(const std::string& text, Lang from,
                                         Lang to) {
  if (from == to) return text;
  const std::string hash =
      translation_content_hash(inner_->translator_id(), from, to, text);
  if (auto hit = cache_.lookup(hash, text)) return hit->target_text;
  TranslationRecord rec;
  rec.source_text = text;
  rec.source_lang = from;
  rec.target_lang = to;
  rec.target_text = inner_->translate(text, from, to);
  rec.translator_id = inner_->translator_id();
  rec.content_hash = hash;
  cache_.store(rec);
  return rec.target_text;
}

// ---------------------------------------------------------------------------
// Instance translation

TaskInstance translate_instance(const TaskInstance& instance, Lang target,
                                Translator& tr) {
  TaskInstance out = instance;
  if (instance.source_language == target) return out;
  out.source_language = target;
  out.input_text =
      translate_text(tr, instance.input_text, instance.source_language, target);
  for (std::size_t i = 0; i < instance.choices.size(); ++i) {
    // One call per choice so the translator cannot merge or renumber them.
    out.choices[i] = translate_text(tr, instance.choices[i],
                                    instance.source_language, target);
  }
  if (instance.task.translatability == Translatability::kTE) {
    // Labels and integers are translation fixed points; the normalized gold
    // carries over unchanged.
    if (auto gold = instance.gold(instance.source_language)) {
      out.gold_by_language[target] = *gold;
    }
  }
  // TV instances keep only golds that were explicitly provided.
  return out;
}

std::string back_translate(const std::string& text, Lang from, Lang to,
                           Translator& tr) {
  if (text.empty()) throw OutOfRange("back_translate: text must be nonempty");
  return translate_text(tr, text, to, from);
}

}  // namespace lingtype
