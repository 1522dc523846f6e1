// Copyright 2026 asrnoise Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "asrnoise/corpus.hpp"
#include "asrnoise/error.hpp"
#include "asrnoise/rng.hpp"
#include "asrnoise/unicode.hpp"

namespace asrnoise {

// Reserved syllables. They annotate non-CJK tokens, dictionary gaps and the
// substitution placeholder; they never form homophone groups.
inline constexpr std::string_view kNaSyllable = "<na>";
inline constexpr std::string_view kUnkSyllable = "<unk>";
inline constexpr std::string_view kSubSyllable = "<sub>";
inline constexpr std::string_view kDefaultPlaceholder = "<SUB>";

// Toneless ASCII form of one Pinyin scalar: 0 means drop (tone digits,
// combining marks), -1 means the scalar cannot appear in Pinyin.
inline int toneless_char(char32_t c) {
  if (c >= U'a' && c <= U'z') return int(c);
  if (c >= U'A' && c <= U'Z') return int(c - U'A' + U'a');
  if (c >= U'0' && c <= U'9') return 0;
  if (c >= 0x0300 && c <= 0x036F) return 0;  // combining diacritics
  switch (c) {
    case 0x0101: case 0x00E1: case 0x01CE: case 0x00E0:  // a tones
      return 'a';
    case 0x0113: case 0x00E9: case 0x011B: case 0x00E8: case 0x00EA:  // e, ê
      return 'e';
    case 0x012B: case 0x00ED: case 0x01D0: case 0x00EC:  // i tones
      return 'i';
    case 0x014D: case 0x00F3: case 0x01D2: case 0x00F2:  // o tones
      return 'o';
    case 0x016B: case 0x00FA: case 0x01D4: case 0x00F9:  // u tones
      return 'u';
    case 0x01D6: case 0x01D8: case 0x01DA: case 0x01DC: case 0x00FC:  // ü -> v
      return 'v';
    case 0x0144: case 0x0148: case 0x01F9:  // syllabic n
      return 'n';
    case 0x1E3F:  // syllabic m
      return 'm';
    default:
      return -1;
  }
}

// Lowercase toneless ASCII form of a syllable; tone digits and marks are
// removed ("pīn", "pin1" -> "pin"; "lǜ" -> "lv").
inline std::string strip_tones(std::string_view syllable) {
  std::string out;
  out.reserve(syllable.size());
  size_t offset = 0;
  while (offset < syllable.size()) {
    const size_t at = offset;
    const char32_t c = decode_scalar(syllable, offset);
    const int mapped = toneless_char(c);
    if (mapped < 0)
      throw data_error("unsupported scalar U+" + std::to_string(uint32_t(c)) +
                       " in Pinyin syllable at byte offset " +
                       std::to_string(at));
    if (mapped > 0) out.push_back(char(mapped));
  }
  return out;
}

// Character -> canonical toneless syllable. Polyphones keep the first
// syllable listed on their row; later duplicate rows win and are counted.
class PinyinDictionary {
 public:
  // Row format: char<TAB>syllable[,syllable...]. Blank lines are skipped.
  static PinyinDictionary load(const std::filesystem::path& path) {
    LineReader in(path);
    PinyinDictionary dict;
    std::string line;
    auto fail = [&](const std::string& what) {
      return data_error(in.path() + " line " +
                        std::to_string(in.line_count()) + ": " + what);
    };
    while (in.next(line)) {
      if (line.empty()) continue;
      const size_t tab = line.find('\t');
      if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
        throw fail("expected char<TAB>syllables");
      const std::string_view key(line.data(), tab);
      size_t offset = 0;
      char32_t c = 0;
      try {
        c = decode_scalar(key, offset);
      } catch (const Error& e) {
        throw fail(e.what());
      }
      if (offset != key.size()) throw fail("key must be a single character");
      std::string_view rest(line.data() + tab + 1, line.size() - tab - 1);
      const size_t comma = rest.find(',');
      const std::string_view first =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      std::string syllable;
      try {
        syllable = strip_tones(first);
      } catch (const Error& e) {
        throw fail(e.what());
      }
      if (syllable.empty()) throw fail("empty syllable");
      dict.add(c, std::move(syllable));
    }
    return dict;
  }

  // Last entry wins; replaced entries bump the duplicate counter.
  void add(char32_t c, std::string syllable) {
    auto [it, inserted] = map_.try_emplace(c, std::move(syllable));
    if (!inserted) {
      ++duplicate_rows_;
      it->second = std::move(syllable);
    }
  }

  const std::string* find(char32_t c) const {
    const auto it = map_.find(c);
    return it == map_.end() ? nullptr : &it->second;
  }

  size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  uint64_t duplicate_rows() const { return duplicate_rows_; }

  const std::unordered_map<char32_t, std::string>& entries() const {
    return map_;
  }

 private:
  std::unordered_map<char32_t, std::string> map_;
  uint64_t duplicate_rows_ = 0;
};

// Syllable annotation, one entry per token: dictionary syllable for known
// CJK, "<unk>" for CJK without an entry, "<na>" for everything else.
inline std::vector<std::string> to_pinyin(const SentenceTokens& sentence,
                                          const PinyinDictionary& dict) {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) {
    if (t.kind != TokenKind::Cjk) {
      out.emplace_back(kNaSyllable);
      continue;
    }
    const std::string* syllable = dict.find(t.scalar);
    out.emplace_back(syllable ? std::string_view(*syllable) : kUnkSyllable);
  }
  return out;
}

// One pronunciation class: every vocabulary character with this canonical
// syllable, ordered by descending corpus count then code point.
struct HomophoneGroup {
  std::string syllable;
  std::vector<char32_t> chars;
  std::vector<uint64_t> counts;
  WeightedTable weights;
};

class HomophoneTable {
 public:
  static HomophoneTable build(const Vocabulary& vocab,
                              const FrequencyTable& freq,
                              const PinyinDictionary& dict) {
    // std::map keeps group order deterministic (by syllable).
    std::map<std::string, std::vector<char32_t>> by_syllable;
    HomophoneTable table;
    for (char32_t c : vocab.chars()) {
      const std::string* syllable = dict.find(c);
      if (!syllable) {
        ++table.missing_dictionary_entries_;
        continue;
      }
      by_syllable[*syllable].push_back(c);
    }
    table.groups_.reserve(by_syllable.size());
    for (auto& [syllable, chars] : by_syllable) {
      HomophoneGroup group;
      group.syllable = syllable;
      std::sort(chars.begin(), chars.end(), [&](char32_t a, char32_t b) {
        const uint64_t ca = freq.count(a), cb = freq.count(b);
        if (ca != cb) return ca > cb;
        return a < b;
      });
      group.chars = std::move(chars);
      group.counts.reserve(group.chars.size());
      for (char32_t c : group.chars) group.counts.push_back(freq.count(c));
      group.weights = WeightedTable(group.counts);
      for (char32_t c : group.chars)
        table.group_index_.emplace(c, uint32_t(table.groups_.size()));
      table.groups_.push_back(std::move(group));
    }
    return table;
  }

  const HomophoneGroup* group_of(char32_t c) const {
    const auto it = group_index_.find(c);
    return it == group_index_.end() ? nullptr : &groups_[it->second];
  }

  // The group of c minus c itself; empty for unknown or singleton
  // characters.
  std::vector<std::pair<char32_t, uint64_t>> homophones_of(char32_t c) const {
    std::vector<std::pair<char32_t, uint64_t>> out;
    const HomophoneGroup* group = group_of(c);
    if (!group) return out;
    for (size_t i = 0; i < group->chars.size(); ++i)
      if (group->chars[i] != c)
        out.emplace_back(group->chars[i], group->counts[i]);
    return out;
  }

  // True when c has at least one alternative with the same pronunciation.
  bool has_alternative(char32_t c) const {
    const HomophoneGroup* group = group_of(c);
    return group != nullptr && group->chars.size() > 1;
  }

  const std::vector<HomophoneGroup>& groups() const { return groups_; }
  size_t group_count() const { return groups_.size(); }
  size_t char_count() const { return group_index_.size(); }
  bool empty() const { return groups_.empty(); }
  uint64_t missing_dictionary_entries() const {
    return missing_dictionary_entries_;
  }

 private:
  std::vector<HomophoneGroup> groups_;
  std::unordered_map<char32_t, uint32_t> group_index_;
  uint64_t missing_dictionary_entries_ = 0;
};

// Vocabulary characters lacking a dictionary entry, `char<TAB>count`,
// canonical order.
inline void write_coverage_report(const CorpusStats& stats,
                                  const PinyinDictionary& dict,
                                  std::ostream& out) {
  for (const auto& [c, n] : stats.freq.sorted_entries())
    if (!dict.find(c)) out << encode_utf8(c) << '\t' << n << '\n';
}

}  // namespace asrnoise
