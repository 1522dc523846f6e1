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

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "asrnoise/error.hpp"
#include "asrnoise/parallel.hpp"
#include "asrnoise/unicode.hpp"

namespace asrnoise {

enum class TokenKind { Cjk, Other };

// One character-level token. Cjk tokens hold exactly one ideograph; Other
// tokens hold a maximal run of non-CJK, non-whitespace scalars ("90%",
// "<SUB>"). begin/end are byte offsets into the source line so replacements
// can be spliced back without touching surrounding bytes.
struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Other;
  char32_t scalar = 0;  // the ideograph for Cjk tokens, 0 otherwise
  size_t begin = 0;
  size_t end = 0;
};

struct SentenceTokens {
  uint64_t id = 0;
  std::string text;  // the raw line
  std::vector<Token> tokens;
};

// The target side is opaque bytes: never tokenized, never modified.
struct SentencePair {
  SentenceTokens src;
  std::string tgt;
};

// Character-level tokenization. Each CJK scalar becomes its own token;
// maximal runs of other non-whitespace scalars become single Other tokens;
// ASCII whitespace separates tokens and is not part of any surface.
inline SentenceTokens tokenize(std::string_view line, uint64_t id = 0) {
  SentenceTokens out;
  out.id = id;
  out.text.assign(line);

  size_t offset = 0;
  size_t run_begin = 0;
  bool in_run = false;
  auto flush_run = [&](size_t end) {
    if (!in_run) return;
    Token t;
    t.surface.assign(line.substr(run_begin, end - run_begin));
    t.kind = TokenKind::Other;
    t.begin = run_begin;
    t.end = end;
    out.tokens.push_back(std::move(t));
    in_run = false;
  };

  while (offset < line.size()) {
    const size_t begin = offset;
    const char32_t c = decode_scalar(line, offset);
    if (is_separator(c)) {
      flush_run(begin);
      continue;
    }
    if (is_cjk(c)) {
      flush_run(begin);
      Token t;
      t.surface.assign(line.substr(begin, offset - begin));
      t.kind = TokenKind::Cjk;
      t.scalar = c;
      t.begin = begin;
      t.end = offset;
      out.tokens.push_back(std::move(t));
      continue;
    }
    if (!in_run) {
      in_run = true;
      run_begin = begin;
    }
  }
  flush_run(line.size());
  return out;
}

// Rebuilds a line from its sentence with the given tokens replaced.
// Replacements must be sorted by position; untouched bytes (including
// whitespace) are copied verbatim, so an empty replacement list returns the
// original line bit-exactly.
inline std::string splice_tokens(
    const SentenceTokens& sentence,
    const std::vector<std::pair<size_t, std::string>>& replacements) {
  std::string out;
  out.reserve(sentence.text.size());
  size_t cursor = 0;
  for (const auto& [position, replacement] : replacements) {
    const Token& t = sentence.tokens.at(position);
    out.append(sentence.text, cursor, t.begin - cursor);
    out.append(replacement);
    cursor = t.end;
  }
  out.append(sentence.text, cursor, std::string::npos);
  return out;
}

// Newline-delimited UTF-8 reader. Strips one trailing \r per line so CRLF
// corpora behave like LF ones.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path)
      : path_(path.string()), in_(path, std::ios::binary) {
    if (!in_) throw io_error("cannot open " + path_);
  }

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++count_;
    return true;
  }

  // Lines read so far.
  uint64_t line_count() const { return count_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ifstream in_;
  uint64_t count_ = 0;
};

// Type-erased line stream: files and in-memory vectors look the same to the
// processing drivers.
using LineSource = std::function<bool(std::string&)>;

inline LineSource file_source(LineReader& reader) {
  return [&reader](std::string& line) { return reader.next(line); };
}

inline LineSource vector_source(std::vector<std::string> lines) {
  return [lines = std::move(lines), i = size_t{0}](std::string& line) mutable {
    if (i >= lines.size()) return false;
    line = lines[i++];
    return true;
  };
}

// Streams line-aligned sentence pairs from two files. A length mismatch is
// reported with both totals once one side runs out.
class ParallelCorpusReader {
 public:
  ParallelCorpusReader(const std::filesystem::path& src,
                       const std::filesystem::path& tgt)
      : src_(src), tgt_(tgt) {}

  bool next(SentencePair& pair) {
    std::string src_line, tgt_line;
    const bool has_src = src_.next(src_line);
    const bool has_tgt = tgt_.next(tgt_line);
    if (has_src != has_tgt) {
      std::string sink;
      while (src_.next(sink)) {
      }
      while (tgt_.next(sink)) {
      }
      throw data_error("line count mismatch: " + src_.path() + " has " +
                       std::to_string(src_.line_count()) + " lines, " +
                       tgt_.path() + " has " +
                       std::to_string(tgt_.line_count()));
    }
    if (!has_src) return false;
    try {
      pair.src = tokenize(src_line, next_id_);
    } catch (const Error& e) {
      throw Error(e.kind(), src_.path() + " line " +
                                std::to_string(next_id_ + 1) + ": " + e.what());
    }
    pair.tgt = std::move(tgt_line);
    ++next_id_;
    return true;
  }

 private:
  LineReader src_;
  LineReader tgt_;
  uint64_t next_id_ = 0;
};

// Corpus character counts; the unigram weights behind frequency-based and
// homophone-based noise.
class FrequencyTable {
 public:
  void add(char32_t c, uint64_t n = 1) {
    counts_[c] += n;
    total_ += n;
  }

  uint64_t count(char32_t c) const {
    const auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
  }

  uint64_t total() const { return total_; }
  size_t distinct() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  void merge(const FrequencyTable& other) {
    for (const auto& [c, n] : other.counts_) counts_[c] += n;
    total_ += other.total_;
  }

  const std::unordered_map<char32_t, uint64_t>& counts() const {
    return counts_;
  }

  // Canonical order: descending count, then ascending code point.
  std::vector<std::pair<char32_t, uint64_t>> sorted_entries() const {
    std::vector<std::pair<char32_t, uint64_t>> entries(counts_.begin(),
                                                       counts_.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    return entries;
  }

 private:
  std::unordered_map<char32_t, uint64_t> counts_;
  uint64_t total_ = 0;
};

// Distinct source characters with dense ids. Id order is the canonical
// frequency order, so it is identical however the counts were sharded.
class Vocabulary {
 public:
  Vocabulary() = default;

  static Vocabulary from_frequency(const FrequencyTable& freq) {
    Vocabulary v;
    const auto entries = freq.sorted_entries();
    v.chars_.reserve(entries.size());
    for (const auto& [c, n] : entries) {
      v.ids_.emplace(c, uint32_t(v.chars_.size()));
      v.chars_.push_back(c);
    }
    return v;
  }

  bool contains(char32_t c) const { return ids_.find(c) != ids_.end(); }
  uint32_t id(char32_t c) const { return ids_.at(c); }
  char32_t at(size_t id) const { return chars_.at(id); }
  size_t size() const { return chars_.size(); }
  bool empty() const { return chars_.empty(); }
  const std::vector<char32_t>& chars() const { return chars_; }

 private:
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, uint32_t> ids_;
};

struct CorpusStats {
  FrequencyTable freq;
  Vocabulary vocab;
};

inline void count_sentence(const SentenceTokens& sentence,
                           FrequencyTable& freq) {
  for (const Token& t : sentence.tokens)
    if (t.kind == TokenKind::Cjk) freq.add(t.scalar);
}

// Streaming count pass. Shards within a batch are merged associatively, so
// the tables are identical for any worker count.
inline CorpusStats build_statistics(LineSource source, unsigned workers = 1) {
  FrequencyTable freq;
  std::vector<std::string> batch;
  batch.reserve(kBatchLines);
  std::string line;
  uint64_t base = 0;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < kBatchLines && (more = source(line)))
      batch.push_back(std::move(line));
    if (batch.empty()) break;
    std::vector<FrequencyTable> locals(std::max(1u, workers));
    parallel_slices(batch.size(), workers,
                    [&](size_t begin, size_t end, unsigned slice) {
                      for (size_t i = begin; i < end; ++i) {
                        try {
                          count_sentence(tokenize(batch[i], base + i),
                                         locals[slice]);
                        } catch (const Error& e) {
                          throw Error(e.kind(),
                                      "line " + std::to_string(base + i + 1) +
                                          ": " + e.what());
                        }
                      }
                    });
    for (const FrequencyTable& local : locals) freq.merge(local);
    base += batch.size();
  }
  CorpusStats stats{std::move(freq), {}};
  stats.vocab = Vocabulary::from_frequency(stats.freq);
  return stats;
}

// `char<TAB>count` in canonical order.
inline void write_stats_tsv(const CorpusStats& stats, std::ostream& out) {
  for (const auto& [c, n] : stats.freq.sorted_entries())
    out << encode_utf8(c) << '\t' << n << '\n';
}

inline CorpusStats load_stats_tsv(const std::filesystem::path& path) {
  LineReader in(path);
  FrequencyTable freq;
  std::string line;
  auto fail = [&](const std::string& what) {
    return data_error(in.path() + " line " + std::to_string(in.line_count()) +
                      ": " + what);
  };
  while (in.next(line)) {
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
      throw fail("expected char<TAB>count");
    const std::string_view key(line.data(), tab);
    size_t offset = 0;
    const char32_t c = decode_scalar(key, offset);
    if (offset != key.size()) throw fail("key must be a single character");
    uint64_t n = 0;
    const char* first = line.data() + tab + 1;
    const char* last = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last) throw fail("bad count field");
    freq.add(c, n);
  }
  CorpusStats stats{std::move(freq), {}};
  stats.vocab = Vocabulary::from_frequency(stats.freq);
  return stats;
}

}  // namespace asrnoise
