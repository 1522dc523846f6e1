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
#include <string>
#include <string_view>
#include <vector>

#include "asrnoise/error.hpp"

namespace asrnoise {

// CJK Unified Ideographs plus Extension A. Latin, digits and punctuation
// (including the CJK punctuation block U+3000-303F) are all non-CJK here:
// only Chinese characters receive noise.
inline bool is_cjk(char32_t c) {
  return (c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF);
}

// Token separators are ASCII whitespace. U+3000 and friends count as
// ordinary non-CJK content and survive inside a token.
inline bool is_separator(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v';
}

// Decodes one scalar starting at `offset` and advances it. Rejects bad
// lead/continuation bytes, overlong forms, surrogates and out-of-range
// values; the thrown message names the byte offset of the bad sequence.
inline char32_t decode_scalar(std::string_view s, size_t& offset) {
  const size_t start = offset;
  auto fail = [&](const char* what) {
    return data_error(std::string("invalid UTF-8 (") + what +
                      ") at byte offset " + std::to_string(start));
  };
  auto continuation = [&](size_t i) -> uint32_t {
    if (i >= s.size()) throw fail("truncated sequence");
    const uint8_t b = static_cast<uint8_t>(s[i]);
    if ((b & 0xC0) != 0x80) throw fail("bad continuation byte");
    return b & 0x3F;
  };

  const uint8_t b0 = static_cast<uint8_t>(s[offset]);
  if (b0 < 0x80) {
    offset += 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0) {
    const uint32_t cp = (uint32_t(b0 & 0x1F) << 6) | continuation(offset + 1);
    if (cp < 0x80) throw fail("overlong encoding");
    offset += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0) {
    const uint32_t cp = (uint32_t(b0 & 0x0F) << 12) |
                        (continuation(offset + 1) << 6) |
                        continuation(offset + 2);
    if (cp < 0x800) throw fail("overlong encoding");
    if (cp >= 0xD800 && cp <= 0xDFFF) throw fail("surrogate code point");
    offset += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0) {
    const uint32_t cp = (uint32_t(b0 & 0x07) << 18) |
                        (continuation(offset + 1) << 12) |
                        (continuation(offset + 2) << 6) |
                        continuation(offset + 3);
    if (cp < 0x10000) throw fail("overlong encoding");
    if (cp > 0x10FFFF) throw fail("code point out of range");
    offset += 4;
    return cp;
  }
  throw fail("bad lead byte");
}

inline std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  size_t offset = 0;
  while (offset < s.size()) out.push_back(decode_scalar(s, offset));
  return out;
}

inline std::string encode_utf8(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(char(c));
  } else if (c < 0x800) {
    out.push_back(char(0xC0 | (c >> 6)));
    out.push_back(char(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(char(0xE0 | (c >> 12)));
    out.push_back(char(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(char(0x80 | (c & 0x3F)));
  } else {
    out.push_back(char(0xF0 | (c >> 18)));
    out.push_back(char(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(char(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(char(0x80 | (c & 0x3F)));
  }
  return out;
}

}  // namespace asrnoise
