// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/text_util.hpp"

namespace redumet {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    while (i < n && is_ascii_space(line[i])) ++i;
    std::size_t start = i;
    while (i < n && !is_ascii_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

namespace {

struct CodepointRange {
  std::uint32_t lo;
  std::uint32_t hi;
};

// Ideograph blocks plus the punctuation and width-variant blocks that CJK
// text is written with ("，" is U+FF0C, "。" is U+3002).
constexpr CodepointRange kCjkRanges[] = {
    {0x2E80, 0x303F},    // radicals, Kangxi, CJK symbols and punctuation
    {0x3040, 0x30FF},    // hiragana, katakana
    {0x3100, 0x312F},    // bopomofo
    {0x31C0, 0x31EF},    // strokes
    {0x3200, 0x4DBF},    // enclosed, compatibility, extension A
    {0x4E00, 0x9FFF},    // unified ideographs
    {0xAC00, 0xD7AF},    // hangul syllables
    {0xF900, 0xFAFF},    // compatibility ideographs
    {0xFE30, 0xFE4F},    // compatibility forms
    {0xFF00, 0xFFEF},    // halfwidth and fullwidth forms
    {0x20000, 0x2FA1F},  // extensions B..F
};

bool is_cjk_codepoint(std::uint32_t cp) {
  for (const auto& r : kCjkRanges) {
    if (cp >= r.lo && cp <= r.hi) return true;
  }
  return false;
}

}  // namespace

bool contains_cjk(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    std::uint32_t cp = 0;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      ++i;  // stray continuation or invalid byte
      continue;
    }
    if (i + len > n) break;
    bool valid = true;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        valid = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!valid) {
      ++i;
      continue;
    }
    if (is_cjk_codepoint(cp)) return true;
    i += len;
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace redumet
