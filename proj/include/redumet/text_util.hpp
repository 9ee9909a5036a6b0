// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace redumet {

// Heterogeneous hashing so std::string containers accept string_view lookups.
struct TransparentStringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

using StringSet =
    std::unordered_set<std::string, TransparentStringHash, std::equal_to<>>;

template <typename V>
using StringMap =
    std::unordered_map<std::string, V, TransparentStringHash, std::equal_to<>>;

// ASCII-only whitespace test; bytes >= 0x80 are never separators, so UTF-8
// multibyte sequences pass through untouched.
inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

// Lowercases A-Z only. Case folding beyond ASCII would need a Unicode
// tailoring table; BPE vocabularies in this pipeline are ASCII or CJK.
std::string ascii_lower(std::string_view s);

// Canonical form used for all token matching: the raw surface, or its
// ASCII-lowercased form when lowercase matching is enabled.
inline std::string match_key(std::string_view surface, bool lowercase) {
  return lowercase ? ascii_lower(surface) : std::string(surface);
}

// Maximal runs of non-whitespace bytes, in order.
std::vector<std::string_view> split_whitespace(std::string_view line);

// True if the UTF-8 string contains at least one codepoint from the CJK
// blocks (ideographs, kana, hangul, CJK punctuation, fullwidth forms).
bool contains_cjk(std::string_view s);

// Fixed 64-bit mixer used to derive independent per-item seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace redumet
