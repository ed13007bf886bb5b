// Copyright 2026 The zsr Authors.
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

#include <string>
#include <string_view>
#include <vector>

namespace zsr {

/// Canonical form used for every name comparison: NFKC, lowercase, runs of
/// Unicode whitespace collapsed to one ASCII space, trimmed. Total and
/// idempotent. Ill-formed UTF-8 sequences become U+FFFD.
std::string normalize_name(std::string_view raw);

/// Appends the word tokens of already-normalized text to `out` as
/// " tok1 tok2 ... tokN " (leading and trailing space included; a text
/// without word characters yields nothing). A word character is a Unicode
/// letter, digit or combining mark; everything else separates tokens.
///
/// Two token sequences are contiguous in each other exactly when their
/// padded forms are substrings of each other, which is what lets a plain
/// substring automaton implement word-boundary matching.
void append_token_form(std::string_view normalized, std::string& out);

std::string token_form(std::string_view normalized);

/// Equivalent to append_token_form(normalize_name(raw), out), with a
/// non-allocating path for pure-ASCII input.
void append_normalized_token_form(std::string_view raw, std::string& out);

bool is_valid_utf8(std::string_view bytes) noexcept;

/// Splits on every occurrence of `sep`; "a\t\tb" yields three fields.
std::vector<std::string_view> split(std::string_view line, char sep);

std::string_view trim(std::string_view s) noexcept;

/// Drops one trailing '\r' (CRLF input).
std::string_view chomp(std::string_view line) noexcept;

}  // namespace zsr
