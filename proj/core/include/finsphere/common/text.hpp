#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace finsphere::text {

/// Fixed-point rendering with trailing zeros trimmed, at most `max_decimals`
/// fractional digits. Keeps report figures round-trippable: 4.48 -> "4.48",
/// -14.865 -> "-14.865".
std::string format_number(double value, int max_decimals = 6);

/// Fixed two-decimal rendering, used for tabular score output.
std::string format_fixed2(double value);

std::string to_lower(std::string_view s);

/// Whitespace-delimited tokens that contain at least one alphanumeric
/// character after punctuation stripping. This is the word count behind the
/// movement-summary cap.
std::size_t count_words(std::string_view s);

/// True at positions where a phrase match does not butt against an
/// alphanumeric neighbour (whole-word semantics for single- and multi-word
/// phrases alike).
bool has_word_boundaries(std::string_view haystack, std::size_t pos, std::size_t len);

struct PhraseHit {
    std::string phrase;
    std::size_t position = 0;
};

/// All case-insensitive whole-phrase occurrences of `phrase` in `haystack`.
std::vector<PhraseHit> find_phrase(std::string_view haystack, std::string_view phrase);

/// Case-insensitive whole-phrase containment.
bool contains_phrase(std::string_view haystack, std::string_view phrase);

/// Splits on sentence punctuation (.!?;) followed by whitespace, and on
/// newlines. Decimal points inside numerals do not split.
std::vector<std::string> split_sentences(std::string_view s);

/// True if the sentence carries a numeric literal (digits, optionally signed,
/// decimal or percent). Digits glued to letters ("MA5") do not count.
bool contains_numeric_literal(std::string_view sentence);

/// Standalone numeric tokens of `s`, e.g. "4.48", "-14.865", "17.65%",
/// "2024-10-16". Letter-adjacent digits are skipped.
std::vector<std::string> extract_numeric_tokens(std::string_view s);

/// Truncates to at most `max_words` words, preserving original spacing of the
/// kept prefix.
std::string truncate_words(std::string_view s, std::size_t max_words);

std::string trim(std::string_view s);

}  // namespace finsphere::text
