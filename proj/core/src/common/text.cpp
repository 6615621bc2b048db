#include "finsphere/common/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace finsphere::text {
namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string format_number(double value, int max_decimals) {
    if (!std::isfinite(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", max_decimals, value);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

std::string format_fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](char c) { return lower(c); });
    return out;
}

std::size_t count_words(std::string_view s) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const std::size_t start = i;
        bool has_alnum = false;
        while (i < s.size() && !is_space(s[i])) {
            has_alnum = has_alnum || is_alnum(s[i]);
            ++i;
        }
        if (i > start && has_alnum) ++count;
    }
    return count;
}

bool has_word_boundaries(std::string_view haystack, std::size_t pos, std::size_t len) {
    if (pos > 0 && is_alnum(haystack[pos - 1])) return false;
    const std::size_t end = pos + len;
    if (end < haystack.size() && is_alnum(haystack[end])) return false;
    return true;
}

std::vector<PhraseHit> find_phrase(std::string_view haystack, std::string_view phrase) {
    std::vector<PhraseHit> hits;
    if (phrase.empty() || haystack.size() < phrase.size()) return hits;
    const std::string h = to_lower(haystack);
    const std::string p = to_lower(phrase);
    std::size_t pos = 0;
    while ((pos = h.find(p, pos)) != std::string::npos) {
        if (has_word_boundaries(h, pos, p.size()))
            hits.push_back({std::string(phrase), pos});
        pos += 1;
    }
    return hits;
}

bool contains_phrase(std::string_view haystack, std::string_view phrase) {
    return !find_phrase(haystack, phrase).empty();
}

std::vector<std::string> split_sentences(std::string_view s) {
    std::vector<std::string> out;
    std::string current;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '\n') {
            if (!current.empty()) out.push_back(current);
            current.clear();
            continue;
        }
        current.push_back(c);
        if ((c == '.' || c == '!' || c == '?' || c == ';')) {
            // A period between digits is a decimal point, not a terminator.
            const bool decimal = c == '.' && i > 0 && i + 1 < s.size() &&
                                 is_digit(s[i - 1]) && is_digit(s[i + 1]);
            const bool at_end = i + 1 >= s.size() || is_space(s[i + 1]);
            if (!decimal && at_end) {
                out.push_back(current);
                current.clear();
            }
        }
    }
    if (!current.empty()) out.push_back(current);
    for (auto& sentence : out) sentence = trim(sentence);
    std::erase_if(out, [](const std::string& t) { return t.empty(); });
    return out;
}

bool contains_numeric_literal(std::string_view sentence) {
    return !extract_numeric_tokens(sentence).empty();
}

std::vector<std::string> extract_numeric_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        if (!is_digit(s[i])) {
            ++i;
            continue;
        }
        // Reject digits glued to letters (MA5, RSI6, Q2).
        std::size_t start = i;
        if (start > 0 && (s[start - 1] == '.' || s[start - 1] == ',') && start > 1 &&
            is_digit(s[start - 2])) {
            ++i;
            continue;
        }
        bool leading_sign = false;
        if (start > 0 && (s[start - 1] == '-' || s[start - 1] == '+')) {
            const bool sign_bounded = start < 2 || !is_alnum(s[start - 2]);
            if (sign_bounded) {
                leading_sign = true;
            }
        }
        const std::size_t bound_check = leading_sign ? start - 1 : start;
        if (bound_check > 0 && is_alnum(s[bound_check - 1])) {
            while (i < s.size() && is_digit(s[i])) ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size()) {
            const char c = s[j];
            if (is_digit(c)) {
                ++j;
            } else if ((c == '.' || c == ',') && j + 1 < s.size() && is_digit(s[j + 1])) {
                ++j;
            } else if (c == '-' && j + 1 < s.size() && is_digit(s[j + 1]) && j > start &&
                       is_digit(s[j - 1])) {
                ++j;  // date-style token 2024-10-16
            } else {
                break;
            }
        }
        std::size_t end = j;
        if (end < s.size() && s[end] == '%') ++end;
        if (end < s.size() && is_alnum(s[end])) {
            // Glued to a following letter (e.g. "102nd"): keep digits only.
            tokens.emplace_back(s.substr(start, j - start));
        } else {
            std::string tok(s.substr(leading_sign ? start - 1 : start,
                                     end - (leading_sign ? start - 1 : start)));
            tokens.push_back(std::move(tok));
        }
        i = end;
    }
    return tokens;
}

std::string truncate_words(std::string_view s, std::size_t max_words) {
    std::size_t count = 0;
    std::size_t i = 0;
    std::size_t keep_end = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const std::size_t start = i;
        bool has_alnum = false;
        while (i < s.size() && !is_space(s[i])) {
            has_alnum = has_alnum || is_alnum(s[i]);
            ++i;
        }
        if (i > start && has_alnum) {
            ++count;
            if (count > max_words) break;
            keep_end = i;
        } else if (i > start) {
            keep_end = i;  // pure-punctuation token rides along
        }
    }
    if (count <= max_words) return std::string(s);
    return std::string(s.substr(0, keep_end));
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace finsphere::text
