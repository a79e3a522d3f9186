#include "clime/util/text.hpp"

#include <cctype>
#include <cstdio>

namespace clime::util {

namespace {

bool is_word_byte(unsigned char c) {
    return std::isalnum(c) != 0 || c == '\'' || c == '-' || c >= 0x80;
}

}  // namespace

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string_view trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < text.size()) {
        if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && is_word_byte(static_cast<unsigned char>(text[j]))) ++j;
        tokens.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

bool contains_word(std::string_view text, std::string_view word) {
    if (word.empty()) return false;
    const std::string haystack = ascii_lower(text);
    const std::string needle = ascii_lower(word);
    size_t pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        const bool left_ok =
            pos == 0 || !is_word_byte(static_cast<unsigned char>(haystack[pos - 1]));
        const size_t end = pos + needle.size();
        const bool right_ok =
            end >= haystack.size() || !is_word_byte(static_cast<unsigned char>(haystack[end]));
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

}  // namespace clime::util
