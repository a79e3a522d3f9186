#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clime::util {

/// ASCII lowercase; bytes outside A-Z pass through untouched.
std::string ascii_lower(std::string_view s);

/// Strip leading/trailing ASCII whitespace.
std::string_view trim(std::string_view s);

/// Word tokens: maximal runs of alphanumeric bytes (plus apostrophe,
/// hyphen, and any non-ASCII byte). Punctuation is skipped.
std::vector<std::string> word_tokens(std::string_view text);

/// Shortest decimal text with 6 significant digits ("%.6g"). Fixed format
/// for all CSV exports so re-runs are byte-identical.
std::string format_sig6(double v);

/// Case-insensitive whole-word containment ("ice" does not match "nice").
bool contains_word(std::string_view text, std::string_view word);

}  // namespace clime::util
