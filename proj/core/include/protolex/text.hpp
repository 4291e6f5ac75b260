#ifndef PROTOLEX_TEXT_HPP
#define PROTOLEX_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace protolex {

/// Splits on a single delimiter character; keeps empty fields.
std::vector<std::string> split(std::string_view s, char delim);

/// Splits on runs of spaces; drops empty tokens.
std::vector<std::string> split_ws(std::string_view s);

/// ASCII lowercase; bytes outside [A-Z] pass through untouched.
std::string lower_ascii(std::string_view s);

/// True if the token consists only of digits (optionally with . , - inside).
bool is_number_token(std::string_view s);

/// Bundled English stopword list used for gloss and clue filtering.
bool is_stopword(const std::string& word);

/// Strips leading/trailing ASCII punctuation from a token.
std::string strip_punct(std::string_view s);

// Canonical number formatting for TSV output: integral values print without
// a decimal point, everything else prints the shortest round-trip form.
std::string fmt_number(double x);

/// Parses a canonical number back (integer or decimal).
double parse_number(const std::string& s);

}  // namespace protolex

#endif
