#include "protolex/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "protolex/error.hpp"

namespace protolex {

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_number_token(std::string_view s) {
  if (s.empty()) return false;
  bool digit_seen = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digit_seen = true;
    } else if (c == '.' || c == ',' || (c == '-' && i == 0)) {
      continue;
    } else {
      return false;
    }
  }
  return digit_seen;
}

namespace {

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> kStopwords = {
      "a",       "about",  "above",   "after",   "again",  "against", "all",
      "am",      "an",     "and",     "any",     "are",    "as",      "at",
      "be",      "because", "been",   "before",  "being",  "below",   "between",
      "both",    "but",    "by",      "can",     "cannot", "could",   "did",
      "do",      "does",   "doing",   "down",    "during", "each",    "few",
      "for",     "from",   "further", "had",     "has",    "have",    "having",
      "he",      "her",    "here",    "hers",    "him",    "his",     "how",
      "i",       "if",     "in",      "into",    "is",     "it",      "its",
      "itself",  "just",   "me",      "more",    "most",   "my",      "no",
      "nor",     "not",    "now",     "of",      "off",    "on",      "once",
      "only",    "or",     "other",   "our",     "ours",   "out",     "over",
      "own",     "same",   "she",     "should",  "so",     "some",    "such",
      "than",    "that",   "the",     "their",   "theirs", "them",    "then",
      "there",   "these",  "they",    "this",    "those",  "through", "to",
      "too",     "under",  "until",   "up",      "very",   "was",     "we",
      "were",    "what",   "when",    "where",   "which",  "while",   "who",
      "whom",    "why",    "will",    "with",    "would",  "you",     "your",
      "yours",   "also",   "via",
  };
  return kStopwords;
}

}  // namespace

bool is_stopword(const std::string& word) {
  return stopwords().count(word) > 0;
}

std::string strip_punct(std::string_view s) {
  auto is_punct = [](char c) {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
           (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
  };
  std::size_t b = 0, e = s.size();
  while (b < e && is_punct(s[b])) ++b;
  while (e > b && is_punct(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string fmt_number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9.0e15) {
    return std::to_string(static_cast<long long>(x));
  }
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& s) {
  double value = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("not a number: '" + s + "'");
  }
  return value;
}

}  // namespace protolex
