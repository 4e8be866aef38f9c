#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "braid/word.hpp"

namespace braid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct Token {
  std::string text;
  int line;
  int column;
};

// Whitespace-separated tokens; '#' comments out the rest of its line.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++column;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      const int start_col = column;
      std::string word;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n' &&
             text[i] != '#') {
        word.push_back(text[i]);
        ++i;
        ++column;
      }
      tokens.push_back({std::move(word), line, start_col});
    }
  }
  return tokens;
}

inline long long parse_int(const Token& token) {
  long long value = 0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError("'" + token.text + "' is not an integer", token.line, token.column);
  return value;
}

}  // namespace detail

// BraidWordText: an optional first line "n <strands>", then whitespace
// separated nonzero signed integers g meaning sigma_{|g|}^{sign(g)}. Without a
// header the strand count defaults to max|g| + 1. A forced strand count (from a
// --strands flag) must agree with the header when both are present.
inline BraidWord parse_word(std::string_view text, std::optional<int> forced_strands = std::nullopt) {
  const std::vector<detail::Token> tokens = detail::tokenize(text);

  std::size_t next = 0;
  std::optional<int> header_strands;
  if (!tokens.empty() && tokens[0].text == "n") {
    if (tokens.size() < 2) throw ParseError("expected a strand count after 'n'", tokens[0].line, tokens[0].column);
    const long long n = detail::parse_int(tokens[1]);
    if (n < 1 || n > 1'000'000) throw ParseError("strand count out of range", tokens[1].line, tokens[1].column);
    header_strands = static_cast<int>(n);
    next = 2;
  }

  std::vector<int> gens;
  int max_index = 0;
  for (; next < tokens.size(); ++next) {
    const detail::Token& token = tokens[next];
    const long long g = detail::parse_int(token);
    if (g == 0) throw ParseError("zero is not a generator", token.line, token.column);
    if (g < -1'000'000 || g > 1'000'000) throw ParseError("generator index out of range", token.line, token.column);
    gens.push_back(static_cast<int>(g));
    const int mag = g < 0 ? static_cast<int>(-g) : static_cast<int>(g);
    if (mag > max_index) max_index = mag;
  }

  if (forced_strands && header_strands && *forced_strands != *header_strands)
    throw ParseError("strand count " + std::to_string(*header_strands) + " conflicts with the requested " +
                         std::to_string(*forced_strands),
                     tokens[1].line, tokens[1].column);

  const int strands = forced_strands ? *forced_strands : header_strands ? *header_strands : max_index + 1;

  BraidWord w(strands);
  std::size_t gi = 0;
  for (std::size_t ti = (header_strands ? 2u : 0u); ti < tokens.size(); ++ti, ++gi) {
    const int g = gens[gi];
    const int mag = g < 0 ? -g : g;
    if (mag > strands - 1)
      throw ParseError("generator " + std::to_string(g) + " needs at least " + std::to_string(mag + 1) +
                           " strands, word has " + std::to_string(strands),
                       tokens[ti].line, tokens[ti].column);
    w.push_back(Letter{mag, g < 0 ? -1 : +1});
  }
  return w;
}

inline std::string format_letters(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (int g : w.to_ints()) {
    if (!first) os << ' ';
    os << g;
    first = false;
  }
  return os.str();
}

// Round-trips through parse_word.
inline std::string format_word(const BraidWord& w) {
  std::string out = "n " + std::to_string(w.strands()) + "\n";
  if (!w.empty()) out += format_letters(w) + "\n";
  return out;
}

}  // namespace braid
