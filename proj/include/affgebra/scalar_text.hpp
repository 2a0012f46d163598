#pragma once

// Textual scalar grammar shared by every field:
//
//   scalar := term (('+' | '-') term)*
//   term   := [rational] ['*'] ['sqrt(' integer ')'] ['*'] ['i']
//
// e.g. "3/4", "1/2+3/4i", "1/2*sqrt(2)-sqrt(3)i", "-i".

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "affgebra/error.hpp"
#include "affgebra/rational.hpp"

namespace affgebra::text {

struct Term {
  Rational coefficient{1};
  std::uint64_t radicand = 1;  // raw value under sqrt, not yet reduced
  bool imaginary = false;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline Rational parse_unsigned_rational(std::string_view s, std::string_view whole) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorCode::ParseError, "bad rational in scalar '" + std::string(whole) + "'");
  mpq_class q;
  q.get_num() = mpz_class(std::string(num));
  q.get_den() = mpz_class(std::string(den));
  if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(whole) + "'");
  return Rational(q);
}

inline Term parse_term(std::string_view body, bool negative, std::string_view whole) {
  Term term;
  std::string_view rest = body;
  bool saw_anything = false;

  std::size_t k = 0;
  while (k < rest.size() && (std::isdigit(static_cast<unsigned char>(rest[k])) || rest[k] == '/')) ++k;
  if (k > 0) {
    term.coefficient = parse_unsigned_rational(rest.substr(0, k), whole);
    rest.remove_prefix(k);
    saw_anything = true;
  }
  if (!rest.empty() && rest.front() == '*') {
    if (!saw_anything) fail(ErrorCode::ParseError, "dangling '*' in '" + std::string(whole) + "'");
    rest.remove_prefix(1);
  }
  if (rest.starts_with("sqrt(")) {
    auto close = rest.find(')');
    if (close == std::string_view::npos) fail(ErrorCode::ParseError, "unclosed sqrt in '" + std::string(whole) + "'");
    std::string_view digits = rest.substr(5, close - 5);
    if (!all_digits(digits)) fail(ErrorCode::ParseError, "bad radicand in '" + std::string(whole) + "'");
    term.radicand = std::stoull(std::string(digits));
    if (term.radicand == 0) term.coefficient = Rational(0);
    if (term.radicand == 0) term.radicand = 1;
    rest.remove_prefix(close + 1);
    saw_anything = true;
    if (!rest.empty() && rest.front() == '*') rest.remove_prefix(1);
  }
  if (rest == "i") {
    term.imaginary = true;
    rest.remove_prefix(1);
    saw_anything = true;
  }
  if (!rest.empty() || !saw_anything)
    fail(ErrorCode::ParseError, "cannot parse scalar '" + std::string(whole) + "'");
  if (negative) term.coefficient = -term.coefficient;
  return term;
}

}  // namespace detail

inline std::vector<Term> parse_terms(std::string_view input) {
  std::string compact;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) fail(ErrorCode::ParseError, "empty scalar");

  std::vector<Term> terms;
  std::size_t pos = 0;
  int depth = 0;
  bool negative = false;
  if (compact[0] == '+' || compact[0] == '-') {
    negative = compact[0] == '-';
    pos = 1;
  }
  std::size_t start = pos;
  for (std::size_t k = pos; k <= compact.size(); ++k) {
    char ch = k < compact.size() ? compact[k] : '\0';
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    bool boundary = ch == '\0' || (depth == 0 && (ch == '+' || ch == '-') && k > start);
    if (!boundary) continue;
    terms.push_back(detail::parse_term(std::string_view(compact).substr(start, k - start), negative, compact));
    negative = ch == '-';
    start = k + 1;
  }
  return terms;
}

/// Coefficient prefix for a term multiplying a non-trivial basis element ("", "-", "3/4*").
inline std::string coefficient_prefix(const Rational& q, bool star) {
  if (q == Rational(1)) return "";
  if (q == Rational(-1)) return "-";
  return q.to_string() + (star ? "*" : "");
}

/// Joins signed terms into "a+b-c".
inline std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].front() != '-') out += '+';
    out += parts[k];
  }
  return out;
}

}  // namespace affgebra::text
