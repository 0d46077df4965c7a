/**
 * @brief Textual notation for coefficient-ring elements.
 *
 * Tokens: e (eta), e2 (eta^2), a (alpha), l^t (lambda^t), b^k (beta^k), th (theta),
 * s^k (sigma^k), integers. A term is a '*'-separated product of tokens; terms are joined
 * with '+' or '-'. The printer writes one term per canonical basis element in descending
 * degree, e.g. "2*l^-1 + e2*l^0", and parse(print(x)) == x for every element.
 */
#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ko_ring.hpp"

namespace kosphere {

struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string coefficient_prefix(const Integer &c) {
  if (c == 1)
    return "";
  if (c == -1)
    return "-";
  return c.str() + "*";
}

inline std::string ko_token(const KOBasis &b) {
  std::string s;
  switch (b.gen) {
  case KOGenerator::One: break;
  case KOGenerator::Eta: s = "e*"; break;
  case KOGenerator::EtaSquared: s = "e2*"; break;
  case KOGenerator::Alpha: s = "a*"; break;
  }
  return s + "l^" + std::to_string(b.lambda_power);
}

/// Joins signed terms: "x + y", "x - y" for a term starting with '-'.
inline std::string join_terms(const std::vector<std::string> &terms) {
  if (terms.empty())
    return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out;
}

inline std::vector<std::string> ko_terms(const KOElement &x, const std::string &suffix) {
  std::vector<std::string> terms;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back(coefficient_prefix(it->second) + ko_token(*ko_basis_at(it->first)) + suffix);
  return terms;
}

} // namespace detail

inline std::string to_string(const KOElement &x) { return detail::join_terms(detail::ko_terms(x, "")); }

inline std::string to_string(const KUElement &x) {
  std::vector<std::string> terms;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back(detail::coefficient_prefix(it->second) + "b^" + std::to_string(-it->first / 2));
  return detail::join_terms(terms);
}

inline std::string to_string(const KSpElement &x) {
  return detail::join_terms(detail::ko_terms(x.base, "*th"));
}

inline std::string to_string(const KRElement &x) {
  std::vector<std::string> terms;
  for (const auto &[j, coeff] : x.terms())
    for (auto &t : detail::ko_terms(coeff, "*s^" + std::to_string(j)))
      terms.push_back(std::move(t));
  return detail::join_terms(terms);
}

/// Result of parsing: the ring is inferred from the tokens used.
using CoefficientValue = std::variant<KOElement, KUElement, KSpElement, KRElement>;

inline const char *ring_name(const CoefficientValue &v) {
  static const char *names[] = {"KO", "KU", "KSp", "KR"};
  return names[v.index()];
}

inline std::string to_string(const CoefficientValue &v) {
  return std::visit([](const auto &x) { return to_string(x); }, v);
}

namespace detail {

class NotationParser {
public:
  explicit NotationParser(std::string_view text) : text_(text) {}

  CoefficientValue parse() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    std::optional<CoefficientValue> total;
    while (true) {
      CoefficientValue t = term();
      if (negative)
        t = std::visit([](const auto &x) -> CoefficientValue { return -x; }, t);
      total = total ? add(*total, t) : t;
      skip_space();
      if (at_end())
        break;
      char op = text_[pos_];
      if (op != '+' && op != '-')
        fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return *total;
  }

private:
  struct Term {
    Integer coefficient = 1;
    KOElement ko = KOElement::one();
    std::int64_t beta = 0, sigma = 0, theta = 0;
    bool has_beta = false, has_sigma = false, has_ko = false;
  };

  CoefficientValue term() {
    Term t;
    do {
      skip_space();
      factor(t);
      skip_space();
    } while (consume('*'));

    if (t.has_beta) {
      if (t.has_ko || t.has_sigma || t.theta != 0)
        fail("beta cannot be combined with KO, theta or sigma tokens");
      return KUElement::beta(t.beta, t.coefficient);
    }
    KOElement ko = t.coefficient * t.ko * KOElement::lambda(div_floor(t.theta, 2));
    bool odd_theta = mod_floor(t.theta, 2) == 1;
    if (t.has_sigma) {
      if (t.theta != 0)
        fail("theta cannot be combined with sigma");
      return KRElement::sigma_power(t.sigma, ko);
    }
    if (odd_theta)
      return KSpElement{ko};
    return ko;
  }

  void factor(Term &t) {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient *= Integer(digits());
      return;
    }
    std::string word;
    while (std::isalnum(static_cast<unsigned char>(peek())))
      word += text_[pos_++];
    if (word == "e") {
      t.ko = t.ko * KOElement::eta();
      t.has_ko = true;
    } else if (word == "e2") {
      t.ko = t.ko * KOElement::eta_squared();
      t.has_ko = true;
    } else if (word == "a") {
      t.ko = t.ko * KOElement::alpha();
      t.has_ko = true;
    } else if (word == "th") {
      t.theta += 1;
    } else if (word == "l") {
      t.ko = t.ko * KOElement::lambda(exponent());
      t.has_ko = true;
    } else if (word == "b") {
      t.beta += exponent();
      t.has_beta = true;
    } else if (word == "s") {
      t.sigma += exponent();
      t.has_sigma = true;
    } else {
      fail(word.empty() ? "expected a token" : "unknown token '" + word + "'");
    }
  }

  std::int64_t exponent() {
    skip_space();
    if (!consume('^'))
      return 1;
    skip_space();
    bool negative = consume('-');
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an exponent");
    std::string d = digits();
    if (d.size() > 15)
      fail("exponent out of range");
    std::int64_t v = std::stoll(d);
    return negative ? -v : v;
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      d += text_[pos_++];
    return d;
  }

  CoefficientValue add(const CoefficientValue &a, const CoefficientValue &b) {
    if (a.index() != b.index()) {
      // Zero terms of another ring (e.g. "e*a") are absorbed.
      if (is_zero(b))
        return a;
      if (is_zero(a))
        return b;
      fail(std::string("cannot add ") + ring_name(a) + " and " + ring_name(b) + " terms");
    }
    return std::visit(
        [&](const auto &x) -> CoefficientValue {
          return x + std::get<std::decay_t<decltype(x)>>(b);
        },
        a);
  }

  static bool is_zero(const CoefficientValue &v) {
    return std::visit(
        [](const auto &x) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, KSpElement>)
            return x.base.is_zero();
          else
            return x.is_zero();
        },
        v);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool consume(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string &msg) const {
    throw parse_error(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline CoefficientValue parse_coefficient(std::string_view text) {
  return detail::NotationParser(text).parse();
}

/// Parses an expression that must denote an element of KO*(pt).
inline KOElement parse_ko(std::string_view text) {
  CoefficientValue v = parse_coefficient(text);
  if (auto *x = std::get_if<KOElement>(&v))
    return *x;
  throw parse_error(std::string("expected a KO element, got ") + ring_name(v) + ": \"" + std::string(text) + "\"");
}

inline KUElement parse_ku(std::string_view text) {
  CoefficientValue v = parse_coefficient(text);
  if (auto *x = std::get_if<KUElement>(&v))
    return *x;
  if (auto *x = std::get_if<KOElement>(&v); x && x->is_zero())
    return {};
  throw parse_error(std::string("expected a KU element, got ") + ring_name(v) + ": \"" + std::string(text) + "\"");
}

} // namespace kosphere
