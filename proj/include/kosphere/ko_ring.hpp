/**
 * @brief Coefficient rings KO*(pt), KU*(pt), KSp*(pt), KR*(pt) in exact arithmetic.
 *
 * KO*(pt) = Z[eta, alpha, lambda, lambda^-1] / (2 eta, eta^3, alpha eta, alpha^2 - 4 lambda)
 * with |eta| = -1, |alpha| = -4, |lambda| = -8. Every nontrivial degree carries exactly one
 * canonical basis element, so elements are stored as a degree -> coefficient map.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace kosphere {

using Integer = boost::multiprecision::cpp_int;

/// Floor-mod with a nonnegative result.
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) noexcept {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// Floor division.
constexpr std::int64_t div_floor(std::int64_t x, std::int64_t m) noexcept {
  return (x - mod_floor(x, m)) / m;
}

/// Cohomological degree in KO*(pt). Negative degrees sit below the point.
struct KODegree {
  std::int64_t value = 0;

  constexpr KODegree() = default;
  constexpr explicit KODegree(std::int64_t p) : value(p) {}

  constexpr auto operator<=>(const KODegree &) const = default;
  constexpr KODegree operator+(KODegree o) const { return KODegree{value + o.value}; }
  constexpr KODegree operator-(KODegree o) const { return KODegree{value - o.value}; }

  /// Representative in the period window [-7, 0].
  constexpr KODegree reduced() const { return KODegree{-mod_floor(-value, 8)}; }
};

enum class GroupKind { Trivial, InfiniteCyclic, OrderTwo };

inline const char *to_string(GroupKind k) {
  switch (k) {
  case GroupKind::Trivial: return "Trivial";
  case GroupKind::InfiniteCyclic: return "InfiniteCyclic";
  case GroupKind::OrderTwo: return "OrderTwo";
  }
  return "?";
}

/// A cyclic coefficient group together with a human-readable generator label.
struct GroupDescriptor {
  GroupKind kind = GroupKind::Trivial;
  std::string generator; // empty for Trivial

  bool operator==(const GroupDescriptor &) const = default;
};

// ---------------------------------------------------------------------------
// Canonical basis of KO*(pt)

enum class KOGenerator { One, Eta, EtaSquared, Alpha };

constexpr std::int64_t degree_of(KOGenerator g) noexcept {
  switch (g) {
  case KOGenerator::One: return 0;
  case KOGenerator::Eta: return -1;
  case KOGenerator::EtaSquared: return -2;
  case KOGenerator::Alpha: return -4;
  }
  return 0;
}

/// gen * lambda^lambda_power; degree = |gen| - 8 * lambda_power.
struct KOBasis {
  KOGenerator gen = KOGenerator::One;
  std::int64_t lambda_power = 0;

  constexpr KODegree degree() const { return KODegree{degree_of(gen) - 8 * lambda_power}; }
  bool operator==(const KOBasis &) const = default;
};

/// Basis element of KO^p(pt), or nullopt when the group is trivial.
constexpr std::optional<KOBasis> ko_basis_at(KODegree p) {
  switch (mod_floor(p.value, 8)) {
  case 0: return KOBasis{KOGenerator::One, -p.value / 8};
  case 7: return KOBasis{KOGenerator::Eta, -(p.value + 1) / 8};
  case 6: return KOBasis{KOGenerator::EtaSquared, -(p.value + 2) / 8};
  case 4: return KOBasis{KOGenerator::Alpha, -(p.value + 4) / 8};
  default: return std::nullopt;
  }
}

constexpr GroupKind ko_group_kind(KODegree p) {
  switch (mod_floor(p.value, 8)) {
  case 0:
  case 4: return GroupKind::InfiniteCyclic;
  case 6:
  case 7: return GroupKind::OrderTwo;
  default: return GroupKind::Trivial;
  }
}

namespace detail {

inline std::string superscript(std::int64_t k) {
  static const char *digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = k < 0 ? "⁻" : "";
  for (char c : std::to_string(k < 0 ? -k : k))
    s += digits[c - '0'];
  return s;
}

inline std::string power_label(const char *symbol, std::int64_t k) {
  if (k == 0)
    return "";
  return k == 1 ? std::string(symbol) : symbol + superscript(k);
}

inline std::string basis_label(const KOBasis &b) {
  std::string g;
  switch (b.gen) {
  case KOGenerator::One: break;
  case KOGenerator::Eta: g = "η"; break;
  case KOGenerator::EtaSquared: g = "η²"; break;
  case KOGenerator::Alpha: g = "α"; break;
  }
  g += power_label("λ", b.lambda_power);
  return g.empty() ? "1" : g;
}

/// Product of two basis elements as (coefficient, basis); nullopt when it vanishes.
inline std::optional<std::pair<int, KOBasis>> multiply_basis(KOBasis x, KOBasis y) {
  using G = KOGenerator;
  std::int64_t t = x.lambda_power + y.lambda_power;
  if (x.gen == G::One)
    return std::pair{1, KOBasis{y.gen, t}};
  if (y.gen == G::One)
    return std::pair{1, KOBasis{x.gen, t}};
  if (x.gen == G::Eta && y.gen == G::Eta)
    return std::pair{1, KOBasis{G::EtaSquared, t}};
  if (x.gen == G::Alpha && y.gen == G::Alpha)
    return std::pair{4, KOBasis{G::One, t + 1}};
  // eta^3, eta*alpha, eta^2*alpha, eta^4
  return std::nullopt;
}

} // namespace detail

/// Group KO^p(pt): Z at p = 0,4 (mod 8), Z/2 at p = 6,7 (mod 8), zero otherwise.
inline GroupDescriptor ko_group(KODegree p) {
  auto b = ko_basis_at(p);
  if (!b)
    return {GroupKind::Trivial, ""};
  return {ko_group_kind(p), detail::basis_label(*b)};
}

// ---------------------------------------------------------------------------
// KOElement

/// Element of KO*(pt) in the canonical basis. Coefficients in Z/2 degrees are kept as 0/1;
/// zero terms are never stored.
class KOElement {
public:
  using Terms = std::map<KODegree, Integer>;

  KOElement() = default;

  static KOElement basis(KODegree p, Integer coefficient = 1) {
    KOElement e;
    e.add_term(p, std::move(coefficient));
    return e;
  }
  static KOElement monomial(KOGenerator g, std::int64_t lambda_power, Integer coefficient = 1) {
    return basis(KOBasis{g, lambda_power}.degree(), std::move(coefficient));
  }
  static KOElement integer(Integer n) { return monomial(KOGenerator::One, 0, std::move(n)); }
  static KOElement one() { return integer(1); }
  static KOElement eta() { return monomial(KOGenerator::Eta, 0); }
  static KOElement eta_squared() { return monomial(KOGenerator::EtaSquared, 0); }
  static KOElement alpha() { return monomial(KOGenerator::Alpha, 0); }
  static KOElement lambda(std::int64_t t = 1) { return monomial(KOGenerator::One, t); }

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const noexcept { return terms_.size() <= 1; }

  /// Degree of a nonzero homogeneous element.
  std::optional<KODegree> degree() const {
    if (terms_.size() != 1)
      return std::nullopt;
    return terms_.begin()->first;
  }

  /// Coefficient of the canonical generator in degree p (0 when absent).
  Integer coefficient(KODegree p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer{0} : it->second;
  }

  KOElement &operator+=(const KOElement &o) {
    for (const auto &[p, c] : o.terms_)
      add_term(p, c);
    return *this;
  }
  KOElement &operator-=(const KOElement &o) { return *this += -o; }

  friend KOElement operator+(KOElement a, const KOElement &b) { return a += b; }
  friend KOElement operator-(KOElement a, const KOElement &b) { return a -= b; }
  friend KOElement operator-(const KOElement &a) {
    KOElement r;
    for (const auto &[p, c] : a.terms_)
      r.add_term(p, -c);
    return r;
  }

  friend KOElement operator*(const KOElement &a, const KOElement &b) {
    KOElement r;
    for (const auto &[p, c] : a.terms_)
      for (const auto &[q, d] : b.terms_) {
        auto prod = detail::multiply_basis(*ko_basis_at(p), *ko_basis_at(q));
        if (prod)
          r.add_term(prod->second.degree(), c * d * prod->first);
      }
    return r;
  }
  friend KOElement operator*(const Integer &n, const KOElement &a) {
    KOElement r;
    for (const auto &[p, c] : a.terms_)
      r.add_term(p, n * c);
    return r;
  }

  bool operator==(const KOElement &) const = default;

private:
  void add_term(KODegree p, Integer c) {
    auto kind = ko_group_kind(p);
    if (kind == GroupKind::Trivial)
      return;
    Integer &slot = terms_[p];
    slot += c;
    if (kind == GroupKind::OrderTwo) {
      slot %= 2;
      if (slot < 0)
        slot += 2;
    }
    if (slot == 0)
      terms_.erase(p);
  }

  Terms terms_;
};

inline KOElement ko_mul(const KOElement &a, const KOElement &b) { return a * b; }

// ---------------------------------------------------------------------------
// KUElement

/// Element of KU*(pt) = Z[beta, beta^-1], |beta| = -2, stored by (even) degree.
class KUElement {
public:
  using Terms = std::map<std::int64_t, Integer>;

  KUElement() = default;

  /// c * beta^k.
  static KUElement beta(std::int64_t k, Integer c = 1) {
    KUElement e;
    e.add_term(-2 * k, std::move(c));
    return e;
  }

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  KUElement &operator+=(const KUElement &o) {
    for (const auto &[p, c] : o.terms_)
      add_term(p, c);
    return *this;
  }
  friend KUElement operator+(KUElement a, const KUElement &b) { return a += b; }
  friend KUElement operator-(const KUElement &a) {
    KUElement r;
    for (const auto &[p, c] : a.terms_)
      r.add_term(p, -c);
    return r;
  }
  friend KUElement operator-(KUElement a, const KUElement &b) { return a += -b; }
  friend KUElement operator*(const KUElement &a, const KUElement &b) {
    KUElement r;
    for (const auto &[p, c] : a.terms_)
      for (const auto &[q, d] : b.terms_)
        r.add_term(p + q, c * d);
    return r;
  }

  bool operator==(const KUElement &) const = default;

private:
  void add_term(std::int64_t p, Integer c) {
    if (p % 2 != 0)
      throw std::invalid_argument("KU*(pt) is concentrated in even degrees");
    Integer &slot = terms_[p];
    slot += c;
    if (slot == 0)
      terms_.erase(p);
  }

  Terms terms_;
};

inline KUElement ku_mul(const KUElement &a, const KUElement &b) { return a * b; }

inline GroupDescriptor ku_group(std::int64_t p) {
  if (p % 2 != 0)
    return {GroupKind::Trivial, ""};
  std::string label = detail::power_label("β", -p / 2);
  return {GroupKind::InfiniteCyclic, label.empty() ? "1" : label};
}

// ---------------------------------------------------------------------------
// KSpElement

/// Element base * theta of KSp*(pt), the free KO*(pt)-module on theta (|theta| = -4).
struct KSpElement {
  KOElement base;

  static KSpElement theta() { return {KOElement::one()}; }

  std::optional<std::int64_t> degree() const {
    auto d = base.degree();
    if (!d)
      return std::nullopt;
    return d->value - 4;
  }

  friend KSpElement operator+(const KSpElement &a, const KSpElement &b) { return {a.base + b.base}; }
  friend KSpElement operator-(const KSpElement &a) { return {-a.base}; }
  /// KO-module action.
  friend KSpElement operator*(const KOElement &x, const KSpElement &a) { return {x * a.base}; }

  bool operator==(const KSpElement &) const = default;
};

/// Pairing with theta: (base * theta) * theta = base * lambda in KO*(pt).
inline KOElement theta_mul(const KSpElement &x) { return x.base * KOElement::lambda(); }

// ---------------------------------------------------------------------------
// KR*(pt) = KO*(pt)[sigma, sigma^-1], |sigma| = -1 - tau

struct Bidegree {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool operator==(const Bidegree &) const = default;
};

/// Element sum_j x_j sigma^j with x_j in KO*(pt).
class KRElement {
public:
  using Terms = std::map<std::int64_t, KOElement>;

  KRElement() = default;
  static KRElement sigma_power(std::int64_t j, KOElement x = KOElement::one()) {
    KRElement e;
    e.add(j, x);
    return e;
  }

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend KRElement operator+(KRElement a, const KRElement &b) {
    for (const auto &[j, x] : b.terms_)
      a.add(j, x);
    return a;
  }
  friend KRElement operator-(const KRElement &a) {
    KRElement r;
    for (const auto &[j, x] : a.terms_)
      r.add(j, -x);
    return r;
  }
  friend KRElement operator*(const KRElement &a, const KRElement &b) {
    KRElement r;
    for (const auto &[i, x] : a.terms_)
      for (const auto &[j, y] : b.terms_)
        r.add(i + j, x * y);
    return r;
  }
  bool operator==(const KRElement &) const = default;

private:
  void add(std::int64_t j, const KOElement &x) {
    KOElement &slot = terms_[j];
    slot += x;
    if (slot.is_zero())
      terms_.erase(j);
  }

  Terms terms_;
};

/// x * sigma^j has bidegree (|x| - j, -j), so KR^{p+q tau}(pt) = KO^{p-q}(pt) * sigma^{-q}.
inline GroupDescriptor kr_coeff(Bidegree b) {
  GroupDescriptor g = ko_group(KODegree{b.p - b.q});
  if (g.kind == GroupKind::Trivial || b.q == 0)
    return g;
  std::string sigma = detail::power_label("σ", -b.q);
  g.generator = g.generator == "1" ? sigma : g.generator + sigma;
  return g;
}

// ---------------------------------------------------------------------------
// Natural transformations

/// Realification r: KU*(pt) -> KO*(pt). Additive only; not multiplicative.
inline KOElement realify(const KUElement &x) {
  KOElement r;
  for (const auto &[p, c] : x.terms()) {
    std::int64_t n = -p / 2; // beta^n
    std::int64_t k = div_floor(n, 4);
    switch (mod_floor(n, 4)) {
    case 0: r += KOElement::monomial(KOGenerator::One, k, 2 * c); break;
    case 1: r += KOElement::monomial(KOGenerator::EtaSquared, k, c); break;
    case 2: r += KOElement::monomial(KOGenerator::Alpha, k, c); break;
    case 3: break;
    }
  }
  return r;
}

/// Quaternionification h: KU*(pt) -> KSp*(pt).
inline KSpElement quaternionify(const KUElement &x) {
  KOElement base;
  for (const auto &[p, c] : x.terms()) {
    std::int64_t n = -p / 2;
    std::int64_t k = div_floor(n, 4);
    switch (mod_floor(n, 4)) {
    case 0: base += KOElement::monomial(KOGenerator::Alpha, k - 1, c); break;
    case 1: break;
    case 2: base += KOElement::monomial(KOGenerator::One, k, 2 * c); break;
    case 3: base += KOElement::monomial(KOGenerator::EtaSquared, k, c); break;
    }
  }
  return {base};
}

} // namespace kosphere
