/**
 * @brief Homogeneous ideals of KO*(pt) and their degreewise parts.
 *
 * Each KO^p(pt) is cyclic with a single canonical generator, so the degree-p part of an
 * ideal (g_1, ..., g_r) is generated by the products g_i * x_i, x_i the basis element of
 * degree p - |g_i|. Subgroups of Z are recorded by a nonnegative generator (0 = zero
 * subgroup), subgroups of Z/2 by a bit.
 */
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ko_ring.hpp"
#include "notation.hpp"

namespace kosphere {

/// Index of a subgroup: a positive integer or infinity.
class GroupIndex {
public:
  static GroupIndex finite(Integer k) {
    if (k <= 0)
      throw std::invalid_argument("finite index must be positive");
    return GroupIndex{std::move(k)};
  }
  static GroupIndex infinite() { return GroupIndex{0}; }

  bool is_infinite() const noexcept { return value_ == 0; }
  /// Finite value; 0 encodes infinity.
  const Integer &value() const noexcept { return value_; }

  /// True when this index divides `other` (infinity is divisible by everything).
  bool divides(const GroupIndex &other) const {
    if (other.is_infinite())
      return true;
    if (is_infinite())
      return false;
    return other.value_ % value_ == 0;
  }

  std::string to_string() const { return is_infinite() ? "∞" : value_.str(); }

  bool operator==(const GroupIndex &) const = default;

private:
  explicit GroupIndex(Integer v) : value_(std::move(v)) {}
  Integer value_;
};

/// Degree-p part of a homogeneous ideal, as a subgroup of KO^p(pt).
struct DegreePart {
  KODegree degree;
  GroupKind ambient = GroupKind::Trivial;
  /// Generator of the subgroup as a multiple of the canonical generator: a nonnegative
  /// integer for Z, 0 or 1 for Z/2, 0 for the trivial group.
  Integer generator = 0;

  bool is_zero() const { return generator == 0; }
  bool is_full() const { return ambient == GroupKind::Trivial || generator == 1; }

  GroupIndex index() const {
    switch (ambient) {
    case GroupKind::Trivial: return GroupIndex::finite(1);
    case GroupKind::OrderTwo: return GroupIndex::finite(is_zero() ? 2 : 1);
    case GroupKind::InfiniteCyclic:
      return is_zero() ? GroupIndex::infinite() : GroupIndex::finite(generator);
    }
    return GroupIndex::infinite();
  }

  /// "Full", "Zero" or "IndexK(k)".
  std::string describe() const {
    if (is_full())
      return "Full";
    if (is_zero())
      return "Zero";
    return "IndexK(" + generator.str() + ")";
  }

  bool operator==(const DegreePart &) const = default;
};

class HomogeneousIdeal {
public:
  HomogeneousIdeal() = default;

  /// Zero generators are dropped; the empty list is the zero ideal.
  explicit HomogeneousIdeal(std::vector<KOElement> generators) {
    for (auto &g : generators) {
      if (!g.is_homogeneous())
        throw std::invalid_argument("ideal generator is not homogeneous: " + to_string(g));
      if (!g.is_zero())
        generators_.push_back(std::move(g));
    }
  }

  const std::vector<KOElement> &generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  bool operator==(const HomogeneousIdeal &) const = default;

private:
  std::vector<KOElement> generators_;
};

namespace detail {

inline Integer gcd(Integer a, Integer b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline DegreePart raw_part(const HomogeneousIdeal &j, KODegree p) {
  DegreePart part{p, ko_group_kind(p), 0};
  if (part.ambient == GroupKind::Trivial)
    return part;
  for (const KOElement &g : j.generators()) {
    auto complement = ko_basis_at(p - *g.degree());
    if (!complement)
      continue;
    KOElement product = g * KOElement::basis(complement->degree());
    part.generator = gcd(part.generator, product.coefficient(p));
  }
  if (part.ambient == GroupKind::OrderTwo)
    part.generator = part.generator == 0 ? 0 : 1;
  return part;
}

} // namespace detail

/// True when J contains a unit; detected through J_(0) = KO^0(pt).
inline bool is_unit_ideal(const HomogeneousIdeal &j) {
  return detail::raw_part(j, KODegree{0}).generator == 1;
}

/// Degree-p part of J as a subgroup of KO^p(pt).
inline DegreePart ideal_part(const HomogeneousIdeal &j, KODegree p) {
  if (is_unit_ideal(j)) {
    DegreePart part{p, ko_group_kind(p), 0};
    if (part.ambient != GroupKind::Trivial)
      part.generator = 1;
    return part;
  }
  return detail::raw_part(j, p);
}

/// Index [KO^p(pt) : J_(p)].
inline GroupIndex ideal_index(const HomogeneousIdeal &j, KODegree p) { return ideal_part(j, p).index(); }

/// Membership of a homogeneous element.
inline bool ideal_contains(const HomogeneousIdeal &j, const KOElement &x) {
  if (!x.is_homogeneous())
    throw std::invalid_argument("membership is only defined for homogeneous elements: " + to_string(x));
  if (x.is_zero())
    return true;
  KODegree p = *x.degree();
  DegreePart part = ideal_part(j, p);
  if (part.is_zero())
    return false;
  return x.coefficient(p) % part.generator == 0;
}

/// The first generator of `sub` that does not lie in `super`, if any.
inline std::optional<KOElement> containment_witness(const HomogeneousIdeal &sub, const HomogeneousIdeal &super) {
  for (const KOElement &g : sub.generators())
    if (!ideal_contains(super, g))
      return g;
  return std::nullopt;
}

inline bool ideal_includes(const HomogeneousIdeal &super, const HomogeneousIdeal &sub) {
  return !containment_witness(sub, super).has_value();
}

/// The ideal I^n of classes on S^n that extend over a complexification:
/// (1), (eta), (2, eta^2, alpha), (0) for n = 0, 1, 2, 3 (mod 4).
inline HomogeneousIdeal ideal_I(std::int64_t n) {
  if (n < 0)
    throw std::invalid_argument("ideal_I requires n >= 0");
  switch (n % 4) {
  case 0: return HomogeneousIdeal({KOElement::one()});
  case 1: return HomogeneousIdeal({KOElement::eta()});
  case 2: return HomogeneousIdeal({KOElement::integer(2), KOElement::eta_squared(), KOElement::alpha()});
  default: return HomogeneousIdeal{};
  }
}

inline HomogeneousIdeal eta_ideal() { return ideal_I(1); }
inline HomogeneousIdeal realification_image_ideal() { return ideal_I(2); }

/// Outcome of the four vanishing-part implications for a homogeneous ideal J:
///   J_(0) = 0 => J in (eta);  J_(-1) = 0 => J in (2, eta^2, alpha);
///   J_(0) = J_(-2) = 0 => J = 0;  J_(-4) = J_(-2) = 0 => J = 0.
struct LemmaCheck {
  std::array<bool, 4> holds{};
  std::array<bool, 4> hypothesis{};

  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

inline LemmaCheck lemma_implications(const HomogeneousIdeal &j) {
  auto zero_at = [&](std::int64_t p) { return ideal_part(j, KODegree{p}).is_zero(); };
  LemmaCheck c;
  c.hypothesis = {zero_at(0), zero_at(-1), zero_at(0) && zero_at(-2), zero_at(-4) && zero_at(-2)};
  std::array<bool, 4> conclusion = {ideal_includes(eta_ideal(), j),
                                    ideal_includes(realification_image_ideal(), j), j.is_zero(), j.is_zero()};
  for (int i = 0; i < 4; ++i)
    c.holds[i] = !c.hypothesis[i] || conclusion[i];
  return c;
}

/// Parses an ideal literal such as "(2,e2,a)", "(e)", "(0)" or "(1)".
inline HomogeneousIdeal parse_ideal(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos || text[first] != '(' || text[last] != ')')
    throw parse_error("ideal literal must be parenthesised: \"" + std::string(text) + "\"");
  std::string_view body = text.substr(first + 1, last - first - 1);
  std::vector<KOElement> gens;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item.find_first_not_of(" \t") == std::string_view::npos)
      throw parse_error("empty ideal generator in \"" + std::string(text) + "\"");
    gens.push_back(parse_ko(item));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return HomogeneousIdeal(std::move(gens));
}

inline std::string to_string(const HomogeneousIdeal &j) {
  if (j.is_zero())
    return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < j.generators().size(); ++i)
    s += (i ? "," : "") + to_string(j.generators()[i]);
  return s + ")";
}

} // namespace kosphere
