/**
 * @brief K-theoretic invariants of spheres and of products S^n x S^m.
 *
 * phi(n, m) is the index of I^n_(-n-m) in KO^{-n-m}(pt). The reference tables below are
 * only used as a regression check against the values computed from the ideal calculus.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ideal.hpp"
#include "ko_ring.hpp"

namespace kosphere {

enum class PhiValue { One, Two, Infinite };

inline std::string to_string(PhiValue v) {
  switch (v) {
  case PhiValue::One: return "1";
  case PhiValue::Two: return "2";
  case PhiValue::Infinite: return "∞";
  }
  return "?";
}

inline PhiValue to_phi(const GroupIndex &idx) {
  if (idx.is_infinite())
    return PhiValue::Infinite;
  if (idx.value() == 1)
    return PhiValue::One;
  if (idx.value() == 2)
    return PhiValue::Two;
  throw std::logic_error("index " + idx.to_string() + " is not a value of phi");
}

inline GroupIndex to_index(PhiValue v) {
  switch (v) {
  case PhiValue::One: return GroupIndex::finite(1);
  case PhiValue::Two: return GroupIndex::finite(2);
  case PhiValue::Infinite: return GroupIndex::infinite();
  }
  return GroupIndex::infinite();
}

using PhiTable = std::array<std::array<PhiValue, 8>, 8>;

struct table_mismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// phi extended to all integers through 8-periodicity in each argument.
inline PhiValue phi(std::int64_t n, std::int64_t m) {
  HomogeneousIdeal in = ideal_I(mod_floor(n, 4));
  return to_phi(ideal_index(in, KODegree{-(n + m)}.reduced()));
}

/// Published table of phi(n mod 8, m mod 8).
inline const PhiTable &reference_phi_table() {
  constexpr auto I = PhiValue::One, T = PhiValue::Two, X = PhiValue::Infinite;
  static const PhiTable table = {{
      {I, I, I, I, I, I, I, I},
      {I, I, I, X, I, I, I, X},
      {I, I, I, I, I, I, T, T},
      {I, X, I, I, I, X, T, T},
      {I, I, I, I, I, I, I, I},
      {I, I, I, X, I, I, I, X},
      {I, I, T, T, I, I, I, I},
      {I, X, T, T, I, X, I, I},
  }};
  return table;
}

inline PhiTable compute_phi_table() {
  PhiTable t{};
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      t[n][m] = phi(n, m);
  return t;
}

/// Computed table; a disagreement with the reference table is a fatal self-test failure.
inline PhiTable phi_table() {
  PhiTable t = compute_phi_table();
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      if (t[n][m] != reference_phi_table()[n][m])
        throw table_mismatch("phi table mismatch at (" + std::to_string(n) + "," + std::to_string(m) + ")");
  return t;
}

/// Order of a cyclic group: 1, 2 or infinity.
inline GroupIndex group_order(GroupKind k) {
  switch (k) {
  case GroupKind::Trivial: return GroupIndex::finite(1);
  case GroupKind::OrderTwo: return GroupIndex::finite(2);
  case GroupKind::InfiniteCyclic: return GroupIndex::infinite();
  }
  return GroupIndex::infinite();
}

inline PhiValue order_value(GroupKind k) { return to_phi(group_order(k)); }

/// Published table of |K~O^0(S^{n+m})| = |KO^{-(n+m)}(pt)|.
inline const PhiTable &reference_order_table() {
  constexpr auto I = PhiValue::One, T = PhiValue::Two, X = PhiValue::Infinite;
  static const PhiTable table = {{
      {X, T, T, I, X, I, I, I},
      {T, T, I, X, I, I, I, X},
      {T, I, X, I, I, I, X, T},
      {I, X, I, I, I, X, T, T},
      {X, I, I, I, X, T, T, I},
      {I, I, I, X, T, T, I, X},
      {I, I, X, T, T, I, X, I},
      {I, X, T, T, I, X, I, I},
  }};
  return table;
}

inline PhiTable compute_order_table() {
  PhiTable t{};
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      t[n][m] = order_value(ko_group_kind(KODegree{-(n + m)}));
  return t;
}

inline PhiTable bott_order_table() {
  PhiTable t = compute_order_table();
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      if (t[n][m] != reference_order_table()[n][m])
        throw table_mismatch("order table mismatch at (" + std::to_string(n) + "," + std::to_string(m) + ")");
  return t;
}

/// K~O^p_C(S^n) as a subgroup of K~O^p(S^n) = KO^{p-n}(pt), i.e. I^n_(p-n).
inline DegreePart ko_sphere_reduced(KODegree p, std::int64_t n) {
  return ideal_part(ideal_I(n), p - KODegree{n});
}

/// K~U^p_C(S^n) inside K~U^p(S^n) = KU^{p-n}(pt): everything for n even, zero for n odd.
inline DegreePart ku_sphere_reduced(std::int64_t p, std::int64_t n) {
  if (n < 0)
    throw std::invalid_argument("sphere dimension must be nonnegative");
  DegreePart part{KODegree{p - n}, ku_group(p - n).kind, 0};
  if (part.ambient != GroupKind::Trivial && n % 2 == 0)
    part.generator = 1;
  return part;
}

enum class Field { R, C, H };

inline const char *to_string(Field f) {
  switch (f) {
  case Field::R: return "R";
  case Field::C: return "C";
  case Field::H: return "H";
  }
  return "?";
}

inline std::optional<Field> parse_field(std::string_view s) {
  if (s == "R")
    return Field::R;
  if (s == "C")
    return Field::C;
  if (s == "H")
    return Field::H;
  return std::nullopt;
}

/// A subgroup of a cyclic group described by its index.
struct SubgroupReport {
  GroupDescriptor ambient;
  GroupIndex index = GroupIndex::finite(1);

  bool operator==(const SubgroupReport &) const = default;
};

/// Image of the algebraic K-group of S^n x S^m in K~F^0(S^n x S^m) = G + K~F^0(S^n) + K~F^0(S^m).
struct ProductKGroupReport {
  Field field = Field::R;
  std::int64_t n = 1, m = 1;
  SubgroupReport wedge;                  // G inside K~F^0(S^{n+m})
  std::array<SubgroupReport, 2> factors; // always the full groups

  bool operator==(const ProductKGroupReport &) const = default;
};

namespace detail {
/// K~F^0(S^d) as a coefficient group; quaternionic groups go through KO^{*-4}.
inline GroupDescriptor reduced_sphere_group(Field f, std::int64_t d) {
  switch (f) {
  case Field::C: return ku_group(-d);
  case Field::R: return ko_group(KODegree{-d});
  case Field::H: return ko_group(KODegree{-d - 4});
  }
  return {};
}
} // namespace detail

inline ProductKGroupReport kgroups_product(std::int64_t n, std::int64_t m, Field field) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("kgroups_product requires n, m >= 1");
  ProductKGroupReport r;
  r.field = field;
  r.n = n;
  r.m = m;
  r.wedge.ambient = detail::reduced_sphere_group(field, n + m);
  switch (field) {
  case Field::C:
    r.wedge.index = (n % 2 == 1 && m % 2 == 1) ? GroupIndex::infinite() : GroupIndex::finite(1);
    break;
  case Field::R: r.wedge.index = to_index(phi(n, m)); break;
  case Field::H: r.wedge.index = to_index(phi(n, m + 4)); break;
  }
  r.factors = {SubgroupReport{detail::reduced_sphere_group(field, n), GroupIndex::finite(1)},
               SubgroupReport{detail::reduced_sphere_group(field, m), GroupIndex::finite(1)}};
  return r;
}

/// Whether I^{n+m} is contained in I^n. A failure rules out regular maps of degree one.
inline bool kr_obstruction(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("kr_obstruction requires n, m >= 1");
  return ideal_includes(ideal_I(n), ideal_I(n + m));
}

/// Generator of I^{n+m} outside I^n, when the containment fails.
inline std::optional<KOElement> kr_obstruction_witness(std::int64_t n, std::int64_t m) {
  return containment_witness(ideal_I(n + m), ideal_I(n));
}

} // namespace kosphere
