/**
 * @brief Nice pairs: derivations, their search, and the realized regular maps.
 *
 * A pair (n, m) is nice when binom(n+m, n) is odd and there is a nice normed bilinear map
 * R^{n+1} x R^{m+1} -> R^{n+m+1}. Starting from (0, 0) with F(x, y) = xy, nice pairs are
 * closed under Swap and under AddLeft(k): (n, m) -> (n+k, m) whenever rho(k) > m.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bilinear.hpp"

namespace kosphere {

struct invalid_derivation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DerivationStep {
  enum class Kind { Base, AddLeft, Swap };

  Kind kind = Kind::Base;
  int k = 0; // AddLeft only

  static DerivationStep base() { return {Kind::Base, 0}; }
  static DerivationStep add_left(int k) { return {Kind::AddLeft, k}; }
  static DerivationStep swap() { return {Kind::Swap, 0}; }

  std::string to_string() const {
    switch (kind) {
    case Kind::Base: return "Base";
    case Kind::AddLeft: return "AddLeft(" + std::to_string(k) + ")";
    case Kind::Swap: return "Swap";
    }
    return "?";
  }

  static DerivationStep parse(const std::string &s) {
    if (s == "Base")
      return base();
    if (s == "Swap")
      return swap();
    if (s.rfind("AddLeft(", 0) == 0 && s.back() == ')') {
      std::string digits = s.substr(8, s.size() - 9);
      if (!digits.empty() && digits.size() < 10 && std::all_of(digits.begin(), digits.end(), ::isdigit))
        return add_left(std::stoi(digits));
    }
    throw invalid_derivation("unknown derivation step \"" + s + "\"");
  }

  bool operator==(const DerivationStep &) const = default;
};

using PairState = std::pair<int, int>;

struct NiceDerivation {
  std::vector<DerivationStep> steps;
  PairState target{0, 0};

  bool operator==(const NiceDerivation &) const = default;
};

/// Replays the derivation rules; throws invalid_derivation on the first illegal step.
inline PairState replay(const NiceDerivation &d) {
  if (d.steps.empty() || d.steps.front().kind != DerivationStep::Kind::Base)
    throw invalid_derivation("derivation must start with Base");
  PairState s{0, 0};
  for (std::size_t i = 1; i < d.steps.size(); ++i) {
    const DerivationStep &st = d.steps[i];
    switch (st.kind) {
    case DerivationStep::Kind::Base: throw invalid_derivation("Base may only appear first");
    case DerivationStep::Kind::Swap: std::swap(s.first, s.second); break;
    case DerivationStep::Kind::AddLeft:
      if (st.k < 1)
        throw invalid_derivation("AddLeft requires k >= 1");
      if (radon_hurwitz(st.k) <= s.second)
        throw invalid_derivation("step " + std::to_string(i) + ": rho(" + std::to_string(st.k) +
                                 ") = " + std::to_string(radon_hurwitz(st.k)) + " is not > " +
                                 std::to_string(s.second));
      s.first += st.k;
      break;
    }
  }
  if (s != d.target)
    throw invalid_derivation("derivation reaches (" + std::to_string(s.first) + "," + std::to_string(s.second) +
                             "), not the declared target (" + std::to_string(d.target.first) + "," +
                             std::to_string(d.target.second) + ")");
  if (!binom_odd(static_cast<std::uint64_t>(s.first), static_cast<std::uint64_t>(s.second)))
    throw invalid_derivation("binom(n+m, n) is even at the target");
  return s;
}

struct SearchBudget {
  std::size_t max_expansions = 100000;
};

/// Breadth-first search for a derivation reaching (n, m). States are restricted to those
/// whose sorted coordinates are dominated by sorted(n, m), a set closed under Swap.
/// nullopt means "not certified", never "not nice".
inline std::optional<NiceDerivation> certify_nice(int n, int m, SearchBudget budget = {}) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("certify_nice requires n, m >= 0");
  if (!binom_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)))
    return std::nullopt;
  int lo = std::min(n, m), hi = std::max(n, m);
  auto admissible = [&](PairState s) {
    return std::min(s.first, s.second) <= lo && std::max(s.first, s.second) <= hi;
  };

  std::map<PairState, std::pair<PairState, DerivationStep>> parent;
  std::deque<PairState> queue{{0, 0}};
  parent[{0, 0}] = {{0, 0}, DerivationStep::base()};
  std::size_t expansions = 0;
  const PairState goal{n, m};

  while (!queue.empty()) {
    PairState s = queue.front();
    queue.pop_front();
    if (s == goal) {
      NiceDerivation d;
      d.target = goal;
      for (PairState cur = s; cur != PairState{0, 0}; cur = parent[cur].first)
        d.steps.push_back(parent[cur].second);
      d.steps.push_back(DerivationStep::base());
      std::reverse(d.steps.begin(), d.steps.end());
      return d;
    }
    if (++expansions > budget.max_expansions)
      return std::nullopt;

    auto visit = [&](PairState next, DerivationStep step) {
      if (!admissible(next) || parent.count(next))
        return;
      parent[next] = {s, step};
      queue.push_back(next);
    };
    for (int k = 1; s.first + k <= hi; ++k)
      if (radon_hurwitz(k) > s.second)
        visit({s.first + k, s.second}, DerivationStep::add_left(k));
    visit({s.second, s.first}, DerivationStep::swap());
  }
  return std::nullopt;
}

/// Builds the nice normed map of shape (n+1, m+1, n+m+1) along a derivation.
inline BilinearMap realize(const NiceDerivation &d) {
  replay(d);
  BilinearMap f = base_nice();
  PairState s{0, 0};
  for (std::size_t i = 1; i < d.steps.size(); ++i) {
    const DerivationStep &st = d.steps[i];
    if (st.kind == DerivationStep::Kind::Swap) {
      f = swap(f);
      std::swap(s.first, s.second);
    } else {
      HRFamily fam = hr_family(st.k, s.second + 1);
      f = compose_step(f, hr_to_bilinear(fam, s.second + 1));
      s.first += st.k;
    }
  }
  if (!verify_normed(f) || !verify_nice(f))
    throw std::logic_error("realized map fails the exact checks");
  return f;
}

/// The three hypotheses behind a regular map S^n x S^m -> S^{n+m}, each checked exactly.
struct RegularMapCertificate {
  bool normed = false;
  bool nice = false;
  bool binom_odd = false;

  bool all() const { return normed && nice && binom_odd; }
};

/// f = (1/2) F restricted to the shifted spheres ||x||^2 = 2 x_1, ||y||^2 = 2 y_1; the image
/// lies on ||z||^2 = 2 z_1.
struct RegularMapSpec {
  int n = 0, m = 0;
  BilinearMap bilinear;
  RegularMapCertificate certificate;

  static constexpr const char *scale = "1/2";
  static constexpr const char *sphere = "shifted";
};

struct hypothesis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline RegularMapCertificate check_regular_map_hypotheses(const BilinearMap &f) {
  int n = f.a() - 1, m = f.b() - 1;
  return {verify_normed(f), verify_nice(f), binom_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m))};
}

inline RegularMapSpec emit_regular_map(const BilinearMap &f) {
  int n = f.a() - 1, m = f.b() - 1;
  if (n < 1 || m < 1)
    throw hypothesis_error("regular maps need n, m >= 1; shape is (" + std::to_string(f.a()) + "," +
                           std::to_string(f.b()) + "," + std::to_string(f.c()) + ")");
  if (f.c() != n + m + 1)
    throw hypothesis_error("output dimension must be n+m+1 = " + std::to_string(n + m + 1));
  RegularMapCertificate cert = check_regular_map_hypotheses(f);
  if (!cert.normed)
    throw hypothesis_error("map is not normed: " + find_normed_violation(f)->describe());
  if (!cert.nice)
    throw hypothesis_error("map is not nice: F_1(x,y) != x_1 y_1");
  if (!cert.binom_odd)
    throw hypothesis_error("binom(" + std::to_string(n + m) + ", " + std::to_string(n) + ") is even");
  return RegularMapSpec{n, m, f, cert};
}

} // namespace kosphere
