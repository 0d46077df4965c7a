/**
 * @brief Which degrees of maps S^n x S^m -> S^{n+m} are realized by regular maps.
 *
 * Precedence: both dimensions odd -> only null-homotopic maps; a failed containment
 * I^{n+m} in I^n (either order) -> even degrees only; a certified nice pair -> all degrees;
 * otherwise unknown, with the binomial-parity conjecture as prediction.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "nice.hpp"
#include "sphere_invariants.hpp"

namespace kosphere {

enum class Verdict { AllDegrees, EvenDegreesOnly, OnlyNullHomotopic, UnknownConjecturedAll, UnknownConjecturedEvenOnly };

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::AllDegrees: return "AllDegrees";
  case Verdict::EvenDegreesOnly: return "EvenDegreesOnly";
  case Verdict::OnlyNullHomotopic: return "OnlyNullHomotopic";
  case Verdict::UnknownConjecturedAll: return "UnknownConjecturedAll";
  case Verdict::UnknownConjecturedEvenOnly: return "UnknownConjecturedEvenOnly";
  }
  return "?";
}

inline bool is_unknown(Verdict v) {
  return v == Verdict::UnknownConjecturedAll || v == Verdict::UnknownConjecturedEvenOnly;
}

struct Evidence {
  /// "both-odd", "kr-containment", "nice-derivation" or "conjecture".
  std::string rule;
  std::optional<NiceDerivation> derivation;
  /// For kr-containment: the pair (p, q) with I^{p+q} not in I^p, and the offending generator.
  std::optional<PairState> obstructed_pair;
  std::optional<KOElement> witness;
  bool binom_odd = false;
};

struct DegreeStatus {
  std::int64_t n = 0, m = 0;
  Verdict verdict = Verdict::UnknownConjecturedEvenOnly;
  Evidence evidence;
};

inline DegreeStatus classify(int n, int m, SearchBudget budget = {}) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("classify requires n, m >= 1");
  DegreeStatus st;
  st.n = n;
  st.m = m;
  st.evidence.binom_odd = binom_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));

  if (n % 2 == 1 && m % 2 == 1) {
    st.verdict = Verdict::OnlyNullHomotopic;
    st.evidence.rule = "both-odd";
    return st;
  }
  for (PairState p : {PairState{n, m}, PairState{m, n}}) {
    if (auto w = kr_obstruction_witness(p.first, p.second)) {
      st.verdict = Verdict::EvenDegreesOnly;
      st.evidence.rule = "kr-containment";
      st.evidence.obstructed_pair = p;
      st.evidence.witness = *w;
      return st;
    }
  }
  if (auto d = certify_nice(n, m, budget)) {
    st.verdict = Verdict::AllDegrees;
    st.evidence.rule = "nice-derivation";
    st.evidence.derivation = std::move(d);
    return st;
  }
  st.verdict = st.evidence.binom_odd ? Verdict::UnknownConjecturedAll : Verdict::UnknownConjecturedEvenOnly;
  st.evidence.rule = "conjecture";
  return st;
}

/// One-line summary, e.g. "OnlyNullHomotopic (both-odd)".
inline std::string summary(const DegreeStatus &st) {
  return std::string(to_string(st.verdict)) + " (" + st.evidence.rule + ")";
}

/// Residue condition under which the ideal containment is expected to fail: one of n, m is
/// 2 mod 4 and the other is 2 or 3 mod 4.
inline bool congruence_obstructed(std::int64_t n, std::int64_t m) {
  auto r = [](std::int64_t x) { return mod_floor(x, 4); };
  return (r(n) == 2 && (r(m) == 2 || r(m) == 3)) || (r(m) == 2 && (r(n) == 2 || r(n) == 3));
}

struct AuditViolation {
  int n = 0, m = 0;
  std::string message;
};

struct AuditReport {
  int bound = 0;
  int pairs = 0;
  std::vector<AuditViolation> violations;

  bool clean() const { return violations.empty(); }
};

/// Cross-checks every verdict for 1 <= n, m <= bound.
inline AuditReport consistency_audit(int bound, SearchBudget budget = {}) {
  AuditReport rep;
  rep.bound = bound;
  std::vector<std::vector<DegreeStatus>> table(bound + 1, std::vector<DegreeStatus>(bound + 1));
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; m <= bound; ++m)
      table[n][m] = classify(n, m, budget);

  for (int n = 1; n <= bound; ++n)
    for (int m = 1; m <= bound; ++m) {
      ++rep.pairs;
      const DegreeStatus &st = table[n][m];
      auto flag = [&](std::string msg) { rep.violations.push_back({n, m, std::move(msg)}); };
      bool both_odd = n % 2 == 1 && m % 2 == 1;
      bool obstructed = !kr_obstruction(n, m) || !kr_obstruction(m, n);

      if (st.verdict != table[m][n].verdict)
        flag("verdict not symmetric");
      if (st.verdict == Verdict::OnlyNullHomotopic && !both_odd)
        flag("OnlyNullHomotopic with an even dimension");
      if (st.verdict == Verdict::EvenDegreesOnly) {
        if (both_odd)
          flag("EvenDegreesOnly with both dimensions odd");
        if (st.evidence.binom_odd)
          flag("EvenDegreesOnly but binom(n+m, n) is odd");
      }
      if (st.verdict == Verdict::AllDegrees) {
        if (both_odd || obstructed)
          flag("AllDegrees contradicts a no-go result");
        if (!st.evidence.derivation) {
          flag("AllDegrees without a derivation");
        } else {
          try {
            replay(*st.evidence.derivation);
            RegularMapSpec spec = emit_regular_map(realize(*st.evidence.derivation));
            if (!spec.certificate.all())
              flag("realized map fails its certificate");
          } catch (const std::exception &e) {
            flag(std::string("derivation does not realize: ") + e.what());
          }
        }
      }
      if (is_unknown(st.verdict) && (st.verdict == Verdict::UnknownConjecturedAll) != st.evidence.binom_odd)
        flag("unknown verdict carries the wrong parity prediction");
    }
  return rep;
}

} // namespace kosphere
