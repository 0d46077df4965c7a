/**
 * @brief JSON forms of maps, derivations, reports and verdicts.
 *
 *   BilinearMap     {"a","b","c","mats":[[[int]]]}
 *   RegularMapSpec  BilinearMap fields + {"n","m","scale":"1/2","sphere":"shifted","certificate":{...}}
 *   NiceDerivation  {"target":[n,m],"steps":["Base","AddLeft(k)","Swap",...]}
 */
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "classifier.hpp"
#include "ideal.hpp"
#include "nice.hpp"
#include "notation.hpp"
#include "sphere_invariants.hpp"

namespace kosphere {

using json = nlohmann::ordered_json;

struct format_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json index_json(const GroupIndex &idx) {
  if (idx.is_infinite())
    return "inf";
  return json::parse(idx.value().str());
}

inline json phi_json(PhiValue v) {
  switch (v) {
  case PhiValue::One: return 1;
  case PhiValue::Two: return 2;
  case PhiValue::Infinite: return "inf";
  }
  return nullptr;
}

inline json to_json(const GroupDescriptor &g) { return {{"kind", to_string(g.kind)}, {"generator", g.generator}}; }

inline json to_json(const DegreePart &p) {
  return {{"degree", p.degree.value},
          {"ambient", to_string(p.ambient)},
          {"subgroup", p.describe()},
          {"index", index_json(p.index())}};
}

inline json to_json(const BilinearMap &f) {
  json mats = json::array();
  for (const IntMatrix &m : f.mats()) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c)
        row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return {{"a", f.a()}, {"b", f.b()}, {"c", f.c()}, {"mats", std::move(mats)}};
}

inline BilinearMap bilinear_from_json(const json &j) {
  try {
    int a = j.at("a").get<int>(), b = j.at("b").get<int>(), c = j.at("c").get<int>();
    const json &mats = j.at("mats");
    if (!mats.is_array())
      throw format_error("\"mats\" must be an array");
    std::vector<IntMatrix> out;
    for (const json &m : mats) {
      if (!m.is_array() || static_cast<int>(m.size()) != a)
        throw format_error("each matrix must have a = " + std::to_string(a) + " rows");
      IntMatrix mat(a, b);
      for (int r = 0; r < a; ++r) {
        if (!m[r].is_array() || static_cast<int>(m[r].size()) != b)
          throw format_error("each row must have b = " + std::to_string(b) + " entries");
        for (int col = 0; col < b; ++col) {
          std::int64_t v = m[r][col].get<std::int64_t>();
          if (v > INT32_MAX || v < INT32_MIN)
            throw format_error("matrix entry out of range");
          mat(r, col) = v;
        }
      }
      out.push_back(std::move(mat));
    }
    return BilinearMap(a, b, c, std::move(out));
  } catch (const json::exception &e) {
    throw format_error(std::string("malformed bilinear map: ") + e.what());
  }
}

inline json to_json(const RegularMapCertificate &c) {
  return {{"normed", c.normed}, {"nice", c.nice}, {"binom_odd", c.binom_odd}};
}

inline json to_json(const RegularMapSpec &s) {
  json j = to_json(s.bilinear);
  j["n"] = s.n;
  j["m"] = s.m;
  j["scale"] = RegularMapSpec::scale;
  j["sphere"] = RegularMapSpec::sphere;
  j["certificate"] = to_json(s.certificate);
  return j;
}

inline json to_json(const NiceDerivation &d) {
  json steps = json::array();
  for (const auto &s : d.steps)
    steps.push_back(s.to_string());
  return {{"target", {d.target.first, d.target.second}}, {"steps", std::move(steps)}};
}

inline NiceDerivation derivation_from_json(const json &j) {
  try {
    NiceDerivation d;
    const json &t = j.at("target");
    if (!t.is_array() || t.size() != 2)
      throw format_error("\"target\" must be [n, m]");
    d.target = {t[0].get<int>(), t[1].get<int>()};
    for (const json &s : j.at("steps"))
      d.steps.push_back(DerivationStep::parse(s.get<std::string>()));
    return d;
  } catch (const json::exception &e) {
    throw format_error(std::string("malformed derivation: ") + e.what());
  }
}

inline json to_json(const SubgroupReport &s) {
  return {{"ambient", to_json(s.ambient)}, {"index", index_json(s.index)}};
}

inline json to_json(const ProductKGroupReport &r) {
  return {{"field", to_string(r.field)},
          {"n", r.n},
          {"m", r.m},
          {"wedge", to_json(r.wedge)},
          {"factors", {to_json(r.factors[0]), to_json(r.factors[1])}}};
}

inline json to_json(const DegreeStatus &st) {
  json ev = {{"rule", st.evidence.rule}, {"binom_odd", st.evidence.binom_odd}};
  if (st.evidence.derivation)
    ev["derivation"] = to_json(*st.evidence.derivation);
  if (st.evidence.obstructed_pair)
    ev["obstructed_pair"] = {st.evidence.obstructed_pair->first, st.evidence.obstructed_pair->second};
  if (st.evidence.witness)
    ev["witness"] = to_string(*st.evidence.witness);
  if (is_unknown(st.verdict))
    ev["conjecture_prediction"] = st.evidence.binom_odd ? "AllDegrees" : "EvenDegreesOnly";
  return {{"n", st.n}, {"m", st.m}, {"verdict", to_string(st.verdict)}, {"evidence", std::move(ev)}};
}

inline json to_json(const AuditReport &r) {
  json v = json::array();
  for (const auto &x : r.violations)
    v.push_back({{"n", x.n}, {"m", x.m}, {"message", x.message}});
  return {{"bound", r.bound}, {"pairs", r.pairs}, {"violations", std::move(v)}};
}

} // namespace kosphere
