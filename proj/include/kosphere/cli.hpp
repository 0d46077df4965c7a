/**
 * @brief The kosphere command-line front end as a testable function.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or input error, 3 unknown
 * classification (or no certificate found). Data goes to `out`, diagnostics to `err`.
 */
#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classifier.hpp"
#include "ideal.hpp"
#include "json_io.hpp"
#include "nice.hpp"
#include "notation.hpp"
#include "render.hpp"
#include "sampling.hpp"
#include "sphere_invariants.hpp"

namespace kosphere::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, Usage = 2, Unknown = 3 };

struct Options {
  std::string format;
  std::size_t budget = SearchBudget{}.max_expansions;
  std::uint64_t seed = 20240501;
  bool check = false;
  int samples = 100;
};

namespace detail {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline OutputFormat format_or(const Options &o, OutputFormat fallback) {
  if (o.format.empty())
    return fallback;
  auto f = parse_format(o.format);
  if (!f)
    throw usage_error("unknown format '" + o.format + "' (expected md, csv, json or text)");
  return *f;
}

inline std::string read_input(const std::string &path, std::istream &in) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f)
    throw usage_error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline json read_json(const std::string &path, std::istream &in) {
  try {
    return json::parse(read_input(path, in));
  } catch (const json::parse_error &e) {
    throw usage_error("invalid JSON in '" + path + "': " + e.what());
  }
}

inline std::string index_text(const GroupIndex &i) { return i.to_string(); }

inline std::string group_text(const GroupDescriptor &g) {
  if (g.kind == GroupKind::Trivial)
    return "0";
  return std::string(g.kind == GroupKind::InfiniteCyclic ? "Z" : "Z/2") + "<" + g.generator + ">";
}

inline int cmd_coeff(const Options &o, const std::string &expr, const std::string &map, std::ostream &out) {
  CoefficientValue v = parse_coefficient(expr);
  if (map == "realify" || map == "quaternionify") {
    const KUElement *x = std::get_if<KUElement>(&v);
    KUElement zero;
    if (!x && std::holds_alternative<KOElement>(v) && std::get<KOElement>(v).is_zero())
      x = &zero;
    if (!x)
      throw usage_error(map + " expects a KU element (b^k terms)");
    v = map == "realify" ? CoefficientValue{realify(*x)} : CoefficientValue{quaternionify(*x)};
  } else if (map == "theta") {
    const KSpElement *x = std::get_if<KSpElement>(&v);
    if (!x)
      throw usage_error("theta expects a KSp element (terms ending in *th)");
    v = theta_mul(*x);
  } else if (!map.empty()) {
    throw usage_error("unknown map '" + map + "' (expected realify, quaternionify or theta)");
  }

  if (format_or(o, OutputFormat::Text) == OutputFormat::Json) {
    json j = {{"ring", ring_name(v)}, {"value", to_string(v)}};
    if (auto *ko = std::get_if<KOElement>(&v); ko && ko->degree()) {
      j["degree"] = ko->degree()->value;
      j["group"] = to_json(ko_group(*ko->degree()));
    }
    out << j.dump() << '\n';
  } else {
    out << to_string(v) << '\n';
  }
  return Ok;
}

inline int cmd_ideal(const Options &o, const std::string &spec, std::int64_t degree, std::ostream &out) {
  HomogeneousIdeal j = parse_ideal(spec);
  DegreePart part = ideal_part(j, KODegree{degree});
  if (format_or(o, OutputFormat::Text) == OutputFormat::Json) {
    json r = to_json(part);
    r["ideal"] = to_string(j);
    out << r.dump() << '\n';
  } else {
    out << part.describe() << " in " << group_text(ko_group(KODegree{degree})) << " (index "
        << index_text(part.index()) << ")\n";
  }
  return Ok;
}

inline int cmd_phi(const Options &o, std::int64_t n, std::int64_t m, std::ostream &out) {
  PhiValue v = phi(n, m);
  if (format_or(o, OutputFormat::Text) == OutputFormat::Json)
    out << json{{"n", n}, {"m", m}, {"phi", phi_json(v)}}.dump() << '\n';
  else
    out << to_string(v) << '\n';
  return Ok;
}

inline int cmd_table(const Options &o, const PhiTable &computed, const PhiTable &reference, const char *name,
                     std::ostream &out, std::ostream &err) {
  int code = Ok;
  if (o.check) {
    for (int n = 0; n < 8; ++n)
      for (int m = 0; m < 8; ++m)
        if (computed[n][m] != reference[n][m]) {
          err << name << " mismatch at (" << n << "," << m << "): computed " << to_string(computed[n][m])
              << ", reference " << to_string(reference[n][m]) << '\n';
          code = VerificationFailed;
        }
    if (code == Ok)
      err << name << ": all 64 entries match the reference table\n";
  }
  out << render_table(computed, format_or(o, OutputFormat::Markdown));
  return code;
}

inline int cmd_kgroups(const Options &o, std::int64_t n, std::int64_t m, const std::string &field, std::ostream &out) {
  auto f = parse_field(field);
  if (!f)
    throw usage_error("field must be R, C or H");
  ProductKGroupReport r = kgroups_product(n, m, *f);
  if (format_or(o, OutputFormat::Text) == OutputFormat::Json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << "G has index " << index_text(r.wedge.index) << " in " << group_text(r.wedge.ambient) << "; factors "
        << group_text(r.factors[0].ambient) << " + " << group_text(r.factors[1].ambient) << " (full)\n";
  }
  return Ok;
}

inline int cmd_classify(const Options &o, int n, int m, std::ostream &out) {
  DegreeStatus st = classify(n, m, SearchBudget{o.budget});
  if (format_or(o, OutputFormat::Text) == OutputFormat::Json)
    out << to_json(st).dump() << '\n';
  else
    out << summary(st) << '\n';
  return is_unknown(st.verdict) ? Unknown : Ok;
}

inline int cmd_classify_range(const Options &o, int bound, std::ostream &out) {
  OutputFormat fmt = format_or(o, OutputFormat::Text);
  json all = json::array();
  if (fmt == OutputFormat::Markdown)
    out << "| n | m | verdict | rule |\n|---|---|---|---|\n";
  if (fmt == OutputFormat::Csv)
    out << "n,m,verdict,rule\n";
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; m <= bound; ++m) {
      DegreeStatus st = classify(n, m, SearchBudget{o.budget});
      switch (fmt) {
      case OutputFormat::Json: all.push_back(to_json(st)); break;
      case OutputFormat::Markdown:
        out << "| " << n << " | " << m << " | " << to_string(st.verdict) << " | " << st.evidence.rule << " |\n";
        break;
      case OutputFormat::Csv: out << n << ',' << m << ',' << to_string(st.verdict) << ',' << st.evidence.rule << '\n'; break;
      case OutputFormat::Text: out << n << ' ' << m << ' ' << summary(st) << '\n'; break;
      }
    }
  if (fmt == OutputFormat::Json)
    out << all.dump() << '\n';
  return Ok;
}

inline int cmd_certify(const Options &o, int n, int m, std::ostream &out, std::ostream &err) {
  auto d = certify_nice(n, m, SearchBudget{o.budget});
  if (!d) {
    err << "(" << n << "," << m << ") not certified"
        << (binom_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)) ? " within the search budget"
                                                                                  : ": binom(n+m, n) is even")
        << '\n';
    return Unknown;
  }
  if (format_or(o, OutputFormat::Json) == OutputFormat::Json) {
    out << to_json(*d).dump() << '\n';
  } else {
    for (std::size_t i = 0; i < d->steps.size(); ++i)
      out << (i ? ", " : "") << d->steps[i].to_string();
    out << '\n';
  }
  return Ok;
}

inline int cmd_realize(const std::string &path, std::istream &in, std::ostream &out, std::ostream &err) {
  NiceDerivation d = derivation_from_json(read_json(path, in));
  BilinearMap f;
  try {
    f = realize(d);
  } catch (const invalid_derivation &e) {
    err << "invalid derivation: " << e.what() << '\n';
    return VerificationFailed;
  }
  if (d.target.first >= 1 && d.target.second >= 1)
    out << to_json(emit_regular_map(f)).dump() << '\n';
  else
    out << to_json(f).dump() << '\n';
  return Ok;
}

inline int cmd_verify_map(const Options &o, const std::string &path, std::istream &in, std::ostream &out) {
  json j = read_json(path, in);
  BilinearMap f = bilinear_from_json(j);
  bool regular = j.contains("certificate");
  int code = Ok;
  auto fail = [&](const std::string &line) {
    out << line << '\n';
    code = VerificationFailed;
  };

  if (auto v = find_normed_violation(f))
    fail("normed: FAIL " + v->describe());
  else
    out << "normed: ok\n";
  bool nice = verify_nice(f);
  if (regular && !nice)
    fail("nice: FAIL first coordinate is not x_1 y_1");
  else
    out << "nice: " << (nice ? "ok" : "no") << '\n';

  if (regular) {
    int n = f.a() - 1, m = f.b() - 1;
    if (j.value("n", -1) != n || j.value("m", -1) != m || f.c() != n + m + 1)
      fail("shape: FAIL declared (n, m) does not match the coefficient matrices");
    if (!binom_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)))
      fail("parity: FAIL binom(n+m, n) is even");
    else
      out << "parity: ok\n";
  }

  SampleReport s = (regular || nice) ? sample_shifted_identity(f, o.seed, o.samples)
                                     : sample_normed_identity(f, o.seed, o.samples);
  std::string what = (regular || nice) ? "||f||^2 = 2 f_1 on shifted spheres" : "||F||^2 = ||x||^2 ||y||^2";
  if (s.passed())
    out << "samples: " << s.samples << "/" << s.samples << " satisfy " << what << '\n';
  else
    fail("samples: FAIL " + std::to_string(s.failures) + "/" + std::to_string(s.samples) + " violate " + what +
         " (first at sample " + std::to_string(*s.first_failure) + ")");
  return code;
}

inline int cmd_audit(const Options &o, int bound, std::ostream &out) {
  AuditReport r = consistency_audit(bound, SearchBudget{o.budget});
  if (format_or(o, OutputFormat::Text) == OutputFormat::Json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << "audited " << r.pairs << " pairs, " << r.violations.size() << " violations\n";
    for (const auto &v : r.violations)
      out << "  (" << v.n << "," << v.m << "): " << v.message << '\n';
  }
  return r.clean() ? Ok : VerificationFailed;
}

} // namespace detail

inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact K-theory of spheres and regular maps S^n x S^m -> S^{n+m}", "kosphere"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format: md, csv, json or text");
  app.add_option("--budget", o.budget, "Maximum search expansions for nice-pair certification");
  app.add_option("--seed", o.seed, "Seed for rational sampling");
  app.add_option("--samples", o.samples, "Number of rational samples in verify-map")->check(CLI::PositiveNumber);
  app.add_flag("--check", o.check, "Diff computed tables against the reference tables");

  std::string expr, map, spec, field, path;
  std::int64_t n = 0, m = 0, degree = 0;
  int bound = 0;
  std::function<int()> action;
  auto sub = [&](const char *name, const char *help) {
    CLI::App *s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto dims = [&](CLI::App *s) {
    s->add_option("n", n)->required();
    s->add_option("m", m)->required();
  };
  auto positive_dims = [&](CLI::App *s) {
    s->add_option("n", n)->required()->check(CLI::Range(1, 1 << 20));
    s->add_option("m", m)->required()->check(CLI::Range(1, 1 << 20));
  };

  auto *c = sub("coeff", "Canonical form of a coefficient-ring expression");
  c->add_option("expr", expr)->required();
  c->add_option("--map", map, "Apply realify, quaternionify or theta");
  c->callback([&] { action = [&] { return detail::cmd_coeff(o, expr, map, out); }; });

  c = sub("ideal", "Degree part and index of a homogeneous ideal of KO*(pt)");
  c->add_option("spec", spec)->required();
  c->add_option("degree", degree)->required();
  c->callback([&] { action = [&] { return detail::cmd_ideal(o, spec, degree, out); }; });

  c = sub("phi", "phi(n, m)");
  dims(c);
  c->callback([&] { action = [&] { return detail::cmd_phi(o, n, m, out); }; });

  c = sub("phi-table", "The 8x8 table of phi");
  c->callback([&] {
    action = [&] { return detail::cmd_table(o, compute_phi_table(), reference_phi_table(), "phi-table", out, err); };
  });

  c = sub("order-table", "Orders of K~O^0(S^{n+m})");
  c->callback([&] {
    action = [&] {
      return detail::cmd_table(o, compute_order_table(), reference_order_table(), "order-table", out, err);
    };
  });

  c = sub("kgroups", "Algebraic K-group image for S^n x S^m over R, C or H");
  positive_dims(c);
  c->add_option("field", field)->required();
  c->callback([&] { action = [&] { return detail::cmd_kgroups(o, n, m, field, out); }; });

  c = sub("classify", "Realizable degrees of regular maps S^n x S^m -> S^{n+m}");
  positive_dims(c);
  c->callback([&] { action = [&] { return detail::cmd_classify(o, int(n), int(m), out); }; });

  c = sub("classify-range", "Classify all pairs 1 <= n, m <= N");
  c->add_option("N", bound)->required()->check(CLI::Range(1, 4096));
  c->callback([&] { action = [&] { return detail::cmd_classify_range(o, bound, out); }; });

  c = sub("certify", "Search for a nice-pair derivation of (n, m)");
  c->add_option("n", n)->required()->check(CLI::Range(0, 1 << 20));
  c->add_option("m", m)->required()->check(CLI::Range(0, 1 << 20));
  c->callback([&] { action = [&] { return detail::cmd_certify(o, int(n), int(m), out, err); }; });

  c = sub("realize", "Build the nice normed bilinear map of a derivation file ('-' for stdin)");
  c->add_option("file", path)->required();
  c->callback([&] { action = [&] { return detail::cmd_realize(path, in, out, err); }; });

  c = sub("verify-map", "Exactly verify a bilinear map or regular map file ('-' for stdin)");
  c->add_option("file", path)->required();
  c->callback([&] { action = [&] { return detail::cmd_verify_map(o, path, in, out); }; });

  c = sub("audit", "Consistency audit of all verdicts for 1 <= n, m <= N");
  c->add_option("N", bound)->required()->check(CLI::Range(1, 4096));
  c->callback([&] { action = [&] { return detail::cmd_audit(o, bound, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    return action();
  } catch (const detail::usage_error &e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  } catch (const parse_error &e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  } catch (const format_error &e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  } catch (const dimension_error &e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  } catch (const hypothesis_error &e) {
    err << "error: " << e.what() << '\n';
    return VerificationFailed;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  }
}

} // namespace kosphere::cli
