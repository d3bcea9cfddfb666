#pragma once

// Command dispatch for the gchar executable, kept in a header so the tests
// can drive it in-process and inspect exit codes and output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gchar/characters.hpp"
#include "gchar/errors.hpp"
#include "gchar/gegenbauer.hpp"
#include "gchar/half_int.hpp"
#include "gchar/integrals.hpp"
#include "gchar/report.hpp"
#include "gchar/sumrule.hpp"
#include "gchar/wigner.hpp"

namespace gchar::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

inline std::string format_sig15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline void print_value(std::ostream& out, const SqrtRational& v) {
  out << to_string(v) << "\n" << format_sig15(v.to_double()) << "\n";
}

struct SumRuleArgs {
  int two_j = -1;
  int two_j_max = -1;
  std::string k = "all";
  int k_extra = 2;
  std::string form = "both";
  std::string mode = "exact";
  std::string out_path;
  std::string format = "json";
  unsigned threads = 0;
};

inline int run_sumrule(const SumRuleArgs& a, std::ostream& out, std::ostream& err) {
  if ((a.two_j < 0) == (a.two_j_max < 0)) {
    err << "sumrule: exactly one of --two-j or --two-j-max is required\n";
    return kUsage;
  }
  if (a.two_j == 0) {
    err << "sumrule: degenerate case: j = 0 makes the right-hand side 0/0\n";
    return kUsage;
  }
  if (a.two_j_max == 0) {
    err << "sumrule: --two-j-max must be >= 1\n";
    return kUsage;
  }
  std::vector<Form> forms;
  if (a.form == "both") {
    forms = {Form::CG, Form::ThreeJ};
  } else {
    forms = {parse_form(a.form)};
  }
  const Mode mode = parse_mode(a.mode);

  const int lo = a.two_j > 0 ? a.two_j : 1;
  const int hi = a.two_j > 0 ? a.two_j : a.two_j_max;
  std::vector<SweepCell> cells;
  ordered_json params = ordered_json::object();
  if (a.two_j > 0) {
    params["two_j"] = a.two_j;
  } else {
    params["two_j_max"] = a.two_j_max;
  }
  if (a.k == "all") {
    cells = sweep_cells(lo, hi, a.k_extra, forms);
    params["k"] = "all";
    params["k_extra"] = a.k_extra;
  } else {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(a.k, &used);
      if (used != a.k.size() || k < 0) throw std::invalid_argument(a.k);
    } catch (const std::exception&) {
      err << "sumrule: --k expects a non-negative integer or 'all', got '" << a.k << "'\n";
      return kUsage;
    }
    for (int tj = lo; tj <= hi; ++tj) {
      for (Form f : forms) cells.push_back({tj, k, f});
    }
    params["k"] = k;
  }
  params["form"] = a.form;
  params["mode"] = a.mode;

  const ReportDocument doc = make_document(run_cells(cells, {mode, true}, a.threads), std::move(params));
  const std::string text = a.format == "csv" ? serialize_csv(doc) : serialize_json(doc);
  std::ostream* summary = &out;
  if (a.out_path.empty()) {
    out << text;
    summary = &err;
  } else {
    std::ofstream file(a.out_path);
    if (!file) {
      err << "sumrule: cannot open " << a.out_path << " for writing\n";
      return kUsage;
    }
    file << text;
  }
  *summary << "passed " << doc.summary.passed << "/" << doc.summary.total << "\n";
  return doc.all_passed() ? kOk : kVerificationFailed;
}

struct CharArgs {
  int two_j = 0;
  int k = 0;
  int grid = 8;
};

inline int run_char(const CharArgs& a, std::ostream& out) {
  const HalfInt j = HalfInt::from_twice(a.two_j);
  if (a.grid < 1) throw DomainError("char: --omega-grid must be >= 1");
  const CharacterPoly poly = gen_character_via_gegenbauer(j, a.k);
  char line[160];
  std::snprintf(line, sizeof line, "%-22s %-22s %-22s %s\n", "omega", "via_gegenbauer", "via_cg", "abs_diff");
  out << line;
  for (int t = 1; t <= a.grid; ++t) {
    const double omega = 2.0 * std::numbers::pi * t / (a.grid + 1);
    const double g = poly(omega);
    const double c = gen_character_via_cg(j, a.k, omega);
    std::snprintf(line, sizeof line, "%-22.15g %-22.15g %-22.15g %.3e\n", omega, g, c, std::fabs(g - c));
    out << line;
  }
  return kOk;
}

struct IntegralsCheckArgs {
  int n_max = 10;
  int alpha_max = 5;
  int two_j_max = 10;
};

/// Exact closed forms against the moment integrator, plus quadrature checks.
inline int run_integrals_check(const IntegralsCheckArgs& a, std::ostream& out) {
  int failures = 0;
  auto report = [&](const std::string& name, long long checked, long long bad) {
    out << (bad == 0 ? "PASS " : "FAIL ") << name << " (" << checked - bad << "/" << checked << ")\n";
    failures += bad != 0;
  };

  long long checked = 0, bad = 0;
  for (int alpha = 1; alpha <= a.alpha_max; ++alpha) {
    for (int n = 0; n <= a.n_max; ++n) {
      const PolyRational c = gegenbauer_poly(n, alpha);
      ++checked;
      bad += gegenbauer_norm_orthogonality(n, alpha) != weighted_poly_integral(c * c, alpha - 1);
    }
  }
  report("orthogonality norm vs moments", checked, bad);

  checked = bad = 0;
  for (int alpha = 1; alpha <= a.alpha_max + 1; ++alpha) {
    for (int n = 0; n <= a.n_max + 2; ++n) {
      if (alpha == 1 && n == 0) continue;
      const PolyRational c = gegenbauer_poly(n, alpha);
      ++checked;
      bad += gegenbauer_norm_mu1(n, alpha) != weighted_poly_integral(c * c, alpha);
    }
  }
  report("mu=1 norm vs moments", checked, bad);

  checked = bad = 0;
  for (int alpha = 1; alpha <= a.alpha_max; ++alpha) {
    for (int mu = 0; mu < alpha && mu <= 3; ++mu) {
      for (int n = 0; n <= std::min(a.n_max, 8); ++n) {
        const PolyRational c = gegenbauer_poly(n, alpha);
        ++checked;
        bad += gegenbauer_norm_general(n, alpha, mu) != weighted_poly_integral(c * c, alpha + mu - 1);
      }
    }
  }
  report("general-mu norm vs moments", checked, bad);

  checked = bad = 0;
  for (int d = -4; d <= 4; ++d) {
    const auto q = quad_gauss([d](double eta) { return std::cos(2.0 * d * eta) * std::pow(std::sin(eta), 4); },
                              0.0, std::numbers::pi, 24);
    ++checked;
    bad += std::fabs(q.value - sin4_fourier(d).to_double()) > 1e-10;
  }
  report("sin^4 Fourier integral vs quadrature", checked, bad);

  checked = bad = 0;
  for (int tj = 0; tj <= a.two_j_max; ++tj) {
    for (int tjp = 0; tjp <= a.two_j_max; ++tjp) {
      for (int k = 0; k <= std::min(tj, tjp); ++k) {
        ++checked;
        const PiRational expected(tj == tjp ? BigRational(1) : BigRational(0));
        bad += gen_char_orthogonality_exact(HalfInt::from_twice(tj), HalfInt::from_twice(tjp), k) != expected;
      }
    }
  }
  report("generalized character orthogonality", checked, bad);

  return failures == 0 ? kOk : kVerificationFailed;
}

/// Entry point shared by main() and the tests. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized characters of the rotation group and an exact Clebsch-Gordan sum rule"};
  app.require_subcommand(1);

  std::vector<int> cg_args;
  auto* cg = app.add_subcommand("cg", "Exact Clebsch-Gordan coefficient <j1 m1 j2 m2 | j3 m3>");
  cg->add_option("two_values", cg_args, "2j1 2m1 2j2 2m2 2j3 2m3")->required()->expected(6);

  std::vector<int> tj_args;
  auto* threej = app.add_subcommand("threej", "Exact Wigner 3j symbol (j1 j2 j3; m1 m2 m3)");
  threej->add_option("two_values", tj_args, "2j1 2j2 2j3 2m1 2m2 2m3")->required()->expected(6);

  SumRuleArgs sr;
  auto* sumrule = app.add_subcommand("sumrule", "Verify the sum rule for one 2j or a sweep");
  auto* opt_tj = sumrule->add_option("--two-j", sr.two_j, "Single doubled angular momentum 2j");
  auto* opt_tjm = sumrule->add_option("--two-j-max", sr.two_j_max, "Sweep 2j = 1..N");
  opt_tj->excludes(opt_tjm);
  sumrule->add_option("--k", sr.k, "Rank k, or 'all' for k = 0..2j+k_extra")->capture_default_str();
  sumrule->add_option("--k-extra", sr.k_extra, "Extra ranks past 2j in 'all' mode")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sumrule->add_option("--form", sr.form, "cg, 3j or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"cg", "3j", "both"}));
  sumrule->add_option("--mode", sr.mode, "exact or float")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "float"}));
  sumrule->add_option("--out", sr.out_path, "Write the report document here instead of stdout");
  sumrule->add_option("--format", sr.format, "json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  sumrule->add_option("--threads", sr.threads, "Worker threads (0 = all cores)")->capture_default_str();

  CharArgs ch;
  auto* charc = app.add_subcommand("char", "Tabulate a generalized character by two routes");
  charc->add_option("--two-j", ch.two_j, "Doubled angular momentum 2j")->required();
  charc->add_option("--k", ch.k, "Rank k, 0 <= k <= 2j")->required();
  charc->add_option("--omega-grid", ch.grid, "Number of uniform angles in (0, 2pi)")->capture_default_str();

  IntegralsCheckArgs ic;
  auto* integrals = app.add_subcommand("integrals-check", "Closed-form integrals against exact moments");
  integrals->add_option("--n-max", ic.n_max)->capture_default_str();
  integrals->add_option("--alpha-max", ic.alpha_max)->capture_default_str();
  integrals->add_option("--two-j-max", ic.two_j_max)->capture_default_str();

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    auto h = [](int twice) { return HalfInt::from_twice(twice); };
    if (*cg) {
      const auto& v = cg_args;
      print_value(out, clebsch_gordan(h(v[0]), h(v[1]), h(v[2]), h(v[3]), h(v[4]), h(v[5])));
      return kOk;
    }
    if (*threej) {
      const auto& v = tj_args;
      print_value(out, wigner_3j({h(v[0]), h(v[1]), h(v[2]), h(v[3]), h(v[4]), h(v[5])}));
      return kOk;
    }
    if (*sumrule) return run_sumrule(sr, out, err);
    if (*charc) return run_char(ch, out);
    if (*integrals) return run_integrals_check(ic, out);
  } catch (const DegenerateCase& e) {
    err << "degenerate case: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gchar::cli
