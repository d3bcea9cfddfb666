// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "gchar/characters.hpp"
#include "gchar/gegenbauer.hpp"
#include "gchar/integrals.hpp"
#include "gchar/report.hpp"
#include "gchar/sumrule.hpp"

namespace {

using namespace gchar;

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
BigRational q(long long n, long long d = 1) { return make_rational(n, d); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gchar_acceptance_" + name)).string();
}

int run_cli(std::vector<std::string> args, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

// 1. Full exact sweep 2j = 1..20, k = 0..2j+2, both forms, under 10 s.
Outcome main_sum_rule() {
  const std::string path = temp_path("main.json");
  const auto start = std::chrono::steady_clock::now();
  const int code = run_cli({"sumrule", "--two-j-max", "20", "--form", "both", "--mode", "exact", "--out", path});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const ReportDocument doc = parse_json(slurp(path));
  std::remove(path.c_str());
  long long expected = 0;
  for (int tj = 1; tj <= 20; ++tj) expected += 2 * (tj + 3);  // k in 0..tj+2, two forms
  bool exact = true;
  for (const auto& r : doc.reports) exact = exact && r.lhs && *r.lhs == r.rhs && r.pass;
  const bool ok = code == 0 && doc.summary.total == expected && doc.summary.passed == expected && exact &&
                  seconds < 10.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%lld/%lld reports exact-equal (expected %lld), %.2f s", doc.summary.passed,
                doc.summary.total, expected, seconds);
  return {ok, buf};
}

// 2. Spot values.
Outcome spot_values() {
  const bool ok = lhs_cg_exact(h(2), 0) == q(1, 6) && rhs_cg(h(2), 0) == q(1, 6) &&
                  lhs_cg_exact(h(2), 2) == q(7, 24) && rhs_cg(h(2), 2) == q(7, 24) &&
                  lhs_3j_exact(h(2), 0) == q(1, 18) && rhs_3j(h(2), 0) == q(1, 18) &&
                  lhs_cg_exact(h(1), 0) == q(1, 6) && rhs_cg(h(1), 0) == q(1, 6);
  return {ok, "j=1,k=0 -> 1/6; j=1,k=2 -> 7/24; 3j j=1,k=0 -> 1/18; j=1/2,k=0 -> 1/6"};
}

// 3. Generalized-character orthogonality, zero tolerance.
Outcome character_orthogonality() {
  long long checked = 0, bad = 0;
  for (int tj = 0; tj <= 10; ++tj) {
    for (int tjp = 0; tjp <= 10; ++tjp) {
      for (int k = 0; k <= std::min(tj, tjp); ++k) {
        ++checked;
        bad += gen_char_orthogonality_exact(h(tj), h(tjp), k) != PiRational(q(tj == tjp ? 1 : 0));
      }
    }
  }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact"};
}

// 4. Closed-form Gegenbauer norms against the moment integrator.
Outcome gegenbauer_norms() {
  long long checked = 0, bad = 0;
  for (int a = 1; a <= 5; ++a) {
    for (int n = 0; n <= 10; ++n) {
      const PolyRational c = gegenbauer_poly(n, a);
      checked += 2;
      bad += gegenbauer_norm_orthogonality(n, a) != weighted_poly_integral(c * c, a - 1);
      bad += gegenbauer_norm_general(n, a, 0) != gegenbauer_norm_orthogonality(n, a);
    }
  }
  for (int a = 1; a <= 6; ++a) {
    for (int n = 0; n <= 12; ++n) {
      if (a == 1 && n == 0) continue;
      const PolyRational c = gegenbauer_poly(n, a);
      ++checked;
      bad += gegenbauer_norm_mu1(n, a) != weighted_poly_integral(c * c, a);
    }
  }
  for (int a = 1; a <= 5; ++a) {
    for (int mu = 0; mu <= 3 && mu < a; ++mu) {
      for (int n = 0; n <= 8; ++n) {
        const PolyRational c = gegenbauer_poly(n, a);
        ++checked;
        bad += gegenbauer_norm_general(n, a, mu) != weighted_poly_integral(c * c, a + mu - 1);
      }
    }
  }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact"};
}

// 5. Specialized Gegenbauer integral: closed form vs moment integrator.
Outcome specialized_integral_chain() {
  long long checked = 0, bad = 0;
  for (int tj = 1; tj <= 12; ++tj) {
    for (int k = 0; k <= tj; ++k) {
      const PolyRational c = gegenbauer_poly(tj - k, k + 1);
      const PiRational moments = weighted_poly_integral(c * c, k + 1);
      checked += 3;
      bad += specialized_integral_closed(h(tj), k) != moments;
      bad += gegenbauer_norm_mu1(tj - k, k + 1) != moments;
      bad += chain_fourier_side(h(tj), k) != chain_gegenbauer_side(h(tj), k, moments);
    }
  }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact"};
}

// 6. sin^4 Fourier weights, exact and by quadrature.
Outcome sin4_weights() {
  bool ok = sin4_fourier(0) == PiRational(q(3, 8)) && sin4_fourier(1) == PiRational(q(-1, 4)) &&
            sin4_fourier(-1) == PiRational(q(-1, 4)) && sin4_fourier(2) == PiRational(q(1, 16)) &&
            sin4_fourier(-2) == PiRational(q(1, 16));
  for (int d = 3; d <= 10; ++d) ok = ok && sin4_fourier(d) == PiRational() && sin4_fourier(-d) == PiRational();
  for (int d = -10; d <= 10; ++d) ok = ok && sin4_fourier(d) == PiRational(q(3, 2) * phase(d) * weight_exact(d));
  double worst = 0.0;
  for (int d = -4; d <= 4; ++d) {
    const auto r = quad_gauss([d](double e) { return std::cos(2.0 * d * e) * std::pow(std::sin(e), 4); }, 0.0,
                              std::numbers::pi, 24);
    worst = std::max(worst, std::fabs(r.value - sin4_fourier(d).to_double()));
  }
  ok = ok && worst <= 1e-10;
  char buf[96];
  std::snprintf(buf, sizeof buf, "exact values ok, max quadrature deviation %.1e (tol 1e-10)", worst);
  return {ok, buf};
}

// 7. Three routes to the generalized character.
Outcome route_agreement() {
  long long poly_bad = 0, poly_checked = 0;
  for (int tj = 0; tj <= 12; ++tj) {
    for (int k = 0; k <= tj; ++k) {
      ++poly_checked;
      poly_bad += !(gen_character_via_derivative(h(tj), k) == gen_character_via_gegenbauer(h(tj), k));
    }
  }
  double worst = 0.0;
  for (int tj = 0; tj <= 10; ++tj) {
    for (int k = 0; k <= tj; ++k) {
      const CharacterPoly p = gen_character_via_gegenbauer(h(tj), k);
      for (int t = 1; t <= 25; ++t) {
        const double w = 2 * std::numbers::pi * t / 26;
        const double ref = p(w);
        worst = std::max(worst, std::fabs(gen_character_via_cg(h(tj), k, w) - ref) / std::max(1.0, std::fabs(ref)));
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%lld/%lld polynomials identical, max pointwise rel. deviation %.1e (tol 1e-12)",
                poly_checked - poly_bad, poly_checked, worst);
  return {poly_bad == 0 && worst <= 1e-12, buf};
}

// 8. Degenerate gates.
Outcome degenerate_gates() {
  std::string err;
  const bool cli_j0 = run_cli({"sumrule", "--two-j", "0"}, &err) == 2 && err.find("degenerate") != std::string::npos;
  bool zero_cells = true;
  for (int tj = 1; tj <= 20; ++tj) {
    for (int k = tj + 1; k <= tj + 2; ++k) {
      for (Form f : {Form::CG, Form::ThreeJ}) {
        const SumRuleReport r = verify(h(tj), k, f);
        zero_cells = zero_cells && r.pass && *r.lhs == 0 && r.rhs == 0;
      }
    }
  }
  bool mu1_degenerate = false;
  try {
    gegenbauer_norm_mu1(0, 1);
  } catch (const DegenerateCase&) {
    mu1_degenerate = true;
  }
  const bool true_value = weighted_poly_integral(PolyRational({q(1)}), 1) == PiRational(q(3, 8));
  return {cli_j0 && zero_cells && mu1_degenerate && true_value,
          std::string("cli j=0 exit 2: ") + (cli_j0 ? "yes" : "no") + ", k>2j cells 0=0: " +
              (zero_cells ? "yes" : "no") + ", mu=1 (n=0, alpha=1) DegenerateCase: " + (mu1_degenerate ? "yes" : "no") +
              ", moments give 3pi/8: " + (true_value ? "yes" : "no")};
}

// 9. Byte-identical JSON across worker counts (generated_at, elapsed excluded).
Outcome determinism() {
  const std::string a = temp_path("det1.json"), b = temp_path("det4.json");
  const int ca = run_cli({"sumrule", "--two-j-max", "20", "--form", "both", "--threads", "1", "--out", a});
  const int cb = run_cli({"sumrule", "--two-j-max", "20", "--form", "both", "--threads", "4", "--out", b});
  const std::string ja = deterministic_json(parse_json(slurp(a)));
  const std::string jb = deterministic_json(parse_json(slurp(b)));
  std::remove(a.c_str());
  std::remove(b.c_str());
  return {ca == 0 && cb == 0 && ja == jb, "threads 1 vs 4, " + std::to_string(ja.size()) + " bytes compared"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 main sum rule, exact sweep 2j<=20", main_sum_rule},
      {"AC2 spot values", spot_values},
      {"AC3 generalized-character orthogonality", character_orthogonality},
      {"AC4 Gegenbauer norm closed forms", gegenbauer_norms},
      {"AC5 specialized integral chain", specialized_integral_chain},
      {"AC6 sin^4 Fourier weights", sin4_weights},
      {"AC7 character route agreement", route_agreement},
      {"AC8 degenerate gates", degenerate_gates},
      {"AC9 determinism across worker counts", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
