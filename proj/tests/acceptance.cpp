// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multifold/analytic.hpp"
#include "multifold/evolution.hpp"
#include "multifold/experiments.hpp"
#include "multifold/states.hpp"

using namespace multifold;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

std::string sci(const Real& x, int digits = 3) { return x.to_scientific(digits); }

Real uniform(std::mt19937_64& rng, double lo, double hi) {
  return Real(std::uniform_real_distribution<double>(lo, hi)(rng));
}

Real rel_dev(const Mat2& a, const Mat2& b) { return (a - b).max_abs() / max(Real(1), b.max_abs()); }

OscillatorParams random_params(std::mt19937_64& rng) {
  const Real omega = uniform(rng, 0.5, 2);
  return {uniform(rng, 0.5, 2), omega, omega * uniform(rng, 1e-5, 1e-2), uniform(rng, 0.5, 2)};
}

// Closed-form propagator written out independently of the library.
Mat2 closed_form(const Real& t, const OscillatorParams& p) {
  const Real g2 = p.gate_scale() * p.gate_scale();
  const Real mw = p.mass() * p.omega();
  const Real wt = p.omega() * t;
  return {cosh(wt), g2 / mw * sinh(wt), mw / g2 * sinh(wt), cosh(wt)};
}

Outcome propagators_from_generators() {
  PrecisionScope scope(120);
  std::mt19937_64 rng(1);
  Real worst(0);
  for (int i = 0; i < 200; ++i) {
    const OscillatorParams p = random_params(rng);
    const Real t = uniform(rng, -50, 50) / p.omega();
    const Mat2 exact = closed_form(t, p);
    worst = max(worst, rel_dev(exp_generator(inverted_generator(t, p)).matrix(), exact));
    worst = max(worst, rel_dev(inverted_propagator(t, p).matrix(), exact));
  }
  return {worst <= Real("1e-30"), "max relative deviation " + sci(worst) + " over 200 cases"};
}

Outcome symplectic_suite() {
  PrecisionScope scope(120);
  std::mt19937_64 rng(2);
  using Family = std::function<Symplectic(const Real&, const OscillatorParams&)>;
  const std::array<std::pair<const char*, Family>, 3> families{{
      {"M", inverted_propagator},
      {"M'", perturbed_propagator},
      {"M_h", harmonic_propagator},
  }};
  Real worst(0);
  for (const auto& [label, family] : families) {
    for (int i = 0; i < 200; ++i) {
      const OscillatorParams p = random_params(rng);
      const Real a = uniform(rng, -25, 25) / p.omega();
      const Real b = uniform(rng, -25, 25) / p.omega();
      const Symplectic ma = family(a, p);
      const Symplectic mb = family(b, p);
      worst = max(worst, abs(ma.matrix().det() - 1));
      worst = max(worst, rel_dev((ma * mb).matrix(), family(a + b, p).matrix()));
      worst = max(worst, rel_dev(ma.inverse().matrix(), family(-a, p).matrix()));
      worst = max(worst, rel_dev((ma * ma.inverse()).matrix(), Mat2::identity()));
    }
  }
  return {worst <= Real("1e-30"),
          "det, group law and inversion for M, M', M_h: worst " + sci(worst) + " over 600 cases"};
}

Outcome single_insertion_echo() {
  const Table t = figure(3);
  Real worst(0);
  bool monotone = true;
  Real previous(-1);
  for (const Row& r : t.rows) {
    if (r.t >= 10) worst = max(worst, abs(r.rel_error));
    if (r.t >= 12) {
      if (previous >= 0 && abs(r.rel_error) > previous) monotone = false;
      previous = abs(r.rel_error);
    }
  }
  return {worst < Real("1e-2") && monotone,
          "max |rel error| for wt>=10: " + sci(worst) +
              (monotone ? ", decays monotonically for wt>=12" : ", NOT monotone for wt>=12")};
}

Real worst_late_error(const Table& t, Real* at = nullptr) {
  Real worst(0);
  for (const Row& r : t.rows) {
    if (r.t >= 10 && abs(r.rel_error) > worst) {
      worst = abs(r.rel_error);
      if (at != nullptr) *at = r.t;
    }
  }
  return worst;
}

std::string failing_band(const Table& t) {
  Real lo(-1);
  Real hi(-1);
  for (const Row& r : t.rows) {
    if (r.t < 10 || abs(r.rel_error) < Real("1e-2")) continue;
    if (lo < 0) lo = r.t;
    hi = r.t;
  }
  if (lo < 0) return "none";
  return "[" + lo.to_string(4) + ", " + hi.to_string(4) + "]";
}

Outcome double_insertion() {
  RunOptions options;
  options.workers = 4;
  const Table echo = figure(5, options);
  const Table back = figure(7, options);
  Scenario same_side = figure_scenario(7);
  same_side.base.t_final = 20;
  same_side.name = "precursor t_s=t_f=20";
  const Table front = run_scenario(same_side, options);

  Real at_echo(0);
  const Real e_echo = worst_late_error(echo, &at_echo);
  const Real e_back = worst_late_error(back);
  const Real e_front = worst_late_error(front);

  // t_2 = 0 reduction of the leading order to the single-insertion sum.
  const OscillatorParams p = figure_scenario(5).params;
  Real reduction(0);
  Real exact_gap(0);
  for (int i = 0; i <= 100; ++i) {
    const Real t1 = (10 + Real(i) / 10) / p.omega();
    const Real two = log(rho_L_leading({0, 0, {t1, Real(0)}}, p).rho);
    const Real one = log(rho_L_leading({0, 0, {t1}}, p).rho);
    reduction = max(reduction, abs(two - one) / one);
    const Real x2 = log(rho_between(loschmidt_covariance({0, 0, {t1, Real(0)}}, p),
                                    reference_covariance(p)));
    const Real x1 = log(rho_between(loschmidt_covariance({0, 0, {t1}}, p), reference_covariance(p)));
    exact_gap = max(exact_gap, abs(x2 - x1) / x1);
  }
  const bool pass = e_echo <= Real("1e-2") && e_back <= Real("1e-2") &&
                    e_front <= Real("1e-2") && reduction <= Real("1e-6") &&
                    exact_gap <= Real("1e-6");
  std::ostringstream os;
  os << "wt>=10 max |rel error|: echo (t2=t1/2) " << sci(e_echo) << " at wt=" << at_echo.to_string(4)
     << ", band above 1e-2 " << failing_band(echo) << "; precursor ts=-tf=20 " << sci(e_back)
     << "; precursor ts=tf=20 " << sci(e_front) << "; t2=0 reduction " << sci(reduction)
     << " (leading), " << sci(exact_gap) << " (exact)";
  return {pass, os.str()};
}

Outcome quadruple_audit() {
  // Integer times with distinct digit positions keep every combination exact
  // and distinguishable.
  const TimeFold fold{0, 0, {Real(1), Real(10), Real(100), Real(1000)}};
  const OscillatorParams p = OscillatorParams::natural(1, Real("1e-3"));
  const LeadingOrder lo = rho_L_leading(fold, p);
  struct Expected {
    std::vector<int> subset;
    const char* signs;
    int sigma;
    int arg;
  };
  const std::vector<Expected> displayed{
      {{1}, "", 1, 1},
      {{1, 2}, "-", 2, 1 - 10},
      {{1, 2}, "+", 3, 1 + 10},
      {{1, 2, 3}, "-+", 3, 1 - 10 + 100},
      {{1, 2, 3}, "+-", 4, 1 + 10 - 100},
      {{1, 2, 3}, "--", 4, 1 - 10 - 100},
      {{1, 2, 3, 4}, "-+-", 4, 1 - 10 + 100 - 1000},
      {{1, 2, 3}, "++", 5, 1 + 10 + 100},
      {{1, 2, 3, 4}, "+++", 7, 1 + 10 + 100 + 1000},
  };
  int matched = 0;
  std::string mismatch;
  for (const Expected& e : displayed) {
    bool found = false;
    for (const AnalyticTerm& t : lo.terms) {
      if (t.subset == e.subset && to_string(t.pattern) == e.signs) {
        found = t.sigma == e.sigma && t.exponent_arg == Real(e.arg);
        break;
      }
    }
    if (found) {
      ++matched;
    } else {
      mismatch += std::string(" ") + e.signs + "@" + std::to_string(e.subset.size());
    }
  }
  const bool count_ok = lo.terms.size() == 41;
  return {matched == 9 && count_ok,
          std::to_string(matched) + "/9 displayed terms matched exactly, " +
              std::to_string(lo.terms.size()) + " terms in total" +
              (mismatch.empty() ? "" : "; mismatched:" + mismatch)};
}

Outcome kappa_consistency() {
  const auto pat = [](const std::string& s) {
    SignPattern out;
    for (char c : s) out.push_back(c == '+' ? Sign::kPlus : Sign::kMinus);
    return out;
  };
  const std::vector<std::pair<std::string, int>> shown{
      {"+", 0}, {"-", 1}, {"+-", 1}, {"--", 1}, {"-+", 2}, {"--+", 2}};
  int ok = 0;
  for (const auto& [s, k] : shown) ok += kappa(pat(s)) == k ? 1 : 0;
  // Coefficients of the two-insertion sum: alpha, alpha, alpha^2, alpha^3.
  const OscillatorParams p = OscillatorParams::natural(1, Real("1e-3"));
  const LeadingOrder two = rho_L_leading({0, 0, {Real(1), Real(10)}}, p);
  const std::vector<int> two_sigma{0, 1, 1, 3, 2};  // const, {1}, {2}, {1,2}+, {1,2}-
  bool two_ok = two.terms.size() == two_sigma.size();
  for (std::size_t i = 0; two_ok && i < two_sigma.size(); ++i) {
    const AnalyticTerm& t = two.terms[i];
    const int sigma = t.kind == TermKind::kConstant
                          ? 0
                          : 2 * static_cast<int>(t.subset.size()) - 1 - kappa(t.pattern);
    two_ok = sigma == two_sigma[i] && t.sigma == sigma;
  }
  const Outcome four = quadruple_audit();
  return {ok == 6 && two_ok && four.pass,
          std::to_string(ok) + "/6 kappa values, two-insertion coefficients " +
              (two_ok ? "match" : "MISMATCH") + ", four-insertion coefficients " +
              (four.pass ? "match" : "MISMATCH")};
}

Outcome harmonic_control() {
  Real worst(0);
  Real worst_ratio(0);
  for (const char* ratio : {"1e-3", "1e-4", "1e-5"}) {
    const OscillatorParams p = OscillatorParams::natural(1, Real(ratio));
    for (int i = 0; i < 64; ++i) {
      const Real t1 = 2 * Real::pi() * Real(i) / 63 / p.omega();
      const Real exact = rho_between(harmonic_precursor_covariance(t1, p),
                                     harmonic_reference_covariance(p));
      const Real closed = harmonic_precursor_rho(t1, p);
      worst = max(worst, abs(exact - closed) / closed);
      worst_ratio = max(worst_ratio, (exact - 1) / p.delta_ratio());
    }
  }
  return {worst <= Real("1e-10") && worst_ratio <= Real("2.01"),
          "max relative deviation " + sci(worst) + " over 64 points x 3 perturbations, max (rho-1)/(dw/w) " +
              worst_ratio.to_string(6)};
}

Outcome perturbative_scaling() {
  PrecisionScope scope(60);
  // Least-squares slope of log(rho - 1) against log(dw/w) at wt1 = 5.
  std::vector<Real> xs;
  std::vector<Real> ys;
  for (int i = 0; i <= 8; ++i) {
    const Real ratio = pow(Real(10), -6) * exp(log(Real(100)) * i / 8);
    const OscillatorParams p = OscillatorParams::natural(1, ratio);
    const Real rho = rho_between(loschmidt_covariance({0, 0, {Real(5)}}, p), reference_covariance(p));
    xs.push_back(log(ratio));
    ys.push_back(log(rho - 1));
  }
  Real mx(0);
  Real my(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<int>(xs.size());
  my /= static_cast<int>(xs.size());
  Real sxy(0);
  Real sxx(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const Real slope = sxy / sxx;
  return {abs(slope - 2) <= Real("0.01"),
          "log-log slope of rho_exact - 1 over dw/w in [1e-6, 1e-4] at wt1=5: " +
              slope.to_string(5) + " (target 2.00 +- 0.01)"};
}

Outcome dominant_zigzag() {
  const OscillatorParams p = OscillatorParams::natural(1, Real("1e-3"));
  const Real tstar = scrambling_time(p);
  const Real log_alpha = log(p.alpha());
  const Real& w = p.omega();
  std::mt19937_64 rng(3);
  int argmax_ok = 0;
  int bound_ok = 0;
  Real worst_gap_low(1);
  Real worst_gap_high(0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Real> points{uniform(rng, -20, 20)};
    int direction = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    for (int k = 0; k <= n; ++k) {
      points.push_back(points.back() + direction * (3 * tstar + uniform(rng, 0, 20)));
      direction = -direction;
    }
    TimeFold fold;
    fold.t_start = points.front();
    fold.t_final = points.back();
    fold.times.assign(points.begin() + 1, points.end() - 1);

    // Brute force over all 2^n subsets.
    std::size_t best_mask = 0;
    Real best = 2 * w * abs(fold.t_start - fold.t_final);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Real arg = fold.t_start / 2;
      int k = 0;
      for (int j = 0; j < n; ++j) {
        if (!(mask >> j & 1U)) continue;
        ++k;
        arg += (k % 2 == 0 ? 1 : -1) * fold.times[j];
      }
      arg += (k % 2 == 1 ? 1 : -1) * fold.t_final / 2;
      const Real value = k * log_alpha + 4 * w * abs(arg);
      if (value > best) {
        best = value;
        best_mask = mask;
      }
    }
    const bool full = best_mask == (std::size_t{1} << n) - 1;
    const DominantTerm d = dominant_term(rho_P_leading(fold, p).terms);
    if (full && d.term.subset.size() == static_cast<std::size_t>(n)) ++argmax_ok;

    const Real half_log = log(rho_P_leading(fold, p, TermDetail::kValueOnly).rho) / 2;
    const Real gap = half_log - w * (total_folded_time(fold) - 2 * n * tstar);
    worst_gap_low = min(worst_gap_low, gap);
    worst_gap_high = max(worst_gap_high, gap);
    if (gap >= 0 && gap <= Real::log2()) ++bound_ok;
  }
  return {argmax_ok == 500 && bound_ok == 500,
          "zig-zag argmax " + std::to_string(argmax_ok) + "/500, complexity gap in [0, log 2] " +
              std::to_string(bound_ok) + "/500 (observed " + sci(worst_gap_low) + " .. " +
              sci(worst_gap_high) + ")"};
}

Outcome inner_product_relation() {
  std::string detail;
  bool pass = true;
  for (const char* text : {"2", "10", "1e5", "1e20"}) {
    const Real rho(text);
    const Real gap = inner_product(rho).neg_log - (log(rho) / 2 - Real::log2());
    const bool ok = gap <= 1 / rho && gap >= 0;
    pass = pass && ok;
    detail += std::string(detail.empty() ? "" : ", ") + "rho=" + text + ": gap " + sci(gap) +
              (ok ? " <= " : " > ") + sci(1 / rho);
  }
  return {pass, detail};
}

#ifdef MULTIFOLD_CLI_PATH
std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  std::array<char, 8192> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome cli_determinism() {
  const std::string cmd = std::string(MULTIFOLD_CLI_PATH) + " figure 3";
  const std::string a = capture(cmd);
  const std::string b = capture(cmd);
  const bool pass = !a.empty() && a == b && a.find("\n2.00000000000e+01,") != std::string::npos;
  return {pass, "two runs of `figure 3`: " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT")};
}
#else
Outcome cli_determinism() { return {false, "command-line tool not built"}; }
#endif

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form propagators from generators", 5, propagators_from_generators},
      {2, "symplectic suite", 5, symplectic_suite},
      {3, "single-insertion echo vs leading order", 10, single_insertion_echo},
      {4, "double-insertion echo and precursor vs leading order", 0, double_insertion},
      {5, "four-insertion coefficient audit", 0, quadruple_audit},
      {6, "kappa and coefficient consistency", 0, kappa_consistency},
      {7, "harmonic control", 0, harmonic_control},
      {8, "perturbative scaling", 0, perturbative_scaling},
      {9, "dominant zig-zag term", 30, dominant_zigzag},
      {10, "inner-product relation", 0, inner_product_relation},
      {11, "determinism of figure output", 0, cli_determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail
              << " (" << timing << ")" << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
