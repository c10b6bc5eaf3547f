// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "robertson/classes.hpp"
#include "robertson/growth.hpp"
#include "robertson/loewner.hpp"
#include "robertson/qcext.hpp"

using namespace robertson;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "NOT ") + what;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double lambda_for_cos(double c) { return std::acos(c); }

// |P_lambda(r e^{i theta})| optimized around a coarse-scan winner by golden section.
double golden_extreme(const FunctionSpec& P, double r, double center, double half_width,
                      bool maximize) {
  const auto value = [&](double th) {
    const double v = std::abs(eval_jet(P, std::polar(r, th)).v0);
    return maximize ? -v : v;
  };
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = center - half_width, b = center + half_width;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = value(c), fd = value(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc, c = b - g * (b - a), fc = value(c);
    } else {
      a = c, c = d, fc = fd, d = a + g * (b - a), fd = value(d);
    }
  }
  return std::abs(eval_jet(P, std::polar(r, 0.5 * (a + b))).v0);
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const double x0 = cubic_root_x0();
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const double res = x0_polynomial(x0);
  o.require(x0 >= 0.20335 && x0 <= 0.20345, fmt("x0 = %.12f in [0.20335, 0.20345]", x0));
  o.require(std::abs(res) < 1e-10, fmt("|residual| = %.2e < 1e-10", std::abs(res)));
  o.require(ms < 1.0, fmt("runtime %.3f ms < 1 ms", ms));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto grid = GridSpec::geometric(0.99, 40, 720);
  double worst_sandwich = -1e300, worst_rel = 0.0;
  for (double lambda : {0.0, pi / 6, -pi / 6, pi / 4, -pi / 4, pi / 3, -pi / 3, 0.45 * pi,
                        -0.45 * pi}) {
    const auto P = FunctionSpec::spirallike_extremal(lambda);
    for (std::size_t ir = 0; ir < grid.r_values.size(); ++ir) {
      const double r = grid.r_values[ir];
      const auto env = growth_bounds(lambda, r);
      double lo = 1e300, hi = -1e300, th_lo = 0, th_hi = 0;
      for (int k = 0; k < grid.n_theta; ++k) {
        const double v = std::abs(eval_jet(P, grid.point(ir, k)).v0);
        worst_sandwich = std::max({worst_sandwich, env.psi_lo - v, v - env.psi_hi});
        if (v < lo) lo = v, th_lo = grid.theta(k);
        if (v > hi) hi = v, th_hi = grid.theta(k);
      }
      const double step = 2 * pi / grid.n_theta;
      const double brute_lo = golden_extreme(P, r, th_lo, step, false);
      const double brute_hi = golden_extreme(P, r, th_hi, step, true);
      worst_rel = std::max({worst_rel, std::abs(env.psi_lo_closed - brute_lo) / brute_lo,
                            std::abs(env.psi_hi_closed - brute_hi) / brute_hi});
    }
  }
  o.require(worst_sandwich <= 1e-9,
            fmt("sandwich: max excess over envelope %.2e <= 1e-9", worst_sandwich));
  o.require(worst_rel <= 1e-6,
            fmt("closed-form psi vs brute-force optimum: max rel diff %.2e <= 1e-6", worst_rel));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const double conv = lambda_for_cos(0.6);
  std::vector<double> values;
  for (int m = 3; m <= 8; ++m) values.push_back(boundedness_integral(conv, 1.0 - std::pow(10.0, -m)));
  std::vector<double> diffs;
  for (std::size_t i = 1; i < values.size(); ++i) diffs.push_back(values[i] - values[i - 1]);
  bool decreasing = true;
  for (std::size_t i = 1; i < diffs.size(); ++i) decreasing &= diffs[i] < diffs[i - 1];
  const double limit = boundedness_integral(conv, 1.0);
  o.require(decreasing, fmt("cos=0.6 successive differences decrease (%.4f ... %.4f)",
                            diffs.front(), diffs.back()));
  o.require(diffs.back() < 1e-3,
            fmt("cos=0.6 last difference %.4f < 1e-3 (I(1) = %.6f, I(1-1e-8) = %.6f)",
                diffs.back(), limit, values.back()));

  // same decades m = 3..8 as above; earlier decades are reported but not judged
  const auto f = FunctionSpec::robertson_extremal(lambda_for_cos(0.8));
  std::vector<double> mods;
  for (int m = 1; m <= 8; ++m) mods.push_back(std::abs(eval_jet(f, 1.0 - std::pow(10.0, -m)).v0));
  double min_ratio = 1e300, early = 1e300;
  for (int m = 2; m <= 8; ++m) {
    const double ratio = mods[m - 1] / mods[m - 2];
    (m > 3 ? min_ratio : early) = std::min(m > 3 ? min_ratio : early, ratio);
  }
  o.require(min_ratio >= 1.5 && std::isfinite(mods.back()),
            fmt("cos=0.8 |f(1-10^-m)|, m=3..8: min growth per decade %.3fx >= 1.5x, "
                "|f(1-1e-8)| = %.1f (m=1..3 min ratio %.3fx)",
                min_ratio, mods.back(), early));
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (double lambda : {pi / 6, pi / 3, 0.45 * pi}) {
    std::vector<double> ratios;
    for (int m = 2; m <= 6; ++m) {
      const double s = std::pow(10.0, -m);
      ratios.push_back(std::abs(asymptotic_check(lambda, s) - 1.0) / s);
    }
    const double C = *std::max_element(ratios.begin(), ratios.end());
    const double Cmin = *std::min_element(ratios.begin(), ratios.end());
    const double slope = std::log10(ratios.front() * 1e-2 / (ratios.back() * 1e-6)) / 4.0;
    const double limit = std::tan(lambda) * std::tan(lambda) / 2;
    o.require(Cmin >= 0.5 * C && std::abs(slope - 1.0) <= 0.1 &&
                  std::abs(ratios.back() - limit) <= 0.01 * limit,
              fmt("lambda=%.4f: C=%.4f, min/max %.3f, log-log slope %.3f", lambda, C, Cmin / C,
                  slope) +
                  fmt(", ratio at 1e-6 %.4f vs tan^2/2 %.4f", ratios.back(), limit));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto grid = GridSpec::geometric(0.99, 40, 360);
  std::vector<double> ts = default_t_values();
  for (double t : {3.0, 4.0}) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  const double h = 1e-6;
  for (double c : {0.1, 0.25, 0.4}) {
    const double lambda = lambda_for_cos(c);
    const auto f = FunctionSpec::robertson_extremal(lambda);
    double init = 0, pde = 0, fd = 0, min_re_p = 1e300, max_lhs = 0;
    std::size_t degenerate = 0;
    for (double t : ts) {
      for (std::size_t ir = 0; ir < grid.r_values.size(); ++ir) {
        for (int k = 0; k < grid.n_theta; ++k) {
          const cplx z = grid.point(ir, k);
          ChainSample s;
          try {
            s = chain_eval(f, lambda, t, z);
          } catch (const DegenerateError&) {
            ++degenerate;
            continue;
          }
          if (t == 0.0) {
            const cplx v = eval_jet(f, z).v0;
            init = std::max(init, std::abs(s.f_t - v) / std::max(1.0, std::abs(v)));
          }
          pde = std::max(pde, std::abs(s.df_dt - z * s.df_dz * s.p) /
                                  std::max(1.0, std::abs(s.df_dt)));
          min_re_p = std::min(min_re_p, s.p.real());
          max_lhs = std::max(max_lhs, eq43_lhs(f, lambda, t, z));
          if (t > 0.0 && k % 15 == 0) {
            const cplx d = (chain_eval(f, lambda, t + h, z).f_t -
                            chain_eval(f, lambda, t - h, z).f_t) / (2 * h);
            fd = std::max(fd, std::abs(d - s.df_dt) / std::max(1.0, std::abs(s.df_dt)));
          }
        }
      }
    }
    o.require(init <= 1e-14 && pde <= 1e-12 && min_re_p >= -1e-9 && max_lhs <= 1 - 1e-9 &&
                  fd <= 1e-6 && degenerate == 0,
              fmt("cos=%.2f: |f_0-f| %.1e, PDE %.1e, min Re p %.4f", c, init, pde, min_re_p) +
                  fmt(", max lhs %.4f, FD %.1e", max_lhs, fd));
  }
  const double neg = lambda_for_cos(0.6);
  const cplx p0 = chain_eval(FunctionSpec::robertson_extremal(neg), neg, 0.0, 0.3).p;
  const cplx expect = -1.0 - 2.0 * std::polar(1.0, -2 * neg);
  o.require(p0.real() < 0 && std::abs(p0 - expect) < 1e-12,
            fmt("negative control cos=0.6: Re p_0 = %.4f < 0", p0.real()));
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto grid = GridSpec::geometric(0.99, 40, 720);
  double worst = 0.0;
  for (double lambda : {0.0, pi / 4, 0.45 * pi}) {
    for (int j = 0; j < 8; ++j) {
      const auto p = HerglotzSpec::mobius(lambda, std::polar(1.0, 2 * pi * j / 8 + 0.1));
      const auto rep = herglotz_disk_check(p, lambda, grid, 1e-9);
      // min over the grid of radius - |p - center|; the maximum gap is found by a second sweep
      double max_gap = 0.0;
      for (std::size_t ir = 0; ir < grid.r_values.size(); ++ir) {
        const double r = grid.r_values[ir];
        const cplx center = (1.0 + r * r * std::polar(1.0, 2 * lambda)) / (1 - r * r);
        const double radius = 2 * r * std::cos(lambda) / (1 - r * r);
        for (int k = 0; k < grid.n_theta; ++k) {
          max_gap = std::max(max_gap,
                             std::abs(std::abs(p(grid.point(ir, k)) - center) - radius) /
                                 std::max(1.0, radius));
        }
      }
      worst = std::max({worst, max_gap, std::abs(rep.min_value)});
    }
  }
  o.require(worst <= 1e-9, fmt("max |LHS - RHS| (relative to max(1, RHS)) = %.2e <= 1e-9", worst));
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int n : {1, 2}) {
    const auto p = HerglotzSpec::mobius(0.0, 1.0, n);
    double worst = 0.0;
    for (int i = 1; i <= 990; ++i) {
      for (double sign : {1.0, -1.0}) {
        const double x = sign * i / 1000.0;
        if (n == 1 && sign < 0) continue;  // equality for n = 1 sits on the positive axis
        const double rho = std::pow(std::abs(x), 2 * n);
        const double lhs = std::abs(p(x) - 1.0 - 2 * rho / (1 - rho));
        const double rhs = 2 * std::pow(std::abs(x), n) / (1 - rho);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
      }
    }
    const auto rep = lemma_b_check(p, n, GridSpec::geometric(0.99, 40, 720));
    o.require(worst <= 1e-9 && rep.passed(),
              fmt("n=%.0f: max |LHS - RHS| on real axis %.2e, grid sweep ", n, worst) +
                  (rep.passed() ? "pass" : "fail"));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const double lambda = lambda_for_cos(0.25);
  HottaParams params;
  params.a = 1.0;
  params.b = 0.0;
  params.k = 0.5;
  params.c = 2.0 * params.s() * std::polar(1.0, lambda) * std::cos(lambda) - params.s();
  const auto r = hotta_check(FunctionSpec::robertson_extremal(lambda), params);
  o.require(r.verdict == Verdict::Pass && r.lhs_max <= r.M + 1e-9,
            fmt("lhs_max %.6f <= M %.6f", r.lhs_max, r.M));
  o.require(r.l == params.k, fmt("l = %.17g equals k", r.l));
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (double c : {0.1, 0.25, 0.4, 0.5}) {
    const double lambda = lambda_for_cos(c);
    const auto field =
        dilatation_field(FunctionSpec::robertson_extremal(lambda), lambda, 3.0, 100, 360, 1e-5,
                         1.001);
    bool all_below_one = field.excluded == 0;
    for (const auto& s : field.samples) all_below_one &= std::abs(s.mu) < 1.0;
    o.require(field.max_abs_mu <= 2 * c + 0.01 && all_below_one,
              fmt("cos=%.2f: max|mu| %.6f <= %.2f, all < 1, %.0f flagged", c, field.max_abs_mu,
                  2 * c + 0.01, static_cast<double>(field.flagged)));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const double lambda = lambda_for_cos(0.6);
  const cplx mu = royster_mu(lambda);
  const bool constraints = std::abs(mu) <= 1.0 + 1e-15 && std::abs(mu + 1.0) > 1.0 &&
                           std::abs(mu - 1.0) > 1.0 &&
                           std::abs(std::arg(mu + 1.0) - lambda) < 1e-14;
  o.require(constraints, fmt("mu = %.6f%+.6fi satisfies all four constraints", mu.real(), mu.imag()));
  const auto f = FunctionSpec::royster(mu);
  const auto rep = robertson_report(f, lambda);
  o.require(rep.verdict == Verdict::Pass, fmt("robertson_report min %.3e", rep.min_value));
  const auto grid = GridSpec::geometric(0.9995, 60, 720);
  const auto pair = collision_search(f, grid);
  if (pair) {
    o.require(std::abs(pair->z1 - pair->z2) >= 0.05 && pair->residual <= 1e-6,
              fmt("collision z1 = %.6f%+.6fi, z2 = %.6f%+.6fi", pair->z1.real(), pair->z1.imag(),
                  pair->z2.real(), pair->z2.imag()) +
                  fmt(", |z1-z2| %.3f, residual %.1e", std::abs(pair->z1 - pair->z2),
                      pair->residual));
  } else {
    o.require(false, "collision found for the Royster map");
  }
  const double univalent = lambda_for_cos(0.4);
  o.require(!collision_search(FunctionSpec::robertson_extremal(univalent), grid).has_value(),
            "no collision for f_lambda with cos = 0.4");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  double budget_ms;  // 0: no runtime requirement
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "x0 reproduction", criterion1, 0},
      {2, "growth-envelope sandwich", criterion2, 5000},
      {3, "boundedness dichotomy", criterion3, 2000},
      {4, "asymptotic s/cos(lambda)", criterion4, 0},
      {5, "Loewner chain suite", criterion5, 20000},
      {6, "Herglotz disk extremality", criterion6, 0},
      {7, "Lemma B equality cases", criterion7, 0},
      {8, "Hotta criterion consistency", criterion8, 0},
      {9, "measured quasiconformality", criterion9, 60000},
      {10, "Royster non-univalence", criterion10, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_ms > 0) o.require(ms < c.budget_ms, fmt("runtime %.0f ms < %.0f ms", ms, c.budget_ms));
    std::printf("[%s] %2d %s (%.0f ms): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, ms,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
