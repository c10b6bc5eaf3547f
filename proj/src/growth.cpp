#include "robertson/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include "robertson/quadrature.hpp"

namespace robertson {

using std::numbers::pi;

namespace {

double reduce_angle(double theta) {
  double r = std::remainder(theta, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

// Tail factor phi(s) with h(1 - s) = s^{-e} phi(s), e = 2cos^2(lambda).
double tail_factor(double lambda, double s) {
  const double sn = std::sin(lambda), cs = std::cos(lambda);
  const double t = 1.0 - s;
  const double root = std::sqrt(1.0 - t * t * sn * sn);
  const double e = 2.0 * cs * cs;
  return std::exp(std::sin(2.0 * lambda) * std::asin(t * sn)) *
         std::pow((root + t * cs) / (2.0 - s), e);
}

constexpr double kTailSplit = 1e-3;

}  // namespace

GrowthEnvelope growth_bounds(double lambda, double r) {
  check_lambda(lambda);
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("growth_bounds needs 0 < r < 1");
  const double sn = std::sin(lambda), cs = std::cos(lambda);
  const double a = std::asin(r * sn);

  GrowthEnvelope env;
  env.r = r;
  env.theta_hi = reduce_angle(a - lambda);
  env.theta_lo = reduce_angle(pi - a - lambda);

  const auto p = FunctionSpec::spirallike_extremal(lambda);
  env.psi_lo = std::abs(eval_jet(p, std::polar(r, env.theta_lo)).v0);
  env.psi_hi = std::abs(eval_jet(p, std::polar(r, env.theta_hi)).v0);

  const double e = 2.0 * cs * cs;
  const double root = std::sqrt(1.0 - r * r * sn * sn);
  const double spin = std::sin(2.0 * lambda) * a;
  env.psi_lo_closed = r * std::exp(-spin) / std::pow(root + r * cs, e);
  // root - r cos = (1 - r^2) / (root + r cos), free of cancellation
  env.psi_hi_closed = r * std::exp(spin) / std::pow((1.0 - r * r) / (root + r * cs), e);
  return env;
}

double boundedness_integrand(double lambda, double t) {
  const double sn = std::sin(lambda), cs = std::cos(lambda);
  const double root = std::sqrt(1.0 - t * t * sn * sn);
  const double denom = (1.0 - t * t) / (root + t * cs);
  return std::exp(std::sin(2.0 * lambda) * std::asin(t * sn)) /
         std::pow(denom, 2.0 * cs * cs);
}

bool boundedness_integral_diverges(double lambda) {
  const double cs = std::cos(lambda);
  return 2.0 * cs * cs >= 1.0 - 1e-12;
}

double boundedness_integral(double lambda, double r, double abs_tol) {
  check_lambda(lambda);
  if (!(r > 0.0 && r <= 1.0)) throw PreconditionError("boundedness_integral needs 0 < r <= 1");
  if (r == 1.0 && boundedness_integral_diverges(lambda)) {
    throw DivergenceError("integrand is not integrable at t = 1 when 2cos^2(lambda) >= 1");
  }
  auto h = [lambda](double t) { return boundedness_integrand(lambda, t); };
  if (r <= 1.0 - kTailSplit) return integrate(h, 0.0, r, abs_tol).value;

  const double head = integrate(h, 0.0, 1.0 - kTailSplit, 0.5 * abs_tol).value;
  const double s0 = 1.0 - r;
  const double cs = std::cos(lambda);
  const double e = 2.0 * cs * cs;
  double tail = 0.0;
  if (e < 1.0 - 1e-12) {
    // s = v^p with p = 1/(1-e) turns s^{-e} ds into p dv.
    const double p = 1.0 / (1.0 - e);
    auto g = [&](double v) { return p * tail_factor(lambda, std::pow(v, p)); };
    tail = integrate(g, std::pow(s0, 1.0 / p), std::pow(kTailSplit, 1.0 / p), 0.5 * abs_tol)
               .value;
  } else {
    // s = e^u; s^{1-e} phi(s) is smooth in u.
    auto g = [&](double u) {
      const double s = std::exp(u);
      return std::pow(s, 1.0 - e) * tail_factor(lambda, s);
    };
    tail = integrate(g, std::log(s0), std::log(kTailSplit), 0.5 * abs_tol).value;
  }
  return head + tail;
}

double asymptotic_check(double lambda, double s) {
  check_lambda(lambda);
  if (!(s > 0.0 && s <= 0.5)) throw PreconditionError("asymptotic_check needs 0 < s <= 0.5");
  const double sn = std::sin(lambda), cs = std::cos(lambda);
  const double t = 1.0 - s;
  const double root = std::sqrt(1.0 - t * t * sn * sn);
  // g(s) = s (2 - s) / (root + t cos)
  return cs * (2.0 - s) / (root + t * cs);
}

double x0_polynomial(double x) { return ((16.0 * x + 16.0) * x + 1.0) * x - 1.0; }

double cubic_root_x0() {
  // p'(x) = 48x^2 + 32x + 1 has both roots at negative x, so p is increasing
  // on [0, 1] and p(0) = -1 < 0 < 33 = p(1): exactly one sign change.
  const double disc = 32.0 * 32.0 - 4.0 * 48.0;
  const double larger_critical = (-32.0 + std::sqrt(disc)) / 96.0;
  if (!(larger_critical < 0.0) || !(x0_polynomial(0.0) < 0.0) || !(x0_polynomial(1.0) > 0.0)) {
    throw NumericError("cubic does not change sign exactly once on (0, 1)", 0.0);
  }
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (x0_polynomial(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

std::vector<std::string> royster_violations(cplx mu, double lambda) {
  std::vector<std::string> bad;
  if (std::abs(std::arg(mu + 1.0) - lambda) > 1e-12) bad.push_back("arg(mu + 1) = lambda");
  if (std::abs(mu) > 1.0 + 1e-12) bad.push_back("|mu| <= 1");
  if (!(std::abs(mu + 1.0) > 1.0)) bad.push_back("|mu + 1| > 1");
  if (!(std::abs(mu - 1.0) > 1.0)) bad.push_back("|mu - 1| > 1");
  return bad;
}

}  // namespace

cplx royster_mu(double lambda) {
  check_lambda(lambda);
  const double cs = std::cos(lambda);
  if (!(cs > 0.5 && cs < 1.0)) {
    throw NoAdmissibleError("royster_mu needs 1/2 < cos(lambda) < 1");
  }
  const cplx direction = std::polar(1.0, lambda);
  cplx mu = 2.0 * cs * direction - 1.0;  // = e^{2 i lambda}
  if (cs >= std::sqrt(3.0) / 2.0) {
    // |mu - 1| = 2|sin lambda| <= 1 here; scan |mu + 1| = R over (1, 2cos lambda].
    double best_margin = 0.0;
    bool found = false;
    constexpr int kSteps = 20000;
    for (int i = 1; i <= kSteps; ++i) {
      const double radius = 1.0 + (2.0 * cs - 1.0) * i / kSteps;
      const cplx cand = radius * direction - 1.0;
      const double margin = std::min({radius - 1.0, 1.0 - std::abs(cand),
                                      std::abs(cand - 1.0) - 1.0});
      if (margin > best_margin) {
        best_margin = margin;
        mu = cand;
        found = true;
      }
    }
    if (!found) {
      throw NoAdmissibleError("royster_mu: no radius in (1, 2cos lambda] satisfies |mu - 1| > 1");
    }
  }
  const auto bad = royster_violations(mu, lambda);
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "royster_mu: constraints violated:";
    for (const auto& b : bad) msg << ' ' << b << ';';
    throw NoAdmissibleError(msg.str());
  }
  return mu;
}

namespace {

struct Candidate {
  double score;
  std::size_t i, j;
  bool operator<(const Candidate& o) const { return score < o.score; }
};

struct Refiner {
  const FunctionSpec& f;
  const CollisionOptions& opt;

  bool feasible(cplx a, cplx b) const {
    return std::abs(a) < 1.0 && std::abs(b) < 1.0 && std::abs(a - b) >= opt.separation;
  }
  double gap(cplx a, cplx b) const {
    return std::norm(f.jet_unchecked(a).v0 - f.jet_unchecked(b).v0);
  }

  std::optional<CollisionPair> refine(cplx z1, cplx z2, double step) const {
    double best = gap(z1, z2);
    const cplx dirs[4] = {{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    for (int it = 0; it < opt.descent_iterations && best > 0.0; ++it) {
      bool improved = false;
      for (int c = 0; c < 4; ++c) {
        for (double sign : {1.0, -1.0}) {
          cplx a = z1, b = z2;
          (c < 2 ? a : b) += sign * step * dirs[c];
          if (!feasible(a, b)) continue;
          const double g = gap(a, b);
          if (g < best) {
            best = g;
            z1 = a;
            z2 = b;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    // Newton on f(z2) = f(z1) with z1 held fixed.
    const cplx target = f.jet_unchecked(z1).v0;
    for (int it = 0; it < 50; ++it) {
      const Jet2 j = f.jet_unchecked(z2);
      const cplx diff = j.v0 - target;
      if (std::abs(diff) <= 1e-3 * opt.refine_tol * (1.0 + std::abs(target))) break;
      if (j.v1 == 0.0) return std::nullopt;
      cplx delta = diff / j.v1;
      int halvings = 0;
      while (!feasible(z1, z2 - delta) && halvings < 30) {
        delta *= 0.5;
        ++halvings;
      }
      if (halvings == 30) return std::nullopt;
      z2 -= delta;
    }
    const double residual = std::abs(f.jet_unchecked(z2).v0 - target);
    if (!feasible(z1, z2) || !(residual <= opt.refine_tol * (1.0 + std::abs(target)))) {
      return std::nullopt;
    }
    return CollisionPair{z1, z2, residual};
  }
};

}  // namespace

std::optional<CollisionPair> collision_search(const FunctionSpec& f, const GridSpec& grid,
                                              const CollisionOptions& opt) {
  grid.validate();
  if (!(opt.separation > 0.0)) throw PreconditionError("separation must be positive");

  const std::size_t nr = grid.r_values.size();
  const double dtheta = 2.0 * pi / grid.n_theta;
  std::vector<cplx> z, w;
  std::vector<double> cell;
  z.reserve(grid.size());
  for (std::size_t ir = 0; ir < nr; ++ir) {
    const double r = grid.r_values[ir];
    const double below = r - (ir > 0 ? grid.r_values[ir - 1] : 0.0);
    const double above = ir + 1 < nr ? grid.r_values[ir + 1] - r : below;
    const double spacing = std::max({below, above, r * dtheta});
    for (int j = 0; j < grid.n_theta; ++j) {
      const cplx p = grid.point(ir, j);
      const Jet2 jet = eval_jet(f, p);
      z.push_back(p);
      w.push_back(jet.v0);
      cell.push_back(std::abs(jet.v1) * spacing);
    }
  }
  const std::size_t n = z.size();

  std::priority_queue<Candidate> best;  // max-heap on score: worst kept on top
  auto consider = [&](std::size_t i, std::size_t j) {
    const double dist = std::abs(w[i] - w[j]);
    const double tau = cell[i] + cell[j] + opt.collision_tol * (1.0 + std::abs(w[i]));
    if (dist > tau || std::abs(z[i] - z[j]) < opt.separation) return;
    const double score = dist / tau;
    if (static_cast<int>(best.size()) < opt.max_candidates) {
      best.push({score, i, j});
    } else if (score < best.top().score) {
      best.pop();
      best.push({score, i, j});
    }
  };

  // Points with very large image cells are paired by brute force; the rest
  // are swept in order of Re f with a window bounded by the largest small cell.
  std::vector<double> sorted_cells = cell;
  const auto q = sorted_cells.begin() + static_cast<std::ptrdiff_t>(0.98 * (n - 1));
  std::nth_element(sorted_cells.begin(), q, sorted_cells.end());
  const double big = *q;
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < n; ++i) (cell[i] > big ? large : small).push_back(i);

  for (std::size_t a = 0; a < large.size(); ++a) {
    const std::size_t i = large[a];
    for (std::size_t j : small) consider(i, j);
    for (std::size_t b = a + 1; b < large.size(); ++b) consider(i, large[b]);
  }
  std::sort(small.begin(), small.end(),
            [&](std::size_t a, std::size_t b) { return w[a].real() < w[b].real(); });
  for (std::size_t a = 0; a < small.size(); ++a) {
    const std::size_t i = small[a];
    const double window = cell[i] + big + opt.collision_tol * (1.0 + std::abs(w[i]));
    for (std::size_t b = a + 1; b < small.size(); ++b) {
      const std::size_t j = small[b];
      if (w[j].real() - w[i].real() > window) break;
      consider(i, j);
    }
  }

  std::vector<Candidate> ordered;
  while (!best.empty()) {
    ordered.push_back(best.top());
    best.pop();
  }
  std::reverse(ordered.begin(), ordered.end());

  const Refiner refiner{f, opt};
  for (const auto& c : ordered) {
    const double step = 0.5 * std::abs(z[c.i]) * dtheta;
    if (auto pair = refiner.refine(z[c.i], z[c.j], step)) return pair;
  }
  return std::nullopt;
}

}  // namespace robertson
