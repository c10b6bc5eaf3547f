#include "robertson/classes.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace robertson {

using std::numbers::pi;

double lambda_arg(cplx w, double lambda) {
  if (w == 0.0) throw DomainError("lambda_arg of 0");
  check_lambda(lambda);
  const double theta = std::arg(w) - std::tan(lambda) * std::log(std::abs(w));
  double reduced = std::remainder(theta, 2.0 * pi);  // [-pi, pi]
  if (reduced <= -pi) reduced += 2.0 * pi;
  return reduced;
}

std::optional<double> robertson_functional(const Jet2& jet, cplx z, double lambda) {
  if (jet.v1 == 0.0) return std::nullopt;
  return (std::polar(1.0, -lambda) * (1.0 + z * jet.v2 / jet.v1)).real();
}

std::optional<double> spirallike_functional(const Jet2& jet, cplx z, double lambda) {
  if (z == 0.0) return std::cos(lambda);
  if (jet.v0 == 0.0) return std::nullopt;
  return (std::polar(1.0, -lambda) * (z * jet.v1 / jet.v0)).real();
}

MembershipReport robertson_report(const FunctionSpec& f, double lambda,
                                  const GridSpec& grid, double tol) {
  check_lambda(lambda);
  return sweep_grid("Re e^{-i lambda}(1 + z f''/f')", grid, tol, [&](cplx z) {
    return robertson_functional(eval_jet(f, z), z, lambda);
  });
}

MembershipReport spirallike_report(const FunctionSpec& f, double lambda,
                                   const GridSpec& grid, double tol) {
  check_lambda(lambda);
  return sweep_grid("Re e^{-i lambda} z f'/f", grid, tol, [&](cplx z) {
    return spirallike_functional(eval_jet(f, z), z, lambda);
  });
}

EquivalenceReports equivalence_check(const FunctionSpec& f, double lambda,
                                     const GridSpec& grid, double tol) {
  check_lambda(lambda);
  EquivalenceReports out;
  out.robertson = robertson_report(f, lambda, grid, tol);

  // F = z f' has F' = f' + z f'', so z F'/F comes straight from the jet of f.
  out.derivative_spiral =
      sweep_grid("Re e^{-i lambda} z F'/F, F = z f'", grid, tol, [&](cplx z) {
        const Jet2 j = eval_jet(f, z);
        const Jet2 lifted{z * j.v1, j.v1 + z * j.v2, 2.0 * j.v2};
        if (z == 0.0) return std::optional<double>(std::cos(lambda));
        return spirallike_functional(lifted, z, lambda);
      });

  out.primitive_convex =
      sweep_grid("Re(1 + z g''/g'), g = int f'^alpha", grid, tol,
                 [&](cplx z) -> std::optional<double> {
                   try {
                     const auto d = alpha_primitive_derivatives(f, lambda, z);
                     return robertson_functional({0.0, d.d1, d.d2}, z, 0.0);
                   } catch (const DegenerateError&) {
                     return std::nullopt;
                   }
                 });
  return out;
}

MembershipReport monotone_lambda_arg_check(const FunctionSpec& f, double lambda,
                                           ArgForm form, const GridSpec& grid,
                                           double tol) {
  check_lambda(lambda);
  grid.validate();
  MembershipReport report;
  report.functional = form == ArgForm::Direct
                          ? "d/dtheta arg_lambda f(r e^{i theta})"
                          : "d/dtheta arg_lambda (d/dtheta f(r e^{i theta}))";
  report.grid = grid;
  report.margin_tolerance = tol;
  report.min_value = std::numeric_limits<double>::infinity();

  const int n = grid.n_theta;
  const double h = 2.0 * pi / n;
  std::vector<double> unwrapped(static_cast<std::size_t>(n));
  for (std::size_t ir = 0; ir < grid.r_values.size(); ++ir) {
    bool degenerate = false;
    double closing = 0.0;
    for (int j = 0; j <= n; ++j) {
      const cplx z = grid.point(ir, j % n);
      const Jet2 jet = eval_jet(f, z);
      const cplx w = form == ArgForm::Direct ? jet.v0 : cplx{0.0, 1.0} * z * jet.v1;
      if (w == 0.0) {
        report.degenerate_points.push_back(z);
        degenerate = true;
        break;
      }
      const double phi = lambda_arg(w, lambda);
      if (j == 0) {
        unwrapped[0] = phi;
        continue;
      }
      const double prev = unwrapped[static_cast<std::size_t>(j - 1)];
      const double step = std::remainder(phi - prev, 2.0 * pi);
      if (std::abs(step) > 0.75 * pi) {
        throw GridTooCoarseError("lambda-argument jumps by more than 3pi/4 between samples");
      }
      if (j < n) {
        unwrapped[static_cast<std::size_t>(j)] = prev + step;
      } else {
        closing = prev + step - unwrapped[0];  // net winding around the circle
      }
    }
    if (degenerate) continue;
    for (int j = 0; j < n; ++j) {
      const double next = j + 1 < n ? unwrapped[static_cast<std::size_t>(j + 1)]
                                    : unwrapped[0] + closing;
      const double before = j > 0 ? unwrapped[static_cast<std::size_t>(j - 1)]
                                  : unwrapped[static_cast<std::size_t>(n - 1)] - closing;
      const double slope = (next - before) / (2.0 * h);
      if (slope < report.min_value) {
        report.min_value = slope;
        report.argmin = grid.point(ir, j);
      }
    }
  }
  assign_verdict(report);
  return report;
}

}  // namespace robertson
