#include "robertson/loewner.hpp"

#include <climits>
#include <cmath>
#include <optional>

namespace robertson {

ChainSample chain_eval_closed(const FunctionSpec& f, double lambda, double t, cplx z) {
  check_lambda(lambda);
  if (!(t >= 0.0)) throw PreconditionError("chain parameter t must be >= 0");
  const double shrink = std::exp(-t);
  const cplx u = shrink * z;
  if (!(std::abs(u) < 1.0)) throw DomainError("chain needs e^{-t}|z| < 1");

  const Jet2 j = f.jet_unchecked(u);
  const cplx rot = std::polar(1.0, -2.0 * lambda);  // e^{-2i lambda}
  const double sinh2 = 2.0 * std::sinh(t);          // e^t - e^{-t}
  const double cosh2 = 2.0 * std::cosh(t);          // e^t + e^{-t}

  ChainSample s;
  s.t = t;
  s.z = z;
  s.f_t = j.v0 - rot * sinh2 * z * j.v1;
  s.df_dt = -u * j.v1 - rot * (cosh2 * z * j.v1 - sinh2 * z * u * j.v2);
  s.df_dz = shrink * j.v1 - rot * sinh2 * (j.v1 + shrink * z * j.v2);
  // df_dt / z, analytic through z = 0.
  const cplx dt_over_z = -shrink * j.v1 - rot * (cosh2 * j.v1 - sinh2 * u * j.v2);
  // vanishing up to cancellation in the two terms
  const double size = std::abs(shrink * j.v1) + sinh2 * std::abs(j.v1 + shrink * z * j.v2);
  if (std::abs(s.df_dz) <= 1e-14 * size) {
    throw DegenerateError("chain derivative df_t/dz vanishes", z);
  }
  s.p = dt_over_z / s.df_dz;
  return s;
}

ChainSample chain_eval(const FunctionSpec& f, double lambda, double t, cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("chain_eval requires |z| < 1");
  return chain_eval_closed(f, lambda, t, z);
}

std::vector<double> default_t_values() { return {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0}; }

MembershipReport chain_positivity_report(const FunctionSpec& f, double lambda,
                                         const std::vector<double>& t_values,
                                         const GridSpec& grid, double tol) {
  check_lambda(lambda);
  MembershipReport total;
  total.functional = "Re p_t(z)";
  total.grid = grid;
  total.margin_tolerance = tol;
  total.min_value = INFINITY;
  for (double t : t_values) {
    auto part = sweep_grid(total.functional, grid, tol, [&](cplx z) -> std::optional<double> {
      try {
        return chain_eval(f, lambda, t, z).p.real();
      } catch (const DegenerateError&) {
        return std::nullopt;
      }
    });
    merge_into(total, part, t);
  }
  if (total.verdict != Verdict::Fail && !(total.min_value > tol)) {
    total.verdict = Verdict::PassBoundary;
  }
  return total;
}

double eq43_lhs(const FunctionSpec& f, double lambda, double t, cplx z) {
  check_lambda(lambda);
  const cplx u = std::exp(-t) * z;
  if (!(std::abs(u) < 1.0)) throw DomainError("eq43_lhs needs e^{-t}|z| < 1");
  const Jet2 j = f.jet_unchecked(u);
  if (j.v1 == 0.0) throw DegenerateError("f' vanishes at e^{-t} z", z);
  const double decay = std::exp(-2.0 * t);
  const double grow = -std::expm1(-2.0 * t);  // 1 - e^{-2t}
  return std::abs(decay * std::polar(1.0, 2.0 * lambda) + 1.0 -
                  grow * (1.0 + u * j.v2 / j.v1));
}

MembershipReport eq43_report(const FunctionSpec& f, double lambda,
                             const std::vector<double>& t_values, const GridSpec& grid,
                             double tol) {
  MembershipReport total;
  total.functional = "1 - |e^{-2t}e^{2i lambda} + 1 - (1 - e^{-2t})(1 + u f''/f')|";
  total.grid = grid;
  total.margin_tolerance = tol;
  total.min_value = INFINITY;
  for (double t : t_values) {
    auto part = sweep_grid(total.functional, grid, tol, [&](cplx z) -> std::optional<double> {
      if (std::abs(z) >= 1.0) return std::nullopt;
      try {
        return 1.0 - eq43_lhs(f, lambda, t, z);
      } catch (const DegenerateError&) {
        return std::nullopt;
      }
    });
    merge_into(total, part, t);
  }
  return total;
}

HerglotzSpec HerglotzSpec::unit() { return mobius(0.0, 0.0, 1); }

HerglotzSpec HerglotzSpec::mobius(double lambda, cplx phi, int n) {
  check_lambda(lambda);
  if (n < 1) throw PreconditionError("mobius power must be >= 1");
  HerglotzSpec p;
  p.lambda_ = lambda;
  p.phi_ = phi;
  p.power_ = n;
  return p;
}

HerglotzSpec HerglotzSpec::taylor(std::vector<cplx> coeffs) {
  if (coeffs.empty() || coeffs.front() != cplx{1.0, 0.0}) {
    throw PreconditionError("p must satisfy p(0) = 1");
  }
  HerglotzSpec p;
  p.is_mobius_ = false;
  p.coeffs_ = std::move(coeffs);
  return p;
}

cplx HerglotzSpec::operator()(cplx z) const {
  if (is_mobius_) {
    const cplx w = phi_ * std::pow(z, power_);
    return (1.0 + std::polar(1.0, 2.0 * lambda_) * w) / (1.0 - w);
  }
  cplx acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

int HerglotzSpec::vanishing_order() const {
  if (is_mobius_) {
    // leading term (1 + e^{2i lambda}) phi z^n, and 1 + e^{2i lambda} != 0
    return phi_ == 0.0 ? INT_MAX : power_;
  }
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0.0) return static_cast<int>(k);
  }
  return INT_MAX;
}

MembershipReport herglotz_disk_check(const HerglotzSpec& p, double lambda,
                                     const GridSpec& grid, double tol) {
  check_lambda(lambda);
  const cplx e2 = std::polar(1.0, 2.0 * lambda);
  return sweep_grid("radius(r) - |p(z) - center(r)|", grid, tol, [&](cplx z) {
    const double r2 = std::norm(z);
    const cplx center = (1.0 + r2 * e2) / (1.0 - r2);
    const double radius = 2.0 * std::sqrt(r2) * std::cos(lambda) / (1.0 - r2);
    return std::optional<double>(radius - std::abs(p(z) - center));
  });
}

MembershipReport lemma_b_check(const HerglotzSpec& p, int n, const GridSpec& grid,
                               double tol) {
  if (n < 1) throw PreconditionError("lemma_b_check needs n >= 1");
  if (p.vanishing_order() < n) {
    throw PreconditionError("p has a nonzero Taylor coefficient below z^n");
  }
  return sweep_grid("2|z|^n/(1-|z|^2n) - |p - 1 - 2|z|^2n/(1-|z|^2n)|", grid, tol,
                    [&](cplx z) {
                      const double rn = std::pow(std::abs(z), n);
                      const double rho = rn * rn;
                      const double shift = 2.0 * rho / (1.0 - rho);
                      const double radius = 2.0 * rn / (1.0 - rho);
                      return std::optional<double>(radius - std::abs(p(z) - 1.0 - shift));
                    });
}

}  // namespace robertson
