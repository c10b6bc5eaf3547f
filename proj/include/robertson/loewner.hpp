#pragma once

#include <vector>

#include "robertson/analytic.hpp"
#include "robertson/grid.hpp"

namespace robertson {

/// One sample of the chain f_t(z) = f(e^{-t}z) - e^{-2i lambda}(e^{2t}-1)e^{-t} z f'(e^{-t}z)
/// with its exact t- and z-derivatives and p = df_dt / (z df_dz).
struct ChainSample {
  double t = 0.0;
  cplx z;
  cplx f_t;
  cplx df_dt;
  cplx df_dz;
  cplx p;
};

/// Exact chain sample. |z| < 1 required; throws DegenerateError where df_dz = 0.
ChainSample chain_eval(const FunctionSpec& f, double lambda, double t, cplx z);

/// Same formulas, also valid on |z| = 1 as long as e^{-t}|z| < 1.
ChainSample chain_eval_closed(const FunctionSpec& f, double lambda, double t, cplx z);

/// Default t grid; early t dominates the positivity margin.
std::vector<double> default_t_values();

/// Re p_t(z) over t_values x grid. Pass when min > tol, PassBoundary when
/// |min| <= tol, Fail otherwise (including degenerate samples).
MembershipReport chain_positivity_report(const FunctionSpec& f, double lambda,
                                         const std::vector<double>& t_values,
                                         const GridSpec& grid = GridSpec::geometric(),
                                         double tol = 1e-9);

/// |e^{-2t}e^{2i lambda} + 1 - (1 - e^{-2t})(1 + u f''(u)/f'(u))| with u = e^{-t}z.
/// Equals |(p_t - 1)/(p_t + 1)|, so it is < 1 exactly where Re p_t > 0.
double eq43_lhs(const FunctionSpec& f, double lambda, double t, cplx z);

/// 1 - eq43_lhs over t_values x grid (Pass when min > -tol).
MembershipReport eq43_report(const FunctionSpec& f, double lambda,
                             const std::vector<double>& t_values,
                             const GridSpec& grid = GridSpec::geometric(),
                             double tol = 1e-9);

/// Analytic p with p(0) = 1 used as input to the disk inequalities.
/// Either (1 + e^{2i lambda} phi z^n) / (1 - phi z^n) or a polynomial 1 + c_1 z + ...
class HerglotzSpec {
 public:
  static HerglotzSpec unit();
  static HerglotzSpec mobius(double lambda, cplx phi, int n = 1);
  /// coeffs = {1, c_1, c_2, ...}; throws PreconditionError unless coeffs[0] == 1.
  static HerglotzSpec taylor(std::vector<cplx> coeffs);

  cplx operator()(cplx z) const;

  /// Index of the first nonzero coefficient after the constant term
  /// (a large sentinel for p == 1).
  int vanishing_order() const;

 private:
  HerglotzSpec() = default;
  bool is_mobius_ = true;
  double lambda_ = 0.0;
  cplx phi_{0.0};
  int power_ = 1;
  std::vector<cplx> coeffs_;
};

/// radius(r) - |p(z) - center(r)| with center (1 + r^2 e^{2i lambda})/(1 - r^2)
/// and radius 2 r cos(lambda) / (1 - r^2), r = |z|.
MembershipReport herglotz_disk_check(const HerglotzSpec& p, double lambda,
                                     const GridSpec& grid = GridSpec::geometric(),
                                     double tol = 1e-9);

/// radius - |p(z) - 1 - 2 rho/(1 - rho)| with rho = |z|^{2n} and
/// radius 2|z|^n / (1 - rho). Throws PreconditionError when p has a nonzero
/// coefficient below z^n.
MembershipReport lemma_b_check(const HerglotzSpec& p, int n,
                               const GridSpec& grid = GridSpec::geometric(),
                               double tol = 1e-9);

}  // namespace robertson
