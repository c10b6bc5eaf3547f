#pragma once

#include <vector>

#include "robertson/analytic.hpp"
#include "robertson/grid.hpp"

namespace robertson {

/// s (1 + z f''/f') + (1 - s) z f'/f, with H_s(0) = 1.
/// Throws DegenerateError where f' = 0, or f = 0 away from the origin.
cplx H_s(const FunctionSpec& f, cplx s, cplx z);

/// Re e^{-i lambda}(1 + z f''/f' + q z f'/f), value (1 + q) cos(lambda) at 0.
/// With q = 0 this is bit-for-bit the Robertson functional.
MembershipReport theorem3_condition_report(const FunctionSpec& f, double lambda, double q,
                                           const GridSpec& grid = GridSpec::geometric(),
                                           double tol = 1e-9);

struct AdmissibleK {
  double k;
  bool out_of_range;  // k >= 1: no quasiconformal conclusion
};

/// Least k for which the extension criterion applies:
/// 2cos(lambda) (q <= 0) or (2 + 4q)cos(lambda) (q > 0); halved to
/// cos(lambda) and (1 + 2q)cos(lambda) when f''(0) = 0.
AdmissibleK admissible_k(double lambda, double q, bool second_coeff_zero);

/// Parameters of the Hotta-type criterion: s = a + ib, free constant c, target k.
struct HottaParams {
  double a = 1.0;
  double b = 0.0;
  cplx c{0.0};
  double k = 0.0;

  cplx s() const { return {a, b}; }
  /// Throws PreconditionError unless a > 0 and 0 <= k < 1.
  void validate() const;
};

struct HottaResult {
  double lhs_max = 0.0;
  cplx argmax{};
  double M = 0.0;
  double l = 0.0;
  Verdict verdict = Verdict::Fail;
  std::vector<cplx> degenerate_points;
};

/// max over the grid of |c|z|^2 + s - a(1 - |z|^2) H_s(z)| against the bound
/// M = a k |s| + (a - 1)|s + c| (a <= 1) or k |s| (a > 1), plus the resulting
/// dilatation bound l = (2ka + (1-k^2)|b|) / ((1+k^2)a + (1-k^2)|s|).
HottaResult hotta_check(const FunctionSpec& f, const HottaParams& params,
                        const GridSpec& grid = GridSpec::geometric(), double tol = 1e-9);

/// Becker extension: f(w) on the closed disk, f_t(e^{i theta}) for
/// w = e^{t + i theta} outside.
cplx becker_extend(const FunctionSpec& f, double lambda, cplx w);

struct DilatationSample {
  cplx w;
  cplx mu;
  bool flagged = false;  // Richardson check at fd_step/2 disagreed by > 1e-3
};

struct DilatationField {
  std::vector<DilatationSample> samples;
  double max_abs_mu = 0.0;
  double fd_step = 0.0;
  std::size_t flagged = 0;
  std::size_t excluded = 0;  // |dF/dw| < 1e-10
};

/// Complex dilatation of the Becker extension measured by central differences
/// on r_inner <= |w| <= r_outer (radii spaced uniformly in log|w|).
/// r_inner defaults to 1 + 2 fd_step when passed as 0.
DilatationField dilatation_field(const FunctionSpec& f, double lambda, double r_outer,
                                 int n_r, int n_theta, double fd_step = 1e-5,
                                 double r_inner = 0.0);

}  // namespace robertson
