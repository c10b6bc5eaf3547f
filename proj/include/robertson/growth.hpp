#pragma once

#include <optional>
#include <vector>

#include "robertson/analytic.hpp"
#include "robertson/grid.hpp"

namespace robertson {

/// Sharp bounds psi_lo <= |f(z)| <= psi_hi on |z| = r for lambda-spirallike f,
/// attained by P_lambda at r e^{i theta_lo} and r e^{i theta_hi}.
struct GrowthEnvelope {
  double r = 0.0;
  double psi_lo = 0.0;
  double psi_hi = 0.0;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  // Closed-form evaluations of the same two numbers.
  double psi_lo_closed = 0.0;
  double psi_hi_closed = 0.0;
};

GrowthEnvelope growth_bounds(double lambda, double r);

/// Integrand of the boundedness estimate,
/// exp(sin 2l asin(t sin l)) / (sqrt(1 - t^2 sin^2 l) - t cos l)^{2 cos^2 l}.
double boundedness_integrand(double lambda, double t);

/// I(r) = integral_0^r of the integrand above. r = 1 is accepted when the
/// endpoint exponent 2cos^2(lambda) is below 1; otherwise DivergenceError.
double boundedness_integral(double lambda, double r, double abs_tol = 1e-10);

/// 2 cos^2(lambda) >= 1 within rounding, i.e. the t = 1 singularity is not integrable.
bool boundedness_integral_diverges(double lambda);

/// g(s) cos(lambda) / s with g(s) = sqrt(1 - (1-s)^2 sin^2 l) - (1-s) cos l,
/// evaluated without cancellation. Tends to 1 as s -> 0.
double asymptotic_check(double lambda, double s);

/// The positive root of 16x^3 + 16x^2 + x - 1 by bisection on [0, 1].
double cubic_root_x0();
double x0_polynomial(double x);

/// mu with mu + 1 = |mu + 1| e^{i lambda}, |mu| <= 1, |mu + 1| > 1, |mu - 1| > 1.
/// Needs 1/2 < cos lambda < 1; throws NoAdmissibleError otherwise.
cplx royster_mu(double lambda);

struct CollisionOptions {
  double separation = 0.05;      // minimum |z1 - z2|
  double collision_tol = 1e-4;   // grid-stage match, relative to 1 + |f(z1)|
  double refine_tol = 1e-10;     // accepted residual after refinement, relative
  int max_candidates = 4096;
  int descent_iterations = 200;
};

struct CollisionPair {
  cplx z1;
  cplx z2;
  double residual;  // |f(z1) - f(z2)|
};

/// Looks for two well-separated points with the same image, a certificate that
/// f is not univalent. Grid pairs whose images are within tolerance (or within
/// the local image-cell size) are refined by coordinate descent followed by a
/// Newton polish of z2. nullopt means no pair survived refinement.
std::optional<CollisionPair> collision_search(const FunctionSpec& f, const GridSpec& grid,
                                              const CollisionOptions& options = {});

}  // namespace robertson
