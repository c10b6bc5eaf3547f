#pragma once

#include <optional>

#include "robertson/analytic.hpp"
#include "robertson/grid.hpp"

namespace robertson {

inline constexpr double kMembershipTol = 1e-9;
inline constexpr double kFiniteDifferenceTol = 1e-6;

/// arg w - tan(lambda) ln|w|, reduced to (-pi, pi]: the rotation theta with
/// w on e^{i theta} exp(t e^{i lambda}), t real.
double lambda_arg(cplx w, double lambda);

/// Re e^{-i lambda}(1 + z f''/f'), nullopt where f' = 0.
std::optional<double> robertson_functional(const Jet2& jet, cplx z, double lambda);

/// Re e^{-i lambda} z f'/f with the value cos(lambda) at z = 0, nullopt where
/// f vanishes away from the origin.
std::optional<double> spirallike_functional(const Jet2& jet, cplx z, double lambda);

MembershipReport robertson_report(const FunctionSpec& f, double lambda,
                                  const GridSpec& grid = GridSpec::geometric(),
                                  double tol = kMembershipTol);

MembershipReport spirallike_report(const FunctionSpec& f, double lambda,
                                   const GridSpec& grid = GridSpec::geometric(),
                                   double tol = kMembershipTol);

/// The three sides of the Robertson equivalence chain, each swept on the same grid.
struct EquivalenceReports {
  MembershipReport robertson;           // f in R(lambda)
  MembershipReport derivative_spiral;   // z f'(z) in SP(lambda)
  MembershipReport primitive_convex;    // integral of f'^alpha is convex
  bool agree() const {
    return robertson.passed() == derivative_spiral.passed() &&
           robertson.passed() == primitive_convex.passed();
  }
};

EquivalenceReports equivalence_check(const FunctionSpec& f, double lambda,
                                     const GridSpec& grid = GridSpec::geometric(),
                                     double tol = kMembershipTol);

enum class ArgForm {
  Direct,      // arg_lambda f(r e^{i theta})
  Derivative,  // arg_lambda d/dtheta f(r e^{i theta})
};

/// Central-difference estimate of d/dtheta of the unwrapped lambda-argument,
/// minimized over the grid. Throws GridTooCoarseError when adjacent samples
/// jump by more than 3pi/4.
MembershipReport monotone_lambda_arg_check(const FunctionSpec& f, double lambda,
                                           ArgForm form,
                                           const GridSpec& grid = GridSpec::geometric(),
                                           double tol = kFiniteDifferenceTol);

}  // namespace robertson
