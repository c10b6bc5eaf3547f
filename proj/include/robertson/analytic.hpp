#pragma once

#include <string>
#include <variant>
#include <vector>

#include "robertson/errors.hpp"
#include "json.hpp"

namespace robertson {

/// exp(alpha * Log w) with the principal logarithm, Im Log w in (-pi, pi].
/// w = 0 gives 0 when Re alpha > 0 and throws DomainError otherwise.
cplx principal_pow(cplx w, cplx alpha);

/// Log w with Im in (-pi, pi]; -pi is mapped to +pi.
cplx principal_log(cplx w);

/// log(1 + w) without cancellation for small |w| (principal branch).
cplx log1p(cplx w);

/// exp(w) - 1 without cancellation for small |w|.
cplx expm1(cplx w);

/// Value, first and second derivative of an analytic function at a point.
struct Jet2 {
  cplx v0;
  cplx v1;
  cplx v2;
};

namespace kinds {

/// f(z) = ((1-z)^{1-2e^{i lambda} cos lambda} - 1) / (2e^{i lambda} cos lambda - 1)
struct RobertsonExtremal {
  double lambda;
};

/// P(z) = z / (1-z)^{1+e^{2 i lambda}}
struct SpirallikeExtremal {
  double lambda;
};

/// f(z) = ((1-z)^{-mu} - 1) / mu, with the limit -Log(1-z) at mu = 0.
struct Royster {
  cplx mu;
};

/// z / (1-z)
struct HalfPlane {};

struct Identity {};

/// z + a_2 z^2 + ... + a_N z^N, stored as {a_1 = 1, a_2, ..., a_N}.
struct Taylor {
  std::vector<cplx> coeffs;
};

}  // namespace kinds

/// A normalized analytic function on the unit disk (f(0) = 0, f'(0) = 1).
/// Immutable once built; use the named constructors.
class FunctionSpec {
 public:
  using Kind = std::variant<kinds::RobertsonExtremal, kinds::SpirallikeExtremal,
                            kinds::Royster, kinds::HalfPlane, kinds::Identity,
                            kinds::Taylor>;

  static FunctionSpec robertson_extremal(double lambda);
  static FunctionSpec spirallike_extremal(double lambda);
  static FunctionSpec royster(cplx mu);
  static FunctionSpec half_plane();
  static FunctionSpec identity();
  /// Throws PreconditionError unless coeffs is nonempty with coeffs[0] == 1.
  static FunctionSpec taylor(std::vector<cplx> coeffs);

  const Kind& kind() const noexcept { return kind_; }
  std::string kind_name() const;

  /// Closed form (builtins) or Horner (Taylor) evaluation with no domain check.
  /// Builtins are finite on the closed disk minus z = 1.
  Jet2 jet_unchecked(cplx z) const;

  /// The branch of log f' that is analytic on the disk and vanishes at 0.
  cplx log_derivative(cplx z) const;

  /// |a_N| |z|^N N for Taylor kinds, 0 for the exact builtins.
  double truncation_estimate(cplx z) const;

  bool operator==(const FunctionSpec& other) const;

 private:
  explicit FunctionSpec(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// f, f', f'' at z. Throws DomainError for |z| >= 1.
Jet2 eval_jet(const FunctionSpec& f, cplx z);

/// e^{-i lambda} / cos lambda
cplx alpha_exponent(double lambda);

/// g(z) = integral_0^z f'(zeta)^alpha d zeta along the radial segment, with
/// alpha = e^{-i lambda}/cos lambda. The alpha-power is the principal power
/// continued along the segment so that g stays analytic.
/// Throws DomainError (|z| >= 1), PreconditionError (|lambda| >= pi/2),
/// NumericError when the quadrature does not converge.
cplx alpha_primitive(const FunctionSpec& f, double lambda, cplx z,
                     double abs_tol = 1e-10);

/// g'(z) and g''(z) of the primitive above: g' is the integrand itself and g''
/// a central difference of g' with complex step h.
struct PrimitiveDerivatives {
  cplx d1;
  cplx d2;
};
PrimitiveDerivatives alpha_primitive_derivatives(const FunctionSpec& f,
                                                 double lambda, cplx z,
                                                 double h = 1e-5);

void to_json(nlohmann::json& j, const FunctionSpec& f);
FunctionSpec function_from_json(const nlohmann::json& j);

/// Throws PreconditionError unless |lambda| < pi/2.
void check_lambda(double lambda);

}  // namespace robertson

template <>
struct nlohmann::adl_serializer<robertson::FunctionSpec> {
  static robertson::FunctionSpec from_json(const json& j) {
    return robertson::function_from_json(j);
  }
  static void to_json(json& j, const robertson::FunctionSpec& f) {
    robertson::to_json(j, f);
  }
};
