#include "robertson/analytic.hpp"

#include <cmath>
#include <numbers>

#include "robertson/quadrature.hpp"

namespace robertson {

namespace {

using std::numbers::pi;
constexpr cplx I{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// 2 e^{i lambda} cos lambda, which equals 1 + e^{2 i lambda}.
cplx two_e_cos(double lambda) { return 2.0 * std::polar(1.0, lambda) * std::cos(lambda); }

Jet2 horner_jet(const std::vector<cplx>& a, cplx z) {
  // a[k] multiplies z^{k+1}
  cplx p{0.0}, dp{0.0}, ddp{0.0};
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    ddp = ddp * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + *it;
  }
  // p, dp, ddp now describe q(z) = sum a_k z^k (k from 0); f = z q.
  return {z * p, p + z * dp, 2.0 * dp + z * ddp};
}

// Continuation of log f' from 0 to z along the segment, splitting whenever
// consecutive samples differ in argument by more than half a radian.
cplx continued_log(const std::vector<cplx>& a, cplx z0, cplx f0, cplx z1,
                   int depth) {
  const cplx f1 = horner_jet(a, z1).v1;
  if (f1 == 0.0) throw DegenerateError("f' vanishes on the integration path", z1);
  const cplx step = std::log(f1 / f0);
  if (std::abs(step.imag()) <= 0.5 || depth > 40) return step;
  const cplx zm = 0.5 * (z0 + z1);
  const cplx fm = horner_jet(a, zm).v1;
  if (fm == 0.0) throw DegenerateError("f' vanishes on the integration path", zm);
  return continued_log(a, z0, f0, zm, depth + 1) +
         continued_log(a, zm, fm, z1, depth + 1);
}

}  // namespace

cplx principal_log(cplx w) {
  const cplx L = std::log(w);
  // a signed zero below the negative axis gives -pi
  return L.imag() == -pi ? cplx(L.real(), pi) : L;
}

cplx log1p(cplx w) {
  const double x = w.real(), y = w.imag();
  if (std::abs(w) >= 0.5) return principal_log(cplx(1.0 + x, y));
  // |1 + w|^2 - 1 = 2x + x^2 + y^2
  const double re = 0.5 * std::log1p(x * (2.0 + x) + y * y);
  return {re, std::atan2(y, 1.0 + x)};
}

cplx expm1(cplx w) {
  const double x = w.real(), y = w.imag();
  const double s = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

cplx principal_pow(cplx w, cplx alpha) {
  if (w == 0.0) {
    if (alpha.real() > 0.0) return 0.0;
    throw DomainError("principal_pow: 0 raised to a power with Re <= 0");
  }
  return std::exp(alpha * principal_log(w));
}

void check_lambda(double lambda) {
  if (!(std::abs(lambda) < pi / 2)) {
    throw PreconditionError("lambda must satisfy |lambda| < pi/2");
  }
}

FunctionSpec FunctionSpec::robertson_extremal(double lambda) {
  check_lambda(lambda);
  return FunctionSpec(kinds::RobertsonExtremal{lambda});
}

FunctionSpec FunctionSpec::spirallike_extremal(double lambda) {
  check_lambda(lambda);
  return FunctionSpec(kinds::SpirallikeExtremal{lambda});
}

FunctionSpec FunctionSpec::royster(cplx mu) { return FunctionSpec(kinds::Royster{mu}); }
FunctionSpec FunctionSpec::half_plane() { return FunctionSpec(kinds::HalfPlane{}); }
FunctionSpec FunctionSpec::identity() { return FunctionSpec(kinds::Identity{}); }

FunctionSpec FunctionSpec::taylor(std::vector<cplx> coeffs) {
  if (coeffs.empty() || coeffs.front() != cplx{1.0, 0.0}) {
    throw PreconditionError("Taylor coefficients must start with a_1 = 1");
  }
  return FunctionSpec(kinds::Taylor{std::move(coeffs)});
}

std::string FunctionSpec::kind_name() const {
  return std::visit(
      Overloaded{[](const kinds::RobertsonExtremal&) { return "robertson_extremal"; },
                 [](const kinds::SpirallikeExtremal&) { return "spirallike_extremal"; },
                 [](const kinds::Royster&) { return "royster"; },
                 [](const kinds::HalfPlane&) { return "half_plane"; },
                 [](const kinds::Identity&) { return "identity"; },
                 [](const kinds::Taylor&) { return "taylor"; }},
      kind_);
}

Jet2 FunctionSpec::jet_unchecked(cplx z) const {
  return std::visit(
      Overloaded{
          [z](const kinds::RobertsonExtremal& k) -> Jet2 {
            const cplx L = log1p(-z);
            const cplx c = two_e_cos(k.lambda);
            const cplx beta = 1.0 - c;
            return {expm1(beta * L) / (c - 1.0), std::exp(-c * L),
                    c * std::exp((beta - 2.0) * L)};
          },
          [z](const kinds::SpirallikeExtremal& k) -> Jet2 {
            const cplx L = log1p(-z);
            const cplx e2 = std::polar(1.0, 2.0 * k.lambda);
            const cplx gamma = 1.0 + e2;
            return {z * std::exp(-gamma * L),
                    std::exp(-(gamma + 1.0) * L) * (1.0 + e2 * z),
                    gamma * std::exp(-(gamma + 2.0) * L) * (2.0 + e2 * z)};
          },
          [z](const kinds::Royster& k) -> Jet2 {
            const cplx L = log1p(-z);
            const cplx v0 = k.mu == 0.0 ? -L : expm1(-k.mu * L) / k.mu;
            return {v0, std::exp(-(k.mu + 1.0) * L),
                    (k.mu + 1.0) * std::exp(-(k.mu + 2.0) * L)};
          },
          [z](const kinds::HalfPlane&) -> Jet2 {
            const cplx w = 1.0 / (1.0 - z);
            return {z * w, w * w, 2.0 * w * w * w};
          },
          [z](const kinds::Identity&) -> Jet2 { return {z, 1.0, 0.0}; },
          [z](const kinds::Taylor& k) -> Jet2 { return horner_jet(k.coeffs, z); }},
      kind_);
}

cplx FunctionSpec::log_derivative(cplx z) const {
  return std::visit(
      Overloaded{
          [z](const kinds::RobertsonExtremal& k) -> cplx {
            return -two_e_cos(k.lambda) * log1p(-z);
          },
          [z](const kinds::SpirallikeExtremal& k) -> cplx {
            const cplx e2 = std::polar(1.0, 2.0 * k.lambda);
            return -(2.0 + e2) * log1p(-z) + log1p(e2 * z);
          },
          [z](const kinds::Royster& k) -> cplx { return -(k.mu + 1.0) * log1p(-z); },
          [z](const kinds::HalfPlane&) -> cplx { return -2.0 * log1p(-z); },
          [](const kinds::Identity&) -> cplx { return 0.0; },
          [z](const kinds::Taylor& k) -> cplx {
            if (z == 0.0) return 0.0;
            return continued_log(k.coeffs, 0.0, 1.0, z, 0);
          }},
      kind_);
}

double FunctionSpec::truncation_estimate(cplx z) const {
  if (const auto* t = std::get_if<kinds::Taylor>(&kind_)) {
    const double n = static_cast<double>(t->coeffs.size());
    return std::abs(t->coeffs.back()) * std::pow(std::abs(z), n) * n;
  }
  return 0.0;
}

bool FunctionSpec::operator==(const FunctionSpec& other) const {
  if (kind_.index() != other.kind_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const kinds::RobertsonExtremal& k) {
            return k.lambda == std::get<kinds::RobertsonExtremal>(other.kind_).lambda;
          },
          [&](const kinds::SpirallikeExtremal& k) {
            return k.lambda == std::get<kinds::SpirallikeExtremal>(other.kind_).lambda;
          },
          [&](const kinds::Royster& k) {
            return k.mu == std::get<kinds::Royster>(other.kind_).mu;
          },
          [](const kinds::HalfPlane&) { return true; },
          [](const kinds::Identity&) { return true; },
          [&](const kinds::Taylor& k) {
            return k.coeffs == std::get<kinds::Taylor>(other.kind_).coeffs;
          }},
      kind_);
}

Jet2 eval_jet(const FunctionSpec& f, cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("eval_jet requires |z| < 1");
  return f.jet_unchecked(z);
}

cplx alpha_exponent(double lambda) { return std::polar(1.0, -lambda) / std::cos(lambda); }

namespace {

// f'(z)^alpha: the principal power, shifted by the branch of log f' that is
// continuous from z = 0.
cplx continued_power(const FunctionSpec& f, cplx z, cplx alpha) {
  const cplx d1 = f.jet_unchecked(z).v1;
  if (d1 == 0.0) throw DegenerateError("f' vanishes", z);
  const double winding =
      std::round((f.log_derivative(z).imag() - std::arg(d1)) / (2.0 * pi));
  const cplx p = principal_pow(d1, alpha);
  return winding == 0.0 ? p : p * std::exp(2.0 * pi * winding * I * alpha);
}

}  // namespace

cplx alpha_primitive(const FunctionSpec& f, double lambda, cplx z, double abs_tol) {
  check_lambda(lambda);
  if (!(std::abs(z) < 1.0)) throw DomainError("alpha_primitive requires |z| < 1");
  if (z == 0.0) return 0.0;
  const cplx alpha = alpha_exponent(lambda);
  auto integrand = [&](double tau) { return z * continued_power(f, tau * z, alpha); };
  return integrate(integrand, 0.0, 1.0, abs_tol).value;
}

PrimitiveDerivatives alpha_primitive_derivatives(const FunctionSpec& f, double lambda,
                                                 cplx z, double h) {
  check_lambda(lambda);
  if (!(std::abs(z) + h < 1.0)) {
    throw DomainError("alpha_primitive_derivatives requires |z| + h < 1");
  }
  const cplx alpha = alpha_exponent(lambda);
  const cplx d1 = continued_power(f, z, alpha);
  const cplx d2 =
      (continued_power(f, z + h, alpha) - continued_power(f, z - h, alpha)) / (2.0 * h);
  return {d1, d2};
}

void to_json(nlohmann::json& j, const FunctionSpec& f) {
  auto pair = [](cplx c) { return nlohmann::json::array({c.real(), c.imag()}); };
  j = nlohmann::json{{"kind", f.kind_name()}};
  std::visit(Overloaded{[&](const kinds::RobertsonExtremal& k) { j["lambda"] = k.lambda; },
                        [&](const kinds::SpirallikeExtremal& k) { j["lambda"] = k.lambda; },
                        [&](const kinds::Royster& k) { j["mu"] = pair(k.mu); },
                        [](const kinds::HalfPlane&) {}, [](const kinds::Identity&) {},
                        [&](const kinds::Taylor& k) {
                          auto arr = nlohmann::json::array();
                          for (cplx c : k.coeffs) arr.push_back(pair(c));
                          j["coeffs"] = arr;
                        }},
             f.kind());
}

FunctionSpec function_from_json(const nlohmann::json& j) {
  auto pair = [](const nlohmann::json& v) {
    if (!v.is_array() || v.size() != 2) {
      throw PreconditionError("complex values are encoded as [re, im]");
    }
    return cplx{v.at(0).get<double>(), v.at(1).get<double>()};
  };
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "robertson_extremal") {
    return FunctionSpec::robertson_extremal(j.at("lambda").get<double>());
  }
  if (kind == "spirallike_extremal") {
    return FunctionSpec::spirallike_extremal(j.at("lambda").get<double>());
  }
  if (kind == "royster") return FunctionSpec::royster(pair(j.at("mu")));
  if (kind == "half_plane") return FunctionSpec::half_plane();
  if (kind == "identity") return FunctionSpec::identity();
  if (kind == "taylor") {
    std::vector<cplx> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(pair(c));
    return FunctionSpec::taylor(std::move(coeffs));
  }
  throw PreconditionError("unknown function kind: " + kind);
}

}  // namespace robertson
