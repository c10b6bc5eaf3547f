#include "robertson/qcext.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "robertson/loewner.hpp"

namespace robertson {

cplx H_s(const FunctionSpec& f, cplx s, cplx z) {
  if (z == 0.0) return 1.0;
  const Jet2 j = eval_jet(f, z);
  if (j.v1 == 0.0) throw DegenerateError("H_s: f' vanishes", z);
  if (j.v0 == 0.0) throw DegenerateError("H_s: f vanishes away from 0", z);
  return s * (1.0 + z * j.v2 / j.v1) + (1.0 - s) * (z * j.v1 / j.v0);
}

MembershipReport theorem3_condition_report(const FunctionSpec& f, double lambda, double q,
                                           const GridSpec& grid, double tol) {
  check_lambda(lambda);
  if (!(q > -1.0)) throw PreconditionError("theorem3_condition_report needs q > -1");
  const cplx rot = std::polar(1.0, -lambda);
  return sweep_grid("Re e^{-i lambda}(1 + z f''/f' + q z f'/f)", grid, tol,
                    [&](cplx z) -> std::optional<double> {
                      const Jet2 j = eval_jet(f, z);
                      if (j.v1 == 0.0) return std::nullopt;
                      cplx inner = 1.0 + z * j.v2 / j.v1;
                      if (q != 0.0) {
                        if (z == 0.0) {
                          inner += q;
                        } else if (j.v0 == 0.0) {
                          return std::nullopt;
                        } else {
                          inner += q * (z * j.v1 / j.v0);
                        }
                      }
                      return (rot * inner).real();
                    });
}

AdmissibleK admissible_k(double lambda, double q, bool second_coeff_zero) {
  const double cs = std::cos(lambda);
  if (!(cs > 0.0)) throw PreconditionError("admissible_k needs cos(lambda) > 0");
  if (!(q > -1.0)) throw PreconditionError("admissible_k needs q > -1");
  const double factor = q <= 0.0 ? 2.0 : 2.0 + 4.0 * q;
  const double k = (second_coeff_zero ? 0.5 * factor : factor) * cs;
  return {k, k >= 1.0};
}

void HottaParams::validate() const {
  if (!(a > 0.0)) throw PreconditionError("Hotta parameters need a > 0");
  if (!(k >= 0.0 && k < 1.0)) throw PreconditionError("Hotta parameters need 0 <= k < 1");
}

HottaResult hotta_check(const FunctionSpec& f, const HottaParams& params,
                        const GridSpec& grid, double tol) {
  params.validate();
  grid.validate();
  const cplx s = params.s();
  const double abs_s = std::abs(s);
  const double k = params.k;

  HottaResult out;
  out.M = params.a <= 1.0 ? params.a * k * abs_s + (params.a - 1.0) * std::abs(s + params.c)
                          : k * abs_s;
  out.l = (2.0 * k * params.a + (1.0 - k * k) * std::abs(params.b)) /
          ((1.0 + k * k) * params.a + (1.0 - k * k) * abs_s);
  out.lhs_max = -std::numeric_limits<double>::infinity();
  for (std::size_t ir = 0; ir < grid.r_values.size(); ++ir) {
    for (int j = 0; j < grid.n_theta; ++j) {
      const cplx z = grid.point(ir, j);
      cplx h;
      try {
        h = H_s(f, s, z);
      } catch (const DegenerateError&) {
        out.degenerate_points.push_back(z);
        continue;
      }
      const double r2 = std::norm(z);
      const double lhs = std::abs(params.c * r2 + s - params.a * (1.0 - r2) * h);
      if (lhs > out.lhs_max) {
        out.lhs_max = lhs;
        out.argmax = z;
      }
    }
  }
  out.verdict = (out.lhs_max <= out.M + tol && out.degenerate_points.empty()) ? Verdict::Pass
                                                                              : Verdict::Fail;
  return out;
}

cplx becker_extend(const FunctionSpec& f, double lambda, cplx w) {
  check_lambda(lambda);
  const double radius = std::abs(w);
  cplx value;
  if (radius <= 1.0) {
    // On the circle this is the closed form itself, i.e. the radial limit.
    value = f.jet_unchecked(w).v0;
  } else {
    value = chain_eval_closed(f, lambda, std::log(radius), w / radius).f_t;
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DegenerateError("extension is not finite here", w);
  }
  return value;
}

namespace {

struct Wirtinger {
  cplx dz;
  cplx dzbar;
};

Wirtinger central_wirtinger(const FunctionSpec& f, double lambda, cplx w, double h) {
  const cplx ih{0.0, h};
  const cplx fx = (becker_extend(f, lambda, w + h) - becker_extend(f, lambda, w - h)) / (2.0 * h);
  const cplx fy = (becker_extend(f, lambda, w + ih) - becker_extend(f, lambda, w - ih)) / (2.0 * h);
  const cplx i{0.0, 1.0};
  return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
}

}  // namespace

DilatationField dilatation_field(const FunctionSpec& f, double lambda, double r_outer,
                                 int n_r, int n_theta, double fd_step, double r_inner) {
  check_lambda(lambda);
  if (r_inner == 0.0) r_inner = 1.0 + 2.0 * fd_step;
  if (!(r_outer > 1.0) || n_r < 1 || n_theta < 1 || !(fd_step > 0.0)) {
    throw PreconditionError("dilatation_field needs r_outer > 1, n_r, n_theta >= 1, fd_step > 0");
  }
  if (fd_step > 1e-4 * (r_outer - 1.0)) {
    throw PreconditionError("dilatation_field needs fd_step <= 1e-4 (r_outer - 1)");
  }
  if (!(r_inner >= 1.0 + 2.0 * fd_step) || !(r_inner <= r_outer)) {
    throw PreconditionError("dilatation_field needs 1 + 2 fd_step <= r_inner <= r_outer");
  }

  DilatationField field;
  field.fd_step = fd_step;
  const double log_in = std::log(r_inner), log_out = std::log(r_outer);
  for (int i = 0; i < n_r; ++i) {
    const double frac = n_r == 1 ? 0.0 : static_cast<double>(i) / (n_r - 1);
    const double radius = i + 1 == n_r && n_r > 1 ? r_outer : std::exp(log_in + (log_out - log_in) * frac);
    for (int j = 0; j < n_theta; ++j) {
      const cplx w = std::polar(radius, 2.0 * std::numbers::pi * j / n_theta);
      const Wirtinger coarse = central_wirtinger(f, lambda, w, fd_step);
      if (std::abs(coarse.dz) < 1e-10) {
        ++field.excluded;
        continue;
      }
      const Wirtinger fine = central_wirtinger(f, lambda, w, 0.5 * fd_step);
      DilatationSample sample{w, coarse.dzbar / coarse.dz, false};
      if (std::abs(fine.dz) < 1e-10 || std::abs(fine.dzbar / fine.dz - sample.mu) > 1e-3) {
        sample.flagged = true;
        ++field.flagged;
      }
      field.max_abs_mu = std::max(field.max_abs_mu, std::abs(sample.mu));
      field.samples.push_back(sample);
    }
  }
  return field;
}

}  // namespace robertson
