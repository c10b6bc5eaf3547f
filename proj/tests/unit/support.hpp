#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "robertson/analytic.hpp"

namespace testing {

using robertson::cplx;

inline double rel_err(cplx a, cplx b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  cplx in_disk(double r_max) {
    const double r = r_max * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(-M_PI, M_PI));
  }
  cplx unimodular() { return std::polar(1.0, uniform(-M_PI, M_PI)); }
  double lambda(double max_abs = 1.45) { return uniform(-max_abs, max_abs); }

  // z + a_2 z^2 + ... with sum n|a_n| <= budget.
  robertson::FunctionSpec small_taylor(double budget, int max_degree = 5) {
    const int degree = integer(2, max_degree);
    std::vector<cplx> coeffs{1.0};
    std::vector<double> weights;
    double total = 0.0;
    for (int n = 2; n <= degree; ++n) {
      weights.push_back(uniform(0.0, 1.0));
      total += weights.back();
    }
    const double scale = uniform(0.0, budget);
    for (int n = 2; n <= degree; ++n) {
      const double share = total > 0 ? weights[n - 2] / total : 0.0;
      coeffs.push_back(std::polar(scale * share / n, uniform(-M_PI, M_PI)));
    }
    return robertson::FunctionSpec::taylor(coeffs);
  }

  robertson::FunctionSpec builtin() {
    switch (integer(0, 4)) {
      case 0: return robertson::FunctionSpec::robertson_extremal(lambda());
      case 1: return robertson::FunctionSpec::spirallike_extremal(lambda());
      case 2: return robertson::FunctionSpec::royster(in_disk(1.0));
      case 3: return robertson::FunctionSpec::half_plane();
      default: return robertson::FunctionSpec::identity();
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
