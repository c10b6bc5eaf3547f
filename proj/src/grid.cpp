#include "robertson/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace robertson {

GridSpec GridSpec::geometric(double r_max, int r_count, int n_theta) {
  if (!(r_max > 0.05 && r_max < 1.0) || r_count < 1) {
    throw PreconditionError("geometric grid needs 0.05 < r_max < 1 and r_count >= 1");
  }
  GridSpec g;
  g.n_theta = n_theta;
  if (r_count == 1) {
    g.r_values = {r_max};
  } else {
    const double d0 = 0.95, d1 = 1.0 - r_max;
    for (int i = 0; i < r_count; ++i) {
      const double frac = static_cast<double>(i) / (r_count - 1);
      g.r_values.push_back(1.0 - d0 * std::pow(d1 / d0, frac));
    }
    g.r_values.back() = r_max;
  }
  g.validate();
  return g;
}

double GridSpec::theta(int j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / n_theta;
}

cplx GridSpec::point(std::size_t ir, int j) const {
  return std::polar(r_values[ir], theta(j));
}

void GridSpec::validate() const {
  if (r_values.empty()) throw PreconditionError("grid has no radii");
  if (n_theta < 8) throw PreconditionError("grid needs n_theta >= 8");
  double prev = 0.0;
  for (double r : r_values) {
    if (!(r > prev)) throw PreconditionError("grid radii must be positive and increasing");
    prev = r;
  }
  if (!(prev < 1.0)) throw PreconditionError("grid radii must stay below 1");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::PassBoundary: return "pass-boundary";
    case Verdict::Fail: return "fail";
  }
  return "fail";
}

void assign_verdict(MembershipReport& r) {
  r.verdict = (r.min_value > -r.margin_tolerance && r.degenerate_points.empty())
                  ? Verdict::Pass
                  : Verdict::Fail;
}

MembershipReport sweep_grid(std::string functional, const GridSpec& grid, double tol,
                            const std::function<std::optional<double>(cplx)>& value) {
  grid.validate();
  MembershipReport report;
  report.functional = std::move(functional);
  report.grid = grid;
  report.margin_tolerance = tol;
  report.min_value = std::numeric_limits<double>::infinity();
  for (std::size_t ir = 0; ir < grid.r_values.size(); ++ir) {
    for (int j = 0; j < grid.n_theta; ++j) {
      const cplx z = grid.point(ir, j);
      const auto v = value(z);
      if (!v || !std::isfinite(*v)) {
        report.degenerate_points.push_back(z);
        continue;
      }
      if (*v < report.min_value) {
        report.min_value = *v;
        report.argmin = z;
      }
    }
  }
  assign_verdict(report);
  return report;
}

void merge_into(MembershipReport& total, const MembershipReport& part,
                std::optional<double> t) {
  if (part.min_value < total.min_value) {
    total.min_value = part.min_value;
    total.argmin = part.argmin;
    total.argmin_t = t ? t : part.argmin_t;
  }
  total.degenerate_points.insert(total.degenerate_points.end(),
                                 part.degenerate_points.begin(),
                                 part.degenerate_points.end());
  assign_verdict(total);
}

void to_json(nlohmann::json& j, const GridSpec& g) {
  j = nlohmann::json{{"r_count", g.r_values.size()},
                     {"r_min", g.r_values.front()},
                     {"r_max", g.r_max()},
                     {"n_theta", g.n_theta}};
}

void to_json(nlohmann::json& j, const MembershipReport& r) {
  j = nlohmann::json{{"functional", r.functional},
                     {"min_value", r.min_value},
                     {"argmin", {r.argmin.real(), r.argmin.imag()}},
                     {"verdict", to_string(r.verdict)},
                     {"margin_tolerance", r.margin_tolerance},
                     {"grid", r.grid}};
  if (r.argmin_t) j["argmin_t"] = *r.argmin_t;
  if (!r.degenerate_points.empty()) {
    auto pts = nlohmann::json::array();
    for (cplx z : r.degenerate_points) pts.push_back({z.real(), z.imag()});
    j["degenerate_points"] = pts;
  }
}

}  // namespace robertson
