#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "robertson/errors.hpp"
#include "json.hpp"

namespace robertson {

/// Polar sample grid on the disk: circles r_values x n_theta equally spaced
/// angles starting at theta = 0.
struct GridSpec {
  std::vector<double> r_values;
  int n_theta = 720;

  /// 1 - r spaced geometrically from 0.95 down to 1 - r_max.
  static GridSpec geometric(double r_max = 0.99, int r_count = 40, int n_theta = 720);

  double r_max() const { return r_values.back(); }
  double theta(int j) const;
  cplx point(std::size_t ir, int j) const;
  std::size_t size() const { return r_values.size() * static_cast<std::size_t>(n_theta); }

  /// Throws PreconditionError on empty / unsorted / out-of-range radii or n_theta < 8.
  void validate() const;
};

enum class Verdict { Pass, PassBoundary, Fail };

std::string to_string(Verdict v);

/// Outcome of sweeping a real functional that should stay positive.
/// Upper-bound style checks store the negated excess, so "min_value > -tol"
/// always reads as "the condition held".
struct MembershipReport {
  std::string functional;
  double min_value = 0.0;
  cplx argmin{};
  std::optional<double> argmin_t;
  Verdict verdict = Verdict::Fail;
  double margin_tolerance = 1e-9;
  GridSpec grid;
  std::vector<cplx> degenerate_points;

  bool passed() const { return verdict != Verdict::Fail; }
};

/// Sweeps value(z) over the grid in deterministic order (circle by circle,
/// increasing theta). A nullopt value marks a degenerate point: it is recorded
/// and forces a Fail verdict.
MembershipReport sweep_grid(std::string functional, const GridSpec& grid, double tol,
                            const std::function<std::optional<double>(cplx)>& value);

/// Merges per-slice reports (e.g. one per t) keeping the global minimum.
void merge_into(MembershipReport& total, const MembershipReport& part,
                std::optional<double> t = std::nullopt);

/// Sets verdict from min_value / degenerate points.
void assign_verdict(MembershipReport& report);

void to_json(nlohmann::json& j, const GridSpec& g);
void to_json(nlohmann::json& j, const MembershipReport& r);

}  // namespace robertson
