#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "robertson/analytic.hpp"
#include "robertson/grid.hpp"
#include "json.hpp"

namespace robertson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;
inline constexpr int kExitUsage = 64;

enum class Command { Check, Growth, Chain, Extend, Hotta, Root, Plot };
enum class Format { Json, Csv, Svg };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Root;
  std::string function_text = "identity";
  FunctionSpec function = FunctionSpec::identity();
  double lambda = 0.0;
  double q = 0.0;
  std::optional<double> k;
  double r_max = 0.99;
  int r_count = 40;
  int n_theta = 720;
  std::vector<double> t_values;
  double tol = 1e-9;
  std::string output_dir;
  Format format = Format::Json;

  std::string check_class = "robertson";  // check: robertson | spirallike
  double r_out = 3.0;                     // extend
  double r_in = 0.0;
  int n_r = 100;
  int n_theta_ext = 360;
  double fd_step = 1e-5;
  double a = 1.0;                         // hotta
  double b = 0.0;
  std::optional<cplx> c;
  std::string plot_kind = "images";       // plot: images | envelope
  bool emit_config = false;

  GridSpec grid() const { return GridSpec::geometric(r_max, r_count, n_theta); }
};

/// Parses argv into a validated config. Throws UsageError on malformed input.
/// Returns nullopt when help was requested (text already written to `out`).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Builds the FunctionSpec for a --function value: JSON text or one of
/// identity, half_plane, f_lambda, p_lambda, koebe, royster.
FunctionSpec resolve_function(const std::string& text, double lambda);

nlohmann::json config_to_json(const RunConfig& config);

/// Executes one command. Writes the JSON summary (or CSV/SVG per format) to
/// `out` and artifacts under output_dir. Returns 0 on pass, 2 on a failed
/// verdict, 1 on numeric or precondition errors (with a JSON error record).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code contract (64 for usage errors).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robertson::cli
