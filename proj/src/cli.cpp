#include "robertson/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "robertson/classes.hpp"
#include "robertson/growth.hpp"
#include "robertson/io.hpp"
#include "robertson/loewner.hpp"
#include "robertson/qcext.hpp"

namespace robertson::cli {

namespace {

using std::numbers::pi;

const std::map<std::string, Command> kCommands = {
    {"check", Command::Check}, {"growth", Command::Growth}, {"chain", Command::Chain},
    {"extend", Command::Extend}, {"hotta", Command::Hotta}, {"root", Command::Root},
    {"plot", Command::Plot}};

const std::map<std::string, Format> kFormats = {
    {"json", Format::Json}, {"csv", Format::Csv}, {"svg", Format::Svg}};

std::string name_of(Command c) {
  for (const auto& [name, value] : kCommands) {
    if (value == c) return name;
  }
  return "?";
}

std::string name_of(Format f) {
  for (const auto& [name, value] : kFormats) {
    if (value == f) return name;
  }
  return "?";
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return values;
}

cplx parse_complex(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  throw UsageError("complex values are written re,im");
}

nlohmann::json pair(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
  std::filesystem::create_directories(dir);
  std::ofstream file(std::filesystem::path(dir) / name, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + name + " under " + dir);
  file << body;
}

// Emits the command's primary artifact: JSON summary unless the format asks for
// the CSV/SVG body, and files under the output directory when one is given.
struct Emitter {
  const RunConfig& config;
  std::ostream& out;

  void finish(const nlohmann::json& summary, const std::string& artifact_name,
              const std::string& artifact) const {
    if (!config.output_dir.empty()) {
      write_file(config.output_dir, "summary.json", io::dump_json(summary) + "\n");
      if (!artifact_name.empty()) write_file(config.output_dir, artifact_name, artifact);
    }
    const bool body = !artifact.empty() && ((config.format == Format::Csv &&
                                              artifact_name.ends_with(".csv")) ||
                                             (config.format == Format::Svg &&
                                              artifact_name.ends_with(".svg")));
    out << (body ? artifact : io::dump_json(summary) + "\n");
  }
};

int run_check(const RunConfig& cfg, const Emitter& emit) {
  const auto grid = cfg.grid();
  const auto& f = cfg.function;
  nlohmann::json j;
  j["command"] = "check";
  j["function"] = f;
  j["lambda"] = cfg.lambda;
  j["class"] = cfg.check_class;

  const auto rob = robertson_report(f, cfg.lambda, grid, cfg.tol);
  const auto spi = spirallike_report(f, cfg.lambda, grid, cfg.tol);
  j["robertson"] = rob;
  j["spirallike"] = spi;

  bool pass = false;
  const ArgForm form = cfg.check_class == "spirallike" ? ArgForm::Direct : ArgForm::Derivative;
  try {
    j["monotone_lambda_arg"] = monotone_lambda_arg_check(f, cfg.lambda, form, grid);
  } catch (const GridTooCoarseError& e) {
    j["monotone_lambda_arg"] = {{"error", e.what()}};
  }
  if (cfg.check_class == "spirallike") {
    pass = spi.passed();
  } else {
    const auto eq = equivalence_check(f, cfg.lambda, grid, cfg.tol);
    j["equivalence"] = {{"robertson", eq.robertson},
                        {"derivative_spirallike", eq.derivative_spiral},
                        {"primitive_convex", eq.primitive_convex},
                        {"agree", eq.agree()}};
    pass = rob.passed() && eq.agree() && eq.primitive_convex.passed() &&
           eq.derivative_spiral.passed();
  }
  j["verdict"] = pass ? "pass" : "fail";
  emit.finish(j, "", "");
  return pass ? kExitOk : kExitFail;
}

int run_growth(const RunConfig& cfg, const Emitter& emit) {
  const auto grid = cfg.grid();
  std::vector<GrowthEnvelope> rows;
  nlohmann::json env = nlohmann::json::array();
  for (double r : grid.r_values) {
    rows.push_back(growth_bounds(cfg.lambda, r));
    env.push_back(io::to_json(rows.back()));
  }
  std::ostringstream csv;
  io::write_envelope_csv(csv, rows);

  const double cs = std::cos(cfg.lambda);
  const auto extremal = FunctionSpec::robertson_extremal(cfg.lambda);
  nlohmann::json series = nlohmann::json::array();
  for (int m = 1; m <= 8; ++m) {
    const double r = 1.0 - std::pow(10.0, -m);
    series.push_back({{"r", r},
                      {"integral", boundedness_integral(cfg.lambda, r)},
                      {"abs_f_lambda", std::abs(eval_jet(extremal, r).v0)}});
  }
  nlohmann::json j;
  j["command"] = "growth";
  j["lambda"] = cfg.lambda;
  j["cos_lambda"] = cs;
  j["endpoint_exponent"] = 2.0 * cs * cs;
  j["envelope"] = env;
  j["integral_series"] = series;
  if (boundedness_integral_diverges(cfg.lambda)) {
    j["integral_at_1"] = nullptr;
    j["bounded_by_integral"] = false;
  } else {
    j["integral_at_1"] = boundedness_integral(cfg.lambda, 1.0);
    j["bounded_by_integral"] = true;
  }
  if (std::abs(2.0 * cs * cs - 1.0) < 1e-12) {
    j["conjecture"] = "cos(lambda) = 1/sqrt(2): boundedness expected but not established";
  }
  emit.finish(j, "envelope.csv", csv.str());
  return kExitOk;
}

int run_chain(const RunConfig& cfg, const Emitter& emit) {
  const auto grid = cfg.grid();
  const auto& f = cfg.function;
  const auto ts = cfg.t_values.empty() ? default_t_values() : cfg.t_values;
  const auto positivity = chain_positivity_report(f, cfg.lambda, ts, grid, cfg.tol);
  const auto eq43 = eq43_report(f, cfg.lambda, ts, grid, cfg.tol);

  std::string csv;
  if (!cfg.output_dir.empty() || cfg.format == Format::Csv) {
    std::vector<io::ChainRow> rows;
    for (double t : ts) {
      for (std::size_t ir = 0; ir < grid.r_values.size(); ++ir) {
        for (int k = 0; k < grid.n_theta; ++k) {
          const cplx z = grid.point(ir, k);
          try {
            rows.push_back({chain_eval(f, cfg.lambda, t, z), eq43_lhs(f, cfg.lambda, t, z)});
          } catch (const DegenerateError&) {
          }
        }
      }
    }
    std::ostringstream out;
    io::write_chain_csv(out, rows);
    csv = out.str();
  }
  nlohmann::json j;
  j["command"] = "chain";
  j["function"] = f;
  j["lambda"] = cfg.lambda;
  j["t_values"] = ts;
  j["positivity"] = positivity;
  j["eq43"] = eq43;
  j["p0"] = pair(-1.0 - 2.0 * std::polar(1.0, -2.0 * cfg.lambda));
  const bool pass = positivity.passed() && eq43.passed();
  j["verdict"] = pass ? "pass" : "fail";
  emit.finish(j, "chain_samples.csv", csv);
  return pass ? kExitOk : kExitFail;
}

int run_extend(const RunConfig& cfg, const Emitter& emit) {
  const double k_bound = cfg.k.value_or(2.0 * std::cos(cfg.lambda));
  const auto field = dilatation_field(cfg.function, cfg.lambda, cfg.r_out, cfg.n_r,
                                      cfg.n_theta_ext, cfg.fd_step, cfg.r_in);
  const bool pass = field.max_abs_mu <= k_bound + 0.01 && field.max_abs_mu < 1.0;
  auto j = io::summary_json(field, k_bound, pass);
  j["command"] = "extend";
  j["function"] = cfg.function;
  j["lambda"] = cfg.lambda;
  std::ostringstream csv;
  io::write_dilatation_csv(csv, field);
  emit.finish(j, "dilatation.csv", csv.str());
  return pass ? kExitOk : kExitFail;
}

int run_hotta(const RunConfig& cfg, const Emitter& emit) {
  HottaParams params;
  params.a = cfg.a;
  params.b = cfg.b;
  params.k = cfg.k.value_or(2.0 * std::cos(cfg.lambda));
  const cplx s = params.s();
  params.c = cfg.c.value_or(2.0 * s * std::polar(1.0, cfg.lambda) * std::cos(cfg.lambda) - s);
  const auto result = hotta_check(cfg.function, params, cfg.grid(), cfg.tol);
  auto j = io::to_json(result);
  j["command"] = "hotta";
  j["function"] = cfg.function;
  j["lambda"] = cfg.lambda;
  j["s"] = pair(s);
  j["c"] = pair(params.c);
  j["k"] = params.k;
  emit.finish(j, "", "");
  return result.verdict == Verdict::Pass ? kExitOk : kExitFail;
}

int run_root(const RunConfig&, const Emitter& emit) {
  const double x0 = cubic_root_x0();
  emit.finish({{"x0", x0}, {"residual", x0_polynomial(x0)}}, "", "");
  return kExitOk;
}

int run_plot(const RunConfig& cfg, const Emitter& emit) {
  const auto grid = cfg.grid();
  std::vector<io::Polyline> lines;
  nlohmann::json j;
  j["command"] = "plot";
  j["kind"] = cfg.plot_kind;
  if (cfg.plot_kind == "envelope") {
    io::Polyline lo{{}, "#1f77b4", false}, hi{{}, "#d62728", false};
    for (double r : grid.r_values) {
      const auto e = growth_bounds(cfg.lambda, r);
      lo.points.emplace_back(r, e.psi_lo);
      hi.points.emplace_back(r, e.psi_hi);
    }
    lines = {lo, hi};
  } else {
    for (double r : grid.r_values) {
      io::Polyline line{{}, "#1f77b4", true};
      for (int k = 0; k < grid.n_theta; ++k) {
        line.points.push_back(eval_jet(cfg.function, std::polar(r, grid.theta(k))).v0);
      }
      lines.push_back(std::move(line));
    }
    j["function"] = cfg.function;
  }
  j["curves"] = lines.size();
  std::ostringstream svg;
  io::write_svg(svg, lines);
  emit.finish(j, "plot.svg", svg.str());
  return kExitOk;
}

void validate(const RunConfig& cfg) {
  if (!(std::abs(cfg.lambda) < pi / 2)) throw UsageError("--lambda must satisfy |lambda| < pi/2");
  if (!(cfg.r_max > 0.05 && cfg.r_max < 1.0)) throw UsageError("--r-max must lie in (0.05, 1)");
  if (cfg.r_count < 1) throw UsageError("--r-count must be positive");
  if (cfg.n_theta < 8) throw UsageError("--n-theta must be at least 8");
  if (!(cfg.tol >= 0.0)) throw UsageError("--tol must be non-negative");
  if (!(cfg.q > -1.0)) throw UsageError("--q must exceed -1");
  if (cfg.check_class != "robertson" && cfg.check_class != "spirallike") {
    throw UsageError("--class must be robertson or spirallike");
  }
  if (cfg.plot_kind != "images" && cfg.plot_kind != "envelope") {
    throw UsageError("--plot must be images or envelope");
  }
  for (double t : cfg.t_values) {
    if (!(t >= 0.0)) throw UsageError("--t values must be non-negative");
  }
  if (cfg.command == Command::Growth && cfg.r_max >= 1.0) throw UsageError("bad --r-max");
}

}  // namespace

FunctionSpec resolve_function(const std::string& text, double lambda) {
  if (!text.empty() && text.front() == '{') {
    try {
      return function_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("bad --function JSON: ") + e.what());
    } catch (const PreconditionError& e) {
      throw UsageError(std::string("bad --function: ") + e.what());
    }
  }
  if (text == "identity") return FunctionSpec::identity();
  if (text == "half_plane") return FunctionSpec::half_plane();
  if (text == "f_lambda" || text == "robertson") return FunctionSpec::robertson_extremal(lambda);
  if (text == "p_lambda" || text == "spirallike") return FunctionSpec::spirallike_extremal(lambda);
  if (text == "koebe") return FunctionSpec::spirallike_extremal(0.0);
  if (text == "royster") {
    try {
      return FunctionSpec::royster(royster_mu(lambda));
    } catch (const NoAdmissibleError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown --function '" + text + "'");
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Numerical checks for lambda-Robertson and lambda-spirallike functions"};
  std::string command, format = "json", t_text, c_text;
  std::optional<double> lambda_rad, lambda_deg, k;
  app.add_option("command", command, "check | growth | chain | extend | hotta | root | plot")
      ->required();
  app.add_option("--function", cfg.function_text,
                 "JSON spec or identity|half_plane|f_lambda|p_lambda|koebe|royster");
  app.add_option("--lambda", lambda_rad, "lambda in radians");
  app.add_option("--lambda-deg", lambda_deg, "lambda in degrees");
  app.add_option("--q", cfg.q, "q > -1 for the generalized condition");
  app.add_option("--k", k, "quasiconformality constant");
  app.add_option("--r-max", cfg.r_max, "largest grid radius");
  app.add_option("--r-count", cfg.r_count, "number of grid circles");
  app.add_option("--n-theta", cfg.n_theta, "angles per circle");
  app.add_option("--t", t_text, "comma-separated chain parameters, e.g. 0,0.5,1");
  app.add_option("--tol", cfg.tol, "verdict margin");
  app.add_option("--out", cfg.output_dir, "directory for artifacts");
  app.add_option("--format", format, "json | csv | svg");
  app.add_option("--class", cfg.check_class, "check: robertson | spirallike");
  app.add_option("--r-out", cfg.r_out, "extend: outer radius");
  app.add_option("--r-in", cfg.r_in, "extend: inner radius (default 1 + 2 fd-step)");
  app.add_option("--n-r", cfg.n_r, "extend: radial samples");
  app.add_option("--n-theta-ext", cfg.n_theta_ext, "extend: angular samples");
  app.add_option("--fd-step", cfg.fd_step, "extend: finite-difference step");
  app.add_option("--a", cfg.a, "hotta: Re s");
  app.add_option("--b", cfg.b, "hotta: Im s");
  app.add_option("--c", c_text, "hotta: constant c as re,im");
  app.add_option("--plot", cfg.plot_kind, "plot: images | envelope");
  app.add_flag("--emit-config", cfg.emit_config, "print the resolved configuration and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto cmd = kCommands.find(command);
  if (cmd == kCommands.end()) throw UsageError("unknown command '" + command + "'");
  cfg.command = cmd->second;
  const auto fmt = kFormats.find(format);
  if (fmt == kFormats.end()) throw UsageError("unknown --format '" + format + "'");
  cfg.format = fmt->second;
  if (lambda_rad && lambda_deg) throw UsageError("give --lambda or --lambda-deg, not both");
  if (lambda_rad) cfg.lambda = *lambda_rad;
  if (lambda_deg) cfg.lambda = *lambda_deg * pi / 180.0;
  cfg.k = k;
  if (!t_text.empty()) cfg.t_values = parse_list(t_text);
  if (!c_text.empty()) cfg.c = parse_complex(c_text);
  validate(cfg);
  cfg.function = resolve_function(cfg.function_text, cfg.lambda);
  return cfg;
}

nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::json j{{"command", name_of(cfg.command)},
                   {"function", cfg.function},
                   {"lambda", cfg.lambda},
                   {"q", cfg.q},
                   {"grid", {{"r_max", cfg.r_max}, {"r_count", cfg.r_count}, {"n_theta", cfg.n_theta}}},
                   {"t_values", cfg.t_values.empty() ? default_t_values() : cfg.t_values},
                   {"tol", cfg.tol},
                   {"output_dir", cfg.output_dir},
                   {"format", name_of(cfg.format)},
                   {"class", cfg.check_class},
                   {"extend", {{"r_in", cfg.r_in == 0.0 ? 1.0 + 2.0 * cfg.fd_step : cfg.r_in},
                               {"r_out", cfg.r_out},
                               {"n_r", cfg.n_r},
                               {"n_theta", cfg.n_theta_ext},
                               {"fd_step", cfg.fd_step}}},
                   {"hotta", {{"a", cfg.a}, {"b", cfg.b}}},
                   {"plot", cfg.plot_kind}};
  j["k"] = cfg.k ? nlohmann::json(*cfg.k) : nlohmann::json(nullptr);
  if (cfg.c) j["hotta"]["c"] = pair(*cfg.c);
  return j;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.emit_config) {
    out << io::dump_json(config_to_json(cfg)) << "\n";
    return kExitOk;
  }
  const Emitter emit{cfg, out};
  try {
    switch (cfg.command) {
      case Command::Check: return run_check(cfg, emit);
      case Command::Growth: return run_growth(cfg, emit);
      case Command::Chain: return run_chain(cfg, emit);
      case Command::Extend: return run_extend(cfg, emit);
      case Command::Hotta: return run_hotta(cfg, emit);
      case Command::Root: return run_root(cfg, emit);
      case Command::Plot: return run_plot(cfg, emit);
    }
  } catch (const std::exception& e) {
    nlohmann::json record{{"error", e.what()}, {"command", name_of(cfg.command)}};
    if (const auto* ne = dynamic_cast<const NumericError*>(&e)) {
      record["error_estimate"] = ne->error_estimate();
    }
    out << io::dump_json(record) << "\n";
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!cfg) return kExitOk;
  return run(*cfg, out, err);
}

}  // namespace robertson::cli
