#include "robertson/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace robertson::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump(std::ostringstream& out, const nlohmann::json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << nlohmann::json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        dump(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out << '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Short numeric arrays (complex pairs) stay on one line.
      const bool inline_array =
          j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const auto& v) {
            return v.is_number();
          });
      out << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << (inline_array ? ", " : ",");
        first = false;
        if (!inline_array) newline(depth + 1);
        dump(out, v, indent, depth + 1);
      }
      if (!inline_array) newline(depth);
      out << ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      out << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
  std::ostringstream out;
  dump(out, j, indent, 0);
  return out.str();
}

void write_envelope_csv(std::ostream& out, const std::vector<GrowthEnvelope>& rows) {
  out << "r,psi_lo,psi_hi,theta_lo,theta_hi\n";
  for (const auto& e : rows) {
    out << format_double(e.r) << ',' << format_double(e.psi_lo) << ','
        << format_double(e.psi_hi) << ',' << format_double(e.theta_lo) << ','
        << format_double(e.theta_hi) << '\n';
  }
}

void write_chain_csv(std::ostream& out, const std::vector<ChainRow>& rows) {
  out << "t,re_z,im_z,re_f_t,im_f_t,re_p,im_p,eq43_lhs\n";
  for (const auto& row : rows) {
    const auto& s = row.sample;
    out << format_double(s.t) << ',' << format_double(s.z.real()) << ','
        << format_double(s.z.imag()) << ',' << format_double(s.f_t.real()) << ','
        << format_double(s.f_t.imag()) << ',' << format_double(s.p.real()) << ','
        << format_double(s.p.imag()) << ',' << format_double(row.eq43_lhs) << '\n';
  }
}

void write_dilatation_csv(std::ostream& out, const DilatationField& field) {
  out << "re_w,im_w,re_mu,im_mu,abs_mu\n";
  for (const auto& s : field.samples) {
    out << format_double(s.w.real()) << ',' << format_double(s.w.imag()) << ','
        << format_double(s.mu.real()) << ',' << format_double(s.mu.imag()) << ','
        << format_double(std::abs(s.mu)) << '\n';
  }
}

void write_svg(std::ostream& out, const std::vector<Polyline>& lines, int width, int height) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& line : lines) {
    for (cplx p : line.points) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
  }
  if (!(xmin <= xmax)) xmin = ymin = -1.0, xmax = ymax = 1.0;
  const double margin = 20.0;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = std::min(width, height) - 2.0 * margin;
  const auto px = [&](double x) { return margin + (x - xmin) / span * scale; };
  const auto py = [&](double y) { return margin + (ymax - y) / span * scale; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  char buf[64];
  if (xmin <= 0.0 && 0.0 <= xmax) {
    std::snprintf(buf, sizeof buf, "%.3f", px(0.0));
    out << "<line x1=\"" << buf << "\" y1=\"0\" x2=\"" << buf << "\" y2=\"" << height
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  if (ymin <= 0.0 && 0.0 <= ymax) {
    std::snprintf(buf, sizeof buf, "%.3f", py(0.0));
    out << "<line x1=\"0\" y1=\"" << buf << "\" x2=\"" << width << "\" y2=\"" << buf
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  for (const auto& line : lines) {
    out << '<' << (line.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\""
        << line.stroke << "\" stroke-width=\"1\" points=\"";
    bool first = true;
    for (cplx p : line.points) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
      std::snprintf(buf, sizeof buf, "%.3f,%.3f", px(p.real()), py(p.imag()));
      out << (first ? "" : " ") << buf;
      first = false;
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

nlohmann::json to_json(const GrowthEnvelope& e) {
  return {{"r", e.r},
          {"psi_lo", e.psi_lo},
          {"psi_hi", e.psi_hi},
          {"theta_lo", e.theta_lo},
          {"theta_hi", e.theta_hi},
          {"psi_lo_closed", e.psi_lo_closed},
          {"psi_hi_closed", e.psi_hi_closed}};
}

nlohmann::json to_json(const HottaResult& r) {
  return {{"lhs_max", r.lhs_max},
          {"argmax", {r.argmax.real(), r.argmax.imag()}},
          {"M", r.M},
          {"l", r.l},
          {"verdict", to_string(r.verdict)},
          {"degenerate_count", r.degenerate_points.size()}};
}

nlohmann::json summary_json(const DilatationField& field, double k_bound, bool pass) {
  return {{"max_abs_mu", field.max_abs_mu},
          {"k_bound", k_bound},
          {"verdict", pass ? "pass" : "fail"},
          {"fd_step", field.fd_step},
          {"samples", field.samples.size()},
          {"flagged", field.flagged},
          {"excluded", field.excluded}};
}

}  // namespace robertson::io
