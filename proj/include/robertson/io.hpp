#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "robertson/growth.hpp"
#include "robertson/loewner.hpp"
#include "robertson/qcext.hpp"
#include "json.hpp"

namespace robertson::io {

/// "%.17g"; "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double x);

/// JSON text with every float printed to 17 significant digits and keys in
/// sorted order, so equal inputs give byte-identical output.
std::string dump_json(const nlohmann::json& j, int indent = 2);

void write_envelope_csv(std::ostream& out, const std::vector<GrowthEnvelope>& rows);

struct ChainRow {
  ChainSample sample;
  double eq43_lhs;
};
void write_chain_csv(std::ostream& out, const std::vector<ChainRow>& rows);

void write_dilatation_csv(std::ostream& out, const DilatationField& field);

struct Polyline {
  std::vector<cplx> points;
  std::string stroke = "#1f77b4";
  bool closed = false;
};

/// Polylines in the complex plane, auto-scaled into a width x height viewport
/// with equal axis scaling and faint coordinate axes.
void write_svg(std::ostream& out, const std::vector<Polyline>& lines, int width = 800,
               int height = 800);

nlohmann::json to_json(const GrowthEnvelope& e);
nlohmann::json to_json(const HottaResult& r);
nlohmann::json summary_json(const DilatationField& field, double k_bound, bool pass);

}  // namespace robertson::io
