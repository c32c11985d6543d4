#include "qclone/serialization.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qclone {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 0); }

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    schema_error(where + ": expected [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number())
    schema_error(std::string("family params: missing numeric field '") + key + "'");
  return obj[key].get<double>();
}

} // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// --------------------------------------------------------- amplitude matrix

std::string to_json(const AmplitudeMatrix& a) {
  json rows = json::array();
  for (std::size_t m = 0; m < a.dim(); ++m) {
    json row = json::array();
    for (std::size_t n = 0; n < a.dim(); ++n) row.push_back({a(m, n).real(), a(m, n).imag()});
    rows.push_back(std::move(row));
  }
  return json{{"dim", a.dim()}, {"a", std::move(rows)}}.dump();
}

AmplitudeMatrix parse_amplitude_matrix(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("a"))
    schema_error("amplitude matrix: expected object with 'dim' and 'a'");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() < 2)
    schema_error("amplitude matrix: 'dim' must be an integer >= 2");
  const auto N = j["dim"].get<std::size_t>();
  const json& rows = j["a"];
  if (!rows.is_array() || rows.size() != N) schema_error("amplitude matrix: 'a' must have dim rows");
  CMatrix a(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t m = 0; m < N; ++m) {
    if (!rows[m].is_array() || rows[m].size() != N)
      schema_error("amplitude matrix: row " + std::to_string(m) + " must have dim entries");
    for (std::size_t n = 0; n < N; ++n)
      a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
          parse_complex(rows[m][n], "a[" + std::to_string(m) + "][" + std::to_string(n) + "]");
  }
  return AmplitudeMatrix(std::move(a));
}

// ---------------------------------------------------------------------- state

ParsedState parse_state(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array() || j.size() < 2) schema_error("state: expected a list of at least two [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_complex(j[i], "state[" + std::to_string(i) + "]");
  const bool off = std::abs(v.squaredNorm() - 1.0) > 1e-6;
  return ParsedState{StateVector::renormalize(std::move(v)), off};
}

// --------------------------------------------------------------------- family

std::vector<std::string> param_names(Family family) {
  switch (family) {
  case Family::two_basis:
  case Family::three_basis_asym:
  case Family::qubit_phase_cov: return {"v", "x", "y"};
  case Family::three_basis_sym: return {"x", "y", "z"};
  case Family::universal: return {"alpha", "beta"};
  }
  return {};
}

std::vector<double> param_values(const FamilyParams& params) {
  if (auto p = std::get_if<TwoBasisParams>(&params)) return {p->v, p->x, p->y};
  if (auto p = std::get_if<ThreeBasisSymParams>(&params)) return {p->x, p->y, p->z};
  if (auto p = std::get_if<ThreeBasisAsymParams>(&params)) return {p->v, p->x, p->y};
  if (auto p = std::get_if<UniversalParams>(&params)) return {p->alpha, p->beta};
  const auto& p = std::get<QubitPhaseCovParams>(params);
  return {p.v, p.x, p.y};
}

std::string to_json(const FamilyParams& params) {
  const Family family = family_of(params);
  json p = json::object();
  const auto names = param_names(family);
  const auto values = param_values(params);
  for (std::size_t i = 0; i < names.size(); ++i) p[names[i]] = values[i];
  if (family == Family::universal) p["dim"] = dim_of(params);
  return json{{"family", std::string(to_string(family))}, {"params", std::move(p)}}.dump();
}

FamilyParams parse_family(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    schema_error("family: expected object with a 'family' name");
  if (!j.contains("params") || !j["params"].is_object()) schema_error("family: expected a 'params' object");
  Family family;
  try {
    family = family_from_string(j["family"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema_error(e.what());
  }
  const json& p = j["params"];
  switch (family) {
  case Family::two_basis: return TwoBasisParams{number_field(p, "v"), number_field(p, "x"), number_field(p, "y")};
  case Family::three_basis_sym:
    return ThreeBasisSymParams{number_field(p, "x"), number_field(p, "y"), number_field(p, "z")};
  case Family::three_basis_asym:
    return ThreeBasisAsymParams{number_field(p, "v"), number_field(p, "x"), number_field(p, "y")};
  case Family::universal: {
    std::size_t dim = 3;
    if (p.contains("dim")) {
      if (!p["dim"].is_number_unsigned() || p["dim"].get<std::size_t>() < 2)
        schema_error("family params: 'dim' must be an integer >= 2");
      dim = p["dim"].get<std::size_t>();
    }
    return UniversalParams{number_field(p, "alpha"), number_field(p, "beta"), dim};
  }
  case Family::qubit_phase_cov:
    return QubitPhaseCovParams{number_field(p, "v"), number_field(p, "x"), number_field(p, "y")};
  }
  schema_error("family: unsupported family");
}

// ------------------------------------------------------------------------ CSV

void write_tradeoff_csv(std::ostream& out, Family family, std::span<const TradeoffPoint> curve) {
  out << "# family=" << to_string(family) << ",grid=" << curve.size();
  if (!curve.empty()) {
    out << ",dim=" << dim_of(curve.front().params) << ",F_min=" << format_number(curve.front().f_a)
        << ",F_max=" << format_number(curve.back().f_a);
  }
  out << '\n';
  out << "F,F_tilde";
  for (const auto& name : param_names(family)) out << ',' << name;
  out << '\n';
  for (const auto& pt : curve) {
    out << format_number(pt.f_a) << ',' << format_number(pt.f_b);
    for (double v : param_values(pt.params)) out << ',' << format_number(v);
    out << '\n';
  }
}

} // namespace qclone
