#pragma once

// JSON and CSV surfaces: amplitude matrices, input states, family parameter
// sets and trade-off curves.
//
//   AmplitudeMatrix  {"dim": N, "a": [[[re, im], ...], ...]}   rows = m
//   state            [[re, im], ...]
//   family           {"family": "<name>", "params": {...}}

#include "qclone/families.hpp"
#include "qclone/optimizer.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qclone {

/// Malformed input text. `position()` is the byte offset reported by the
/// JSON parser (0 for schema errors on well-formed JSON).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// 12 significant digits; scientific notation only when 0 < |x| < 1e-4.
std::string format_number(double x);

std::string to_json(const AmplitudeMatrix& a);
/// Throws ParseError on malformed text, std::invalid_argument when the
/// matrix is not normalized.
AmplitudeMatrix parse_amplitude_matrix(std::string_view text);

struct ParsedState {
  StateVector state;
  bool renormalized = false; ///< true when the norm was off by more than 1e-6
};

/// Input states within 1e-6 of unit norm are renormalized silently; others
/// are renormalized with `renormalized` set. A zero vector is an error.
ParsedState parse_state(std::string_view text);

std::string to_json(const FamilyParams& params);
FamilyParams parse_family(std::string_view text);

/// CSV with a '#' metadata line, a column header and one row per point.
void write_tradeoff_csv(std::ostream& out, Family family, std::span<const TradeoffPoint> curve);

/// Column names for a family's parameters, in CSV order.
std::vector<std::string> param_names(Family family);
std::vector<double> param_values(const FamilyParams& params);

} // namespace qclone
