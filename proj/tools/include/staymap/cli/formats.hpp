#pragma once

// File formats used by the command-line tool.
//
// Trajectory CSV: header `t,x` (1D) or `t,x,y` (2D), one vertex per row,
// decimal numbers, strictly increasing t.
//
// Region documents (JSON):
//   1D: {"kind": "empty" | "whole_line"} or {"kind": "bounded", "left": L, "right": R}
//   2D: {"kind": "whole_plane"} or
//       {"kind": "polygons", "polygons": [[outer, hole...], ...]} where every
//       ring is a list of [x, y] pairs, outer rings counterclockwise and holes
//       clockwise.

#include "staymap/staymap1d.hpp"
#include "staymap/staymap2d.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace staymap::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Integral values as JSON integers, everything else as the nearest double.
nlohmann::json json_number(const Rational& v);

/// Values are parsed exactly. Throws ParseError with a 1-based line/column.
Trajectory<Rational> read_trajectory_csv(std::istream& in);

void write_trajectory_csv(std::ostream& out, const Trajectory<Rational>& traj);
void write_trajectory_csv(std::ostream& out, const Trajectory<double>& traj);

/// Region documents, serialized compactly on one line followed by '\n'.
void write_region_json(std::ostream& out, const Interval1D<Rational>& map);
void write_region_json(std::ostream& out, const RegionSet& map);

/// Parses a 2D region document. Coordinates are read as doubles and converted
/// exactly. Throws std::invalid_argument on malformed documents.
RegionSet read_region_json(std::istream& in);

struct SvgStyle {
  double margin = 0.5;
  double stroke_width = 0.02;
};

/// Trajectory polyline plus one filled <path> per stay-map polygon.
void write_svg(std::ostream& out, const Trajectory<Rational>& traj, const RegionSet& map,
               const SvgStyle& style = {});

}  // namespace staymap::cli
