#include "staymap/cli/formats.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace staymap::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view raw = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    std::size_t lead = 0;
    while (lead < raw.size() && (raw[lead] == ' ' || raw[lead] == '\t')) ++lead;
    raw.remove_prefix(lead);
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t')) raw.remove_suffix(1);
    out.push_back({raw, start + lead + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

nlohmann::json ring_json(const Ring& ring) {
  auto arr = nlohmann::json::array();
  for (const auto& p : ring.vertices) arr.push_back({json_number(p.x), json_number(p.y)});
  return arr;
}

template <class T>
void write_rows(std::ostream& out, const Trajectory<T>& traj) {
  out << (traj.dimension() == 1 ? "t,x\n" : "t,x,y\n");
  for (const auto& v : traj.vertices()) {
    out << format_number(v.t) << ',' << format_number(v.pos.x);
    if (traj.dimension() == 2) out << ',' << format_number(v.pos.y);
    out << '\n';
  }
}

}  // namespace

nlohmann::json json_number(const Rational& v) {
  if (denominator(v) == 1) {
    const auto& n = numerator(v);
    if (n < (std::int64_t{1} << 53) && n > -(std::int64_t{1} << 53)) {
      return n.convert_to<std::int64_t>();
    }
  }
  return to_double(v);
}

Trajectory<Rational> read_trajectory_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int dim = 0;
  std::vector<Vertex<Rational>> vs;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    const auto fields = split_fields(line);
    if (dim == 0) {
      std::vector<std::string_view> names;
      for (const auto& f : fields) names.push_back(f.text);
      if (names == std::vector<std::string_view>{"t", "x"}) {
        dim = 1;
      } else if (names == std::vector<std::string_view>{"t", "x", "y"}) {
        dim = 2;
      } else {
        throw ParseError(line_no, 1, "expected header 't,x' or 't,x,y'");
      }
      continue;
    }
    if (fields.size() != static_cast<std::size_t>(dim) + 1) {
      throw ParseError(line_no, 1,
                       "expected " + std::to_string(dim + 1) + " fields, found " +
                           std::to_string(fields.size()));
    }
    std::vector<Rational> values;
    for (const auto& f : fields) {
      auto v = parse_rational(f.text);
      if (!v) throw ParseError(line_no, f.column, "not a decimal number: '" + std::string(f.text) + "'");
      values.push_back(std::move(*v));
    }
    if (!vs.empty() && !(vs.back().t < values[0])) {
      throw ParseError(line_no, fields[0].column, "timestamps must be strictly increasing");
    }
    vs.push_back({values[0], {values[1], dim == 2 ? values[2] : Rational(0)}});
  }
  if (dim == 0) throw ParseError(line_no + 1, 1, "missing header");
  if (vs.empty()) throw ParseError(line_no + 1, 1, "trajectory has no vertices");
  return Trajectory<Rational>(std::move(vs), dim);
}

void write_trajectory_csv(std::ostream& out, const Trajectory<Rational>& traj) { write_rows(out, traj); }
void write_trajectory_csv(std::ostream& out, const Trajectory<double>& traj) { write_rows(out, traj); }

void write_region_json(std::ostream& out, const Interval1D<Rational>& map) {
  nlohmann::json doc;
  switch (map.kind) {
    case IntervalKind::Empty: doc["kind"] = "empty"; break;
    case IntervalKind::WholeLine: doc["kind"] = "whole_line"; break;
    case IntervalKind::Bounded:
      doc["kind"] = "bounded";
      doc["left"] = json_number(map.left);
      doc["right"] = json_number(map.right);
      break;
  }
  out << doc.dump() << '\n';
}

void write_region_json(std::ostream& out, const RegionSet& map) {
  nlohmann::json doc;
  if (map.is_whole_plane()) {
    doc["kind"] = "whole_plane";
  } else {
    doc["kind"] = "polygons";
    auto polys = nlohmann::json::array();
    for (const auto& poly : map.polygons()) {
      auto rings = nlohmann::json::array();
      rings.push_back(ring_json(poly.outer));
      for (const auto& hole : poly.holes) rings.push_back(ring_json(hole));
      polys.push_back(std::move(rings));
    }
    doc["polygons"] = std::move(polys);
  }
  out << doc.dump() << '\n';
}

RegionSet read_region_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("region document: ") + e.what());
  }
  try {
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "whole_plane") return RegionSet::whole_plane();
    if (kind != "polygons") throw std::invalid_argument("region document: unknown kind " + kind);
    std::vector<Polygon> polys;
    for (const auto& rings : doc.at("polygons")) {
      Polygon poly;
      bool outer = true;
      for (const auto& ring_doc : rings) {
        Ring ring;
        for (const auto& pt : ring_doc) {
          ring.vertices.push_back({Rational(pt.at(0).get<double>()), Rational(pt.at(1).get<double>())});
        }
        if (outer) {
          poly.outer = std::move(ring);
          outer = false;
        } else {
          poly.holes.push_back(std::move(ring));
        }
      }
      polys.push_back(std::move(poly));
    }
    return RegionSet(std::move(polys));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("region document: ") + e.what());
  }
}

void write_svg(std::ostream& out, const Trajectory<Rational>& traj, const RegionSet& map,
               const SvgStyle& style) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  auto extend = [&](double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  };
  for (const auto& v : traj.vertices()) extend(to_double(v.pos.x), to_double(v.pos.y));
  for (const auto& poly : map.polygons()) {
    for (const auto& p : poly.outer.vertices) extend(to_double(p.x), to_double(p.y));
  }
  min_x -= style.margin;
  min_y -= style.margin;
  max_x += style.margin;
  max_y += style.margin;
  const double width = max_x - min_x;
  const double height = max_y - min_y;

  auto fmt = [](double v) { return format_number(v); };
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x) << ' '
      << fmt(-max_y) << ' ' << fmt(width) << ' ' << fmt(height) << "\">\n";
  out << "<g transform=\"scale(1,-1)\">\n";
  if (map.is_whole_plane()) {
    out << "<rect class=\"staymap\" x=\"" << fmt(min_x) << "\" y=\"" << fmt(min_y) << "\" width=\""
        << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"#7fc97f\"/>\n";
  }
  for (const auto& poly : map.polygons()) {
    out << "<path class=\"staymap\" fill=\"#7fc97f\" fill-rule=\"evenodd\" d=\"";
    auto ring = [&](const Ring& r) {
      for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        out << (i == 0 ? 'M' : 'L') << fmt(to_double(r.vertices[i].x)) << ' '
            << fmt(to_double(r.vertices[i].y)) << ' ';
      }
      out << "Z ";
    };
    ring(poly.outer);
    for (const auto& hole : poly.holes) ring(hole);
    out << "\"/>\n";
  }
  out << "<polyline class=\"trajectory\" fill=\"none\" stroke=\"#386cb0\" stroke-width=\""
      << fmt(style.stroke_width) << "\" points=\"";
  for (const auto& v : traj.vertices()) {
    out << fmt(to_double(v.pos.x)) << ',' << fmt(to_double(v.pos.y)) << ' ';
  }
  out << "\"/>\n</g>\n</svg>\n";
}

}  // namespace staymap::cli
