#include "cubiclines/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace cubiclines {

namespace {

using nlohmann::json;

json complex_to_json(const Complexd& c) { return json::array({c.real(), c.imag()}); }

json vec4_to_json(const Vec4c& v) {
  json out = json::array();
  for (const Complexd& c : v) out.push_back(complex_to_json(c));
  return out;
}

json line_to_json(const ProjectiveLine& line, double residual) {
  json out;
  out["span"] = json::array({vec4_to_json(line.span[0]), vec4_to_json(line.span[1])});
  json pl = json::array();
  for (const Complexd& c : line.plucker) pl.push_back(complex_to_json(c));
  out["plucker"] = pl;
  out["residual"] = residual;
  return out;
}

}  // namespace

std::string surface_to_json(const CubicSurface& f) {
  json monomials = json::array();
  for (int i = 0; i < kNumCubicMonomials; ++i) {
    const Complexd c = f.coeff(i);
    if (c == 0.0) continue;
    const auto& e = cubic_monomials()[static_cast<std::size_t>(i)];
    monomials.push_back({{"exponents", {e[0], e[1], e[2], e[3]}}, {"re", c.real()}, {"im", c.imag()}});
  }
  return json{{"monomials", monomials}}.dump(2);
}

CubicSurface surface_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid surface JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("monomials") || !doc["monomials"].is_array())
    throw ParseError("surface JSON must be an object with a 'monomials' array");
  std::array<Complexd, kNumCubicMonomials> coeffs{};
  for (const json& m : doc["monomials"]) {
    if (!m.contains("exponents") || !m["exponents"].is_array() || m["exponents"].size() != 4)
      throw ParseError("monomial entry needs an 'exponents' array of length 4");
    std::array<int, 4> e{};
    for (int i = 0; i < 4; ++i) {
      if (!m["exponents"][static_cast<std::size_t>(i)].is_number_integer())
        throw ParseError("monomial exponents must be integers");
      e[static_cast<std::size_t>(i)] = m["exponents"][static_cast<std::size_t>(i)].get<int>();
      if (e[static_cast<std::size_t>(i)] < 0) throw ParseError("monomial exponents must be nonnegative");
    }
    const int idx = monomial_index(e);
    if (idx < 0) throw ParseError("monomial exponents must sum to 3");
    const double re = m.value("re", 0.0);
    const double im = m.value("im", 0.0);
    coeffs[static_cast<std::size_t>(idx)] += Complexd(re, im);
  }
  return CubicSurface::from_coeffs(coeffs);
}

std::string report_to_json(const LineFinderReport& report) {
  json lines = json::array();
  for (std::size_t i = 0; i < report.lines.size(); ++i)
    lines.push_back(line_to_json(report.lines[i], report.residuals[i]));
  json out;
  out["seed"] = report.seed;
  out["newton_stats"] = {{"starts", report.stats.starts},
                         {"converged", report.stats.converged},
                         {"deduped", report.stats.deduped}};
  out["lines"] = lines;
  return out.dump(2);
}

std::string orbits_to_json(const OrbitDecomposition& dec) {
  json orbits = json::array();
  for (const LineOrbit& orbit : dec.line_orbits) {
    orbits.push_back({{"stabilizer", std::string(dec.group->local_name(orbit.stabilizer_class))},
                      {"size", orbit.members.size()},
                      {"members", orbit.members}});
  }
  json out;
  out["group"] = std::string(class_name(dec.group->ambient_class()));
  out["orbits"] = orbits;
  out["euler_number"] = dec.euler_number.to_bracket();
  return out.dump(2);
}

std::string orbits_to_text(const OrbitDecomposition& dec) {
  std::ostringstream out;
  out << dec.euler_number.to_bracket() << "\n";
  for (const LineOrbit& orbit : dec.line_orbits) {
    out << "  orbit  stabilizer=" << dec.group->local_name(orbit.stabilizer_class)
        << "  size=" << orbit.members.size() << "  members=[";
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      if (i) out << " ";
      out << orbit.members[i];
    }
    out << "]\n";
  }
  return out.str();
}

std::string table1_to_json(const std::vector<Table1Row>& rows) {
  json out = json::array();
  for (const Table1Row& row : rows) {
    out.push_back({{"group", std::string(class_name(row.subgroup))},
                   {"orbits", row.direct.euler_number.to_bracket()},
                   {"restricted", row.restricted.to_bracket()},
                   {"consistent", row.direct.euler_number == row.restricted}});
  }
  return out.dump(2);
}

std::string table1_to_text(const std::vector<Table1Row>& rows) {
  std::size_t width = 0;
  for (const Table1Row& row : rows) width = std::max(width, class_name(row.subgroup).size());
  std::ostringstream out;
  for (const Table1Row& row : rows) {
    const std::string name(class_name(row.subgroup));
    out << name << std::string(width - name.size() + 2, ' ') << row.direct.euler_number.to_bracket()
        << "   [direct == restricted: " << (row.direct.euler_number == row.restricted ? "ok" : "MISMATCH")
        << "]\n";
  }
  return out.str();
}

std::string real_analysis_to_json(const RealLineAnalysis& analysis) {
  json lines = json::array();
  for (const auto& entry : analysis.per_line) {
    json e;
    e["index"] = entry.index;
    e["real"] = entry.real;
    if (entry.type) e["type"] = *entry.type == LineType::hyperbolic ? "hyperbolic" : "elliptic";
    else e["type"] = nullptr;
    lines.push_back(e);
  }
  json out;
  out["real_count"] = analysis.real_count;
  out["hyperbolic"] = analysis.hyperbolic_count;
  out["elliptic"] = analysis.elliptic_count;
  out["lines"] = lines;
  return out.dump(2);
}

std::string export_lines_obj(const std::vector<ProjectiveLine>& lines, const OrbitDecomposition* dec,
                             double radius) {
  std::ostringstream out;
  out << "# real line segments, affine chart x0 = 1, ball radius " << radius << "\n";
  int next_vertex = 1;

  auto emit_line = [&](const ProjectiveLine& line) {
    if (!is_real_line(line)) return false;
    const auto span = real_span(line);
    // Base point with x0 = 1 and direction with x0 = 0.
    const double n0 = span[0][0], n1 = span[1][0];
    std::array<double, 4> base{}, dir{};
    if (std::abs(n0) < 1e-12 && std::abs(n1) < 1e-12) return false;  // line at infinity
    const auto& big = std::abs(n0) >= std::abs(n1) ? span[0] : span[1];
    const auto& other = std::abs(n0) >= std::abs(n1) ? span[1] : span[0];
    for (int i = 0; i < 4; ++i) base[static_cast<std::size_t>(i)] = big[static_cast<std::size_t>(i)] / big[0];
    for (int i = 0; i < 4; ++i)
      dir[static_cast<std::size_t>(i)] = other[static_cast<std::size_t>(i)] - other[0] * base[static_cast<std::size_t>(i)];
    double dn = 0.0;
    for (int i = 1; i < 4; ++i) dn += dir[static_cast<std::size_t>(i)] * dir[static_cast<std::size_t>(i)];
    dn = std::sqrt(dn);
    if (dn < 1e-12) return false;
    for (auto& d : dir) d /= dn;
    // Clip |c + u d| <= radius in the affine coordinates (x1,x2,x3).
    double cd = 0.0, cc = 0.0;
    for (int i = 1; i < 4; ++i) {
      cd += base[static_cast<std::size_t>(i)] * dir[static_cast<std::size_t>(i)];
      cc += base[static_cast<std::size_t>(i)] * base[static_cast<std::size_t>(i)];
    }
    const double disc = cd * cd - (cc - radius * radius);
    if (disc <= 0.0) return false;  // entirely outside the ball
    const double u0 = -cd - std::sqrt(disc);
    const double u1 = -cd + std::sqrt(disc);
    char buf[160];
    for (double u : {u0, u1}) {
      std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", base[1] + u * dir[1], base[2] + u * dir[2],
                    base[3] + u * dir[3]);
      out << buf;
    }
    out << "l " << next_vertex << " " << next_vertex + 1 << "\n";
    next_vertex += 2;
    return true;
  };

  if (dec) {
    for (const LineOrbit& orbit : dec->line_orbits) {
      out << "g orbit-" << dec->group->local_name(orbit.stabilizer_class) << "\n";
      for (int idx : orbit.members) emit_line(lines[static_cast<std::size_t>(idx)]);
    }
  } else {
    out << "g lines\n";
    for (const ProjectiveLine& line : lines) emit_line(line);
  }
  return out.str();
}

}  // namespace cubiclines
