#pragma once

#include <string>

#include "cubiclines/equivariant.hpp"
#include "cubiclines/real_lines.hpp"

namespace cubiclines {

// Surface JSON: {"monomials": [{"exponents": [e0,e1,e2,e3], "re": f, "im": f}]}.
// Monomials with zero coefficient are omitted on output and may be omitted on
// input; exponents must be nonnegative and sum to 3.
std::string surface_to_json(const CubicSurface& f);
CubicSurface surface_from_json(const std::string& text);  // throws ParseError

// Line JSON: {"span": [[ [re,im] x4 ] x2], "plucker": [[re,im] x6], "residual": f}.
// Report JSON wraps the line list with the seed and newton_stats.
std::string report_to_json(const LineFinderReport& report);

// OrbitDecomposition JSON: {"group": name, "orbits": [{"stabilizer": class
// name, "size": n, "members": [...]}], "euler_number": bracket string}.
std::string orbits_to_json(const OrbitDecomposition& dec);
std::string orbits_to_text(const OrbitDecomposition& dec);

std::string table1_to_json(const std::vector<Table1Row>& rows);
std::string table1_to_text(const std::vector<Table1Row>& rows);

// RealLineAnalysis JSON: {"real_count", "hyperbolic", "elliptic",
// "lines": [{"index", "real", "type": "hyperbolic"|"elliptic"|null}]}.
std::string real_analysis_to_json(const RealLineAnalysis& analysis);

// Wavefront OBJ with one `g orbit-<class>` group per orbit and one clipped
// segment per real line (affine chart x0 = 1, ball of the given radius).
// Lines missing the ball are skipped. When `dec` is null all segments land in
// a single group named "lines".
std::string export_lines_obj(const std::vector<ProjectiveLine>& lines, const OrbitDecomposition* dec,
                             double radius);

}  // namespace cubiclines
