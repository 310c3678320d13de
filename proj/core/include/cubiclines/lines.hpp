#pragma once

#include <array>
#include <vector>

#include "cubiclines/cubic_surface.hpp"
#include "cubiclines/permutation.hpp"

namespace cubiclines {

using Vec4c = std::array<Complexd, 4>;
using Vec6c = std::array<Complexd, 6>;

// Plücker minors of the 2x4 span [p; q] in the order (01,02,03,12,13,23),
// rescaled so the entry of largest modulus (lowest index on ties) is exactly 1.
Vec6c plucker_of_span(const Vec4c& p, const Vec4c& q);
// p01*p23 - p02*p13 + p03*p12, the quadric every line satisfies.
double plucker_quadric_residual(const Vec6c& p);
// sqrt(1 - |<u,v>|^2) on unit-normalized vectors; zero iff projectively equal.
double projective_distance(const Vec6c& u, const Vec6c& v);

// A line in P^3: an orthonormalized span plus its normalized Plücker vector.
struct ProjectiveLine {
  std::array<Vec4c, 2> span;
  Vec6c plucker;
};

// Throws DependentSpanError when p and q are projectively equal.
ProjectiveLine make_line(const Vec4c& p, const Vec4c& q);

// Coordinate permutation action on lines: (g·x)_{g(i)} = x_i on both span
// points, renormalized.
ProjectiveLine act_on_line(const Perm& g, const ProjectiveLine& line);

// Affine chart of the Grassmannian of lines: x_i = a x_k + b x_l,
// x_j = c x_k + d x_l, with dependent pair (i,j) and free pair (k,l).
struct LineChart {
  int dep0, dep1;
  int free0, free1;
};
// The 6 charts; chart c has free pair equal to the c-th Plücker index pair.
const std::array<LineChart, 6>& line_charts();

// Chart with the largest |p_{kl}|; every line fits its own best chart with
// all four parameters of modulus <= 1. Throws NoChartContainsLineError only
// on corrupted (non-normalized) input.
int chart_of_line(const ProjectiveLine& line);
std::array<Complexd, 4> chart_params(const ProjectiveLine& line, const LineChart& chart);
ProjectiveLine line_from_chart(const LineChart& chart, const std::array<Complexd, 4>& params);

// F restricted to the chart line, expanded as r3 w^3 + r2 w^2 z + r1 w z^2 +
// r0 z^3 in [w:z] = [x_k:x_l]; returns (r3,r2,r1,r0). All four vanish iff the
// line lies on V(F).
std::array<Complexd, 4> restrict_to_line(const CubicSurface& f, const LineChart& chart,
                                         const std::array<Complexd, 4>& params);

// 4x4 Jacobian of restrict_to_line with respect to (a,b,c,d);
// entry [r][c] = d residual_r / d param_c.
std::array<std::array<Complexd, 4>, 4> restriction_jacobian(const CubicSurface& f, const LineChart& chart,
                                                            const std::array<Complexd, 4>& params);

// The 27 lines of the Fermat cubic, written down exactly: x_j = mu x_i and
// x_l = nu x_k over a pairing of the coordinates, where mu and nu run over
// the cube roots of -1 (with zeta = exp(i pi/3)). Used as the oracle for the
// numerical finder.
std::vector<ProjectiveLine> fermat_lines_exact();

}  // namespace cubiclines
