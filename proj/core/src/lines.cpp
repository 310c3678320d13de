#include "cubiclines/lines.hpp"

#include <algorithm>
#include <cmath>

#include "cubiclines/errors.hpp"

namespace cubiclines {

namespace {

double norm2(const Vec4c& v) {
  double s = 0.0;
  for (const Complexd& c : v) s += std::norm(c);
  return s;
}

Complexd inner(const Vec4c& a, const Vec4c& b) {  // sum a_i conj(b_i)
  Complexd s = 0.0;
  for (int i = 0; i < 4; ++i) s += a[static_cast<std::size_t>(i)] * std::conj(b[static_cast<std::size_t>(i)]);
  return s;
}

constexpr std::array<std::array<int, 2>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

Vec6c plucker_of_span(const Vec4c& p, const Vec4c& q) {
  Vec6c out;
  for (int c = 0; c < 6; ++c) {
    const int i = kPairs[static_cast<std::size_t>(c)][0];
    const int j = kPairs[static_cast<std::size_t>(c)][1];
    out[static_cast<std::size_t>(c)] = p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)] -
                                       p[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(i)];
  }
  int best = 0;
  double best_mod = 0.0;
  for (int c = 0; c < 6; ++c) {
    const double m = std::abs(out[static_cast<std::size_t>(c)]);
    if (m > best_mod) {
      best_mod = m;
      best = c;
    }
  }
  const double scale = std::sqrt(norm2(p) * norm2(q));
  if (best_mod <= 1e-13 * (scale > 0.0 ? scale : 1.0))
    throw DependentSpanError("span points are projectively equal");
  const Complexd pivot = out[static_cast<std::size_t>(best)];
  for (auto& v : out) v /= pivot;
  out[static_cast<std::size_t>(best)] = 1.0;  // exact after normalization
  return out;
}

double plucker_quadric_residual(const Vec6c& p) {
  return std::abs(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]);
}

double projective_distance(const Vec6c& u, const Vec6c& v) {
  // sin of the angle between the unit representatives, computed as the norm
  // of the orthogonal component (stable near zero, unlike sqrt(1 - cos^2)).
  double nu = 0.0, nv = 0.0;
  Complexd dot = 0.0;
  for (int i = 0; i < 6; ++i) {
    nu += std::norm(u[static_cast<std::size_t>(i)]);
    nv += std::norm(v[static_cast<std::size_t>(i)]);
    dot += v[static_cast<std::size_t>(i)] * std::conj(u[static_cast<std::size_t>(i)]);
  }
  nu = std::sqrt(nu);
  nv = std::sqrt(nv);
  const Complexd c = dot / (nu * nv);
  double sin2 = 0.0;
  for (int i = 0; i < 6; ++i)
    sin2 += std::norm(v[static_cast<std::size_t>(i)] / nv - c * u[static_cast<std::size_t>(i)] / nu);
  return std::sqrt(sin2);
}

ProjectiveLine make_line(const Vec4c& p, const Vec4c& q) {
  const double np = std::sqrt(norm2(p));
  if (np == 0.0) throw DependentSpanError("zero span point");
  Vec4c u1;
  for (int i = 0; i < 4; ++i) u1[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] / np;
  const Complexd proj = inner(q, u1);
  Vec4c u2;
  for (int i = 0; i < 4; ++i)
    u2[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] - proj * u1[static_cast<std::size_t>(i)];
  const double nw = std::sqrt(norm2(u2));
  if (nw <= 1e-12 * std::sqrt(norm2(q)))
    throw DependentSpanError("span points are projectively equal");
  for (auto& c : u2) c /= nw;
  ProjectiveLine line;
  line.span = {u1, u2};
  line.plucker = plucker_of_span(u1, u2);
  return line;
}

ProjectiveLine act_on_line(const Perm& g, const ProjectiveLine& line) {
  Vec4c p{}, q{};
  for (int i = 0; i < 4; ++i) {
    p[static_cast<std::size_t>(g(i))] = line.span[0][static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(g(i))] = line.span[1][static_cast<std::size_t>(i)];
  }
  return make_line(p, q);
}

const std::array<LineChart, 6>& line_charts() {
  static const std::array<LineChart, 6> charts = [] {
    std::array<LineChart, 6> out{};
    for (int c = 0; c < 6; ++c) {
      const int k = kPairs[static_cast<std::size_t>(c)][0];
      const int l = kPairs[static_cast<std::size_t>(c)][1];
      std::array<int, 2> dep{};
      int n = 0;
      for (int v = 0; v < 4; ++v)
        if (v != k && v != l) dep[static_cast<std::size_t>(n++)] = v;
      out[static_cast<std::size_t>(c)] = LineChart{dep[0], dep[1], k, l};
    }
    return out;
  }();
  return charts;
}

int chart_of_line(const ProjectiveLine& line) {
  int best = -1;
  double best_mod = 0.0;
  for (int c = 0; c < 6; ++c) {
    const double m = std::abs(line.plucker[static_cast<std::size_t>(c)]);
    if (m > best_mod) {
      best_mod = m;
      best = c;
    }
  }
  if (best < 0 || best_mod < 0.5)  // normalized vectors have a unit entry
    throw NoChartContainsLineError("Plücker vector is not normalized");
  return best;
}

std::array<Complexd, 4> chart_params(const ProjectiveLine& line, const LineChart& chart) {
  const Vec4c& s0 = line.span[0];
  const Vec4c& s1 = line.span[1];
  const auto k = static_cast<std::size_t>(chart.free0);
  const auto l = static_cast<std::size_t>(chart.free1);
  const Complexd det = s0[k] * s1[l] - s0[l] * s1[k];
  if (std::abs(det) < 1e-13) throw NoChartContainsLineError("line does not meet the requested chart");
  // Rows of the inverse of [[s0_k, s0_l], [s1_k, s1_l]] recombine the span so
  // the free coordinates become (1,0) and (0,1).
  const Complexd i00 = s1[l] / det, i01 = -s0[l] / det;
  const Complexd i10 = -s1[k] / det, i11 = s0[k] / det;
  Vec4c pw, pz;
  for (std::size_t v = 0; v < 4; ++v) {
    pw[v] = i00 * s0[v] + i01 * s1[v];
    pz[v] = i10 * s0[v] + i11 * s1[v];
  }
  return {pw[static_cast<std::size_t>(chart.dep0)], pz[static_cast<std::size_t>(chart.dep0)],
          pw[static_cast<std::size_t>(chart.dep1)], pz[static_cast<std::size_t>(chart.dep1)]};
}

ProjectiveLine line_from_chart(const LineChart& chart, const std::array<Complexd, 4>& params) {
  Vec4c p{}, q{};
  p[static_cast<std::size_t>(chart.free0)] = 1.0;
  q[static_cast<std::size_t>(chart.free1)] = 1.0;
  p[static_cast<std::size_t>(chart.dep0)] = params[0];
  q[static_cast<std::size_t>(chart.dep0)] = params[1];
  p[static_cast<std::size_t>(chart.dep1)] = params[2];
  q[static_cast<std::size_t>(chart.dep1)] = params[3];
  return make_line(p, q);
}

namespace {

// Multiplies a binary form (coefficients of w^(d-i) z^i) by (u w + v z).
template <std::size_t N>
void multiply_linear(std::array<Complexd, N>& poly, int& degree, Complexd u, Complexd v) {
  for (int i = degree + 1; i >= 0; --i) {
    Complexd acc = 0.0;
    if (i <= degree) acc += u * poly[static_cast<std::size_t>(i)];
    if (i >= 1) acc += v * poly[static_cast<std::size_t>(i - 1)];
    poly[static_cast<std::size_t>(i)] = acc;
  }
  ++degree;
}

// Substitutes the chart's linear forms into a polynomial given as
// (coefficient, exponent tuple) terms; returns binary-form coefficients.
template <std::size_t N>
std::array<Complexd, N> substitute_chart(const LineChart& chart, const std::array<Complexd, 4>& params,
                                         const std::vector<std::pair<Complexd, std::array<int, 4>>>& terms) {
  std::array<std::array<Complexd, 2>, 4> lin{};
  lin[static_cast<std::size_t>(chart.free0)] = {Complexd(1.0), Complexd(0.0)};
  lin[static_cast<std::size_t>(chart.free1)] = {Complexd(0.0), Complexd(1.0)};
  lin[static_cast<std::size_t>(chart.dep0)] = {params[0], params[1]};
  lin[static_cast<std::size_t>(chart.dep1)] = {params[2], params[3]};
  std::array<Complexd, N> out{};
  for (const auto& [c, e] : terms) {
    std::array<Complexd, N> poly{};
    poly[0] = c;
    int degree = 0;
    for (int v = 0; v < 4; ++v)
      for (int rep = 0; rep < e[static_cast<std::size_t>(v)]; ++rep)
        multiply_linear(poly, degree, lin[static_cast<std::size_t>(v)][0], lin[static_cast<std::size_t>(v)][1]);
    for (std::size_t i = 0; i < N; ++i) out[i] += poly[i];
  }
  return out;
}

std::vector<std::pair<Complexd, std::array<int, 4>>> cubic_terms(const CubicSurface& f) {
  std::vector<std::pair<Complexd, std::array<int, 4>>> terms;
  for (int i = 0; i < kNumCubicMonomials; ++i)
    if (f.coeff(i) != 0.0) terms.emplace_back(f.coeff(i), cubic_monomials()[static_cast<std::size_t>(i)]);
  return terms;
}

std::vector<std::pair<Complexd, std::array<int, 4>>> partial_terms(const CubicSurface& f, int v) {
  std::vector<std::pair<Complexd, std::array<int, 4>>> terms;
  for (int i = 0; i < kNumCubicMonomials; ++i) {
    const Complexd c = f.coeff(i);
    const auto& e = cubic_monomials()[static_cast<std::size_t>(i)];
    if (c == 0.0 || e[static_cast<std::size_t>(v)] == 0) continue;
    std::array<int, 4> d = e;
    --d[static_cast<std::size_t>(v)];
    terms.emplace_back(c * static_cast<double>(e[static_cast<std::size_t>(v)]), d);
  }
  return terms;
}

}  // namespace

std::array<Complexd, 4> restrict_to_line(const CubicSurface& f, const LineChart& chart,
                                         const std::array<Complexd, 4>& params) {
  return substitute_chart<4>(chart, params, cubic_terms(f));
}

std::array<std::array<Complexd, 4>, 4> restriction_jacobian(const CubicSurface& f, const LineChart& chart,
                                                            const std::array<Complexd, 4>& params) {
  // d residual/d a = w * (dF/dx_i restricted), and likewise with z and x_j.
  const std::array<Complexd, 3> qi = substitute_chart<3>(chart, params, partial_terms(f, chart.dep0));
  const std::array<Complexd, 3> qj = substitute_chart<3>(chart, params, partial_terms(f, chart.dep1));
  std::array<std::array<Complexd, 4>, 4> jac{};
  for (int r = 0; r < 4; ++r) {
    jac[static_cast<std::size_t>(r)][0] = r < 3 ? qi[static_cast<std::size_t>(r)] : Complexd(0.0);
    jac[static_cast<std::size_t>(r)][1] = r > 0 ? qi[static_cast<std::size_t>(r - 1)] : Complexd(0.0);
    jac[static_cast<std::size_t>(r)][2] = r < 3 ? qj[static_cast<std::size_t>(r)] : Complexd(0.0);
    jac[static_cast<std::size_t>(r)][3] = r > 0 ? qj[static_cast<std::size_t>(r - 1)] : Complexd(0.0);
  }
  return jac;
}

std::vector<ProjectiveLine> fermat_lines_exact() {
  const Complexd Z(0.5, std::sqrt(3.0) / 2.0);   // exp(i pi/3)
  const Complexd B = std::conj(Z);               // exp(-i pi/3)
  const Complexd O(1.0), M(-1.0), N(0.0);
  struct Row {
    Vec4c p, q;
  };
  // x_j = mu x_i, x_l = nu x_k over the three coordinate pairings, mu and nu
  // cube roots of -1; one transposition-type pair (mu or nu = -1, not both),
  // one with neither equal to -1, and the three fully real lines.
  const std::array<Row, 27> rows = {{
      {{O, M, N, N}, {N, N, O, Z}}, {{O, M, N, N}, {N, N, O, B}},
      {{O, Z, N, N}, {N, N, O, M}}, {{O, B, N, N}, {N, N, O, M}},
      {{O, N, Z, N}, {N, O, N, M}}, {{O, N, B, N}, {N, O, N, M}},
      {{O, N, M, N}, {N, O, N, Z}}, {{O, N, M, N}, {N, O, N, B}},
      {{O, N, N, Z}, {N, O, M, N}}, {{O, N, N, B}, {N, O, M, N}},
      {{O, N, N, M}, {N, O, Z, N}}, {{O, N, N, M}, {N, O, B, N}},
      {{O, Z, N, N}, {N, N, O, Z}}, {{O, Z, N, N}, {N, N, O, B}},
      {{O, B, N, N}, {N, N, O, Z}}, {{O, B, N, N}, {N, N, O, B}},
      {{O, N, Z, N}, {N, O, N, Z}}, {{O, N, Z, N}, {N, O, N, B}},
      {{O, N, B, N}, {N, O, N, Z}}, {{O, N, B, N}, {N, O, N, B}},
      {{O, N, N, Z}, {N, O, Z, N}}, {{O, N, N, Z}, {N, O, B, N}},
      {{O, N, N, B}, {N, O, Z, N}}, {{O, N, N, B}, {N, O, B, N}},
      {{O, M, N, N}, {N, N, O, M}}, {{O, N, M, N}, {N, O, N, M}},
      {{O, N, N, M}, {N, O, M, N}},
  }};
  std::vector<ProjectiveLine> lines;
  lines.reserve(27);
  for (const Row& r : rows) lines.push_back(make_line(r.p, r.q));
  return lines;
}

}  // namespace cubiclines
