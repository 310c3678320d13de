#include <array>
#include <cmath>
#include <complex>
#include <map>

#include "cubiclines/errors.hpp"
#include "cubiclines/line_finder.hpp"
#include "doctest.h"

using namespace cubiclines;

namespace {

const Complexd kZeta(0.5, std::sqrt(3.0) / 2.0);

// Deterministic pseudo-random doubles for property checks.
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t s) : state(s) {}
  double uniform() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
  double sym() { return 2.0 * uniform() - 1.0; }
  Complexd cplx() { return {sym(), sym()}; }
};

// Oracle: coefficient map of (x0+x1+x2+x3)^3 by brute-force expansion.
std::map<std::array<int, 4>, double> cube_of_sum() {
  std::map<std::array<int, 4>, double> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        std::array<int, 4> e{};
        e[static_cast<std::size_t>(i)]++;
        e[static_cast<std::size_t>(j)]++;
        e[static_cast<std::size_t>(k)]++;
        out[e] += 1.0;
      }
  return out;
}

}  // namespace

TEST_CASE("builtin surfaces") {
  const CubicSurface fermat = CubicSurface::builtin("fermat");
  CHECK(fermat.coeff({3, 0, 0, 0}) == Complexd(1.0));
  CHECK(fermat.coeff({1, 1, 1, 0}) == Complexd(0.0));
  CHECK(fermat.is_symmetric());
  CHECK(fermat.is_real());

  // Clebsch = sum of cubes minus cube of the sum; oracle expands the cube.
  const CubicSurface clebsch = CubicSurface::builtin("clebsch");
  const auto expansion = cube_of_sum();
  for (int m = 0; m < kNumCubicMonomials; ++m) {
    const auto& e = cubic_monomials()[static_cast<std::size_t>(m)];
    const double pure = (e[0] == 3 || e[1] == 3 || e[2] == 3 || e[3] == 3) ? 1.0 : 0.0;
    CHECK(clebsch.coeff(m) == Complexd(pure - expansion.at(e)));
  }
  CHECK(clebsch.coeff({1, 1, 1, 0}) == Complexd(-6.0));
  CHECK(clebsch.coeff({2, 1, 0, 0}) == Complexd(-3.0));
  CHECK(clebsch.is_symmetric());
  CHECK(clebsch.is_real());

  CHECK_THROWS_AS(CubicSurface::builtin("quartic"), UnknownNameError);
  CHECK(CubicSurface::symmetric_basis(1, 0, 0).coeffs() == fermat.coeffs());
}

TEST_CASE("evaluation and gradient agree with per-monomial sums") {
  TestRng rng(7);
  std::array<Complexd, kNumCubicMonomials> coeffs;
  for (auto& c : coeffs) c = rng.cplx();
  const CubicSurface f = CubicSurface::from_coeffs(coeffs);
  for (int trial = 0; trial < 5; ++trial) {
    const std::array<Complexd, 4> x{rng.cplx(), rng.cplx(), rng.cplx(), rng.cplx()};
    Complexd direct = 0.0;
    for (int m = 0; m < kNumCubicMonomials; ++m) {
      const auto& e = cubic_monomials()[static_cast<std::size_t>(m)];
      direct += coeffs[static_cast<std::size_t>(m)] * std::pow(x[0], e[0]) * std::pow(x[1], e[1]) *
                std::pow(x[2], e[2]) * std::pow(x[3], e[3]);
    }
    CHECK(std::abs(f(x) - direct) < 1e-12);

    // Euler identity for degree-3 homogeneous forms: x . grad F = 3 F.
    const auto g = f.gradient(x);
    Complexd dot = 0.0;
    for (int i = 0; i < 4; ++i) dot += x[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
    CHECK(std::abs(dot - 3.0 * f(x)) < 1e-12);
  }
}

TEST_CASE("plucker coordinates and projective distance") {
  const Vec6c p = plucker_of_span({1.0, -1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, kZeta});
  CHECK(plucker_quadric_residual(p) < 1e-14);
  CHECK(projective_distance(p, p) == 0.0);

  Vec6c scaled = p;
  const Complexd lambda(0.3, -1.7);
  for (auto& c : scaled) c *= lambda;
  CHECK(projective_distance(p, scaled) < 1e-12);

  CHECK_THROWS_AS(plucker_of_span({1.0, 2.0, 3.0, 4.0}, {2.0, 4.0, 6.0, 8.0}), DependentSpanError);
  CHECK_THROWS_AS(make_line({1.0, 2.0, 3.0, 4.0}, {2.0, 4.0, 6.0, 8.0}), DependentSpanError);

  // Normalization puts a literal 1 at the largest-modulus slot.
  bool has_unit = false;
  for (const Complexd& c : p) has_unit = has_unit || c == Complexd(1.0);
  CHECK(has_unit);
}

TEST_CASE("charts round-trip lines") {
  TestRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjectiveLine line = make_line({rng.cplx(), rng.cplx(), rng.cplx(), rng.cplx()},
                                          {rng.cplx(), rng.cplx(), rng.cplx(), rng.cplx()});
    const int ci = chart_of_line(line);
    const LineChart& chart = line_charts()[static_cast<std::size_t>(ci)];
    const auto params = chart_params(line, chart);
    for (const Complexd& c : params) CHECK(std::abs(c) <= 1.0 + 1e-9);  // best chart bounds the params
    const ProjectiveLine back = line_from_chart(chart, params);
    CHECK(projective_distance(line.plucker, back.plucker) < 1e-12);
  }
}

TEST_CASE("restrict_to_line on the Fermat cubic") {
  const CubicSurface fermat = CubicSurface::builtin("fermat");
  // Chart with free coordinates (x0, x2): x1 = a x0 + b x2, x3 = c x0 + d x2.
  const LineChart& chart = line_charts()[1];
  REQUIRE(chart.free0 == 0);
  REQUIRE(chart.free1 == 2);

  const auto on_line = restrict_to_line(fermat, chart, {-1.0, 0.0, 0.0, -1.0});
  for (const Complexd& r : on_line) CHECK(std::abs(r) < 1e-15);

  // The coordinate line x1 = x3 = 0 restricts to w^3 + z^3.
  const auto coord = restrict_to_line(fermat, chart, {0.0, 0.0, 0.0, 0.0});
  CHECK(coord[0] == Complexd(1.0));
  CHECK(coord[1] == Complexd(0.0));
  CHECK(coord[2] == Complexd(0.0));
  CHECK(coord[3] == Complexd(1.0));
}

TEST_CASE("restriction is linear in the surface coefficients") {
  TestRng rng(23);
  std::array<Complexd, kNumCubicMonomials> c1, c2;
  for (int i = 0; i < kNumCubicMonomials; ++i) {
    c1[static_cast<std::size_t>(i)] = rng.cplx();
    c2[static_cast<std::size_t>(i)] = rng.cplx();
  }
  std::array<Complexd, kNumCubicMonomials> sum;
  for (int i = 0; i < kNumCubicMonomials; ++i)
    sum[static_cast<std::size_t>(i)] = c1[static_cast<std::size_t>(i)] + c2[static_cast<std::size_t>(i)];
  const CubicSurface f1 = CubicSurface::from_coeffs(c1);
  const CubicSurface f2 = CubicSurface::from_coeffs(c2);
  const CubicSurface fs = CubicSurface::from_coeffs(sum);
  for (int ci = 0; ci < 6; ++ci) {
    const LineChart& chart = line_charts()[static_cast<std::size_t>(ci)];
    const std::array<Complexd, 4> params{rng.cplx(), rng.cplx(), rng.cplx(), rng.cplx()};
    const auto r1 = restrict_to_line(f1, chart, params);
    const auto r2 = restrict_to_line(f2, chart, params);
    const auto rs = restrict_to_line(fs, chart, params);
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(rs[static_cast<std::size_t>(k)] - r1[static_cast<std::size_t>(k)] -
                     r2[static_cast<std::size_t>(k)]) < 1e-12);
  }
}

TEST_CASE("analytic Jacobian matches central differences") {
  TestRng rng(31);
  std::array<Complexd, kNumCubicMonomials> coeffs;
  for (auto& c : coeffs) c = rng.cplx();
  const CubicSurface f = CubicSurface::from_coeffs(coeffs);
  const double h = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const LineChart& chart = line_charts()[static_cast<std::size_t>(trial % 6)];
    std::array<Complexd, 4> params{rng.cplx(), rng.cplx(), rng.cplx(), rng.cplx()};
    const auto jac = restriction_jacobian(f, chart, params);
    for (int col = 0; col < 4; ++col) {
      auto plus = params, minus = params;
      plus[static_cast<std::size_t>(col)] += h;
      minus[static_cast<std::size_t>(col)] -= h;
      const auto rp = restrict_to_line(f, chart, plus);
      const auto rm = restrict_to_line(f, chart, minus);
      for (int row = 0; row < 4; ++row) {
        const Complexd numeric =
            (rp[static_cast<std::size_t>(row)] - rm[static_cast<std::size_t>(row)]) / (2.0 * h);
        const Complexd analytic = jac[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        CHECK(std::abs(numeric - analytic) <= 1e-6 * std::max(1.0, std::abs(analytic)));
      }
    }
  }
}

TEST_CASE("the exact Fermat lines") {
  const auto lines = fermat_lines_exact();
  REQUIRE(lines.size() == 27);
  const CubicSurface fermat = CubicSurface::builtin("fermat");

  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(plucker_quadric_residual(lines[i].plucker) < 1e-14);
    const LineChart& chart = line_charts()[static_cast<std::size_t>(chart_of_line(lines[i]))];
    const auto res = restrict_to_line(fermat, chart, chart_params(lines[i], chart));
    for (const Complexd& r : res) CHECK(std::abs(r) < 1e-14);
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      CHECK(projective_distance(lines[i].plucker, lines[j].plucker) > 0.1);
  }

  // Exactly three lines have an all-real Plücker vector: the pairings with
  // both multipliers equal to -1.
  int real_count = 0;
  for (const auto& line : lines) {
    double imag = 0.0;
    for (const Complexd& c : line.plucker) imag = std::max(imag, std::abs(c.imag()));
    if (imag < 1e-14) ++real_count;
  }
  CHECK(real_count == 3);
}

TEST_CASE("find_lines recovers the 27 Fermat lines bijectively") {
  const CubicSurface fermat = CubicSurface::builtin("fermat");
  const LineFinderReport report = find_lines(fermat, 7);
  REQUIRE(report.lines.size() == 27);
  REQUIRE(report.residuals.size() == 27);

  const auto exact = fermat_lines_exact();
  std::vector<bool> used(27, false);
  for (const auto& line : report.lines) {
    CHECK(plucker_quadric_residual(line.plucker) < 1e-10);
    int matches = 0;
    for (std::size_t j = 0; j < exact.size(); ++j) {
      if (projective_distance(line.plucker, exact[j].plucker) < 1e-8) {
        ++matches;
        CHECK(!used[j]);
        used[j] = true;
      }
    }
    CHECK(matches == 1);
    CHECK(is_simple_zero(fermat, line));
  }
  for (double r : report.residuals) CHECK(r <= 1e-10);
}

TEST_CASE("find_lines is deterministic, including across thread counts") {
  const CubicSurface clebsch = CubicSurface::builtin("clebsch");
  const LineFinderReport a = find_lines(clebsch, 42);
  const LineFinderReport b = find_lines(clebsch, 42);
  FinderOptions threaded;
  threaded.threads = 4;
  const LineFinderReport c = find_lines(clebsch, 42, threaded);
  REQUIRE(a.lines.size() == 27);
  REQUIRE(c.lines.size() == 27);
  for (std::size_t i = 0; i < 27; ++i) {
    for (int k = 0; k < 6; ++k) {
      CHECK(a.lines[i].plucker[static_cast<std::size_t>(k)] == b.lines[i].plucker[static_cast<std::size_t>(k)]);
      CHECK(a.lines[i].plucker[static_cast<std::size_t>(k)] == c.lines[i].plucker[static_cast<std::size_t>(k)]);
    }
    CHECK(a.residuals[i] == b.residuals[i]);
    CHECK(a.residuals[i] == c.residuals[i]);
  }
  CHECK(a.stats.converged == c.stats.converged);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(find_lines(CubicSurface(), 1), DegenerateSurfaceError);
  // x0^3 = 0 is a triple plane; nowhere near 27 simple lines.
  std::array<Complexd, kNumCubicMonomials> coeffs{};
  coeffs[0] = 1.0;
  FinderOptions cheap;
  cheap.newton_starts = 40;
  CHECK_THROWS_AS(find_lines(CubicSurface::from_coeffs(coeffs), 1, cheap), DegenerateSurfaceError);
}

TEST_CASE("random symmetric cubics are symmetric, real, and smooth") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const CubicSurface f = random_symmetric_cubic(seed);
    CHECK(f.is_symmetric());
    CHECK(f.is_real());
    const LineFinderReport report = find_lines(f, seed);
    CHECK(report.lines.size() == 27);
  }
}
