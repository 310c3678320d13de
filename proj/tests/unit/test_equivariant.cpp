#include <algorithm>
#include <cmath>

#include "cubiclines/equivariant.hpp"
#include "doctest.h"

using namespace cubiclines;

namespace {

// The eleven orbit-decomposition rows for the 27 lines on a smooth symmetric
// cubic, keyed by acting subgroup class, frozen as bracket strings. The
// K4norm row is pinned by its fixed-point counts (each involution of the
// normal Klein group fixes 7 lines), cross-checked in test_burnside.
const char* expected_row(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::e: return "27[e/e]";
    case SubgroupClass::C2o: return "12[C2/e] + 3[C2/C2]";
    case SubgroupClass::C2e: return "10[C2/e] + 7[C2/C2]";
    case SubgroupClass::C3: return "9[C3/e]";
    case SubgroupClass::K4norm: return "3[K4/e] + 2[K4/C2L] + 2[K4/C2R] + 2[K4/C2D] + 3[K4/K4]";
    case SubgroupClass::K4: return "4[K4/e] + [K4/C2L] + [K4/C2R] + 3[K4/C2D] + [K4/K4]";
    case SubgroupClass::C4: return "5[C4/e] + 3[C4/C2o] + [C4/C4]";
    case SubgroupClass::S3: return "3[S3/e] + 3[S3/C2o]";
    case SubgroupClass::D8: return "[D8/e] + 3[D8/C2e] + [D8/C2o] + [D8/K4] + [D8/D8]";
    case SubgroupClass::A4: return "[A4/e] + 2[A4/C2e] + [A4/K4]";
    case SubgroupClass::S4: return "[S4/C2o] + [S4/C2e] + [S4/D8]";
  }
  return "";
}

Perm cyc(std::initializer_list<int> pts) {
  return Perm::cycle(std::span<const int>(pts.begin(), pts.size()));
}

}  // namespace

TEST_CASE("coordinate permutation action on lines") {
  const auto lines = fermat_lines_exact();
  const CubicSurface fermat = CubicSurface::builtin("fermat");

  for (const auto& line : lines)
    CHECK(projective_distance(act_on_line(Perm(), line).plucker, line.plucker) < 1e-14);

  // Composition law (g h) . x = g . (h . x) on a few lines and all pairs of
  // generators.
  const std::array<Perm, 3> gens{cyc({0, 1}), cyc({0, 1, 2, 3}), cyc({1, 2})};
  for (const Perm& g : gens)
    for (const Perm& h : gens)
      for (int idx : {0, 13, 24}) {
        const auto lhs = act_on_line(g * h, lines[static_cast<std::size_t>(idx)]);
        const auto rhs = act_on_line(g, act_on_line(h, lines[static_cast<std::size_t>(idx)]));
        CHECK(projective_distance(lhs.plucker, rhs.plucker) < 1e-13);
      }

  // The transposition (1 2) fixes the line (w, -w, z, zeta z) - it stays in
  // the same orbit - while a 4-cycle moves it to another of the 27.
  const ProjectiveLine blue = lines[0];
  CHECK(projective_distance(act_on_line(cyc({0, 1}), blue).plucker, blue.plucker) < 1e-13);
  const ProjectiveLine moved = act_on_line(cyc({0, 1, 2, 3}), blue);
  const bool still_a_line =
      std::any_of(lines.begin(), lines.end(),
                  [&](const ProjectiveLine& l) { return projective_distance(moved.plucker, l.plucker) < 1e-8; });
  CHECK(still_a_line);

  // On a symmetric surface the action preserves residuals.
  for (const Perm& g : gens)
    for (const auto& line : lines) {
      const ProjectiveLine image = act_on_line(g, line);
      const LineChart& chart = line_charts()[static_cast<std::size_t>(chart_of_line(image))];
      const auto res = restrict_to_line(fermat, chart, chart_params(image, chart));
      for (const Complexd& r : res) CHECK(std::abs(r) < 1e-12);
    }
}

TEST_CASE("euler_number of the Fermat lines under named groups") {
  const auto lines = fermat_lines_exact();

  const OrbitDecomposition s4 = euler_number(lines, GroupContext::s4());
  CHECK(s4.euler_number.to_bracket() == "[S4/C2o] + [S4/C2e] + [S4/D8]");
  std::vector<std::size_t> sizes;
  for (const auto& orbit : s4.line_orbits) sizes.push_back(orbit.members.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{3, 12, 12});

  const OrbitDecomposition trivial = euler_number(lines, GroupContext::of(SubgroupClass::e));
  CHECK(trivial.euler_number.to_bracket() == "27[e/e]");
  CHECK(trivial.line_orbits.size() == 27);

  const OrbitDecomposition d8 = euler_number(lines, GroupContext::of(SubgroupClass::D8));
  CHECK(d8.euler_number.to_bracket() == "[D8/e] + 3[D8/C2e] + [D8/C2o] + [D8/K4] + [D8/D8]");

  // The numerically found lines give the identical answer.
  const auto found = find_lines(CubicSurface::builtin("fermat"), 3).lines;
  CHECK(euler_number(found, GroupContext::s4()).euler_number == s4.euler_number);
}

TEST_CASE("orbit invariants") {
  const auto lines = fermat_lines_exact();
  auto act = [](const Perm& p, const ProjectiveLine& l) { return act_on_line(p, l); };
  auto eq = [](const ProjectiveLine& a, const ProjectiveLine& b) {
    return projective_distance(a.plucker, b.plucker) < 1e-8;
  };

  for (SubgroupClass c : {SubgroupClass::S4, SubgroupClass::D8, SubgroupClass::C4, SubgroupClass::S3}) {
    const GroupContext& ctx = GroupContext::of(c);
    const OrbitDecomposition dec = euler_number(lines, ctx);

    CHECK(dec.euler_number.nonnegative());
    CHECK(perm_character(dec.euler_number).values[0] == 27);

    int total = 0;
    for (const auto& orbit : dec.line_orbits) {
      total += static_cast<int>(orbit.members.size());
      // Orbit-stabilizer: |orbit| * |stabilizer| = |G|, via the class order.
      CHECK(static_cast<int>(orbit.members.size()) ==
            ctx.group().order() / ctx.representative(orbit.stabilizer_class).order());
      // All members have conjugate stabilizers (same local class).
      for (int idx : orbit.members) {
        const Subgroup stab = stabilizer(ctx.group(), lines[static_cast<std::size_t>(idx)], act, eq);
        CHECK(ctx.class_of(stab) == orbit.stabilizer_class);
      }
    }
    CHECK(total == 27);
  }
}

TEST_CASE("orbit partition is stable across matching tolerances") {
  const auto lines = fermat_lines_exact();
  const OrbitDecomposition base = euler_number(lines, GroupContext::s4(), 1e-8);
  for (double tol : {1e-7, 1e-6, 1e-5, 1e-4}) {
    const OrbitDecomposition other = euler_number(lines, GroupContext::s4(), tol);
    REQUIRE(other.line_orbits.size() == base.line_orbits.size());
    for (std::size_t i = 0; i < base.line_orbits.size(); ++i)
      CHECK(other.line_orbits[i].members == base.line_orbits[i].members);
    CHECK(other.euler_number == base.euler_number);
  }
}

TEST_CASE("table1: direct computation equals restriction, rows match the goldens") {
  const auto lines = find_lines(CubicSurface::builtin("fermat"), 5).lines;
  const auto rows = table1(lines);
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) {
    CHECK(row.direct.euler_number == row.restricted);
    CHECK(row.direct.euler_number.to_bracket() == expected_row(row.subgroup));
  }
}

TEST_CASE("euler_number rejects non-closed line sets") {
  const auto lines = fermat_lines_exact();
  std::vector<ProjectiveLine> truncated(lines.begin(), lines.begin() + 5);
  CHECK_THROWS_AS(euler_number(truncated, GroupContext::s4()), PointsNotClosedError);

  // A surface symmetric only under a subgroup: acting with the full group on
  // a non-symmetric surface's lines must fail closure. Scale one coordinate
  // of the Fermat lines to break the symmetry without destroying the set.
  std::vector<ProjectiveLine> skewed;
  for (const auto& line : lines) {
    Vec4c p = line.span[0], q = line.span[1];
    p[0] *= 2.0;
    q[0] *= 2.0;
    skewed.push_back(make_line(p, q));
  }
  CHECK_THROWS_AS(euler_number(skewed, GroupContext::s4()), PointsNotClosedError);
}

TEST_CASE("conservation of the orbit type across symmetric surfaces") {
  const CubicSurface fermat = CubicSurface::builtin("fermat");
  const CubicSurface clebsch = CubicSurface::builtin("clebsch");
  const GroupContext& s4 = GroupContext::s4();

  const ConservationCheck self = verify_conservation(fermat, fermat, s4, 11);
  CHECK(self.equal);

  const ConservationCheck cross = verify_conservation(fermat, clebsch, s4, 12);
  CHECK(cross.equal);
  CHECK(cross.first.euler_number.to_bracket() == "[S4/C2o] + [S4/C2e] + [S4/D8]");

  for (std::uint64_t seed : {101ull, 202ull}) {
    const ConservationCheck random = verify_conservation(fermat, random_symmetric_cubic(seed), s4, seed);
    CHECK(random.equal);
  }
}
