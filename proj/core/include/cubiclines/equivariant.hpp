#pragma once

#include <vector>

#include "cubiclines/burnside.hpp"
#include "cubiclines/line_finder.hpp"

namespace cubiclines {

struct LineOrbit {
  int representative = 0;      // index of the smallest member
  std::vector<int> members;    // sorted line indices
  int stabilizer_class = 0;    // local subgroup class in the acting group
};

// G-orbit structure of a line set together with its Burnside-valued count:
// one transfer [G/G_x] per orbit.
struct OrbitDecomposition {
  const GroupContext* group = nullptr;
  std::vector<LineOrbit> line_orbits;  // ordered by (class order, min member)
  BurnsideElement euler_number;

  OrbitDecomposition() : euler_number(GroupContext::s4()) {}
};

// Decomposes `lines` into orbits of g.group() (matching lines by projective
// Plücker distance below tol_match), classifies every stabilizer, and sums
// the transfers. Throws PointsNotClosedError when the set is not closed under
// the action, i.e. the surface was not symmetric under this group.
OrbitDecomposition euler_number(const std::vector<ProjectiveLine>& lines, const GroupContext& g,
                                double tol_match = 1e-8);

struct Table1Row {
  SubgroupClass subgroup = SubgroupClass::e;
  OrbitDecomposition direct;     // computed by acting with the class representative
  BurnsideElement restricted;    // restriction of the S4 answer

  Table1Row() : restricted(GroupContext::s4()) {}
};

// One row per subgroup class of S4; every row is computed both directly and
// by restriction, and the two must agree exactly (TableMismatchError).
std::vector<Table1Row> table1(const std::vector<ProjectiveLine>& lines, double tol_match = 1e-8);

struct ConservationCheck {
  bool equal = false;
  OrbitDecomposition first, second;
};

// Conservation across sections: the two orbit decompositions must coincide as
// Burnside elements for any two smooth G-symmetric cubics.
ConservationCheck verify_conservation(const CubicSurface& f1, const CubicSurface& f2, const GroupContext& g,
                                      std::uint64_t seed, const FinderOptions& opts = {});

}  // namespace cubiclines
