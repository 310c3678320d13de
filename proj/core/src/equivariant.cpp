#include "cubiclines/equivariant.hpp"

#include <algorithm>

namespace cubiclines {

OrbitDecomposition euler_number(const std::vector<ProjectiveLine>& lines, const GroupContext& g,
                                double tol_match) {
  auto act = [](const Perm& p, const ProjectiveLine& l) { return act_on_line(p, l); };
  auto eq = [tol_match](const ProjectiveLine& a, const ProjectiveLine& b) {
    return projective_distance(a.plucker, b.plucker) < tol_match;
  };

  OrbitDecomposition out;
  out.group = &g;
  out.euler_number = BurnsideElement(g);

  const OrbitPartition part = orbits(g.group(), lines, act, eq);
  for (const auto& block : part.blocks) {
    LineOrbit orbit;
    orbit.members = block;
    orbit.representative = block.front();
    const Subgroup stab = stabilizer(g.group(), lines[static_cast<std::size_t>(block.front())], act, eq);
    orbit.stabilizer_class = g.class_of(stab);
    out.euler_number += transfer(g, orbit.stabilizer_class);
    out.line_orbits.push_back(std::move(orbit));
  }
  std::sort(out.line_orbits.begin(), out.line_orbits.end(), [](const LineOrbit& a, const LineOrbit& b) {
    if (a.stabilizer_class != b.stabilizer_class) return a.stabilizer_class < b.stabilizer_class;
    return a.members.front() < b.members.front();
  });
  return out;
}

std::vector<Table1Row> table1(const std::vector<ProjectiveLine>& lines, double tol_match) {
  const OrbitDecomposition top = euler_number(lines, GroupContext::s4(), tol_match);
  std::vector<Table1Row> rows;
  rows.reserve(kNumS4Classes);
  for (int c = 0; c < kNumS4Classes; ++c) {
    Table1Row row;
    row.subgroup = static_cast<SubgroupClass>(c);
    const GroupContext& ctx = GroupContext::of(row.subgroup);
    row.direct = euler_number(lines, ctx, tol_match);
    row.restricted = restrict_to(top.euler_number, ctx);
    if (!(row.direct.euler_number == row.restricted))
      throw TableMismatchError("direct orbit computation disagrees with restriction for group " +
                               std::string(class_name(row.subgroup)) + ": " +
                               row.direct.euler_number.to_bracket() + " vs " + row.restricted.to_bracket());
    rows.push_back(std::move(row));
  }
  return rows;
}

ConservationCheck verify_conservation(const CubicSurface& f1, const CubicSurface& f2, const GroupContext& g,
                                      std::uint64_t seed, const FinderOptions& opts) {
  ConservationCheck check;
  check.first = euler_number(find_lines(f1, seed, opts).lines, g);
  check.second = euler_number(find_lines(f2, seed + 1, opts).lines, g);
  check.equal = check.first.euler_number == check.second.euler_number;
  return check;
}

}  // namespace cubiclines
