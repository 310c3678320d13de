#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclines/errors.hpp"
#include "cubiclines/permutation.hpp"

namespace cubiclines {

// Conjugacy classes of subgroups of S4, in table-of-marks order
// (nondecreasing subgroup order, fixed tie-break).
enum class SubgroupClass : int {
  e = 0,
  C2o,     // generated by a transposition
  C2e,     // generated by a double transposition
  C3,
  K4norm,  // the normal Klein four-group
  K4,      // the non-normal Klein four-groups
  C4,
  S3,
  D8,
  A4,
  S4,
};
inline constexpr int kNumS4Classes = 11;

std::string_view class_name(SubgroupClass c);
std::optional<SubgroupClass> class_from_name(std::string_view name);

// A subgroup of S4: a sorted element list, closed under composition and
// inverse, containing the identity.
class Subgroup {
public:
  Subgroup();  // trivial group
  static Subgroup generated_by(std::span<const Perm> gens);
  // Validates the group axioms.
  static Subgroup from_elements(std::vector<Perm> elems);
  static const Subgroup& s4();
  static const Subgroup& alternating();

  const std::vector<Perm>& elements() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }
  bool contains(const Perm& g) const;
  bool contains_subgroup(const Subgroup& h) const;
  Subgroup conjugated_by(const Perm& g) const;  // g H g^{-1}
  bool is_normal_in(const Subgroup& g) const;

  // Bit i set iff Perm::s4()[i] belongs to the subgroup.
  std::uint32_t mask() const { return mask_; }

  bool operator==(const Subgroup& o) const { return mask_ == o.mask_; }
  bool operator<(const Subgroup& o) const;  // by order, then by mask

private:
  std::vector<Perm> elems_;
  std::uint32_t mask_ = 0;
  void rebuild_mask();
};

// Every subgroup of g exactly once, deterministically ordered (bottom-up
// closure over generator sets).
std::vector<Subgroup> subgroups_of(const Subgroup& g);

// All 30 subgroups of S4, deterministically ordered.
const std::vector<Subgroup>& all_subgroups();

// Name of the S4-conjugacy class of h, by order / cycle content.
SubgroupClass classify_subgroup(const Subgroup& h);

// Canonical class representatives, e.g. D8 = <(0 2)(1 3), (0 1), (2 3)>.
const Subgroup& class_representative(SubgroupClass c);

// ---------------------------------------------------------------------------
// Generic orbit/stabilizer machinery for an action given by callbacks.
// act : (Perm, int point index) -> Point;  eq : (Point, int point index) -> bool.
// ---------------------------------------------------------------------------

// {g in G : g.x == x}. The action property makes the result a subgroup.
template <typename Point, typename Act, typename Eq>
Subgroup stabilizer(const Subgroup& g, const Point& x, Act&& act, Eq&& eq) {
  std::vector<Perm> fix;
  for (const Perm& p : g.elements())
    if (eq(act(p, x), x)) fix.push_back(p);
  return Subgroup::from_elements(std::move(fix));
}

struct OrbitPartition {
  // Sorted index blocks; blocks ordered by smallest member.
  std::vector<std::vector<int>> blocks;
};

// Partition `points` into G-orbits. Throws PointsNotClosedError if some
// g·x matches no listed point under eq.
template <typename Point, typename Act, typename Eq>
OrbitPartition orbits(const Subgroup& g, const std::vector<Point>& points, Act&& act, Eq&& eq) {
  const int n = static_cast<int>(points.size());
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  OrbitPartition part;
  for (int i = 0; i < n; ++i) {
    if (block_of[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> block;
    for (const Perm& p : g.elements()) {
      Point y = act(p, points[static_cast<std::size_t>(i)]);
      int match = -1;
      for (int j = 0; j < n; ++j) {
        if (eq(y, points[static_cast<std::size_t>(j)])) {
          match = j;
          break;
        }
      }
      if (match < 0)
        throw PointsNotClosedError("point set is not closed under the group action");
      if (block_of[static_cast<std::size_t>(match)] < 0) {
        block_of[static_cast<std::size_t>(match)] = static_cast<int>(part.blocks.size());
        block.push_back(match);
      }
    }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

// ---------------------------------------------------------------------------
// GroupContext: everything Burnside arithmetic needs about one ambient group —
// its subgroup conjugacy classes with display names and order, the table of
// marks, and element conjugacy classes for permutation characters.
//
// Display names follow the classical labels: a class may repeat a name when
// the distinction is pure bookkeeping (e.g. the two order-2 even classes of
// D8 both display as "C2e"); rendering merges such terms, while arithmetic
// always runs on the full per-class coefficient vector.
// ---------------------------------------------------------------------------
class GroupContext {
public:
  // Cached context of the canonical representative of an S4 class.
  static const GroupContext& of(SubgroupClass ambient);
  static const GroupContext& s4();
  // Context of an arbitrary subgroup (cached by element mask).
  static const GroupContext& of_subgroup(const Subgroup& g);

  const Subgroup& group() const { return group_; }
  SubgroupClass ambient_class() const { return ambient_; }
  std::string_view name() const { return name_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const Subgroup& representative(int c) const { return classes_[static_cast<std::size_t>(c)].rep; }
  std::string_view local_name(int c) const { return classes_[static_cast<std::size_t>(c)].name; }
  int index_in_group(int c) const;  // [G : rep(c)]
  // Class of a subgroup h <= group().
  int class_of(const Subgroup& h) const;
  // Classes whose display name equals `name` (possibly several; empty if none).
  std::vector<int> classes_named(std::string_view name) const;

  // Number of rep(h)-fixed points on G/rep(k).
  int mark(int h, int k) const { return marks_[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)]; }
  // True iff some conjugate of rep(h) lies inside rep(k).
  bool subconjugate(int h, int k) const;

  int num_element_classes() const { return static_cast<int>(element_classes_.size()); }
  const Perm& element_rep(int ec) const { return element_classes_[static_cast<std::size_t>(ec)].rep; }
  int element_class_size(int ec) const { return element_classes_[static_cast<std::size_t>(ec)].size; }
  int element_class_of(const Perm& g) const;
  // Subgroup class of the cyclic group <element_rep(ec)>.
  int class_of_cyclic(int ec) const { return element_classes_[static_cast<std::size_t>(ec)].cyclic_class; }

private:
  explicit GroupContext(const Subgroup& g);

  struct LocalClass {
    Subgroup rep;
    std::string name;
    int order = 1;
    int rank = 0;  // tie-break inside equal order, fixed per ambient
  };
  struct ElementClass {
    Perm rep;
    int size = 0;
    int cyclic_class = 0;
  };

  Subgroup group_;
  SubgroupClass ambient_;
  std::string name_;
  std::vector<LocalClass> classes_;
  std::vector<std::uint32_t> member_masks_;  // parallel: masks of all subgroups, grouped
  std::vector<int> member_class_;            // class index per entry of member_masks_
  std::vector<std::vector<int>> marks_;
  std::vector<ElementClass> element_classes_;
  std::vector<int> element_class_of_;  // indexed by Perm::index()
};

}  // namespace cubiclines
