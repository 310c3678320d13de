#include "cubiclines/subgroups.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace cubiclines {

namespace {

Perm cyc(std::initializer_list<int> pts) {
  return Perm::cycle(std::span<const int>(pts.begin(), pts.size()));
}

int moved_points(const Perm& p) {
  int n = 0;
  for (int i = 0; i < Perm::kPoints; ++i)
    if (p(i) != i) ++n;
  return n;
}

int min_moved_point(const Perm& p) {
  for (int i = 0; i < Perm::kPoints; ++i)
    if (p(i) != i) return i;
  return Perm::kPoints;
}

bool has_four_cycle(const Subgroup& h) {
  for (const Perm& p : h.elements())
    if (p.order() == 4) return true;
  return false;
}

bool all_nontrivial_even(const Subgroup& h) {
  for (const Perm& p : h.elements())
    if (!p.is_identity() && !p.is_even()) return false;
  return true;
}

// Bottom-up closure: seed with all cyclic subgroups, then repeatedly extend
// every known subgroup by one extra generator until nothing new appears.
// Exhaustive for any finite group, instant at |G| <= 24.
std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& g) {
  std::set<std::uint32_t> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.mask()).second) found.push_back(std::move(h));
  };
  add(Subgroup());
  for (const Perm& p : g.elements()) add(Subgroup::generated_by(std::span<const Perm>(&p, 1)));
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup h = found[i];
    for (const Perm& p : g.elements()) {
      if (h.contains(p)) continue;
      std::vector<Perm> gens = h.elements();
      gens.push_back(p);
      add(Subgroup::generated_by(gens));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<Subgroup> subgroups_of(const Subgroup& g) { return enumerate_subgroups_of(g); }

// ---------------------------------------------------------------------------
// SubgroupClass names
// ---------------------------------------------------------------------------

std::string_view class_name(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::e: return "e";
    case SubgroupClass::C2o: return "C2o";
    case SubgroupClass::C2e: return "C2e";
    case SubgroupClass::C3: return "C3";
    case SubgroupClass::K4norm: return "K4norm";
    case SubgroupClass::K4: return "K4";
    case SubgroupClass::C4: return "C4";
    case SubgroupClass::S3: return "S3";
    case SubgroupClass::D8: return "D8";
    case SubgroupClass::A4: return "A4";
    case SubgroupClass::S4: return "S4";
  }
  return "?";
}

std::optional<SubgroupClass> class_from_name(std::string_view name) {
  for (int i = 0; i < kNumS4Classes; ++i) {
    auto c = static_cast<SubgroupClass>(i);
    if (class_name(c) == name) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subgroup
// ---------------------------------------------------------------------------

Subgroup::Subgroup() : elems_{Perm()} { rebuild_mask(); }

void Subgroup::rebuild_mask() {
  mask_ = 0;
  for (const Perm& p : elems_) mask_ |= 1u << p.index();
}

Subgroup Subgroup::generated_by(std::span<const Perm> gens) {
  std::set<Perm> closure{Perm()};
  for (const Perm& g : gens) closure.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> current(closure.begin(), closure.end());
    for (const Perm& a : current)
      for (const Perm& b : current)
        if (closure.insert(a * b).second) grew = true;
  }
  Subgroup h;
  h.elems_.assign(closure.begin(), closure.end());
  h.rebuild_mask();
  return h;
}

Subgroup Subgroup::from_elements(std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup h;
  h.elems_ = std::move(elems);
  h.rebuild_mask();
  if (!h.contains(Perm())) throw Error("element set does not contain the identity");
  for (const Perm& a : h.elems_) {
    if (!h.contains(a.inverse())) throw Error("element set is not closed under inverse");
    for (const Perm& b : h.elems_)
      if (!h.contains(a * b)) throw Error("element set is not closed under composition");
  }
  return h;
}

const Subgroup& Subgroup::s4() {
  static const Subgroup g = [] {
    std::vector<Perm> all(Perm::s4().begin(), Perm::s4().end());
    return from_elements(std::move(all));
  }();
  return g;
}

const Subgroup& Subgroup::alternating() {
  static const Subgroup g = [] {
    std::vector<Perm> evens;
    for (const Perm& p : Perm::s4())
      if (p.is_even()) evens.push_back(p);
    return from_elements(std::move(evens));
  }();
  return g;
}

bool Subgroup::contains(const Perm& g) const { return (mask_ >> g.index()) & 1u; }

bool Subgroup::contains_subgroup(const Subgroup& h) const {
  return (mask_ & h.mask_) == h.mask_;
}

Subgroup Subgroup::conjugated_by(const Perm& g) const {
  std::vector<Perm> conj;
  conj.reserve(elems_.size());
  const Perm gi = g.inverse();
  for (const Perm& h : elems_) conj.push_back(g * h * gi);
  return from_elements(std::move(conj));
}

bool Subgroup::is_normal_in(const Subgroup& g) const {
  for (const Perm& p : g.elements())
    if (conjugated_by(p).mask_ != mask_) return false;
  return true;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return mask_ < o.mask_;
}

const std::vector<Subgroup>& all_subgroups() {
  static const std::vector<Subgroup> subs = enumerate_subgroups_of(Subgroup::s4());
  return subs;
}

SubgroupClass classify_subgroup(const Subgroup& h) {
  switch (h.order()) {
    case 1: return SubgroupClass::e;
    case 2: return h.elements()[1].cycle_type().size() == 1 ? SubgroupClass::C2o : SubgroupClass::C2e;
    case 3: return SubgroupClass::C3;
    case 4:
      if (has_four_cycle(h)) return SubgroupClass::C4;
      return all_nontrivial_even(h) ? SubgroupClass::K4norm : SubgroupClass::K4;
    case 6: return SubgroupClass::S3;
    case 8: return SubgroupClass::D8;
    case 12: return SubgroupClass::A4;
    case 24: return SubgroupClass::S4;
    default: throw Error("impossible subgroup order " + std::to_string(h.order()));
  }
}

const Subgroup& class_representative(SubgroupClass c) {
  static const std::array<Subgroup, kNumS4Classes> reps = [] {
    auto gen = [](std::initializer_list<Perm> gens) {
      return Subgroup::generated_by(std::span<const Perm>(gens.begin(), gens.size()));
    };
    std::array<Subgroup, kNumS4Classes> r;
    r[static_cast<int>(SubgroupClass::e)] = Subgroup();
    r[static_cast<int>(SubgroupClass::C2o)] = gen({cyc({0, 1})});
    r[static_cast<int>(SubgroupClass::C2e)] = gen({cyc({0, 1}) * cyc({2, 3})});
    r[static_cast<int>(SubgroupClass::C3)] = gen({cyc({0, 1, 2})});
    r[static_cast<int>(SubgroupClass::K4norm)] = gen({cyc({0, 1}) * cyc({2, 3}), cyc({0, 2}) * cyc({1, 3})});
    r[static_cast<int>(SubgroupClass::K4)] = gen({cyc({0, 1}), cyc({2, 3})});
    r[static_cast<int>(SubgroupClass::C4)] = gen({cyc({0, 1, 2, 3})});
    r[static_cast<int>(SubgroupClass::S3)] = gen({cyc({0, 1}), cyc({0, 1, 2})});
    r[static_cast<int>(SubgroupClass::D8)] = gen({cyc({0, 2}) * cyc({1, 3}), cyc({0, 1}), cyc({2, 3})});
    r[static_cast<int>(SubgroupClass::A4)] = Subgroup::alternating();
    r[static_cast<int>(SubgroupClass::S4)] = Subgroup::s4();
    return r;
  }();
  return reps[static_cast<int>(c)];
}

// ---------------------------------------------------------------------------
// GroupContext
// ---------------------------------------------------------------------------

namespace {

// Display name of an ambient group inside bracket notation. The order-2 and
// Klein ambients drop the S4 decoration, matching the classical table rows
// ("[C2/C2]", "[K4/e]").
std::string ambient_display_name(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::C2o:
    case SubgroupClass::C2e: return "C2";
    case SubgroupClass::K4norm:
    case SubgroupClass::K4: return "K4";
    default: return std::string(class_name(c));
  }
}

bool is_central_in(const Perm& p, const Subgroup& g) {
  for (const Perm& q : g.elements())
    if (!(p * q == q * p)) return false;
  return true;
}

bool is_klein(const Subgroup& g) { return g.order() == 4 && !has_four_cycle(g); }

}  // namespace

GroupContext::GroupContext(const Subgroup& g)
    : group_(g), ambient_(classify_subgroup(g)), name_(ambient_display_name(ambient_)) {
  // Subgroup conjugacy classes within the ambient group.
  std::vector<Subgroup> subs = enumerate_subgroups_of(group_);
  std::vector<int> cls(subs.size(), -1);
  auto find_sub = [&](const Subgroup& h) {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i] == h) return static_cast<int>(i);
    throw Error("conjugate subgroup missing from enumeration");
  };
  int n_classes = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = n_classes++;
    for (const Perm& p : group_.elements()) cls[static_cast<std::size_t>(find_sub(subs[i].conjugated_by(p)))] = id;
  }

  // Class representatives: minimal member. subs is sorted, so the first
  // member encountered per class is minimal.
  std::vector<LocalClass> classes(static_cast<std::size_t>(n_classes));
  std::vector<bool> have(static_cast<std::size_t>(n_classes), false);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    int id = cls[i];
    if (!have[static_cast<std::size_t>(id)]) {
      classes[static_cast<std::size_t>(id)].rep = subs[i];
      classes[static_cast<std::size_t>(id)].order = subs[i].order();
      have[static_cast<std::size_t>(id)] = true;
    }
  }

  // Display names and tie-break ranks. Names may repeat across classes (the
  // coefficient vector always keeps classes apart).
  const bool klein_ambient = is_klein(group_);
  const bool c4_ambient = group_.order() == 4 && has_four_cycle(group_);
  const bool d8_ambient = group_.order() == 8;
  for (auto& lc : classes) {
    const Subgroup& h = lc.rep;
    if (h.order() == 1) {
      lc.name = "e";
      lc.rank = 0;
    } else if (h == group_) {
      lc.name = name_;
      lc.rank = 99;
    } else if (h.order() == 2) {
      const Perm t = h.elements()[1];
      const bool odd = !t.is_even();
      if (klein_ambient) {
        // Left/right/diagonal labels: the two transpositions ordered by their
        // smallest moved point are L and R, the double transposition is D.
        // For the all-even Klein group, the three involutions take L/R/D in
        // element order.
        std::vector<Perm> invs;
        for (const Perm& p : group_.elements())
          if (!p.is_identity()) invs.push_back(p);
        std::sort(invs.begin(), invs.end(), [](const Perm& a, const Perm& b) {
          int ma = moved_points(a), mb = moved_points(b);
          if (ma != mb) return ma < mb;
          return min_moved_point(a) != min_moved_point(b) ? min_moved_point(a) < min_moved_point(b) : a < b;
        });
        const char* names[3] = {"C2L", "C2R", "C2D"};
        for (int k = 0; k < 3; ++k) {
          if (invs[static_cast<std::size_t>(k)] == t) {
            lc.name = names[k];
            lc.rank = k + 1;
          }
        }
      } else if (c4_ambient) {
        // The unique order-2 subgroup of an ambient C4; labeled per the
        // classical table row.
        lc.name = "C2o";
        lc.rank = 1;
      } else if (d8_ambient && !odd) {
        lc.name = "C2e";
        lc.rank = is_central_in(t, group_) ? 1 : 2;
      } else if (d8_ambient) {
        lc.name = "C2o";
        lc.rank = 3;
      } else {
        lc.name = odd ? "C2o" : "C2e";
        lc.rank = odd ? 1 : 2;
      }
    } else if (h.order() == 3) {
      lc.name = "C3";
      lc.rank = 1;
    } else if (h.order() == 4) {
      if (has_four_cycle(h)) {
        lc.name = "C4";
        lc.rank = 3;
      } else if (group_ == Subgroup::s4()) {
        lc.name = all_nontrivial_even(h) ? "K4norm" : "K4";
        lc.rank = all_nontrivial_even(h) ? 1 : 2;
      } else {
        lc.name = "K4";
        lc.rank = all_nontrivial_even(h) ? 1 : 2;
      }
    } else if (h.order() == 6) {
      lc.name = "S3";
      lc.rank = 1;
    } else if (h.order() == 8) {
      lc.name = "D8";
      lc.rank = 1;
    } else {
      lc.name = "A4";
      lc.rank = 1;
    }
  }

  std::vector<int> perm_to_new(static_cast<std::size_t>(n_classes));
  {
    std::vector<int> order_ids(static_cast<std::size_t>(n_classes));
    for (int i = 0; i < n_classes; ++i) order_ids[static_cast<std::size_t>(i)] = i;
    std::sort(order_ids.begin(), order_ids.end(), [&](int a, int b) {
      const auto& ca = classes[static_cast<std::size_t>(a)];
      const auto& cb = classes[static_cast<std::size_t>(b)];
      if (ca.order != cb.order) return ca.order < cb.order;
      if (ca.rank != cb.rank) return ca.rank < cb.rank;
      return ca.rep < cb.rep;
    });
    classes_.reserve(static_cast<std::size_t>(n_classes));
    for (int pos = 0; pos < n_classes; ++pos) {
      classes_.push_back(classes[static_cast<std::size_t>(order_ids[static_cast<std::size_t>(pos)])]);
      perm_to_new[static_cast<std::size_t>(order_ids[static_cast<std::size_t>(pos)])] = pos;
    }
  }

  member_masks_.reserve(subs.size());
  member_class_.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    member_masks_.push_back(subs[i].mask());
    member_class_.push_back(perm_to_new[static_cast<std::size_t>(cls[i])]);
  }

  // Table of marks: mark(h,k) = #{cosets gK : rep(h)·gK = gK}, brute force.
  marks_.assign(classes_.size(), std::vector<int>(classes_.size(), 0));
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const Subgroup& K = classes_[k].rep;
    // Coset representatives of K in the ambient group.
    std::vector<Perm> reps;
    std::vector<bool> used(group_.elements().size(), false);
    for (std::size_t gi = 0; gi < group_.elements().size(); ++gi) {
      if (used[gi]) continue;
      const Perm& rep = group_.elements()[gi];
      reps.push_back(rep);
      for (const Perm& kk : K.elements()) {
        const Perm member = rep * kk;
        for (std::size_t gj = gi; gj < group_.elements().size(); ++gj)
          if (group_.elements()[gj] == member) used[gj] = true;
      }
    }
    for (std::size_t h = 0; h < classes_.size(); ++h) {
      const Subgroup& H = classes_[h].rep;
      int fixed = 0;
      for (const Perm& rep : reps) {
        const Perm ri = rep.inverse();
        bool fix = true;
        for (const Perm& hh : H.elements()) {
          if (!K.contains(ri * hh * rep)) {
            fix = false;
            break;
          }
        }
        if (fix) ++fixed;
      }
      marks_[h][k] = fixed;
    }
  }

  // Element conjugacy classes, ordered by (element order, moved points, rep).
  {
    std::vector<bool> used(group_.elements().size(), false);
    for (std::size_t i = 0; i < group_.elements().size(); ++i) {
      if (used[i]) continue;
      ElementClass ec;
      ec.rep = group_.elements()[i];
      for (const Perm& p : group_.elements()) {
        const Perm conj = p * group_.elements()[i] * p.inverse();
        for (std::size_t j = i; j < group_.elements().size(); ++j) {
          if (!used[j] && group_.elements()[j] == conj) {
            used[j] = true;
            ++ec.size;
          }
        }
      }
      element_classes_.push_back(std::move(ec));
    }
    std::sort(element_classes_.begin(), element_classes_.end(), [](const ElementClass& a, const ElementClass& b) {
      if (a.rep.order() != b.rep.order()) return a.rep.order() < b.rep.order();
      if (moved_points(a.rep) != moved_points(b.rep)) return moved_points(a.rep) < moved_points(b.rep);
      return a.rep < b.rep;
    });
    for (auto& ec : element_classes_) {
      const Perm r = ec.rep;
      ec.cyclic_class = class_of(Subgroup::generated_by(std::span<const Perm>(&r, 1)));
    }
    element_class_of_.assign(24, -1);
    for (std::size_t c = 0; c < element_classes_.size(); ++c) {
      const Perm& rep = element_classes_[c].rep;
      for (const Perm& p : group_.elements()) {
        element_class_of_[static_cast<std::size_t>((p * rep * p.inverse()).index())] = static_cast<int>(c);
      }
    }
  }
}

int GroupContext::index_in_group(int c) const {
  return group_.order() / classes_[static_cast<std::size_t>(c)].order;
}

int GroupContext::class_of(const Subgroup& h) const {
  if (!group_.contains_subgroup(h)) throw Error("subgroup does not lie in the ambient group");
  for (std::size_t i = 0; i < member_masks_.size(); ++i)
    if (member_masks_[i] == h.mask()) return member_class_[i];
  throw Error("subgroup missing from ambient enumeration");
}

std::vector<int> GroupContext::classes_named(std::string_view name) const {
  std::vector<int> out;
  for (int c = 0; c < num_classes(); ++c)
    if (local_name(c) == name) out.push_back(c);
  return out;
}

bool GroupContext::subconjugate(int h, int k) const {
  const Subgroup& H = representative(h);
  const Subgroup& K = representative(k);
  for (const Perm& g : group_.elements())
    if (K.contains_subgroup(H.conjugated_by(g))) return true;
  return false;
}

int GroupContext::element_class_of(const Perm& g) const {
  int c = element_class_of_[static_cast<std::size_t>(g.index())];
  if (c < 0) throw Error("element does not lie in the ambient group");
  return c;
}

const GroupContext& GroupContext::of(SubgroupClass ambient) {
  static const std::array<std::unique_ptr<GroupContext>, kNumS4Classes> contexts = [] {
    std::array<std::unique_ptr<GroupContext>, kNumS4Classes> out;
    for (int i = 0; i < kNumS4Classes; ++i)
      out[static_cast<std::size_t>(i)].reset(new GroupContext(class_representative(static_cast<SubgroupClass>(i))));
    return out;
  }();
  return *contexts[static_cast<std::size_t>(static_cast<int>(ambient))];
}

const GroupContext& GroupContext::s4() { return of(SubgroupClass::S4); }

const GroupContext& GroupContext::of_subgroup(const Subgroup& g) {
  const SubgroupClass c = classify_subgroup(g);
  if (g == class_representative(c)) return of(c);
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<GroupContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.mask());
  if (it == cache.end())
    it = cache.emplace(g.mask(), std::unique_ptr<GroupContext>(new GroupContext(g))).first;
  return *it->second;
}

}  // namespace cubiclines
