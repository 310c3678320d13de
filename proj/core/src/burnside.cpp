#include "cubiclines/burnside.hpp"

#include <algorithm>
#include <cctype>

namespace cubiclines {

namespace {

void check_same_context(const BurnsideElement& a, const BurnsideElement& b) {
  if (&a.context() != &b.context())
    throw AmbientMismatchError("Burnside elements have different ambient groups (" +
                               std::string(a.context().name()) + " vs " + std::string(b.context().name()) + ")");
}

// Position of g inside the sorted element list of the ambient group.
int position_in(const std::vector<Perm>& elems, const Perm& g) {
  auto it = std::lower_bound(elems.begin(), elems.end(), g);
  return static_cast<int>(it - elems.begin());
}

// Cosets gK in G, each identified by its minimal element; returns the list of
// minimal representatives plus a position -> coset index lookup.
struct CosetSpace {
  std::vector<Perm> reps;
  std::vector<int> coset_of;  // indexed by position in G's element list
};

CosetSpace coset_space(const Subgroup& g, const Subgroup& k) {
  const auto& elems = g.elements();
  CosetSpace cs;
  cs.coset_of.assign(elems.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cs.coset_of[i] >= 0) continue;
    const int id = static_cast<int>(cs.reps.size());
    cs.reps.push_back(elems[i]);
    for (const Perm& kk : k.elements())
      cs.coset_of[static_cast<std::size_t>(position_in(elems, elems[i] * kk))] = id;
  }
  return cs;
}

}  // namespace

BurnsideElement::BurnsideElement(const GroupContext& g)
    : ctx_(&g), coeffs_(static_cast<std::size_t>(g.num_classes()), 0) {}

BurnsideElement BurnsideElement::basis(const GroupContext& g, int cls) {
  BurnsideElement x(g);
  x.coeffs_[static_cast<std::size_t>(cls)] = 1;
  return x;
}

BurnsideElement BurnsideElement::unit(const GroupContext& g) {
  return basis(g, g.num_classes() - 1);
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool BurnsideElement::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

int BurnsideElement::total_size() const {
  int n = 0;
  for (int c = 0; c < ctx_->num_classes(); ++c) n += coeff(c) * ctx_->index_in_group(c);
  return n;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  check_same_context(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  check_same_context(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  check_same_context(*this, o);
  return coeffs_ == o.coeffs_;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
  check_same_context(a, b);
  const GroupContext& ctx = a.context();
  const Subgroup& g = ctx.group();
  BurnsideElement out(ctx);
  for (int h = 0; h < ctx.num_classes(); ++h) {
    if (a.coeff(h) == 0) continue;
    for (int k = 0; k < ctx.num_classes(); ++k) {
      if (b.coeff(k) == 0) continue;
      // [G/H]·[G/K] = sum over double cosets HgK of [G/(H ∩ gKg^{-1})].
      const Subgroup& H = ctx.representative(h);
      const Subgroup& K = ctx.representative(k);
      std::vector<bool> covered(g.elements().size(), false);
      for (std::size_t gi = 0; gi < g.elements().size(); ++gi) {
        if (covered[gi]) continue;
        const Perm& mid = g.elements()[gi];
        for (const Perm& hh : H.elements())
          for (const Perm& kk : K.elements())
            covered[static_cast<std::size_t>(position_in(g.elements(), hh * mid * kk))] = true;
        const Perm mi = mid.inverse();
        std::vector<Perm> meet;
        for (const Perm& hh : H.elements())
          if (K.contains(mi * hh * mid)) meet.push_back(hh);
        const int cls = ctx.class_of(Subgroup::from_elements(std::move(meet)));
        out.set_coeff(cls, out.coeff(cls) + a.coeff(h) * b.coeff(k));
      }
    }
  }
  return out;
}

BurnsideElement transfer(const GroupContext& g, int cls) { return BurnsideElement::basis(g, cls); }

BurnsideElement transfer_s4(SubgroupClass h) {
  const GroupContext& s4 = GroupContext::s4();
  return BurnsideElement::basis(s4, s4.class_of(class_representative(h)));
}

std::vector<int> marks(const BurnsideElement& x) {
  const GroupContext& ctx = x.context();
  std::vector<int> out(static_cast<std::size_t>(ctx.num_classes()), 0);
  for (int h = 0; h < ctx.num_classes(); ++h)
    for (int k = 0; k < ctx.num_classes(); ++k)
      out[static_cast<std::size_t>(h)] += x.coeff(k) * ctx.mark(h, k);
  return out;
}

BurnsideElement restrict_to(const BurnsideElement& x, const GroupContext& target) {
  const GroupContext& src = x.context();
  if (!src.group().contains_subgroup(target.group()))
    throw AmbientMismatchError("restriction target is not a subgroup of the ambient group");
  BurnsideElement out(target);
  const Subgroup& h = target.group();
  for (int k = 0; k < src.num_classes(); ++k) {
    const int c = x.coeff(k);
    if (c == 0) continue;
    // View G/K as an H-set and orbit-decompose.
    const CosetSpace cs = coset_space(src.group(), src.representative(k));
    std::vector<int> ids(cs.reps.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    auto act = [&](const Perm& p, int i) {
      return cs.coset_of[static_cast<std::size_t>(position_in(src.group().elements(), p * cs.reps[static_cast<std::size_t>(i)]))];
    };
    auto eq = [](int a, int b) { return a == b; };
    const OrbitPartition part = orbits(h, ids, act, eq);
    for (const auto& block : part.blocks) {
      const Subgroup stab = stabilizer(h, block.front(), act, eq);
      const int cls = target.class_of(stab);
      out.set_coeff(cls, out.coeff(cls) + c);
    }
  }
  return out;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group == o.group && values == o.values;
}

ClassFunction perm_character(const BurnsideElement& x) {
  const GroupContext& ctx = x.context();
  ClassFunction chi{&ctx, std::vector<int>(static_cast<std::size_t>(ctx.num_element_classes()), 0)};
  for (int ec = 0; ec < ctx.num_element_classes(); ++ec) {
    const int cyc = ctx.class_of_cyclic(ec);
    int v = 0;
    for (int k = 0; k < ctx.num_classes(); ++k) v += x.coeff(k) * ctx.mark(cyc, k);
    chi.values[static_cast<std::size_t>(ec)] = v;
  }
  return chi;
}

std::vector<BurnsideElement> solve_character(const ClassFunction& chi) {
  const GroupContext& ctx = *chi.group;
  const int nc = ctx.num_classes();
  const int ne = ctx.num_element_classes();
  if (chi.values[0] < 0) throw NoSolutionError("character value at the identity is negative");

  // Character of each basis class at each element class.
  std::vector<std::vector<int>> basis_chi(static_cast<std::size_t>(nc), std::vector<int>(static_cast<std::size_t>(ne), 0));
  for (int k = 0; k < nc; ++k)
    for (int ec = 0; ec < ne; ++ec)
      basis_chi[static_cast<std::size_t>(k)][static_cast<std::size_t>(ec)] = ctx.mark(ctx.class_of_cyclic(ec), k);

  std::vector<BurnsideElement> solutions;
  std::vector<int> current(static_cast<std::size_t>(nc), 0);
  std::vector<int> remaining = chi.values;

  // Bounded depth-first enumeration: coefficients are nonnegative and every
  // basis character is nonnegative, so each remaining value must stay >= 0.
  auto dfs = [&](auto&& self, int k) -> void {
    if (k == nc) {
      if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) {
        BurnsideElement sol(ctx);
        for (int i = 0; i < nc; ++i) sol.set_coeff(i, current[static_cast<std::size_t>(i)]);
        solutions.push_back(std::move(sol));
      }
      return;
    }
    int bound = remaining[0] / ctx.index_in_group(k);
    for (int ec = 1; ec < ne; ++ec) {
      const int b = basis_chi[static_cast<std::size_t>(k)][static_cast<std::size_t>(ec)];
      if (b > 0) bound = std::min(bound, remaining[static_cast<std::size_t>(ec)] / b);
    }
    for (int c = 0; c <= bound; ++c) {
      current[static_cast<std::size_t>(k)] = c;
      bool ok = true;
      for (int ec = 0; ec < ne; ++ec) {
        remaining[static_cast<std::size_t>(ec)] = chi.values[static_cast<std::size_t>(ec)];
        // subtract contributions decided so far
      }
      for (int i = 0; i <= k; ++i)
        for (int ec = 0; ec < ne; ++ec)
          remaining[static_cast<std::size_t>(ec)] -= current[static_cast<std::size_t>(i)] * basis_chi[static_cast<std::size_t>(i)][static_cast<std::size_t>(ec)];
      for (int ec = 0; ec < ne; ++ec)
        if (remaining[static_cast<std::size_t>(ec)] < 0) ok = false;
      if (ok) self(self, k + 1);
    }
    current[static_cast<std::size_t>(k)] = 0;
  };
  dfs(dfs, 0);

  if (solutions.empty()) throw NoSolutionError("no nonnegative element realizes the given character");
  return solutions;
}

// ---------------------------------------------------------------------------
// Bracket notation
// ---------------------------------------------------------------------------

std::string BurnsideElement::to_bracket() const {
  const GroupContext& ctx = *ctx_;
  std::string out;
  std::vector<bool> consumed(static_cast<std::size_t>(ctx.num_classes()), false);
  for (int c = 0; c < ctx.num_classes(); ++c) {
    if (consumed[static_cast<std::size_t>(c)]) continue;
    int sum = 0;
    for (int d : ctx.classes_named(ctx.local_name(c))) {
      sum += coeff(d);
      consumed[static_cast<std::size_t>(d)] = true;
    }
    if (sum == 0) continue;
    const bool first = out.empty();
    if (!first) out += sum > 0 ? " + " : " - ";
    else if (sum < 0) out += "-";
    const int mag = sum > 0 ? sum : -sum;
    if (mag != 1) out += std::to_string(mag);
    out += "[";
    out += ctx.name();
    out += "/";
    out += ctx.local_name(c);
    out += "]";
  }
  return out.empty() ? "0" : out;
}

namespace {

const GroupContext* context_for_group_token(const std::string& token) {
  if (auto c = class_from_name(token)) return &GroupContext::of(*c);
  if (token == "C2")
    throw ParseError("ambient group name 'C2' is ambiguous; use C2o or C2e");
  throw ParseError("unknown group name '" + token + "'");
}

}  // namespace

BurnsideElement parse_bracket(std::string_view text, const GroupContext* ambient) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty Burnside element");

  if (s == "0") {
    if (!ambient) throw ParseError("cannot infer the ambient group of '0'");
    return BurnsideElement(*ambient);
  }

  const GroupContext* ctx = ambient;
  std::vector<std::pair<int, std::string>> terms;  // (signed coefficient, class name)
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    int coeff = 1;
    std::size_t digits = 0;
    while (i + digits < s.size() && std::isdigit(static_cast<unsigned char>(s[i + digits]))) ++digits;
    if (digits > 0) {
      coeff = std::stoi(s.substr(i, digits));
      i += digits;
      if (i < s.size() && s[i] == '*') ++i;  // allow "2*[S4/e]"
    }
    if (i >= s.size() || s[i] != '[') throw ParseError("expected '[' in Burnside element near position " + std::to_string(i));
    const std::size_t slash = s.find('/', i);
    const std::size_t close = s.find(']', i);
    if (slash == std::string::npos || close == std::string::npos || slash > close)
      throw ParseError("malformed bracket term in '" + s + "'");
    const std::string group_token = s.substr(i + 1, slash - i - 1);
    const std::string class_token = s.substr(slash + 1, close - slash - 1);
    const GroupContext* term_ctx = context_for_group_token(group_token);
    if (ctx == nullptr) ctx = term_ctx;
    if (term_ctx->ambient_class() != ctx->ambient_class() ||
        !(term_ctx->group() == ctx->group()))
      throw AmbientMismatchError("bracket terms name different ambient groups");
    terms.emplace_back(sign * coeff, class_token);
    i = close + 1;
  }

  BurnsideElement out(*ctx);
  for (const auto& [c, name] : terms) {
    const std::vector<int> matches = ctx->classes_named(name);
    if (matches.empty()) throw ParseError("unknown subgroup class '" + name + "' in group " + std::string(ctx->name()));
    if (matches.size() > 1)
      throw ParseError("subgroup class name '" + name + "' is ambiguous in group " + std::string(ctx->name()));
    out.set_coeff(matches.front(), out.coeff(matches.front()) + c);
  }
  return out;
}

}  // namespace cubiclines
