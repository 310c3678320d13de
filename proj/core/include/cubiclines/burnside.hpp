#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubiclines/subgroups.hpp"

namespace cubiclines {

// An element of the Burnside ring of an ambient group: an integer combination
// of coset-space classes [G/H], one coefficient per subgroup class of G.
// Arithmetic across different ambient groups is a checked error.
class BurnsideElement {
public:
  explicit BurnsideElement(const GroupContext& g);
  static BurnsideElement basis(const GroupContext& g, int cls);  // [G/rep(cls)]
  static BurnsideElement unit(const GroupContext& g);            // [G/G]

  const GroupContext& context() const { return *ctx_; }
  int coeff(int cls) const { return coeffs_[static_cast<std::size_t>(cls)]; }
  void set_coeff(int cls, int v) { coeffs_[static_cast<std::size_t>(cls)] = v; }
  const std::vector<int>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool nonnegative() const;
  // Sum of coeff(H) * [G:H]; the cardinality of the underlying G-set when all
  // coefficients are nonnegative.
  int total_size() const;

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  // Product via double-coset decomposition of basis classes.
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  bool operator==(const BurnsideElement& o) const;

  // Bracket notation, e.g. "[S4/C2o] + [S4/C2e] + [S4/D8]"; "0" when zero.
  // Classes sharing a display name are merged into one term.
  std::string to_bracket() const;

private:
  const GroupContext* ctx_;
  std::vector<int> coeffs_;
};

// Tr_H^G(1) = [G/H].
BurnsideElement transfer(const GroupContext& g, int cls);
BurnsideElement transfer_s4(SubgroupClass h);

// The mark homomorphism: fixed-point counts indexed by the ambient's
// subgroup classes. Additive and multiplicative (pointwise) in x.
std::vector<int> marks(const BurnsideElement& x);

// Restriction to a subgroup of the ambient group: every [G/K] is
// orbit-decomposed as a target.group()-set. target.group() <= x.ambient.
BurnsideElement restrict_to(const BurnsideElement& x, const GroupContext& target);

// Integer class function on the ambient's element conjugacy classes.
struct ClassFunction {
  const GroupContext* group;
  std::vector<int> values;  // one per element class, in context order
  bool operator==(const ClassFunction& o) const;
};

// Character of the (virtual) permutation representation of x: its value at g
// is the number of g-fixed points, i.e. the mark at the cyclic group <g>.
ClassFunction perm_character(const BurnsideElement& x);

// All elements with nonnegative coefficients whose permutation character
// equals chi, in lexicographic coefficient order. Throws NoSolutionError if
// none exists (requires chi(e) >= 0).
std::vector<BurnsideElement> solve_character(const ClassFunction& chi);

// Bracket-notation parser: whitespace-insensitive terms "k[G/H]" joined by
// '+'/'-'. The ambient group is inferred from the group names (it must be
// consistent across terms); `ambient` is required for inputs like "0".
BurnsideElement parse_bracket(std::string_view text, const GroupContext* ambient = nullptr);

}  // namespace cubiclines
