#include "cubiclines/cubic_surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cubiclines/errors.hpp"
#include "cubiclines/permutation.hpp"

namespace cubiclines {

const std::array<std::array<int, 4>, kNumCubicMonomials>& cubic_monomials() {
  static const std::array<std::array<int, 4>, kNumCubicMonomials> table = [] {
    std::array<std::array<int, 4>, kNumCubicMonomials> out{};
    int n = 0;
    for (int e0 = 3; e0 >= 0; --e0)
      for (int e1 = 3 - e0; e1 >= 0; --e1)
        for (int e2 = 3 - e0 - e1; e2 >= 0; --e2)
          out[static_cast<std::size_t>(n++)] = {e0, e1, e2, 3 - e0 - e1 - e2};
    return out;
  }();
  return table;
}

int monomial_index(const std::array<int, 4>& exponents) {
  const auto& table = cubic_monomials();
  for (int i = 0; i < kNumCubicMonomials; ++i)
    if (table[static_cast<std::size_t>(i)] == exponents) return i;
  return -1;
}

CubicSurface::CubicSurface() = default;

CubicSurface CubicSurface::from_coeffs(const std::array<Complexd, kNumCubicMonomials>& coeffs) {
  CubicSurface f;
  f.coeffs_ = coeffs;
  return f;
}

CubicSurface CubicSurface::symmetric_basis(double c3, double c21, double c111) {
  CubicSurface f;
  for (int i = 0; i < kNumCubicMonomials; ++i) {
    const auto& e = cubic_monomials()[static_cast<std::size_t>(i)];
    const int mx = *std::max_element(e.begin(), e.end());
    if (mx == 3) f.coeffs_[static_cast<std::size_t>(i)] = c3;
    else if (mx == 2) f.coeffs_[static_cast<std::size_t>(i)] = c21;
    else f.coeffs_[static_cast<std::size_t>(i)] = c111;
  }
  return f;
}

CubicSurface CubicSurface::builtin(std::string_view name) {
  if (name == "fermat") return symmetric_basis(1.0, 0.0, 0.0);
  // Sum of cubes minus the cube of the sum: the diagonal cubic in the
  // hyperplane model, all 27 lines real.
  if (name == "clebsch") return symmetric_basis(0.0, -3.0, -6.0);
  throw UnknownNameError("unknown builtin surface '" + std::string(name) + "' (expected fermat or clebsch)");
}

Complexd CubicSurface::coeff(const std::array<int, 4>& exponents) const {
  const int i = monomial_index(exponents);
  if (i < 0) throw Error("invalid degree-3 exponent tuple");
  return coeffs_[static_cast<std::size_t>(i)];
}

Complexd CubicSurface::operator()(const std::array<Complexd, 4>& x) const {
  Complexd sum = 0.0;
  for (int i = 0; i < kNumCubicMonomials; ++i) {
    const Complexd c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0.0) continue;
    const auto& e = cubic_monomials()[static_cast<std::size_t>(i)];
    Complexd term = c;
    for (int v = 0; v < 4; ++v)
      for (int p = 0; p < e[static_cast<std::size_t>(v)]; ++p) term *= x[static_cast<std::size_t>(v)];
    sum += term;
  }
  return sum;
}

std::array<Complexd, 4> CubicSurface::gradient(const std::array<Complexd, 4>& x) const {
  std::array<Complexd, 4> grad{};
  for (int i = 0; i < kNumCubicMonomials; ++i) {
    const Complexd c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0.0) continue;
    const auto& e = cubic_monomials()[static_cast<std::size_t>(i)];
    for (int v = 0; v < 4; ++v) {
      if (e[static_cast<std::size_t>(v)] == 0) continue;
      Complexd term = c * static_cast<double>(e[static_cast<std::size_t>(v)]);
      for (int u = 0; u < 4; ++u) {
        const int pow = e[static_cast<std::size_t>(u)] - (u == v ? 1 : 0);
        for (int p = 0; p < pow; ++p) term *= x[static_cast<std::size_t>(u)];
      }
      grad[static_cast<std::size_t>(v)] += term;
    }
  }
  return grad;
}

bool CubicSurface::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complexd c) { return c == 0.0; });
}

bool CubicSurface::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complexd c) { return c.imag() == 0.0; });
}

bool CubicSurface::is_symmetric() const {
  for (const Perm& p : Perm::s4()) {
    for (int i = 0; i < kNumCubicMonomials; ++i) {
      const auto& e = cubic_monomials()[static_cast<std::size_t>(i)];
      std::array<int, 4> permuted{};
      for (int v = 0; v < 4; ++v) permuted[static_cast<std::size_t>(p(v))] = e[static_cast<std::size_t>(v)];
      if (coeff(permuted) != coeffs_[static_cast<std::size_t>(i)]) return false;
    }
  }
  return true;
}

double CubicSurface::max_abs_coeff() const {
  double mx = 0.0;
  for (const Complexd& c : coeffs_) mx = std::max(mx, std::abs(c));
  return mx;
}

}  // namespace cubiclines
