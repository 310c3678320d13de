#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

namespace cubiclines {

using Complexd = std::complex<double>;

// Degree-3 exponent tuples (e0,e1,e2,e3) with e0+e1+e2+e3 = 3; 20 monomials
// in a fixed lexicographic order.
inline constexpr int kNumCubicMonomials = 20;
const std::array<std::array<int, 4>, kNumCubicMonomials>& cubic_monomials();
// Index of an exponent tuple in cubic_monomials(); -1 if not a valid tuple.
int monomial_index(const std::array<int, 4>& exponents);

// A homogeneous cubic form in x0..x3 with complex coefficients.
class CubicSurface {
public:
  CubicSurface();  // the zero form

  static CubicSurface from_coeffs(const std::array<Complexd, kNumCubicMonomials>& coeffs);
  // "fermat" (sum of cubes) or "clebsch" (sum of cubes minus the cube of the sum).
  static CubicSurface builtin(std::string_view name);
  // c3*sum xi^3 + c21*sum_{i!=j} xi^2 xj + c111*sum_{i<j<k} xi xj xk.
  static CubicSurface symmetric_basis(double c3, double c21, double c111);

  Complexd coeff(int monomial) const { return coeffs_[static_cast<std::size_t>(monomial)]; }
  Complexd coeff(const std::array<int, 4>& exponents) const;
  const std::array<Complexd, kNumCubicMonomials>& coeffs() const { return coeffs_; }

  Complexd operator()(const std::array<Complexd, 4>& x) const;
  std::array<Complexd, 4> gradient(const std::array<Complexd, 4>& x) const;

  bool is_zero() const;
  bool is_real() const;       // all imaginary parts vanish
  bool is_symmetric() const;  // coefficients constant on coordinate-permutation orbits
  double max_abs_coeff() const;

private:
  std::array<Complexd, kNumCubicMonomials> coeffs_{};
};

}  // namespace cubiclines
