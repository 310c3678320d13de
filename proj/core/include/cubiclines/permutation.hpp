#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cubiclines {

// A permutation of {0,1,2,3}, stored as its image array.
class Perm {
public:
  static constexpr int kPoints = 4;

  constexpr Perm() : img_{0, 1, 2, 3} {}

  // Validates that `images` is a bijection of {0,1,2,3}.
  static Perm from_images(const std::array<int, 4>& images);
  static Perm transposition(int i, int j);
  // cycle({0,1,2}) is the 3-cycle 0->1->2->0.
  static Perm cycle(std::span<const int> points);

  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  Perm inverse() const;
  bool is_identity() const { return *this == Perm(); }
  int order() const;

  // Cycle lengths >= 2, sorted ascending; empty for the identity.
  std::vector<int> cycle_type() const;
  bool is_even() const;

  // One-indexed cycle notation, e.g. "(1 2)(3 4)"; "e" for the identity.
  std::string to_string() const;

  // (a*b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);

  auto operator<=>(const Perm&) const = default;

  // All 24 elements of S4 in lexicographic image order.
  static const std::array<Perm, 24>& s4();
  // Position of this permutation in s4().
  int index() const;

private:
  std::array<std::uint8_t, 4> img_;
};

}  // namespace cubiclines
