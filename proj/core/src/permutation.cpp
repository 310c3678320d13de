#include "cubiclines/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "cubiclines/errors.hpp"

namespace cubiclines {

Perm Perm::from_images(const std::array<int, 4>& images) {
  std::array<bool, 4> seen{};
  for (int v : images) {
    if (v < 0 || v >= kPoints || seen[static_cast<std::size_t>(v)])
      throw ParseError("permutation images are not a bijection of {0,1,2,3}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Perm p;
  for (int i = 0; i < kPoints; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(images[static_cast<std::size_t>(i)]);
  return p;
}

Perm Perm::transposition(int i, int j) {
  std::array<int, 4> img{0, 1, 2, 3};
  std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
  return from_images(img);
}

Perm Perm::cycle(std::span<const int> points) {
  std::array<int, 4> img{0, 1, 2, 3};
  for (std::size_t k = 0; k < points.size(); ++k) {
    int from = points[k];
    int to = points[(k + 1) % points.size()];
    img[static_cast<std::size_t>(from)] = to;
  }
  return from_images(img);
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm c;
  for (int i = 0; i < Perm::kPoints; ++i)
    c.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a(b(i)));
  return c;
}

Perm Perm::inverse() const {
  Perm r;
  for (int i = 0; i < kPoints; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

int Perm::order() const {
  Perm p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lengths;
  std::array<bool, 4> seen{};
  for (int i = 0; i < kPoints; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      j = (*this)(j);
      ++len;
    } while (j != i);
    if (len >= 2) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool Perm::is_even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Perm::to_string() const {
  if (is_identity()) return "e";
  std::string out;
  std::array<bool, 4> seen{};
  for (int i = 0; i < kPoints; ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);  // one-indexed
      first = false;
      j = (*this)(j);
    } while (j != i);
    out += ')';
  }
  return out;
}

const std::array<Perm, 24>& Perm::s4() {
  static const std::array<Perm, 24> all = [] {
    std::array<Perm, 24> out;
    std::array<int, 4> img{0, 1, 2, 3};
    std::size_t n = 0;
    do {
      out[n++] = from_images(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return all;
}

int Perm::index() const {
  const auto& all = s4();
  auto it = std::lower_bound(all.begin(), all.end(), *this);
  return static_cast<int>(it - all.begin());
}

}  // namespace cubiclines
