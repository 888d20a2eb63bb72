#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "hgr/error.hpp"

namespace hgr {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) {
        throw PreconditionError("image sequence is not a bijection");
      }
      seen[p] = true;
    }
  }

  /// Builds a permutation from disjoint cycles, e.g. from_cycles(4, {{0, 1, 2}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (const auto& cycle : cycles) {
      std::vector<Point> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i) {
        images.at(c[i]) = c[(i + 1) % c.size()];
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const {
    Permutation inv;
    inv.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) {
      inv.images_[images_[x]] = static_cast<Point>(x);
    }
    return inv;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) return false;
    }
    return true;
  }

  bool has_fixed_point() const {
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (images_[x] == x) return true;
    }
    return false;
  }

  std::vector<std::size_t> cycle_lengths() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (std::size_t y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return lengths;
  }

  std::size_t order() const {
    std::size_t result = 1;
    for (std::size_t len : cycle_lengths()) result = std::lcm(result, len);
    return result;
  }

  /// +1 for even, -1 for odd.
  int sign() const {
    std::size_t transpositions = 0;
    for (std::size_t len : cycle_lengths()) transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Composition results are bijections by construction.
  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// x -> p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw PreconditionError("compose: degree mismatch");
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p(q(x));
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hgr
