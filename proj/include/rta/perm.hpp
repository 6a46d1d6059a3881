#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rta/errors.hpp"

namespace rta {

using Point = std::uint32_t;

// Permutation of {0,...,m-1} stored as an image table.
// Composition is left to right: (a * b)[x] == b[a[x]], i.e. a acts first.
class Perm {
public:
  Perm() = default;
  explicit Perm(Point degree);               // identity
  explicit Perm(std::vector<Point> images);  // validates bijectivity
  static Perm unchecked(std::vector<Point> images);
  static Perm from_cycles(Point degree,
                          const std::vector<std::vector<Point>>& cycles);

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  bool even() const;
  Perm inverse() const;
  // nontrivial cycles, each rotated to start at its smallest point,
  // ordered by that point
  std::vector<std::vector<Point>> cycles() const;
  Point smallest_moved() const;  // degree() if identity

  friend Perm operator*(const Perm& a, const Perm& b);
  bool operator==(const Perm&) const = default;

private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

std::string cycle_string(const Perm& p);

}  // namespace rta
