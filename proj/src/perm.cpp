#include "rta/perm.hpp"

#include <algorithm>

namespace rta {

Perm::Perm(Point degree) : img_(degree) {
  for (Point i = 0; i < degree; ++i) img_[i] = i;
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw ParseError("image table is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::unchecked(std::vector<Point> images) {
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(Point degree,
                       const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point from = c[i];
      Point to = c[(i + 1) % c.size()];
      if (from >= degree || to >= degree)
        throw ParseError("cycle point out of range");
      if (p.img_[from] != from) throw ParseError("cycles are not disjoint");
      p.img_[from] = to;
    }
  }
  std::vector<bool> seen(degree, false);
  for (Point v : p.img_) {
    if (seen[v]) throw ParseError("cycles are not disjoint");
    seen[v] = true;
  }
  return p;
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::even() const {
  // parity = degree - #cycles (fixed points included)
  std::vector<bool> seen(img_.size(), false);
  Point ncycles = 0;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++ncycles;
    for (Point j = i; !seen[j]; j = img_[j]) seen[j] = true;
  }
  return ((degree() - ncycles) % 2) == 0;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (Point i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Perm::unchecked(std::move(inv));
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(img_.size(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<Point> c;
    for (Point j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Point Perm::smallest_moved() const {
  for (Point i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return degree();
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error("degree mismatch in composition");
  std::vector<Point> r(a.degree());
  const auto& ai = a.img_;
  const auto& bi = b.img_;
  for (Point x = 0; x < a.degree(); ++x) r[x] = bi[ai[x]];
  return Perm::unchecked(std::move(r));
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cycle_string(const Perm& p) {
  if (p.is_identity()) return "()";
  std::string s;
  for (const auto& c : p.cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace rta
