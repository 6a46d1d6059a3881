#include "rta/orbits.hpp"

#include <algorithm>
#include <numeric>

namespace rta {

std::vector<Point> orbit(Point degree, std::span<const Perm> gens,
                         Point start) {
  if (start >= degree) throw Error("orbit: start point out of range");
  std::vector<bool> seen(degree, false);
  std::vector<Point> queue{start};
  seen[start] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point x = queue[i];
    for (const Perm& g : gens) {
      Point y = g[x];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_transitive(Point degree, std::span<const Perm> gens) {
  if (degree <= 1) return true;
  return orbit(degree, gens, 0).size() == degree;
}

namespace {

// union-find with path compression
struct Uf {
  std::vector<Point> parent;
  explicit Uf(Point n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // returns the absorbed root, or degree() when already merged
  Point unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return static_cast<Point>(parent.size());
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return b;
  }
};

}  // namespace

std::optional<BlockSystem> minimal_block_system(Point degree,
                                                std::span<const Perm> gens,
                                                Point p1, Point p2) {
  if (p1 >= degree || p2 >= degree || p1 == p2)
    throw Error("minimal_block_system: bad seed pair");
  if (!is_transitive(degree, gens))
    throw Error("minimal_block_system: group is intransitive");
  Uf uf(degree);
  std::vector<Point> queue;
  {
    Point absorbed = uf.unite(p1, p2);
    queue.push_back(absorbed);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point gamma = queue[i];
    for (const Perm& g : gens) {
      Point a = g[gamma];
      Point b = g[uf.find(gamma)];
      Point absorbed = uf.unite(a, b);
      if (absorbed < degree) queue.push_back(absorbed);
    }
  }
  BlockSystem bs;
  bs.degree = degree;
  bs.block_of.assign(degree, 0);
  std::vector<std::int64_t> id_of_root(degree, -1);
  std::uint32_t next = 0;
  for (Point x = 0; x < degree; ++x) {
    Point r = uf.find(x);
    if (id_of_root[r] < 0) id_of_root[r] = next++;
    bs.block_of[x] = static_cast<std::uint32_t>(id_of_root[r]);
  }
  bs.num_blocks = next;
  if (next <= 1) return std::nullopt;
  return bs;
}

bool is_primitive(Point degree, std::span<const Perm> gens) {
  if (!is_transitive(degree, gens)) return false;
  if (degree <= 2) return true;
  for (Point p = 1; p < degree; ++p) {
    auto bs = minimal_block_system(degree, gens, 0, p);
    if (bs && bs->num_blocks < degree) return false;
  }
  return true;
}

bool in_alternating(std::span<const Perm> gens, Exec mode) {
  auto par = parity_batch(gens, mode);
  return std::all_of(par.begin(), par.end(),
                     [](std::uint8_t e) { return e == 1; });
}

}  // namespace rta
