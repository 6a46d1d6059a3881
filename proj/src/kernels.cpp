#include "rta/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <limits>

namespace rta {

namespace {

std::uint8_t parity_of(const Perm& p) { return p.even() ? 1 : 0; }

Point point_add(Point a, Point b, std::span<const int> add, int k, int n) {
  Point r = 0;
  Point mult = 1;
  for (int i = 0; i < n; ++i) {
    int da = static_cast<int>(a % static_cast<Point>(k));
    int db = static_cast<int>(b % static_cast<Point>(k));
    r += static_cast<Point>(add[static_cast<std::size_t>(da * k + db)]) * mult;
    a /= static_cast<Point>(k);
    b /= static_cast<Point>(k);
    mult *= static_cast<Point>(k);
  }
  return r;
}

}  // namespace

std::vector<std::uint8_t> parity_batch(std::span<const Perm> perms, Exec mode) {
  std::vector<std::uint8_t> out(perms.size());
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(perms.size()); ++i)
      out[static_cast<std::size_t>(i)] =
          parity_of(perms[static_cast<std::size_t>(i)]);
  } else {
    for (std::size_t i = 0; i < perms.size(); ++i) out[i] = parity_of(perms[i]);
  }
  return out;
}

std::optional<std::pair<Point, Point>> additivity_violation(
    std::span<const Point> g, std::span<const int> add, int k, int n,
    Exec mode) {
  const std::uint64_t m = g.size();
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best = none;
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(min : best)
    for (long long p = 0; p < static_cast<long long>(m); ++p) {
      std::uint64_t local = none;
      for (Point q = 0; q < m; ++q) {
        Point lhs = g[point_add(static_cast<Point>(p), q, add, k, n)];
        Point rhs = point_add(g[static_cast<std::size_t>(p)], g[q], add, k, n);
        if (lhs != rhs) {
          local = static_cast<std::uint64_t>(p) * m + q;
          break;
        }
      }
      if (local < best) best = local;
    }
  } else {
    for (Point p = 0; p < m && best == none; ++p) {
      for (Point q = 0; q < m; ++q) {
        Point lhs = g[point_add(p, q, add, k, n)];
        Point rhs = point_add(g[p], g[q], add, k, n);
        if (lhs != rhs) {
          best = static_cast<std::uint64_t>(p) * m + q;
          break;
        }
      }
    }
  }
  if (best == none) return std::nullopt;
  return std::make_pair(static_cast<Point>(best / m),
                        static_cast<Point>(best % m));
}

}  // namespace rta
