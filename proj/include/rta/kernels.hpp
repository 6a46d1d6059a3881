#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rta/perm.hpp"

namespace rta {

// Execution lane for data-parallel kernels. `parallel` uses OpenMP when the
// library is built with it, `serial` is the reference implementation that the
// tests compare against. Both lanes must return identical results.
enum class Exec { serial, parallel };

// parity of each permutation; 1 = even
std::vector<std::uint8_t> parity_batch(std::span<const Perm> perms,
                                       Exec mode = Exec::parallel);

// Scans all pairs (p, q) of points of a degree k^n table `g` for a violation
// of g[p + q] == g[p] + g[q], where + adds points digitwise through `add`,
// a k*k row-major table. Returns the smallest violating pair in row-major
// pair order, independent of the execution lane.
std::optional<std::pair<Point, Point>> additivity_violation(
    std::span<const Point> g, std::span<const int> add, int k, int n,
    Exec mode = Exec::parallel);

}  // namespace rta
