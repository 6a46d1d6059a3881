#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rta/kernels.hpp"
#include "rta/perm.hpp"

namespace rta {

// orbit of `start` under the generators, sorted ascending
std::vector<Point> orbit(Point degree, std::span<const Perm> gens, Point start);

bool is_transitive(Point degree, std::span<const Perm> gens);

// Partition of the domain into blocks of a block system. Blocks are numbered
// by first occurrence, all have equal size, and every generator permutes them.
struct BlockSystem {
  Point degree = 0;
  std::uint32_t num_blocks = 0;
  std::vector<std::uint32_t> block_of;  // point -> block id
  std::size_t block_size() const { return block_of.size() / num_blocks; }
};

// Finest block system whose blocks merge p1 and p2, for a transitive group.
// nullopt when the merge collapses everything into a single block.
// Throws Error on intransitive input.
std::optional<BlockSystem> minimal_block_system(Point degree,
                                                std::span<const Perm> gens,
                                                Point p1, Point p2);

// transitive and no nontrivial block system
bool is_primitive(Point degree, std::span<const Perm> gens);

// every generator is an even permutation
bool in_alternating(std::span<const Perm> gens, Exec mode = Exec::parallel);

}  // namespace rta
