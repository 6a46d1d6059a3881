#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rta/bigint.hpp"
#include "rta/kernels.hpp"
#include "rta/perm.hpp"

namespace rta {

struct BsgsOptions {
  // Above this degree the builder may seed the chain by sifting random
  // products of the generators before the deterministic pass. The final
  // structure is always verified deterministically, either by the full
  // Schreier condition or by an exact order certificate.
  Point randomized_threshold = 100;
  bool allow_randomized = true;
  std::uint64_t seed = 0x51f7ed15ULL;  // default seed for the random stream
  Exec exec = Exec::parallel;
};

// Base and strong generating set for a permutation group, built with an
// incremental Schreier-Sims pass. Transversals are stored explicitly up to
// degree 64 and as Schreier vectors above that. Base points are chosen as
// the smallest point moved by the generator that forces a new level, so the
// construction is deterministic for a fixed generator order and seed.
class Bsgs {
public:
  // how completeness of the chain was established
  enum class Verification {
    schreier,        // every Schreier generator sifted to identity
    parity_bound,    // all generators even and orbit product == degree!/2
    symmetric_bound  // orbit product == degree!
  };

  static Bsgs build(Point degree, std::vector<Perm> generators,
                    const BsgsOptions& opts = {});

  Point degree() const { return degree_; }
  const std::vector<Point>& base() const { return base_; }
  std::size_t num_levels() const { return levels_.size(); }
  const std::vector<Perm>& generator_pool() const { return pool_; }
  Verification verification() const { return verification_; }

  BigInt order() const;
  std::vector<Point> orbit_sizes() const;
  bool contains(const Perm& p) const;
  // residue after sifting and the level where sifting stopped
  // (== num_levels() when every base image was inside its orbit)
  std::pair<Perm, std::size_t> sift(Perm p) const;

private:
  struct Level {
    Point beta = 0;
    std::vector<std::uint32_t> gens;  // pool indices, each fixes earlier base points
    std::vector<Point> orbit;         // BFS order, orbit[0] == beta
    std::vector<std::int32_t> pos;    // point -> orbit index, -1 outside
    // explicit transversal (degree <= 64): u maps beta to the orbit point
    std::vector<Perm> rep;
    std::vector<Perm> rep_inv;
    // Schreier vector (degree > 64)
    std::vector<Point> sv_from;
    std::vector<std::uint32_t> sv_gen;
    // per orbit index: how many of `gens` have had their Schreier element
    // verified; stays valid because orbits and transversals are append-only
    std::vector<std::uint32_t> checked;
  };

  Bsgs() = default;

  std::uint32_t pool_add(Perm p);
  std::size_t new_level(Point beta);
  void level_add_point(Level& lv, Point y, Point from, std::uint32_t gen_id);
  void extend_orbit(std::size_t l, std::size_t first_new_gen);
  Perm rep_of(const Level& lv, Point x) const;
  Perm mul_rep_inv(const Level& lv, Perm p, Point y) const;
  std::pair<Perm, std::size_t> sift_from(Perm p, std::size_t level) const;
  // install residue at levels [min_level, J]; returns J
  std::size_t add_strong_generator(const Perm& h, std::size_t min_level);
  // verify Schreier condition at level l; on failure installs the residue
  // and returns the deepest modified level
  bool verify_level(std::size_t l, std::size_t* restart_level);
  void schreier_complete();
  bool randomized_presift(std::span<const Perm> input_gens);

  Point degree_ = 0;
  bool explicit_reps_ = true;
  std::vector<Perm> pool_;
  std::vector<Perm> pool_inv_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  Verification verification_ = Verification::schreier;
  std::uint64_t seed_ = 0;
  Exec exec_ = Exec::parallel;
};

// membership of each permutation in the group described by the chain;
// both lanes return identical results
std::vector<std::uint8_t> sift_batch_is_member(const Bsgs& g,
                                               std::span<const Perm> perms,
                                               Exec mode = Exec::parallel);

}  // namespace rta
