#include "rta/bsgs.hpp"

#include <algorithm>
#include <random>

namespace rta {

std::uint32_t Bsgs::pool_add(Perm p) {
  pool_inv_.push_back(p.inverse());
  pool_.push_back(std::move(p));
  return static_cast<std::uint32_t>(pool_.size() - 1);
}

std::size_t Bsgs::new_level(Point beta) {
  Level lv;
  lv.beta = beta;
  lv.pos.assign(degree_, -1);
  lv.pos[beta] = 0;
  lv.orbit.push_back(beta);
  lv.checked.push_back(0);
  if (explicit_reps_) {
    lv.rep.push_back(Perm(degree_));
    lv.rep_inv.push_back(Perm(degree_));
  } else {
    lv.sv_from.assign(degree_, 0);
    lv.sv_gen.assign(degree_, 0);
  }
  base_.push_back(beta);
  levels_.push_back(std::move(lv));
  return levels_.size() - 1;
}

void Bsgs::level_add_point(Level& lv, Point y, Point from,
                           std::uint32_t gen_id) {
  lv.pos[y] = static_cast<std::int32_t>(lv.orbit.size());
  lv.orbit.push_back(y);
  lv.checked.push_back(0);
  if (explicit_reps_) {
    Perm u = lv.rep[static_cast<std::size_t>(lv.pos[from])] * pool_[gen_id];
    lv.rep_inv.push_back(u.inverse());
    lv.rep.push_back(std::move(u));
  } else {
    lv.sv_from[y] = from;
    lv.sv_gen[y] = gen_id;
  }
}

void Bsgs::extend_orbit(std::size_t li, std::size_t first_new_gen) {
  Level& lv = levels_[li];
  std::size_t old_size = lv.orbit.size();
  for (std::size_t oi = 0; oi < old_size; ++oi) {
    Point x = lv.orbit[oi];
    for (std::size_t gi = first_new_gen; gi < lv.gens.size(); ++gi) {
      Point y = pool_[lv.gens[gi]][x];
      if (lv.pos[y] < 0) level_add_point(lv, y, x, lv.gens[gi]);
    }
  }
  for (std::size_t oi = old_size; oi < lv.orbit.size(); ++oi) {
    Point x = lv.orbit[oi];
    for (std::uint32_t gid : lv.gens) {
      Point y = pool_[gid][x];
      if (lv.pos[y] < 0) level_add_point(lv, y, x, gid);
    }
  }
}

Perm Bsgs::rep_of(const Level& lv, Point x) const {
  if (explicit_reps_) return lv.rep[static_cast<std::size_t>(lv.pos[x])];
  std::vector<std::uint32_t> word;
  for (Point y = x; y != lv.beta; y = lv.sv_from[y]) word.push_back(lv.sv_gen[y]);
  Perm u(degree_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = u * pool_[*it];
  return u;
}

Perm Bsgs::mul_rep_inv(const Level& lv, Perm p, Point y) const {
  if (explicit_reps_)
    return p * lv.rep_inv[static_cast<std::size_t>(lv.pos[y])];
  while (y != lv.beta) {
    p = p * pool_inv_[lv.sv_gen[y]];
    y = lv.sv_from[y];
  }
  return p;
}

std::pair<Perm, std::size_t> Bsgs::sift_from(Perm p, std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point y = p[lv.beta];
    if (y == lv.beta) continue;
    if (lv.pos[y] < 0) return {std::move(p), l};
    p = mul_rep_inv(lv, std::move(p), y);
  }
  return {std::move(p), levels_.size()};
}

std::pair<Perm, std::size_t> Bsgs::sift(Perm p) const {
  if (p.degree() != degree_) throw Error("sift: degree mismatch");
  return sift_from(std::move(p), 0);
}

bool Bsgs::contains(const Perm& p) const {
  if (p.degree() != degree_) throw Error("contains: degree mismatch");
  return sift_from(p, 0).first.is_identity();
}

BigInt Bsgs::order() const {
  BigInt o = 1;
  for (const Level& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
  return o;
}

std::vector<Point> Bsgs::orbit_sizes() const {
  std::vector<Point> s;
  s.reserve(levels_.size());
  for (const Level& lv : levels_) s.push_back(static_cast<Point>(lv.orbit.size()));
  return s;
}

std::size_t Bsgs::add_strong_generator(const Perm& h, std::size_t min_level) {
  std::size_t J = min_level;
  while (J < levels_.size() && h[levels_[J].beta] == levels_[J].beta) ++J;
  if (J == levels_.size()) new_level(h.smallest_moved());
  std::uint32_t id = pool_add(h);
  for (std::size_t l = min_level; l <= J; ++l) {
    levels_[l].gens.push_back(id);
    extend_orbit(l, levels_[l].gens.size() - 1);
  }
  return J;
}

bool Bsgs::verify_level(std::size_t l, std::size_t* restart_level) {
  Level& lv = levels_[l];
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    Point x = lv.orbit[oi];
    for (std::uint32_t gi = lv.checked[oi];
         gi < static_cast<std::uint32_t>(lv.gens.size()); ++gi) {
      const Perm& s = pool_[lv.gens[gi]];
      Point y = s[x];
      Perm cand = rep_of(lv, x) * s;
      cand = mul_rep_inv(lv, std::move(cand), y);
      if (!cand.is_identity()) {
        auto [res, stop] = sift_from(std::move(cand), l + 1);
        (void)stop;
        if (!res.is_identity()) {
          *restart_level = add_strong_generator(res, l + 1);
          return false;
        }
      }
      lv.checked[oi] = gi + 1;
    }
  }
  return true;
}

void Bsgs::schreier_complete() {
  verification_ = Verification::schreier;
  if (levels_.empty()) return;
  std::size_t l = levels_.size() - 1;
  while (true) {
    std::size_t restart = 0;
    if (verify_level(l, &restart)) {
      if (l == 0) return;
      --l;
    } else {
      l = restart;
    }
  }
}

bool Bsgs::randomized_presift(std::span<const Perm> input_gens) {
  std::mt19937_64 rng(seed_);
  std::size_t nslots = std::max<std::size_t>(10, input_gens.size());
  std::vector<Perm> slots;
  slots.reserve(nslots);
  for (std::size_t i = 0; i < nslots; ++i)
    slots.push_back(input_gens[i % input_gens.size()]);
  Perm acc(degree_);
  auto shake = [&]() {
    std::size_t i = rng() % nslots;
    std::size_t j = rng() % nslots;
    while (j == i) j = rng() % nslots;
    slots[i] = (rng() & 1) ? slots[i] * slots[j] : slots[i] * slots[j].inverse();
    acc = acc * slots[i];
  };
  for (int i = 0; i < 64; ++i) shake();
  int consecutive = 0;
  long iterations = 0;
  while (consecutive < 32 && iterations < 50000) {
    ++iterations;
    shake();
    auto [res, stop] = sift_from(acc, 0);
    (void)stop;
    if (res.is_identity()) {
      ++consecutive;
    } else {
      consecutive = 0;
      add_strong_generator(res, 0);
    }
  }
  BigInt ord = order();
  if (ord == factorial(degree_)) {
    verification_ = Verification::symmetric_bound;
    return true;
  }
  auto par = parity_batch(input_gens, exec_);
  bool all_even = std::all_of(par.begin(), par.end(),
                              [](std::uint8_t e) { return e == 1; });
  if (all_even && ord * 2 == factorial(degree_)) {
    verification_ = Verification::parity_bound;
    return true;
  }
  return false;
}

Bsgs Bsgs::build(Point degree, std::vector<Perm> generators,
                 const BsgsOptions& opts) {
  Bsgs b;
  b.degree_ = degree;
  b.explicit_reps_ = degree <= 64;
  b.seed_ = opts.seed;
  b.exec_ = opts.exec;
  std::vector<Perm> gens;
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(std::move(g));
  }
  for (const Perm& g : gens) b.add_strong_generator(g, 0);
  if (!gens.empty() && degree > opts.randomized_threshold &&
      opts.allow_randomized) {
    if (b.randomized_presift(gens)) return b;
  }
  b.schreier_complete();
  return b;
}

std::vector<std::uint8_t> sift_batch_is_member(const Bsgs& g,
                                               std::span<const Perm> perms,
                                               Exec mode) {
  std::vector<std::uint8_t> out(perms.size());
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(perms.size()); ++i)
      out[static_cast<std::size_t>(i)] =
          g.contains(perms[static_cast<std::size_t>(i)]) ? 1 : 0;
  } else {
    for (std::size_t i = 0; i < perms.size(); ++i)
      out[i] = g.contains(perms[i]) ? 1 : 0;
  }
  return out;
}

}  // namespace rta
