#include "rta/closure.hpp"

#include <algorithm>
#include <unordered_set>

namespace rta {

GateSet::GateSet(int alphabet, std::vector<Gate> g)
    : k(alphabet), gates(std::move(g)) {
  if (k < 2) throw ParseError("alphabet size must be at least 2");
  for (const Gate& f : gates)
    if (f.alphabet() != k)
      throw ParseError("gate set mixes alphabets");
}

namespace {

Perm wire_transposition(int n, Point i, Point j) {
  return Perm::from_cycles(static_cast<Point>(n), {{i, j}});
}

std::vector<Perm> wire_group_generators(int n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(wire_transposition(n, 0, 1));
  if (n >= 3) {
    std::vector<Point> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = static_cast<Point>(i);
    gens.push_back(Perm::from_cycles(static_cast<Point>(n), {cyc}));
  }
  return gens;
}

}  // namespace

std::vector<Perm> slice_generators(const GateSet& F, int n) {
  if (n < 1) throw ParseError("slice arity must be at least 1");
  std::vector<Perm> out;
  for (const Perm& alpha : wire_group_generators(n))
    out.push_back(wire_permutation(F.k, alpha).table());
  for (const Gate& f : F.gates) {
    if (f.arity() > n) continue;
    if (f.arity() == n) {
      out.push_back(f.table());
    } else {
      out.push_back(
          parallel_compose(f, identity_gate(F.k, n - f.arity())).table());
    }
  }
  return out;
}

BigInt slice_order(const GateSet& F, int n, const BsgsOptions& opts) {
  Point m = checked_degree(F.k, n);
  return Bsgs::build(m, slice_generators(F, n), opts).order();
}

bool slice_equals(const GateSet& F, int n, SliceTarget target,
                  const BsgsOptions& opts) {
  Point m = checked_degree(F.k, n);
  BigInt full = factorial(m);
  BigInt want = (target == SliceTarget::symmetric) ? full : full / 2;
  return slice_order(F, n, opts) == want;
}

bool slice_equals(const GateSet& F, int n, const BigInt& order,
                  const BsgsOptions& opts) {
  return slice_order(F, n, opts) == order;
}

std::optional<Gate> borrow_reduce(const Gate& g) {
  if (g.arity() < 2) return std::nullopt;
  const Point k = static_cast<Point>(g.alphabet());
  const Point mf = g.table().degree() / k;
  std::vector<Point> f(mf);
  for (Point a = 0; a < mf; ++a) {
    Point img0 = g.table()[a * k];
    if (img0 % k != 0) return std::nullopt;
    Point fa = img0 / k;
    for (Point s = 1; s < k; ++s)
      if (g.table()[a * k + s] != fa * k + s) return std::nullopt;
    f[a] = fa;
  }
  return Gate(g.alphabet(), g.arity() - 1, Perm(std::move(f)));
}

std::optional<Gate> ancilla_reduce(const Gate& g, int a) {
  if (a < 0 || a >= g.alphabet())
    throw ParseError("ancilla value out of range");
  if (g.arity() < 2) return std::nullopt;
  const Point k = static_cast<Point>(g.alphabet());
  const Point av = static_cast<Point>(a);
  const Point mf = g.table().degree() / k;
  std::vector<Point> f(mf);
  for (Point x = 0; x < mf; ++x) {
    Point img = g.table()[x * k + av];
    if (img % k != av) return std::nullopt;
    f[x] = img / k;
  }
  return Gate(g.alphabet(), g.arity() - 1, Perm(std::move(f)));
}

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

ClosureReport windowed_closure(const GateSet& F, ClosureMode mode,
                               int max_arity, const BsgsOptions& opts) {
  if (max_arity < 1) throw ParseError("closure window must reach arity 1");
  ClosureReport report;
  report.k = F.k;
  report.mode = mode;
  report.max_arity = max_arity;

  std::vector<Gate> working = F.gates;
  std::vector<std::shared_ptr<const Bsgs>> slice(
      static_cast<std::size_t>(max_arity) + 1);

  for (int round = 1;; ++round) {
    if (round > 50)
      throw Error("closure did not reach a fixpoint within 50 rounds");
    report.rounds = round;
    GateSet current(F.k, working);
    for (int n = 1; n <= max_arity; ++n) {
      Point m = checked_degree(F.k, n);
      slice[static_cast<std::size_t>(n)] = std::make_shared<const Bsgs>(
          Bsgs::build(m, slice_generators(current, n), opts));
    }
    if (mode == ClosureMode::plain) break;

    std::vector<Gate> additions;
    std::unordered_set<std::vector<Point>, TableHash> addition_keys;
    auto consider = [&](const Gate& f, int target_arity) {
      if (!slice[static_cast<std::size_t>(target_arity)]->contains(f.table())) {
        auto key = f.table().images();
        if (addition_keys.insert(std::move(key)).second) additions.push_back(f);
      }
    };
    for (int n = 2; n <= max_arity; ++n) {
      const Bsgs& sl = *slice[static_cast<std::size_t>(n)];
      const auto& pool = sl.generator_pool();
      std::unordered_set<std::vector<Point>, TableHash> candidate_keys;
      std::vector<Perm> candidates;
      auto add_candidate = [&](Perm p) {
        if (p.is_identity()) return;
        auto key = p.images();
        if (candidate_keys.insert(std::move(key)).second)
          candidates.push_back(std::move(p));
      };
      for (const Perm& p : pool) add_candidate(p);
      for (const Perm& p : pool)
        for (const Perm& q : pool) add_candidate(p * q);

      for (const Perm& p : candidates) {
        Gate g(F.k, n, p);
        for (int j = 0; j < n; ++j) {
          Gate rotated = (j == n - 1)
                             ? g
                             : conjugate_wires(
                                   g, Perm::from_cycles(
                                          static_cast<Point>(n),
                                          {{static_cast<Point>(j),
                                            static_cast<Point>(n - 1)}}));
          if (auto f = borrow_reduce(rotated)) consider(*f, n - 1);
          if (mode == ClosureMode::ancilla)
            for (int a = 0; a < F.k; ++a)
              if (auto f = ancilla_reduce(rotated, a)) consider(*f, n - 1);
        }
      }
    }
    if (additions.empty()) break;
    for (Gate& f : additions) working.push_back(std::move(f));
  }

  for (int n = 1; n <= max_arity; ++n) {
    ClosureSlice cs;
    cs.arity = n;
    cs.group = slice[static_cast<std::size_t>(n)];
    cs.order = cs.group->order();
    cs.exact = (mode == ClosureMode::plain);
    BigInt full = factorial(checked_degree(F.k, n));
    cs.is_symmetric = (cs.order == full);
    cs.is_alternating = (cs.order * 2 == full);
    report.slices.push_back(std::move(cs));
  }
  return report;
}

BruteForceClosure brute_force_closure(const GateSet& F, int max_arity,
                                      std::size_t size_cap) {
  if (max_arity < 1) throw ParseError("closure window must reach arity 1");
  const int k = F.k;

  struct Bucket {
    std::unordered_set<std::vector<Point>, TableHash> set;
    std::vector<std::vector<Point>> elems;  // insertion order
    std::vector<std::vector<Point>> seeds;  // external arrivals
    std::size_t closed_elems = 0;
    std::size_t closed_seeds = 0;
  };
  std::vector<Bucket> bucket(static_cast<std::size_t>(max_arity) + 1);
  std::size_t total = 0;

  auto insert = [&](int n, std::vector<Point> table, bool seed) -> bool {
    Bucket& b = bucket[static_cast<std::size_t>(n)];
    if (!b.set.insert(table).second) return false;
    if (++total > size_cap)
      throw CapError("brute-force closure exceeded the size cap");
    b.elems.push_back(table);
    if (seed) b.seeds.push_back(std::move(table));
    return true;
  };

  // wire permutations and the input gates seed the closure
  for (int n = 1; n <= max_arity; ++n) {
    std::vector<Point> wires(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) wires[static_cast<std::size_t>(i)] = static_cast<Point>(i);
    std::sort(wires.begin(), wires.end());
    do {
      insert(n, wire_permutation(k, Perm(wires)).table().images(), true);
    } while (std::next_permutation(wires.begin(), wires.end()));
  }
  for (const Gate& f : F.gates)
    if (f.arity() <= max_arity)
      insert(f.arity(), f.table().images(), true);

  auto mul = [](const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
    return r;
  };

  // serial closure inside one arity: every element times every seed;
  // gates of finite order, so seed words exhaust the generated group
  auto close_bucket = [&](int n) {
    Bucket& b = bucket[static_cast<std::size_t>(n)];
    for (std::size_t ei = 0; ei < b.elems.size(); ++ei)
      for (std::size_t si = 0; si < b.seeds.size(); ++si) {
        if (ei < b.closed_elems && si < b.closed_seeds) continue;
        insert(n, mul(b.elems[ei], b.seeds[si]), false);
      }
    b.closed_elems = b.elems.size();
    b.closed_seeds = b.seeds.size();
  };

  // parallel-composition pairs already expanded, per (a, b) split
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> done(
      static_cast<std::size_t>(max_arity) + 1,
      std::vector<std::pair<std::size_t, std::size_t>>(
          static_cast<std::size_t>(max_arity) + 1, {0, 0}));

  bool changed = true;
  while (changed) {
    changed = false;
    for (int n = 1; n <= max_arity; ++n) close_bucket(n);
    for (int a = 1; a < max_arity; ++a)
      for (int b = 1; a + b <= max_arity; ++b) {
        Bucket& ba = bucket[static_cast<std::size_t>(a)];
        Bucket& bb = bucket[static_cast<std::size_t>(b)];
        auto& mark = done[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        std::size_t na = ba.elems.size(), nb = bb.elems.size();
        if (mark.first == na && mark.second == nb) continue;
        Point mb = checked_degree(k, b);
        for (std::size_t i = 0; i < na; ++i)
          for (std::size_t j = 0; j < nb; ++j) {
            if (i < mark.first && j < mark.second) continue;
            const auto& x = ba.elems[i];
            const auto& y = bb.elems[j];
            std::vector<Point> z(x.size() * y.size());
            for (std::size_t p = 0; p < x.size(); ++p) {
              Point hi = x[p] * mb;
              for (std::size_t q = 0; q < y.size(); ++q)
                z[p * y.size() + q] = hi + y[q];
            }
            if (insert(a + b, std::move(z), true)) changed = true;
          }
        mark = {na, nb};
      }
  }

  BruteForceClosure out;
  out.k = k;
  out.by_arity.resize(static_cast<std::size_t>(max_arity) + 1);
  for (int n = 1; n <= max_arity; ++n) {
    auto& v = out.by_arity[static_cast<std::size_t>(n)];
    v = bucket[static_cast<std::size_t>(n)].elems;
    std::sort(v.begin(), v.end());
  }
  return out;
}

}  // namespace rta
