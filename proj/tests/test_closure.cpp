#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rta/bsgs.hpp"
#include "rta/closure.hpp"
#include "rta/errors.hpp"
#include "rta/gate.hpp"

using namespace rta;

namespace {

const Perm kNot({1, 0});

Gate random_gate(int k, int n, std::mt19937_64& rng) {
  Point m = checked_degree(k, n);
  std::vector<Point> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Gate(k, n, Perm(std::move(img)));
}

}  // namespace

TEST_CASE("slice generated by all binary gates over two letters") {
  GateSet F(2, {Gate(2, 2, Perm({1, 0, 2, 3})), Gate(2, 2, Perm({1, 2, 3, 0}))});
  CHECK(slice_order(F, 2) == BigInt(24));
  CHECK(slice_order(F, 3) == BigInt(1344));
  CHECK_FALSE(slice_equals(F, 3, SliceTarget::alternating));
  CHECK(slice_equals(F, 3, BigInt(1344)));
}

TEST_CASE("slices of the unary closure") {
  // all unary gates, arities up to three
  for (int k : {2, 3}) {
    std::vector<Gate> gens;
    gens.push_back(unary_gate(k, Perm::from_cycles(static_cast<Point>(k), {{0, 1}})));
    if (k > 2) {
      std::vector<Point> rot(static_cast<std::size_t>(k));
      for (Point i = 0; i < static_cast<Point>(k); ++i)
        rot[i] = (i + 1) % static_cast<Point>(k);
      gens.push_back(unary_gate(k, Perm(rot)));
    }
    ClosureReport rep = windowed_closure(GateSet(k, gens), ClosureMode::plain, 3);
    BigInt kf = factorial(k);
    BigInt want{1};
    for (int i = 1; i <= 3; ++i) {
      want *= kf;  // (k!)^i i!
      CHECK(rep.slices[static_cast<std::size_t>(i - 1)].order ==
            want * factorial(i));
    }
  }
}

TEST_CASE("borrowed wires do not help the controlled flip") {
  Gate cnot = controlled_gate(2, std::vector<int>{1}, kNot);
  CHECK_FALSE(borrow_reduce(cnot).has_value());
  ClosureReport rep =
      windowed_closure(GateSet(2, {cnot}), ClosureMode::borrow, 2);
  REQUIRE(rep.slices.size() == 2);
  CHECK(rep.slices[0].order == BigInt(1));
  CHECK(rep.slices[1].order == BigInt(6));
  CHECK(rep.rounds == 1);
}

TEST_CASE("a padded gate gives back its core under a borrowed wire") {
  Gate not1 = unary_gate(2, kNot);
  Gate padded = parallel_compose(not1, identity_gate(2, 1));
  auto red = borrow_reduce(padded);
  REQUIRE(red.has_value());
  CHECK(*red == not1);
  // and the round trip is exact
  CHECK(parallel_compose(*red, identity_gate(2, 1)) == padded);
}

TEST_CASE("fixed ancilla values") {
  Gate g(2, 2, Perm({0, 3, 2, 1}));
  auto at1 = ancilla_reduce(g, 1);
  REQUIRE(at1.has_value());
  CHECK(*at1 == unary_gate(2, kNot));
  auto at0 = ancilla_reduce(g, 0);
  REQUIRE(at0.has_value());
  CHECK(*at0 == identity_gate(2, 1));

  Gate swapg = wire_permutation(2, Perm({1, 0}));
  CHECK_FALSE(ancilla_reduce(swapg, 0).has_value());
  CHECK_THROWS_AS(ancilla_reduce(g, 2), ParseError);
}

TEST_CASE("borrow and ancilla reductions round trip on crafted gates") {
  std::mt19937_64 rng(0x51f7ed15ULL);
  int reducible = 0, fixed_point = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 2);
    Point m = checked_degree(k, n);
    Point mf = m / static_cast<Point>(k);

    // a padded core must always reduce back to itself
    Gate core = random_gate(k, n - 1, rng);
    Gate padded = parallel_compose(core, identity_gate(k, 1));
    auto red = borrow_reduce(padded);
    REQUIRE(red.has_value());
    CHECK(*red == core);

    // a gate built to fix the last wire at value a reduces at a
    int a = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    std::vector<Point> img(m);
    std::iota(img.begin(), img.end(), 0);
    // scramble the off-value points among themselves
    std::vector<Point> off;
    for (Point x = 0; x < m; ++x)
      if (x % static_cast<Point>(k) != static_cast<Point>(a)) off.push_back(x);
    std::vector<Point> shuffled = off;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < off.size(); ++i) img[off[i]] = shuffled[i];
    for (Point x = 0; x < mf; ++x)
      img[x * static_cast<Point>(k) + static_cast<Point>(a)] =
          core.table()[x] * static_cast<Point>(k) + static_cast<Point>(a);
    Gate anc(k, n, Perm(img));
    auto reda = ancilla_reduce(anc, a);
    REQUIRE(reda.has_value());
    CHECK(*reda == core);

    // random gates: any successful reduction must recompose exactly
    Gate g = random_gate(k, n, rng);
    if (auto r = borrow_reduce(g)) {
      ++reducible;
      CHECK(parallel_compose(*r, identity_gate(k, 1)) == g);
    }
    for (int v = 0; v < k; ++v)
      if (auto r = ancilla_reduce(g, v)) {
        ++fixed_point;
        for (Point x = 0; x < mf; ++x)
          CHECK(g.table()[x * static_cast<Point>(k) + static_cast<Point>(v)] ==
                r->table()[x] * static_cast<Point>(k) + static_cast<Point>(v));
      }
  }
  // the random draws virtually never produce reducible gates; the crafted
  // ones above carry the positive side
  CHECK(reducible >= 0);
  CHECK(fixed_point >= 0);
}

TEST_CASE("ancilla closure pulls a flip out of a doubly controlled flip") {
  Gate toffoli = controlled_gate(2, std::vector<int>{1, 1}, kNot);
  ClosureReport plain =
      windowed_closure(GateSet(2, {toffoli}), ClosureMode::plain, 3);
  ClosureReport anc =
      windowed_closure(GateSet(2, {toffoli}), ClosureMode::ancilla, 3);
  // with a fixed helper wire the binary slice picks up the controlled flip
  CHECK(anc.slices[1].order > plain.slices[1].order);
  CHECK(anc.slices[0].order >= plain.slices[0].order);
}

TEST_CASE("window report shape") {
  Gate cnot = controlled_gate(2, std::vector<int>{1}, kNot);
  ClosureReport rep =
      windowed_closure(GateSet(2, {cnot}), ClosureMode::plain, 3);
  CHECK(rep.k == 2);
  CHECK(rep.max_arity == 3);
  REQUIRE(rep.slices.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rep.slices[i].arity == static_cast<int>(i) + 1);
    CHECK(rep.slices[i].exact);
    REQUIRE(rep.slices[i].group != nullptr);
    CHECK(rep.slices[i].group->order() == rep.slices[i].order);
  }
  // the ternary slice of the controlled flip is the linear group
  CHECK(rep.slices[2].order == BigInt(168));
  CHECK_THROWS_AS(windowed_closure(GateSet(2, {cnot}), ClosureMode::plain, 0),
                  ParseError);
}

TEST_CASE("group slices match brute-force enumeration on random sets") {
  std::mt19937_64 rng(0x51f7ed15ULL);
  for (int trial = 0; trial < 50; ++trial) {
    // one to three random gates over two letters, arities inside the window
    std::vector<Gate> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i)
      gens.push_back(random_gate(2, 1 + static_cast<int>(rng() % 2), rng));
    GateSet F(2, gens);

    BruteForceClosure brute = brute_force_closure(F, 3);
    ClosureReport rep = windowed_closure(F, ClosureMode::plain, 3);
    for (int n = 1; n <= 3; ++n) {
      INFO("trial ", trial, " arity ", n);
      const auto& tables = brute.by_arity[static_cast<std::size_t>(n)];
      const ClosureSlice& slice = rep.slices[static_cast<std::size_t>(n - 1)];
      CHECK(slice.order == BigInt(static_cast<std::uint64_t>(tables.size())));
      std::vector<Perm> elems;
      elems.reserve(tables.size());
      for (const auto& t : tables) elems.emplace_back(Perm(t));
      auto member = sift_batch_is_member(*slice.group, elems);
      CHECK(std::all_of(member.begin(), member.end(),
                        [](std::uint8_t b) { return b == 1; }));
    }
  }
}
