#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "rta/errors.hpp"
#include "rta/perm.hpp"

using namespace rta;

TEST_CASE("identity construction") {
  Perm id(5);
  CHECK(id.degree() == 5);
  CHECK(id.is_identity());
  for (Point x = 0; x < 5; ++x) CHECK(id[x] == x);
  CHECK(Perm().degree() == 0);
  CHECK(Perm().is_identity());
}

TEST_CASE("image table validation") {
  CHECK_NOTHROW(Perm({1, 0, 2}));
  CHECK_THROWS_AS(Perm({0, 0, 1}), ParseError);   // repeated image
  CHECK_THROWS_AS(Perm({0, 3, 1}), ParseError);   // out of range
}

TEST_CASE("composition applies the left factor first") {
  Perm a({1, 0, 2});
  Perm b({0, 2, 1});
  Perm ab = a * b;
  // (a*b)[x] must equal b[a[x]]
  for (Point x = 0; x < 3; ++x) CHECK(ab[x] == b[a[x]]);
  CHECK(ab == Perm({2, 0, 1}));
  CHECK((b * a) == Perm({1, 2, 0}));
  CHECK(ab != b * a);
}

TEST_CASE("inverse") {
  Perm p({1, 2, 0});
  CHECK(p.inverse() == Perm({2, 0, 1}));
  std::mt19937_64 rng(0x51f7ed15ULL);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> img(17);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Perm q(img);
    CHECK((q * q.inverse()).is_identity());
    CHECK((q.inverse() * q).is_identity());
  }
}

TEST_CASE("from_cycles") {
  Perm p = Perm::from_cycles(6, {{0, 1, 2}, {4, 5}});
  CHECK(p == Perm({1, 2, 0, 3, 5, 4}));
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 1, 0}}), ParseError);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 5}}), ParseError);
  CHECK(Perm::from_cycles(4, {}).is_identity());
}

TEST_CASE("cycles round trip and normal form") {
  Perm p({1, 2, 0, 3, 5, 4});
  auto cy = p.cycles();
  REQUIRE(cy.size() == 2);
  CHECK(cy[0] == std::vector<Point>{0, 1, 2});
  CHECK(cy[1] == std::vector<Point>{4, 5});
  CHECK(Perm::from_cycles(p.degree(), cy) == p);
  CHECK(cycle_string(p) == "(0 1 2)(4 5)");
  CHECK(cycle_string(Perm(3)) == "()");
}

TEST_CASE("parity") {
  CHECK(Perm(4).even());
  CHECK_FALSE(Perm({1, 0, 2}).even());      // transposition
  CHECK(Perm({1, 2, 0}).even());            // 3-cycle
  CHECK_FALSE(Perm({1, 2, 3, 0}).even());   // 4-cycle
  // sign is multiplicative
  std::mt19937_64 rng(7);
  std::vector<Point> img(9);
  for (int trial = 0; trial < 60; ++trial) {
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Perm a(img);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Perm b(img);
    CHECK((a * b).even() == (a.even() == b.even()));
  }
}

TEST_CASE("smallest_moved") {
  CHECK(Perm(4).smallest_moved() == 4);
  CHECK(Perm({0, 1, 3, 2}).smallest_moved() == 2);
}

TEST_CASE("hashing is consistent with equality") {
  std::unordered_set<Perm, PermHash> seen;
  seen.insert(Perm({1, 0, 2}));
  seen.insert(Perm({1, 0, 2}));
  seen.insert(Perm({0, 2, 1}));
  CHECK(seen.size() == 2);
  CHECK(seen.count(Perm::from_cycles(3, {{0, 1}})) == 1);
}
