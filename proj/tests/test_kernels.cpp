#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rta/field.hpp"
#include "rta/gate.hpp"
#include "rta/kernels.hpp"

using namespace rta;

namespace {

std::vector<Perm> random_perms(Point degree, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Perm> out;
  std::vector<Point> img(degree);
  for (int i = 0; i < count; ++i) {
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    out.emplace_back(Perm(img));
  }
  return out;
}

}  // namespace

TEST_CASE("parity lanes agree and match the scalar path") {
  for (Point degree : {2u, 7u, 40u, 150u}) {
    auto perms = random_perms(degree, 300, degree);
    auto serial = parity_batch(perms, Exec::serial);
    auto parallel = parity_batch(perms, Exec::parallel);
    REQUIRE(serial.size() == perms.size());
    CHECK(serial == parallel);
    for (std::size_t i = 0; i < perms.size(); ++i)
      CHECK(static_cast<bool>(serial[i]) == perms[i].even());
  }
}

TEST_CASE("additivity scan lanes agree") {
  const FieldTable& F = FieldTable::of(3);
  auto add = F.add_table();

  // a genuinely additive map: multiplication by 2 on each digit
  int n = 3;
  Point m = checked_degree(3, n);
  std::vector<Point> lin(m);
  for (Point x = 0; x < m; ++x) {
    auto digits = decode(x, 3, n);
    for (int& d : digits) d = F.mul(2, d);
    lin[x] = encode(digits, 3);
  }
  CHECK_FALSE(additivity_violation(lin, add, 3, n, Exec::serial).has_value());
  CHECK_FALSE(additivity_violation(lin, add, 3, n, Exec::parallel).has_value());

  // break one entry and both lanes must report a witness pair
  std::swap(lin[5], lin[11]);
  auto s = additivity_violation(lin, add, 3, n, Exec::serial);
  auto p = additivity_violation(lin, add, 3, n, Exec::parallel);
  REQUIRE(s.has_value());
  REQUIRE(p.has_value());

  // every reported pair really violates h(x+y) == h(x)+h(y)
  for (auto witness : {*s, *p}) {
    auto [x, y] = witness;
    auto dx = decode(x, 3, n), dy = decode(y, 3, n);
    std::vector<int> sum(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      sum[static_cast<std::size_t>(i)] =
          F.add(dx[static_cast<std::size_t>(i)], dy[static_cast<std::size_t>(i)]);
    Point hs = lin[encode(sum, 3)];
    auto hx = decode(lin[x], 3, n), hy = decode(lin[y], 3, n);
    std::vector<int> hxy(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      hxy[static_cast<std::size_t>(i)] =
          F.add(hx[static_cast<std::size_t>(i)], hy[static_cast<std::size_t>(i)]);
    CHECK(hs != encode(hxy, 3));
  }
}
