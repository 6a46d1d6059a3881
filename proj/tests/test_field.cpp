#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rta/errors.hpp"
#include "rta/field.hpp"

using namespace rta;

TEST_CASE("supported sizes are the prime powers in range") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27})
    CHECK(FieldTable::supported(q));
  for (int q : {1, 6, 10, 12, 14, 15, 18, 24, 26, 100})
    CHECK_FALSE(FieldTable::supported(q));
  CHECK_THROWS_AS(FieldTable::of(6), ParseError);
}

TEST_CASE("field axioms hold in every table") {
  for (int q : FieldTable::supported_sizes()) {
    const FieldTable& F = FieldTable::of(q);
    CHECK(F.q() == q);
    INFO("q = ", q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.mul(a, 0) == 0);
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(a, a) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("prime subfield characteristic") {
  const FieldTable& F9 = FieldTable::of(9);
  CHECK(F9.p() == 3);
  CHECK(F9.extension_degree() == 2);
  int x = 1;
  for (int i = 0; i < 2; ++i) x = F9.add(x, 1);
  CHECK(x == 0);  // 1+1+1 = 0 in characteristic 3
  const FieldTable& F16 = FieldTable::of(16);
  CHECK(F16.p() == 2);
  CHECK(F16.extension_degree() == 4);
  for (int a = 0; a < 16; ++a) CHECK(F16.add(a, a) == 0);
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (int q : FieldTable::supported_sizes()) {
    const FieldTable& F = FieldTable::of(q);
    int g = F.primitive_element();
    int x = 1;
    for (int i = 1; i < q - 1; ++i) {
      x = F.mul(x, g);
      CHECK(x != 1);  // order exactly q-1
    }
    CHECK(F.mul(x, g) == 1);
  }
}

TEST_CASE("raw addition table layout") {
  const FieldTable& F = FieldTable::of(5);
  auto t = F.add_table();
  REQUIRE(t.size() == 25);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK(t[static_cast<std::size_t>(a * 5 + b)] == (a + b) % 5);
}
