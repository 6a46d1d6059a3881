#include "rta/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace rta {

namespace {

// little-endian digits base p
std::vector<int> digits_of(int v, int p, int deg) {
  std::vector<int> d(deg);
  for (int i = 0; i < deg; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int value_of(std::span<const int> d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

FieldTable::FieldTable(int p, int deg, std::vector<int> modulus)
    : q_(1), p_(p), deg_(deg), primitive_(0) {
  for (int i = 0; i < deg; ++i) q_ *= p;
  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  for (int a = 0; a < q_; ++a) {
    auto da = digits_of(a, p, deg);
    for (int b = 0; b < q_; ++b) {
      auto db = digits_of(b, p, deg);
      std::vector<int> s(deg);
      for (int i = 0; i < deg; ++i) s[i] = (da[i] + db[i]) % p;
      add_[idx(a, b)] = value_of(s, p);

      // polynomial product reduced by the monic modulus
      std::vector<int> prod(2 * deg - 1, 0);
      for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * deg - 2; d >= deg; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < deg; ++i)
          prod[d - deg + i] = ((prod[d - deg + i] - c * modulus[i]) % p + p * p) % p;
      }
      prod.resize(deg);
      mul_[idx(a, b)] = value_of(prod, p);
    }
  }
  for (int a = 0; a < q_; ++a) {
    auto da = digits_of(a, p, deg);
    for (int i = 0; i < deg; ++i) da[i] = (p - da[i]) % p;
    neg_[a] = value_of(da, p);
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = b;
        break;
      }
  for (int e = 1; e < q_ && primitive_ == 0; ++e) {
    int x = 1, count = 0;
    do {
      x = mul_[idx(x, e)];
      ++count;
    } while (x != 1 && count <= q_);
    if (count == q_ - 1) primitive_ = e;
  }
  verify();
}

void FieldTable::verify() const {
  auto fail = [](const char* what) {
    throw Error(std::string("field table verification failed: ") + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a) fail("additive identity");
    if (mul(a, 1) != a) fail("multiplicative identity");
    if (add(a, neg(a)) != 0) fail("negation");
    if (a != 0 && mul(a, inv_[a]) != 1) fail("inverses");
    if (mul(a, 0) != 0) fail("zero product");
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a)) fail("addition commutativity");
      if (mul(a, b) != mul(b, a)) fail("multiplication commutativity");
      if (a != 0 && b != 0 && mul(a, b) == 0) fail("zero divisors");
    }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("addition associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail("multiplication associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
  if (primitive_ == 0 && q_ > 2) fail("primitive element");
}

int FieldTable::inv(int a) const {
  if (a == 0) throw Error("field inverse of zero");
  return inv_[a];
}

const std::vector<int>& FieldTable::supported_sizes() {
  static const std::vector<int> sizes = {2, 3, 4,  5,  7,  8,
                                         9, 11, 13, 16, 25, 27};
  return sizes;
}

bool FieldTable::supported(int q) {
  for (int s : supported_sizes())
    if (s == q) return true;
  return false;
}

const FieldTable& FieldTable::of(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;

  int p = 0, deg = 0;
  std::vector<int> modulus;  // low-order coefficients of the monic modulus
  switch (q) {
    case 2: case 3: case 5: case 7: case 11: case 13:
      p = q; deg = 1; modulus = {0};
      break;
    case 4:  p = 2; deg = 2; modulus = {1, 1};     break;  // x^2+x+1
    case 8:  p = 2; deg = 3; modulus = {1, 1, 0};  break;  // x^3+x+1
    case 9:  p = 3; deg = 2; modulus = {1, 0};     break;  // x^2+1
    case 16: p = 2; deg = 4; modulus = {1, 1, 0, 0}; break;  // x^4+x+1
    case 25: p = 5; deg = 2; modulus = {1, 1};     break;  // x^2+x+1
    case 27: p = 3; deg = 3; modulus = {1, 2, 0};  break;  // x^3+2x+1
    default:
      throw ParseError("unsupported field size " + std::to_string(q));
  }
  auto table = std::unique_ptr<FieldTable>(new FieldTable(p, deg, modulus));
  auto [pos, inserted] = cache.emplace(q, std::move(table));
  (void)inserted;
  return *pos->second;
}

}  // namespace rta
