#include "rta/classify.hpp"

#include <algorithm>

#include "rta/kernels.hpp"
#include "rta/orbits.hpp"

namespace rta {

namespace {

int digit_at(Point x, int k, int n, int i) {
  // big-endian digit i of an n-digit point
  for (int d = n - 1; d > i; --d) x /= static_cast<Point>(k);
  return static_cast<int>(x % static_cast<Point>(k));
}

}  // namespace

std::optional<WreathWitness> wreath_decompose(const Gate& g) {
  const int k = g.alphabet();
  const int n = g.arity();
  const Point m = g.table().degree();
  std::vector<Point> dep(static_cast<std::size_t>(n));
  std::vector<Perm> maps;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      std::vector<int> map(static_cast<std::size_t>(k), -1);
      bool ok = true;
      for (Point x = 0; x < m && ok; ++x) {
        int v = digit_at(x, k, n, i);
        int w = digit_at(g.table()[x], k, n, j);
        int& slot = map[static_cast<std::size_t>(v)];
        if (slot < 0)
          slot = w;
        else if (slot != w)
          ok = false;
      }
      if (!ok) continue;
      std::vector<Point> img(static_cast<std::size_t>(k));
      std::vector<bool> hit(static_cast<std::size_t>(k), false);
      for (int v = 0; v < k; ++v) {
        int w = map[static_cast<std::size_t>(v)];
        if (w < 0 || hit[static_cast<std::size_t>(w)]) {
          ok = false;
          break;
        }
        hit[static_cast<std::size_t>(w)] = true;
        img[static_cast<std::size_t>(v)] = static_cast<Point>(w);
      }
      if (!ok) continue;
      dep[static_cast<std::size_t>(j)] = static_cast<Point>(i);
      used[static_cast<std::size_t>(i)] = true;
      maps.push_back(Perm::unchecked(std::move(img)));
      found = true;
    }
    if (!found) return std::nullopt;
  }
  // output j reads input dep[j], so wire i lands in position alpha[i]
  std::vector<Point> alpha_img(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    alpha_img[dep[static_cast<std::size_t>(j)]] = static_cast<Point>(j);
  WreathWitness w{Perm(std::move(alpha_img)), std::move(maps)};
  if (!(wreath_recompose(k, w) == g)) return std::nullopt;
  return w;
}

Gate wreath_recompose(int k, const WreathWitness& w) {
  const int n = static_cast<int>(w.alpha.degree());
  if (static_cast<int>(w.coordinate_maps.size()) != n)
    throw ParseError("wreath witness needs one map per wire");
  Perm alpha_inv = w.alpha.inverse();
  Point m = checked_degree(k, n);
  std::vector<Point> img(m);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Point x = 0; x < m; ++x) {
    auto t = decode(x, k, n);
    for (int j = 0; j < n; ++j) {
      Point src = alpha_inv[static_cast<Point>(j)];
      out[static_cast<std::size_t>(j)] = static_cast<int>(
          w.coordinate_maps[static_cast<std::size_t>(j)]
              [static_cast<Point>(t[src])]);
    }
    img[x] = encode(out, k);
  }
  return Gate(k, n, Perm::unchecked(std::move(img)));
}

namespace {

// image table of x -> Mx + t; not necessarily a bijection for an
// arbitrary witness
std::vector<Point> affine_table(const FieldTable& field, int n,
                                const AffineWitness& w) {
  const int q = w.q;
  if (static_cast<int>(w.matrix.size()) != n ||
      static_cast<int>(w.translation.size()) != n)
    throw ParseError("affine witness has the wrong dimensions");
  for (const auto& r : w.matrix)
    if (static_cast<int>(r.size()) != n)
      throw ParseError("affine witness has the wrong dimensions");
  Point m = checked_degree(q, n);
  std::vector<Point> img(m);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Point x = 0; x < m; ++x) {
    auto in = decode(x, q, n);
    for (int i = 0; i < n; ++i) {
      int acc = w.translation[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j)
        acc = field.add(
            acc, field.mul(
                     w.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     in[static_cast<std::size_t>(j)]));
      out[static_cast<std::size_t>(i)] = acc;
    }
    img[x] = encode(out, q);
  }
  return img;
}

}  // namespace

std::optional<AffineWitness> affine_test(const Gate& g, const FieldTable& field,
                                         Exec mode) {
  if (g.alphabet() != field.q())
    throw ParseError("affine test needs the gate alphabet to match the field");
  const int q = field.q();
  const int n = g.arity();
  const Point m = g.table().degree();

  auto t = decode(g.table()[0], q, n);
  std::vector<Point> h(m);
  std::vector<int> buf(static_cast<std::size_t>(n));
  for (Point x = 0; x < m; ++x) {
    auto gx = decode(g.table()[x], q, n);
    for (int i = 0; i < n; ++i)
      buf[static_cast<std::size_t>(i)] =
          field.sub(gx[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i)]);
    h[x] = encode(buf, q);
  }
  if (additivity_violation(h, field.add_table(), q, n, mode)) return std::nullopt;

  AffineWitness w;
  w.q = q;
  w.translation = t;
  w.matrix.assign(static_cast<std::size_t>(n),
                  std::vector<int>(static_cast<std::size_t>(n), 0));
  Point e = 1;
  for (int j = n - 1; j >= 0; --j) {
    auto col = decode(h[e], q, n);
    for (int i = 0; i < n; ++i)
      w.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          col[static_cast<std::size_t>(i)];
    e *= static_cast<Point>(q);
  }
  if (affine_table(field, n, w) != g.table().images()) return std::nullopt;
  return w;
}

Gate affine_recompose(int n, const AffineWitness& w) {
  const FieldTable& field = FieldTable::of(w.q);
  return Gate(w.q, n, Perm(affine_table(field, n, w)));
}

namespace {

Gate first_wire_unary(int k, int n, const Perm& p) {
  Gate u = unary_gate(k, p);
  if (n == 1) return u;
  return parallel_compose(u, identity_gate(k, n - 1));
}

std::vector<Gate> wire_perm_gates(int k, int n) {
  std::vector<Gate> out;
  if (n >= 2)
    out.push_back(wire_permutation(
        k, Perm::from_cycles(static_cast<Point>(n), {{0, 1}})));
  if (n >= 3) {
    std::vector<Point> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = static_cast<Point>(i);
    out.push_back(
        wire_permutation(k, Perm::from_cycles(static_cast<Point>(n), {cyc})));
  }
  return out;
}

}  // namespace

GateSet affine_group_generators(int q, int n) {
  const FieldTable& field = FieldTable::of(q);
  if (n < 1) throw ParseError("arity must be at least 1");
  Point m = checked_degree(q, n);
  std::vector<Gate> gates = wire_perm_gates(q, n);

  auto coord0_map = [&](auto&& f) {
    std::vector<Point> img(m);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (Point x = 0; x < m; ++x) {
      auto t = decode(x, q, n);
      for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)];
      out[0] = f(t);
      img[x] = encode(out, q);
    }
    return Gate(q, n, Perm(std::move(img)));
  };

  if (n >= 2)
    gates.push_back(coord0_map(
        [&](const std::vector<int>& t) { return field.add(t[0], t[1]); }));
  gates.push_back(
      coord0_map([&](const std::vector<int>& t) { return field.add(t[0], 1); }));
  if (q > 2) {
    int lambda = field.primitive_element();
    gates.push_back(coord0_map(
        [&](const std::vector<int>& t) { return field.mul(lambda, t[0]); }));
  }
  return GateSet(q, std::move(gates));
}

GateSet wreath_group_generators(int k, int n) {
  if (n < 1) throw ParseError("arity must be at least 1");
  checked_degree(k, n);
  std::vector<Gate> gates = wire_perm_gates(k, n);
  gates.push_back(first_wire_unary(
      k, n, Perm::from_cycles(static_cast<Point>(k), {{0, 1}})));
  if (k >= 3) {
    std::vector<Point> cyc(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cyc[static_cast<std::size_t>(i)] = static_cast<Point>(i);
    gates.push_back(
        first_wire_unary(k, n, Perm::from_cycles(static_cast<Point>(k), {cyc})));
  }
  return GateSet(k, std::move(gates));
}

nlohmann::json ClassReport::to_json() const {
  nlohmann::json j;
  j["k"] = k;
  j["n"] = n;
  j["transitive"] = transitive;
  j["primitive"] = primitive;
  j["in_alternating"] = in_alternating;
  j["wreath_member"] = wreath_member;
  if (affine_field)
    j["affine_field"] = *affine_field;
  else
    j["affine_field"] = nullptr;
  j["order"] = order.str();
  return j;
}

ClassReport classify_slice(const GateSet& gens, const BsgsOptions& opts) {
  if (gens.gates.empty())
    throw ParseError("classification needs at least one gate");
  const int n = gens.gates[0].arity();
  for (const Gate& g : gens.gates)
    if (g.arity() != n)
      throw ParseError("classification needs gates of one arity");

  ClassReport r;
  r.k = gens.k;
  r.n = n;
  std::vector<Perm> perms;
  perms.reserve(gens.gates.size());
  for (const Gate& g : gens.gates) perms.push_back(g.table());
  Point m = perms[0].degree();

  r.transitive = is_transitive(m, perms);
  r.primitive = is_primitive(m, perms);
  r.in_alternating = in_alternating(perms, opts.exec);
  r.wreath_member = std::all_of(gens.gates.begin(), gens.gates.end(),
                                [](const Gate& g) {
                                  return wreath_decompose(g).has_value();
                                });
  if (FieldTable::supported(gens.k)) {
    const FieldTable& field = FieldTable::of(gens.k);
    bool all = std::all_of(gens.gates.begin(), gens.gates.end(),
                           [&](const Gate& g) {
                             return affine_test(g, field, opts.exec).has_value();
                           });
    if (all) r.affine_field = gens.k;
  }
  r.order = Bsgs::build(m, perms, opts).order();
  return r;
}

namespace {

// orders of the nonabelian simple groups up to 10^4
const std::vector<long>& small_simple_orders() {
  static const std::vector<long> v = {60,   168,  360,  504,  660,  1092,
                                      2448, 2520, 3420, 4080, 5616, 6048,
                                      6072, 7800, 7920, 9828};
  return v;
}

bool is_simple_order_power(long x) {
  for (long s : small_simple_orders()) {
    if (s > x) break;
    long p = s;
    while (p < x && p <= x / s) p *= s;
    if (p == x) return true;
  }
  return false;
}

std::optional<std::pair<int, int>> prime_power(int x) {
  for (int p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    int m = 0, y = x;
    while (y % p == 0) {
      y /= p;
      ++m;
    }
    if (y == 1) return std::make_pair(p, m);
    return std::nullopt;
  }
  if (x >= 2) return std::make_pair(x, 1);
  return std::nullopt;
}

MaxClassEntry row(std::string type, std::string group, std::string status,
                  std::string reason, int item) {
  return MaxClassEntry{std::move(type), std::move(group), std::move(status),
                       std::move(reason), item};
}

std::vector<MaxClassEntry> rows_arity_one(int k) {
  std::vector<MaxClassEntry> e;
  e.push_back(row("alternating", "Alt(A)", "certain",
                  "index-2 subgroup, always maximal", 1));
  if (k >= 3)
    e.push_back(row("intransitive", "S_a x S_b, a+b=k, a<b", "certain",
                    "unequal-part set stabilizers are maximal", 1));
  else
    e.push_back(row("intransitive", "", "impossible",
                    "a two-letter alphabet has no unequal split", 1));
  {
    bool composite = false;
    int mm = 0;
    for (int d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        composite = true;
        mm = d;
        break;
      }
    if (composite)
      e.push_back(row("imprimitive",
                      "S_" + std::to_string(mm) + " wr S_" +
                          std::to_string(k / mm) + ", blocks of size " +
                          std::to_string(mm),
                      "certain", "block stabilizers of any proper divisor", 1));
    else
      e.push_back(row("imprimitive", "", "impossible",
                      "a prime alphabet admits no blocks", 1));
  }
  {
    auto pp = prime_power(k);
    if (!pp)
      e.push_back(row("affine", "", "impossible",
                      "alphabet size is not a prime power", 1));
    else if (k <= 4)
      e.push_back(row("affine", "", "impossible",
                      "the affine maps exhaust the gates at this size", 1));
    else if (pp->first == 2)
      e.push_back(row("affine", "AGL_" + std::to_string(pp->second) + "(2)",
                      "impossible",
                      "binary affine maps are even, the class sits inside the "
                      "alternating one",
                      1));
    else
      e.push_back(row("affine",
                      "AGL_" + std::to_string(pp->second) + "(" +
                          std::to_string(pp->first) + ")",
                      "certain",
                      "a Singer cycle is a single even-length cycle on the "
                      "nonzero vectors, an odd map",
                      1));
  }
  if (is_simple_order_power(k))
    e.push_back(row("diagonal", "T^l with |T|^(l-1) = k", "possible-open",
                    "the degree fits a diagonal action; maximality is not "
                    "decided here",
                    1));
  else if (k > 10000)
    e.push_back(row("diagonal", "", "possible-open",
                    "beyond the embedded simple-order table", 1));
  else
    e.push_back(row("diagonal", "", "impossible",
                    "no nonabelian simple group order fits the degree", 1));
  {
    bool shape = false, odd_shape = false;
    for (int m = 5; m * m <= k; ++m) {
      long p = static_cast<long>(m) * m;
      int l = 2;
      while (p <= k) {
        if (p == k) {
          shape = true;
          if (m % 2 == 1 || (l == 2 && m % 4 == 2)) odd_shape = true;
        }
        p *= m;
        ++l;
      }
    }
    if (!shape)
      e.push_back(row("wreath", "", "impossible",
                      "no m^l factorization with m >= 5 and l >= 2", 1));
    else if (odd_shape)
      e.push_back(row("wreath", "S_m wr S_l in product action", "certain",
                      "some factorization carries odd maps", 1));
    else
      e.push_back(row("wreath", "", "impossible",
                      "every product-action shape lies in the alternating "
                      "class",
                      1));
  }
  {
    const char* group = nullptr;
    if (k == 6) group = "PGL(2,5)";
    if (k == 8) group = "PGL(2,7)";
    if (k == 10) group = "PGammaL(2,9)";
    if (k == 12) group = "PGL(2,11)";
    if (group)
      e.push_back(row("almost-simple", group, "certain",
                      "an odd maximal almost simple action of this degree", 1));
    else if (k <= 12)
      e.push_back(row("almost-simple", "", "impossible",
                      "every almost simple primitive action of this degree is "
                      "even or absent",
                      1));
    else
      e.push_back(row("almost-simple", "", "possible-open",
                      "degree-specific catalogue not encoded", 1));
  }
  return e;
}

std::vector<MaxClassEntry> rows_arity_two(int k) {
  std::vector<MaxClassEntry> e;
  const std::string forced =
      "the binary slice of a maximal class is S_A wr S_2, AGL_2(3) or "
      "Alt(A^2)";
  const bool div4 = (k % 4 == 0);
  const int forced_item = (k == 3) ? 2 : (k % 2 == 1 ? 3 : 4);

  if (div4)
    e.push_back(row("alternating", "Alt(A^2)", "certain",
                    "wire swap and padded letter maps are all even and "
                    "generate the alternating slice",
                    5));
  else
    e.push_back(row("alternating", "", "impossible", forced, forced_item));
  e.push_back(row("intransitive", "", "impossible", forced, 0));
  e.push_back(row("imprimitive", "", "impossible", forced, 0));
  if (k == 3)
    e.push_back(row("affine", "AGL_2(3)", "certain",
                    "the binary slice closes into the nine-point affine group",
                    2));
  else if (!prime_power(k))
    e.push_back(row("affine", "", "impossible",
                    "the squared alphabet size is not a prime power", forced_item));
  else if (k % 2 == 0)
    e.push_back(row("affine", "", "impossible",
                    "binary-characteristic affine maps are even and the slice "
                    "is larger",
                    div4 ? 5 : 4));
  else
    e.push_back(row("affine", "", "impossible",
                    "too small to contain S_A wr S_2", 3));
  if (div4) {
    const auto& orders = small_simple_orders();
    if (k > 10000) {
      e.push_back(row("diagonal", "", "possible-open",
                      "beyond the embedded simple-order table", 6));
    } else if (std::find(orders.begin(), orders.end(), static_cast<long>(k)) !=
               orders.end()) {
      e.push_back(row("diagonal", "T^3.(Out(T) x S_3) with |T| = k",
                      "possible-open",
                      "the alphabet size is a simple group order; not decided "
                      "here",
                      6));
    } else {
      e.push_back(row("diagonal", "", "impossible",
                      "the alphabet size is not the order of a nonabelian "
                      "simple group",
                      6));
    }
  } else {
    e.push_back(row("diagonal", "", "impossible", forced, forced_item));
  }
  if (k == 3)
    e.push_back(row("wreath", "S_A wr S_2", "impossible",
                    "sits inside AGL_2(3)", 2));
  else if (div4)
    e.push_back(row("wreath", "S_A wr S_2", "impossible",
                    "lies inside the alternating slice", 5));
  else if (k % 2 == 1)
    e.push_back(row("wreath", "S_A wr S_2", "certain",
                    "the binary slice closes into exactly S_A wr S_2", 3));
  else
    e.push_back(row("wreath", "S_A wr S_2", "certain",
                    "the wire swap is odd, so the slice stays out of the "
                    "alternating class",
                    4));
  if (!div4)
    e.push_back(row("almost-simple", "", "impossible", forced, forced_item));
  else if (k == 4)
    e.push_back(row("almost-simple", "", "impossible",
                    "no odd almost simple primitive group of degree 16", 7));
  else
    e.push_back(row("almost-simple", "", "possible-open",
                    "not excluded; it would have to contain S_A wr S_2", 7));
  return e;
}

std::vector<MaxClassEntry> rows_arity_high(int k, int i) {
  std::vector<MaxClassEntry> e;
  const std::string arity = std::to_string(i);
  if (k % 2 == 0) {
    e.push_back(row("alternating", "Alt(A^" + arity + ")", "certain",
                    "padded letter maps and wire maps are even and generate "
                    "the alternating slice",
                    8));
    for (const char* t : {"intransitive", "imprimitive", "affine", "diagonal",
                          "wreath", "almost-simple"})
      e.push_back(row(t, "", "impossible",
                      "only the alternating class survives at this arity", 8));
  } else {
    for (const char* t : {"alternating", "intransitive", "imprimitive",
                          "affine", "diagonal", "wreath", "almost-simple"})
      e.push_back(row(t, "", "impossible",
                      "maximal classes over an odd alphabet are settled at "
                      "arities 1 and 2",
                      0));
  }
  return e;
}

}  // namespace

nlohmann::json MaxClassEntry::to_json() const {
  nlohmann::json j;
  j["type"] = type;
  j["group"] = group;
  j["status"] = status;
  j["reason"] = reason;
  j["item"] = item;
  return j;
}

nlohmann::json MaxClassTable::to_json() const {
  nlohmann::json j;
  j["alphabet"] = alphabet;
  j["arity"] = arity;
  j["note"] = note;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) j["entries"].push_back(e.to_json());
  return j;
}

MaxClassTable maximal_class_options(int k, int i) {
  if (k < 2) throw ParseError("alphabet size must be at least 2");
  if (i < 1) throw ParseError("arity must be at least 1");
  MaxClassTable t;
  t.alphabet = k;
  t.arity = i;
  if (i == 1)
    t.entries = rows_arity_one(k);
  else if (i == 2)
    t.entries = rows_arity_two(k);
  else
    t.entries = rows_arity_high(k, i);
  if (i >= 3 && k % 2 == 1)
    t.note = "maximal classes over an odd alphabet are settled at arities 1 "
             "and 2";
  return t;
}

namespace {

// Builds the pair permutation that carries each listed source to its target
// by swapping images in order; earlier assignments are never disturbed
// because targets are pairwise distinct.
Perm pair_assignment(Point m,
                     const std::vector<std::pair<Point, Point>>& moves) {
  std::vector<Point> img(m);
  for (Point i = 0; i < m; ++i) img[i] = i;
  for (auto [s, t] : moves) {
    if (img[s] == t) continue;
    Point u = 0;
    while (img[u] != t) ++u;
    std::swap(img[s], img[u]);
  }
  return Perm::unchecked(std::move(img));
}

struct WitnessStep {
  bool is_wire;
  Perm perm;  // wire relabeling on 3 wires, or a pair table on coords (0,1)
};

}  // namespace

std::vector<Gate> three_transitive_witness(int k, std::array<int, 3> a,
                                           std::array<int, 3> b,
                                           std::array<int, 3> c) {
  if (k < 3) throw ParseError("three-letter transitivity needs k >= 3");
  std::array<std::array<int, 3>, 3> P = {a, b, c};
  for (const auto& t : P)
    for (int v : t)
      if (v < 0 || v >= k) throw ParseError("symbol out of range");
  if (P[0] == P[1] || P[0] == P[2] || P[1] == P[2])
    throw ParseError("witness needs three distinct tuples");
  const std::array<std::array<int, 3>, 3> target = {
      {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}}};
  if (P == target) return {};

  const Point kk = static_cast<Point>(k);
  std::vector<WitnessStep> steps;
  auto push_wire = [&](const Perm& alpha) {
    steps.push_back({true, alpha});
    std::array<std::array<int, 3>, 3> Q = P;
    for (int t = 0; t < 3; ++t)
      for (int i = 0; i < 3; ++i)
        Q[static_cast<std::size_t>(t)][alpha[static_cast<Point>(i)]] =
            P[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
    P = Q;
  };
  auto push_pair = [&](const Perm& p) {
    // acts on coords (0, 1)
    steps.push_back({false, p});
    for (auto& t : P) {
      Point enc = static_cast<Point>(t[0]) * kk + static_cast<Point>(t[1]);
      Point out = p[enc];
      t[0] = static_cast<int>(out / kk);
      t[1] = static_cast<int>(out % kk);
    }
  };
  auto pair_on = [&](int c1, int c2, const Perm& p) {
    int other = 3 - c1 - c2;
    std::vector<Point> alpha(3);
    alpha[static_cast<std::size_t>(c1)] = 0;
    alpha[static_cast<std::size_t>(c2)] = 1;
    alpha[static_cast<std::size_t>(other)] = 2;
    Perm route(std::move(alpha));
    push_wire(route);
    push_pair(p);
    push_wire(route.inverse());
  };

  // spread the third coordinates apart
  auto distinct_thirds = [&]() {
    int t0 = P[0][2], t1 = P[1][2], t2 = P[2][2];
    return (t0 != t1) + (t0 != t2) + (t1 != t2);
  };
  if (distinct_thirds() == 0) {
    int j = (P[0][0] != P[1][0] || P[0][0] != P[2][0]) ? 0 : 1;
    push_wire(Perm::from_cycles(3, {{static_cast<Point>(j), 2}}));
  }
  if (distinct_thirds() == 2) {  // exactly one coincidence
    int u = 0, v = 0, w = 0;
    if (P[0][2] == P[1][2]) u = 0, v = 1, w = 2;
    else if (P[0][2] == P[2][2]) u = 0, v = 2, w = 1;
    else u = 1, v = 2, w = 0;
    if (P[static_cast<std::size_t>(u)][0] == P[static_cast<std::size_t>(v)][0])
      push_wire(Perm::from_cycles(3, {{0, 1}}));
    int u3 = P[static_cast<std::size_t>(u)][2];
    int w3 = P[static_cast<std::size_t>(w)][2];
    int d = 0;
    while (d == u3 || d == w3) ++d;
    Point key = static_cast<Point>(P[static_cast<std::size_t>(u)][0]);
    Perm delta = pair_assignment(
        kk * kk, {{key * kk + static_cast<Point>(u3),
                   key * kk + static_cast<Point>(d)},
                  {key * kk + static_cast<Point>(d),
                   key * kk + static_cast<Point>(u3)}});
    pair_on(0, 2, delta);
  }

  {  // zero the first coordinates, keyed on the (now distinct) thirds
    std::vector<std::pair<Point, Point>> moves;
    for (const auto& t : P)
      moves.push_back({static_cast<Point>(t[0]) * kk + static_cast<Point>(t[2]),
                       static_cast<Point>(t[2])});
    pair_on(0, 2, pair_assignment(kk * kk, moves));
  }
  {  // send (second, third) coordinates to the canonical pairs
    std::vector<std::pair<Point, Point>> moves;
    for (int t = 0; t < 3; ++t)
      moves.push_back(
          {static_cast<Point>(P[static_cast<std::size_t>(t)][1]) * kk +
               static_cast<Point>(P[static_cast<std::size_t>(t)][2]),
           static_cast<Point>(t)});
    pair_on(1, 2, pair_assignment(kk * kk, moves));
  }
  if (P != target) throw Error("witness normalization failed");

  // merge adjacent wire relabelings and adjacent pair maps; runs that cancel
  // to the identity drop out and let their neighbors merge in turn
  std::vector<WitnessStep> merged;
  for (const WitnessStep& st : steps) {
    if (!merged.empty() && merged.back().is_wire == st.is_wire) {
      merged.back().perm = merged.back().perm * st.perm;
      if (merged.back().perm.is_identity()) merged.pop_back();
    } else if (!st.perm.is_identity()) {
      merged.push_back(st);
    }
  }
  std::vector<Gate> word;
  word.reserve(merged.size());
  for (const WitnessStep& st : merged)
    word.push_back(st.is_wire ? wire_permutation(k, st.perm)
                              : Gate(k, 2, st.perm));

  Gate whole = identity_gate(k, 3);
  for (const Gate& g : word) whole = serial_compose(whole, g);
  for (int t = 0; t < 3; ++t) {
    std::array<int, 3> in = (t == 0) ? a : (t == 1) ? b : c;
    auto out = rta::apply(whole, in);
    for (int i = 0; i < 3; ++i)
      if (out[static_cast<std::size_t>(i)] !=
          target[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)])
        throw Error("witness verification failed");
  }
  if (word.size() > 6) throw Error("witness word exceeded six gates");
  return word;
}

}  // namespace rta
