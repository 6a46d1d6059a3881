#include "rta/gate.hpp"

#include <atomic>
#include <limits>

namespace rta {

namespace {
std::atomic<std::uint64_t> g_degree_cap{1000000};
}

std::uint64_t degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(std::uint64_t cap) { g_degree_cap.store(cap); }

Point checked_degree(int k, int n) {
  if (k < 2) throw ParseError("alphabet size must be at least 2");
  if (n < 1) throw ParseError("arity must be at least 1");
  std::uint64_t d = 1;
  const std::uint64_t cap = degree_cap();
  for (int i = 0; i < n; ++i) {
    d *= static_cast<std::uint64_t>(k);
    if (d > cap)
      throw CapError("degree " + std::to_string(k) + "^" + std::to_string(n) +
                     " exceeds the configured cap of " + std::to_string(cap));
  }
  if (d > std::numeric_limits<Point>::max())
    throw CapError("degree exceeds the point type");
  return static_cast<Point>(d);
}

Gate::Gate(int k, int n, Perm table) : k_(k), n_(n), table_(std::move(table)) {
  Point want = checked_degree(k, n);
  if (table_.degree() != want)
    throw ParseError("gate table has degree " +
                     std::to_string(table_.degree()) + ", expected " +
                     std::to_string(want));
}

Point encode(std::span<const int> tuple, int k) {
  if (k < 2) throw ParseError("alphabet size must be at least 2");
  Point p = 0;
  for (int x : tuple) {
    if (x < 0 || x >= k) throw ParseError("symbol out of range");
    p = p * static_cast<Point>(k) + static_cast<Point>(x);
  }
  return p;
}

std::vector<int> decode(Point p, int k, int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(p % static_cast<Point>(k));
    p /= static_cast<Point>(k);
  }
  if (p != 0) throw ParseError("point out of range for the given arity");
  return t;
}

Gate identity_gate(int k, int n) {
  return Gate(k, n, Perm(checked_degree(k, n)));
}

Gate wire_permutation(int k, const Perm& alpha) {
  int n = static_cast<int>(alpha.degree());
  if (n < 1) throw ParseError("wire permutation needs at least one wire");
  Point m = checked_degree(k, n);
  std::vector<Point> img(m);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Point p = 0; p < m; ++p) {
    auto t = decode(p, k, n);
    for (int i = 0; i < n; ++i)
      out[alpha[static_cast<Point>(i)]] = t[static_cast<std::size_t>(i)];
    img[p] = encode(out, k);
  }
  return Gate(k, n, Perm::unchecked(std::move(img)));
}

Gate unary_gate(int k, const Perm& p) {
  if (static_cast<int>(p.degree()) != k)
    throw ParseError("unary gate table must act on the alphabet");
  return Gate(k, 1, p);
}

Gate parallel_compose(const Gate& f, const Gate& g) {
  if (f.alphabet() != g.alphabet())
    throw ParseError("parallel composition needs a common alphabet");
  int k = f.alphabet();
  int n = f.arity() + g.arity();
  Point m = checked_degree(k, n);
  Point mg = g.table().degree();
  std::vector<Point> img(m);
  for (Point a = 0; a < f.table().degree(); ++a) {
    Point fa = f.table()[a] * mg;
    Point base = a * mg;
    for (Point b = 0; b < mg; ++b) img[base + b] = fa + g.table()[b];
  }
  return Gate(k, n, Perm::unchecked(std::move(img)));
}

Gate serial_compose(const Gate& f, const Gate& g) {
  if (f.alphabet() != g.alphabet())
    throw ParseError("serial composition needs a common alphabet");
  int k = f.alphabet();
  if (f.arity() == g.arity())
    return Gate(k, f.arity(), f.table() * g.table());
  int n = std::max(f.arity(), g.arity());
  if (f.arity() < n)
    return serial_compose(parallel_compose(f, identity_gate(k, n - f.arity())),
                          g);
  return serial_compose(f,
                        parallel_compose(g, identity_gate(k, n - g.arity())));
}

Gate inverse(const Gate& f) {
  return Gate(f.alphabet(), f.arity(), f.table().inverse());
}

bool gate_even(const Gate& f) { return f.table().even(); }

Gate controlled_gate(int k, std::span<const int> controls, const Perm& p) {
  if (static_cast<int>(p.degree()) != k)
    throw ParseError("controlled gate action must act on the alphabet");
  int c = static_cast<int>(controls.size());
  int n = c + 1;
  Point m = checked_degree(k, n);
  Point prefix = encode(controls, k);
  std::vector<Point> img(m);
  for (Point x = 0; x < m; ++x) {
    Point hi = x / static_cast<Point>(k);
    Point lo = x % static_cast<Point>(k);
    img[x] = (hi == prefix) ? hi * static_cast<Point>(k) + p[lo] : x;
  }
  return Gate(k, n, Perm::unchecked(std::move(img)));
}

std::vector<int> apply(const Gate& f, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != f.arity())
    throw ParseError("tuple length does not match the gate arity");
  for (int x : tuple)
    if (x < 0 || x >= f.alphabet()) throw ParseError("symbol out of range");
  return decode(f.table()[encode(tuple, f.alphabet())], f.alphabet(),
                f.arity());
}

Gate conjugate_wires(const Gate& f, const Perm& alpha) {
  if (static_cast<int>(alpha.degree()) != f.arity())
    throw ParseError("wire relabeling must match the gate arity");
  Gate pi = wire_permutation(f.alphabet(), alpha);
  Gate pi_inv = wire_permutation(f.alphabet(), alpha.inverse());
  return serial_compose(serial_compose(pi, f), pi_inv);
}

nlohmann::json gate_to_json(const Gate& f) {
  nlohmann::json j;
  j["k"] = f.alphabet();
  j["n"] = f.arity();
  j["perm"] = f.table().images();
  return j;
}

Gate gate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("n") ||
      !j.contains("perm"))
    throw ParseError("gate JSON must carry k, n and perm");
  if (!j["k"].is_number_integer() || !j["n"].is_number_integer() ||
      !j["perm"].is_array())
    throw ParseError("gate JSON fields have the wrong types");
  int k = j["k"].get<int>();
  int n = j["n"].get<int>();
  std::vector<Point> img;
  img.reserve(j["perm"].size());
  for (const auto& v : j["perm"]) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseError("gate JSON perm entries must be nonnegative integers");
    img.push_back(v.get<Point>());
  }
  return Gate(k, n, Perm(std::move(img)));
}

}  // namespace rta
