#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rta/bsgs.hpp"
#include "rta/gate.hpp"

namespace rta {

// Finite set of gates over a common alphabet; arities may differ.
struct GateSet {
  int k = 2;
  std::vector<Gate> gates;

  GateSet(int alphabet, std::vector<Gate> g);
};

// Generators of the arity-n slice of the closure of F: wire permutation
// generators of all n wires plus every gate of F with arity at most n,
// padded with identity wires. The wire permutations enter through a
// two-element generating set of their full group, which generates the same
// slice as listing all of them.
std::vector<Perm> slice_generators(const GateSet& F, int n);

BigInt slice_order(const GateSet& F, int n, const BsgsOptions& opts = {});

enum class SliceTarget { symmetric, alternating };
bool slice_equals(const GateSet& F, int n, SliceTarget target,
                  const BsgsOptions& opts = {});
bool slice_equals(const GateSet& F, int n, const BigInt& order,
                  const BsgsOptions& opts = {});

// If g acts as f on the leading wires and passes the last wire through
// unchanged, returns f. The last wire is then a borrowed line: it may carry
// anything and is returned intact.
std::optional<Gate> borrow_reduce(const Gate& g);

// If g fixes the value a on the last wire (g(x, a) = (f(x), a) for all x)
// and the induced f is a bijection, returns f. The last wire is then an
// ancilla prepared in state a.
std::optional<Gate> ancilla_reduce(const Gate& g, int a);

enum class ClosureMode { plain, borrow, ancilla };

struct ClosureSlice {
  int arity = 0;
  BigInt order;
  bool exact = false;  // plain mode computes the slice exactly
  bool is_symmetric = false;
  bool is_alternating = false;
  std::shared_ptr<const Bsgs> group;
};

struct ClosureReport {
  int k = 0;
  ClosureMode mode = ClosureMode::plain;
  int max_arity = 0;
  int rounds = 0;
  std::vector<ClosureSlice> slices;  // arities 1..max_arity
};

// Closure of F within the arity window 1..max_arity. In plain mode each
// slice is the group generated by slice_generators and the result is exact.
// borrow and ancilla modes additionally scan strong generators and their
// pairwise products for gates that reduce to a smaller arity (after routing
// each wire into the last position), feed novel reductions back in, and
// iterate to a fixpoint. The scan is a sound under-approximation: every
// reported element lies in the closure, but reductions of unscanned
// elements may be missed.
ClosureReport windowed_closure(const GateSet& F, ClosureMode mode,
                               int max_arity, const BsgsOptions& opts = {});

// Literal breadth-first closure of F plus the wire permutations under
// parallel composition (up to max_arity wires) and serial composition.
// Test oracle; keep the total state space small. Throws CapError when the
// element count would exceed size_cap.
struct BruteForceClosure {
  int k = 0;
  // by_arity[n] holds the image tables of all closure elements of arity n,
  // sorted; index 0 is unused
  std::vector<std::vector<std::vector<Point>>> by_arity;
};
BruteForceClosure brute_force_closure(const GateSet& F, int max_arity,
                                      std::size_t size_cap = 2000000);

}  // namespace rta
