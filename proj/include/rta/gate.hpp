#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "rta/perm.hpp"

namespace rta {

// Degree cap for freshly built image tables, adjustable at runtime
// (RTA_DEGREE_CAP in the CLI). Guards against accidental k^n blowups.
std::uint64_t degree_cap();
void set_degree_cap(std::uint64_t cap);
// k^n checked against the cap; throws CapError beyond it
Point checked_degree(int k, int n);

// Reversible gate on n wires over the alphabet {0,...,k-1}, stored as the
// full image table of the induced permutation of k^n points. Tuples map to
// points big-endian: the first wire carries the most significant digit.
class Gate {
public:
  Gate(int k, int n, Perm table);
  int alphabet() const { return k_; }
  int arity() const { return n_; }
  const Perm& table() const { return table_; }
  bool operator==(const Gate&) const = default;

private:
  int k_;
  int n_;
  Perm table_;
};

Point encode(std::span<const int> tuple, int k);
std::vector<int> decode(Point p, int k, int n);

Gate identity_gate(int k, int n);
// gate routing wire i to position alpha[i]; alpha acts on wire indices
Gate wire_permutation(int k, const Perm& alpha);
Gate unary_gate(int k, const Perm& p);
// f on the first wires, g on the remaining ones
Gate parallel_compose(const Gate& f, const Gate& g);
// f first, then g; the narrower gate is padded with identity wires at the end
Gate serial_compose(const Gate& f, const Gate& g);
Gate inverse(const Gate& f);
bool gate_even(const Gate& f);
// applies p to the last wire when the control wires carry exactly `controls`
Gate controlled_gate(int k, std::span<const int> controls, const Perm& p);
std::vector<int> apply(const Gate& f, std::span<const int> tuple);
// relabel wires by alpha: the gate computed by routing inputs through
// alpha, applying f, and routing back
Gate conjugate_wires(const Gate& f, const Perm& alpha);

nlohmann::json gate_to_json(const Gate& f);
Gate gate_from_json(const nlohmann::json& j);

}  // namespace rta
