#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rta/bsgs.hpp"
#include "rta/closure.hpp"
#include "rta/field.hpp"
#include "rta/gate.hpp"

namespace rta {

// Witness that a gate g lies in the product-action wreath group on its
// wires: g first applies `coordinate_maps[j]` inside the wire that lands in
// position j, routed by `alpha` (wire i moves to position alpha[i]). So
// output j reads input wire alpha^-1(j).
struct WreathWitness {
  Perm alpha;
  std::vector<Perm> coordinate_maps;
};
std::optional<WreathWitness> wreath_decompose(const Gate& g);
Gate wreath_recompose(int k, const WreathWitness& w);

// Witness that a gate computes x -> M x + t over GF(q), with wires read as
// coordinates of a column vector; matrix[i][j] multiplies input j into
// output i. Detected by subtracting g(0) and testing additivity over all
// point pairs, then reading M off the basis vectors and recomposing.
struct AffineWitness {
  int q = 0;
  std::vector<std::vector<int>> matrix;
  std::vector<int> translation;
};
std::optional<AffineWitness> affine_test(const Gate& g, const FieldTable& field,
                                         Exec mode = Exec::parallel);
Gate affine_recompose(int n, const AffineWitness& w);

// Gates generating the affine group AGL_n(q) inside the arity-n gates over
// an alphabet of size q: wire permutations, a transvection, a translation,
// and a scalar map (q > 2).
GateSet affine_group_generators(int q, int n);

// Gates generating the product-action wreath group S_k wr S_n: unary
// alphabet permutations on the first wire plus wire permutations.
GateSet wreath_group_generators(int k, int n);

struct ClassReport {
  int k = 0;
  int n = 0;
  bool transitive = false;
  bool primitive = false;
  bool in_alternating = false;
  bool wreath_member = false;             // every generator decomposes
  std::optional<int> affine_field;        // q when every generator is affine
  BigInt order;
  nlohmann::json to_json() const;
};
// All gates must share one arity; runs the full battery of structure tests.
ClassReport classify_slice(const GateSet& gens, const BsgsOptions& opts = {});

// One row of the decision table of maximal closed classes: a candidate
// family of the primitive-group taxonomy together with whether it occurs as
// a maximal class at this alphabet size and arity.
struct MaxClassEntry {
  std::string type;    // alternating, intransitive, imprimitive, affine,
                       // diagonal, wreath, almost-simple
  std::string group;   // concrete description when one applies
  std::string status;  // certain, possible-open, impossible
  std::string reason;
  int item = 0;  // decision-table case that settles the row, 0 = general
  nlohmann::json to_json() const;
};
struct MaxClassTable {
  int alphabet = 0;
  int arity = 0;
  std::string note;
  std::vector<MaxClassEntry> entries;
  nlohmann::json to_json() const;
};
MaxClassTable maximal_class_options(int k, int i);

// A word of unary/binary gates and wire permutations (composed left to
// right, each padded to three wires) carrying the ordered triple (a, b, c)
// of distinct three-letter tuples to (0,0,0), (0,0,1), (0,0,2).
// Requires k >= 3; the word has at most 6 gates.
std::vector<Gate> three_transitive_witness(int k, std::array<int, 3> a,
                                           std::array<int, 3> b,
                                           std::array<int, 3> c);

}  // namespace rta
