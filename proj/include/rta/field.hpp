#pragma once

#include <span>
#include <vector>

#include "rta/errors.hpp"

namespace rta {

// Arithmetic tables for GF(q), q in {2,3,4,5,7,8,9,11,13,16,25,27}.
// Elements are 0..q-1; an element encodes the coefficient vector of a
// polynomial over GF(p) in little-endian base p, so 0 and 1 are the two
// identities for every q. Extension fields reduce modulo a fixed monic
// irreducible polynomial. Construction verifies the field axioms over the
// full tables and throws if anything fails, so a successfully obtained
// table is known to be a field.
class FieldTable {
public:
  static const FieldTable& of(int q);  // cached per q, safe to race
  static bool supported(int q);
  static const std::vector<int>& supported_sizes();

  int q() const { return q_; }
  int p() const { return p_; }
  int extension_degree() const { return deg_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;  // throws on 0
  int primitive_element() const { return primitive_; }

  std::span<const int> add_table() const { return add_; }  // q*q row-major

private:
  FieldTable(int p, int deg, std::vector<int> modulus);
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
           static_cast<std::size_t>(b);
  }
  void verify() const;

  int q_, p_, deg_, primitive_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace rta
