#ifndef BIS_INVERSE_SEMIGROUP_HPP
#define BIS_INVERSE_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bis/group.hpp"
#include "bis/partial_injection.hpp"

namespace bis {

// A finite inverse semigroup as dense tables over canonical indices.
// Display names are carried separately.  mul(x, y) applies y first, then x.
struct InverseSemigroup {
  std::vector<std::string> names;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> inv_table;
  int zero = -1;  // -1 when absent
  int one = -1;

  int size() const { return static_cast<int>(names.size()); }
  int mul(int x, int y) const {
    return mul_table[static_cast<std::size_t>(x) * names.size() + y];
  }
  int inv(int x) const { return inv_table[x]; }
  int d(int x) const { return mul(inv(x), x); }
  int r(int x) const { return mul(x, inv(x)); }
  bool idempotent(int x) const { return mul(x, x) == x; }
  // natural order: x <= y iff x = y d(x)
  bool leq(int x, int y) const { return x == mul(y, d(x)); }

  std::vector<int> idempotents() const;

  // Fills in zero/one by scanning when not declared; throws InputError on a
  // declaration that contradicts the tables.
  void detect_constants();
};

struct Diagnostic {
  bool ok = true;
  std::string message;
  std::vector<int> witness;  // element indices involved in the failure
};

// Checks associativity, the inverse laws, commuting idempotents, and the
// declared zero/one.  Reports the first counterexample; never throws.
Diagnostic verify_inverse_semigroup(const InverseSemigroup& s);

// Green's relations: class ids per element for L, R, D, plus one witness
// per (d-class, r-class) combination realized by some element.
struct GreenRelations {
  std::vector<int> l_class, r_class, d_class;
  // witness(a, b) for idempotents a, b: some x with d(x) = a and r(x) = b
  std::optional<int> witness(const InverseSemigroup& s, int a, int b) const;

 private:
  friend GreenRelations green_relations(const InverseSemigroup& s);
  std::vector<int> witness_table;  // indexed by a * n + b, -1 when none
  int n = 0;
};

GreenRelations green_relations(const InverseSemigroup& s);

// The left-multiplication representation z -> (t -> zt on d(z)S), landing in
// partial injections on the carrier.  Verified injective and multiplicative.
std::vector<PartialInjection> vagner_preston(const InverseSemigroup& s);

// All partial injections on {1..n} under composition.
struct SymmetricInverseMonoid {
  InverseSemigroup sgp;
  std::vector<PartialInjection> elements;
  int index_of(const PartialInjection& p) const;
};

SymmetricInverseMonoid symmetric_inverse_monoid(int n, int cap = 6);

// Adjoins a fresh zero (index 0) to a group; group element i maps to i + 1.
InverseSemigroup group_with_zero(const Group& g);

// Componentwise product of two inverse semigroups.
InverseSemigroup product_semigroup(const InverseSemigroup& a, const InverseSemigroup& b);

// Conjugates all tables by a permutation of the element indices:
// new index perm[i] plays the role of old index i.
InverseSemigroup relabel(const InverseSemigroup& s, const std::vector<int>& perm);

}  // namespace bis

#endif
