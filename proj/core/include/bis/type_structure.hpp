#ifndef BIS_TYPE_STRUCTURE_HPP
#define BIS_TYPE_STRUCTURE_HPP

#include <map>
#include <string>
#include <vector>

#include "bis/rook.hpp"

namespace bis {

// A finite Boolean inverse monoid decomposed as a product of matrix biases
// over groups with zero, together with the explicit isomorphism.
struct Decomposition {
  struct Factor {
    int n = 0;
    Group group;
  };
  std::vector<Factor> factors;
  Bias product;                // the rebuilt product of matrix biases
  std::vector<int> to_product; // source element -> product element
  std::vector<int> from_product;
  bool iso_checked = false;
};

Decomposition decompose(const Bias& s, std::uint64_t cap = 100000);

// Type data of a finite Boolean inverse monoid: the commutative monoid of
// D-classes of idempotents embeds in (Z+)^k with k the factor count; typ of
// an idempotent counts the atoms below it, factor by factor.
struct TypeMonoidDescriptor {
  int factor_count = 0;
  std::vector<int> unit_vector;             // typ(1), one entry per factor
  std::vector<int> idempotents;             // the idempotent elements
  std::map<int, std::vector<int>> typ_map;  // idempotent -> vector
};

TypeMonoidDescriptor type_monoid(const Bias& s, std::uint64_t cap = 100000);

// Least n >= 1 with d(x^n) = r(x^n); 0 for the zero element.  Finite inputs
// always produce finite values; -1 is the "infinity" sentinel kept for
// signature symmetry.
int element_index(const Bias& s, int x);
int bias_index(const Bias& s);

struct IndexReport {
  int bias_side = 0;    // max of element indexes
  int monoid_side = 0;  // max over idempotents e of max coordinate of typ(e)
  bool consistent = false;
};
IndexReport index_consistency(const Bias& s, std::uint64_t cap = 100000);

struct PrimenessReport {
  int factor_count = 0;
  bool type_monoid_prime = false;  // iff one factor
  bool finitely_subdirectly_irreducible = false;
  bool consistent = false;  // f.s.i. implies prime
};
PrimenessReport primeness_and_sdi(const Bias& s, int congruence_cap = 100,
                                  std::uint64_t cap = 100000);

}  // namespace bis

#endif
