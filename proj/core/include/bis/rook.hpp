#ifndef BIS_ROOK_HPP
#define BIS_ROOK_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bis/bias.hpp"

namespace bis {

// A generalized rook matrix over a bias: entries in one row have pairwise
// orthogonal ranges, entries in one column pairwise orthogonal domains.
struct RookMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major, base element indices

  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const RookMatrix&) const = default;
  bool operator<(const RookMatrix& other) const { return entries < other.entries; }
};

bool rook_valid(const Bias& base, const RookMatrix& m);
RookMatrix rook_mul(const Bias& base, const RookMatrix& a, const RookMatrix& b);
RookMatrix rook_inv(const Bias& base, const RookMatrix& a);
RookMatrix rook_zero(const Bias& base, int n);
// x placed at (i, j), 1-based positions.
RookMatrix singleton(const Bias& base, int x, int i, int j, int n);

// The bias of all generalized rook matrices of order n over `base`,
// materialized with full tables.
struct RookBias {
  int n = 0;
  Bias base;
  Bias bias;
  std::vector<RookMatrix> matrices;
  int index_of(const RookMatrix& m) const;

 private:
  friend RookBias rook_bias(int n, const Bias& base, std::uint64_t cap);
  std::map<std::vector<int>, int> index_;
};

RookBias rook_bias(int n, const Bias& base, std::uint64_t cap = 100000);

// Entrywise lift of a base homomorphism; rejects non-additive maps.
std::vector<int> lift_hom(const std::vector<int>& f, const RookBias& src, const RookBias& dst);

// Entrywise lift of a base congruence.
Congruence lift_congruence(const Congruence& alpha, const RookBias& rook);

// The congruences of the order-n matrix structure over a group with zero are
// the normal subgroups of the group plus the full collapse.
struct CongruenceCountCheck {
  std::size_t normal_subgroups = 0;
  std::size_t congruences = 0;
  bool consistent = false;
};
CongruenceCountCheck congruence_count_check(int n, const Group& g,
                                            std::uint64_t cap = 100000);

// The block bijection between matrices of order m*n over S and matrices of
// order n over the order-m matrix bias, with row-major blocking.
struct BlockIso {
  RookBias flat;    // order m*n over S
  RookBias nested;  // order n over M_m(S)
  std::vector<int> to_nested;
  std::vector<int> to_flat;
};
BlockIso block_iso(int m, int n, const Bias& base, std::uint64_t cap = 100000);

// Corner decomposition along a homogeneous sequence (e_1..e_k):
// pairwise orthogonal, pairwise D-equivalent idempotents.  Realizes the
// isomorphism of eSe with k-by-k matrices over e_1 S e_1.
struct CornerIso {
  SubBias corner_side;  // eSe, e the join of the sequence
  RookBias matrix_side;
  std::vector<int> to_matrix;
  std::vector<int> to_corner;
  std::vector<int> witnesses;  // c_i with d(c_i) = e_1, r(c_i) = e_i
};
CornerIso corner_iso(const Bias& s, const std::vector<int>& es, std::uint64_t cap = 100000);

// A system of elements b_(i,j) with b_(i,j) b_(k,l) = [j==k] b_(i,l).
struct MatrixUnitSystem {
  int n = 0;
  std::vector<int> elems;  // row-major indices into the ambient bias
  int at(int i, int j) const { return elems[static_cast<std::size_t>(i) * n + j]; }
};

// Lifts designated matrix units of the target through a surjection phi,
// choosing least-index preimages.  Verifies phi(b_(i,j)) hits the targets
// and the matrix-unit relations.
MatrixUnitSystem lift_units_through(const Bias& s, const Bias& target,
                                    const std::vector<int>& phi,
                                    const std::vector<int>& target_units, int n);

// Projectivity of the symmetric inverse monoid: a right inverse of any
// surjection onto it, built from lifted matrix units.
struct SymmetricLift {
  MatrixUnitSystem units;
  std::vector<int> section;  // target element -> preimage in s
};
SymmetricLift lift_matrix_units(const Bias& s, const SymmetricInverseMonoid& target,
                                const Bias& target_bias, const std::vector<int>& phi);

// Projectivity of matrix biases over groups with zero among structures with
// cancellative type data: given a surjection onto M_n(G0), produces a group
// cover, a quotient map back onto G, and an embedding making the triangle
// commute entrywise.
struct GroupMatrixLift {
  Group lifted;                   // the cover group
  std::vector<int> lifted_elems;  // cover group element -> s element
  std::vector<int> psi;           // cover group -> G, surjective hom
  RookBias lifted_rook;           // matrices over the cover group with zero
  std::vector<int> eta;           // embedding of lifted_rook into s
};
GroupMatrixLift lift_group_matrix(const Bias& s, const RookBias& target, const Group& g,
                                  const std::vector<int>& phi, std::uint64_t cap = 100000);

// The canonical identification of order-n matrices over the 2-element bias
// with partial injections: a 0/1 matrix maps j to i where entry (i,j) is 1.
std::vector<int> rook_symmetric_iso(const RookBias& rook, const SymmetricInverseMonoid& sym);

// The invertible elements of the order-n matrix structure over a group with
// zero, together with the explicit identification with the wreath product:
// the tuple entry g_i sits at row i, in the column the permutation sends
// there.  The identification is verified bijective and multiplicative.
struct UnitGroupReport {
  RookBias rook;
  std::vector<int> unit_elems;       // indices of the invertibles
  Group wreath;                      // the wreath product G wr S_n
  std::vector<int> wreath_to_matrix; // verified isomorphism onto the units
  bool isomorphic = false;
};
UnitGroupReport units_of_matrix_bias(int n, const Group& g, std::uint64_t cap = 100000);

}  // namespace bis

#endif
