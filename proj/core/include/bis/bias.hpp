#ifndef BIS_BIAS_HPP
#define BIS_BIAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bis/inverse_semigroup.hpp"

namespace bis {

// A finite Boolean inverse semigroup.  On top of the base tables it carries
// the orthogonal-join table (defined exactly on orthogonal pairs), the
// difference table (defined on compatible pairs), and the unit, which always
// exists in the finite case: the top of the idempotent lattice acts as a
// two-sided identity.
struct Bias {
  InverseSemigroup sgp;
  // -1 encodes "undefined" in both partial tables.
  std::vector<int> join_table;
  std::vector<int> diff_table;

  int size() const { return sgp.size(); }
  int zero() const { return sgp.zero; }
  int one() const { return sgp.one; }
  int mul(int x, int y) const { return sgp.mul(x, y); }
  int inv(int x) const { return sgp.inv(x); }
  int d(int x) const { return sgp.d(x); }
  int r(int x) const { return sgp.r(x); }
  bool leq(int x, int y) const { return sgp.leq(x, y); }
  bool idempotent(int x) const { return sgp.idempotent(x); }

  bool orthogonal(int x, int y) const {
    return mul(d(x), d(y)) == zero() && mul(r(x), r(y)) == zero();
  }
  bool compatible(int x, int y) const {
    return idempotent(mul(inv(x), y)) && idempotent(mul(x, inv(y)));
  }
  // join of an orthogonal pair; throws InputError when undefined
  int join(int x, int y) const;
  int join_all(const std::vector<int>& xs) const;
  // x \ y on compatible pairs
  int diff(int x, int y) const;

  int skew_diff(int x, int y) const;  // (r(x)\r(y)) x (d(x)\d(y))
  int skew_add(int x, int y) const;   // (x skew_diff y) join y

  std::vector<int> idempotents() const { return sgp.idempotents(); }
};

// Why a structure fails to be Boolean, with witnesses.
struct BooleanAnalysis {
  bool ok = false;
  std::string reason;
  std::vector<int> witness;
  Bias bias;  // meaningful only when ok
};

// Builds the Boolean layer on an inverse semigroup with zero, or explains
// why none exists (idempotent lattice not Boolean, or a missing join).
BooleanAnalysis analyze_boolean(const InverseSemigroup& s);
Bias boolean_closure(const InverseSemigroup& s);  // throwing wrapper

Bias product_bias(const Bias& a, const Bias& b);
Bias relabel(const Bias& b, const std::vector<int>& perm);

// --- additive ideals -------------------------------------------------------

// Smallest additive ideal containing the seed: closed under multiplication by
// the whole semigroup on both sides and under orthogonal joins.
std::vector<int> generate_additive_ideal(const Bias& s, const std::vector<int>& seed);
bool is_additive_ideal(const Bias& s, const std::vector<int>& ideal, std::string* why = nullptr);
// All additive ideals (joins of principal ones), sorted by size.
std::vector<std::vector<int>> additive_ideals(const Bias& s);

// --- congruences -----------------------------------------------------------

// A bias congruence as a partition, in canonical form: class_of[x] is the
// least element of the class of x.
struct Congruence {
  std::vector<int> class_of;
  int num_classes() const;
  bool same(int x, int y) const { return class_of[x] == class_of[y]; }
  bool operator==(const Congruence& other) const = default;
  bool operator<(const Congruence& other) const { return class_of < other.class_of; }
  std::vector<std::vector<int>> classes() const;
};

Congruence identity_congruence(const Bias& s);
Congruence full_congruence(const Bias& s);

// Checks that a partition respects mul, inv, and additivity (for orthogonal
// idempotents a, b: x a = a and x b = b mod theta imply x (a join b) = a join b).
bool is_bias_congruence(const Bias& s, const Congruence& c, std::string* why = nullptr);

// Smallest bias congruence identifying x and y.
Congruence principal_congruence(const Bias& s, int x, int y);
// Join in the congruence lattice.
Congruence join_congruences(const Bias& s, const Congruence& a, const Congruence& b);
Congruence meet_congruences(const Bias& s, const Congruence& a, const Congruence& b);

// The congruence identifying the ideal with zero:
// x ~ y iff some z <= x, y has x\z and y\z in the ideal.
Congruence ideal_congruence(const Bias& s, const std::vector<int>& ideal);

struct CongruenceLattice {
  std::vector<Congruence> all;  // ordered by refinement (finer first)
  bool subdirectly_irreducible = false;
  bool finitely_subdirectly_irreducible = false;
};

CongruenceLattice congruence_lattice(const Bias& s, int cap = 100);

Bias quotient(const Bias& s, const Congruence& c);
// Index of each class of c in quotient(s, c), by representative.
std::vector<int> quotient_map(const Bias& s, const Congruence& c);

// --- structural predicates -------------------------------------------------

struct StructuralPredicates {
  bool d_cancellative = false;
  bool factorizable = false;
};

// The two flags are provably equal for finite (unital) structures; the
// implementation computes both independently and asserts agreement.
StructuralPredicates structural_predicates(const Bias& s);

bool invertible(const Bias& s, int x);
std::vector<int> unit_group_elements(const Bias& s);

// --- homomorphisms ---------------------------------------------------------

// A map is a bias homomorphism iff it preserves 0, mul, inv, and joins of
// orthogonal pairs (equivalently both skew operations).
bool is_bias_hom(const Bias& src, const Bias& dst, const std::vector<int>& map,
                 std::string* why = nullptr);
bool is_injective(const std::vector<int>& map);
bool is_surjective(const std::vector<int>& map, int dst_size);

// Extracts the corner eSe as a bias of its own; `back` maps new indices to
// old ones, `fwd` maps old to new (-1 outside the corner).
struct SubBias {
  Bias bias;
  std::vector<int> back;
  std::vector<int> fwd;
};
SubBias corner(const Bias& s, int e);

// Injective-bias-homomorphism search by backtracking over generator images
// with partial closure propagation.  Complete: returns nullopt only when no
// embedding exists.
std::optional<std::vector<int>> find_bias_embedding(const Bias& src, const Bias& dst,
                                                    std::uint64_t step_cap = 200000000ULL);

// Small generating set of the bias under (0, ^-1, *, skew ops), greedy.
std::vector<int> bias_generating_set(const Bias& s);

}  // namespace bis

#endif
