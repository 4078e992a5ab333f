#ifndef BIS_GROUP_HPP
#define BIS_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bis {

// A finite group as a dense multiplication table.  mul(x, y) composes
// "apply y first, then x", matching the semigroup convention used
// throughout the library.
struct Group {
  std::vector<std::string> names;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> inv_table;
  int id = 0;

  int size() const { return static_cast<int>(names.size()); }
  int mul(int x, int y) const { return mul_table[static_cast<std::size_t>(x) * names.size() + y]; }
  int inv(int x) const { return inv_table[x]; }

  int order_of(int x) const;
  int pow(int x, long long e) const;
};

Group trivial_group();
Group cyclic_group(int n);
// All permutations of [n]; elements named in cycle notation.
Group symmetric_group(int n);
Group direct_product(const Group& a, const Group& b);
Group direct_product(const std::vector<Group>& factors);

// Builds a group from its permutation generators acting on {1..degree}.
// Each generator is a list of cycles, each cycle a list of points.
Group group_from_permutations(int degree, const std::vector<std::vector<std::vector<int>>>& gens);

// Throws InputError if the tables fail the group axioms.
void validate_group(const Group& g);

// Wreath product G wr S_n on the carrier G^n x S_n with
// [g1..gn; a]*[h1..hn; b] = [g1 h_{a^-1(1)}, ..., gn h_{a^-1(n)}; ab].
// `cap` bounds |G|^n * n!.
Group wreath_product(const Group& g, int n, std::uint64_t cap = 10000);

// Coordinates of a wreath-product element: base tuple plus permutation.
struct WreathElement {
  std::vector<int> tuple;
  std::vector<int> perm;  // perm[i] = image of point i (0-based)
};
WreathElement wreath_decode(const Group& g, int n, int index);
int wreath_encode(const Group& g, int n, const WreathElement& w);

// All normal subgroups as sorted element lists, ordered by size then content.
std::vector<std::vector<int>> normal_subgroups(const Group& g);

std::vector<std::vector<int>> conjugacy_classes(const Group& g);

// Subgroup generated by a set of elements.
std::vector<int> subgroup_closure(const Group& g, const std::vector<int>& gens);

// A generating set of minimal cardinality, found by trying subset sizes
// in increasing order (element order within a size is lexicographic).
std::vector<int> minimal_generating_set(const Group& g);

// Injective homomorphism search; returns the image vector indexed by
// source element, or nullopt when no embedding exists.
std::optional<std::vector<int>> find_group_embedding(const Group& g, const Group& h);

bool group_isomorphic(const Group& a, const Group& b);

// Human-oriented label: matches small standard groups up to isomorphism,
// falling back to "order<n>".
std::string describe_group(const Group& g);

}  // namespace bis

#endif
