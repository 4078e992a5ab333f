#ifndef BIS_MUNN_HPP
#define BIS_MUNN_HPP

#include <string>
#include <vector>

namespace bis {

// An element of the free inverse semigroup on a finite alphabet, as its
// birooted word tree: the prefix-closed set of reduced words reachable while
// reading the element from the start vertex (normalized to the empty word),
// plus the end vertex.  Letters are 1..k, inverses -1..-k, words reduced.
struct MunnTree {
  int alphabet = 0;
  std::vector<std::vector<int>> vertices;  // sorted, includes the empty word
  std::vector<int> end;

  bool operator==(const MunnTree&) const = default;
  bool operator<(const MunnTree& other) const;
  std::string to_string() const;
};

MunnTree munn_generator(int alphabet, int letter);  // letter in 1..alphabet

// multiplication applies the left factor after the right one has been read;
// the trees paste at the junction vertex and fold inside the ambient tree
MunnTree munn_mul(const MunnTree& x, const MunnTree& y);
MunnTree munn_inv(const MunnTree& x);
MunnTree munn_d(const MunnTree& x);
MunnTree munn_r(const MunnTree& x);
bool munn_idempotent(const MunnTree& x);
bool munn_leq(const MunnTree& x, const MunnTree& y);  // x = y d(x)

// A word spelling the element: visit every branch of the tree and finish at
// the end vertex.  Reading it back through munn arithmetic reproduces x.
std::vector<int> munn_word(const MunnTree& x);

}  // namespace bis

#endif
