#ifndef BIS_TEST_STRUCTURES_HPP
#define BIS_TEST_STRUCTURES_HPP

#include <string>
#include <vector>

#include "bis/bias.hpp"
#include "bis/free_bias.hpp"
#include "bis/rook.hpp"

namespace bis::testlib {

struct Named {
  std::string name;
  Bias bias;
};

// the shared desk-scale library of structures
inline std::vector<Named> library() {
  std::vector<Named> lib;
  for (int n = 1; n <= 4; ++n)
    lib.push_back({"I" + std::to_string(n), symmetric_bias(n)});
  lib.push_back({"Z2^0", boolean_closure(group_with_zero(cyclic_group(2)))});
  lib.push_back({"Z3^0", boolean_closure(group_with_zero(cyclic_group(3)))});
  lib.push_back(
      {"M2(Z2^0)", rook_bias(2, boolean_closure(group_with_zero(cyclic_group(2)))).bias});
  lib.push_back({"I2xZ3^0",
                 product_bias(symmetric_bias(2),
                              boolean_closure(group_with_zero(cyclic_group(3))))});
  return lib;
}

// all partitions of {0..n-1} as restricted growth strings
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    int i = n - 1;
    while (i > 0) {
      int maxv = 0;
      for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
      if (rgs[i] <= maxv) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

// brute-force congruence count: scan every partition
inline int congruence_count_by_scan(const Bias& s) {
  int count = 0;
  for (auto& rgs : all_partitions(s.size())) {
    Congruence c;
    c.class_of.resize(s.size());
    std::vector<int> first(s.size(), -1);
    for (int x = 0; x < s.size(); ++x) {
      if (first[rgs[x]] < 0) first[rgs[x]] = x;
      c.class_of[x] = first[rgs[x]];
    }
    if (is_bias_congruence(s, c)) ++count;
  }
  return count;
}

}  // namespace bis::testlib

#endif
