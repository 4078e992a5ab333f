#ifndef BIS_PARTIAL_INJECTION_HPP
#define BIS_PARTIAL_INJECTION_HPP

#include <string>
#include <utility>
#include <vector>

namespace bis {

// A partial one-to-one map on {1..n}, stored as (source, target) pairs
// sorted by source.  Sources are pairwise distinct, targets likewise.
struct PartialInjection {
  int n = 0;
  std::vector<std::pair<int, int>> map;

  PartialInjection() = default;
  PartialInjection(int ambient, std::vector<std::pair<int, int>> pairs);

  static PartialInjection identity(int n);
  static PartialInjection empty(int n);
  // Identity restricted to a subset of {1..n}.
  static PartialInjection id_on(int n, const std::vector<int>& subset);

  int rank() const { return static_cast<int>(map.size()); }
  bool defined_at(int s) const;
  int at(int s) const;  // 0 when undefined

  PartialInjection inverse() const;
  std::vector<int> domain() const;
  std::vector<int> range() const;

  bool operator==(const PartialInjection& other) const = default;
  bool operator<(const PartialInjection& other) const;

  std::string to_string() const;
};

// compose(x, y) applies y first, then x.
PartialInjection compose(const PartialInjection& x, const PartialInjection& y);

void validate(const PartialInjection& p);

}  // namespace bis

#endif
