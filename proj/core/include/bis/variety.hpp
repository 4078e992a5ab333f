#ifndef BIS_VARIETY_HPP
#define BIS_VARIETY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bis/group.hpp"

namespace bis {

// A variety of biases presented by finitely many matrix-bias generators
// (n_i, G_i); the variety is generated by the order-n_i matrix biases over
// the groups with zero.
struct VarietySpec {
  struct Generator {
    int n = 0;
    Group group;
    std::string label;  // display only
  };
  std::vector<Generator> generators;
};

// Three-valued verdicts: resource caps never silently flip to false.
enum class Verdict { True, False, Inconclusive };

struct MembershipResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string note;  // reason when inconclusive / false
  explicit operator bool() const { return verdict == Verdict::True; }
};

struct VarietyCaps {
  std::uint64_t wreath_cap = 10000;       // |G|^n * n!
  std::uint64_t coordinate_cap = 10000;   // |H|^k coordinates of the free object
  std::uint64_t free_object_cap = 200000; // elements of the relatively free group
};

// Does G lie in the variety of groups generated by the list?  Decided by
// building the relatively free group on d(G) generators inside
// H^(H^k), H the product of the generators, and testing whether some
// generating tuple of G extends to a homomorphism from it.
MembershipResult group_variety_member(const Group& g, const std::vector<Group>& generators,
                                      const VarietyCaps& caps = {});

// Criterion for M_n(G0) to lie in the variety: n bounded by some generator
// order, and G in the group variety generated by the wreath products
// G_i wr S_{floor(n_i / n)} over generators with n <= n_i.
MembershipResult matrix_variety_member(int n, const Group& g, const VarietySpec& v,
                                       const VarietyCaps& caps = {});

// m <= n and G embeds into H wr S_{floor(n/m)}.
MembershipResult matrix_bias_embeds(int m, const Group& g, int n, const Group& h,
                                    const VarietyCaps& caps = {});

// The n-th radical of the variety: the group variety of all G with
// M_n(G0) in it, presented by the wreath products of the generators;
// nullopt encodes the empty class (n exceeds the variety index).
std::optional<std::vector<Group>> radical(int n, const VarietySpec& v,
                                          const VarietyCaps& caps = {});

int variety_index(const VarietySpec& v);

struct ChainEntry {
  std::string what;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

struct ChainReport {
  std::vector<ChainEntry> entries;
  int failed = 0;
  int inconclusive = 0;
  bool passed() const { return failed == 0 && inconclusive == 0; }
};

// Exercises the radical sequence of the variety: the wreath descent
// Wr_m(Rad_{mn}) inside Rad_n, the monotonicity Rad_{n+1} inside Rad_n at
// generator level, and the generator round trip through the membership
// criterion.
ChainReport check_radical_chain(const VarietySpec& v, const VarietyCaps& caps = {});

}  // namespace bis

#endif
