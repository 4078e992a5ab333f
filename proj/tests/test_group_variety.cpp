#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bis/errors.hpp"
#include "bis/variety.hpp"
#include "test_structures.hpp"

using namespace bis;

namespace {

VarietySpec var_of(std::vector<std::pair<int, Group>> gens) {
  VarietySpec v;
  for (auto& [n, g] : gens) v.generators.push_back({n, g, ""});
  return v;
}

VarietySpec symmetric_variety(int n) { return var_of({{n, trivial_group()}}); }

}  // namespace

TEST_CASE("group constructions") {
  CHECK_NOTHROW(validate_group(trivial_group()));
  CHECK_NOTHROW(validate_group(cyclic_group(6)));
  CHECK_NOTHROW(validate_group(symmetric_group(4)));
  CHECK(symmetric_group(3).size() == 6);
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).size() == 6);
  CHECK(group_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  CHECK_FALSE(group_isomorphic(symmetric_group(3), cyclic_group(6)));
}

TEST_CASE("wreath products") {
  SUBCASE("single coordinate gives the base group back") {
    for (auto g : {cyclic_group(3), symmetric_group(3)}) {
      Group w = wreath_product(g, 1);
      CHECK(w.size() == g.size());
      CHECK(group_isomorphic(w, g));
    }
  }
  SUBCASE("order is |G|^n n!") {
    CHECK(wreath_product(cyclic_group(2), 2).size() == 8);
    CHECK(wreath_product(cyclic_group(3), 2).size() == 18);
    CHECK(wreath_product(cyclic_group(2), 3).size() == 48);
  }
  SUBCASE("trivial base gives the symmetric group") {
    for (int n = 1; n <= 4; ++n)
      CHECK(group_isomorphic(wreath_product(trivial_group(), n), symmetric_group(n)));
  }
  SUBCASE("group laws hold at full scale") {
    for (auto w : {wreath_product(cyclic_group(2), 2), wreath_product(cyclic_group(3), 2),
                   wreath_product(cyclic_group(2), 3), wreath_product(cyclic_group(3), 3),
                   wreath_product(symmetric_group(3), 2)})
      CHECK_NOTHROW(validate_group(w));
  }
  SUBCASE("cap") { CHECK_THROWS_AS(wreath_product(symmetric_group(4), 4), ResourceError); }
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(cyclic_group(2)).size() == 2);
  CHECK(normal_subgroups(cyclic_group(4)).size() == 3);
  CHECK(normal_subgroups(symmetric_group(3)).size() == 3);
  CHECK(normal_subgroups(symmetric_group(4)).size() == 4);
  SUBCASE("the middle normal subgroup of S3 is the 3-cycle part") {
    auto ns = normal_subgroups(symmetric_group(3));
    CHECK(ns[1].size() == 3);
  }
}

TEST_CASE("minimal generating sets") {
  CHECK(minimal_generating_set(trivial_group()).empty());
  CHECK(minimal_generating_set(cyclic_group(12)).size() == 1);
  CHECK(minimal_generating_set(symmetric_group(3)).size() == 2);
  CHECK(minimal_generating_set(direct_product(cyclic_group(2), cyclic_group(2))).size() == 2);
}

TEST_CASE("group embedding search") {
  CHECK(find_group_embedding(cyclic_group(3), symmetric_group(3)).has_value());
  CHECK(find_group_embedding(cyclic_group(2), symmetric_group(3)).has_value());
  CHECK_FALSE(find_group_embedding(cyclic_group(4), symmetric_group(3)).has_value());
  CHECK_FALSE(
      find_group_embedding(cyclic_group(3), wreath_product(cyclic_group(2), 2)).has_value());
  SUBCASE("embeddings are verified homomorphisms") {
    auto img = find_group_embedding(symmetric_group(3), symmetric_group(4));
    REQUIRE(img.has_value());
    Group a = symmetric_group(3), b = symmetric_group(4);
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        CHECK((*img)[a.mul(x, y)] == b.mul((*img)[x], (*img)[y]));
  }
}

TEST_CASE("group variety membership") {
  CHECK(group_variety_member(cyclic_group(2), {cyclic_group(4)}));
  CHECK(group_variety_member(cyclic_group(4), {cyclic_group(4)}));
  CHECK_FALSE(group_variety_member(cyclic_group(3), {cyclic_group(2)}));
  CHECK_FALSE(group_variety_member(symmetric_group(3), {cyclic_group(6)}));
  CHECK(group_variety_member(cyclic_group(6), {symmetric_group(3)}));
  CHECK(group_variety_member(direct_product(cyclic_group(2), cyclic_group(2)),
                             {cyclic_group(2)}));
  CHECK_FALSE(group_variety_member(cyclic_group(4), {cyclic_group(2)}));
  CHECK(group_variety_member(symmetric_group(3), {symmetric_group(3)}));

  SUBCASE("caps produce explicit inconclusive verdicts") {
    VarietyCaps caps;
    caps.coordinate_cap = 10;
    auto r = group_variety_member(symmetric_group(3), {symmetric_group(3)}, caps);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.note.find("inconclusive") != std::string::npos);
  }
  SUBCASE("membership is invariant under replacing a generator by generators of its variety") {
    // the square of a group generates the same variety
    std::vector<Group> probes = {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                 symmetric_group(3)};
    for (auto& g : probes) {
      auto direct = group_variety_member(g, {symmetric_group(3)});
      auto doubled =
          group_variety_member(g, {direct_product(symmetric_group(3), symmetric_group(3))});
      CHECK(direct.verdict == doubled.verdict);
    }
  }
}

TEST_CASE("matrix bias embedding criterion") {
  CHECK(matrix_bias_embeds(2, trivial_group(), 3, trivial_group()));
  {
    auto r = matrix_bias_embeds(1, cyclic_group(3), 2, cyclic_group(2));
    CHECK(r.verdict == Verdict::False);
    CHECK(r.note.find("no monomorphism") != std::string::npos);
  }
  {
    auto r = matrix_bias_embeds(3, cyclic_group(2), 2, symmetric_group(3));
    CHECK(r.verdict == Verdict::False);
    CHECK(r.note.find("order condition") != std::string::npos);
  }
  CHECK(matrix_bias_embeds(1, cyclic_group(2), 2, trivial_group()));
  CHECK(matrix_bias_embeds(2, cyclic_group(3), 2, cyclic_group(3)));
}

TEST_CASE("embedding criterion agrees with the direct search at small scale") {
  // both routes decided independently: group-level criterion versus a
  // backtracking search for an additive embedding of the matrix structures
  std::vector<Group> groups = {trivial_group(), cyclic_group(2), cyclic_group(3)};
  std::vector<Bias> gz;
  for (auto& g : groups) gz.push_back(boolean_closure(group_with_zero(g)));
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (std::size_t hi = 0; hi < groups.size(); ++hi) {
          auto criterion = matrix_bias_embeds(m, groups[gi], n, groups[hi]);
          REQUIRE(criterion.verdict != Verdict::Inconclusive);
          Bias src = rook_bias(m, gz[gi]).bias;
          Bias dst = rook_bias(n, gz[hi]).bias;
          bool direct = find_bias_embedding(src, dst).has_value();
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(gi);
          CAPTURE(hi);
          CHECK((criterion.verdict == Verdict::True) == direct);
        }
}

TEST_CASE("variety index and radicals") {
  auto v3 = symmetric_variety(3);
  CHECK(variety_index(v3) == 3);
  SUBCASE("radical generators") {
    auto r1 = radical(1, v3);
    REQUIRE(r1.has_value());
    REQUIRE(r1->size() == 1);
    CHECK(group_isomorphic((*r1)[0], symmetric_group(3)));
    auto r2 = radical(2, v3);
    REQUIRE(r2.has_value());
    CHECK((*r2)[0].size() == 1);  // floor(3/2) = 1 gives the trivial wreath
    CHECK_FALSE(radical(4, v3).has_value());
  }
}

TEST_CASE("matrix variety membership") {
  auto v2 = symmetric_variety(2);
  CHECK(matrix_variety_member(1, cyclic_group(2), v2));
  {
    auto r = matrix_variety_member(3, trivial_group(), v2);
    CHECK(r.verdict == Verdict::False);
    CHECK(r.note.find("order obstruction") != std::string::npos);
  }
  auto vz = var_of({{2, cyclic_group(3)}});
  CHECK(matrix_variety_member(2, cyclic_group(3), vz));
  // the radical at order one is generated by the wreath of Z3 with the
  // 2-point symmetric group, whose exponent 6 rules out Z4
  CHECK_FALSE(matrix_variety_member(1, cyclic_group(4), vz));
  // and which contains a copy of S3 on the antidiagonal
  CHECK(matrix_variety_member(1, symmetric_group(3), vz));
}

TEST_CASE("wreath operator distributes over joins of varieties at generator level") {
  // membership verdicts agree between the wreath of a union and the union of
  // the wreaths, over a probe set
  Group z2 = cyclic_group(2), z3 = cyclic_group(3);
  SUBCASE("single coordinate, all probes") {
    std::vector<Group> probes = {trivial_group(), z2, z3, cyclic_group(4), symmetric_group(3),
                                 direct_product(z2, z2), cyclic_group(6)};
    std::vector<Group> wr_join = {wreath_product(direct_product(z2, z3), 1)};
    std::vector<Group> join_wr = {wreath_product(z2, 1), wreath_product(z3, 1)};
    for (auto& p : probes) {
      auto lhs = group_variety_member(p, wr_join);
      auto rhs = group_variety_member(p, join_wr);
      REQUIRE(lhs.verdict != Verdict::Inconclusive);
      REQUIRE(rhs.verdict != Verdict::Inconclusive);
      CHECK(lhs.verdict == rhs.verdict);
    }
  }
  SUBCASE("two coordinates, one-generated probes") {
    std::vector<Group> probes = {trivial_group(), z2, z3, cyclic_group(4),
                                 cyclic_group(6), cyclic_group(9), cyclic_group(12)};
    std::vector<Group> wr_join = {wreath_product(direct_product(z2, z3), 2)};
    std::vector<Group> join_wr = {wreath_product(z2, 2), wreath_product(z3, 2)};
    for (auto& p : probes) {
      auto lhs = group_variety_member(p, wr_join);
      auto rhs = group_variety_member(p, join_wr);
      REQUIRE(lhs.verdict != Verdict::Inconclusive);
      REQUIRE(rhs.verdict != Verdict::Inconclusive);
      CHECK(lhs.verdict == rhs.verdict);
    }
  }
}

TEST_CASE("radical chains") {
  SUBCASE("symmetric varieties pass") {
    for (int n : {2, 3}) {
      auto rep = check_radical_chain(symmetric_variety(n));
      CAPTURE(n);
      CHECK(rep.passed());
    }
  }
  SUBCASE("matrix variety over Z2 passes") {
    auto rep = check_radical_chain(var_of({{1, cyclic_group(2)}}));
    CHECK(rep.passed());
    auto rep2 = check_radical_chain(var_of({{2, cyclic_group(2)}}));
    CHECK(rep2.passed());
  }
  SUBCASE("single-coordinate wreath step is trivially inside") {
    auto v = var_of({{1, symmetric_group(3)}});
    auto rep = check_radical_chain(v);
    CHECK(rep.passed());
  }
}
