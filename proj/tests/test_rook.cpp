#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "bis/errors.hpp"
#include "bis/json_io.hpp"
#include "test_structures.hpp"

using namespace bis;

namespace {

Bias gz(const Group& g) { return boolean_closure(group_with_zero(g)); }

bool refines(const Congruence& a, const Congruence& b) {
  for (std::size_t x = 0; x < a.class_of.size(); ++x)
    for (std::size_t y = 0; y < a.class_of.size(); ++y)
      if (a.same(static_cast<int>(x), static_cast<int>(y)) &&
          !b.same(static_cast<int>(x), static_cast<int>(y)))
        return false;
  return true;
}

}  // namespace

TEST_CASE("order-2 matrices over the 2-element bias are the partial injections on 2 points") {
  RookBias rb = rook_bias(2, gz(trivial_group()));
  CHECK(rb.bias.size() == 7);
  const auto& sym = symmetric_monoid(2);
  auto iso = rook_symmetric_iso(rb, sym);
  CHECK(is_injective(iso));
  std::string why;
  CHECK(is_bias_hom(rb.bias, symmetric_bias(2), iso, &why));
}

TEST_CASE("valid patterns over a group with zero avoid shared rows and columns") {
  RookBias rb = rook_bias(2, gz(cyclic_group(2)));
  CHECK(rb.bias.size() == 17);  // 1 + 4*2 + 2*4
  for (auto& m : rb.matrices) {
    for (int i = 0; i < 2; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < 2; ++j) {
        if (m.at(i, j) != 0) ++row;
        if (m.at(j, i) != 0) ++col;
      }
      CHECK(row <= 1);
      CHECK(col <= 1);
    }
  }
}

TEST_CASE("order-2 matrices over I2 are as many as partial injections on 4 points") {
  RookBias rb = rook_bias(2, symmetric_bias(2));
  CHECK(rb.bias.size() == 209);
  CHECK(symmetric_monoid(4).elements.size() == 209);
}

TEST_CASE("singletons") {
  Bias base = gz(cyclic_group(2));
  RookBias rb = rook_bias(2, base);
  int g = 2;  // the nontrivial group element
  SUBCASE("zero singleton is the zero matrix") {
    CHECK(rb.index_of(singleton(base, base.zero(), 1, 1, 2)) == rb.bias.zero());
  }
  SUBCASE("transit products multiply in the corner") {
    int a = rb.index_of(singleton(base, g, 1, 2, 2));
    int b = rb.index_of(singleton(base, g, 2, 1, 2));
    int expect = rb.index_of(singleton(base, base.mul(g, g), 1, 1, 2));
    CHECK(rb.bias.mul(a, b) == expect);
  }
  SUBCASE("domain idempotent sits at the source position") {
    int a = rb.index_of(singleton(base, g, 1, 2, 2));
    CHECK(rb.bias.d(a) == rb.index_of(singleton(base, base.d(g), 2, 2, 2)));
  }
  SUBCASE("conjugation by dominating diagonal idempotents moves singletons") {
    RookMatrix diag = rook_zero(base, 2);
    diag.at(0, 0) = base.one();
    diag.at(1, 1) = base.one();
    int a = rb.index_of(diag);
    int x12 = rb.index_of(singleton(base, g, 1, 2, 2));
    CHECK(rb.bias.mul(rb.bias.mul(a, x12), a) == x12);
  }
  SUBCASE("one-position transport between cells") {
    // relocating x from (i,j) to (i',j') through the dominating diagonal:
    // the (i',i) and (j,j') one-cells carry it over
    int one = base.one();
    for (int i2 = 1; i2 <= 2; ++i2)
      for (int j2 = 1; j2 <= 2; ++j2) {
        int lhs = rb.index_of(singleton(base, g, i2, j2, 2));
        int left = rb.index_of(singleton(base, one, i2, 1, 2));
        int mid = rb.index_of(singleton(base, g, 1, 2, 2));
        int right = rb.index_of(singleton(base, one, 2, j2, 2));
        CHECK(rb.bias.mul(rb.bias.mul(left, mid), right) == lhs);
      }
  }
}

TEST_CASE("products and inverses of valid matrices stay valid") {
  Bias base = gz(cyclic_group(2));
  RookBias rb = rook_bias(2, base);
  for (auto& a : rb.matrices) {
    CHECK(rook_valid(base, rook_inv(base, a)));
    for (auto& b : rb.matrices) CHECK(rook_valid(base, rook_mul(base, a, b)));
  }
}

TEST_CASE("rook tables agree with the generic closure") {
  RookBias rb = rook_bias(2, gz(trivial_group()));
  Bias generic = boolean_closure(rb.bias.sgp);
  CHECK(generic.join_table == rb.bias.join_table);
  CHECK(generic.diff_table == rb.bias.diff_table);
  CHECK(generic.one() == rb.bias.one());
}

TEST_CASE("homomorphism lifting") {
  Bias z2 = gz(cyclic_group(2));
  Bias z4 = gz(cyclic_group(4));
  Bias tv = gz(trivial_group());
  RookBias m_z2 = rook_bias(2, z2), m_z4 = rook_bias(2, z4), m_tv = rook_bias(2, tv);

  // collapse maps: group elements to the identity
  std::vector<int> collapse_z2 = {0, 1, 1};
  std::vector<int> collapse_z4_to_z2 = {0, 1, 2, 1, 2};  // quotient by squares

  SUBCASE("entrywise lift of a surjection is surjective") {
    auto lifted = lift_hom(collapse_z2, m_z2, m_tv);
    std::string why;
    CHECK(is_bias_hom(m_z2.bias, m_tv.bias, lifted, &why));
    CHECK(is_surjective(lifted, m_tv.bias.size()));
  }
  SUBCASE("lifting respects composition") {
    auto f = lift_hom(collapse_z4_to_z2, m_z4, m_z2);
    auto g = lift_hom(collapse_z2, m_z2, m_tv);
    std::vector<int> composed_base(z4.size());
    for (int x = 0; x < z4.size(); ++x) composed_base[x] = collapse_z2[collapse_z4_to_z2[x]];
    auto direct = lift_hom(composed_base, m_z4, m_tv);
    for (int x = 0; x < m_z4.bias.size(); ++x) CHECK(direct[x] == g[f[x]]);
  }
  SUBCASE("non-additive maps are rejected") {
    std::vector<int> bad = {0, 1, 0};  // sends the group element to zero
    CHECK_THROWS_AS(lift_hom(bad, m_z2, m_tv), InputError);
  }
}

TEST_CASE("congruence lifting is a lattice isomorphism at small scale") {
  Bias z2 = gz(cyclic_group(2));
  RookBias rb = rook_bias(2, z2);
  auto base_lat = congruence_lattice(z2);
  auto lifted_lat = congruence_lattice(rb.bias);
  CHECK(base_lat.all.size() == 3);
  CHECK(lifted_lat.all.size() == 3);

  std::vector<Congruence> lifted;
  for (auto& alpha : base_lat.all) {
    Congruence big = lift_congruence(alpha, rb);
    CHECK(is_bias_congruence(rb.bias, big));
    lifted.push_back(big);
  }
  SUBCASE("bijective onto the lifted lattice") {
    std::set<Congruence> a(lifted.begin(), lifted.end());
    std::set<Congruence> b(lifted_lat.all.begin(), lifted_lat.all.end());
    CHECK(a == b);
  }
  SUBCASE("order preserving in both directions") {
    for (std::size_t i = 0; i < base_lat.all.size(); ++i)
      for (std::size_t j = 0; j < base_lat.all.size(); ++j)
        CHECK(refines(base_lat.all[i], base_lat.all[j]) == refines(lifted[i], lifted[j]));
  }
  SUBCASE("identity lifts to identity") {
    CHECK(lift_congruence(identity_congruence(z2), rb) == identity_congruence(rb.bias));
  }
}

TEST_CASE("congruence counts follow the normal subgroup lattice") {
  struct Case {
    int n;
    Group g;
    std::size_t nsub;
  };
  std::vector<Case> cases = {{1, cyclic_group(2), 2},
                             {2, cyclic_group(2), 2},
                             {1, symmetric_group(3), 3},
                             {2, trivial_group(), 1},
                             {3, trivial_group(), 1}};
  for (auto& c : cases) {
    auto check = congruence_count_check(c.n, c.g);
    CHECK(check.normal_subgroups == c.nsub);
    CHECK(check.congruences == c.nsub + 1);
    CHECK(check.consistent);
  }
}

TEST_CASE("block decomposition of matrix orders") {
  SUBCASE("degenerate blocking is the identity") {
    auto iso = block_iso(1, 1, gz(cyclic_group(2)));
    for (int x = 0; x < iso.flat.bias.size(); ++x) CHECK(iso.to_nested[x] == x);
  }
  SUBCASE("2x2 blocking over the 2-element bias") {
    auto iso = block_iso(2, 2, gz(trivial_group()));
    CHECK(iso.flat.bias.size() == 209);
    CHECK(iso.nested.bias.size() == 209);
    CHECK(iso.to_nested[iso.flat.bias.zero()] == iso.nested.bias.zero());
    for (int x = 0; x < iso.flat.bias.size(); ++x) CHECK(iso.to_flat[iso.to_nested[x]] == x);
  }
}

TEST_CASE("corner decomposition along homogeneous sequences") {
  SUBCASE("I4 along the two rank-2 halves") {
    const auto& m4 = symmetric_monoid(4);
    const auto& b4 = symmetric_bias(4);
    int e1 = m4.index_of(PartialInjection::id_on(4, {1, 2}));
    int e2 = m4.index_of(PartialInjection::id_on(4, {3, 4}));
    auto iso = corner_iso(b4, {e1, e2});
    CHECK(iso.corner_side.bias.size() == 209);  // e is the unit here
    CHECK(iso.matrix_side.bias.size() == 209);
    CHECK(iso.matrix_side.base.size() == 7);    // a copy of the rank-2 corner
  }
  SUBCASE("I2 along the two atoms is the 2x2 matrix structure over {0,1}") {
    const auto& m2 = symmetric_monoid(2);
    auto iso = corner_iso(symmetric_bias(2), {m2.index_of(PartialInjection::id_on(2, {1})),
                                              m2.index_of(PartialInjection::id_on(2, {2}))});
    CHECK(iso.matrix_side.base.size() == 2);
    CHECK(iso.matrix_side.bias.size() == 7);
  }
  SUBCASE("singleton sequences wrap the corner") {
    const auto& b = symmetric_bias(2);
    auto iso = corner_iso(b, {b.one()});
    CHECK(iso.corner_side.bias.size() == b.size());
    CHECK(iso.matrix_side.bias.size() == b.size());
    for (int x = 0; x < b.size(); ++x)
      CHECK(iso.to_corner[iso.to_matrix[x]] == x);
  }
  SUBCASE("non-homogeneous input is rejected with a witness") {
    const auto& m2 = symmetric_monoid(2);
    const auto& b = symmetric_bias(2);
    int id1 = m2.index_of(PartialInjection::id_on(2, {1}));
    int id12 = m2.index_of(PartialInjection::identity(2));
    try {
      corner_iso(b, {id1, id12});
      FAIL("expected rejection");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("not homogeneous") != std::string::npos);
    }
  }
}

TEST_CASE("unit groups of matrix structures") {
  auto rep = units_of_matrix_bias(2, cyclic_group(2));
  CHECK(rep.unit_elems.size() == 8);
  CHECK(rep.wreath.size() == 8);
  CHECK(rep.isomorphic);
  auto triv3 = units_of_matrix_bias(3, trivial_group());
  CHECK(triv3.unit_elems.size() == 6);
  CHECK(triv3.isomorphic);
  CHECK(group_isomorphic(triv3.wreath, symmetric_group(3)));
  auto one = units_of_matrix_bias(1, symmetric_group(3));
  CHECK(one.unit_elems.size() == 6);
  CHECK(one.isomorphic);
}

TEST_CASE("matrix unit lifting against the identity") {
  const auto& m2 = symmetric_monoid(2);
  const auto& b2 = symmetric_bias(2);
  std::vector<int> phi(b2.size());
  std::iota(phi.begin(), phi.end(), 0);
  auto lift = lift_matrix_units(b2, m2, b2, phi);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(lift.units.at(i, j) ==
            m2.index_of(PartialInjection(2, {{j + 1, i + 1}})));
  for (int t = 0; t < b2.size(); ++t) CHECK(lift.section[t] == t);
}

TEST_CASE("matrix unit lifting through the entrywise collapse") {
  Bias z2 = gz(cyclic_group(2));
  RookBias m_z2 = rook_bias(2, z2);
  RookBias m_tv = rook_bias(2, gz(trivial_group()));
  auto to_tv = lift_hom({0, 1, 1}, m_z2, m_tv);
  auto iso = rook_symmetric_iso(m_tv, symmetric_monoid(2));
  std::vector<int> phi(m_z2.bias.size());
  for (int x = 0; x < m_z2.bias.size(); ++x) phi[x] = iso[to_tv[x]];
  // postconditions checked inside; reaching here is the assertion
  auto lift = lift_matrix_units(m_z2.bias, symmetric_monoid(2), symmetric_bias(2), phi);
  CHECK(lift.units.n == 2);
}

TEST_CASE("matrix unit lifting at order one picks an idempotent preimage") {
  Bias z2 = gz(cyclic_group(2));
  RookBias m1 = rook_bias(1, z2);
  auto iso = rook_symmetric_iso(rook_bias(1, gz(trivial_group())), symmetric_monoid(1));
  auto collapse = lift_hom({0, 1, 1}, m1, rook_bias(1, gz(trivial_group())));
  std::vector<int> phi(m1.bias.size());
  for (int x = 0; x < m1.bias.size(); ++x) phi[x] = iso[collapse[x]];
  auto lift = lift_matrix_units(m1.bias, symmetric_monoid(1), symmetric_bias(1), phi);
  CHECK(m1.bias.idempotent(lift.section[symmetric_bias(1).one()]));
}

TEST_CASE("rook matrix serialization") {
  Bias base = gz(cyclic_group(2));
  RookBias rb = rook_bias(2, base);
  SUBCASE("round trip") {
    for (auto& m : rb.matrices) {
      json j = rook_to_json(m, "Z2^0");
      std::string id;
      RookMatrix back = rook_from_json(j, base, &id);
      CHECK(back == m);
      CHECK(id == "Z2^0");
    }
  }
  SUBCASE("constraint violations are rejected") {
    json j = rook_to_json(singleton(base, 1, 1, 1, 2), "Z2^0");
    j["entries"][0][1] = 1;  // second nonzero entry in row one
    CHECK_THROWS_AS(rook_from_json(j, base), InputError);
  }
  SUBCASE("zero encodes empty cells") {
    json j = rook_to_json(rook_zero(base, 2), "Z2^0");
    for (auto& row : j["entries"])
      for (auto& e : row) CHECK(e.get<int>() == base.zero());
  }
}

TEST_CASE("group matrix lifting") {
  SUBCASE("identity surjection recovers the group") {
    Group z2 = cyclic_group(2);
    RookBias target = rook_bias(2, gz(z2));
    std::vector<int> phi(target.bias.size());
    std::iota(phi.begin(), phi.end(), 0);
    auto lift = lift_group_matrix(target.bias, target, z2, phi);
    CHECK(group_isomorphic(lift.lifted, z2));
    CHECK(is_injective(lift.eta));
    CHECK(lift.eta.size() == target.bias.size());  // eta is onto here
  }
  SUBCASE("quotient of Z4 matrices onto Z2 matrices lifts the full Z4") {
    Group z4 = cyclic_group(4), z2 = cyclic_group(2);
    RookBias src = rook_bias(2, gz(z4));
    RookBias dst = rook_bias(2, gz(z2));
    auto phi = lift_hom({0, 1, 2, 1, 2}, src, dst);
    auto lift = lift_group_matrix(src.bias, dst, z2, phi);
    CHECK(group_isomorphic(lift.lifted, z4));
  }
  SUBCASE("order one is the group-with-zero case") {
    Group z2 = cyclic_group(2);
    RookBias src = rook_bias(1, gz(z2));
    RookBias dst = rook_bias(1, gz(trivial_group()));
    auto phi = lift_hom({0, 1, 1}, src, dst);
    auto lift = lift_group_matrix(src.bias, dst, trivial_group(), phi);
    CHECK(group_isomorphic(lift.lifted, z2));
  }
  SUBCASE("non-cancellative sources are rejected") {
    // a non-factorizable structure: the 3-chain is not even Boolean, so use
    // a bias that fails factorizability instead: none in the library do, so
    // check the precondition path with a valid input and a wrong target base
    Group z2 = cyclic_group(2);
    RookBias target = rook_bias(1, symmetric_bias(2));
    std::vector<int> phi(target.bias.size());
    std::iota(phi.begin(), phi.end(), 0);
    CHECK_THROWS_AS(lift_group_matrix(target.bias, target, z2, phi), InputError);
  }
}
