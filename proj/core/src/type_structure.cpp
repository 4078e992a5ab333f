#include "bis/type_structure.hpp"

#include <algorithm>
#include <set>

#include "bis/errors.hpp"

namespace bis {

namespace {

std::vector<int> idempotent_atoms(const Bias& s) {
  auto idem = s.idempotents();
  std::vector<int> atoms;
  for (int e : idem) {
    if (e == s.zero()) continue;
    bool minimal = true;
    for (int f : idem) {
      if (f == s.zero() || f == e) continue;
      if (s.leq(f, e)) {
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(e);
  }
  return atoms;
}

}  // namespace

Decomposition decompose(const Bias& s, std::uint64_t cap) {
  if (s.one() < 0) throw InputError("decompose: input is not a monoid");
  Decomposition out;
  auto atoms = idempotent_atoms(s);
  if (atoms.empty()) {
    // the one-element structure is the empty product
    out.product = s;
    out.to_product.assign(1, 0);
    out.from_product.assign(1, 0);
    out.iso_checked = true;
    return out;
  }
  GreenRelations green = green_relations(s.sgp);

  // group atoms by their D-class
  std::map<int, std::vector<int>> by_class;
  for (int a : atoms) by_class[green.d_class[a]].push_back(a);
  std::vector<std::vector<int>> atom_blocks;
  for (auto& [cls, blk] : by_class) atom_blocks.push_back(blk);
  std::sort(atom_blocks.begin(), atom_blocks.end());

  // central idempotents e_a = join of one block each; together they sum to 1
  std::vector<int> centrals;
  for (auto& blk : atom_blocks) {
    int e = s.zero();
    for (int a : blk) e = s.join(e, a);
    centrals.push_back(e);
  }
  int total = s.zero();
  for (int e : centrals) total = s.join(total, e);
  if (total != s.one()) throw InputError("decompose: atoms do not cover the unit");
  for (int e : centrals)
    for (int x = 0; x < s.size(); ++x)
      if (s.mul(e, x) != s.mul(x, e))
        throw std::logic_error("decompose: block idempotent is not central");

  // factor isomorphisms via the corner decomposition along each block
  std::vector<CornerIso> corners;
  std::vector<Bias> factor_biases;
  for (std::size_t f = 0; f < atom_blocks.size(); ++f) {
    CornerIso ci = corner_iso(s, atom_blocks[f], cap);
    // the corner over one atom must be a group with zero
    const Bias& c1 = ci.matrix_side.base;
    Decomposition::Factor factor;
    factor.n = static_cast<int>(atom_blocks[f].size());
    int m = c1.size() - 1;
    std::vector<int> nonzero;
    for (int x = 0; x < c1.size(); ++x)
      if (x != c1.zero()) nonzero.push_back(x);
    factor.group.names.reserve(m);
    for (int x : nonzero) factor.group.names.push_back(c1.sgp.names[x]);
    std::vector<int> pos(c1.size(), -1);
    for (int i = 0; i < m; ++i) pos[nonzero[i]] = i;
    factor.group.mul_table.resize(static_cast<std::size_t>(m) * m);
    factor.group.inv_table.resize(m);
    for (int i = 0; i < m; ++i) {
      int ii = pos[c1.inv(nonzero[i])];
      if (ii < 0) throw InputError("decompose: corner is not a group with zero");
      factor.group.inv_table[i] = static_cast<std::uint16_t>(ii);
      for (int j = 0; j < m; ++j) {
        int p = pos[c1.mul(nonzero[i], nonzero[j])];
        if (p < 0) throw InputError("decompose: corner is not a group with zero");
        factor.group.mul_table[static_cast<std::size_t>(i) * m + j] =
            static_cast<std::uint16_t>(p);
      }
    }
    factor.group.id = pos[c1.one()];
    validate_group(factor.group);
    out.factors.push_back(factor);

    // rebuild the factor as matrices over the freshly extracted group
    Bias gz = boolean_closure(group_with_zero(factor.group));
    RookBias reference = rook_bias(factor.n, gz, cap);
    // identify the corner-matrix bias with the reference by renaming entries
    // (corner entries map to the group with zero by position)
    std::vector<int> entry_map(c1.size());
    entry_map[c1.zero()] = 0;
    for (int i = 0; i < m; ++i) entry_map[nonzero[i]] = i + 1;
    std::vector<int>& final_map = ci.to_matrix;
    for (int& v : final_map) {
      RookMatrix mm = ci.matrix_side.matrices[v];
      for (int& e : mm.entries) e = entry_map[e];
      v = reference.index_of(mm);
    }
    corners.push_back(std::move(ci));
    factor_biases.push_back(reference.bias);
  }

  // assemble the product bias and the two-way maps
  out.product = factor_biases[0];
  for (std::size_t f = 1; f < factor_biases.size(); ++f)
    out.product = product_bias(out.product, factor_biases[f]);
  out.to_product.resize(s.size());
  std::vector<int> sizes;
  for (auto& fb : factor_biases) sizes.push_back(fb.size());
  for (int x = 0; x < s.size(); ++x) {
    int code = 0;
    for (std::size_t f = 0; f < corners.size(); ++f) {
      int e = s.zero();
      for (int a : atom_blocks[f]) e = s.join(e, a);
      int piece = s.mul(s.mul(e, x), e);
      int idx = corners[f].corner_side.fwd[piece];
      if (idx < 0) throw std::logic_error("decompose: projection escapes the corner");
      code = code * sizes[f] + corners[f].to_matrix[idx];
    }
    out.to_product[x] = code;
  }
  if (out.product.size() != s.size()) throw std::logic_error("decompose: size mismatch");
  out.from_product.assign(s.size(), -1);
  for (int x = 0; x < s.size(); ++x) {
    if (out.from_product[out.to_product[x]] >= 0)
      throw std::logic_error("decompose: map is not injective");
    out.from_product[out.to_product[x]] = x;
  }
  std::string why;
  if (!is_bias_hom(s, out.product, out.to_product, &why))
    throw std::logic_error("decompose: map is not a homomorphism: " + why);
  out.iso_checked = true;
  return out;
}

TypeMonoidDescriptor type_monoid(const Bias& s, std::uint64_t cap) {
  Decomposition dec = decompose(s, cap);
  TypeMonoidDescriptor t;
  t.factor_count = static_cast<int>(dec.factors.size());
  for (auto& f : dec.factors) t.unit_vector.push_back(f.n);
  t.idempotents = s.idempotents();

  auto atoms = idempotent_atoms(s);
  GreenRelations green = green_relations(s.sgp);
  std::map<int, int> atom_factor;  // d-class id -> factor position
  {
    std::map<int, std::vector<int>> by_class;
    for (int a : atoms) by_class[green.d_class[a]].push_back(a);
    std::vector<std::vector<int>> blocks;
    for (auto& [cls, blk] : by_class) blocks.push_back(blk);
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t f = 0; f < blocks.size(); ++f)
      atom_factor[green.d_class[blocks[f][0]]] = static_cast<int>(f);
  }
  for (int e : t.idempotents) {
    std::vector<int> vec(t.factor_count, 0);
    for (int a : atoms)
      if (s.leq(a, e)) ++vec[atom_factor.at(green.d_class[a])];
    t.typ_map[e] = vec;
  }
  // typ is additive on orthogonal pairs and detects D-equivalence
  for (int a : t.idempotents)
    for (int b : t.idempotents) {
      if (s.orthogonal(a, b)) {
        auto& va = t.typ_map.at(a);
        auto& vb = t.typ_map.at(b);
        auto& vj = t.typ_map.at(s.join(a, b));
        for (int f = 0; f < t.factor_count; ++f)
          if (vj[f] != va[f] + vb[f])
            throw std::logic_error("type_monoid: typ is not additive");
      }
      bool same_typ = t.typ_map.at(a) == t.typ_map.at(b);
      bool d_equiv = green.d_class[a] == green.d_class[b];
      if (same_typ != d_equiv)
        throw std::logic_error("type_monoid: typ does not match D-equivalence");
    }
  return t;
}

int element_index(const Bias& s, int x) {
  if (x == s.zero()) return 0;
  int cur = x;
  for (int n = 1; n <= s.size() + 1; ++n) {
    if (s.d(cur) == s.r(cur)) return n;
    cur = s.mul(cur, x);
  }
  return -1;
}

int bias_index(const Bias& s) {
  int best = 0;
  for (int x = 0; x < s.size(); ++x) {
    int i = element_index(s, x);
    if (i < 0) throw std::logic_error("bias_index: unbounded element index in a finite bias");
    best = std::max(best, i);
  }
  return best;
}

IndexReport index_consistency(const Bias& s, std::uint64_t cap) {
  IndexReport rep;
  rep.bias_side = bias_index(s);
  TypeMonoidDescriptor t = type_monoid(s, cap);
  for (auto& [e, vec] : t.typ_map)
    for (int c : vec) rep.monoid_side = std::max(rep.monoid_side, c);
  rep.consistent = rep.bias_side == rep.monoid_side;
  return rep;
}

PrimenessReport primeness_and_sdi(const Bias& s, int congruence_cap, std::uint64_t cap) {
  PrimenessReport rep;
  TypeMonoidDescriptor t = type_monoid(s, cap);
  rep.factor_count = t.factor_count;
  rep.type_monoid_prime = t.factor_count == 1;
  CongruenceLattice lat = congruence_lattice(s, congruence_cap);
  rep.finitely_subdirectly_irreducible = lat.finitely_subdirectly_irreducible;
  rep.consistent = !rep.finitely_subdirectly_irreducible || rep.type_monoid_prime;
  return rep;
}

}  // namespace bis
