#include "bis/rook.hpp"

#include <algorithm>
#include <set>

#include "bis/errors.hpp"

namespace bis {

bool rook_valid(const Bias& base, const RookMatrix& m) {
  int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        // row i: ranges pairwise orthogonal
        if (base.mul(base.r(m.at(i, j)), base.r(m.at(i, k))) != base.zero()) return false;
        // column i: domains pairwise orthogonal
        if (base.mul(base.d(m.at(j, i)), base.d(m.at(k, i))) != base.zero()) return false;
      }
  return true;
}

RookMatrix rook_mul(const Bias& base, const RookMatrix& a, const RookMatrix& b) {
  int n = a.n;
  RookMatrix c = rook_zero(base, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int acc = base.zero();
      for (int k = 0; k < n; ++k) acc = base.join(acc, base.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

RookMatrix rook_inv(const Bias& base, const RookMatrix& a) {
  int n = a.n;
  RookMatrix c = rook_zero(base, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = base.inv(a.at(j, i));
  return c;
}

RookMatrix rook_zero(const Bias& base, int n) {
  RookMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n) * n, base.zero());
  return m;
}

RookMatrix singleton(const Bias& base, int x, int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n) throw InputError("singleton: position out of range");
  RookMatrix m = rook_zero(base, n);
  m.at(i - 1, j - 1) = x;
  return m;
}

int RookBias::index_of(const RookMatrix& m) const {
  auto it = index_.find(m.entries);
  if (it == index_.end()) throw InputError("rook matrix not in enumeration");
  return it->second;
}

RookBias rook_bias(int n, const Bias& base, std::uint64_t cap) {
  if (n < 1) throw InputError("rook_bias: order must be positive");
  RookBias rb;
  rb.n = n;
  rb.base = base;

  // enumerate valid matrices cell by cell, row-major
  int cells = n * n;
  RookMatrix cur = rook_zero(base, n);
  std::vector<int> choice(cells, -1);
  auto ok_at = [&](int cell, int x) {
    int i = cell / n, j = cell % n;
    if (x == base.zero()) return true;
    for (int k = 0; k < j; ++k)
      if (base.mul(base.r(cur.at(i, k)), base.r(x)) != base.zero()) return false;
    for (int k = 0; k < i; ++k)
      if (base.mul(base.d(cur.at(k, j)), base.d(x)) != base.zero()) return false;
    return true;
  };
  int depth = 0;
  while (depth >= 0) {
    if (depth == cells) {
      rb.matrices.push_back(cur);
      if (rb.matrices.size() > cap)
        throw ResourceError("rook_bias: enumeration exceeds cap " + std::to_string(cap));
      --depth;
      continue;
    }
    int next = choice[depth] + 1;
    while (next < base.size() && !ok_at(depth, next)) ++next;
    if (next >= base.size()) {
      choice[depth] = -1;
      cur.entries[depth] = base.zero();
      --depth;
      continue;
    }
    choice[depth] = next;
    cur.entries[depth] = next;
    ++depth;
  }
  std::sort(rb.matrices.begin(), rb.matrices.end());
  for (int i = 0; i < static_cast<int>(rb.matrices.size()); ++i)
    rb.index_[rb.matrices[i].entries] = i;

  int total = static_cast<int>(rb.matrices.size());
  if (total > 65535) throw ResourceError("rook_bias: element count exceeds 65535");
  InverseSemigroup s;
  s.names.reserve(total);
  for (auto& m : rb.matrices) {
    std::string nm = "[";
    for (int i = 0; i < n; ++i) {
      if (i) nm += ";";
      for (int j = 0; j < n; ++j) {
        if (j) nm += ",";
        nm += base.sgp.names[m.at(i, j)];
      }
    }
    nm += "]";
    s.names.push_back(nm);
  }
  s.mul_table.resize(static_cast<std::size_t>(total) * total);
  s.inv_table.resize(total);
  for (int x = 0; x < total; ++x) {
    s.inv_table[x] = static_cast<std::uint16_t>(rb.index_of(rook_inv(base, rb.matrices[x])));
    for (int y = 0; y < total; ++y)
      s.mul_table[static_cast<std::size_t>(x) * total + y] =
          static_cast<std::uint16_t>(rb.index_of(rook_mul(base, rb.matrices[x], rb.matrices[y])));
  }
  s.zero = rb.index_of(rook_zero(base, n));
  {
    RookMatrix one = rook_zero(base, n);
    for (int i = 0; i < n; ++i) one.at(i, i) = base.one();
    s.one = rb.index_of(one);
  }

  Bias b;
  b.sgp = std::move(s);
  b.join_table.assign(static_cast<std::size_t>(total) * total, -1);
  b.diff_table.assign(static_cast<std::size_t>(total) * total, -1);

  // idempotents must be exactly the diagonal matrices with idempotent entries
  for (int x = 0; x < total; ++x) {
    bool diag_idem = true;
    for (int i = 0; i < n && diag_idem; ++i)
      for (int j = 0; j < n; ++j) {
        int e = rb.matrices[x].at(i, j);
        if (i != j ? e != base.zero() : !base.idempotent(e)) {
          diag_idem = false;
          break;
        }
      }
    if (b.idempotent(x) != diag_idem)
      throw std::logic_error("rook_bias: idempotent is not diagonal with idempotent entries");
  }

  // joins are entrywise on orthogonal pairs, differences ride on the meet
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      if (b.orthogonal(x, y)) {
        RookMatrix j = rook_zero(base, n);
        for (int c = 0; c < n * n; ++c)
          j.entries[c] = base.join(rb.matrices[x].entries[c], rb.matrices[y].entries[c]);
        b.join_table[static_cast<std::size_t>(x) * total + y] = rb.index_of(j);
      }
      if (b.compatible(x, y)) {
        int m = b.mul(b.mul(x, b.inv(x)), y);  // the meet
        RookMatrix z = rook_zero(base, n);
        for (int c = 0; c < n * n; ++c)
          z.entries[c] = base.diff(rb.matrices[x].entries[c], rb.matrices[m].entries[c]);
        b.diff_table[static_cast<std::size_t>(x) * total + y] = rb.index_of(z);
      }
    }
  rb.bias = std::move(b);
  return rb;
}

std::vector<int> lift_hom(const std::vector<int>& f, const RookBias& src, const RookBias& dst) {
  if (src.n != dst.n) throw InputError("lift_hom: orders differ");
  std::string why;
  if (!is_bias_hom(src.base, dst.base, f, &why))
    throw InputError("lift_hom: base map is not additive: " + why);
  std::vector<int> out(src.bias.size());
  for (int x = 0; x < src.bias.size(); ++x) {
    RookMatrix m = src.matrices[x];
    for (int& e : m.entries) e = f[e];
    out[x] = dst.index_of(m);
  }
  return out;
}

Congruence lift_congruence(const Congruence& alpha, const RookBias& rook) {
  int total = rook.bias.size();
  std::map<std::vector<int>, int> least;
  Congruence c;
  c.class_of.resize(total);
  for (int x = 0; x < total; ++x) {
    std::vector<int> key = rook.matrices[x].entries;
    for (int& e : key) e = alpha.class_of[e];
    auto it = least.try_emplace(key, x).first;
    c.class_of[x] = it->second;
  }
  return c;
}

BlockIso block_iso(int m, int n, const Bias& base, std::uint64_t cap) {
  BlockIso iso;
  iso.flat = rook_bias(m * n, base, cap);
  RookBias inner = rook_bias(m, base, cap);
  iso.nested = rook_bias(n, inner.bias, cap);
  int total = iso.flat.bias.size();
  if (total != iso.nested.bias.size())
    throw std::logic_error("block_iso: cardinalities disagree");
  iso.to_nested.resize(total);
  iso.to_flat.assign(total, -1);
  for (int x = 0; x < total; ++x) {
    const RookMatrix& a = iso.flat.matrices[x];
    RookMatrix b = rook_zero(iso.nested.base, n);
    for (int bi = 0; bi < n; ++bi)
      for (int bj = 0; bj < n; ++bj) {
        RookMatrix cell = rook_zero(base, m);
        for (int oi = 0; oi < m; ++oi)
          for (int oj = 0; oj < m; ++oj) cell.at(oi, oj) = a.at(bi * m + oi, bj * m + oj);
        b.at(bi, bj) = inner.index_of(cell);
      }
    iso.to_nested[x] = iso.nested.index_of(b);
    iso.to_flat[iso.to_nested[x]] = x;
  }
  for (int y = 0; y < total; ++y)
    if (iso.to_flat[y] < 0) throw std::logic_error("block_iso: map is not a bijection");
  std::string why;
  if (!is_bias_hom(iso.flat.bias, iso.nested.bias, iso.to_nested, &why))
    throw std::logic_error("block_iso: map is not a homomorphism: " + why);
  return iso;
}

CornerIso corner_iso(const Bias& s, const std::vector<int>& es, std::uint64_t cap) {
  int k = static_cast<int>(es.size());
  if (k < 1) throw InputError("corner_iso: empty sequence");
  for (int e : es)
    if (!s.idempotent(e)) throw InputError("corner_iso: " + s.sgp.names[e] + " not idempotent");
  GreenRelations green = green_relations(s.sgp);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (s.mul(es[i], es[j]) != s.zero())
        throw InputError("corner_iso: not homogeneous, " + s.sgp.names[es[i]] + " and " +
                         s.sgp.names[es[j]] + " are not orthogonal");
      if (green.d_class[es[i]] != green.d_class[es[j]])
        throw InputError("corner_iso: not homogeneous, " + s.sgp.names[es[i]] + " and " +
                         s.sgp.names[es[j]] + " are not D-equivalent");
    }
  CornerIso out;
  out.witnesses.resize(k);
  out.witnesses[0] = es[0];
  for (int i = 1; i < k; ++i) {
    auto w = green.witness(s.sgp, es[0], es[i]);
    if (!w) throw std::logic_error("corner_iso: missing D-witness");
    out.witnesses[i] = *w;
  }
  int e = s.zero();
  for (int ei : es) e = s.join(e, ei);
  out.corner_side = corner(s, e);
  SubBias c1 = corner(s, es[0]);
  out.matrix_side = rook_bias(k, c1.bias, cap);

  int total = out.corner_side.bias.size();
  if (total != out.matrix_side.bias.size())
    throw std::logic_error("corner_iso: cardinalities disagree");
  out.to_matrix.resize(total);
  out.to_corner.assign(total, -1);
  for (int u = 0; u < total; ++u) {
    int x = out.corner_side.back[u];
    RookMatrix m = rook_zero(c1.bias, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int v = s.mul(s.mul(s.inv(out.witnesses[i]), x), out.witnesses[j]);
        int w = c1.fwd[v];
        if (w < 0) throw std::logic_error("corner_iso: entry escapes the corner");
        m.at(i, j) = w;
      }
    out.to_matrix[u] = out.matrix_side.index_of(m);
    out.to_corner[out.to_matrix[u]] = u;
  }
  for (int y = 0; y < total; ++y)
    if (out.to_corner[y] < 0) throw std::logic_error("corner_iso: map is not a bijection");
  // round trip through the explicit inverse: matrix -> join of c_i x_ij c_j^-1
  for (int y = 0; y < total; ++y) {
    const RookMatrix& m = out.matrix_side.matrices[y];
    std::vector<int> parts;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int entry = c1.back[m.at(i, j)];
        if (entry == s.zero()) continue;
        parts.push_back(s.mul(s.mul(out.witnesses[i], entry), s.inv(out.witnesses[j])));
      }
    int joined = s.zero();
    for (int p : parts) joined = s.join(joined, p);
    if (out.corner_side.fwd[joined] != out.to_corner[y])
      throw std::logic_error("corner_iso: round trip fails");
  }
  std::string why;
  if (!is_bias_hom(out.corner_side.bias, out.matrix_side.bias, out.to_matrix, &why))
    throw std::logic_error("corner_iso: map is not a homomorphism: " + why);
  return out;
}

MatrixUnitSystem lift_units_through(const Bias& s, const Bias& target,
                                    const std::vector<int>& phi,
                                    const std::vector<int>& target_units, int n) {
  std::string why;
  if (!is_bias_hom(s, target, phi, &why))
    throw InputError("lift_units_through: not a homomorphism: " + why);
  if (!is_surjective(phi, target.size()))
    throw InputError("lift_units_through: map is not surjective");
  auto tu = [&](int i, int j) { return target_units[static_cast<std::size_t>(i) * n + j]; };

  std::vector<int> a1(n, -1);
  for (int x = 0; x < s.size(); ++x)
    if (phi[x] == tu(0, 0) && s.idempotent(x)) {
      a1[0] = x;
      break;
    }
  if (a1[0] < 0) throw std::logic_error("lift_units_through: no idempotent preimage");
  for (int i = 1; i < n; ++i)
    for (int x = 0; x < s.size(); ++x)
      if (phi[x] == tu(0, i)) {
        a1[i] = x;
        break;
      }
  // make the domains pairwise orthogonal, working left to right
  for (int i = 1; i < n; ++i) {
    int u = s.zero();
    for (int j = 0; j < i; ++j) u = s.join(u, s.d(a1[j]));
    a1[i] = s.mul(a1[i], s.diff(s.d(a1[i]), u));
  }
  int b11 = s.r(a1[0]);
  for (int j = 0; j < n; ++j) b11 = s.mul(b11, s.r(a1[j]));
  std::vector<int> b1(n), bdiag(n);
  for (int i = 0; i < n; ++i) {
    bdiag[i] = s.mul(s.mul(s.inv(a1[i]), b11), a1[i]);
    b1[i] = s.mul(b11, a1[i]);
  }
  MatrixUnitSystem units;
  units.n = n;
  units.elems.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      units.elems[static_cast<std::size_t>(i) * n + j] = s.mul(s.inv(b1[i]), b1[j]);
  // postconditions
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (phi[units.at(i, j)] != tu(i, j))
        throw std::logic_error("lift_units_through: projection misses the target unit");
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          int prod = s.mul(units.at(i, j), units.at(k, l));
          int expect = j == k ? units.at(i, l) : s.zero();
          if (prod != expect)
            throw std::logic_error("lift_units_through: matrix-unit relation fails");
        }
    }
  return units;
}

SymmetricLift lift_matrix_units(const Bias& s, const SymmetricInverseMonoid& target,
                                const Bias& target_bias, const std::vector<int>& phi) {
  int n = target.elements.empty() ? 0 : target.elements[0].n;
  std::vector<int> tu(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tu[static_cast<std::size_t>(i) * n + j] =
          target.index_of(PartialInjection(n, {{j + 1, i + 1}}));
  SymmetricLift lift;
  lift.units = lift_units_through(s, target_bias, phi, tu, n);
  lift.section.resize(target_bias.size());
  for (int t = 0; t < target_bias.size(); ++t) {
    const PartialInjection& p = target.elements[t];
    int acc = s.zero();
    for (auto& [src, dst] : p.map) acc = s.join(acc, lift.units.at(dst - 1, src - 1));
    lift.section[t] = acc;
  }
  std::string why;
  if (!is_bias_hom(target_bias, s, lift.section, &why))
    throw std::logic_error("lift_matrix_units: section is not additive: " + why);
  for (int t = 0; t < target_bias.size(); ++t)
    if (phi[lift.section[t]] != t)
      throw std::logic_error("lift_matrix_units: phi o psi is not the identity");
  return lift;
}

GroupMatrixLift lift_group_matrix(const Bias& s, const RookBias& target, const Group& g,
                                  const std::vector<int>& phi, std::uint64_t cap) {
  StructuralPredicates pred = structural_predicates(s);
  if (!pred.d_cancellative)
    throw InputError("lift_group_matrix: source is not D-cancellative");
  if (target.base.size() != g.size() + 1 || target.base.zero() != 0)
    throw InputError("lift_group_matrix: target base must be the group with zero adjoined");
  int n = target.n;
  std::vector<int> tu(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tu[static_cast<std::size_t>(i) * n + j] =
          target.index_of(singleton(target.base, target.base.one(), i + 1, j + 1, n));
  MatrixUnitSystem a = lift_units_through(s, target.bias, phi, tu, n);

  GroupMatrixLift out;
  int a11 = a.at(0, 0);
  for (int x = 0; x < s.size(); ++x)
    if (s.d(x) == a11 && s.r(x) == a11) out.lifted_elems.push_back(x);
  int m = static_cast<int>(out.lifted_elems.size());
  std::vector<int> pos(s.size(), -1);
  for (int i = 0; i < m; ++i) pos[out.lifted_elems[i]] = i;
  out.lifted.names.reserve(m);
  for (int x : out.lifted_elems) out.lifted.names.push_back(s.sgp.names[x]);
  out.lifted.mul_table.resize(static_cast<std::size_t>(m) * m);
  out.lifted.inv_table.resize(m);
  for (int i = 0; i < m; ++i) {
    int xi = out.lifted_elems[i];
    int invi = pos[s.inv(xi)];
    if (invi < 0) throw std::logic_error("lift_group_matrix: cover not closed under inverse");
    out.lifted.inv_table[i] = static_cast<std::uint16_t>(invi);
    for (int j = 0; j < m; ++j) {
      int p = pos[s.mul(xi, out.lifted_elems[j])];
      if (p < 0) throw std::logic_error("lift_group_matrix: cover not closed under product");
      out.lifted.mul_table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(p);
    }
  }
  out.lifted.id = pos[a11];
  validate_group(out.lifted);

  // psi reads the (1,1) entry of phi(x)
  out.psi.resize(m);
  std::vector<bool> hit(g.size(), false);
  for (int i = 0; i < m; ++i) {
    const RookMatrix& mat = target.matrices[phi[out.lifted_elems[i]]];
    int entry = mat.at(0, 0);
    if (entry == target.base.zero())
      throw std::logic_error("lift_group_matrix: cover element projects to zero corner");
    out.psi[i] = entry - 1;  // group-with-zero puts the group at indices 1..|G|
    hit[out.psi[i]] = true;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (out.psi[out.lifted.mul(i, j)] != g.mul(out.psi[i], out.psi[j]))
        throw std::logic_error("lift_group_matrix: psi is not a homomorphism");
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw std::logic_error("lift_group_matrix: psi is not surjective");

  out.lifted_rook = rook_bias(n, boolean_closure(group_with_zero(out.lifted)), cap);
  out.eta.resize(out.lifted_rook.bias.size());
  for (int x = 0; x < out.lifted_rook.bias.size(); ++x) {
    const RookMatrix& mat = out.lifted_rook.matrices[x];
    int acc = s.zero();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int e = mat.at(i, j);
        if (e == 0) continue;  // zero of the cover-with-zero base
        int lifted = out.lifted_elems[e - 1];
        acc = s.join(acc, s.mul(s.mul(a.at(i, 0), lifted), a.at(0, j)));
      }
    out.eta[x] = acc;
  }
  std::string why;
  if (!is_bias_hom(out.lifted_rook.bias, s, out.eta, &why))
    throw std::logic_error("lift_group_matrix: eta is not additive: " + why);
  if (!is_injective(out.eta)) throw std::logic_error("lift_group_matrix: eta is not injective");
  // commuting triangle: phi(eta(x)) equals the entrywise psi image of x
  for (int x = 0; x < out.lifted_rook.bias.size(); ++x) {
    RookMatrix expect = rook_zero(target.base, n);
    const RookMatrix& mat = out.lifted_rook.matrices[x];
    for (int c = 0; c < n * n; ++c)
      expect.entries[c] = mat.entries[c] == 0 ? 0 : out.psi[mat.entries[c] - 1] + 1;
    if (phi[out.eta[x]] != target.index_of(expect))
      throw std::logic_error("lift_group_matrix: triangle does not commute");
  }
  return out;
}

CongruenceCountCheck congruence_count_check(int n, const Group& g, std::uint64_t cap) {
  CongruenceCountCheck check;
  check.normal_subgroups = normal_subgroups(g).size();
  RookBias rb = rook_bias(n, boolean_closure(group_with_zero(g)), cap);
  check.congruences = congruence_lattice(rb.bias, rb.bias.size()).all.size();
  check.consistent = check.congruences == check.normal_subgroups + 1;
  return check;
}

UnitGroupReport units_of_matrix_bias(int n, const Group& g, std::uint64_t cap) {
  UnitGroupReport rep;
  Bias base = boolean_closure(group_with_zero(g));
  rep.rook = rook_bias(n, base, cap);
  rep.unit_elems = unit_group_elements(rep.rook.bias);
  rep.wreath = wreath_product(g, n, cap);
  rep.isomorphic = static_cast<int>(rep.unit_elems.size()) == rep.wreath.size();
  if (!rep.isomorphic) return rep;
  rep.wreath_to_matrix.resize(rep.wreath.size());
  for (int wi = 0; wi < rep.wreath.size(); ++wi) {
    auto we = wreath_decode(g, n, wi);
    RookMatrix mat = rook_zero(base, n);
    for (int j = 0; j < n; ++j) mat.at(we.perm[j], j) = we.tuple[we.perm[j]] + 1;
    rep.wreath_to_matrix[wi] = rep.rook.index_of(mat);
  }
  std::set<int> image(rep.wreath_to_matrix.begin(), rep.wreath_to_matrix.end());
  rep.isomorphic = image.size() == rep.wreath_to_matrix.size();
  for (int u : rep.unit_elems)
    if (!image.count(u)) rep.isomorphic = false;
  for (int a = 0; a < rep.wreath.size() && rep.isomorphic; ++a)
    for (int b = 0; b < rep.wreath.size(); ++b)
      if (rep.wreath_to_matrix[rep.wreath.mul(a, b)] !=
          rep.rook.bias.mul(rep.wreath_to_matrix[a], rep.wreath_to_matrix[b])) {
        rep.isomorphic = false;
        break;
      }
  return rep;
}

std::vector<int> rook_symmetric_iso(const RookBias& rook, const SymmetricInverseMonoid& sym) {
  if (rook.base.size() != 2)
    throw InputError("rook_symmetric_iso: base must be the 2-element bias");
  int n = rook.n;
  std::vector<int> map(rook.bias.size());
  for (int x = 0; x < rook.bias.size(); ++x) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rook.matrices[x].at(i, j) != rook.base.zero()) pairs.emplace_back(j + 1, i + 1);
    map[x] = sym.index_of(PartialInjection(n, pairs));
  }
  return map;
}

}  // namespace bis
