#include "bis/inverse_semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bis/errors.hpp"
#include "bis/util.hpp"

namespace bis {

std::vector<int> InverseSemigroup::idempotents() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (idempotent(x)) out.push_back(x);
  return out;
}

void InverseSemigroup::detect_constants() {
  int n = size();
  int found_zero = -1, found_one = -1;
  for (int z = 0; z < n; ++z) {
    bool absorbs = true;
    for (int x = 0; x < n && absorbs; ++x)
      if (mul(z, x) != z || mul(x, z) != z) absorbs = false;
    if (absorbs) {
      found_zero = z;
      break;
    }
  }
  for (int e = 0; e < n; ++e) {
    bool unit = true;
    for (int x = 0; x < n && unit; ++x)
      if (mul(e, x) != x || mul(x, e) != x) unit = false;
    if (unit) {
      found_one = e;
      break;
    }
  }
  if (zero >= 0 && zero != found_zero)
    throw InputError("declared zero is not absorbing");
  if (one >= 0 && one != found_one)
    throw InputError("declared one is not a two-sided identity");
  zero = found_zero;
  one = found_one;
}

Diagnostic verify_inverse_semigroup(const InverseSemigroup& s) {
  Diagnostic diag;
  int n = s.size();
  if (n == 0) return {false, "empty carrier", {}};
  if (static_cast<int>(s.mul_table.size()) != n * n ||
      static_cast<int>(s.inv_table.size()) != n)
    return {false, "table sizes do not match carrier", {}};
  for (auto v : s.mul_table)
    if (v >= n) return {false, "multiplication entry out of range", {}};
  for (auto v : s.inv_table)
    if (v >= n) return {false, "inversion entry out of range", {}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z)))
          return {false, "associativity fails", {x, y, z}};
  for (int x = 0; x < n; ++x) {
    if (s.mul(s.mul(x, s.inv(x)), x) != x) return {false, "x x^-1 x = x fails", {x}};
    if (s.mul(s.mul(s.inv(x), x), s.inv(x)) != s.inv(x))
      return {false, "x^-1 x x^-1 = x^-1 fails", {x}};
  }
  auto idem = s.idempotents();
  for (int a : idem)
    for (int b : idem)
      if (s.mul(a, b) != s.mul(b, a)) return {false, "idempotents do not commute", {a, b}};
  if (s.zero >= 0)
    for (int x = 0; x < n; ++x)
      if (s.mul(s.zero, x) != s.zero || s.mul(x, s.zero) != s.zero)
        return {false, "declared zero is not absorbing", {x}};
  if (s.one >= 0)
    for (int x = 0; x < n; ++x)
      if (s.mul(s.one, x) != x || s.mul(x, s.one) != x)
        return {false, "declared one is not an identity", {x}};
  return diag;
}

std::optional<int> GreenRelations::witness(const InverseSemigroup& s, int a, int b) const {
  (void)s;
  int w = witness_table[static_cast<std::size_t>(a) * n + b];
  if (w < 0) return std::nullopt;
  return w;
}

GreenRelations green_relations(const InverseSemigroup& s) {
  GreenRelations g;
  int n = s.size();
  g.n = n;
  g.l_class.assign(n, -1);
  g.r_class.assign(n, -1);
  g.d_class.assign(n, -1);
  g.witness_table.assign(static_cast<std::size_t>(n) * n, -1);
  std::map<int, int> by_d, by_r;
  for (int x = 0; x < n; ++x) {
    int dx = s.d(x), rx = s.r(x);
    g.l_class[x] = by_d.try_emplace(dx, static_cast<int>(by_d.size())).first->second;
    g.r_class[x] = by_r.try_emplace(rx, static_cast<int>(by_r.size())).first->second;
    if (g.witness_table[static_cast<std::size_t>(dx) * n + rx] < 0)
      g.witness_table[static_cast<std::size_t>(dx) * n + rx] = x;
  }
  // D = L o R: join the partitions by union-find over elements
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::map<int, int> l_rep, r_rep;
  for (int x = 0; x < n; ++x) {
    auto [itl, nl] = l_rep.try_emplace(g.l_class[x], x);
    if (!nl) uf[find(x)] = find(itl->second);
    auto [itr, nr] = r_rep.try_emplace(g.r_class[x], x);
    if (!nr) uf[find(x)] = find(itr->second);
  }
  std::map<int, int> d_ids;
  for (int x = 0; x < n; ++x) {
    int root = find(x);
    auto it = d_ids.try_emplace(root, static_cast<int>(d_ids.size())).first;
    g.d_class[x] = it->second;
  }
  return g;
}

std::vector<PartialInjection> vagner_preston(const InverseSemigroup& s) {
  int n = s.size();
  std::vector<PartialInjection> rho(n);
  for (int z = 0; z < n; ++z) {
    PartialInjection p;
    p.n = n;
    int dz = s.d(z);
    for (int t = 0; t < n; ++t) {
      // t ranges over d(z)S = { x : r(x) <= d(z) } = { dz * u }
      if (s.mul(dz, t) == t) p.map.emplace_back(t + 1, s.mul(z, t) + 1);
    }
    std::sort(p.map.begin(), p.map.end());
    validate(p);
    rho[z] = std::move(p);
  }
  // injectivity and multiplicativity always hold over a valid table; check
  // them so a corrupted one cannot slip through
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rho[a] == rho[b]) throw InputError("vagner_preston: representation not injective");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (compose(rho[a], rho[b]) != rho[s.mul(a, b)])
        throw InputError("vagner_preston: representation not multiplicative");
  return rho;
}

int SymmetricInverseMonoid::index_of(const PartialInjection& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p,
                             [](const PartialInjection& a, const PartialInjection& b) {
                               if (a.rank() != b.rank()) return a.rank() < b.rank();
                               return a < b;
                             });
  if (it == elements.end() || !(*it == p)) throw InputError("partial injection not in monoid");
  return static_cast<int>(it - elements.begin());
}

SymmetricInverseMonoid symmetric_inverse_monoid(int n, int cap) {
  if (n < 1) throw InputError("symmetric_inverse_monoid: n must be positive");
  if (n > cap)
    throw ResourceError("symmetric_inverse_monoid: n exceeds cap " + std::to_string(cap));
  SymmetricInverseMonoid m;
  // rank ascending, then domain lexicographic, then target tuple lexicographic
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> domains;
    {
      // k-subsets of {1..n} in lexicographic order
      std::vector<int> c(k);
      std::iota(c.begin(), c.end(), 1);
      while (true) {
        domains.push_back(c);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      }
    }
    for (auto& dset : domains) {
      // injective target tuples in lexicographic order
      std::vector<int> tuple(k, 0);
      std::vector<bool> used(n + 1, false);
      int depth = 0;
      if (k == 0) {
        m.elements.push_back(PartialInjection::empty(n));
        continue;
      }
      while (depth >= 0) {
        if (depth == k) {
          std::vector<std::pair<int, int>> pairs;
          for (int i = 0; i < k; ++i) pairs.emplace_back(dset[i], tuple[i]);
          m.elements.emplace_back(n, pairs);
          --depth;
          used[tuple[depth]] = false;
          ++tuple[depth];
          continue;
        }
        if (tuple[depth] == 0) tuple[depth] = 1;
        while (tuple[depth] <= n && used[tuple[depth]]) ++tuple[depth];
        if (tuple[depth] > n) {
          tuple[depth] = 0;
          --depth;
          if (depth >= 0) {
            used[tuple[depth]] = false;
            ++tuple[depth];
          }
          continue;
        }
        used[tuple[depth]] = true;
        ++depth;
      }
    }
  }
  std::sort(m.elements.begin(), m.elements.end(),
            [](const PartialInjection& a, const PartialInjection& b) {
              if (a.rank() != b.rank()) return a.rank() < b.rank();
              return a < b;
            });
  int total = static_cast<int>(m.elements.size());
  if (total > 65535) throw ResourceError("symmetric_inverse_monoid: element count exceeds 65535");
  m.sgp.names.reserve(total);
  for (auto& p : m.elements) m.sgp.names.push_back(p.to_string());
  m.sgp.mul_table.resize(static_cast<std::size_t>(total) * total);
  m.sgp.inv_table.resize(total);
  for (int x = 0; x < total; ++x) {
    m.sgp.inv_table[x] = static_cast<std::uint16_t>(m.index_of(m.elements[x].inverse()));
    for (int y = 0; y < total; ++y)
      m.sgp.mul_table[static_cast<std::size_t>(x) * total + y] =
          static_cast<std::uint16_t>(m.index_of(compose(m.elements[x], m.elements[y])));
  }
  m.sgp.zero = 0;
  m.sgp.one = m.index_of(PartialInjection::identity(n));
  return m;
}

InverseSemigroup group_with_zero(const Group& g) {
  InverseSemigroup s;
  int n = g.size() + 1;
  s.names.push_back("0");
  for (auto& nm : g.names) s.names.push_back(nm);
  s.mul_table.assign(static_cast<std::size_t>(n) * n, 0);
  s.inv_table.assign(n, 0);
  for (int x = 0; x < g.size(); ++x) {
    s.inv_table[x + 1] = static_cast<std::uint16_t>(g.inv(x) + 1);
    for (int y = 0; y < g.size(); ++y)
      s.mul_table[static_cast<std::size_t>(x + 1) * n + (y + 1)] =
          static_cast<std::uint16_t>(g.mul(x, y) + 1);
  }
  s.zero = 0;
  s.one = g.id + 1;
  return s;
}

InverseSemigroup product_semigroup(const InverseSemigroup& a, const InverseSemigroup& b) {
  InverseSemigroup s;
  int na = a.size(), nb = b.size(), n = na * nb;
  if (n > 65535) throw ResourceError("product_semigroup: element count exceeds 65535");
  auto enc = [nb](int i, int j) { return i * nb + j; };
  s.names.reserve(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) s.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
  s.mul_table.resize(static_cast<std::size_t>(n) * n);
  s.inv_table.resize(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      int x = enc(i, j);
      s.inv_table[x] = static_cast<std::uint16_t>(enc(a.inv(i), b.inv(j)));
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          s.mul_table[static_cast<std::size_t>(x) * n + enc(k, l)] =
              static_cast<std::uint16_t>(enc(a.mul(i, k), b.mul(j, l)));
    }
  if (a.zero >= 0 && b.zero >= 0) s.zero = enc(a.zero, b.zero);
  if (a.one >= 0 && b.one >= 0) s.one = enc(a.one, b.one);
  return s;
}

InverseSemigroup relabel(const InverseSemigroup& s, const std::vector<int>& perm) {
  int n = s.size();
  if (static_cast<int>(perm.size()) != n) throw InputError("relabel: permutation size mismatch");
  InverseSemigroup t;
  t.names.resize(n);
  t.mul_table.resize(static_cast<std::size_t>(n) * n);
  t.inv_table.resize(n);
  for (int x = 0; x < n; ++x) {
    t.names[perm[x]] = s.names[x];
    t.inv_table[perm[x]] = static_cast<std::uint16_t>(perm[s.inv(x)]);
    for (int y = 0; y < n; ++y)
      t.mul_table[static_cast<std::size_t>(perm[x]) * n + perm[y]] =
          static_cast<std::uint16_t>(perm[s.mul(x, y)]);
  }
  t.zero = s.zero >= 0 ? perm[s.zero] : -1;
  t.one = s.one >= 0 ? perm[s.one] : -1;
  return t;
}

}  // namespace bis
