#include "bis/bias.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "bis/errors.hpp"
#include "bis/util.hpp"

namespace bis {

int Bias::join(int x, int y) const {
  int j = join_table[static_cast<std::size_t>(x) * size() + y];
  if (j < 0)
    throw InputError("join undefined: " + sgp.names[x] + " and " + sgp.names[y] +
                     " are not orthogonal");
  return j;
}

int Bias::join_all(const std::vector<int>& xs) const {
  int acc = zero();
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int Bias::diff(int x, int y) const {
  int v = diff_table[static_cast<std::size_t>(x) * size() + y];
  if (v < 0)
    throw InputError("difference undefined: " + sgp.names[x] + " and " + sgp.names[y] +
                     " are not compatible");
  return v;
}

int Bias::skew_diff(int x, int y) const {
  int left = diff(r(x), r(y));
  int right = diff(d(x), d(y));
  return mul(mul(left, x), right);
}

int Bias::skew_add(int x, int y) const { return join(skew_diff(x, y), y); }

namespace {

// least upper bound of x, y in the natural order, or -1
int least_upper_bound(const InverseSemigroup& s, int x, int y) {
  int best = -1;
  for (int z = 0; z < s.size(); ++z) {
    if (!s.leq(x, z) || !s.leq(y, z)) continue;
    if (best < 0 || s.leq(z, best)) best = z;
  }
  if (best < 0) return -1;
  // confirm the minimum is below every upper bound
  for (int z = 0; z < s.size(); ++z)
    if (s.leq(x, z) && s.leq(y, z) && !s.leq(best, z)) return -1;
  return best;
}

}  // namespace

BooleanAnalysis analyze_boolean(const InverseSemigroup& input) {
  BooleanAnalysis res;
  InverseSemigroup s = input;
  s.detect_constants();
  if (s.zero < 0) {
    res.reason = "no zero element";
    return res;
  }
  int n = s.size();
  auto idem = s.idempotents();

  // the idempotent order must be a lattice ...
  std::map<std::pair<int, int>, int> idem_join;
  for (int a : idem)
    for (int b : idem) {
      int j = least_upper_bound(s, a, b);
      if (j < 0) {
        res.reason = "idempotent lattice has no join";
        res.witness = {a, b};
        return res;
      }
      idem_join[{a, b}] = j;
    }
  int top = idem[0];
  for (int a : idem) top = idem_join.at({top, a});
  // ... distributive ...
  for (int a : idem)
    for (int b : idem)
      for (int c : idem) {
        int lhs = s.mul(a, idem_join.at({b, c}));
        int rhs = idem_join.at({s.mul(a, b), s.mul(a, c)});
        if (lhs != rhs) {
          res.reason = "idempotent lattice not distributive";
          res.witness = {a, b, c};
          return res;
        }
      }
  // ... and complemented
  for (int a : idem) {
    bool found = false;
    for (int b : idem)
      if (s.mul(a, b) == s.zero && idem_join.at({a, b}) == top) {
        found = true;
        break;
      }
    if (!found) {
      res.reason = "idempotent has no complement";
      res.witness = {a};
      return res;
    }
  }

  Bias b;
  b.sgp = s;
  b.join_table.assign(static_cast<std::size_t>(n) * n, -1);
  b.diff_table.assign(static_cast<std::size_t>(n) * n, -1);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!b.orthogonal(x, y)) continue;
      int j = least_upper_bound(s, x, y);
      if (j < 0) {
        res.reason = "orthogonal pair has no join";
        res.witness = {x, y};
        return res;
      }
      b.join_table[static_cast<std::size_t>(x) * n + y] = j;
    }

  // x \ y = x (d(x) \ d(x^-1 y-meet)), with the idempotent difference read
  // off as the relative complement in [0, d(x)]
  auto idem_diff = [&](int e, int f) -> int {
    int ef = s.mul(e, f);
    for (int g : idem)
      if (s.leq(g, e) && s.mul(g, ef) == s.zero && idem_join.at({g, ef}) == e) return g;
    return -1;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!b.compatible(x, y)) continue;
      int m = s.mul(s.mul(x, s.inv(x)), y);  // the meet of a compatible pair
      int e = idem_diff(s.d(x), s.d(m));
      if (e < 0) {
        res.reason = "missing idempotent difference";
        res.witness = {x, y};
        return res;
      }
      int z = s.mul(x, e);
      if (b.join_table[static_cast<std::size_t>(m) * n + z] != x) {
        res.reason = "difference does not recompose";
        res.witness = {x, y};
        return res;
      }
      b.diff_table[static_cast<std::size_t>(x) * n + y] = z;
    }

  // a finite Boolean structure is unital: the top idempotent is the unit
  for (int x = 0; x < n; ++x)
    if (s.mul(top, x) != x || s.mul(x, top) != x) {
      res.reason = "top idempotent is not a unit";
      res.witness = {top, x};
      return res;
    }
  b.sgp.one = top;

  res.ok = true;
  res.bias = std::move(b);
  return res;
}

Bias boolean_closure(const InverseSemigroup& s) {
  BooleanAnalysis a = analyze_boolean(s);
  if (!a.ok) {
    std::string msg = "not a Boolean inverse semigroup: " + a.reason;
    for (int w : a.witness) msg += " [" + (w < s.size() ? s.names[w] : std::to_string(w)) + "]";
    throw InputError(msg);
  }
  return std::move(a.bias);
}

Bias product_bias(const Bias& a, const Bias& b) {
  Bias p;
  p.sgp = product_semigroup(a.sgp, b.sgp);
  int na = a.size(), nb = b.size(), n = na * nb;
  auto enc = [nb](int i, int j) { return i * nb + j; };
  p.join_table.assign(static_cast<std::size_t>(n) * n, -1);
  p.diff_table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) {
          int x = enc(i, j), y = enc(k, l);
          int ja = a.join_table[static_cast<std::size_t>(i) * na + k];
          int jb = b.join_table[static_cast<std::size_t>(j) * nb + l];
          if (ja >= 0 && jb >= 0)
            p.join_table[static_cast<std::size_t>(x) * n + y] = enc(ja, jb);
          int da = a.diff_table[static_cast<std::size_t>(i) * na + k];
          int db = b.diff_table[static_cast<std::size_t>(j) * nb + l];
          if (da >= 0 && db >= 0)
            p.diff_table[static_cast<std::size_t>(x) * n + y] = enc(da, db);
        }
  return p;
}

Bias relabel(const Bias& b, const std::vector<int>& perm) {
  Bias t;
  t.sgp = relabel(b.sgp, perm);
  int n = b.size();
  t.join_table.assign(static_cast<std::size_t>(n) * n, -1);
  t.diff_table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int j = b.join_table[static_cast<std::size_t>(x) * n + y];
      if (j >= 0) t.join_table[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[j];
      int v = b.diff_table[static_cast<std::size_t>(x) * n + y];
      if (v >= 0) t.diff_table[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[v];
    }
  return t;
}

// --- additive ideals -------------------------------------------------------

std::vector<int> generate_additive_ideal(const Bias& s, const std::vector<int>& seed) {
  int n = s.size();
  std::vector<bool> in(n, false);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  add(s.zero());
  for (int x : seed) add(x);
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t sz = members.size();
    for (std::size_t i = 0; i < sz; ++i) {
      int x = members[i];
      for (int t = 0; t < n; ++t) {
        int a = s.mul(x, t), b = s.mul(t, x);
        if (!in[a]) {
          add(a);
          changed = true;
        }
        if (!in[b]) {
          add(b);
          changed = true;
        }
      }
      for (std::size_t j = 0; j <= i; ++j) {
        int y = members[j];
        if (s.orthogonal(x, y)) {
          int v = s.join(x, y);
          if (!in[v]) {
            add(v);
            changed = true;
          }
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_additive_ideal(const Bias& s, const std::vector<int>& ideal, std::string* why) {
  std::vector<bool> in(s.size(), false);
  for (int x : ideal) in[x] = true;
  if (!in[s.zero()]) {
    if (why) *why = "does not contain zero";
    return false;
  }
  for (int x : ideal)
    for (int t = 0; t < s.size(); ++t) {
      if (!in[s.mul(x, t)] || !in[s.mul(t, x)]) {
        if (why) *why = "not closed under multiplication by " + s.sgp.names[t];
        return false;
      }
    }
  for (int x : ideal)
    for (int y : ideal)
      if (s.orthogonal(x, y) && !in[s.join(x, y)]) {
        if (why)
          *why = "not closed under the orthogonal join of " + s.sgp.names[x] + " and " +
                 s.sgp.names[y];
        return false;
      }
  return true;
}

std::vector<std::vector<int>> additive_ideals(const Bias& s) {
  std::set<std::vector<int>> ideals;
  ideals.insert(generate_additive_ideal(s, {}));
  for (int x = 0; x < s.size(); ++x) ideals.insert(generate_additive_ideal(s, {x}));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> cur(ideals.begin(), ideals.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> u;
        std::set_union(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                       std::back_inserter(u));
        if (ideals.insert(generate_additive_ideal(s, u)).second) changed = true;
      }
  }
  std::vector<std::vector<int>> out(ideals.begin(), ideals.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// --- congruences -----------------------------------------------------------

int Congruence::num_classes() const {
  std::set<int> reps(class_of.begin(), class_of.end());
  return static_cast<int>(reps.size());
}

std::vector<std::vector<int>> Congruence::classes() const {
  std::map<int, std::vector<int>> by_rep;
  for (int x = 0; x < static_cast<int>(class_of.size()); ++x) by_rep[class_of[x]].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [rep, cls] : by_rep) out.push_back(cls);
  return out;  // keys ascend, so classes are sorted by least element
}

namespace {

Congruence canonicalize_partition(std::vector<int> root_of) {
  // replace each root by the least member of its class
  int n = static_cast<int>(root_of.size());
  std::map<int, int> least;
  for (int x = 0; x < n; ++x) {
    auto it = least.find(root_of[x]);
    if (it == least.end() || x < it->second) least[root_of[x]] = x;
  }
  Congruence c;
  c.class_of.resize(n);
  for (int x = 0; x < n; ++x) c.class_of[x] = least.at(root_of[x]);
  return c;
}

struct UnionFind {
  std::vector<int> parent;
  int classes;
  explicit UnionFind(int n) : parent(n), classes(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    --classes;
    return true;
  }
};

// closes a union-find under the five bias operations
void congruence_close(const Bias& s, UnionFind& uf, std::deque<std::pair<int, int>>& work) {
  int n = s.size();
  while (!work.empty()) {
    if (uf.classes == 1) return;  // already the full relation
    auto [a, b] = work.front();
    work.pop_front();
    auto push = [&](int u, int v) {
      if (uf.merge(u, v)) work.emplace_back(u, v);
    };
    push(s.inv(a), s.inv(b));
    for (int z = 0; z < n; ++z) {
      push(s.mul(a, z), s.mul(b, z));
      push(s.mul(z, a), s.mul(z, b));
      push(s.skew_diff(a, z), s.skew_diff(b, z));
      push(s.skew_diff(z, a), s.skew_diff(z, b));
      push(s.skew_add(a, z), s.skew_add(b, z));
      push(s.skew_add(z, a), s.skew_add(z, b));
    }
  }
}

Congruence finish(const Bias& s, UnionFind& uf) {
  std::vector<int> root(s.size());
  for (int x = 0; x < s.size(); ++x) root[x] = uf.find(x);
  return canonicalize_partition(std::move(root));
}

}  // namespace

Congruence identity_congruence(const Bias& s) {
  Congruence c;
  c.class_of.resize(s.size());
  std::iota(c.class_of.begin(), c.class_of.end(), 0);
  return c;
}

Congruence full_congruence(const Bias& s) {
  Congruence c;
  c.class_of.assign(s.size(), 0);
  return c;
}

bool is_bias_congruence(const Bias& s, const Congruence& c, std::string* why) {
  int n = s.size();
  if (static_cast<int>(c.class_of.size()) != n) {
    if (why) *why = "partition size mismatch";
    return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.same(x, y)) continue;
      if (!c.same(s.inv(x), s.inv(y))) {
        if (why) *why = "not closed under inversion";
        return false;
      }
      for (int z = 0; z < n; ++z)
        if (!c.same(s.mul(x, z), s.mul(y, z)) || !c.same(s.mul(z, x), s.mul(z, y))) {
          if (why) *why = "not closed under multiplication";
          return false;
        }
    }
  // additivity, stated on orthogonal idempotents
  auto idem = s.idempotents();
  for (int a : idem)
    for (int b : idem) {
      if (!s.orthogonal(a, b)) continue;
      int ab = s.join(a, b);
      for (int x = 0; x < n; ++x)
        if (c.same(s.mul(x, a), a) && c.same(s.mul(x, b), b) &&
            !c.same(s.mul(x, ab), ab)) {
          if (why) *why = "additivity fails";
          return false;
        }
    }
  return true;
}

Congruence principal_congruence(const Bias& s, int x, int y) {
  UnionFind uf(s.size());
  std::deque<std::pair<int, int>> work;
  if (uf.merge(x, y)) work.emplace_back(x, y);
  congruence_close(s, uf, work);
  return finish(s, uf);
}

Congruence join_congruences(const Bias& s, const Congruence& a, const Congruence& b) {
  UnionFind uf(s.size());
  std::deque<std::pair<int, int>> work;
  for (int x = 0; x < s.size(); ++x) {
    if (uf.merge(x, a.class_of[x])) work.emplace_back(x, a.class_of[x]);
    if (uf.merge(x, b.class_of[x])) work.emplace_back(x, b.class_of[x]);
  }
  congruence_close(s, uf, work);
  return finish(s, uf);
}

Congruence meet_congruences(const Bias& s, const Congruence& a, const Congruence& b) {
  std::map<std::pair<int, int>, int> least;
  int n = s.size();
  std::vector<int> root(n);
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(a.class_of[x], b.class_of[x]);
    auto it = least.find(key);
    if (it == least.end()) {
      least[key] = x;
      root[x] = x;
    } else {
      root[x] = it->second;
    }
  }
  Congruence c;
  c.class_of = std::move(root);
  return c;
}

Congruence ideal_congruence(const Bias& s, const std::vector<int>& ideal) {
  std::string why;
  if (!is_additive_ideal(s, ideal, &why))
    throw InputError("ideal_congruence: not an additive ideal: " + why);
  std::vector<bool> in(s.size(), false);
  for (int x : ideal) in[x] = true;
  int n = s.size();
  auto related = [&](int x, int y) {
    for (int z = 0; z < n; ++z) {
      if (!s.leq(z, x) || !s.leq(z, y)) continue;
      if (in[s.diff(x, z)] && in[s.diff(y, z)]) return true;
    }
    return false;
  };
  UnionFind uf(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (related(x, y)) uf.merge(x, y);
  Congruence c = finish(s, uf);
  // the defining relation must already be transitive, and the result a
  // congruence; a failure here indicates a corrupted structure
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (c.same(x, y) != related(x, y))
        throw InputError("ideal_congruence: relation is not transitive");
  if (!is_bias_congruence(s, c, &why))
    throw InputError("ideal_congruence: result is not a congruence: " + why);
  return c;
}

CongruenceLattice congruence_lattice(const Bias& s, int cap) {
  if (s.size() > cap)
    throw ResourceError("congruence_lattice: size exceeds cap " + std::to_string(cap));
  std::set<Congruence> found;
  found.insert(identity_congruence(s));
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y) found.insert(principal_congruence(s, x, y));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Congruence> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (found.insert(join_congruences(s, cur[i], cur[j])).second) changed = true;
  }
  CongruenceLattice lat;
  lat.all.assign(found.begin(), found.end());
  std::sort(lat.all.begin(), lat.all.end(), [](const Congruence& a, const Congruence& b) {
    if (a.num_classes() != b.num_classes()) return a.num_classes() > b.num_classes();
    return a.class_of < b.class_of;
  });
  const Congruence ident = identity_congruence(s);
  std::vector<Congruence> nonzero;
  for (auto& c : lat.all)
    if (!(c == ident)) nonzero.push_back(c);
  if (!nonzero.empty()) {
    Congruence m = nonzero[0];
    for (auto& c : nonzero) m = meet_congruences(s, m, c);
    lat.subdirectly_irreducible = !(m == ident);
    lat.finitely_subdirectly_irreducible = true;
    for (std::size_t i = 0; i < nonzero.size() && lat.finitely_subdirectly_irreducible; ++i)
      for (std::size_t j = i; j < nonzero.size(); ++j)
        if (meet_congruences(s, nonzero[i], nonzero[j]) == ident) {
          lat.finitely_subdirectly_irreducible = false;
          break;
        }
  }
  return lat;
}

std::vector<int> quotient_map(const Bias& s, const Congruence& c) {
  std::map<int, int> rep_to_new;
  std::vector<int> out(s.size());
  for (int x = 0; x < s.size(); ++x) {
    int rep = c.class_of[x];
    auto it = rep_to_new.try_emplace(rep, static_cast<int>(rep_to_new.size())).first;
    out[x] = it->second;
  }
  return out;
}

Bias quotient(const Bias& s, const Congruence& c) {
  std::string why;
  if (!is_bias_congruence(s, c, &why)) throw InputError("quotient: not a congruence: " + why);
  auto qm = quotient_map(s, c);
  int m = 1 + *std::max_element(qm.begin(), qm.end());
  InverseSemigroup q;
  q.names.assign(m, "");
  for (int x = 0; x < s.size(); ++x)
    if (q.names[qm[x]].empty()) q.names[qm[x]] = s.sgp.names[x];
  q.mul_table.resize(static_cast<std::size_t>(m) * m);
  q.inv_table.resize(m);
  std::vector<int> rep(m, -1);
  for (int x = s.size() - 1; x >= 0; --x) rep[qm[x]] = x;
  for (int i = 0; i < m; ++i) {
    q.inv_table[i] = static_cast<std::uint16_t>(qm[s.inv(rep[i])]);
    for (int j = 0; j < m; ++j)
      q.mul_table[static_cast<std::size_t>(i) * m + j] =
          static_cast<std::uint16_t>(qm[s.mul(rep[i], rep[j])]);
  }
  q.zero = qm[s.zero()];
  return boolean_closure(q);
}

// --- structural predicates -------------------------------------------------

bool invertible(const Bias& s, int x) {
  return s.mul(x, s.inv(x)) == s.one() && s.mul(s.inv(x), x) == s.one();
}

std::vector<int> unit_group_elements(const Bias& s) {
  std::vector<int> units;
  for (int x = 0; x < s.size(); ++x)
    if (invertible(s, x)) units.push_back(x);
  return units;
}

StructuralPredicates structural_predicates(const Bias& s) {
  StructuralPredicates p;
  auto idem = s.idempotents();
  GreenRelations g = green_relations(s.sgp);
  auto dcls = [&](int a, int b) { return g.d_class[a] == g.d_class[b]; };
  p.d_cancellative = [&] {
    for (int a : idem)
      for (int b : idem) {
        if (!s.orthogonal(a, b)) continue;
        int ab = s.join(a, b);
        for (int a2 : idem) {
          if (!dcls(a, a2)) continue;
          for (int b2 : idem) {
            if (!s.orthogonal(a2, b2)) continue;
            if (s.join(a2, b2) != ab) continue;
            if (!dcls(b, b2)) return false;
          }
        }
      }
    return true;
  }();
  auto units = unit_group_elements(s);
  p.factorizable = true;
  for (int x = 0; x < s.size() && p.factorizable; ++x) {
    bool below = false;
    for (int u : units)
      if (s.leq(x, u)) {
        below = true;
        break;
      }
    if (!below) p.factorizable = false;
  }
  if (p.d_cancellative != p.factorizable)
    throw std::logic_error("structural_predicates: cancellation and factorizability disagree");
  return p;
}

// --- homomorphisms ---------------------------------------------------------

bool is_bias_hom(const Bias& src, const Bias& dst, const std::vector<int>& map,
                 std::string* why) {
  if (static_cast<int>(map.size()) != src.size()) {
    if (why) *why = "map size mismatch";
    return false;
  }
  if (map[src.zero()] != dst.zero()) {
    if (why) *why = "zero not preserved";
    return false;
  }
  for (int x = 0; x < src.size(); ++x) {
    if (map[src.inv(x)] != dst.inv(map[x])) {
      if (why) *why = "inversion not preserved at " + src.sgp.names[x];
      return false;
    }
    for (int y = 0; y < src.size(); ++y) {
      if (map[src.mul(x, y)] != dst.mul(map[x], map[y])) {
        if (why) *why = "multiplication not preserved";
        return false;
      }
      if (map[src.skew_diff(x, y)] != dst.skew_diff(map[x], map[y]) ||
          map[src.skew_add(x, y)] != dst.skew_add(map[x], map[y])) {
        if (why) *why = "not additive";
        return false;
      }
    }
  }
  return true;
}

bool is_injective(const std::vector<int>& map) {
  std::set<int> img(map.begin(), map.end());
  return img.size() == map.size();
}

bool is_surjective(const std::vector<int>& map, int dst_size) {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == dst_size;
}

SubBias corner(const Bias& s, int e) {
  if (!s.idempotent(e)) throw InputError("corner: element is not idempotent");
  SubBias sub;
  sub.fwd.assign(s.size(), -1);
  for (int x = 0; x < s.size(); ++x)
    if (s.mul(s.mul(e, x), e) == x) {
      sub.fwd[x] = static_cast<int>(sub.back.size());
      sub.back.push_back(x);
    }
  int m = static_cast<int>(sub.back.size());
  InverseSemigroup t;
  t.names.reserve(m);
  for (int x : sub.back) t.names.push_back(s.sgp.names[x]);
  t.mul_table.resize(static_cast<std::size_t>(m) * m);
  t.inv_table.resize(m);
  for (int i = 0; i < m; ++i) {
    t.inv_table[i] = static_cast<std::uint16_t>(sub.fwd[s.inv(sub.back[i])]);
    for (int j = 0; j < m; ++j)
      t.mul_table[static_cast<std::size_t>(i) * m + j] =
          static_cast<std::uint16_t>(sub.fwd[s.mul(sub.back[i], sub.back[j])]);
  }
  t.zero = sub.fwd[s.zero()];
  t.one = sub.fwd[e];
  Bias b;
  b.sgp = std::move(t);
  b.join_table.assign(static_cast<std::size_t>(m) * m, -1);
  b.diff_table.assign(static_cast<std::size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int jj = s.join_table[static_cast<std::size_t>(sub.back[i]) * s.size() + sub.back[j]];
      if (jj >= 0) b.join_table[static_cast<std::size_t>(i) * m + j] = sub.fwd[jj];
      int dd = s.diff_table[static_cast<std::size_t>(sub.back[i]) * s.size() + sub.back[j]];
      if (dd >= 0) b.diff_table[static_cast<std::size_t>(i) * m + j] = sub.fwd[dd];
    }
  sub.bias = std::move(b);
  return sub;
}

// --- embedding search ------------------------------------------------------

namespace {

std::vector<int> subalgebra_closure(const Bias& s, std::vector<int> gens) {
  std::vector<bool> in(s.size(), false);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      elems.push_back(x);
    }
  };
  add(s.zero());
  for (int g : gens) add(g);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    add(s.inv(x));
    for (std::size_t j = 0; j <= i; ++j) {
      int y = elems[j];
      add(s.mul(x, y));
      add(s.mul(y, x));
      add(s.skew_diff(x, y));
      add(s.skew_diff(y, x));
      add(s.skew_add(x, y));
      add(s.skew_add(y, x));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// invariants preserved exactly by injective bias homomorphisms
struct ElementProfile {
  bool idem;
  bool zero;
  bool balanced;  // d(x) == r(x)
  int index;      // least n with d(x^n) = r(x^n), -1 if none within |S|
  int tail, period;
  bool operator==(const ElementProfile&) const = default;
};

ElementProfile profile_of(const Bias& s, int x) {
  ElementProfile p{};
  p.idem = s.idempotent(x);
  p.zero = x == s.zero();
  p.balanced = s.d(x) == s.r(x);
  p.index = -1;
  std::vector<int> powers;
  int cur = x;
  for (int n = 1; n <= s.size() + 1; ++n) {
    if (p.index < 0 && s.d(cur) == s.r(cur)) p.index = n;
    auto it = std::find(powers.begin(), powers.end(), cur);
    if (it != powers.end()) {
      p.tail = static_cast<int>(it - powers.begin());
      p.period = static_cast<int>(powers.size()) - p.tail;
      break;
    }
    powers.push_back(cur);
    cur = s.mul(cur, x);
  }
  return p;
}

struct SearchState {
  std::vector<int> img;        // src -> dst, -1 unknown
  std::vector<int> owner;      // dst -> src, -1 unused
  std::vector<int> assigned;   // src elements with images, in assignment order
};

// assigns img[x] = y and closes under the operations; false on conflict
bool assign_and_close(const Bias& src, const Bias& dst, SearchState& st, int x0, int y0,
                      std::uint64_t& steps, std::uint64_t step_cap) {
  std::deque<std::pair<int, int>> work;
  auto set = [&](int x, int y) -> bool {
    if (st.img[x] >= 0) return st.img[x] == y;
    if (st.owner[y] >= 0) return false;
    st.img[x] = y;
    st.owner[y] = x;
    st.assigned.push_back(x);
    work.emplace_back(x, y);
    return true;
  };
  if (!set(x0, y0)) return false;
  while (!work.empty()) {
    if (++steps > step_cap) throw ResourceError("embedding search exceeds step cap");
    auto [x, y] = work.front();
    work.pop_front();
    if (!set(src.inv(x), dst.inv(y))) return false;
    // close against every element already assigned
    for (std::size_t i = 0; i < st.assigned.size(); ++i) {
      int u = st.assigned[i], v = st.img[u];
      if (!set(src.mul(x, u), dst.mul(y, v))) return false;
      if (!set(src.mul(u, x), dst.mul(v, y))) return false;
      if (!set(src.skew_diff(x, u), dst.skew_diff(y, v))) return false;
      if (!set(src.skew_diff(u, x), dst.skew_diff(v, y))) return false;
      if (!set(src.skew_add(x, u), dst.skew_add(y, v))) return false;
      if (!set(src.skew_add(u, x), dst.skew_add(v, y))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> bias_generating_set(const Bias& s) {
  std::vector<int> gens;
  std::vector<int> closed = subalgebra_closure(s, {});
  while (static_cast<int>(closed.size()) < s.size()) {
    int next = -1;
    for (int x = 0; x < s.size(); ++x)
      if (!std::binary_search(closed.begin(), closed.end(), x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    closed = subalgebra_closure(s, gens);
  }
  // drop redundant generators
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (static_cast<int>(subalgebra_closure(s, rest).size()) == s.size()) gens = rest;
  }
  return gens;
}

std::optional<std::vector<int>> find_bias_embedding(const Bias& src, const Bias& dst,
                                                    std::uint64_t step_cap) {
  if (src.size() > dst.size()) return std::nullopt;
  std::vector<int> gens = bias_generating_set(src);
  std::vector<ElementProfile> src_prof, dst_prof;
  for (int x = 0; x < src.size(); ++x) src_prof.push_back(profile_of(src, x));
  for (int y = 0; y < dst.size(); ++y) dst_prof.push_back(profile_of(dst, y));
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int y = 0; y < dst.size(); ++y)
      if (src_prof[gens[i]] == dst_prof[y]) candidates[i].push_back(y);
    if (candidates[i].empty()) return std::nullopt;
  }
  std::uint64_t steps = 0;

  SearchState init;
  init.img.assign(src.size(), -1);
  init.owner.assign(dst.size(), -1);
  if (!assign_and_close(src, dst, init, src.zero(), dst.zero(), steps, step_cap))
    return std::nullopt;

  std::function<std::optional<std::vector<int>>(std::size_t, const SearchState&)> go =
      [&](std::size_t depth, const SearchState& st) -> std::optional<std::vector<int>> {
    if (depth == gens.size()) {
      // generators generate, so everything is assigned; a full verification
      // pass guards against gaps in the propagation
      std::string why;
      if (std::count(st.img.begin(), st.img.end(), -1) == 0 &&
          is_bias_hom(src, dst, st.img, &why) && is_injective(st.img))
        return st.img;
      return std::nullopt;
    }
    int g = gens[depth];
    if (st.img[g] >= 0) return go(depth + 1, st);
    for (int y : candidates[depth]) {
      if (st.owner[y] >= 0) continue;
      SearchState next = st;
      if (assign_and_close(src, dst, next, g, y, steps, step_cap))
        if (auto res = go(depth + 1, next)) return res;
    }
    return std::nullopt;
  };
  return go(0, init);
}

}  // namespace bis
