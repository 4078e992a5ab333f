#include "bis/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "bis/errors.hpp"
#include "bis/util.hpp"

namespace bis {

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      first = false;
      out += std::to_string(j + 1);
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Group group_from_perm_list(int degree, std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  Group g;
  int n = static_cast<int>(perms.size());
  g.names.reserve(n);
  for (auto& p : perms) g.names.push_back(cycle_notation(p));
  g.mul_table.resize(static_cast<std::size_t>(n) * n);
  g.inv_table.resize(n);
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  g.id = index.at(identity);
  for (int x = 0; x < n; ++x) {
    std::vector<int> xinv(degree);
    for (int i = 0; i < degree; ++i) xinv[perms[x][i]] = i;
    g.inv_table[x] = static_cast<std::uint16_t>(index.at(xinv));
    for (int y = 0; y < n; ++y) {
      // apply y first, then x
      std::vector<int> xy(degree);
      for (int i = 0; i < degree; ++i) xy[i] = perms[x][perms[y][i]];
      g.mul_table[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(index.at(xy));
    }
  }
  return g;
}

}  // namespace

int Group::order_of(int x) const {
  int cur = x, k = 1;
  while (cur != id) {
    cur = mul(cur, x);
    ++k;
  }
  return k;
}

int Group::pow(int x, long long e) const {
  int cur = id;
  long long m = e % order_of(x);
  if (m < 0) m += order_of(x);
  for (long long i = 0; i < m; ++i) cur = mul(cur, x);
  return cur;
}

Group trivial_group() {
  Group g;
  g.names = {"1"};
  g.mul_table = {0};
  g.inv_table = {0};
  g.id = 0;
  return g;
}

Group cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic_group: order must be positive");
  Group g;
  for (int i = 0; i < n; ++i) g.names.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  g.mul_table.resize(static_cast<std::size_t>(n) * n);
  g.inv_table.resize(n);
  for (int x = 0; x < n; ++x) {
    g.inv_table[x] = static_cast<std::uint16_t>((n - x) % n);
    for (int y = 0; y < n; ++y)
      g.mul_table[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>((x + y) % n);
  }
  g.id = 0;
  return g;
}

Group symmetric_group(int n) {
  if (n < 0) throw InputError("symmetric_group: degree must be nonnegative");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perm_list(n, perms);
}

Group direct_product(const Group& a, const Group& b) {
  Group g;
  int na = a.size(), nb = b.size(), n = na * nb;
  g.names.reserve(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) g.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
  g.mul_table.resize(static_cast<std::size_t>(n) * n);
  g.inv_table.resize(n);
  auto enc = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      int x = enc(i, j);
      g.inv_table[x] = static_cast<std::uint16_t>(enc(a.inv(i), b.inv(j)));
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          g.mul_table[static_cast<std::size_t>(x) * n + enc(k, l)] =
              static_cast<std::uint16_t>(enc(a.mul(i, k), b.mul(j, l)));
    }
  g.id = enc(a.id, b.id);
  return g;
}

Group direct_product(const std::vector<Group>& factors) {
  if (factors.empty()) return trivial_group();
  Group g = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
  return g;
}

Group group_from_permutations(int degree,
                              const std::vector<std::vector<std::vector<int>>>& gens) {
  if (degree < 1) throw InputError("permutation group: degree must be positive");
  std::vector<std::vector<int>> gen_perms;
  for (auto& cycles : gens) {
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    for (auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        if (from < 1 || from > degree || to < 1 || to > degree)
          throw InputError("permutation group: point out of range 1.." + std::to_string(degree));
        p[from - 1] = to - 1;
      }
    }
    std::set<int> img(p.begin(), p.end());
    if (static_cast<int>(img.size()) != degree)
      throw InputError("permutation group: cycles overlap within one generator");
    gen_perms.push_back(p);
  }
  // BFS closure under composition
  std::set<std::vector<int>> elems;
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  elems.insert(identity);
  std::vector<std::vector<int>> frontier = {identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& x : frontier)
      for (auto& gp : gen_perms) {
        std::vector<int> y(degree);
        for (int i = 0; i < degree; ++i) y[i] = gp[x[i]];
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
    if (elems.size() > 65535) throw ResourceError("permutation group closure exceeds 65535 elements");
  }
  return group_from_perm_list(degree, std::vector<std::vector<int>>(elems.begin(), elems.end()));
}

void validate_group(const Group& g) {
  int n = g.size();
  if (n == 0) throw InputError("group: empty carrier");
  if (static_cast<int>(g.mul_table.size()) != n * n || static_cast<int>(g.inv_table.size()) != n)
    throw InputError("group: table sizes do not match carrier");
  for (int x = 0; x < n; ++x) {
    if (g.mul(g.id, x) != x || g.mul(x, g.id) != x)
      throw InputError("group: identity law fails at " + g.names[x]);
    if (g.mul(x, g.inv(x)) != g.id || g.mul(g.inv(x), x) != g.id)
      throw InputError("group: inverse law fails at " + g.names[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          throw InputError("group: associativity fails at (" + g.names[x] + "," + g.names[y] +
                           "," + g.names[z] + ")");
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace

Group wreath_product(const Group& base, int n, std::uint64_t cap) {
  if (n < 1) throw InputError("wreath_product: n must be positive");
  std::uint64_t sz = factorial(n);
  for (int i = 0; i < n; ++i) {
    sz *= static_cast<std::uint64_t>(base.size());
    if (sz > cap)
      throw ResourceError("wreath product size exceeds cap " + std::to_string(cap));
  }
  auto perms = permutations_of(n);
  int np = static_cast<int>(perms.size());
  int nb = base.size();
  int total = static_cast<int>(sz);

  auto tuple_of = [&](int t) {
    std::vector<int> tup(n);
    for (int i = n - 1; i >= 0; --i) {
      tup[i] = t % nb;
      t /= nb;
    }
    return tup;
  };
  auto tuple_index = [&](const std::vector<int>& tup) {
    int t = 0;
    for (int i = 0; i < n; ++i) t = t * nb + tup[i];
    return t;
  };
  std::map<std::vector<int>, int> perm_index;
  for (int i = 0; i < np; ++i) perm_index[perms[i]] = i;

  Group w;
  w.names.reserve(total);
  for (int idx = 0; idx < total; ++idx) {
    int t = idx / np, p = idx % np;
    auto tup = tuple_of(t);
    std::string name = "[";
    for (int i = 0; i < n; ++i) {
      if (i) name += ",";
      name += base.names[tup[i]];
    }
    name += ";" + cycle_notation(perms[p]) + "]";
    w.names.push_back(name);
  }
  w.mul_table.resize(static_cast<std::size_t>(total) * total);
  w.inv_table.resize(total);
  for (int xi = 0; xi < total; ++xi) {
    auto gx = tuple_of(xi / np);
    const auto& alpha = perms[xi % np];
    std::vector<int> alpha_inv(n);
    for (int i = 0; i < n; ++i) alpha_inv[alpha[i]] = i;
    // inverse: [g;a]^-1 = [h;a^-1] with h_i = (g_{a(i)})^-1
    std::vector<int> hinv(n);
    for (int i = 0; i < n; ++i) hinv[i] = base.inv(gx[alpha[i]]);
    w.inv_table[xi] =
        static_cast<std::uint16_t>(tuple_index(hinv) * np + perm_index.at(alpha_inv));
    for (int yi = 0; yi < total; ++yi) {
      auto gy = tuple_of(yi / np);
      const auto& beta = perms[yi % np];
      std::vector<int> prod(n);
      for (int i = 0; i < n; ++i) prod[i] = base.mul(gx[i], gy[alpha_inv[i]]);
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = alpha[beta[i]];
      w.mul_table[static_cast<std::size_t>(xi) * total + yi] =
          static_cast<std::uint16_t>(tuple_index(prod) * np + perm_index.at(ab));
    }
  }
  std::vector<int> idtup(n, base.id);
  std::vector<int> idperm(n);
  std::iota(idperm.begin(), idperm.end(), 0);
  w.id = tuple_index(idtup) * np + perm_index.at(idperm);
  return w;
}

WreathElement wreath_decode(const Group& g, int n, int index) {
  auto perms = permutations_of(n);
  int np = static_cast<int>(perms.size());
  WreathElement w;
  w.perm = perms[index % np];
  int t = index / np;
  w.tuple.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    w.tuple[i] = t % g.size();
    t /= g.size();
  }
  return w;
}

int wreath_encode(const Group& g, int n, const WreathElement& w) {
  auto perms = permutations_of(n);
  int np = static_cast<int>(perms.size());
  int t = 0;
  for (int i = 0; i < n; ++i) t = t * g.size() + w.tuple[i];
  int p = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), w.perm) - perms.begin());
  return t * np + p;
}

std::vector<int> subgroup_closure(const Group& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.size(), false);
  std::vector<int> elems = {g.id};
  in[g.id] = true;
  std::vector<int> frontier = {g.id};
  std::vector<int> gset = gens;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gset) {
        int y = g.mul(x, s);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
          next.push_back(y);
        }
        int z = g.mul(x, g.inv(s));
        if (!in[z]) {
          in[z] = true;
          elems.push_back(z);
          next.push_back(z);
        }
      }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  int n = g.size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    int c = static_cast<int>(classes.size());
    classes.push_back({});
    for (int t = 0; t < n; ++t) {
      int y = g.mul(g.mul(t, x), g.inv(t));
      if (cls[y] < 0) {
        cls[y] = c;
        classes[c].push_back(y);
      }
    }
    std::sort(classes[c].begin(), classes[c].end());
  }
  return classes;
}

std::vector<std::vector<int>> normal_subgroups(const Group& g) {
  // enumerate the full subgroup lattice by one-element extensions, then
  // filter for conjugation closure
  std::set<std::vector<int>> subgroups;
  std::vector<std::vector<int>> frontier;
  std::vector<int> triv = {g.id};
  subgroups.insert(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& h : frontier) {
      for (int x = 0; x < g.size(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        auto gens = h;
        gens.push_back(x);
        auto h2 = subgroup_closure(g, gens);
        if (subgroups.insert(h2).second) next.push_back(h2);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> normals;
  for (auto& h : subgroups) {
    bool normal = true;
    for (int t = 0; t < g.size() && normal; ++t)
      for (int x : h)
        if (!std::binary_search(h.begin(), h.end(), g.mul(g.mul(t, x), g.inv(t)))) {
          normal = false;
          break;
        }
    if (normal) normals.push_back(h);
  }
  std::sort(normals.begin(), normals.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return normals;
}

std::vector<int> minimal_generating_set(const Group& g) {
  int n = g.size();
  if (n == 1) return {};
  for (int k = 1; k <= n; ++k) {
    // enumerate k-subsets of {0..n-1} in lexicographic order
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
      if (static_cast<int>(subgroup_closure(g, c).size()) == n) return c;
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  throw InputError("minimal_generating_set: unreachable");
}

namespace {

// Expression DAG: each element as (parent, generator slot), BFS from identity.
struct ExprDag {
  std::vector<int> parent, gen, order_bfs;
};

ExprDag expressions(const Group& g, const std::vector<int>& gens) {
  ExprDag dag;
  int n = g.size();
  dag.parent.assign(n, -1);
  dag.gen.assign(n, -1);
  std::vector<bool> seen(n, false);
  seen[g.id] = true;
  dag.order_bfs.push_back(g.id);
  std::size_t head = 0;
  while (head < dag.order_bfs.size()) {
    int x = dag.order_bfs[head++];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = g.mul(x, gens[s]);
      if (!seen[y]) {
        seen[y] = true;
        dag.parent[y] = x;
        dag.gen[y] = static_cast<int>(s);
        dag.order_bfs.push_back(y);
      }
    }
  }
  return dag;
}

}  // namespace

std::optional<std::vector<int>> find_group_embedding(const Group& g, const Group& h) {
  if (g.size() > h.size()) return std::nullopt;
  std::vector<int> gens = minimal_generating_set(g);
  if (gens.empty()) {
    std::vector<int> image(g.size(), h.id);
    return image;
  }
  ExprDag dag = expressions(g, gens);
  // candidate images must preserve element order exactly
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    int o = g.order_of(gens[s]);
    for (int y = 0; y < h.size(); ++y)
      if (h.order_of(y) == o) candidates[s].push_back(y);
    if (candidates[s].empty()) return std::nullopt;
  }
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> image(g.size(), -1);
  auto try_assignment = [&](const std::vector<int>& gen_img) -> bool {
    std::fill(image.begin(), image.end(), -1);
    image[g.id] = h.id;
    std::vector<bool> used(h.size(), false);
    used[h.id] = true;
    for (int x : dag.order_bfs) {
      if (x == g.id) continue;
      int y = h.mul(image[dag.parent[x]], gen_img[dag.gen[x]]);
      if (used[y]) return false;  // injectivity collision
      used[y] = true;
      image[x] = y;
    }
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < g.size(); ++b)
        if (image[g.mul(a, b)] != h.mul(image[a], image[b])) return false;
    return true;
  };
  std::vector<int> gen_img(gens.size());
  std::size_t depth = 0;
  while (true) {
    if (choice[depth] == static_cast<int>(candidates[depth].size())) {
      if (depth == 0) return std::nullopt;
      choice[depth] = 0;
      --depth;
      ++choice[depth];
      continue;
    }
    gen_img[depth] = candidates[depth][choice[depth]];
    if (depth + 1 < gens.size()) {
      ++depth;
      continue;
    }
    if (try_assignment(gen_img)) return image;
    ++choice[depth];
  }
}

bool group_isomorphic(const Group& a, const Group& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 64) throw ResourceError("group_isomorphic: cap |G| <= 64 exceeded");
  return find_group_embedding(a, b).has_value();
}

std::string describe_group(const Group& g) {
  struct Entry {
    const char* name;
    Group value;
  };
  static const std::vector<Entry> catalog = [] {
    std::vector<Entry> c;
    c.push_back({"triv", trivial_group()});
    c.push_back({"Z2", cyclic_group(2)});
    c.push_back({"Z3", cyclic_group(3)});
    c.push_back({"Z4", cyclic_group(4)});
    c.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
    c.push_back({"Z5", cyclic_group(5)});
    c.push_back({"Z6", cyclic_group(6)});
    c.push_back({"S3", symmetric_group(3)});
    c.push_back({"Z7", cyclic_group(7)});
    c.push_back({"Z8", cyclic_group(8)});
    c.push_back({"D4", group_from_permutations(4, {{{1, 2, 3, 4}}, {{1, 3}}})});
    c.push_back({"Q8", group_from_permutations(
                           8, {{{1, 2, 3, 4}, {5, 8, 7, 6}}, {{1, 5, 3, 7}, {2, 6, 4, 8}}})});
    c.push_back({"Z9", cyclic_group(9)});
    c.push_back({"Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3))});
    return c;
  }();
  if (g.size() <= 64) {
    for (auto& e : catalog)
      if (e.value.size() == g.size() && group_isomorphic(g, e.value)) return e.name;
  }
  return "order" + std::to_string(g.size());
}

}  // namespace bis
