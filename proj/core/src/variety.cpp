#include "bis/variety.hpp"

#include <algorithm>
#include <unordered_map>

#include "bis/errors.hpp"
#include "bis/util.hpp"

namespace bis {

namespace {

bool is_trivial(const Group& g) { return g.size() == 1; }

bool tuple_generates(const Group& g, const std::vector<int>& tuple) {
  return static_cast<int>(subgroup_closure(g, tuple).size()) == g.size();
}

}  // namespace

MembershipResult group_variety_member(const Group& g, const std::vector<Group>& generators,
                                      const VarietyCaps& caps) {
  if (is_trivial(g)) return {Verdict::True, "trivial group"};
  if (generators.empty())
    return {Verdict::False, "no generators: only trivial groups in the variety"};
  Group h = direct_product(generators);
  int k = static_cast<int>(minimal_generating_set(g).size());

  std::uint64_t coords = 1;
  for (int i = 0; i < k; ++i) {
    coords *= static_cast<std::uint64_t>(h.size());
    if (coords > caps.coordinate_cap)
      return {Verdict::Inconclusive, "inconclusive: resource bound, |H|^k coordinates exceed " +
                                         std::to_string(caps.coordinate_cap)};
  }

  // coordinate t encodes a k-tuple over H in mixed radix, most significant first
  auto tuple_entry = [&](std::uint64_t t, int slot) {
    for (int i = k - 1; i > slot; --i) t /= h.size();
    return static_cast<int>(t % h.size());
  };

  // relatively free group on the k projection tuples, inside H^coords
  std::vector<std::vector<std::uint16_t>> elems;
  std::unordered_map<std::vector<std::uint16_t>, int, VecHash> index;
  std::vector<std::vector<int>> prod;  // prod[e][slot]
  std::vector<std::vector<std::uint16_t>> gens(k);
  for (int slot = 0; slot < k; ++slot) {
    gens[slot].resize(coords);
    for (std::uint64_t t = 0; t < coords; ++t)
      gens[slot][t] = static_cast<std::uint16_t>(tuple_entry(t, slot));
  }
  std::vector<std::uint16_t> ident(coords, static_cast<std::uint16_t>(h.id));
  elems.push_back(ident);
  index[ident] = 0;
  prod.emplace_back(k, -1);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int slot = 0; slot < k; ++slot) {
      std::vector<std::uint16_t> next(coords);
      for (std::uint64_t t = 0; t < coords; ++t)
        next[t] = static_cast<std::uint16_t>(h.mul(elems[head][t], gens[slot][t]));
      auto it = index.find(next);
      int id;
      if (it == index.end()) {
        id = static_cast<int>(elems.size());
        if (elems.size() >= caps.free_object_cap ||
            (elems.size() + 1) * coords > 100000000ULL)
          return {Verdict::Inconclusive,
                  "inconclusive: resource bound, relatively free group exceeds cap"};
        index[next] = id;
        elems.push_back(std::move(next));
        prod.emplace_back(k, -1);
      } else {
        id = it->second;
      }
      prod[head][slot] = id;
    }
  }

  // search for a generating tuple of G whose evaluation is consistent
  std::uint64_t tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= static_cast<std::uint64_t>(g.size());
  for (std::uint64_t ti = 0; ti < tuples; ++ti) {
    std::vector<int> tup(k);
    std::uint64_t t = ti;
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(t % g.size());
      t /= g.size();
    }
    if (!tuple_generates(g, tup)) continue;
    std::vector<int> eval(elems.size(), -1);
    eval[0] = g.id;
    bool ok = true;
    for (std::size_t e = 0; e < elems.size() && ok; ++e)
      for (int slot = 0; slot < k; ++slot) {
        int target = prod[e][slot];
        int val = g.mul(eval[e], tup[slot]);
        if (eval[target] < 0) {
          eval[target] = val;
        } else if (eval[target] != val) {
          ok = false;
          break;
        }
      }
    if (ok) return {Verdict::True, ""};
  }
  return {Verdict::False, "no generating tuple extends to a homomorphism"};
}

int variety_index(const VarietySpec& v) {
  int h = 0;
  for (auto& g : v.generators) h = std::max(h, g.n);
  return h;
}

std::optional<std::vector<Group>> radical(int n, const VarietySpec& v,
                                          const VarietyCaps& caps) {
  if (n < 1) throw InputError("radical: n must be positive");
  if (n > variety_index(v)) return std::nullopt;
  std::vector<Group> gens;
  for (auto& g : v.generators)
    if (n <= g.n) gens.push_back(wreath_product(g.group, g.n / n, caps.wreath_cap));
  return gens;
}

MembershipResult matrix_variety_member(int n, const Group& g, const VarietySpec& v,
                                       const VarietyCaps& caps) {
  if (n < 1) throw InputError("matrix_variety_member: n must be positive");
  if (n > variety_index(v))
    return {Verdict::False,
            "order obstruction: " + std::to_string(n) + " exceeds the variety index " +
                std::to_string(variety_index(v))};
  std::optional<std::vector<Group>> gens;
  try {
    gens = radical(n, v, caps);
  } catch (const ResourceError& e) {
    return {Verdict::Inconclusive, std::string("inconclusive: ") + e.what()};
  }
  return group_variety_member(g, *gens, caps);
}

MembershipResult matrix_bias_embeds(int m, const Group& g, int n, const Group& h,
                                    const VarietyCaps& caps) {
  if (m < 1 || n < 1) throw InputError("matrix_bias_embeds: orders must be positive");
  if (m > n)
    return {Verdict::False, "order condition fails: " + std::to_string(m) + " > " +
                                std::to_string(n)};
  Group w;
  try {
    w = wreath_product(h, n / m, caps.wreath_cap);
  } catch (const ResourceError& e) {
    return {Verdict::Inconclusive, std::string("inconclusive: ") + e.what()};
  }
  try {
    if (find_group_embedding(g, w)) return {Verdict::True, ""};
  } catch (const ResourceError& e) {
    return {Verdict::Inconclusive, std::string("inconclusive: ") + e.what()};
  }
  return {Verdict::False, "no monomorphism into H wr S_" + std::to_string(n / m)};
}

ChainReport check_radical_chain(const VarietySpec& v, const VarietyCaps& caps) {
  ChainReport rep;
  int h = variety_index(v);
  auto note_entry = [&](std::string what, MembershipResult r) {
    ChainEntry e;
    e.what = std::move(what);
    e.verdict = r.verdict;
    e.note = r.note;
    if (r.verdict == Verdict::False) ++rep.failed;
    if (r.verdict == Verdict::Inconclusive) ++rep.inconclusive;
    rep.entries.push_back(std::move(e));
  };

  auto radical_or_note = [&](int n) -> std::optional<std::vector<Group>> {
    try {
      return radical(n, v, caps);
    } catch (const ResourceError& e) {
      ChainEntry entry;
      entry.what = "Rad_" + std::to_string(n) + " construction";
      entry.verdict = Verdict::Inconclusive;
      entry.note = std::string("inconclusive: ") + e.what();
      ++rep.inconclusive;
      rep.entries.push_back(std::move(entry));
      return std::nullopt;
    }
  };

  // wreath descent: every generator K of Rad_{mn} has K wr S_m inside Rad_n
  for (int m = 1; m <= h; ++m)
    for (int n = 1; m * n <= h; ++n) {
      auto top = radical_or_note(m * n);
      auto bottom = radical_or_note(n);
      if (!top || !bottom) continue;
      for (std::size_t i = 0; i < top->size(); ++i) {
        MembershipResult r;
        try {
          Group kw = wreath_product((*top)[i], m, caps.wreath_cap);
          r = group_variety_member(kw, *bottom, caps);
        } catch (const ResourceError& e) {
          r = {Verdict::Inconclusive, std::string("inconclusive: ") + e.what()};
        }
        note_entry("Wr_" + std::to_string(m) + "(Rad_" + std::to_string(m * n) +
                       ") generator " + std::to_string(i + 1) + " lies in Rad_" +
                       std::to_string(n),
                   r);
      }
    }

  // monotonicity at generator level
  for (int n = 1; n + 1 <= h; ++n) {
    auto upper = radical_or_note(n + 1);
    auto lower = radical_or_note(n);
    if (!upper || !lower) continue;
    for (std::size_t i = 0; i < upper->size(); ++i)
      note_entry("Rad_" + std::to_string(n + 1) + " generator " + std::to_string(i + 1) +
                     " lies in Rad_" + std::to_string(n),
                 group_variety_member((*upper)[i], *lower, caps));
  }

  // round trip: every presented generator is a member of its own variety
  for (std::size_t i = 0; i < v.generators.size(); ++i)
    note_entry("generator " + std::to_string(i + 1) + " satisfies the membership criterion",
               matrix_variety_member(v.generators[i].n, v.generators[i].group, v, caps));
  return rep;
}

}  // namespace bis
