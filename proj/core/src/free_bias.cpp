#include "bis/free_bias.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "bis/errors.hpp"

namespace bis {

CanonicalForm<FreeBase> free_canonical(const TermPtr& t, const FreeBase& base,
                                       const std::vector<std::string>& alphabet) {
  std::map<std::string, MunnTree> assignment;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    assignment[alphabet[i]] = munn_generator(base.alphabet_size, static_cast<int>(i) + 1);
  return canonicalize(base, t, assignment);
}

bool free_decide_leq(const std::string& lhs, const std::string& rhs,
                     const std::vector<std::string>& alphabet) {
  FreeBase base{static_cast<int>(alphabet.size())};
  auto p = free_canonical(parse_term(lhs, alphabet), base, alphabet);
  auto q = free_canonical(parse_term(rhs, alphabet), base, alphabet);
  return decide_leq(base, p, q);
}

bool free_decide_equal(const std::string& lhs, const std::string& rhs,
                       const std::vector<std::string>& alphabet) {
  FreeBase base{static_cast<int>(alphabet.size())};
  auto p = free_canonical(parse_term(lhs, alphabet), base, alphabet);
  auto q = free_canonical(parse_term(rhs, alphabet), base, alphabet);
  return decide_equal(base, p, q);
}

bool free_decide_equal_terms(const TermPtr& lhs, const TermPtr& rhs,
                             const std::vector<std::string>& alphabet) {
  FreeBase base{static_cast<int>(alphabet.size())};
  auto p = free_canonical(lhs, base, alphabet);
  auto q = free_canonical(rhs, base, alphabet);
  return decide_equal(base, p, q);
}

namespace {

struct SymmetricCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<std::pair<SymmetricInverseMonoid, Bias>>> entries;

  std::pair<SymmetricInverseMonoid, Bias>& get(int n) {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = entries.find(n);
    if (it == entries.end()) {
      auto m = symmetric_inverse_monoid(n);
      Bias b = boolean_closure(m.sgp);
      it = entries
               .emplace(n, std::make_unique<std::pair<SymmetricInverseMonoid, Bias>>(
                               std::move(m), std::move(b)))
               .first;
    }
    return *it->second;
  }
};

SymmetricCache& cache() {
  static SymmetricCache c;
  return c;
}

}  // namespace

const Bias& symmetric_bias(int n) { return cache().get(n).second; }
const SymmetricInverseMonoid& symmetric_monoid(int n) { return cache().get(n).first; }

std::optional<Separator> falsify(const TermPtr& lhs, const TermPtr& rhs, int n_max, int n_cap) {
  if (n_max > n_cap)
    throw ResourceError("falsify: n_max exceeds cap " + std::to_string(n_cap));
  std::set<std::string> var_set;
  for (auto& v : term_variables(lhs)) var_set.insert(v);
  for (auto& v : term_variables(rhs)) var_set.insert(v);
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  int k = static_cast<int>(vars.size());
  for (int n = 1; n <= n_max; ++n) {
    const Bias& s = symmetric_bias(n);
    const SymmetricInverseMonoid& m = symmetric_monoid(n);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(s.size());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::map<std::string, int> assignment;
      std::uint64_t t = idx;
      for (int i = k - 1; i >= 0; --i) {
        assignment[vars[i]] = static_cast<int>(t % s.size());
        t /= s.size();
      }
      int lv = evaluate_term(lhs, assignment, s);
      int rv = evaluate_term(rhs, assignment, s);
      if (lv != rv) {
        Separator sep;
        sep.n = n;
        for (auto& [name, e] : assignment) sep.assignment[name] = m.elements[e];
        sep.lhs_value = s.sgp.names[lv];
        sep.rhs_value = s.sgp.names[rv];
        return sep;
      }
    }
  }
  return std::nullopt;
}

UniversalBias universal_bias(const InverseSemigroup& s, int cap) {
  TableBase base{&s};
  using Form = CanonicalForm<TableBase>;
  std::vector<Form> elems;
  auto find = [&](const Form& f) -> int {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (decide_equal(base, elems[i], f)) return static_cast<int>(i);
    return -1;
  };
  auto add = [&](Form f) -> int {
    int at = find(f);
    if (at >= 0) return at;
    if (static_cast<int>(elems.size()) >= cap)
      throw ResourceError("universal_bias: element count exceeds cap " + std::to_string(cap));
    elems.push_back(std::move(f));
    return static_cast<int>(elems.size()) - 1;
  };
  add(form_zero<TableBase>());
  UniversalBias out;
  out.inclusion.resize(s.size());
  for (int x = 0; x < s.size(); ++x) out.inclusion[x] = add(form_var(base, x));

  // closure under the bias operations
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add(form_inv(base, elems[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      add(form_mul(base, elems[i], elems[j]));
      add(form_mul(base, elems[j], elems[i]));
      add(form_skew_diff(base, elems[i], elems[j]));
      add(form_skew_diff(base, elems[j], elems[i]));
      add(form_skew_add(base, elems[i], elems[j]));
      add(form_skew_add(base, elems[j], elems[i]));
    }
  }

  int total = static_cast<int>(elems.size());
  if (total > 65535) throw ResourceError("universal_bias: element count exceeds 65535");
  InverseSemigroup u;
  u.names.reserve(total);
  for (int i = 0; i < total; ++i) {
    std::string nm;
    if (elems[i].summands.empty()) nm = "0";
    for (auto& sm : elems[i].summands) {
      if (!nm.empty()) nm += "+";
      nm += s.names[sm.x];
      if (!sm.cell.bs.empty() || sm.cell.a != base.d(sm.x)) {
        nm += "(" + s.names[sm.cell.a];
        for (auto& b : sm.cell.bs) nm += "\\" + s.names[b];
        nm += ")";
      }
    }
    u.names.push_back(nm);
  }
  u.mul_table.resize(static_cast<std::size_t>(total) * total);
  u.inv_table.resize(total);
  for (int i = 0; i < total; ++i) {
    int ii = find(form_inv(base, elems[i]));
    if (ii < 0) throw std::logic_error("universal_bias: closure not closed under inversion");
    u.inv_table[i] = static_cast<std::uint16_t>(ii);
    for (int j = 0; j < total; ++j) {
      int p = find(form_mul(base, elems[i], elems[j]));
      if (p < 0) throw std::logic_error("universal_bias: closure not closed under product");
      u.mul_table[static_cast<std::size_t>(i) * total + j] = static_cast<std::uint16_t>(p);
    }
  }
  u.zero = 0;
  out.bias = boolean_closure(u);
  out.reps = std::move(elems);

  // the canonical map is a semigroup embedding (a bias embedding is not
  // required: the base zero, when present, is just another idempotent here)
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y) {
      if (out.bias.mul(out.inclusion[x], out.inclusion[y]) != out.inclusion[s.mul(x, y)])
        throw std::logic_error("universal_bias: inclusion is not multiplicative");
      if (x != y && out.inclusion[x] == out.inclusion[y])
        throw std::logic_error("universal_bias: inclusion is not injective");
    }
  return out;
}

}  // namespace bis
