#ifndef BIS_FREE_BIAS_HPP
#define BIS_FREE_BIAS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bis/bias.hpp"
#include "bis/errors.hpp"
#include "bis/munn.hpp"
#include "bis/term.hpp"

namespace bis {

// Canonical forms live over a base inverse semigroup presented through a
// small arithmetic interface: the free inverse semigroup on an alphabet
// (Munn trees) or a finite table.

struct FreeBase {
  int alphabet_size = 0;
  using Elem = MunnTree;
  Elem mul(const Elem& x, const Elem& y) const { return munn_mul(x, y); }
  Elem inv(const Elem& x) const { return munn_inv(x); }
  Elem d(const Elem& x) const { return munn_d(x); }
  Elem r(const Elem& x) const { return munn_r(x); }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  bool leq(const Elem& x, const Elem& y) const { return munn_leq(x, y); }
  bool less(const Elem& x, const Elem& y) const { return x < y; }
  bool idempotent(const Elem& x) const { return munn_idempotent(x); }
};

struct TableBase {
  const InverseSemigroup* sgp = nullptr;
  using Elem = int;
  Elem mul(Elem x, Elem y) const { return sgp->mul(x, y); }
  Elem inv(Elem x) const { return sgp->inv(x); }
  Elem d(Elem x) const { return sgp->d(x); }
  Elem r(Elem x) const { return sgp->r(x); }
  bool eq(Elem x, Elem y) const { return x == y; }
  bool leq(Elem x, Elem y) const { return sgp->leq(x, y); }
  bool less(Elem x, Elem y) const { return x < y; }
  bool idempotent(Elem x) const { return sgp->idempotent(x); }
};

// A generalized Boolean cell over the base: the idempotent a with the join
// of the bs removed.  Invariants: each b <= a, and a is not below any b
// (otherwise the cell is zero and gets dropped).
template <class B>
struct IdemCell {
  typename B::Elem a;
  std::vector<typename B::Elem> bs;
};

// One orthogonal summand x(a \ join bs) with a <= d(x).
template <class B>
struct Summand {
  typename B::Elem x;
  IdemCell<B> cell;
};

template <class B>
struct CanonicalForm {
  std::vector<Summand<B>> summands;
};

template <class B>
std::optional<IdemCell<B>> normalize_cell(const B& base, typename B::Elem a,
                                          std::vector<typename B::Elem> bs) {
  for (auto& b : bs) b = base.mul(b, a);
  for (auto& b : bs)
    if (base.leq(a, b)) return std::nullopt;  // a <= some b: the cell is zero
  std::sort(bs.begin(), bs.end(), [&](const auto& u, const auto& v) { return base.less(u, v); });
  bs.erase(std::unique(bs.begin(), bs.end(),
                       [&](const auto& u, const auto& v) { return base.eq(u, v); }),
           bs.end());
  return IdemCell<B>{std::move(a), std::move(bs)};
}

// cell difference c \ e, expanded into pairwise orthogonal cells
template <class B>
std::vector<IdemCell<B>> cell_diff(const B& base, const IdemCell<B>& c, const IdemCell<B>& e) {
  std::vector<IdemCell<B>> out;
  {
    auto bs = c.bs;
    bs.push_back(e.a);
    if (auto cell = normalize_cell(base, c.a, std::move(bs))) out.push_back(std::move(*cell));
  }
  for (std::size_t i = 0; i < e.bs.size(); ++i) {
    auto bs = c.bs;
    for (std::size_t j = 0; j < i; ++j) bs.push_back(e.bs[j]);
    if (auto cell = normalize_cell(base, base.mul(c.a, e.bs[i]), std::move(bs)))
      out.push_back(std::move(*cell));
  }
  return out;
}

template <class B>
std::vector<IdemCell<B>> comb_diff(const B& base, const std::vector<IdemCell<B>>& u,
                                   const std::vector<IdemCell<B>>& v) {
  std::vector<IdemCell<B>> residual = u;
  for (const auto& e : v) {
    std::vector<IdemCell<B>> next;
    for (const auto& c : residual)
      for (auto& piece : cell_diff(base, c, e)) next.push_back(std::move(piece));
    residual = std::move(next);
  }
  return residual;
}

template <class B>
std::optional<IdemCell<B>> cell_meet(const B& base, const IdemCell<B>& c, const IdemCell<B>& e) {
  auto bs = c.bs;
  bs.insert(bs.end(), e.bs.begin(), e.bs.end());
  return normalize_cell(base, base.mul(c.a, e.a), std::move(bs));
}

// c below the join of the cells on the right, decided by expansion into
// cells and the primitive cover rule: an idempotent is below a join of
// idempotents of the base only by being below one of them.
template <class B>
bool cell_cover_leq(const B& base, const IdemCell<B>& c, const std::vector<IdemCell<B>>& rhs) {
  return comb_diff(base, std::vector<IdemCell<B>>{c}, rhs).empty();
}

// spec-level entry point: idempotents given as meets of base idempotents
template <class B>
bool boolean_cover_leq(const B& base, const std::vector<typename B::Elem>& meet_a,
                       const std::vector<typename B::Elem>& subtracted,
                       const std::vector<std::pair<std::vector<typename B::Elem>,
                                                   std::vector<typename B::Elem>>>& rhs) {
  auto collapse = [&](const std::vector<typename B::Elem>& meet) {
    if (meet.empty()) throw InputError("boolean_cover_leq: empty meet set");
    auto acc = meet[0];
    for (std::size_t i = 1; i < meet.size(); ++i) acc = base.mul(acc, meet[i]);
    return acc;
  };
  auto lhs_cell = normalize_cell(base, collapse(meet_a), subtracted);
  if (!lhs_cell) return true;
  std::vector<IdemCell<B>> rhs_cells;
  for (auto& [m, sub] : rhs)
    if (auto cell = normalize_cell(base, collapse(m), sub)) rhs_cells.push_back(std::move(*cell));
  return cell_cover_leq(base, *lhs_cell, rhs_cells);
}

// the inequality x(a \ join a_i) <= y(b \ join b_j), decided from base
// equalities and the natural order
template <class B>
bool summand_leq(const B& base, const Summand<B>& s, const Summand<B>& t) {
  auto ad = base.mul(s.cell.a, base.d(s.x));
  bool disj = false;
  for (const auto& ai : s.cell.bs)
    if (base.leq(ad, ai)) {
      disj = true;
      break;
    }
  if (!disj) {
    bool same_action = base.eq(base.mul(s.x, s.cell.a),
                               base.mul(base.mul(t.x, base.d(s.x)), s.cell.a));
    bool dominated = base.leq(ad, base.mul(t.cell.a, base.d(t.x)));
    disj = same_action && dominated;
  }
  if (!disj) return false;
  for (const auto& bj : t.cell.bs) {
    bool covered = false;
    for (const auto& ai : s.cell.bs)
      if (base.leq(base.mul(ad, bj), ai)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

template <class B>
bool decide_leq(const B& base, const CanonicalForm<B>& p, const CanonicalForm<B>& q) {
  std::vector<IdemCell<B>> q_cells;
  for (const auto& t : q.summands) q_cells.push_back(t.cell);
  for (const auto& s : p.summands) {
    if (!cell_cover_leq(base, s.cell, q_cells)) return false;
    for (const auto& t : q.summands) {
      auto meet = cell_meet(base, s.cell, t.cell);
      if (!meet) continue;  // that part of s is zero against t
      Summand<B> restricted{s.x, *meet};
      Summand<B> plain{t.x, IdemCell<B>{base.d(t.x), {}}};
      if (!summand_leq(base, restricted, plain)) return false;
    }
  }
  return true;
}

template <class B>
bool decide_equal(const B& base, const CanonicalForm<B>& p, const CanonicalForm<B>& q) {
  return decide_leq(base, p, q) && decide_leq(base, q, p);
}

// --- form arithmetic ---------------------------------------------------

template <class B>
CanonicalForm<B> form_zero() {
  return {};
}

template <class B>
CanonicalForm<B> form_var(const B& base, const typename B::Elem& x) {
  CanonicalForm<B> f;
  f.summands.push_back(Summand<B>{x, IdemCell<B>{base.d(x), {}}});
  return f;
}

template <class B>
CanonicalForm<B> form_mul(const B& base, const CanonicalForm<B>& p, const CanonicalForm<B>& q) {
  CanonicalForm<B> out;
  for (const auto& s : p.summands)
    for (const auto& t : q.summands) {
      auto x = base.mul(s.x, t.x);
      // push the left idempotent data through t.x
      auto yi = base.inv(t.x);
      auto a = base.mul(base.mul(base.mul(yi, s.cell.a), t.x), t.cell.a);
      std::vector<typename B::Elem> bs;
      for (const auto& b : s.cell.bs) bs.push_back(base.mul(base.mul(yi, b), t.x));
      bs.insert(bs.end(), t.cell.bs.begin(), t.cell.bs.end());
      if (auto cell = normalize_cell(base, std::move(a), std::move(bs)))
        out.summands.push_back(Summand<B>{std::move(x), std::move(*cell)});
    }
  return out;
}

template <class B>
CanonicalForm<B> form_inv(const B& base, const CanonicalForm<B>& p) {
  CanonicalForm<B> out;
  for (const auto& s : p.summands) {
    auto xi = base.inv(s.x);
    auto a = base.mul(base.mul(s.x, s.cell.a), xi);
    std::vector<typename B::Elem> bs;
    for (const auto& b : s.cell.bs) bs.push_back(base.mul(base.mul(s.x, b), xi));
    if (auto cell = normalize_cell(base, std::move(a), std::move(bs)))
      out.summands.push_back(Summand<B>{std::move(xi), std::move(*cell)});
  }
  return out;
}

template <class B>
std::vector<IdemCell<B>> form_d(const B& base, const CanonicalForm<B>& p) {
  (void)base;
  std::vector<IdemCell<B>> cells;
  for (const auto& s : p.summands) cells.push_back(s.cell);
  return cells;
}

template <class B>
std::vector<IdemCell<B>> form_r(const B& base, const CanonicalForm<B>& p) {
  std::vector<IdemCell<B>> cells;
  for (const auto& s : p.summands) {
    auto xi = base.inv(s.x);
    auto a = base.mul(base.mul(s.x, s.cell.a), xi);
    std::vector<typename B::Elem> bs;
    for (const auto& b : s.cell.bs) bs.push_back(base.mul(base.mul(s.x, b), xi));
    if (auto cell = normalize_cell(base, std::move(a), std::move(bs)))
      cells.push_back(std::move(*cell));
  }
  return cells;
}

template <class B>
CanonicalForm<B> form_skew_diff(const B& base, const CanonicalForm<B>& p,
                                const CanonicalForm<B>& q) {
  auto left = comb_diff(base, form_r(base, p), form_r(base, q));
  auto right = comb_diff(base, form_d(base, p), form_d(base, q));
  CanonicalForm<B> out;
  for (const auto& s : p.summands)
    for (const auto& lc : left)
      for (const auto& rc : right) {
        auto xi = base.inv(s.x);
        auto conj_a = base.mul(base.mul(xi, lc.a), s.x);
        auto a = base.mul(base.mul(conj_a, s.cell.a), rc.a);
        std::vector<typename B::Elem> bs;
        for (const auto& b : lc.bs) bs.push_back(base.mul(base.mul(xi, b), s.x));
        bs.insert(bs.end(), s.cell.bs.begin(), s.cell.bs.end());
        bs.insert(bs.end(), rc.bs.begin(), rc.bs.end());
        if (auto cell = normalize_cell(base, std::move(a), std::move(bs)))
          out.summands.push_back(Summand<B>{s.x, std::move(*cell)});
      }
  return out;
}

template <class B>
CanonicalForm<B> form_skew_add(const B& base, const CanonicalForm<B>& p,
                               const CanonicalForm<B>& q) {
  CanonicalForm<B> out = form_skew_diff(base, p, q);
  out.summands.insert(out.summands.end(), q.summands.begin(), q.summands.end());
  return out;
}

template <class B>
CanonicalForm<B> canonicalize(const B& base, const TermPtr& t,
                              const std::map<std::string, typename B::Elem>& assignment) {
  switch (t->kind) {
    case Term::Kind::Zero: return form_zero<B>();
    case Term::Kind::Var: {
      auto it = assignment.find(t->var);
      if (it == assignment.end()) throw InputError("unassigned variable " + t->var);
      return form_var(base, it->second);
    }
    case Term::Kind::Inv: return form_inv(base, canonicalize(base, t->left, assignment));
    case Term::Kind::Mul:
      return form_mul(base, canonicalize(base, t->left, assignment),
                      canonicalize(base, t->right, assignment));
    case Term::Kind::SkewDiff:
      return form_skew_diff(base, canonicalize(base, t->left, assignment),
                            canonicalize(base, t->right, assignment));
    case Term::Kind::SkewAdd:
      return form_skew_add(base, canonicalize(base, t->left, assignment),
                           canonicalize(base, t->right, assignment));
  }
  throw std::logic_error("canonicalize: bad kind");
}

// --- the reduction as an explicit positive quantifier-free formula ---------

// Atoms are equalities and natural-order inequalities between computed base
// elements; the tree mirrors the reduction used by decide_leq.
template <class B>
struct PqfFormula {
  enum class Kind { And, Or, Leq, Eq, Truth };
  Kind kind = Kind::Truth;
  bool truth = true;                       // Kind::Truth
  typename B::Elem lhs{}, rhs{};           // atoms
  std::vector<PqfFormula<B>> children;     // And / Or
};

template <class B>
PqfFormula<B> pqf_and(std::vector<PqfFormula<B>> children) {
  PqfFormula<B> f;
  f.kind = PqfFormula<B>::Kind::And;
  f.children = std::move(children);
  return f;
}

template <class B>
PqfFormula<B> pqf_or(std::vector<PqfFormula<B>> children) {
  PqfFormula<B> f;
  f.kind = PqfFormula<B>::Kind::Or;
  f.children = std::move(children);
  return f;
}

template <class B>
PqfFormula<B> pqf_truth(bool value) {
  PqfFormula<B> f;
  f.truth = value;
  return f;
}

template <class B>
PqfFormula<B> pqf_leq(typename B::Elem a, typename B::Elem b) {
  PqfFormula<B> f;
  f.kind = PqfFormula<B>::Kind::Leq;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return f;
}

template <class B>
PqfFormula<B> pqf_eq(typename B::Elem a, typename B::Elem b) {
  PqfFormula<B> f;
  f.kind = PqfFormula<B>::Kind::Eq;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return f;
}

template <class B>
bool eval_pqf(const B& base, const PqfFormula<B>& f) {
  switch (f.kind) {
    case PqfFormula<B>::Kind::Truth: return f.truth;
    case PqfFormula<B>::Kind::Leq: return base.leq(f.lhs, f.rhs);
    case PqfFormula<B>::Kind::Eq: return base.eq(f.lhs, f.rhs);
    case PqfFormula<B>::Kind::And:
      for (auto& c : f.children)
        if (!eval_pqf(base, c)) return false;
      return true;
    case PqfFormula<B>::Kind::Or:
      for (auto& c : f.children)
        if (eval_pqf(base, c)) return true;
      return false;
  }
  return false;
}

template <class B>
PqfFormula<B> build_pqf_summand_leq(const B& base, const Summand<B>& s, const Summand<B>& t) {
  auto ad = base.mul(s.cell.a, base.d(s.x));
  std::vector<PqfFormula<B>> disj;
  for (const auto& ai : s.cell.bs) disj.push_back(pqf_leq<B>(ad, ai));
  disj.push_back(pqf_and<B>(
      {pqf_eq<B>(base.mul(s.x, s.cell.a), base.mul(base.mul(t.x, base.d(s.x)), s.cell.a)),
       pqf_leq<B>(ad, base.mul(t.cell.a, base.d(t.x)))}));
  std::vector<PqfFormula<B>> conj;
  conj.push_back(pqf_or<B>(std::move(disj)));
  for (const auto& bj : t.cell.bs) {
    std::vector<PqfFormula<B>> covers;
    for (const auto& ai : s.cell.bs) covers.push_back(pqf_leq<B>(base.mul(ad, bj), ai));
    conj.push_back(covers.empty() ? pqf_truth<B>(false) : pqf_or<B>(std::move(covers)));
  }
  return pqf_and<B>(std::move(conj));
}

// the full reduction of p <= q; eval_pqf on the result agrees with decide_leq
template <class B>
PqfFormula<B> build_pqf_leq(const B& base, const CanonicalForm<B>& p,
                            const CanonicalForm<B>& q) {
  std::vector<IdemCell<B>> q_cells;
  for (const auto& t : q.summands) q_cells.push_back(t.cell);
  std::vector<PqfFormula<B>> conj;
  for (const auto& s : p.summands) {
    // Boolean cover reduces to primitive covers, each a disjunction of
    // base-order atoms; residual cells must vanish
    for (const auto& cell : comb_diff(base, std::vector<IdemCell<B>>{s.cell}, q_cells)) {
      std::vector<PqfFormula<B>> alts;
      for (const auto& b : cell.bs) alts.push_back(pqf_leq<B>(cell.a, b));
      conj.push_back(alts.empty() ? pqf_truth<B>(false) : pqf_or<B>(std::move(alts)));
    }
    for (const auto& t : q.summands) {
      auto meet = cell_meet(base, s.cell, t.cell);
      if (!meet) continue;
      conj.push_back(build_pqf_summand_leq(base, Summand<B>{s.x, *meet},
                                           Summand<B>{t.x, IdemCell<B>{base.d(t.x), {}}}));
    }
  }
  return pqf_and<B>(std::move(conj));
}

// --- free word problem, term level ------------------------------------

CanonicalForm<FreeBase> free_canonical(const TermPtr& t, const FreeBase& base,
                                       const std::vector<std::string>& alphabet);
bool free_decide_leq(const std::string& lhs, const std::string& rhs,
                     const std::vector<std::string>& alphabet);
bool free_decide_equal(const std::string& lhs, const std::string& rhs,
                       const std::vector<std::string>& alphabet);
bool free_decide_equal_terms(const TermPtr& lhs, const TermPtr& rhs,
                             const std::vector<std::string>& alphabet);

// --- falsification in finite symmetric structures ----------------------

struct Separator {
  int n = 0;  // ambient size of the separating structure
  std::map<std::string, PartialInjection> assignment;
  std::string lhs_value, rhs_value;
};

// Exhaustive search over assignments into partial-injection structures of
// ambient size 1..n_max, in deterministic order.  An empty result is not a
// proof of equality.
std::optional<Separator> falsify(const TermPtr& lhs, const TermPtr& rhs, int n_max = 4,
                                 int n_cap = 4);

// cached builder for the falsifier's targets
const Bias& symmetric_bias(int n);
const SymmetricInverseMonoid& symmetric_monoid(int n);

// --- universal bias of a finite inverse semigroup ----------------------

struct UniversalBias {
  Bias bias;
  std::vector<int> inclusion;  // base element -> universal element
  std::vector<CanonicalForm<TableBase>> reps;
};

// Elements are canonical forms modulo the decision procedure; operations are
// induced.  The inclusion is a verified semigroup embedding.
UniversalBias universal_bias(const InverseSemigroup& s, int cap = 512);

}  // namespace bis

#endif
