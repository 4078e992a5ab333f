#include "bis/term.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "bis/errors.hpp"

namespace bis {

TermPtr Term::zero() { return std::make_shared<Term>(Term{Kind::Zero, "", nullptr, nullptr}); }
TermPtr Term::variable(std::string name) {
  return std::make_shared<Term>(Term{Kind::Var, std::move(name), nullptr, nullptr});
}
TermPtr Term::mul(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::Mul, "", std::move(a), std::move(b)});
}
TermPtr Term::inv(TermPtr a) {
  return std::make_shared<Term>(Term{Kind::Inv, "", std::move(a), nullptr});
}
TermPtr Term::skew_diff(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::SkewDiff, "", std::move(a), std::move(b)});
}
TermPtr Term::skew_add(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::SkewAdd, "", std::move(a), std::move(b)});
}

namespace {

struct Parser {
  const std::string& in;
  const std::vector<std::string>& alphabet;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw InputError("syntax error at column " + std::to_string(pos + 1) + ": " + what);
  }
  void skip_ws() {
    while (pos < in.size() && (in[pos] == ' ' || in[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < in.size() && in[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  TermPtr parse() {
    TermPtr t = add();
    skip_ws();
    if (pos != in.size()) fail("unexpected input");
    return t;
  }

  TermPtr add() {
    TermPtr t = sd();
    while (eat('+')) t = Term::skew_add(t, sd());
    return t;
  }
  TermPtr sd() {
    TermPtr t = mul();
    while (eat('~')) t = Term::skew_diff(t, mul());
    return t;
  }
  TermPtr mul() {
    TermPtr t = unary();
    while (eat('*')) t = Term::mul(t, unary());
    return t;
  }
  TermPtr unary() {
    TermPtr t = atom();
    while (true) {
      skip_ws();
      if (pos < in.size() && in[pos] == '\'') {
        ++pos;
        t = Term::inv(t);
      } else {
        break;
      }
    }
    return t;
  }
  TermPtr atom() {
    skip_ws();
    if (pos >= in.size()) fail("expected a term");
    char c = in[pos];
    if (c == '0') {
      ++pos;
      return Term::zero();
    }
    if (c == '(') {
      ++pos;
      TermPtr t = add();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos;
      ++pos;
      while (pos < in.size() &&
             ((in[pos] >= 'a' && in[pos] <= 'z') || (in[pos] >= '0' && in[pos] <= '9')))
        ++pos;
      std::string ident = in.substr(start, pos - start);
      // d(t) and r(t) sugar
      if ((ident == "d" || ident == "r") && pos < in.size() && in[pos] == '(') {
        ++pos;
        TermPtr t = add();
        if (!eat(')')) fail("expected ')'");
        if (ident == "d") return Term::mul(Term::inv(t), t);
        return Term::mul(t, Term::inv(t));
      }
      if (std::find(alphabet.begin(), alphabet.end(), ident) == alphabet.end()) {
        pos = start;
        fail("identifier '" + ident + "' is not in the alphabet");
      }
      return Term::variable(ident);
    }
    fail("expected a term");
  }
};

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::SkewAdd: return 0;
    case Term::Kind::SkewDiff: return 1;
    case Term::Kind::Mul: return 2;
    case Term::Kind::Inv: return 3;
    default: return 4;
  }
}

void print_rec(const TermPtr& t, int parent_prec, std::string& out) {
  int prec = precedence(t->kind);
  switch (t->kind) {
    case Term::Kind::Zero: out += "0"; return;
    case Term::Kind::Var: out += t->var; return;
    case Term::Kind::Inv:
      if (precedence(t->left->kind) < prec) {
        out += "(";
        print_rec(t->left, 0, out);
        out += ")";
      } else {
        print_rec(t->left, prec, out);
      }
      out += "'";
      return;
    default: {
      bool need = prec < parent_prec;
      if (need) out += "(";
      print_rec(t->left, prec, out);
      out += t->kind == Term::Kind::Mul ? "*" : t->kind == Term::Kind::SkewDiff ? "~" : "+";
      // left associativity: the right child needs strictly tighter binding
      print_rec(t->right, prec + 1, out);
      if (need) out += ")";
      return;
    }
  }
}

}  // namespace

TermPtr parse_term(const std::string& input, const std::vector<std::string>& alphabet) {
  Parser p{input, alphabet};
  return p.parse();
}

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, 0, out);
  return out;
}

std::vector<std::string> term_variables(const TermPtr& t) {
  std::set<std::string> vars;
  std::vector<TermPtr> stack = {t};
  while (!stack.empty()) {
    TermPtr cur = stack.back();
    stack.pop_back();
    if (cur->kind == Term::Kind::Var) vars.insert(cur->var);
    if (cur->left) stack.push_back(cur->left);
    if (cur->right) stack.push_back(cur->right);
  }
  return {vars.begin(), vars.end()};
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Inv: return term_equal(a->left, b->left);
    default: return term_equal(a->left, b->left) && term_equal(a->right, b->right);
  }
}

int evaluate_term(const TermPtr& t, const std::map<std::string, int>& assignment,
                  const Bias& s) {
  switch (t->kind) {
    case Term::Kind::Zero: return s.zero();
    case Term::Kind::Var: {
      auto it = assignment.find(t->var);
      if (it == assignment.end()) throw InputError("unassigned variable " + t->var);
      return it->second;
    }
    case Term::Kind::Inv: return s.inv(evaluate_term(t->left, assignment, s));
    case Term::Kind::Mul:
      return s.mul(evaluate_term(t->left, assignment, s),
                   evaluate_term(t->right, assignment, s));
    case Term::Kind::SkewDiff:
      return s.skew_diff(evaluate_term(t->left, assignment, s),
                         evaluate_term(t->right, assignment, s));
    case Term::Kind::SkewAdd:
      return s.skew_add(evaluate_term(t->left, assignment, s),
                        evaluate_term(t->right, assignment, s));
  }
  throw std::logic_error("evaluate_term: bad kind");
}

namespace {

int eval_indexed(const TermPtr& t, const std::vector<int>& val,
                 const std::vector<std::string>& vars, const Bias& s) {
  switch (t->kind) {
    case Term::Kind::Zero: return s.zero();
    case Term::Kind::Var: {
      auto it = std::lower_bound(vars.begin(), vars.end(), t->var);
      return val[it - vars.begin()];
    }
    case Term::Kind::Inv: return s.inv(eval_indexed(t->left, val, vars, s));
    case Term::Kind::Mul:
      return s.mul(eval_indexed(t->left, val, vars, s), eval_indexed(t->right, val, vars, s));
    case Term::Kind::SkewDiff:
      return s.skew_diff(eval_indexed(t->left, val, vars, s),
                         eval_indexed(t->right, val, vars, s));
    case Term::Kind::SkewAdd:
      return s.skew_add(eval_indexed(t->left, val, vars, s),
                        eval_indexed(t->right, val, vars, s));
  }
  throw std::logic_error("eval_indexed: bad kind");
}

}  // namespace

IdentityCheck satisfies_identity(const Bias& s, const TermPtr& lhs, const TermPtr& rhs,
                                 std::uint64_t eval_cap, int threads) {
  std::set<std::string> var_set;
  for (auto& v : term_variables(lhs)) var_set.insert(v);
  for (auto& v : term_variables(rhs)) var_set.insert(v);
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  int k = static_cast<int>(vars.size());
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(s.size());
    if (total > eval_cap)
      throw ResourceError("satisfies_identity: assignment space exceeds eval cap " +
                          std::to_string(eval_cap));
  }
  auto value_at = [&](std::uint64_t idx) {
    std::vector<int> val(k);
    for (int i = k - 1; i >= 0; --i) {
      val[i] = static_cast<int>(idx % s.size());
      idx /= s.size();
    }
    return val;
  };
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::vector<int> val = value_at(idx);
      if (eval_indexed(lhs, val, vars, s) != eval_indexed(rhs, val, vars, s)) return idx;
    }
    return std::nullopt;
  };
  std::optional<std::uint64_t> first;
  if (threads <= 1 || total < 4096) {
    first = scan(0, total);
  } else {
    int nt = std::min<int>(threads, 64);
    std::vector<std::future<std::optional<std::uint64_t>>> futs;
    std::uint64_t chunk = (total + nt - 1) / nt;
    for (int i = 0; i < nt; ++i) {
      std::uint64_t lo = i * chunk, hi = std::min<std::uint64_t>(total, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& f : futs) {
      auto r = f.get();
      if (r && (!first || *r < *first)) first = r;
    }
  }
  IdentityCheck out;
  out.holds = !first.has_value();
  if (first) {
    std::vector<int> val = value_at(*first);
    for (int i = 0; i < k; ++i) out.witness[vars[i]] = val[i];
  }
  return out;
}

}  // namespace bis
