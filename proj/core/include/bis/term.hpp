#ifndef BIS_TERM_HPP
#define BIS_TERM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bis/bias.hpp"

namespace bis {

// Terms in the signature (0, ^-1, *, skew difference, skew addition).
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Zero, Var, Mul, Inv, SkewDiff, SkewAdd };
  Kind kind;
  std::string var;      // Kind::Var
  TermPtr left, right;  // binary ops; Inv uses left only

  static TermPtr zero();
  static TermPtr variable(std::string name);
  static TermPtr mul(TermPtr a, TermPtr b);
  static TermPtr inv(TermPtr a);
  static TermPtr skew_diff(TermPtr a, TermPtr b);
  static TermPtr skew_add(TermPtr a, TermPtr b);
};

// Grammar, loosest binding first:
//   term  := add
//   add   := sd ('+' sd)*           skew addition, left associative
//   sd    := mul ('~' mul)*         skew difference, left associative
//   mul   := unary ('*' unary)*
//   unary := atom "'"*              postfix inverse
//   atom  := '0' | ident | '(' term ')'
//   ident := [a-z][a-z0-9]*
// d(t) and r(t) are accepted as sugar for t'*t and t*t'.
// Whitespace is insignificant.  Identifiers must lie in the alphabet.
TermPtr parse_term(const std::string& input, const std::vector<std::string>& alphabet);

// Prints with minimal parentheses; parse(print(t)) == t structurally.
std::string print_term(const TermPtr& t);

std::vector<std::string> term_variables(const TermPtr& t);

bool term_equal(const TermPtr& a, const TermPtr& b);

int evaluate_term(const TermPtr& t, const std::map<std::string, int>& assignment,
                  const Bias& s);

struct IdentityCheck {
  bool holds = false;
  std::map<std::string, int> witness;  // meaningful when !holds
};

// Quantifies over all assignments of the terms' variables, exhaustively.
// `eval_cap` bounds |S|^(#vars); `threads` > 1 splits the assignment space
// deterministically.
IdentityCheck satisfies_identity(const Bias& s, const TermPtr& lhs, const TermPtr& rhs,
                                 std::uint64_t eval_cap = 10000000ULL, int threads = 1);

}  // namespace bis

#endif
