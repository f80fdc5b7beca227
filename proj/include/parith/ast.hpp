#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parith/flavor.hpp"

namespace parith {

enum class ConstKind : std::uint8_t { Zero, One };

// Numerical terms: number variables, the flavored 0/1 constants, sums and
// products. Immutable trees shared by value.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, Add, Mul };

  static Term var(std::string name);
  static Term constant(ConstKind which, Flavor flavor);
  static Term zero(Flavor fl) { return constant(ConstKind::Zero, fl); }
  static Term one(Flavor fl) { return constant(ConstKind::One, fl); }
  static Term add(Term lhs, Term rhs);
  static Term mul(Term lhs, Term rhs);

  Kind kind() const;
  const std::string& var_name() const;
  ConstKind const_kind() const;
  Flavor const_flavor() const;
  const Term& lhs() const;
  const Term& rhs() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class RelSym : std::uint8_t { Eq, Lt };

// Formulas of the two-sorted language: flavored atomic relations and
// membership, the propositional connectives, sorted quantifiers, and the
// postfix rank operators.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    Eq, Lt, Mem,
    Not, And, Or, Implies, Iff,
    ForallNum, ExistsNum, ForallSet, ExistsSet,
    RankOp,
  };

  static Formula eq(Term lhs, Term rhs, Flavor flavor);
  static Formula lt(Term lhs, Term rhs, Flavor flavor);
  static Formula mem(Term element, std::string set_var, Flavor flavor);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula forall_num(std::string var, Formula body);
  static Formula exists_num(std::string var, Formula body);
  static Formula forall_set(std::string var, Formula body);
  static Formula exists_set(std::string var, Formula body);
  // `op` must be a ranked flavor; never s or bare w.
  static Formula rank_op(Formula body, Flavor op);

  Kind kind() const;
  bool is_atom() const;
  bool is_quantifier() const;
  bool is_binary() const;

  // Atom accessors.
  const Term& atom_lhs() const;
  const Term& atom_rhs() const;       // Eq/Lt only
  const std::string& mem_set() const; // Mem only
  Flavor atom_flavor() const;

  // Connective / quantifier / rank accessors.
  const Formula& child() const;       // Not, RankOp, quantifier body
  const Formula& left() const;
  const Formula& right() const;
  const std::string& bound_var() const;
  Flavor rank_flavor() const;         // RankOp only

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula quantifier_node(Kind k, std::string var, Formula body);
  std::shared_ptr<const Node> node_;
};

// Canonical text. parse(print(f)) reconstructs f exactly.
std::string print(const Term& t);
std::string print(const Formula& f);

struct FreeVars {
  std::set<std::string> num;
  std::set<std::string> set;
};

FreeVars free_vars(const Formula& f);
std::set<std::string> term_vars(const Term& t);

// Capture-avoiding substitution of a term for a number variable; bound
// variables are renamed when they would capture. Throws SortError when `var`
// names a set variable (uppercase first letter).
Formula substitute(const Formula& f, const std::string& var, const Term& t);
Term substitute(const Term& in, const std::string& var, const Term& t);

// Variable sort convention of the concrete grammar: lowercase first letter
// means number sort, uppercase means set sort.
bool is_set_var_name(const std::string& name);

// Renames every bound variable to a canonical position-derived name;
// alpha-equivalent formulas map to equal trees.
Formula canonicalize_bound(const Formula& f);

bool alpha_equal(const Formula& a, const Formula& b);

}  // namespace parith
