#include "parith/ast.hpp"

#include <cassert>
#include <cctype>

#include "parith/errors.hpp"

namespace parith {

struct Term::Node {
  Kind kind;
  std::string name;          // Var
  ConstKind cnst{};          // Const
  Flavor flavor;             // Const
  std::vector<Term> child;   // Add/Mul: [lhs, rhs]
};

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::constant(ConstKind which, Flavor flavor) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->cnst = which;
  n->flavor = flavor;
  return Term(std::move(n));
}

Term Term::add(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->child = {std::move(lhs), std::move(rhs)};
  return Term(std::move(n));
}

Term Term::mul(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->child = {std::move(lhs), std::move(rhs)};
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::var_name() const { assert(node_->kind == Kind::Var); return node_->name; }
ConstKind Term::const_kind() const { assert(node_->kind == Kind::Const); return node_->cnst; }
Flavor Term::const_flavor() const { assert(node_->kind == Kind::Const); return node_->flavor; }
const Term& Term::lhs() const { assert(node_->child.size() == 2); return node_->child[0]; }
const Term& Term::rhs() const { assert(node_->child.size() == 2); return node_->child[1]; }

bool operator==(const Term& x, const Term& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Term::Kind::Var: return x.var_name() == y.var_name();
    case Term::Kind::Const:
      return x.const_kind() == y.const_kind() && x.const_flavor() == y.const_flavor();
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
  return false;
}

struct Formula::Node {
  Kind kind;
  std::vector<Term> terms;      // atoms: [lhs] or [lhs, rhs]
  std::string set_var;          // Mem
  Flavor flavor;                // atom flavor or rank-op flavor
  std::vector<Formula> child;   // subformulas
  std::string var;              // quantifier binder
};

Formula Formula::eq(Term lhs, Term rhs, Flavor flavor) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Eq;
  n->terms = {std::move(lhs), std::move(rhs)};
  n->flavor = flavor;
  return Formula(std::move(n));
}

Formula Formula::lt(Term lhs, Term rhs, Flavor flavor) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lt;
  n->terms = {std::move(lhs), std::move(rhs)};
  n->flavor = flavor;
  return Formula(std::move(n));
}

Formula Formula::mem(Term element, std::string set_var, Flavor flavor) {
  if (!is_set_var_name(set_var))
    throw SortError("membership requires a set variable, got " + set_var);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mem;
  n->terms = {std::move(element)};
  n->set_var = std::move(set_var);
  n->flavor = flavor;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->child = {std::move(f)};
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->child = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->child = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::implication(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->child = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::equivalence(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->child = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::quantifier_node(Kind k, std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->var = std::move(var);
  n->child = {std::move(body)};
  return Formula(std::move(n));
}

Formula Formula::forall_num(std::string var, Formula body) {
  if (is_set_var_name(var)) throw SortError("number-sort binder given set variable " + var);
  return quantifier_node(Kind::ForallNum, std::move(var), std::move(body));
}
Formula Formula::exists_num(std::string var, Formula body) {
  if (is_set_var_name(var)) throw SortError("number-sort binder given set variable " + var);
  return quantifier_node(Kind::ExistsNum, std::move(var), std::move(body));
}
Formula Formula::forall_set(std::string var, Formula body) {
  if (!is_set_var_name(var)) throw SortError("set-sort binder given number variable " + var);
  return quantifier_node(Kind::ForallSet, std::move(var), std::move(body));
}
Formula Formula::exists_set(std::string var, Formula body) {
  if (!is_set_var_name(var)) throw SortError("set-sort binder given number variable " + var);
  return quantifier_node(Kind::ExistsSet, std::move(var), std::move(body));
}

Formula Formula::rank_op(Formula body, Flavor op) {
  if (!op.is_ranked()) throw RankError("rank operator requires a ranked flavor, got " + op.text());
  auto n = std::make_shared<Node>();
  n->kind = Kind::RankOp;
  n->child = {std::move(body)};
  n->flavor = op;
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_atom() const {
  auto k = node_->kind;
  return k == Kind::Eq || k == Kind::Lt || k == Kind::Mem;
}

bool Formula::is_quantifier() const {
  auto k = node_->kind;
  return k == Kind::ForallNum || k == Kind::ExistsNum || k == Kind::ForallSet ||
         k == Kind::ExistsSet;
}

bool Formula::is_binary() const {
  auto k = node_->kind;
  return k == Kind::And || k == Kind::Or || k == Kind::Implies || k == Kind::Iff;
}

const Term& Formula::atom_lhs() const { assert(is_atom()); return node_->terms[0]; }
const Term& Formula::atom_rhs() const { assert(node_->terms.size() == 2); return node_->terms[1]; }
const std::string& Formula::mem_set() const { assert(node_->kind == Kind::Mem); return node_->set_var; }
Flavor Formula::atom_flavor() const { assert(is_atom()); return node_->flavor; }

const Formula& Formula::child() const { assert(!node_->child.empty()); return node_->child[0]; }
const Formula& Formula::left() const { assert(is_binary()); return node_->child[0]; }
const Formula& Formula::right() const { assert(is_binary()); return node_->child[1]; }
const std::string& Formula::bound_var() const { assert(is_quantifier()); return node_->var; }
Flavor Formula::rank_flavor() const { assert(node_->kind == Kind::RankOp); return node_->flavor; }

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      return x.atom_flavor() == y.atom_flavor() && x.atom_lhs() == y.atom_lhs() &&
             x.atom_rhs() == y.atom_rhs();
    case Formula::Kind::Mem:
      return x.atom_flavor() == y.atom_flavor() && x.mem_set() == y.mem_set() &&
             x.atom_lhs() == y.atom_lhs();
    case Formula::Kind::Not:
      return x.child() == y.child();
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return x.left() == y.left() && x.right() == y.right();
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet:
      return x.bound_var() == y.bound_var() && x.child() == y.child();
    case Formula::Kind::RankOp:
      return x.rank_flavor() == y.rank_flavor() && x.child() == y.child();
  }
  return false;
}

bool is_set_var_name(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string const_text(ConstKind c, Flavor fl) {
  return std::string(c == ConstKind::Zero ? "0_" : "1_") + fl.text();
}

// Operands of + and * are parenthesized unless they are leaves.
std::string print_term_operand(const Term& t) {
  if (t.kind() == Term::Kind::Var || t.kind() == Term::Kind::Const) return print(t);
  return "(" + print(t) + ")";
}

// Binary connectives and quantifiers are parenthesized when nested inside a
// binary connective; atoms, negation and rank operators delimit themselves.
std::string print_formula_operand(const Formula& f) {
  if (f.is_binary() || f.is_quantifier()) return "(" + print(f) + ")";
  return print(f);
}

std::string rank_suffix(Flavor op) {
  if (op.kind() == FlavorKind::WRanked) return "^(" + std::to_string(op.rank()) + ")";
  return "^[" + std::to_string(op.rank()) + "]";
}

}  // namespace

std::string print(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.var_name();
    case Term::Kind::Const: return const_text(t.const_kind(), t.const_flavor());
    case Term::Kind::Add: return print_term_operand(t.lhs()) + " + " + print_term_operand(t.rhs());
    case Term::Kind::Mul: return print_term_operand(t.lhs()) + " * " + print_term_operand(t.rhs());
  }
  return "?";
}

std::string print(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return print(f.atom_lhs()) + " =" + f.atom_flavor().text() + " " + print(f.atom_rhs());
    case Formula::Kind::Lt:
      return print(f.atom_lhs()) + " <" + f.atom_flavor().text() + " " + print(f.atom_rhs());
    case Formula::Kind::Mem:
      return print(f.atom_lhs()) + " in_" + f.atom_flavor().text() + " " + f.mem_set();
    case Formula::Kind::Not:
      return "!(" + print(f.child()) + ")";
    case Formula::Kind::And:
      return print_formula_operand(f.left()) + " & " + print_formula_operand(f.right());
    case Formula::Kind::Or:
      return print_formula_operand(f.left()) + " | " + print_formula_operand(f.right());
    case Formula::Kind::Implies:
      return print_formula_operand(f.left()) + " -> " + print_formula_operand(f.right());
    case Formula::Kind::Iff:
      return print_formula_operand(f.left()) + " <-> " + print_formula_operand(f.right());
    case Formula::Kind::ForallNum:
    case Formula::Kind::ForallSet:
      return "forall " + f.bound_var() + ". " + print(f.child());
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ExistsSet:
      return "exists " + f.bound_var() + ". " + print(f.child());
    case Formula::Kind::RankOp:
      return "(" + print(f.child()) + ")" + rank_suffix(f.rank_flavor());
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Free variables and substitution

std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  auto walk = [&](auto&& self, const Term& u) -> void {
    switch (u.kind()) {
      case Term::Kind::Var: out.insert(u.var_name()); break;
      case Term::Kind::Const: break;
      case Term::Kind::Add:
      case Term::Kind::Mul:
        self(self, u.lhs());
        self(self, u.rhs());
        break;
    }
  };
  walk(walk, t);
  return out;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, FreeVars& out) {
  auto is_bound = [&](const std::string& v) {
    for (const auto& b : bound)
      if (b == v) return true;
    return false;
  };
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      for (const auto& v : term_vars(f.atom_lhs()))
        if (!is_bound(v)) out.num.insert(v);
      for (const auto& v : term_vars(f.atom_rhs()))
        if (!is_bound(v)) out.num.insert(v);
      break;
    case Formula::Kind::Mem:
      for (const auto& v : term_vars(f.atom_lhs()))
        if (!is_bound(v)) out.num.insert(v);
      if (!is_bound(f.mem_set())) out.set.insert(f.mem_set());
      break;
    case Formula::Kind::Not:
    case Formula::Kind::RankOp:
      collect_free(f.child(), bound, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      break;
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet:
      bound.push_back(f.bound_var());
      collect_free(f.child(), bound, out);
      bound.pop_back();
      break;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace

FreeVars free_vars(const Formula& f) {
  FreeVars out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

Term substitute(const Term& in, const std::string& var, const Term& t) {
  switch (in.kind()) {
    case Term::Kind::Var: return in.var_name() == var ? t : in;
    case Term::Kind::Const: return in;
    case Term::Kind::Add: return Term::add(substitute(in.lhs(), var, t), substitute(in.rhs(), var, t));
    case Term::Kind::Mul: return Term::mul(substitute(in.lhs(), var, t), substitute(in.rhs(), var, t));
  }
  return in;
}

namespace {

Formula substitute_impl(const Formula& f, const std::string& var, const Term& t) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(substitute(f.atom_lhs(), var, t), substitute(f.atom_rhs(), var, t),
                         f.atom_flavor());
    case Formula::Kind::Lt:
      return Formula::lt(substitute(f.atom_lhs(), var, t), substitute(f.atom_rhs(), var, t),
                         f.atom_flavor());
    case Formula::Kind::Mem:
      return Formula::mem(substitute(f.atom_lhs(), var, t), f.mem_set(), f.atom_flavor());
    case Formula::Kind::Not:
      return Formula::negation(substitute_impl(f.child(), var, t));
    case Formula::Kind::RankOp:
      return Formula::rank_op(substitute_impl(f.child(), var, t), f.rank_flavor());
    case Formula::Kind::And:
      return Formula::conjunction(substitute_impl(f.left(), var, t),
                                  substitute_impl(f.right(), var, t));
    case Formula::Kind::Or:
      return Formula::disjunction(substitute_impl(f.left(), var, t),
                                  substitute_impl(f.right(), var, t));
    case Formula::Kind::Implies:
      return Formula::implication(substitute_impl(f.left(), var, t),
                                  substitute_impl(f.right(), var, t));
    case Formula::Kind::Iff:
      return Formula::equivalence(substitute_impl(f.left(), var, t),
                                  substitute_impl(f.right(), var, t));
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet: {
      const std::string& bv = f.bound_var();
      if (bv == var) return f;  // shadowed occurrence
      auto tv = term_vars(t);
      Formula body = f.child();
      std::string use = bv;
      if (tv.count(bv)) {
        // The binder would capture a variable of t; rename it first.
        auto avoid = tv;
        FreeVars fv = free_vars(body);
        avoid.insert(fv.num.begin(), fv.num.end());
        avoid.insert(fv.set.begin(), fv.set.end());
        avoid.insert(var);
        use = fresh_name(bv, avoid);
        body = substitute_impl(body, bv, Term::var(use));
      }
      Formula new_body = substitute_impl(body, var, t);
      switch (f.kind()) {
        case Formula::Kind::ForallNum: return Formula::forall_num(use, new_body);
        case Formula::Kind::ExistsNum: return Formula::exists_num(use, new_body);
        case Formula::Kind::ForallSet: return Formula::forall_set(use, new_body);
        default: return Formula::exists_set(use, new_body);
      }
    }
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  if (is_set_var_name(var))
    throw SortError("cannot substitute a term for set variable " + var);
  return substitute_impl(f, var, t);
}

// ---------------------------------------------------------------------------
// Alpha-equivalence via canonical renaming of binders

namespace {

Formula rename_bound(const Formula& f, std::vector<std::pair<std::string, std::string>>& env,
                     int& counter) {
  auto lookup = [&](const std::string& name) -> std::string {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == name) return it->second;
    return name;
  };
  auto rename_term = [&](auto&& self, const Term& t) -> Term {
    switch (t.kind()) {
      case Term::Kind::Var: return Term::var(lookup(t.var_name()));
      case Term::Kind::Const: return t;
      case Term::Kind::Add: return Term::add(self(self, t.lhs()), self(self, t.rhs()));
      case Term::Kind::Mul: return Term::mul(self(self, t.lhs()), self(self, t.rhs()));
    }
    return t;
  };
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(rename_term(rename_term, f.atom_lhs()),
                         rename_term(rename_term, f.atom_rhs()), f.atom_flavor());
    case Formula::Kind::Lt:
      return Formula::lt(rename_term(rename_term, f.atom_lhs()),
                         rename_term(rename_term, f.atom_rhs()), f.atom_flavor());
    case Formula::Kind::Mem:
      return Formula::mem(rename_term(rename_term, f.atom_lhs()), lookup(f.mem_set()),
                          f.atom_flavor());
    case Formula::Kind::Not:
      return Formula::negation(rename_bound(f.child(), env, counter));
    case Formula::Kind::RankOp:
      return Formula::rank_op(rename_bound(f.child(), env, counter), f.rank_flavor());
    case Formula::Kind::And:
      return Formula::conjunction(rename_bound(f.left(), env, counter),
                                  rename_bound(f.right(), env, counter));
    case Formula::Kind::Or:
      return Formula::disjunction(rename_bound(f.left(), env, counter),
                                  rename_bound(f.right(), env, counter));
    case Formula::Kind::Implies:
      return Formula::implication(rename_bound(f.left(), env, counter),
                                  rename_bound(f.right(), env, counter));
    case Formula::Kind::Iff:
      return Formula::equivalence(rename_bound(f.left(), env, counter),
                                  rename_bound(f.right(), env, counter));
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet: {
      bool set_sort = f.kind() == Formula::Kind::ForallSet || f.kind() == Formula::Kind::ExistsSet;
      std::string canon = (set_sort ? "B" : "b") + std::to_string(counter++);
      env.emplace_back(f.bound_var(), canon);
      Formula body = rename_bound(f.child(), env, counter);
      env.pop_back();
      switch (f.kind()) {
        case Formula::Kind::ForallNum: return Formula::forall_num(canon, body);
        case Formula::Kind::ExistsNum: return Formula::exists_num(canon, body);
        case Formula::Kind::ForallSet: return Formula::forall_set(canon, body);
        default: return Formula::exists_set(canon, body);
      }
    }
  }
  return f;
}

}  // namespace

Formula canonicalize_bound(const Formula& f) {
  std::vector<std::pair<std::string, std::string>> env;
  int counter = 0;
  return rename_bound(f, env, counter);
}

bool alpha_equal(const Formula& a, const Formula& b) {
  return canonicalize_bound(a) == canonicalize_bound(b);
}

}  // namespace parith
