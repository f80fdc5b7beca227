#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parith/ast.hpp"
#include "parith/bignat.hpp"
#include "parith/godel.hpp"
#include "parith/truth.hpp"

namespace parith {

// A flavored natural: one point of a structure's carrier.
struct Element {
  std::uint64_t magnitude = 0;
  Flavor flavor;

  friend bool operator==(const Element& a, const Element& b) {
    return a.magnitude == b.magnitude && a.flavor == b.flavor;
  }
  friend bool operator<(const Element& a, const Element& b) {
    if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
    return a.flavor < b.flavor;
  }
  std::string text() const { return std::to_string(magnitude) + "_" + flavor.text(); }
};

// A possibly-inconsistent set: a truth value for every carrier element.
// Elements outside the table read as False.
class MembershipTable {
 public:
  MembershipTable() = default;

  void set(const Element& e, TruthValue v) { entries_[e] = v; }
  TruthValue value_for(const Element& e) const {
    auto it = entries_.find(e);
    return it == entries_.end() ? TruthValue::f() : it->second;
  }
  const std::map<Element, TruthValue>& entries() const { return entries_; }
  bool operator==(const MembershipTable& o) const { return entries_ == o.entries_; }

 private:
  std::map<Element, TruthValue> entries_;
};

enum class SetClassification {
  SConsistent,
  WInconsistent,
  WRankedInconsistent,
  StrictRankedInconsistent,
  Mixed,
};

struct Classification {
  SetClassification kind;
  unsigned rank = 0;  // for the two ranked classifications
  std::string text() const;
};

struct Assignment {
  std::map<std::string, Element> num;
  std::map<std::string, const MembershipTable*> set;
  std::string text() const;
};

// A finite paraconsistent structure: carrier, subset range, arithmetic, the
// flavored 0/1 families, and the flavored relation and membership semantics.
struct Structure {
  std::vector<Element> carrier;
  std::vector<MembershipTable> subsets;
  std::function<Element(const Element&, const Element&)> add;
  std::function<Element(const Element&, const Element&)> mul;
  std::function<Element(Flavor)> zero;
  std::function<Element(Flavor)> one;
  std::function<TruthValue(RelSym, Flavor, const Element&, const Element&)> rel;
  std::function<TruthValue(const Element&, const MembershipTable&, Flavor)> mem;
};

// Canonical semantics shared by the intended finite models.
//  - arithmetic acts on magnitudes; the result flavor is the join
//  - =s / <s are classical on magnitudes
//  - a non-s equality holds outright on equal magnitudes and is Both(a) on
//    unequal magnitudes when either operand carries flavor a
//  - a non-s order is Both(a) on magnitude-true comparisons when either
//    operand carries flavor a, plainly true otherwise, and false whenever
//    the magnitudes refute it (so least-element searches stay decidable)
Element canonical_add(const Element& a, const Element& b);
Element canonical_mul(const Element& a, const Element& b);
TruthValue canonical_rel(RelSym r, Flavor alpha, const Element& a, const Element& b);
TruthValue canonical_mem(const Element& e, const MembershipTable& table, Flavor alpha);

// The intended finite model: carrier of all magnitudes <= bound with flavors
// s, w, w(0..max_rank), w[0..max_rank]; subset range of every magnitude-set
// lifted flavor-blind, plus one all-Both(w) table. bound >= 2.
Structure canonical_structure(std::uint64_t bound, unsigned max_rank);

Element eval_term(const Structure& s, const Assignment& a, const Term& t);
TruthValue eval(const Structure& s, const Assignment& a, const Formula& f);

Classification classify(const Structure& s, const MembershipTable& table);

struct DefinabilityOptions {
  // At most this many formulas are drawn from the pool.
  std::size_t count_cap = 10000;
  // Stop at the cap instead of raising ResourceError.
  bool truncate = false;
  // Restrict candidate elements (and the uniqueness test) to one flavor
  // slice; empty means the whole carrier.
  std::optional<Flavor> slice;
};

// Elements that are the unique satisfier, within the slice, of some
// enumerated formula with exactly one free number variable and no free set
// variable, of code <= limit.
std::vector<Element> definable_elements(const Structure& s, const GodelCode& limit,
                                        const DefinabilityOptions& opts = {});

enum class ComprehensionScheme { Classical, Weak, WeakRanked, StrictInconsistent };

// Classical scheme: the table of designated instances (X must not be free).
// The unrestricted schemes run a knowledge-monotone fixed-point iteration
// from the all-Both table; Both entries may resolve to classical values but
// never the other way, and a classical conflict or an undesignated
// biconditional raises NoFixpoint.
MembershipTable solve_comprehension(const Structure& s, const Formula& phi,
                                    ComprehensionScheme scheme, unsigned rank = 0);

struct EntailmentResult {
  bool entails = true;
  std::optional<Assignment> countermodel;
};

// Semantic consequence over the structure: every assignment making all
// premises designated makes the conclusion designated.
EntailmentResult entails(const Structure& s, const std::vector<Formula>& premises,
                         const Formula& conclusion, std::size_t assignment_cap = 2000000);

}  // namespace parith
