#include "parith/model.hpp"

#include <algorithm>

#include "parith/errors.hpp"

namespace parith {

std::string Classification::text() const {
  switch (kind) {
    case SetClassification::SConsistent: return "s-consistent";
    case SetClassification::WInconsistent: return "w-inconsistent";
    case SetClassification::WRankedInconsistent:
      return "w(" + std::to_string(rank) + ")-inconsistent";
    case SetClassification::StrictRankedInconsistent:
      return "w[" + std::to_string(rank) + "]-inconsistent";
    case SetClassification::Mixed: return "mixed";
  }
  return "?";
}

std::string Assignment::text() const {
  std::string out;
  for (const auto& [name, e] : num) {
    if (!out.empty()) out += ", ";
    out += name + "=" + e.text();
  }
  for (const auto& [name, table] : set) {
    if (!out.empty()) out += ", ";
    out += name + "={";
    bool first = true;
    for (const auto& [e, v] : table->entries()) {
      if (!is_designated(v)) continue;
      if (!first) out += ",";
      out += e.text() + ":" + v.text();
      first = false;
    }
    out += "}";
  }
  return out.empty() ? "(closed)" : out;
}

// ---------------------------------------------------------------------------
// Canonical semantics

Element canonical_add(const Element& a, const Element& b) {
  return Element{a.magnitude + b.magnitude, flavor_join(a.flavor, b.flavor)};
}

Element canonical_mul(const Element& a, const Element& b) {
  return Element{a.magnitude * b.magnitude, flavor_join(a.flavor, b.flavor)};
}

TruthValue canonical_rel(RelSym r, Flavor alpha, const Element& a, const Element& b) {
  bool flavor_hit = a.flavor == alpha || b.flavor == alpha;
  if (r == RelSym::Eq) {
    bool equal = a.magnitude == b.magnitude;
    if (alpha.is_s()) return TruthValue::classical(equal);
    if (equal) return TruthValue::t();
    return flavor_hit ? TruthValue::both(alpha) : TruthValue::f();
  }
  bool less = a.magnitude < b.magnitude;
  if (alpha.is_s()) return TruthValue::classical(less);
  if (!less) return TruthValue::f();
  return flavor_hit ? TruthValue::both(alpha) : TruthValue::t();
}

TruthValue canonical_mem(const Element& e, const MembershipTable& table, Flavor alpha) {
  TruthValue v = table.value_for(e);
  // The strictly consistent reading collapses contradictions to holding.
  if (alpha.is_s() && v.is_both()) return TruthValue::t();
  return v;
}

Structure canonical_structure(std::uint64_t bound, unsigned max_rank) {
  if (bound < 2) throw Error("canonical structure requires bound >= 2");
  if (bound > 20) throw ResourceError("canonical structure subset range explodes past bound 20");
  Structure s;
  std::vector<Flavor> flavors;
  flavors.push_back(Flavor::s());
  flavors.push_back(Flavor::w());
  for (unsigned r = 0; r <= max_rank; ++r) {
    flavors.push_back(Flavor::w_ranked(r));
    flavors.push_back(Flavor::strict_ranked(r));
  }
  std::sort(flavors.begin(), flavors.end());
  for (std::uint64_t mag = 0; mag <= bound; ++mag)
    for (Flavor fl : flavors) s.carrier.push_back(Element{mag, fl});

  // Every magnitude-set, lifted flavor-blind, in subset order of the
  // magnitude bitmask; the empty table comes first.
  for (std::uint64_t mask = 0; mask < (1ull << (bound + 1)); ++mask) {
    MembershipTable t;
    for (const Element& e : s.carrier)
      t.set(e, TruthValue::classical((mask >> e.magnitude) & 1));
    s.subsets.push_back(std::move(t));
  }
  MembershipTable all_both;
  for (const Element& e : s.carrier) all_both.set(e, TruthValue::both(Flavor::w()));
  s.subsets.push_back(std::move(all_both));

  s.add = canonical_add;
  s.mul = canonical_mul;
  s.zero = [](Flavor fl) { return Element{0, fl}; };
  s.one = [](Flavor fl) { return Element{1, fl}; };
  s.rel = canonical_rel;
  s.mem = canonical_mem;
  return s;
}

// ---------------------------------------------------------------------------
// Evaluation

Element eval_term(const Structure& s, const Assignment& a, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = a.num.find(t.var_name());
      if (it == a.num.end()) throw UnboundVariable("unbound number variable " + t.var_name());
      return it->second;
    }
    case Term::Kind::Const:
      return t.const_kind() == ConstKind::Zero ? s.zero(t.const_flavor())
                                               : s.one(t.const_flavor());
    case Term::Kind::Add:
      return s.add(eval_term(s, a, t.lhs()), eval_term(s, a, t.rhs()));
    case Term::Kind::Mul:
      return s.mul(eval_term(s, a, t.lhs()), eval_term(s, a, t.rhs()));
  }
  throw Error("unreachable term kind");
}

TruthValue eval(const Structure& s, const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      return s.rel(f.kind() == Formula::Kind::Eq ? RelSym::Eq : RelSym::Lt, f.atom_flavor(),
                   eval_term(s, a, f.atom_lhs()), eval_term(s, a, f.atom_rhs()));
    case Formula::Kind::Mem: {
      auto it = a.set.find(f.mem_set());
      if (it == a.set.end()) throw UnboundVariable("unbound set variable " + f.mem_set());
      return s.mem(eval_term(s, a, f.atom_lhs()), *it->second, f.atom_flavor());
    }
    case Formula::Kind::Not:
      return negate(eval(s, a, f.child()));
    case Formula::Kind::And: {
      TruthValue l = eval(s, a, f.left());
      if (l.is_false()) return l;  // bottom of the order
      return conjoin(l, eval(s, a, f.right()));
    }
    case Formula::Kind::Or: {
      TruthValue l = eval(s, a, f.left());
      if (l.is_true()) return l;
      return disjoin(l, eval(s, a, f.right()));
    }
    case Formula::Kind::Implies:
      return implies(eval(s, a, f.left()), eval(s, a, f.right()));
    case Formula::Kind::Iff:
      return iff(eval(s, a, f.left()), eval(s, a, f.right()));
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsNum: {
      bool universal = f.kind() == Formula::Kind::ForallNum;
      TruthValue acc = universal ? TruthValue::t() : TruthValue::f();
      Assignment local = a;
      for (const Element& e : s.carrier) {
        local.num[f.bound_var()] = e;
        TruthValue v = eval(s, local, f.child());
        acc = universal ? conjoin(acc, v) : disjoin(acc, v);
        if (universal ? acc.is_false() : acc.is_true()) break;
      }
      return acc;
    }
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet: {
      bool universal = f.kind() == Formula::Kind::ForallSet;
      TruthValue acc = universal ? TruthValue::t() : TruthValue::f();
      Assignment local = a;
      for (const MembershipTable& table : s.subsets) {
        local.set[f.bound_var()] = &table;
        TruthValue v = eval(s, local, f.child());
        acc = universal ? conjoin(acc, v) : disjoin(acc, v);
        if (universal ? acc.is_false() : acc.is_true()) break;
      }
      return acc;
    }
    case Formula::Kind::RankOp:
      return apply_rank(eval(s, a, f.child()), f.rank_flavor());
  }
  throw Error("unreachable formula kind");
}

// ---------------------------------------------------------------------------
// Classification

Classification classify(const Structure& s, const MembershipTable& table) {
  bool all_classical = true;
  bool first_both = true;
  Flavor both_flavor = Flavor::w();
  bool uniform_both = true;
  std::size_t both_count = 0;
  for (const Element& e : s.carrier) {
    TruthValue v = table.value_for(e);
    if (v.is_classical()) continue;
    all_classical = false;
    ++both_count;
    if (first_both) {
      both_flavor = v.both_flavor();
      first_both = false;
    } else if (!(v.both_flavor() == both_flavor)) {
      uniform_both = false;
    }
  }
  if (all_classical) return {SetClassification::SConsistent, 0};
  if (both_count == s.carrier.size() && uniform_both) {
    switch (both_flavor.kind()) {
      case FlavorKind::W: return {SetClassification::WInconsistent, 0};
      case FlavorKind::WRanked: return {SetClassification::WRankedInconsistent, both_flavor.rank()};
      case FlavorKind::StrictRanked:
        return {SetClassification::StrictRankedInconsistent, both_flavor.rank()};
      default: break;
    }
  }
  return {SetClassification::Mixed, 0};
}

// ---------------------------------------------------------------------------
// Definability

std::vector<Element> definable_elements(const Structure& s, const GodelCode& limit,
                                        const DefinabilityOptions& opts) {
  EnumOptions eo;
  eo.count_cap = opts.count_cap;
  eo.truncate = opts.truncate;
  std::vector<Formula> pool = enumerate_formulas(limit, eo);

  std::vector<Element> slice;
  for (const Element& e : s.carrier)
    if (!opts.slice || e.flavor == *opts.slice) slice.push_back(e);

  std::vector<Element> found;
  auto already = [&](const Element& e) {
    return std::find(found.begin(), found.end(), e) != found.end();
  };
  for (const Formula& phi : pool) {
    FreeVars fv = free_vars(phi);
    if (fv.num.size() != 1 || !fv.set.empty()) continue;
    const std::string& var = *fv.num.begin();
    std::optional<Element> unique;
    bool many = false;
    Assignment a;
    for (const Element& e : slice) {
      a.num[var] = e;
      // Definitions pick elements out exactly; a contradictory match does
      // not single anything out.
      if (eval(s, a, phi).is_true()) {
        if (unique) { many = true; break; }
        unique = e;
      }
    }
    if (unique && !many && !already(*unique)) found.push_back(*unique);
  }
  std::sort(found.begin(), found.end());
  return found;
}

// ---------------------------------------------------------------------------
// Comprehension

namespace {

Flavor scheme_flavor(ComprehensionScheme scheme, unsigned rank) {
  switch (scheme) {
    case ComprehensionScheme::Classical: return Flavor::s();
    case ComprehensionScheme::Weak: return Flavor::w();
    case ComprehensionScheme::WeakRanked: return Flavor::w_ranked(rank);
    case ComprehensionScheme::StrictInconsistent: return Flavor::strict_ranked(rank);
  }
  return Flavor::w();
}

}  // namespace

MembershipTable solve_comprehension(const Structure& s, const Formula& phi,
                                    ComprehensionScheme scheme, unsigned rank) {
  FreeVars fv = free_vars(phi);
  if (fv.num.size() != 1)
    throw Error("comprehension formula needs exactly one free number variable");
  if (fv.set.size() > 1)
    throw Error("comprehension formula allows at most one free set variable");
  const std::string num_var = *fv.num.begin();
  std::optional<std::string> set_var;
  if (!fv.set.empty()) set_var = *fv.set.begin();

  Flavor fl = scheme_flavor(scheme, rank);

  if (scheme == ComprehensionScheme::Classical) {
    if (set_var)
      throw Error("classical comprehension forbids a free set variable in the formula");
    MembershipTable out;
    Assignment a;
    for (const Element& e : s.carrier) {
      a.num[num_var] = e;
      out.set(e, TruthValue::classical(is_designated(eval(s, a, phi))));
    }
    return out;
  }

  MembershipTable table;
  for (const Element& e : s.carrier) table.set(e, TruthValue::both(fl));

  for (std::size_t round = 0; round <= s.carrier.size(); ++round) {
    bool changed = false;
    MembershipTable next = table;
    for (const Element& e : s.carrier) {
      Assignment a;
      a.num[num_var] = e;
      if (set_var) a.set[*set_var] = &table;
      TruthValue v = retag_both(eval(s, a, phi), fl);
      TruthValue cur = table.value_for(e);
      if (cur.is_both()) {
        if (v.is_classical()) {
          next.set(e, v);
          changed = true;
        }
      } else if (v.is_classical() && v != cur) {
        throw NoFixpoint("comprehension entry for " + e.text() +
                         " flipped between classical values");
      }
    }
    table = std::move(next);
    if (!changed) break;
  }

  // The scheme instance must be designated at every element.
  for (const Element& e : s.carrier) {
    Assignment a;
    a.num[num_var] = e;
    if (set_var) a.set[*set_var] = &table;
    TruthValue membership = s.mem(e, table, fl);
    TruthValue rhs = retag_both(eval(s, a, phi), fl);
    if (!is_designated(iff(membership, rhs)))
      throw NoFixpoint("comprehension biconditional fails at " + e.text());
  }
  return table;
}

// ---------------------------------------------------------------------------
// Entailment

EntailmentResult entails(const Structure& s, const std::vector<Formula>& premises,
                         const Formula& conclusion, std::size_t assignment_cap) {
  FreeVars all;
  for (const Formula& p : premises) {
    FreeVars fv = free_vars(p);
    all.num.insert(fv.num.begin(), fv.num.end());
    all.set.insert(fv.set.begin(), fv.set.end());
  }
  {
    FreeVars fv = free_vars(conclusion);
    all.num.insert(fv.num.begin(), fv.num.end());
    all.set.insert(fv.set.begin(), fv.set.end());
  }
  std::vector<std::string> num_vars(all.num.begin(), all.num.end());
  std::vector<std::string> set_vars(all.set.begin(), all.set.end());

  double space = 1;
  for (std::size_t i = 0; i < num_vars.size(); ++i) space *= static_cast<double>(s.carrier.size());
  for (std::size_t i = 0; i < set_vars.size(); ++i) space *= static_cast<double>(s.subsets.size());
  if (space > static_cast<double>(assignment_cap))
    throw ResourceError("entailment assignment space exceeds cap");

  std::vector<std::size_t> num_idx(num_vars.size(), 0);
  std::vector<std::size_t> set_idx(set_vars.size(), 0);
  Assignment a;
  while (true) {
    for (std::size_t i = 0; i < num_vars.size(); ++i) a.num[num_vars[i]] = s.carrier[num_idx[i]];
    for (std::size_t i = 0; i < set_vars.size(); ++i) a.set[set_vars[i]] = &s.subsets[set_idx[i]];

    bool all_premises = true;
    for (const Formula& p : premises) {
      if (!is_designated(eval(s, a, p))) { all_premises = false; break; }
    }
    if (all_premises && !is_designated(eval(s, a, conclusion)))
      return {false, a};

    // advance the odometer
    std::size_t i = 0;
    for (; i < num_idx.size(); ++i) {
      if (++num_idx[i] < s.carrier.size()) break;
      num_idx[i] = 0;
    }
    if (i < num_idx.size()) continue;
    for (i = 0; i < set_idx.size(); ++i) {
      if (++set_idx[i] < s.subsets.size()) break;
      set_idx[i] = 0;
    }
    if (i < set_idx.size()) continue;
    break;
  }
  return {true, std::nullopt};
}

}  // namespace parith
