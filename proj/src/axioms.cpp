#include "parith/axioms.hpp"

#include <algorithm>

#include "parith/errors.hpp"

namespace parith {

std::string group_text(Group g) {
  switch (g) {
    case Group::I1: return "i.1";
    case Group::I2: return "i.2";
    case Group::I3: return "i.3";
    case Group::I4: return "i.4";
    case Group::I5: return "i.5";
    case Group::I6: return "i.6";
    case Group::I7: return "i.7";
    case Group::I8: return "i.8";
    case Group::II1: return "ii.1";
    case Group::II2: return "ii.2";
    case Group::II3: return "ii.3";
    case Group::II4: return "ii.4";
    case Group::II5: return "ii.5";
    case Group::II6: return "ii.6";
    case Group::II7: return "ii.7";
    case Group::III1: return "iii.1";
    case Group::III2: return "iii.2";
    case Group::III3: return "iii.3";
    case Group::IV1: return "iv.1";
    case Group::V1: return "v.1";
    case Group::V2: return "v.2";
    case Group::V3: return "v.3";
  }
  return "?";
}

std::string SchemaId::text() const {
  std::string out = group_text(group);
  if (rank) out += " rank " + std::to_string(*rank);
  return out;
}

namespace {

const std::string kM = "m";
const std::string kN = "n";
const std::string kX = "X";
const std::string kY = "Y";

Term var_m() { return Term::var(kM); }
Term var_n() { return Term::var(kN); }
Term zero(Flavor fl) { return Term::zero(fl); }
Term one(Flavor fl) { return Term::one(fl); }

Formula conj_all(std::vector<Formula> fs) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conjunction(acc, fs[i]);
  return acc;
}

// Notation for the relativized quantifier: forall v. ((v in_a Z) & body).
Formula rel_forall(const std::string& v, Flavor fl, const std::string& z, Formula body) {
  return Formula::forall_num(
      v, Formula::conjunction(Formula::mem(Term::var(v), z, fl), std::move(body)));
}

Formula group_i_matrix(Group g, Flavor fl) {
  switch (g) {
    case Group::I1: {
      Formula succ_nonzero = Formula::negation(
          Formula::eq(Term::add(var_n(), one(fl)), zero(fl), Flavor::s()));
      Formula refl = Formula::conjunction(Formula::eq(one(fl), one(fl), Flavor::s()),
                                          Formula::eq(zero(fl), zero(fl), Flavor::s()));
      return Formula::forall_num(kN, Formula::conjunction(succ_nonzero, refl));
    }
    case Group::I2:
      return Formula::forall_num(
          kM, Formula::forall_num(
                  kN, Formula::implication(
                          Formula::eq(Term::add(var_m(), one(fl)), Term::add(var_n(), one(fl)), fl),
                          Formula::eq(var_m(), var_n(), fl))));
    case Group::I3:
      return Formula::forall_num(kM, Formula::eq(Term::add(var_m(), zero(fl)), var_m(), fl));
    case Group::I4:
      return Formula::forall_num(
          kM, Formula::forall_num(
                  kN, Formula::eq(Term::add(var_m(), Term::add(var_n(), one(fl))),
                                  Term::add(Term::add(var_m(), var_n()), one(fl)), fl)));
    case Group::I5:
      return Formula::forall_num(kM, Formula::eq(Term::mul(var_m(), zero(fl)), zero(fl), fl));
    case Group::I6:
      return Formula::forall_num(
          kM, Formula::forall_num(
                  kN, Formula::eq(Term::mul(var_m(), Term::add(var_n(), one(fl))),
                                  Term::add(Term::mul(var_m(), var_n()), var_m()), fl)));
    case Group::I7:
      return Formula::forall_num(kM,
                                 Formula::negation(Formula::lt(var_m(), zero(fl), fl)));
    case Group::I8:
      return Formula::forall_num(
          kM, Formula::forall_num(
                  kN, Formula::equivalence(
                          Formula::lt(var_m(), Term::add(var_n(), one(fl)), fl),
                          Formula::disjunction(Formula::lt(var_m(), var_n(), fl),
                                               Formula::eq(var_m(), var_n(), fl)))));
    default:
      throw Error("not a group-i schema");
  }
}

// One induction closure: exists Y. forall X. ((0_a in_a X & forall n.((n
// in_a Y) & ((n in_a X) -> (n+1_a in_a X)))) -> forall n.((n in_a Y) & (n
// in_a X))).
Formula induction_axiom(Flavor fl) {
  Formula base = Formula::mem(zero(fl), kX, fl);
  Formula step = rel_forall(
      kN, fl, kY,
      Formula::implication(Formula::mem(var_n(), kX, fl),
                           Formula::mem(Term::add(var_n(), one(fl)), kX, fl)));
  Formula conclusion = rel_forall(kN, fl, kY, Formula::mem(var_n(), kX, fl));
  return Formula::exists_set(
      kY, Formula::forall_set(
              kX, Formula::implication(Formula::conjunction(base, step), conclusion)));
}

// The rank-family induction axioms conjoin the per-rank premises and
// conclusions up to the expansion bound.
Formula induction_axiom_family(bool strict, unsigned expansion) {
  std::vector<Formula> premises, conclusions;
  for (unsigned i = 0; i <= expansion; ++i) {
    Flavor fl = strict ? Flavor::strict_ranked(i) : Flavor::w_ranked(i);
    Formula base = Formula::mem(zero(fl), kX, fl);
    Formula step = rel_forall(
        kN, fl, kY,
        Formula::implication(Formula::mem(var_n(), kX, fl),
                             Formula::mem(Term::add(var_n(), one(fl)), kX, fl)));
    premises.push_back(Formula::conjunction(base, step));
    conclusions.push_back(rel_forall(kN, fl, kY, Formula::mem(var_n(), kX, fl)));
  }
  return Formula::exists_set(
      kY, Formula::forall_set(kX, Formula::implication(conj_all(std::move(premises)),
                                                       conj_all(std::move(conclusions)))));
}

Formula global_induction_axiom(unsigned expansion) {
  Flavor s = Flavor::s();
  std::vector<Formula> premises;
  premises.push_back(Formula::mem(zero(s), kX, s));
  premises.push_back(Formula::mem(zero(Flavor::w()), kX, s));
  for (unsigned i = 0; i <= expansion; ++i)
    premises.push_back(Formula::mem(zero(Flavor::w_ranked(i)), kX, s));
  for (unsigned i = 0; i <= expansion; ++i)
    premises.push_back(Formula::mem(zero(Flavor::strict_ranked(i)), kX, s));
  auto step_for = [&](Flavor succ_fl) {
    return rel_forall(kN, s, kY,
                      Formula::implication(Formula::mem(var_n(), kX, s),
                                           Formula::mem(Term::add(var_n(), one(succ_fl)), kX, s)));
  };
  premises.push_back(step_for(s));
  premises.push_back(step_for(Flavor::w()));
  for (unsigned i = 0; i <= expansion; ++i) premises.push_back(step_for(Flavor::w_ranked(i)));
  for (unsigned i = 0; i <= expansion; ++i) premises.push_back(step_for(Flavor::strict_ranked(i)));
  Formula conclusion = rel_forall(kN, s, kY, Formula::mem(var_n(), kX, s));
  return Formula::exists_set(
      kY, Formula::forall_set(kX, Formula::implication(conj_all(std::move(premises)),
                                                       conclusion)));
}

// Least-element axiom as a closed formula: every inhabited X has a member
// nothing in X sits strictly below.
Formula order_axiom(Flavor fl) {
  Formula inhabited = Formula::exists_num(kN, Formula::mem(var_n(), kX, fl));
  Formula least = Formula::exists_num(
      kN, Formula::conjunction(
              Formula::mem(var_n(), kX, fl),
              Formula::forall_num(kM, Formula::implication(
                                          Formula::mem(var_m(), kX, fl),
                                          Formula::negation(Formula::lt(var_m(), var_n(), fl))))));
  return Formula::forall_set(kX, Formula::implication(inhabited, least));
}

Formula comprehension_axiom(Flavor mem_fl, const Formula& phi, bool ranked) {
  FreeVars fv = free_vars(phi);
  if (fv.num.size() != 1)
    throw SortError("comprehension formula needs exactly one free number variable");
  const std::string& v = *fv.num.begin();
  for (const auto& sv : fv.set)
    if (sv != kX) throw SortError("comprehension formula may mention only X freely");
  Formula rhs = ranked ? Formula::rank_op(phi, mem_fl) : phi;
  return Formula::exists_set(
      kX, Formula::forall_num(
              v, Formula::equivalence(Formula::mem(Term::var(v), kX, mem_fl), rhs)));
}

Flavor require_flavor(const SchemaId& id, const Bindings& b) {
  if (!b.flavor) throw SortError("schema " + id.text() + " needs a flavor binding");
  Flavor fl = *b.flavor;
  if (fl.is_ranked()) {
    if (!id.rank || *id.rank != fl.rank())
      throw RankError("schema id rank must match ranked flavor " + fl.text());
  } else if (id.rank) {
    throw RankError("schema id carries a rank but the flavor " + fl.text() + " has none");
  }
  return fl;
}

unsigned require_rank(const SchemaId& id) {
  if (!id.rank) throw RankError("schema " + id.text() + " needs a rank");
  return *id.rank;
}

}  // namespace

SchemaInstance instantiate(const SchemaId& id, const Bindings& b) {
  switch (id.group) {
    case Group::I1: case Group::I2: case Group::I3: case Group::I4:
    case Group::I5: case Group::I6: case Group::I7: case Group::I8:
      return {id, group_i_matrix(id.group, require_flavor(id, b))};
    case Group::II1:
      if (id.rank) throw RankError("ii.1 takes no rank");
      return {id, induction_axiom(Flavor::s())};
    case Group::II2:
      if (id.rank) throw RankError("ii.2 takes no rank");
      return {id, induction_axiom(Flavor::w())};
    case Group::II3:
      return {id, induction_axiom(Flavor::w_ranked(require_rank(id)))};
    case Group::II4:
      return {id, induction_axiom(Flavor::strict_ranked(require_rank(id)))};
    case Group::II5:
      return {id, induction_axiom_family(false, b.expansion_rank.value_or(2))};
    case Group::II6:
      return {id, induction_axiom_family(true, b.expansion_rank.value_or(2))};
    case Group::II7:
      return {id, global_induction_axiom(b.expansion_rank.value_or(2))};
    case Group::III1:
      if (id.rank) throw RankError("iii.1 takes no rank");
      return {id, order_axiom(Flavor::w())};
    case Group::III2:
      return {id, order_axiom(Flavor::w_ranked(require_rank(id)))};
    case Group::III3:
      return {id, order_axiom(Flavor::strict_ranked(require_rank(id)))};
    case Group::IV1: {
      if (!b.phi) throw SortError("iv.1 needs a formula binding");
      FreeVars fv = free_vars(*b.phi);
      if (!fv.set.empty())
        throw SortError("iv.1 requires X not to occur freely in the formula");
      return {id, comprehension_axiom(Flavor::s(), *b.phi, false)};
    }
    case Group::V1:
      if (!b.phi) throw SortError("v.1 needs a formula binding");
      return {id, comprehension_axiom(Flavor::w(), *b.phi, false)};
    case Group::V2:
      if (!b.phi) throw SortError("v.2 needs a formula binding");
      return {id, comprehension_axiom(Flavor::w_ranked(require_rank(id)), *b.phi, true)};
    case Group::V3:
      if (!b.phi) throw SortError("v.3 needs a formula binding");
      return {id, comprehension_axiom(Flavor::strict_ranked(require_rank(id)), *b.phi, true)};
  }
  throw Error("unreachable schema group");
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

void collect_flavors(const Term& t, std::vector<Flavor>& out) {
  switch (t.kind()) {
    case Term::Kind::Const: out.push_back(t.const_flavor()); return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_flavors(t.lhs(), out);
      collect_flavors(t.rhs(), out);
      return;
    default: return;
  }
}

void collect_flavors(const Formula& f, std::vector<Flavor>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      out.push_back(f.atom_flavor());
      collect_flavors(f.atom_lhs(), out);
      collect_flavors(f.atom_rhs(), out);
      return;
    case Formula::Kind::Mem:
      out.push_back(f.atom_flavor());
      collect_flavors(f.atom_lhs(), out);
      return;
    case Formula::Kind::Not:
      collect_flavors(f.child(), out);
      return;
    case Formula::Kind::RankOp:
      out.push_back(f.rank_flavor());
      collect_flavors(f.child(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      collect_flavors(f.left(), out);
      collect_flavors(f.right(), out);
      return;
    default:
      collect_flavors(f.child(), out);
      return;
  }
}

std::optional<SchemaId> match_comprehension(const Formula& f) {
  if (f.kind() != Formula::Kind::ExistsSet) return std::nullopt;
  const std::string& x = f.bound_var();
  const Formula& q = f.child();
  if (q.kind() != Formula::Kind::ForallNum) return std::nullopt;
  const std::string& v = q.bound_var();
  const Formula& body = q.child();
  if (body.kind() != Formula::Kind::Iff) return std::nullopt;
  const Formula& lhs = body.left();
  if (lhs.kind() != Formula::Kind::Mem) return std::nullopt;
  if (lhs.mem_set() != x) return std::nullopt;
  if (!(lhs.atom_lhs() == Term::var(v))) return std::nullopt;
  Flavor fl = lhs.atom_flavor();
  const Formula& rhs = body.right();
  switch (fl.kind()) {
    case FlavorKind::S: {
      FreeVars fv = free_vars(rhs);
      if (fv.set.count(x)) return std::nullopt;
      return SchemaId{Group::IV1, std::nullopt};
    }
    case FlavorKind::W:
      return SchemaId{Group::V1, std::nullopt};
    case FlavorKind::WRanked:
      if (rhs.kind() == Formula::Kind::RankOp && rhs.rank_flavor() == fl)
        return SchemaId{Group::V2, fl.rank()};
      return std::nullopt;
    case FlavorKind::StrictRanked:
      if (rhs.kind() == Formula::Kind::RankOp && rhs.rank_flavor() == fl)
        return SchemaId{Group::V3, fl.rank()};
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SchemaId> is_axiom_instance(const Formula& f) {
  std::vector<Flavor> flavors;
  collect_flavors(f, flavors);
  std::sort(flavors.begin(), flavors.end());
  flavors.erase(std::unique(flavors.begin(), flavors.end(),
                            [](Flavor a, Flavor b) { return a == b; }),
                flavors.end());
  unsigned max_rank = 0;
  for (Flavor fl : flavors)
    if (fl.is_ranked()) max_rank = std::max(max_rank, fl.rank());

  auto try_match = [&](const SchemaId& id, const Bindings& b) -> bool {
    return alpha_equal(f, instantiate(id, b).formula);
  };

  static const Group kGroupI[] = {Group::I1, Group::I2, Group::I3, Group::I4,
                                  Group::I5, Group::I6, Group::I7, Group::I8};
  for (Group g : kGroupI) {
    for (Flavor fl : flavors) {
      SchemaId id{g, fl.is_ranked() ? std::optional<unsigned>(fl.rank()) : std::nullopt};
      Bindings b;
      b.flavor = fl;
      if (try_match(id, b)) return id;
    }
  }

  if (try_match({Group::II1, std::nullopt}, {})) return SchemaId{Group::II1, std::nullopt};
  if (try_match({Group::II2, std::nullopt}, {})) return SchemaId{Group::II2, std::nullopt};
  for (unsigned r = 0; r <= max_rank; ++r) {
    if (try_match({Group::II3, r}, {})) return SchemaId{Group::II3, r};
    if (try_match({Group::II4, r}, {})) return SchemaId{Group::II4, r};
  }
  for (unsigned r = 0; r <= max_rank; ++r) {
    Bindings b;
    b.expansion_rank = r;
    if (try_match({Group::II5, std::nullopt}, b)) return SchemaId{Group::II5, std::nullopt};
    if (try_match({Group::II6, std::nullopt}, b)) return SchemaId{Group::II6, std::nullopt};
    if (try_match({Group::II7, std::nullopt}, b)) return SchemaId{Group::II7, std::nullopt};
  }

  if (try_match({Group::III1, std::nullopt}, {})) return SchemaId{Group::III1, std::nullopt};
  for (unsigned r = 0; r <= max_rank; ++r) {
    if (try_match({Group::III2, r}, {})) return SchemaId{Group::III2, r};
    if (try_match({Group::III3, r}, {})) return SchemaId{Group::III3, r};
  }

  return match_comprehension(canonicalize_bound(f));
}

// ---------------------------------------------------------------------------
// Soundness suites

namespace {

unsigned structure_max_rank(const Structure& s) {
  unsigned out = 0;
  bool any = false;
  for (const Element& e : s.carrier) {
    if (e.flavor.is_ranked()) {
      out = std::max(out, e.flavor.rank());
      any = true;
    }
  }
  return any ? out : 0;
}

std::vector<Flavor> structure_flavors(const Structure& s) {
  std::vector<Flavor> out;
  for (const Element& e : s.carrier) {
    bool seen = false;
    for (Flavor fl : out)
      if (fl == e.flavor) { seen = true; break; }
    if (!seen) out.push_back(e.flavor);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Evaluates a closed universally quantified formula and reports the first
// carrier assignment falsifying the matrix.
CheckItem check_universal(const Structure& s, const std::string& name, const Formula& f) {
  Formula matrix = f;
  std::vector<std::string> binders;
  while (matrix.kind() == Formula::Kind::ForallNum) {
    binders.push_back(matrix.bound_var());
    matrix = matrix.child();
  }
  std::vector<std::size_t> idx(binders.size(), 0);
  Assignment a;
  while (true) {
    for (std::size_t i = 0; i < binders.size(); ++i) a.num[binders[i]] = s.carrier[idx[i]];
    if (!is_designated(eval(s, a, matrix)))
      return {name, false, "not designated at " + a.text()};
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < s.carrier.size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return {name, true, ""};
}

CheckItem check_least_elements(const Structure& s, const std::string& name, Flavor fl) {
  for (std::size_t ti = 0; ti < s.subsets.size(); ++ti) {
    const MembershipTable& table = s.subsets[ti];
    std::vector<Element> members;
    for (const Element& e : s.carrier)
      if (e.flavor == fl && is_designated(s.mem(e, table, fl))) members.push_back(e);
    if (members.empty()) continue;
    bool found = false;
    for (const Element& cand : members) {
      bool least = true;
      for (const Element& other : members) {
        if (other == cand) continue;
        if (is_designated(s.rel(RelSym::Lt, fl, other, cand))) { least = false; break; }
      }
      if (least) { found = true; break; }
    }
    if (!found)
      return {name, false, "subset #" + std::to_string(ti) + " has no least element"};
  }
  return {name, true, ""};
}

}  // namespace

GroupReport check_group(const Structure& s, GroupFamily family, unsigned samples) {
  GroupReport report;
  unsigned max_rank = structure_max_rank(s);
  switch (family) {
    case GroupFamily::I: {
      static const Group kGroupI[] = {Group::I1, Group::I2, Group::I3, Group::I4,
                                      Group::I5, Group::I6, Group::I7, Group::I8};
      for (Group g : kGroupI) {
        for (Flavor fl : structure_flavors(s)) {
          SchemaId id{g, fl.is_ranked() ? std::optional<unsigned>(fl.rank()) : std::nullopt};
          Bindings b;
          b.flavor = fl;
          Formula inst = instantiate(id, b).formula;
          report.items.push_back(
              check_universal(s, group_text(g) + " @ " + fl.text(), inst));
        }
      }
      break;
    }
    case GroupFamily::II: {
      auto run = [&](const SchemaId& id, const Bindings& b, const std::string& name) {
        Formula inst = instantiate(id, b).formula;
        bool ok = is_designated(eval(s, Assignment{}, inst));
        report.items.push_back({name, ok, ok ? "" : "closure not designated"});
      };
      run({Group::II1, std::nullopt}, {}, "ii.1");
      run({Group::II2, std::nullopt}, {}, "ii.2");
      for (unsigned r = 0; r <= max_rank; ++r) {
        run({Group::II3, r}, {}, "ii.3 rank " + std::to_string(r));
        run({Group::II4, r}, {}, "ii.4 rank " + std::to_string(r));
      }
      Bindings fam;
      fam.expansion_rank = max_rank;
      run({Group::II5, std::nullopt}, fam, "ii.5");
      run({Group::II6, std::nullopt}, fam, "ii.6");
      run({Group::II7, std::nullopt}, fam, "ii.7");
      break;
    }
    case GroupFamily::III: {
      report.items.push_back(check_least_elements(s, "iii.1 @ w", Flavor::w()));
      for (unsigned r = 0; r <= max_rank; ++r) {
        report.items.push_back(check_least_elements(
            s, "iii.2 @ w(" + std::to_string(r) + ")", Flavor::w_ranked(r)));
        report.items.push_back(check_least_elements(
            s, "iii.3 @ w[" + std::to_string(r) + "]", Flavor::strict_ranked(r)));
      }
      break;
    }
    case GroupFamily::V: {
      std::vector<Formula> pool = enumerate_formulas(BigNat(1000000), EnumOptions{});
      unsigned used = 0;
      for (const Formula& phi : pool) {
        if (used >= samples) break;
        FreeVars fv = free_vars(phi);
        if (fv.num.size() != 1) continue;
        bool set_ok = fv.set.empty() || (fv.set.size() == 1 && *fv.set.begin() == kX);
        if (!set_ok) continue;
        ++used;
        std::string label = "v.* on " + print(phi);
        try {
          solve_comprehension(s, phi, ComprehensionScheme::Weak);
          solve_comprehension(s, phi, ComprehensionScheme::StrictInconsistent, 0);
          if (fv.set.empty()) solve_comprehension(s, phi, ComprehensionScheme::Classical);
          report.items.push_back({label, true, ""});
        } catch (const NoFixpoint& e) {
          report.items.push_back({label, false, e.what()});
        }
      }
      break;
    }
  }
  return report;
}

std::string GroupReport::text() const {
  std::string out;
  for (const auto& item : items) {
    out += item.passed ? "pass  " : "FAIL  ";
    out += item.name;
    if (!item.detail.empty()) out += "  [" + item.detail + "]";
    out += "\n";
  }
  return out;
}

}  // namespace parith
