#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "classical_oracle.hpp"
#include "parith/errors.hpp"
#include "parith/model.hpp"
#include "parith/parse.hpp"

using namespace parith;

namespace {

Assignment closed() { return Assignment{}; }

// Small structure with a three-element carrier for duality checks.
Structure tiny_structure() {
  Structure s;
  s.carrier = {Element{0, Flavor::s()}, Element{1, Flavor::s()}, Element{0, Flavor::w()}};
  MembershipTable empty;
  for (const Element& e : s.carrier) empty.set(e, TruthValue::f());
  MembershipTable ones;
  for (const Element& e : s.carrier) ones.set(e, TruthValue::classical(e.magnitude == 1));
  MembershipTable both;
  for (const Element& e : s.carrier) both.set(e, TruthValue::both(Flavor::w()));
  s.subsets = {empty, ones, both};
  s.add = canonical_add;
  s.mul = canonical_mul;
  s.zero = [](Flavor fl) { return Element{0, fl}; };
  s.one = [](Flavor fl) { return Element{1, fl}; };
  s.rel = canonical_rel;
  s.mem = canonical_mem;
  return s;
}

}  // namespace

TEST_CASE("terms evaluate homomorphically") {
  Structure s = canonical_structure(4, 0);
  Assignment a;
  CHECK(eval_term(s, a, Term::zero(Flavor::s())) == Element{0, Flavor::s()});
  Element two = eval_term(s, a, Term::add(Term::one(Flavor::s()), Term::one(Flavor::s())));
  CHECK(two == Element{2, Flavor::s()});

  a.num["m"] = Element{3, Flavor::s()};
  Formula weak_identity = parse("m + 0_w =w m");
  CHECK(is_designated(eval(s, a, weak_identity)));

  CHECK_THROWS_AS(eval_term(s, closed(), Term::var("loose")), UnboundVariable);
}

TEST_CASE("formula evaluation over the canonical structure") {
  Structure s = canonical_structure(4, 0);
  CHECK(eval(s, closed(), parse("forall n. !(n <s 0_s)")) == TruthValue::t());
  CHECK(eval(s, closed(), parse("0_s =s 1_s")) == TruthValue::f());
  CHECK(eval(s, closed(), parse("1_s =s 1_s")) == TruthValue::t());
  CHECK(is_designated(eval(s, closed(), parse("1_w =w 1_w"))));

  // membership against the all-Both table, bare and under a rank operator
  Assignment a;
  a.set["X"] = &s.subsets.back();
  a.num["n"] = Element{2, Flavor::w()};
  Formula mem = parse("n in_w X");
  CHECK(eval(s, a, mem) == TruthValue::both(Flavor::w()));
  CHECK(eval(s, a, parse("(n in_w X)^[0]")) == TruthValue::both(Flavor::strict_ranked(0)));
}

TEST_CASE("carrier size follows the flavor count") {
  Structure s = canonical_structure(4, 2);
  CHECK(s.carrier.size() == (4 + 1) * (2 + 2 * (2 + 1)));
  Structure s2 = canonical_structure(8, 2);
  CHECK(s2.carrier.size() == 9 * 8);
}

TEST_CASE("classification of membership tables") {
  Structure s = canonical_structure(2, 0);
  MembershipTable classical;
  for (const Element& e : s.carrier) classical.set(e, TruthValue::classical(e.magnitude == 0));
  CHECK(classify(s, classical).kind == SetClassification::SConsistent);

  MembershipTable strict;
  for (const Element& e : s.carrier) strict.set(e, TruthValue::both(Flavor::strict_ranked(0)));
  Classification c = classify(s, strict);
  CHECK(c.kind == SetClassification::StrictRankedInconsistent);
  CHECK(c.rank == 0);

  MembershipTable mixed = classical;
  mixed.set(s.carrier.front(), TruthValue::both(Flavor::w()));
  CHECK(classify(s, mixed).kind == SetClassification::Mixed);

  MembershipTable weak;
  for (const Element& e : s.carrier) weak.set(e, TruthValue::both(Flavor::w()));
  CHECK(classify(s, weak).kind == SetClassification::WInconsistent);

  MembershipTable ranked;
  for (const Element& e : s.carrier) ranked.set(e, TruthValue::both(Flavor::w_ranked(1)));
  Classification rc = classify(s, ranked);
  CHECK(rc.kind == SetClassification::WRankedInconsistent);
  CHECK(rc.rank == 1);

  // two different Both flavors across the table fall outside every label
  MembershipTable uneven = ranked;
  uneven.set(s.carrier.front(), TruthValue::both(Flavor::w()));
  CHECK(classify(s, uneven).kind == SetClassification::Mixed);
}

TEST_CASE("structure construction guards") {
  CHECK_THROWS_AS(canonical_structure(1, 0), Error);
  Structure s = canonical_structure(2, 0);
  Assignment a;
  a.num["n"] = s.carrier.front();
  CHECK_THROWS_AS(eval(s, a, parse("n in_s X")), UnboundVariable);
}

TEST_CASE("strict definability pools respect the cap") {
  Structure s = canonical_structure(3, 0);
  DefinabilityOptions strict;
  strict.count_cap = 50;
  CHECK_THROWS_AS(definable_elements(s, BigNat::from_decimal("1000000000"), strict),
                  ResourceError);
}

TEST_CASE("definable elements grow with the code bound") {
  Structure s = canonical_structure(3, 0);
  GodelCode limit_one = godel_number(parse("n =s 1_s"));
  DefinabilityOptions opts;
  opts.slice = Flavor::s();

  std::vector<Element> small = definable_elements(s, BigNat(0), opts);
  CHECK(small.empty());

  std::vector<Element> with_one = definable_elements(s, limit_one, opts);
  CHECK(std::find(with_one.begin(), with_one.end(), Element{1, Flavor::s()}) != with_one.end());

  std::size_t last = 0;
  for (std::uint64_t limit : {0ull, 3000ull, 50000ull, 800000ull}) {
    std::size_t n = definable_elements(s, BigNat(limit), opts).size();
    CHECK(n >= last);
    last = n;
  }
}

TEST_CASE("classical comprehension builds the designated table") {
  Structure s = canonical_structure(4, 0);
  MembershipTable t =
      solve_comprehension(s, parse("n <s 1_s + 1_s"), ComprehensionScheme::Classical);
  for (const Element& e : s.carrier)
    CHECK(t.value_for(e) == TruthValue::classical(e.magnitude < 2));
  CHECK(classify(s, t).kind == SetClassification::SConsistent);
}

TEST_CASE("the Russell instance settles on the all-Both table") {
  Structure s = canonical_structure(4, 0);
  Formula russell = parse("!(n in_w X)");

  MembershipTable weak = solve_comprehension(s, russell, ComprehensionScheme::Weak);
  for (const Element& e : s.carrier)
    CHECK(weak.value_for(e) == TruthValue::both(Flavor::w()));
  for (const Element& e : s.carrier) {
    Assignment a;
    a.num["n"] = e;
    a.set["X"] = &weak;
    CHECK(is_designated(iff(s.mem(e, weak, Flavor::w()), eval(s, a, russell))));
  }

  MembershipTable strict =
      solve_comprehension(s, russell, ComprehensionScheme::StrictInconsistent, 0);
  Classification c = classify(s, strict);
  CHECK(c.kind == SetClassification::StrictRankedInconsistent);
  CHECK(c.rank == 0);

  MembershipTable ranked = solve_comprehension(s, russell, ComprehensionScheme::WeakRanked, 2);
  Classification rc = classify(s, ranked);
  CHECK(rc.kind == SetClassification::WRankedInconsistent);
  CHECK(rc.rank == 2);
}

TEST_CASE("comprehension with a positive self reference stays contradictory") {
  Structure s = canonical_structure(3, 0);
  MembershipTable t = solve_comprehension(s, parse("n in_w X"), ComprehensionScheme::Weak);
  for (const Element& e : s.carrier) CHECK(t.value_for(e) == TruthValue::both(Flavor::w()));
}

TEST_CASE("classical comprehension rejects a free occurrence of the set") {
  Structure s = canonical_structure(2, 0);
  CHECK_THROWS_AS(solve_comprehension(s, parse("n in_w X"), ComprehensionScheme::Classical),
                  Error);
  CHECK_THROWS_AS(solve_comprehension(s, parse("0_s =s 0_s"), ComprehensionScheme::Weak), Error);
}

TEST_CASE("an undesignated biconditional raises NoFixpoint") {
  Structure s = canonical_structure(2, 0);
  // membership that denies everything can never satisfy the scheme
  s.mem = [](const Element&, const MembershipTable&, Flavor) { return TruthValue::f(); };
  CHECK_THROWS_AS(solve_comprehension(s, parse("n =s n"), ComprehensionScheme::Weak), NoFixpoint);
}

TEST_CASE("entailment basics") {
  Structure s = canonical_structure(3, 0);
  Formula phi = parse("0_s =s 0_s");
  CHECK(entails(s, {phi}, phi).entails);

  // contradictory premises do not explode
  EntailmentResult r =
      entails(s, {parse("n in_w X"), parse("!(n in_w X)")}, parse("0_s =s 1_s"));
  CHECK_FALSE(r.entails);
  REQUIRE(r.countermodel.has_value());

  // the countermodel really does make the premises designated
  const Assignment& a = *r.countermodel;
  CHECK(is_designated(eval(s, a, parse("n in_w X"))));
  CHECK(is_designated(eval(s, a, parse("!(n in_w X)"))));
}

TEST_CASE("modus ponens holds for classical-true implications") {
  Structure s = canonical_structure(2, 0);
  std::vector<Formula> pool =
      enumerate_formulas(BigNat::from_decimal("40000000000"), EnumOptions{4000, true});
  std::vector<Formula> sentences;
  for (const Formula& f : pool) {
    FreeVars fv = free_vars(f);
    if (fv.num.empty() && fv.set.empty()) sentences.push_back(f);
    if (sentences.size() >= 30) break;
  }
  REQUIRE(sentences.size() > 5);
  int checked = 0;
  for (const Formula& f : sentences)
    for (const Formula& g : sentences) {
      Formula imp = Formula::implication(f, g);
      if (eval(s, closed(), imp) == TruthValue::t() && is_designated(eval(s, closed(), f))) {
        CHECK(entails(s, {f, imp}, g).entails);
        ++checked;
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("strictly consistent formulas agree with the classical evaluator") {
  Structure s = canonical_structure(2, 0);
  oracle::ClassicalModel m = oracle::classical_model(2);
  REQUIRE(m.sets.size() == s.subsets.size());

  std::vector<Formula> pool = enumerate_formulas(BigNat(10000000), EnumOptions{4000, true});
  int used = 0;
  for (const Formula& f : pool) {
    if (!oracle::s_only(f)) continue;
    FreeVars fv = free_vars(f);
    if (fv.num.size() + fv.set.size() > 2) continue;
    ++used;

    std::vector<std::string> nv(fv.num.begin(), fv.num.end());
    std::vector<std::string> sv(fv.set.begin(), fv.set.end());

    // sweep every assignment of s-flavored elements / subsets
    std::vector<std::uint64_t> mags(nv.size(), 0);
    std::vector<std::size_t> sets(sv.size(), 0);
    while (true) {
      Assignment a;
      oracle::ClassicalEnv env;
      for (std::size_t i = 0; i < nv.size(); ++i) {
        a.num[nv[i]] = Element{mags[i], Flavor::s()};
        env.num[nv[i]] = mags[i];
      }
      for (std::size_t i = 0; i < sv.size(); ++i) {
        a.set[sv[i]] = &s.subsets[sets[i]];
        env.set[sv[i]] = sets[i];
      }
      TruthValue ours = eval(s, a, f);
      bool theirs = oracle::ceval(m, env, f);
      CHECK(ours == TruthValue::classical(theirs));

      std::size_t i = 0;
      for (; i < mags.size(); ++i) {
        if (++mags[i] <= 2) break;
        mags[i] = 0;
      }
      if (i < mags.size()) continue;
      for (i = 0; i < sets.size(); ++i) {
        if (++sets[i] < m.sets.size()) break;
        sets[i] = 0;
      }
      if (i < sets.size()) continue;
      break;
    }
  }
  CHECK(used > 100);
}

TEST_CASE("quantifier duality on a three-element carrier") {
  Structure s = tiny_structure();
  std::vector<Formula> pool = enumerate_formulas(BigNat(10000000), EnumOptions{1000, true});
  for (const Formula& f : pool) {
    Formula lhs = Formula::negation(Formula::forall_num("n", f));
    Formula rhs = Formula::exists_num("n", Formula::negation(f));
    FreeVars fv = free_vars(lhs);
    for (const Element& other : s.carrier) {
      Assignment a;
      for (const std::string& v : fv.num) a.num[v] = other;
      for (const std::string& v : fv.set) a.set[v] = &s.subsets[1];
      CHECK(eval(s, a, lhs) == eval(s, a, rhs));
    }
  }
}

TEST_CASE("non-explosion is visible at the structure level") {
  Structure s = canonical_structure(2, 0);
  std::vector<Formula> premises = {parse("n in_w X"), parse("!(n in_w X)")};
  const char* unrelated[] = {"0_s =s 1_s", "1_s <s 0_s", "1_s + 1_s =s 1_s"};
  for (const char* text : unrelated)
    CHECK_FALSE(entails(s, premises, parse(text)).entails);
}
