#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "parith/errors.hpp"
#include "parith/godel.hpp"
#include "parith/model.hpp"
#include "parith/parse.hpp"

using namespace parith;

namespace {

// Random ASTs reaching the corners the enumeration pool avoids: long
// variable names, nested binders, ranks past the pool bound.
struct Gen {
  std::mt19937 rng{20250808};

  unsigned pick(unsigned n) { return static_cast<unsigned>(rng() % n); }

  Flavor flavor() {
    switch (pick(4)) {
      case 0: return Flavor::s();
      case 1: return Flavor::w();
      case 2: return Flavor::w_ranked(pick(12));
      default: return Flavor::strict_ranked(pick(12));
    }
  }

  std::string num_name() {
    static const char* names[] = {"n", "m", "k", "aa", "zz9", "longish"};
    return names[pick(6)];
  }

  std::string set_name() {
    static const char* names[] = {"X", "Y", "Z", "Wide", "Q0"};
    return names[pick(5)];
  }

  Term term(int depth) {
    if (depth <= 0 || pick(3) == 0) {
      if (pick(2) == 0) return Term::var(num_name());
      return Term::constant(pick(2) == 0 ? ConstKind::Zero : ConstKind::One, flavor());
    }
    Term a = term(depth - 1), b = term(depth - 1);
    return pick(2) == 0 ? Term::add(a, b) : Term::mul(a, b);
  }

  Formula atom() {
    switch (pick(3)) {
      case 0: return Formula::eq(term(2), term(2), flavor());
      case 1: return Formula::lt(term(2), term(2), flavor());
      default: return Formula::mem(term(2), set_name(), flavor());
    }
  }

  Formula formula(int depth) {
    if (depth <= 0) return atom();
    switch (pick(9)) {
      case 0: return Formula::negation(formula(depth - 1));
      case 1: return Formula::conjunction(formula(depth - 1), formula(depth - 1));
      case 2: return Formula::disjunction(formula(depth - 1), formula(depth - 1));
      case 3: return Formula::implication(formula(depth - 1), formula(depth - 1));
      case 4: return Formula::equivalence(formula(depth - 1), formula(depth - 1));
      case 5: return Formula::forall_num(num_name(), formula(depth - 1));
      case 6: return Formula::exists_set(set_name(), formula(depth - 1));
      case 7: {
        Flavor fl = pick(2) == 0 ? Flavor::w_ranked(pick(12)) : Flavor::strict_ranked(pick(12));
        return Formula::rank_op(formula(depth - 1), fl);
      }
      default: return atom();
    }
  }
};

}  // namespace

TEST_CASE("parsing the basic axiom shapes") {
  Formula f = parse("forall n. n + 0_s =s n");
  Formula expected = Formula::forall_num(
      "n", Formula::eq(Term::add(Term::var("n"), Term::zero(Flavor::s())), Term::var("n"),
                       Flavor::s()));
  CHECK(f == expected);

  Formula refl = parse("x =s x");
  CHECK(refl == Formula::eq(Term::var("x"), Term::var("x"), Flavor::s()));
  CHECK(parse(print(refl)) == refl);

  Formula ranked = parse("(n in_w X)^[2]");
  CHECK(ranked == Formula::rank_op(Formula::mem(Term::var("n"), "X", Flavor::w()),
                                   Flavor::strict_ranked(2)));
}

TEST_CASE("printing is canonical") {
  CHECK(print(Formula::eq(Term::var("x"), Term::var("y"), Flavor::w_ranked(3))) == "x =w(3) y");
  CHECK(print(Formula::negation(Formula::mem(Term::var("n"), "X", Flavor::s()))) ==
        "!(n in_s X)");
  Formula a = Formula::eq(Term::var("a"), Term::var("a"), Flavor::s());
  Formula b = Formula::eq(Term::var("b"), Term::var("b"), Flavor::s());
  Formula c = Formula::eq(Term::var("c"), Term::var("c"), Flavor::s());
  CHECK(print(Formula::conjunction(a, Formula::conjunction(b, c))) ==
        "a =s a & (b =s b & c =s c)");
  CHECK(print(Formula::conjunction(Formula::conjunction(a, b), c)) ==
        "(a =s a & b =s b) & c =s c");
}

TEST_CASE("parse round-trips its own printing on tricky shapes") {
  const char* samples[] = {
      "forall n. exists X. (n in_w X)^(1) -> !(n =w(1) 0_w(1))",
      "(x * (y + 1_s)) * x =s x * 0_w[2]",
      "exists Y. (0_w in_w Y | !(1_s <s 0_s)) <-> (forall k. k =w k)",
      "((n in_w X)^[0])^(1) & !( (m <w 1_w) )",
  };
  for (const char* text : samples) {
    Formula f = parse(text);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("syntax errors carry positions and kinds") {
  CHECK_THROWS_AS(parse("forall n n =s n"), SyntaxError);
  CHECK_THROWS_AS(parse("x =q x"), SyntaxError);
  CHECK_THROWS_AS(parse("(x =s x)^(-1)"), RankError);
  CHECK_THROWS_AS(parse("x =w() x"), RankError);
  CHECK_THROWS_AS(parse("2 =s 2"), SyntaxError);
  try {
    parse("x =s\nx =s x");
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("free variables across binders") {
  FreeVars fv = free_vars(parse("forall n. n in_s X"));
  CHECK(fv.num.empty());
  CHECK(fv.set == std::set<std::string>{"X"});

  fv = free_vars(parse("exists X. (n in_s X & (exists m. m =s n))"));
  CHECK(fv.num == std::set<std::string>{"n"});
  CHECK(fv.set.empty());

  fv = free_vars(parse("forall n. n + 1_s =s 0_s"));
  CHECK(fv.num.empty());
  CHECK(fv.set.empty());
}

TEST_CASE("substitution instantiates axiom bodies") {
  Formula body = parse("n =s n");
  Formula inst = substitute(body, "n", Term::one(Flavor::s()));
  CHECK(inst == parse("1_s =s 1_s"));
}

TEST_CASE("substitution respects shadowing") {
  Formula f = parse("forall n. n =s m");
  CHECK(substitute(f, "n", Term::one(Flavor::s())) == f);
}

TEST_CASE("substitution renames binders that would capture") {
  Formula f = parse("forall m. m + n =s k");
  Formula g = substitute(f, "n", Term::var("m"));
  // the binder must have moved away from m
  CHECK(g.bound_var() != "m");
  FreeVars fv = free_vars(g);
  CHECK(fv.num == std::set<std::string>{"m", "k"});

  // Semantic check: the result means the same as renaming the binder first.
  Structure s = canonical_structure(2, 0);
  Formula renamed = parse("forall q. q + m =s k");
  for (const Element& me : s.carrier)
    for (const Element& ke : s.carrier) {
      Assignment a;
      a.num["m"] = me;
      a.num["k"] = ke;
      CHECK(eval(s, a, g) == eval(s, a, renamed));
    }
}

TEST_CASE("substituting for a set variable is a sort error") {
  CHECK_THROWS_AS(substitute(parse("n in_s X"), "X", Term::var("n")), SortError);
}

TEST_CASE("substitution never leaves the substituted variable behind") {
  std::vector<Formula> pool = enumerate_formulas(BigNat(4000000), EnumOptions{3000, true});
  Term t = Term::one(Flavor::s());
  for (const Formula& f : pool) {
    FreeVars before = free_vars(f);
    for (const std::string& v : before.num) {
      FreeVars after = free_vars(substitute(f, v, t));
      CHECK(after.num.count(v) == 0);
    }
  }
}

TEST_CASE("pairing examples and injectivity") {
  CHECK(pair_code(0, 0) == 0);
  CHECK(pair_code(1, 2) == 10);  // (1+2)^2 + 1
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m <= 100; ++m)
    for (std::uint64_t n = 0; n <= 100; ++n) {
      auto [it, fresh] = seen.insert(pair_code(m, n));
      CHECK(fresh);
    }
}

TEST_CASE("codes are deterministic across printing") {
  Formula f = parse("forall n. n + 0_s =s n");
  Formula g = parse(print(f));
  CHECK(godel_number(f) == godel_number(g));
}

TEST_CASE("codes grow with the serialized size") {
  // Size-lexicographic: a longer serialization always codes strictly higher,
  // so the minimal atoms sit below everything that says more. (Raw AST node
  // count is not the measure: a negation adds one symbol while a constant
  // adds two.)
  Formula small = parse("0_s =s 0_s");
  GodelCode c = godel_number(small);
  std::size_t small_len = serialize_formula(small).size();
  std::vector<Formula> pool = enumerate_formulas(BigNat(100000000), EnumOptions{2000, true});
  for (const Formula& f : pool) {
    if (serialize_formula(f).size() > small_len) CHECK(c < godel_number(f));
  }
  CHECK(c < godel_number(parse("forall n. 0_s =s 0_s")));
  CHECK(c < godel_number(parse("0_s =s 0_s & 0_s =s 0_s")));
  CHECK(c < godel_number(parse("0_s =s 0_s + 0_s")));
}

TEST_CASE("enumeration is exact, ordered and injective") {
  CHECK(enumerate_formulas(BigNat(0)).empty());

  std::vector<Formula> pool = enumerate_formulas(BigNat(10000));
  CHECK(!pool.empty());
  GodelCode prev = BigNat(0);
  for (const Formula& f : pool) {
    GodelCode code = godel_number(f);
    CHECK(!(code > BigNat(10000)));
    CHECK(prev < code);
    prev = code;
  }

  // length of the pool is monotone in the limit
  std::size_t last = 0;
  for (std::uint64_t limit : {0ull, 2000ull, 3000ull, 5000ull, 10000ull, 50000ull}) {
    std::size_t n = enumerate_formulas(BigNat(limit)).size();
    CHECK(n >= last);
    last = n;
  }

  CHECK_THROWS_AS(enumerate_formulas(BigNat::from_decimal("100000000000000"),
                                     EnumOptions{100, false}),
                  ResourceError);
}

TEST_CASE("codes are injective and round-trip over a large enumerated pool") {
  std::vector<Formula> pool =
      enumerate_formulas(BigNat::from_decimal("1000000000000000000"), EnumOptions{10000, true});
  CHECK(pool.size() == 10000);
  std::set<std::string> seen;
  GodelCode prev = BigNat(0);
  for (const Formula& f : pool) {
    GodelCode code = godel_number(f);
    CHECK(prev < code);  // ascending across length batches too
    prev = code;
    auto [it, fresh] = seen.insert(code.to_decimal());
    CHECK(fresh);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("serialization decodes back to the same tree") {
  Formula f = parse("exists X. forall longname. (longname in_w(7) X)^[9] -> 0_w[9] =s 0_s");
  CHECK(decode_formula(serialize_formula(f)) == f);
}

TEST_CASE("random formulas round-trip through text and symbols") {
  Gen gen;
  for (int i = 0; i < 400; ++i) {
    Formula f = gen.formula(4);
    CHECK(parse(print(f)) == f);
    CHECK(decode_formula(serialize_formula(f)) == f);
    CHECK(godel_number(f) == godel_number(parse(print(f))));
  }
}

TEST_CASE("random substitutions stay capture free") {
  Gen gen;
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.formula(3);
    Term t = gen.term(2);
    std::set<std::string> tv = term_vars(t);
    for (const std::string& v : free_vars(f).num) {
      if (tv.count(v)) continue;  // only v-free replacements keep v out
      Formula g = substitute(f, v, t);
      CHECK(free_vars(g).num.count(v) == 0);
    }
  }
}

TEST_CASE("term codes live apart from formula codes") {
  Term zero = Term::zero(Flavor::s());
  Term sum = Term::add(Term::var("n"), Term::one(Flavor::w()));
  CHECK(godel_number(zero) != godel_number(sum));
  // a term never shares a code with a formula: terms carry a reserved lead
  std::vector<Formula> pool = enumerate_formulas(BigNat(10000000), EnumOptions{500, true});
  for (const Formula& f : pool) {
    CHECK(godel_number(f) != godel_number(zero));
    CHECK(godel_number(f) != godel_number(sum));
  }
}
