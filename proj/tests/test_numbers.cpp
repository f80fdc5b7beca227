#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parith/errors.hpp"
#include "parith/numbers.hpp"

using namespace parith;

namespace {

ParaRat q(std::int64_t n, std::int64_t d) { return rat_of(n, d); }

// Reference reduction: the equivalence-class representative with the
// smallest positive denominator (and matching numerator), found by scanning.
ParaRat class_minimum(std::int64_t a, std::int64_t b) {
  for (std::int64_t d = 1; d <= b; ++d) {
    // a/b == c/d  <=>  a*d == b*c and c = a*d/b when integral
    if ((a * d) % b == 0) return ParaRat{ParaInt::from_signed(a * d / b, Flavor::s()),
                                         ParaInt::from_signed(d, Flavor::s())};
  }
  return ParaRat{ParaInt::from_signed(a, Flavor::s()), ParaInt::from_signed(b, Flavor::s())};
}

}  // namespace

TEST_CASE("natural arithmetic joins flavors") {
  CHECK(nat_add(ParaNat{2, Flavor::s()}, ParaNat{0, Flavor::s()}) == ParaNat{2, Flavor::s()});
  CHECK(nat_add(ParaNat{1, Flavor::w()}, ParaNat{1, Flavor::w()}) == ParaNat{2, Flavor::w()});
  CHECK(nat_mul(ParaNat{3, Flavor::s()}, ParaNat{0, Flavor::strict_ranked(1)}) ==
        ParaNat{0, Flavor::strict_ranked(1)});
  CHECK(nat_mul(ParaNat{2, Flavor::w_ranked(2)}, ParaNat{2, Flavor::w_ranked(1)}).flavor ==
        Flavor::w_ranked(2));
}

TEST_CASE("canonicalization picks the class minimum") {
  CHECK(rat_canonicalize(2, 4, Flavor::s()) == q(1, 2));
  CHECK(rat_canonicalize(0, 7, Flavor::s()) == q(0, 1));
  CHECK(rat_canonicalize(-3, 6, Flavor::s()) == q(-1, 2));
  CHECK_THROWS_AS(rat_canonicalize(1, 0, Flavor::s()), ZeroDenominator);

  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = 1; b <= 20; ++b)
      CHECK(rat_canonicalize(a, b, Flavor::s()) == class_minimum(a, b));

  // idempotence
  for (std::int64_t a = -50; a <= 50; a += 7)
    for (std::int64_t b = 1; b <= 60; b += 11) {
      ParaRat once = rat_canonicalize(a, b, Flavor::w());
      ParaRat twice =
          rat_canonicalize(once.num.signed_value(), once.den.signed_value(), Flavor::w());
      CHECK(once == twice);
    }
}

TEST_CASE("rational arithmetic follows the crossing formulas") {
  CHECK(rat_add(q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(rat_mul(q(1, 2), q(2, 3)) == q(1, 3));
  ParaRat x = q(7, 5);
  CHECK(rat_add(x, rat_neg(x)) == q(0, 1));
}

TEST_CASE("field laws on random canonical rationals") {
  std::mt19937 rng(7);
  auto random_rat = [&] {
    std::int64_t n = static_cast<std::int64_t>(rng() % 101) - 50;
    std::int64_t d = static_cast<std::int64_t>(rng() % 50) + 1;
    return rat_of(n, d);
  };
  ParaRat zero = q(0, 1), one_r = q(1, 1);
  for (int i = 0; i < 200; ++i) {
    ParaRat a = random_rat(), b = random_rat(), c = random_rat();
    CHECK(rat_add(a, b) == rat_add(b, a));
    CHECK(rat_mul(a, b) == rat_mul(b, a));
    CHECK(rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c)));
    CHECK(rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c)));
    CHECK(rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c)));
    CHECK(rat_add(a, zero) == a);
    CHECK(rat_mul(a, one_r) == a);
    CHECK(rat_add(a, rat_neg(a)) == zero);
    if (!(a == zero)) {
      ParaRat inv = rat_canonicalize(a.den.signed_value(), a.num.signed_value(), a.flavor());
      CHECK(rat_mul(a, inv) == one_r);
    }
  }
}

TEST_CASE("flavored comparison") {
  CHECK(rat_compare(RelSym::Lt, q(1, 2), q(2, 3), Flavor::s()) == TruthValue::t());
  CHECK(rat_compare(RelSym::Lt, q(1, 2), q(1, 2), Flavor::s()) == TruthValue::f());
  ParaRat half_w = rat_canonicalize(1, 2, Flavor::w());
  CHECK(is_designated(rat_compare(RelSym::Eq, half_w, half_w, Flavor::w())));
}

TEST_CASE("trichotomy for the strict order") {
  for (std::int64_t an = -6; an <= 6; ++an)
    for (std::int64_t ad = 1; ad <= 4; ++ad)
      for (std::int64_t bn = -6; bn <= 6; ++bn)
        for (std::int64_t bd = 1; bd <= 4; ++bd) {
          ParaRat a = q(an, ad), b = q(bn, bd);
          int holds = 0;
          if (rat_compare(RelSym::Lt, a, b, Flavor::s()) == TruthValue::t()) ++holds;
          if (rat_compare(RelSym::Eq, a, b, Flavor::s()) == TruthValue::t()) ++holds;
          if (rat_compare(RelSym::Lt, b, a, Flavor::s()) == TruthValue::t()) ++holds;
          CHECK(holds == 1);
        }
}

TEST_CASE("absolute values branch on flavored designatedness") {
  CHECK(abs_value(q(-3, 2), Flavor::s()) == q(3, 2));
  for (Flavor fl : {Flavor::s(), Flavor::w(), Flavor::w_ranked(1), Flavor::strict_ranked(0)})
    CHECK(abs_value(q(0, 1), fl) == q(0, 1));
  // classical rationals behave identically under any flavored absolute value
  for (std::int64_t n = -9; n <= 9; ++n) {
    ParaRat v = q(n, 3);
    CHECK(abs_value(v, Flavor::w_ranked(1)) == abs_value(v, Flavor::s()));
  }
}

TEST_CASE("primitive recursion") {
  std::function<ParaNat(const ParaNat&)> base = [](const ParaNat& m) { return m; };
  std::function<ParaNat(const ParaNat&, const ParaNat&, const ParaNat&)> step =
      [](const ParaNat&, const ParaNat&, const ParaNat& acc) {
        return nat_add(acc, ParaNat{1, Flavor::s()});
      };
  // base case: h(0, m) = f(m)
  for (std::uint64_t m = 0; m < 5; ++m)
    CHECK(prim_rec<ParaNat>(base, step, ParaNat{0, Flavor::s()}, ParaNat{m, Flavor::s()}) ==
          ParaNat{m, Flavor::s()});

  CHECK(nat_pow(ParaNat{5, Flavor::s()}, ParaNat{0, Flavor::s()}) == ParaNat{1, Flavor::s()});
  CHECK(nat_pow(ParaNat{2, Flavor::s()}, ParaNat{3, Flavor::s()}).magnitude == 8);

  // oracle: repeated multiplication
  for (std::uint64_t m = 0; m <= 6; ++m)
    for (std::uint64_t n = 0; n <= 6; ++n) {
      std::uint64_t expect = 1;
      for (std::uint64_t i = 0; i < n; ++i) expect *= m;
      CHECK(nat_pow(ParaNat{m, Flavor::s()}, ParaNat{n, Flavor::s()}).magnitude == expect);
    }

  // exponent law m^(a+b) = m^a * m^b
  for (std::uint64_t m = 0; m <= 6; ++m)
    for (std::uint64_t a = 0; a <= 6; ++a)
      for (std::uint64_t b = 0; a + b <= 6; ++b) {
        ParaNat mm{m, Flavor::s()};
        CHECK(nat_pow(mm, ParaNat{a + b, Flavor::s()}) ==
              nat_mul(nat_pow(mm, ParaNat{a, Flavor::s()}), nat_pow(mm, ParaNat{b, Flavor::s()})));
      }

  CHECK_THROWS_AS(nat_pow(ParaNat{2, Flavor::s()}, ParaNat{100000, Flavor::s()}), DepthExceeded);
}

TEST_CASE("finite-prefix Cauchy checks") {
  std::vector<ParaRat> constant(10, q(3, 7));
  CHECK(cauchy_check(constant, {q(1, 2), q(1, 100)}, Flavor::s()) == TruthValue::t());

  std::vector<ParaRat> harmonic;
  for (int n = 1; n <= 20; ++n) harmonic.push_back(q(1, n));
  CHECK(is_designated(cauchy_check(harmonic, {q(1, 2), q(1, 4)}, Flavor::s())));

  std::vector<ParaRat> alternating;
  for (int n = 0; n < 10; ++n) alternating.push_back(q(n % 2, 1));
  CHECK_FALSE(is_designated(cauchy_check(alternating, {q(1, 2)}, Flavor::s())));

  CHECK_THROWS_AS(cauchy_check({q(1, 1)}, {q(1, 2)}, Flavor::s()), Error);
}

TEST_CASE("digit-prefix comparison of truncated reals") {
  ParaReal half = ParaReal::from_digits({5, 0, 0}, Flavor::s());
  ParaReal half2 = ParaReal::from_digits({5, 0, 0}, Flavor::s());
  ParaReal just_less = ParaReal::from_digits({4, 9, 9}, Flavor::s());
  CHECK(real_compare(RelSym::Eq, half, half2, Flavor::s(), 3) == TruthValue::t());
  CHECK(real_compare(RelSym::Lt, just_less, half, Flavor::s(), 3) == TruthValue::t());
  CHECK(real_compare(RelSym::Lt, half, just_less, Flavor::s(), 3) == TruthValue::f());

  ParaReal x_w = ParaReal::from_digits({1, 2, 3}, Flavor::w());
  CHECK(is_designated(real_compare(RelSym::Eq, x_w, x_w, Flavor::w(), 3)));
  CHECK(real_compare(RelSym::Eq, x_w, x_w, Flavor::w(), 2) == TruthValue::both(Flavor::w()));

  CHECK_THROWS_AS(real_compare(RelSym::Eq, half, x_w, Flavor::s(), 5), DepthExceeded);
}

TEST_CASE("s-flavored real comparison matches exact rational comparison") {
  // digit-expressible rationals: n/1000 truncated to three digits
  auto real_of = [](int thousandths) {
    return ParaReal::from_digits(
        {thousandths / 100 % 10, thousandths / 10 % 10, thousandths % 10}, Flavor::s());
  };
  for (int a = 0; a < 1000; a += 37)
    for (int b = 0; b < 1000; b += 41) {
      ParaReal x = real_of(a), y = real_of(b);
      CHECK((real_compare(RelSym::Eq, x, y, Flavor::s(), 3) == TruthValue::t()) == (a == b));
      CHECK((real_compare(RelSym::Lt, x, y, Flavor::s(), 3) == TruthValue::t()) == (a < b));
    }
}

TEST_CASE("metric axioms over small point sets") {
  std::vector<ParaRat> points = {q(0, 1), q(1, 2), q(2, 3), q(-1, 4), q(5, 1)};
  auto metric = [&](std::size_t i, std::size_t j) {
    return abs_value(rat_sub(points[i], points[j]), Flavor::s());
  };
  CHECK(metric_axioms_check(points.size(), metric, Flavor::s()).passed());

  auto zero_metric = [](std::size_t, std::size_t) { return rat_of(0, 1); };
  CHECK(metric_axioms_check(5, zero_metric, Flavor::s()).passed());

  auto asymmetric = [&](std::size_t i, std::size_t j) {
    return i < j ? q(1, 1) : i == j ? q(0, 1) : q(2, 1);
  };
  MetricReport broken = metric_axioms_check(3, asymmetric, Flavor::s());
  CHECK_FALSE(broken.passed());
  bool symmetry_reported = false;
  for (const auto& v : broken.violations)
    if (v.find("symmetry") != std::string::npos) symmetry_reported = true;
  CHECK(symmetry_reported);

  // every classical metric also passes the flavored checks on s-inputs
  for (Flavor fl : {Flavor::w(), Flavor::w_ranked(0), Flavor::strict_ranked(2)})
    CHECK(metric_axioms_check(points.size(), metric, fl).passed());
}

TEST_CASE("coherence of continuity codes") {
  auto d = [](std::size_t i, std::size_t j) {
    return rat_of(i > j ? static_cast<std::int64_t>(i - j) : static_cast<std::int64_t>(j - i), 1);
  };

  ContinuityCode empty{{}, Flavor::s()};
  CHECK(coherence_check(empty, d, d).verdict == TruthValue::t());

  // two images of the same source ball, too far apart for their radii
  ContinuityCode clash{{{0, q(1, 1), 0, q(1, 1)}, {0, q(1, 1), 3, q(1, 1)}}, Flavor::s()};
  CoherenceResult r = coherence_check(clash, d, d);
  CHECK(r.verdict == TruthValue::f());
  bool cond1 = false;
  for (const auto& v : r.violations)
    if (v.find("condition 1") != std::string::npos) cond1 = true;
  CHECK(cond1);

  // identity map on three points with generous matching radii
  ContinuityCode identity{{{0, q(10, 1), 0, q(10, 1)},
                           {1, q(10, 1), 1, q(10, 1)},
                           {2, q(10, 1), 2, q(10, 1)}},
                          Flavor::s()};
  CHECK(coherence_check(identity, d, d).verdict == TruthValue::t());
}
