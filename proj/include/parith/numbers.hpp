#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parith/ast.hpp"
#include "parith/errors.hpp"
#include "parith/flavor.hpp"
#include "parith/truth.hpp"

namespace parith {

// Flavored natural number.
struct ParaNat {
  std::uint64_t magnitude = 0;
  Flavor flavor;

  friend bool operator==(const ParaNat& a, const ParaNat& b) {
    return a.magnitude == b.magnitude && a.flavor == b.flavor;
  }
  std::string text() const { return std::to_string(magnitude) + "@" + flavor.text(); }
};

ParaNat nat_add(const ParaNat& a, const ParaNat& b);
ParaNat nat_mul(const ParaNat& a, const ParaNat& b);

// Flavored integer as a canonical difference of naturals: at least one of
// the two components is zero and both share the flavor.
struct ParaInt {
  ParaNat pos;
  ParaNat neg;

  static ParaInt from_signed(std::int64_t v, Flavor fl);
  std::int64_t signed_value() const;
  Flavor flavor() const { return pos.flavor; }

  friend bool operator==(const ParaInt& a, const ParaInt& b) {
    return a.pos == b.pos && a.neg == b.neg;
  }
};

ParaInt int_add(const ParaInt& a, const ParaInt& b);
ParaInt int_neg(const ParaInt& a);
ParaInt int_mul(const ParaInt& a, const ParaInt& b);

// Flavored rational in canonical form: gcd-reduced with positive
// denominator, the class minimum of its cross-multiplication equivalence
// class. The flavor is the join of the component flavors.
struct ParaRat {
  ParaInt num;
  ParaInt den;

  Flavor flavor() const { return flavor_join(num.flavor(), den.flavor()); }
  std::string text() const;

  friend bool operator==(const ParaRat& a, const ParaRat& b) {
    return a.num == b.num && a.den == b.den;
  }
};

ParaRat rat_canonicalize(std::int64_t num, std::int64_t den, Flavor fl);
ParaRat rat_of(std::int64_t num, std::int64_t den) ;
ParaRat rat_add(const ParaRat& a, const ParaRat& b);
ParaRat rat_neg(const ParaRat& a);
ParaRat rat_sub(const ParaRat& a, const ParaRat& b);
ParaRat rat_mul(const ParaRat& a, const ParaRat& b);

// Flavored comparison: classical on values for s; for a non-s flavor a
// magnitude-true order claim (or a refuted equality) involving an operand of
// that flavor lands on Both(a).
TruthValue rat_compare(RelSym rel, const ParaRat& a, const ParaRat& b, Flavor alpha);

// |q| branching on designatedness of 0 <=_a q.
ParaRat abs_value(const ParaRat& q, Flavor alpha);

// h(0,m) = f(m); h(n+1,m) = g(n,m,h(n,m)). The recursion argument's flavor
// threads into the step index.
template <typename V>
V prim_rec(const std::function<V(const ParaNat&)>& base,
           const std::function<V(const ParaNat&, const ParaNat&, const V&)>& step,
           const ParaNat& n, const ParaNat& m, std::uint64_t depth_cap = 1000000);

// Exponentiation by primitive recursion; base case yields one at the
// exponent's flavor.
ParaNat nat_pow(const ParaNat& m, const ParaNat& n);

// Finite-prefix Cauchy test: for every listed epsilon some m inside the
// prefix bounds all later differences below epsilon under the flavored order.
TruthValue cauchy_check(const std::vector<ParaRat>& prefix, const std::vector<ParaRat>& epsilons,
                        Flavor alpha);

// Truncated decimal expansion 0.d1 d2 ... with a flavor tag.
struct ParaReal {
  std::vector<int> digits;
  Flavor flavor;

  static ParaReal from_digits(std::vector<int> digits, Flavor fl);
  std::string text() const;
};

// Digit-prefix comparison to the requested depth. Prefix-decided verdicts
// are classical; an undecided comparison at matching non-s flavor sits in
// the contradiction window Both(a).
TruthValue real_compare(RelSym rel, const ParaReal& x, const ParaReal& y, Flavor alpha,
                        std::size_t depth);

struct MetricReport {
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// Checks identity, nonnegativity, symmetry and the triangle inequality of d
// over points 0..n_points-1 under flavored designatedness.
MetricReport metric_axioms_check(std::size_t n_points,
                                 const std::function<ParaRat(std::size_t, std::size_t)>& d,
                                 Flavor alpha);

// One entry of a finite code for a continuous map: ball a,r maps into ball b,s.
struct ContinuityQuad {
  std::size_t a;
  ParaRat r;
  std::size_t b;
  ParaRat s;

  friend bool operator==(const ContinuityQuad& x, const ContinuityQuad& y) {
    return x.a == y.a && x.r == y.r && x.b == y.b && x.s == y.s;
  }
};

struct ContinuityCode {
  std::vector<ContinuityQuad> quads;
  Flavor flavor;
};

struct CoherenceResult {
  TruthValue verdict;
  std::vector<std::string> violations;
};

// The three coherence conditions over the supplied finite universe:
// consistency of images sharing a source ball, and the two closure
// obligations (membership checked against the supplied quadruples).
CoherenceResult coherence_check(const ContinuityCode& phi,
                                const std::function<ParaRat(std::size_t, std::size_t)>& d_a,
                                const std::function<ParaRat(std::size_t, std::size_t)>& d_b);

// --- template definition ---

template <typename V>
V prim_rec(const std::function<V(const ParaNat&)>& base,
           const std::function<V(const ParaNat&, const ParaNat&, const V&)>& step,
           const ParaNat& n, const ParaNat& m, std::uint64_t depth_cap) {
  if (n.magnitude > depth_cap) throw DepthExceeded("recursion argument exceeds depth cap");
  V acc = base(m);
  for (std::uint64_t k = 0; k < n.magnitude; ++k)
    acc = step(ParaNat{k, n.flavor}, m, acc);
  return acc;
}

}  // namespace parith
