#include "parith/numbers.hpp"

#include <numeric>

namespace parith {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN))
    throw ResourceError(std::string("integer overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

ParaNat nat_add(const ParaNat& a, const ParaNat& b) {
  return ParaNat{a.magnitude + b.magnitude, flavor_join(a.flavor, b.flavor)};
}

ParaNat nat_mul(const ParaNat& a, const ParaNat& b) {
  return ParaNat{a.magnitude * b.magnitude, flavor_join(a.flavor, b.flavor)};
}

ParaInt ParaInt::from_signed(std::int64_t v, Flavor fl) {
  if (v >= 0) return ParaInt{ParaNat{static_cast<std::uint64_t>(v), fl}, ParaNat{0, fl}};
  return ParaInt{ParaNat{0, fl}, ParaNat{static_cast<std::uint64_t>(-v), fl}};
}

std::int64_t ParaInt::signed_value() const {
  return static_cast<std::int64_t>(pos.magnitude) - static_cast<std::int64_t>(neg.magnitude);
}

ParaInt int_add(const ParaInt& a, const ParaInt& b) {
  Wide v = static_cast<Wide>(a.signed_value()) + b.signed_value();
  return ParaInt::from_signed(narrow(v, "int_add"), flavor_join(a.flavor(), b.flavor()));
}

ParaInt int_neg(const ParaInt& a) { return ParaInt{a.neg, a.pos}; }

ParaInt int_mul(const ParaInt& a, const ParaInt& b) {
  Wide v = static_cast<Wide>(a.signed_value()) * b.signed_value();
  return ParaInt::from_signed(narrow(v, "int_mul"), flavor_join(a.flavor(), b.flavor()));
}

std::string ParaRat::text() const {
  return std::to_string(num.signed_value()) + "/" + std::to_string(den.signed_value()) + "@" +
         flavor().text();
}

ParaRat rat_canonicalize(std::int64_t num, std::int64_t den, Flavor fl) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  return ParaRat{ParaInt::from_signed(num, fl), ParaInt::from_signed(den, fl)};
}

ParaRat rat_of(std::int64_t num, std::int64_t den) {
  return rat_canonicalize(num, den, Flavor::s());
}

namespace {

ParaRat rat_from_wide(Wide num, Wide den, Flavor fl) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) { Wide t = a % b; a = b; b = t; }
  if (a > 1) { num /= a; den /= a; }
  return ParaRat{ParaInt::from_signed(narrow(num, "rational numerator"), fl),
                 ParaInt::from_signed(narrow(den, "rational denominator"), fl)};
}

}  // namespace

ParaRat rat_add(const ParaRat& a, const ParaRat& b) {
  Flavor fl = flavor_join(a.flavor(), b.flavor());
  Wide an = a.num.signed_value(), ad = a.den.signed_value();
  Wide bn = b.num.signed_value(), bd = b.den.signed_value();
  return rat_from_wide(an * bd + ad * bn, ad * bd, fl);
}

ParaRat rat_neg(const ParaRat& a) { return ParaRat{int_neg(a.num), a.den}; }

ParaRat rat_sub(const ParaRat& a, const ParaRat& b) { return rat_add(a, rat_neg(b)); }

ParaRat rat_mul(const ParaRat& a, const ParaRat& b) {
  Flavor fl = flavor_join(a.flavor(), b.flavor());
  Wide an = a.num.signed_value(), ad = a.den.signed_value();
  Wide bn = b.num.signed_value(), bd = b.den.signed_value();
  return rat_from_wide(an * bn, ad * bd, fl);
}

TruthValue rat_compare(RelSym rel, const ParaRat& a, const ParaRat& b, Flavor alpha) {
  Wide lhs = static_cast<Wide>(a.num.signed_value()) * b.den.signed_value();
  Wide rhs = static_cast<Wide>(a.den.signed_value()) * b.num.signed_value();
  bool flavor_hit = a.flavor() == alpha || b.flavor() == alpha;
  if (rel == RelSym::Eq) {
    bool equal = lhs == rhs;
    if (alpha.is_s()) return TruthValue::classical(equal);
    if (equal) return TruthValue::t();
    return flavor_hit ? TruthValue::both(alpha) : TruthValue::f();
  }
  bool less = lhs < rhs;
  if (alpha.is_s()) return TruthValue::classical(less);
  if (!less) return TruthValue::f();
  return flavor_hit ? TruthValue::both(alpha) : TruthValue::t();
}

ParaRat abs_value(const ParaRat& q, Flavor alpha) {
  ParaRat zero = rat_of(0, 1);
  TruthValue nonneg =
      disjoin(rat_compare(RelSym::Lt, zero, q, alpha), rat_compare(RelSym::Eq, zero, q, alpha));
  return is_designated(nonneg) ? q : rat_neg(q);
}

ParaNat nat_pow(const ParaNat& m, const ParaNat& n) {
  std::function<ParaNat(const ParaNat&)> base = [&](const ParaNat&) {
    return ParaNat{1, n.flavor};
  };
  std::function<ParaNat(const ParaNat&, const ParaNat&, const ParaNat&)> step =
      [](const ParaNat&, const ParaNat& mm, const ParaNat& acc) { return nat_mul(acc, mm); };
  return prim_rec<ParaNat>(base, step, n, m, 64);
}

TruthValue cauchy_check(const std::vector<ParaRat>& prefix, const std::vector<ParaRat>& epsilons,
                        Flavor alpha) {
  if (prefix.size() < 2) throw Error("cauchy check needs a prefix of length >= 2");
  for (const ParaRat& eps : epsilons) {
    bool witness = false;
    // m must bound at least one later element; the vacuous tail index would
    // certify any sequence.
    for (std::size_t m = 0; m + 1 < prefix.size() && !witness; ++m) {
      bool all = true;
      for (std::size_t n = m + 1; n < prefix.size(); ++n) {
        ParaRat diff = abs_value(rat_sub(prefix[m], prefix[n]), alpha);
        if (!is_designated(rat_compare(RelSym::Lt, diff, eps, alpha))) { all = false; break; }
      }
      witness = all;
    }
    if (!witness) return TruthValue::f();
  }
  return TruthValue::t();
}

ParaReal ParaReal::from_digits(std::vector<int> digits, Flavor fl) {
  if (digits.empty()) throw Error("real representation needs depth >= 1");
  for (int d : digits)
    if (d < 0 || d > 9) throw Error("decimal digit out of range");
  return ParaReal{std::move(digits), fl};
}

std::string ParaReal::text() const {
  std::string out = "0.";
  for (int d : digits) out += static_cast<char>('0' + d);
  return out + "@" + flavor.text();
}

TruthValue real_compare(RelSym rel, const ParaReal& x, const ParaReal& y, Flavor alpha,
                        std::size_t depth) {
  if (depth == 0 || x.digits.size() < depth || y.digits.size() < depth)
    throw DepthExceeded("real comparison past the available digits");
  int order = 0;
  for (std::size_t i = 0; i < depth; ++i) {
    if (x.digits[i] != y.digits[i]) { order = x.digits[i] < y.digits[i] ? -1 : 1; break; }
  }
  bool flavor_hit = x.flavor == alpha || y.flavor == alpha;
  if (rel == RelSym::Eq) {
    if (order != 0) return TruthValue::f();
    if (alpha.is_s()) return TruthValue::t();
    return flavor_hit ? TruthValue::both(alpha) : TruthValue::t();
  }
  if (order < 0) return TruthValue::t();
  if (order > 0) return TruthValue::f();
  // undecided at this depth
  if (alpha.is_s()) return TruthValue::f();
  return flavor_hit ? TruthValue::both(alpha) : TruthValue::f();
}

namespace {

bool leq_designated(const ParaRat& a, const ParaRat& b, Flavor alpha) {
  return is_designated(disjoin(rat_compare(RelSym::Lt, a, b, alpha),
                               rat_compare(RelSym::Eq, a, b, alpha)));
}

}  // namespace

MetricReport metric_axioms_check(std::size_t n_points,
                                 const std::function<ParaRat(std::size_t, std::size_t)>& d,
                                 Flavor alpha) {
  MetricReport report;
  ParaRat zero = rat_of(0, 1);
  for (std::size_t a = 0; a < n_points; ++a) {
    if (!is_designated(rat_compare(RelSym::Eq, d(a, a), zero, alpha)))
      report.violations.push_back("identity fails at point " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n_points; ++a) {
    for (std::size_t b = 0; b < n_points; ++b) {
      if (!leq_designated(zero, d(a, b), alpha))
        report.violations.push_back("nonnegativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
      if (!is_designated(rat_compare(RelSym::Eq, d(a, b), d(b, a), alpha)))
        report.violations.push_back("symmetry fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
  }
  for (std::size_t a = 0; a < n_points; ++a)
    for (std::size_t b = 0; b < n_points; ++b)
      for (std::size_t c = 0; c < n_points; ++c) {
        if (!leq_designated(d(a, c), rat_add(d(a, b), d(b, c)), alpha))
          report.violations.push_back("triangle fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
      }
  return report;
}

CoherenceResult coherence_check(const ContinuityCode& phi,
                                const std::function<ParaRat(std::size_t, std::size_t)>& d_a,
                                const std::function<ParaRat(std::size_t, std::size_t)>& d_b) {
  CoherenceResult result;
  Flavor alpha = phi.flavor;
  auto member = [&](const ContinuityQuad& q) {
    for (const auto& p : phi.quads)
      if (p == q) return true;
    return false;
  };
  auto quad_text = [](const ContinuityQuad& q) {
    return "(" + std::to_string(q.a) + "," + q.r.text() + "," + std::to_string(q.b) + "," +
           q.s.text() + ")";
  };

  // 1: two images of one source ball overlap.
  for (const auto& p : phi.quads)
    for (const auto& q : phi.quads) {
      if (!(p.a == q.a && p.r == q.r)) continue;
      if (!is_designated(rat_compare(RelSym::Lt, d_b(p.b, q.b), rat_add(p.s, q.s), alpha)))
        result.violations.push_back("condition 1: images of " + quad_text(p) + " and " +
                                    quad_text(q) + " sit too far apart");
    }
  // 2: widening the target ball keeps membership.
  for (const auto& p : phi.quads)
    for (const auto& q : phi.quads) {
      if (is_designated(rat_compare(RelSym::Lt, rat_add(d_b(p.b, q.b), p.s), q.s, alpha))) {
        ContinuityQuad wanted{p.a, p.r, q.b, q.s};
        if (!member(wanted))
          result.violations.push_back("condition 2: missing " + quad_text(wanted));
      }
    }
  // 3: shrinking the source ball keeps membership.
  for (const auto& p : phi.quads)
    for (const auto& q : phi.quads) {
      if (is_designated(rat_compare(RelSym::Lt, rat_add(d_a(p.a, q.a), q.r), p.r, alpha))) {
        ContinuityQuad wanted{q.a, q.r, p.b, p.s};
        if (!member(wanted))
          result.violations.push_back("condition 3: missing " + quad_text(wanted));
      }
    }
  result.verdict = TruthValue::classical(result.violations.empty());
  return result;
}

}  // namespace parith
