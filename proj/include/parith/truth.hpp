#pragma once

#include <cassert>
#include <string>

#include "parith/flavor.hpp"

namespace parith {

// A value of the ranked contradiction lattice: classical True/False, or
// Both(flavor) recording that a fact and its negation hold at that level.
// Both never carries flavor s.
class TruthValue {
 public:
  constexpr TruthValue() : tag_(Tag::False_), flavor_() {}

  static constexpr TruthValue t() { return TruthValue(Tag::True_, Flavor::s()); }
  static constexpr TruthValue f() { return TruthValue(Tag::False_, Flavor::s()); }
  static constexpr TruthValue classical(bool b) { return b ? t() : f(); }
  static TruthValue both(Flavor fl) {
    assert(!fl.is_s());
    return TruthValue(Tag::Both_, fl);
  }

  constexpr bool is_true() const { return tag_ == Tag::True_; }
  constexpr bool is_false() const { return tag_ == Tag::False_; }
  constexpr bool is_both() const { return tag_ == Tag::Both_; }
  constexpr bool is_classical() const { return tag_ != Tag::Both_; }
  constexpr Flavor both_flavor() const { return flavor_; }

  friend constexpr bool operator==(TruthValue a, TruthValue b) {
    if (a.tag_ != b.tag_) return false;
    if (a.tag_ != Tag::Both_) return true;
    return a.flavor_ == b.flavor_;
  }
  friend constexpr bool operator!=(TruthValue a, TruthValue b) { return !(a == b); }

  std::string text() const {
    switch (tag_) {
      case Tag::True_: return "T";
      case Tag::False_: return "F";
      case Tag::Both_: return "B_" + flavor_.text();
    }
    return "?";
  }

  // Position in the total order used by the lattice connectives:
  //   F < B_w[n] < B_w(n) < B_w < T,
  // and within one ranked band a higher rank sits closer to F.
  friend constexpr bool truth_less(TruthValue a, TruthValue b) {
    int ca = a.category(), cb = b.category();
    if (ca != cb) return ca < cb;
    if (ca == 1 || ca == 2) return a.flavor_.rank() > b.flavor_.rank();
    return false;
  }

 private:
  enum class Tag : std::uint8_t { False_, True_, Both_ };

  constexpr TruthValue(Tag t, Flavor fl) : tag_(t), flavor_(fl) {}

  constexpr int category() const {
    switch (tag_) {
      case Tag::False_: return 0;
      case Tag::Both_:
        switch (flavor_.kind()) {
          case FlavorKind::StrictRanked: return 1;
          case FlavorKind::WRanked: return 2;
          default: return 3;
        }
      case Tag::True_: return 4;
    }
    return 0;
  }

  Tag tag_;
  Flavor flavor_;
};

// LP-style tables. True/False swap under negation, every Both value is a
// fixed point. Conjunction and disjunction are min and max in the order
// above; the arrow connectives are derived.
constexpr TruthValue negate(TruthValue v) {
  if (v.is_true()) return TruthValue::f();
  if (v.is_false()) return TruthValue::t();
  return v;
}

constexpr TruthValue conjoin(TruthValue a, TruthValue b) { return truth_less(a, b) ? a : b; }
constexpr TruthValue disjoin(TruthValue a, TruthValue b) { return truth_less(a, b) ? b : a; }
constexpr TruthValue implies(TruthValue a, TruthValue b) { return disjoin(negate(a), b); }
constexpr TruthValue iff(TruthValue a, TruthValue b) {
  return conjoin(implies(a, b), implies(b, a));
}

// True and every Both count as holding; only False fails.
constexpr bool is_designated(TruthValue v) { return !v.is_false(); }

// The rank operators re-tag the level of a contradiction and leave the
// classical values alone. `op` must be a ranked flavor.
inline TruthValue apply_rank(TruthValue v, Flavor op) {
  assert(op.is_ranked());
  if (v.is_both()) return TruthValue::both(op);
  return v;
}

// Re-tag used internally by the unranked comprehension scheme; accepts w.
inline TruthValue retag_both(TruthValue v, Flavor fl) {
  if (v.is_both()) return TruthValue::both(fl);
  return v;
}

std::optional<TruthValue> parse_truth_text(const std::string& text);

}  // namespace parith
