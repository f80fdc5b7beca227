#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace parith {

enum class FlavorKind : std::uint8_t {
  S,             // strictly consistent
  W,             // weakly inconsistent
  WRanked,       // weakly inconsistent with rank n, written w(n)
  StrictRanked,  // strictly inconsistent with rank n, written w[n]
};

// The consistency tag carried by relations, constants and truth values.
// Rank is meaningful only for the two ranked kinds.
class Flavor {
 public:
  constexpr Flavor() : kind_(FlavorKind::S), rank_(0) {}

  static constexpr Flavor s() { return Flavor(FlavorKind::S, 0); }
  static constexpr Flavor w() { return Flavor(FlavorKind::W, 0); }
  static constexpr Flavor w_ranked(unsigned rank) { return Flavor(FlavorKind::WRanked, rank); }
  static constexpr Flavor strict_ranked(unsigned rank) { return Flavor(FlavorKind::StrictRanked, rank); }

  constexpr FlavorKind kind() const { return kind_; }
  constexpr unsigned rank() const { return rank_; }
  constexpr bool is_ranked() const {
    return kind_ == FlavorKind::WRanked || kind_ == FlavorKind::StrictRanked;
  }
  constexpr bool is_s() const { return kind_ == FlavorKind::S; }

  friend constexpr bool operator==(Flavor a, Flavor b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

  // Deterministic enumeration order: s, w, w(0), w[0], w(1), w[1], ...
  // The two rank hierarchies are dovetailed.
  constexpr std::uint64_t enumeration_key() const {
    switch (kind_) {
      case FlavorKind::S: return 0;
      case FlavorKind::W: return 1;
      case FlavorKind::WRanked: return 2 + 2 * static_cast<std::uint64_t>(rank_);
      case FlavorKind::StrictRanked: return 3 + 2 * static_cast<std::uint64_t>(rank_);
    }
    return 0;
  }

  friend constexpr bool operator<(Flavor a, Flavor b) {
    return a.enumeration_key() < b.enumeration_key();
  }

  // Degree of inconsistency: s weakest, then w, then w(n), then w[n].
  constexpr int inconsistency_class() const {
    switch (kind_) {
      case FlavorKind::S: return 0;
      case FlavorKind::W: return 1;
      case FlavorKind::WRanked: return 2;
      case FlavorKind::StrictRanked: return 3;
    }
    return 0;
  }

  std::string text() const {
    switch (kind_) {
      case FlavorKind::S: return "s";
      case FlavorKind::W: return "w";
      case FlavorKind::WRanked: return "w(" + std::to_string(rank_) + ")";
      case FlavorKind::StrictRanked: return "w[" + std::to_string(rank_) + "]";
    }
    return "?";
  }

 private:
  constexpr Flavor(FlavorKind k, unsigned r) : kind_(k), rank_(r) {}

  FlavorKind kind_;
  unsigned rank_;
};

// Flavor of the result of a mixed-flavor arithmetic operation: the more
// inconsistent operand wins; within one ranked kind the higher rank wins.
constexpr Flavor flavor_join(Flavor a, Flavor b) {
  if (a.inconsistency_class() != b.inconsistency_class())
    return a.inconsistency_class() > b.inconsistency_class() ? a : b;
  if (a.is_ranked()) return a.rank() >= b.rank() ? a : b;
  return a;
}

// Parses the textual suffix form: "s", "w", "w(3)", "w[3]".
std::optional<Flavor> parse_flavor_text(const std::string& text);

}  // namespace parith
