#pragma once

#include <cstdint>
#include <vector>

#include "parith/godel.hpp"
#include "parith/model.hpp"
#include "parith/numbers.hpp"

namespace parith {

struct BerryReport {
  GodelCode k;
  std::vector<Element> a_k;        // w-definable elements with code <= k
  Element b_k;                     // w-least element outside a_k
  GodelCode defining_code;         // code of the canonical min-of-complement formula
  bool contradiction = false;      // defining_code <= k
  TruthValue membership_value;     // Both(w(0)) once the contradiction registers
};

// The fixed formula pinning down the least element missing from X; its
// existential closure carries the code compared against k.
Formula berry_meta_formula();

// Builds the bounded w-definability pool (at most count_cap formulas of code
// <= k), takes the w-least element of the undefined remainder, and registers
// the contradiction when the meta-formula's own code falls under k.
// Throws AllDefined when every w-element is definable at this bound.
BerryReport berry(const Structure& s, const GodelCode& k, std::size_t count_cap = 10000);

using DigitTable = std::vector<int>;

struct RichardReport {
  std::vector<DigitTable> tables;
  ParaReal diagonal;
  std::vector<std::size_t> mismatches;  // 1-based positions p with tables[p](p) != diagonal(p)
  TruthValue self_membership;           // Both(w(0))
};

// Flips the p-th digit of the p-th table: 1 where the diagonal digit is not
// 1, else 0. Table p must have at least p digits (ShortTable otherwise).
ParaReal richard_diagonal(const std::vector<DigitTable>& tables);

RichardReport richard_verify(const std::vector<DigitTable>& tables, const ParaReal& diagonal);

}  // namespace parith
