#pragma once

#include <cstdint>
#include <vector>

#include "parith/ast.hpp"
#include "parith/bignat.hpp"

namespace parith {

// Injective code of a well-formed formula or standalone term.
using GodelCode = BigNat;

// Strictly consistent pairing: (m + n)^2 + m.
std::uint64_t pair_code(std::uint64_t m, std::uint64_t n);

GodelCode godel_number(const Formula& f);
GodelCode godel_number(const Term& t);

struct EnumOptions {
  // Hard cap on how many formulas an enumeration may produce. When
  // `truncate` is false, exceeding the cap raises ResourceError; when true,
  // the enumeration stops at the cap (used for code-bounded definability
  // pools whose bound is far beyond the cap).
  std::size_t count_cap = 10000;
  bool truncate = false;
};

// All well-formed formulas over the fixed pool (number variables n, m, k;
// set variables X, Y; ranks 0..2) whose code is <= limit, ascending by code.
std::vector<Formula> enumerate_formulas(const GodelCode& limit, const EnumOptions& opts = {});

// Serialized symbol string underlying the code; exposed for tests.
std::vector<std::uint8_t> serialize_formula(const Formula& f);
GodelCode code_of_symbols(const std::vector<std::uint8_t>& symbols);
Formula decode_formula(const std::vector<std::uint8_t>& symbols);

}  // namespace parith
