#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parith/ast.hpp"
#include "parith/model.hpp"

namespace parith {

enum class Group {
  I1, I2, I3, I4, I5, I6, I7, I8,
  II1, II2, II3, II4, II5, II6, II7,
  III1, III2, III3,
  IV1, V1, V2, V3,
};

std::string group_text(Group g);

struct SchemaId {
  Group group;
  std::optional<unsigned> rank;  // present exactly for the rank-indexed schemas

  friend bool operator==(const SchemaId& a, const SchemaId& b) {
    return a.group == b.group && a.rank == b.rank;
  }
  std::string text() const;
};

// Template parameters. Group i needs a flavor; the comprehension schemas
// need the formula; the rank-family induction axioms take the expansion
// bound for their conjunction over ranks.
struct Bindings {
  std::optional<Flavor> flavor;
  std::optional<Formula> phi;
  std::optional<unsigned> expansion_rank;
};

struct SchemaInstance {
  SchemaId id;
  Formula formula;
};

// Builds the universal closure of the schema with the bindings applied.
// Throws SortError / RankError on ill-typed bindings.
SchemaInstance instantiate(const SchemaId& id, const Bindings& bindings);

// Recognizes closed formulas as schema instances, up to renaming of bound
// variables.
std::optional<SchemaId> is_axiom_instance(const Formula& f);

enum class GroupFamily { I, II, III, V };

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct GroupReport {
  std::vector<CheckItem> items;
  bool all_passed() const {
    for (const auto& item : items)
      if (!item.passed) return false;
    return true;
  }
  std::string text() const;
};

// Model-based soundness suites.
//  I   - every basic-axiom instance (all flavors up to the structure's rank)
//        evaluates designated; failures report a witness assignment.
//  II  - the second-order induction closures evaluate designated over the
//        structure's subset range.
//  III - every nonempty flavored subset in range has a least element under
//        the flavored order (least: no other member is designated-below it).
//  V   - `samples` enumerated formulas run through the unrestricted
//        comprehension solver; the scheme biconditional must come back
//        designated (the classical scheme is exercised alongside).
GroupReport check_group(const Structure& s, GroupFamily family, unsigned samples = 8);

}  // namespace parith
