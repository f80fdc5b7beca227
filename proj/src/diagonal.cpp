#include "parith/diagonal.hpp"

#include <algorithm>

#include "parith/errors.hpp"

namespace parith {

Formula berry_meta_formula() {
  // n is not in X, and nothing outside X sits w-below n.
  Term n = Term::var("n");
  Term m = Term::var("m");
  Formula not_in = Formula::negation(Formula::mem(n, "X", Flavor::w()));
  Formula least = Formula::forall_num(
      "m", Formula::implication(Formula::negation(Formula::mem(m, "X", Flavor::w())),
                                Formula::negation(Formula::lt(m, n, Flavor::w()))));
  return Formula::exists_set("X", Formula::conjunction(not_in, least));
}

BerryReport berry(const Structure& s, const GodelCode& k, std::size_t count_cap) {
  BerryReport report;
  report.k = k;

  DefinabilityOptions opts;
  opts.count_cap = count_cap;
  opts.truncate = true;
  opts.slice = Flavor::w();
  report.a_k = definable_elements(s, k, opts);

  std::vector<Element> complement;
  for (const Element& e : s.carrier) {
    if (!(e.flavor == Flavor::w())) continue;
    if (std::find(report.a_k.begin(), report.a_k.end(), e) == report.a_k.end())
      complement.push_back(e);
  }
  if (complement.empty())
    throw AllDefined("every w-element is definable at this code bound");

  // w-least of the complement: no other member is designated-below it.
  std::optional<Element> least;
  for (const Element& cand : complement) {
    bool ok = true;
    for (const Element& other : complement) {
      if (other == cand) continue;
      if (is_designated(s.rel(RelSym::Lt, Flavor::w(), other, cand))) { ok = false; break; }
    }
    if (ok) { least = cand; break; }
  }
  if (!least) throw Error("complement has no w-least element");
  report.b_k = *least;

  report.defining_code = godel_number(berry_meta_formula());
  report.contradiction = !(report.defining_code > k);
  report.membership_value =
      report.contradiction ? TruthValue::both(Flavor::w_ranked(0)) : TruthValue::f();
  return report;
}

ParaReal richard_diagonal(const std::vector<DigitTable>& tables) {
  std::vector<int> digits;
  for (std::size_t p = 0; p < tables.size(); ++p) {
    if (tables[p].size() <= p)
      throw ShortTable("table " + std::to_string(p + 1) + " is too short", p + 1);
    digits.push_back(tables[p][p] != 1 ? 1 : 0);
  }
  if (digits.empty()) digits.push_back(0);  // representation depth >= 1
  return ParaReal::from_digits(std::move(digits), Flavor::w());
}

RichardReport richard_verify(const std::vector<DigitTable>& tables, const ParaReal& diagonal) {
  RichardReport report{tables, diagonal, {}, TruthValue::both(Flavor::w_ranked(0))};
  for (std::size_t p = 0; p < tables.size(); ++p) {
    if (tables[p].size() <= p || diagonal.digits.size() <= p) continue;
    if (tables[p][p] != diagonal.digits[p]) report.mismatches.push_back(p + 1);
  }
  return report;
}

}  // namespace parith
