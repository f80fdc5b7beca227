#include "parith/truth.hpp"

namespace parith {

std::optional<TruthValue> parse_truth_text(const std::string& text) {
  if (text == "T") return TruthValue::t();
  if (text == "F") return TruthValue::f();
  if (text.size() > 2 && text[0] == 'B' && text[1] == '_') {
    auto fl = parse_flavor_text(text.substr(2));
    if (fl && !fl->is_s()) return TruthValue::both(*fl);
  }
  return std::nullopt;
}

}  // namespace parith
