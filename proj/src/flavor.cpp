#include "parith/flavor.hpp"

#include <cctype>

namespace parith {

std::optional<Flavor> parse_flavor_text(const std::string& text) {
  if (text == "s") return Flavor::s();
  if (text == "w") return Flavor::w();
  if (text.size() >= 4 && text[0] == 'w') {
    char open = text[1];
    char close = text.back();
    bool paren = open == '(' && close == ')';
    bool bracket = open == '[' && close == ']';
    if (!paren && !bracket) return std::nullopt;
    unsigned rank = 0;
    if (text.size() == 4 && !std::isdigit(static_cast<unsigned char>(text[2]))) return std::nullopt;
    for (std::size_t i = 2; i + 1 < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      rank = rank * 10 + static_cast<unsigned>(text[i] - '0');
    }
    return paren ? Flavor::w_ranked(rank) : Flavor::strict_ranked(rank);
  }
  return std::nullopt;
}

}  // namespace parith
