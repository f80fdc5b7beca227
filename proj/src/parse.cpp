#include "parith/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "parith/errors.hpp"

namespace parith {

namespace {

enum class Tok : std::uint8_t {
  Ident, Forall, Exists, Const,
  Rel,        // =FL or <FL
  In,         // in_FL
  Not, And, Or, Implies, Iff,
  LParen, RParen, Dot, Plus, Star,
  RankOp,     // ^(N) or ^[N]
  End,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;     // identifier name
  Flavor flavor;        // Const / Rel / In / RankOp
  RelSym rel{};         // Rel
  ConstKind cnst{};     // Const
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  std::vector<Token> tokens;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < src.size(); ++i) {
      if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    throw SyntaxError(msg, at, line, col);
  }

  char peek() const { return pos < src.size() ? src[pos] : '\0'; }
  char at(std::size_t i) const { return i < src.size() ? src[i] : '\0'; }

  unsigned lex_rank(std::size_t& i, char close, std::size_t start) {
    if (at(i) == '-') throw RankError("negative rank annotation");
    if (!std::isdigit(static_cast<unsigned char>(at(i)))) throw RankError("malformed rank annotation");
    unsigned long rank = 0;
    while (std::isdigit(static_cast<unsigned char>(at(i)))) {
      rank = rank * 10 + static_cast<unsigned>(at(i) - '0');
      if (rank > 1000000) throw RankError("rank annotation out of range");
      ++i;
    }
    if (at(i) != close) {
      fail(std::string("expected '") + close + "' closing rank annotation", start);
    }
    ++i;
    return static_cast<unsigned>(rank);
  }

  // Flavor suffix immediately after the base character: s | w | w(N) | w[N].
  Flavor lex_flavor(std::size_t& i, std::size_t start) {
    char c = at(i);
    if (c == 's') { ++i; return Flavor::s(); }
    if (c != 'w') fail("expected flavor suffix s/w/w(N)/w[N]", start);
    ++i;
    if (at(i) == '(') { ++i; return Flavor::w_ranked(lex_rank(i, ')', start)); }
    if (at(i) == '[') { ++i; return Flavor::strict_ranked(lex_rank(i, ']', start)); }
    return Flavor::w();
  }

  void push(Tok k, std::size_t off) {
    Token t;
    t.kind = k;
    t.offset = off;
    tokens.push_back(std::move(t));
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++pos; continue; }
      std::size_t start = pos;
      if (c == '0' || c == '1') {
        std::size_t i = pos + 1;
        if (at(i) != '_') fail("bare numerals are not terms; constants are 0_FL/1_FL", start);
        ++i;
        Token t;
        t.kind = Tok::Const;
        t.offset = start;
        t.cnst = c == '0' ? ConstKind::Zero : ConstKind::One;
        t.flavor = lex_flavor(i, start);
        tokens.push_back(std::move(t));
        pos = i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t i = pos;
        while (std::isalnum(static_cast<unsigned char>(at(i))) || at(i) == '_') ++i;
        std::string word = src.substr(pos, i - pos);
        if (word == "forall") { push(Tok::Forall, start); pos = i; continue; }
        if (word == "exists") { push(Tok::Exists, start); pos = i; continue; }
        if (word.rfind("in_", 0) == 0) {
          std::size_t j = pos + 3;
          Token t;
          t.kind = Tok::In;
          t.offset = start;
          t.flavor = lex_flavor(j, start);
          tokens.push_back(std::move(t));
          pos = j;
          continue;
        }
        if (word.find('_') != std::string::npos)
          fail("identifiers may not contain '_'", start);
        Token t;
        t.kind = Tok::Ident;
        t.offset = start;
        t.text = std::move(word);
        tokens.push_back(std::move(t));
        pos = i;
        continue;
      }
      switch (c) {
        case '=': {
          std::size_t i = pos + 1;
          Token t;
          t.kind = Tok::Rel;
          t.offset = start;
          t.rel = RelSym::Eq;
          t.flavor = lex_flavor(i, start);
          tokens.push_back(std::move(t));
          pos = i;
          continue;
        }
        case '<': {
          if (at(pos + 1) == '-' && at(pos + 2) == '>') { push(Tok::Iff, start); pos += 3; continue; }
          std::size_t i = pos + 1;
          Token t;
          t.kind = Tok::Rel;
          t.offset = start;
          t.rel = RelSym::Lt;
          t.flavor = lex_flavor(i, start);
          tokens.push_back(std::move(t));
          pos = i;
          continue;
        }
        case '-':
          if (at(pos + 1) == '>') { push(Tok::Implies, start); pos += 2; continue; }
          fail("stray '-'", start);
        case '^': {
          std::size_t i = pos + 1;
          Token t;
          t.kind = Tok::RankOp;
          t.offset = start;
          if (at(i) == '(') { ++i; t.flavor = Flavor::w_ranked(lex_rank(i, ')', start)); }
          else if (at(i) == '[') { ++i; t.flavor = Flavor::strict_ranked(lex_rank(i, ']', start)); }
          else fail("expected ^(N) or ^[N]", start);
          tokens.push_back(std::move(t));
          pos = i;
          continue;
        }
        case '!': push(Tok::Not, start); ++pos; continue;
        case '&': push(Tok::And, start); ++pos; continue;
        case '|': push(Tok::Or, start); ++pos; continue;
        case '(': push(Tok::LParen, start); ++pos; continue;
        case ')': push(Tok::RParen, start); ++pos; continue;
        case '.': push(Tok::Dot, start); ++pos; continue;
        case '+': push(Tok::Plus, start); ++pos; continue;
        case '*': push(Tok::Star, start); ++pos; continue;
        default:
          fail("unexpected character '" + std::string(1, c) + "'", start);
      }
    }
    push(Tok::End, src.size());
  }
};

// Internal signal for the atom-vs-group backtrack point; never escapes parse().
struct Backtrack {};

struct Parser {
  const std::string& src;
  std::vector<Token> toks;
  std::size_t at = 0;
  bool committed = false;  // once a relation is seen, atom errors are final

  Parser(const std::string& s, Lexer&& lx) : src(s), toks(std::move(lx.tokens)) {}

  const Token& cur() const { return toks[at]; }
  bool is(Tok k) const { return cur().kind == k; }

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t off = cur().offset;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < off && i < src.size(); ++i) {
      if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    throw SyntaxError(msg, off, line, col);
  }

  Token expect(Tok k, const std::string& what) {
    if (!is(k)) fail("expected " + what);
    return toks[at++];
  }

  // --- terms ---

  Term term_primary(bool backtrackable) {
    if (is(Tok::Ident)) {
      const Token& t = toks[at++];
      if (is_set_var_name(t.text)) {
        --at;
        if (backtrackable && !committed) throw Backtrack{};
        fail("set variable " + t.text + " used as a numerical term");
      }
      return Term::var(t.text);
    }
    if (is(Tok::Const)) {
      const Token& t = toks[at++];
      return Term::constant(t.cnst, t.flavor);
    }
    if (is(Tok::LParen)) {
      ++at;
      Term inner = term(backtrackable);
      if (!is(Tok::RParen)) {
        if (backtrackable && !committed) throw Backtrack{};
        fail("expected ')' in term");
      }
      ++at;
      return inner;
    }
    if (backtrackable && !committed) throw Backtrack{};
    fail("expected a term");
  }

  Term term_factor(bool bt) {
    Term t = term_primary(bt);
    while (is(Tok::Star)) {
      ++at;
      t = Term::mul(t, term_primary(bt));
    }
    return t;
  }

  Term term(bool bt) {
    Term t = term_factor(bt);
    while (is(Tok::Plus)) {
      ++at;
      t = Term::add(t, term_factor(bt));
    }
    return t;
  }

  // --- formulas ---

  Formula atom(bool bt) {
    Term lhs = term(bt);
    if (is(Tok::Rel)) {
      Token r = toks[at++];
      committed = true;
      Term rhs = term(false);
      return r.rel == RelSym::Eq ? Formula::eq(lhs, rhs, r.flavor)
                                 : Formula::lt(lhs, rhs, r.flavor);
    }
    if (is(Tok::In)) {
      Token r = toks[at++];
      committed = true;
      Token sv = expect(Tok::Ident, "a set variable after membership");
      if (!is_set_var_name(sv.text)) fail("membership requires a set variable (uppercase)");
      return Formula::mem(lhs, sv.text, r.flavor);
    }
    if (bt && !committed) throw Backtrack{};
    fail("expected a relation");
  }

  Formula primary() {
    // An atom may itself start with '('; try it first and fall back to a
    // parenthesized formula.
    if (is(Tok::LParen)) {
      std::size_t save = at;
      bool saved_committed = committed;
      committed = false;
      try {
        Formula a = atom(true);
        committed = saved_committed;
        return a;
      } catch (const Backtrack&) {
        at = save;
        committed = saved_committed;
      }
      ++at;
      Formula inner = formula();
      expect(Tok::RParen, "')'");
      Formula out = inner;
      while (is(Tok::RankOp)) {
        Token op = toks[at++];
        out = Formula::rank_op(out, op.flavor);
      }
      return out;
    }
    return atom(false);
  }

  Formula unary() {
    if (is(Tok::Not)) {
      ++at;
      return Formula::negation(unary());
    }
    if (is(Tok::Forall) || is(Tok::Exists)) {
      bool univ = is(Tok::Forall);
      ++at;
      Token v = expect(Tok::Ident, "a variable after quantifier");
      expect(Tok::Dot, "'.' after quantified variable");
      Formula body = formula();
      if (is_set_var_name(v.text))
        return univ ? Formula::forall_set(v.text, body) : Formula::exists_set(v.text, body);
      return univ ? Formula::forall_num(v.text, body) : Formula::exists_num(v.text, body);
    }
    return primary();
  }

  Formula conj() {
    Formula f = unary();
    while (is(Tok::And)) {
      ++at;
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (is(Tok::Or)) {
      ++at;
      f = Formula::disjunction(f, conj());
    }
    return f;
  }

  Formula impl() {
    Formula f = disj();
    if (is(Tok::Implies)) {
      ++at;
      return Formula::implication(f, impl());  // right associative
    }
    return f;
  }

  Formula formula() {
    Formula f = impl();
    while (is(Tok::Iff)) {
      ++at;
      f = Formula::equivalence(f, impl());
    }
    return f;
  }
};

}  // namespace

Formula parse(const std::string& text) {
  Parser p(text, Lexer(text));
  Formula f = p.formula();
  if (!p.is(Tok::End)) p.fail("trailing input after formula");
  return f;
}

Term parse_term(const std::string& text) {
  Parser p(text, Lexer(text));
  Term t = p.term(false);
  if (!p.is(Tok::End)) p.fail("trailing input after term");
  return t;
}

}  // namespace parith
