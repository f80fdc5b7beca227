// Batch front end: parse and number formulas, evaluate over finite models,
// run the axiom soundness suites, solve comprehension instances, and
// reproduce the two diagonal constructions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parith/axioms.hpp"
#include "parith/diagonal.hpp"
#include "parith/errors.hpp"
#include "parith/model.hpp"
#include "parith/numbers.hpp"
#include "parith/parse.hpp"

using json = nlohmann::ordered_json;
using namespace parith;

namespace {

Flavor flavor_from_text_or_throw(const std::string& text) {
  auto fl = parse_flavor_text(text);
  if (!fl) throw Error("bad flavor '" + text + "' (want s, w, w(N) or w[N])");
  return *fl;
}

Structure load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file " + path);
  json doc = json::parse(in);
  std::uint64_t bound = doc.at("bound").get<std::uint64_t>();
  unsigned max_rank = doc.value("max_rank", 0u);
  Structure s = canonical_structure(bound, max_rank);
  if (doc.contains("subsets")) {
    for (const auto& table_doc : doc.at("subsets")) {
      MembershipTable t;
      for (const auto& entry : table_doc) {
        Element e{entry.at("magnitude").get<std::uint64_t>(),
                  flavor_from_text_or_throw(entry.at("flavor").get<std::string>())};
        auto v = parse_truth_text(entry.at("value").get<std::string>());
        if (!v) throw Error("bad truth value in model file");
        t.set(e, *v);
      }
      s.subsets.push_back(std::move(t));
    }
  }
  return s;
}

std::string ast_text(const Term& t, int indent);
std::string ast_text(const Formula& f, int indent);

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 2, ' '); }

std::string ast_text(const Term& t, int indent) {
  switch (t.kind()) {
    case Term::Kind::Var: return pad(indent) + "var " + t.var_name() + "\n";
    case Term::Kind::Const:
      return pad(indent) + (t.const_kind() == ConstKind::Zero ? "zero @" : "one @") +
             t.const_flavor().text() + "\n";
    case Term::Kind::Add:
      return pad(indent) + "add\n" + ast_text(t.lhs(), indent + 1) + ast_text(t.rhs(), indent + 1);
    case Term::Kind::Mul:
      return pad(indent) + "mul\n" + ast_text(t.lhs(), indent + 1) + ast_text(t.rhs(), indent + 1);
  }
  return "";
}

std::string ast_text(const Formula& f, int indent) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      return pad(indent) + (f.kind() == Formula::Kind::Eq ? "eq @" : "lt @") +
             f.atom_flavor().text() + "\n" + ast_text(f.atom_lhs(), indent + 1) +
             ast_text(f.atom_rhs(), indent + 1);
    case Formula::Kind::Mem:
      return pad(indent) + "mem @" + f.atom_flavor().text() + " set " + f.mem_set() + "\n" +
             ast_text(f.atom_lhs(), indent + 1);
    case Formula::Kind::Not:
      return pad(indent) + "not\n" + ast_text(f.child(), indent + 1);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      const char* name = f.kind() == Formula::Kind::And       ? "and"
                         : f.kind() == Formula::Kind::Or      ? "or"
                         : f.kind() == Formula::Kind::Implies ? "implies"
                                                              : "iff";
      return pad(indent) + name + "\n" + ast_text(f.left(), indent + 1) +
             ast_text(f.right(), indent + 1);
    }
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet: {
      bool universal =
          f.kind() == Formula::Kind::ForallNum || f.kind() == Formula::Kind::ForallSet;
      return pad(indent) + (universal ? "forall " : "exists ") + f.bound_var() + "\n" +
             ast_text(f.child(), indent + 1);
    }
    case Formula::Kind::RankOp:
      return pad(indent) + "rank " + f.rank_flavor().text() + "\n" +
             ast_text(f.child(), indent + 1);
  }
  return "";
}

json element_json(const Element& e) {
  return json{{"magnitude", e.magnitude}, {"flavor", e.flavor.text()}};
}

// --- rational expressions: INT/INT@FLAVOR with + - * and parentheses ---

struct RatParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit RatParser(const std::string& s) : src(s) {}

  void skip() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  char peek() {
    skip();
    return pos < src.size() ? src[pos] : '\0';
  }

  std::int64_t integer() {
    skip();
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos; }
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw Error("expected an integer in rational expression");
    std::int64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  ParaRat literal() {
    std::int64_t num = integer();
    std::int64_t den = 1;
    if (peek() == '/') { ++pos; den = integer(); }
    Flavor fl = Flavor::s();
    if (peek() == '@') {
      ++pos;
      skip();
      std::size_t start = pos;
      if (pos < src.size() && (src[pos] == 's' || src[pos] == 'w')) {
        ++pos;
        if (pos < src.size() && (src[pos] == '(' || src[pos] == '[')) {
          char close = src[pos] == '(' ? ')' : ']';
          ++pos;
          while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
          if (pos < src.size() && src[pos] == close) ++pos;
        }
      }
      fl = flavor_from_text_or_throw(src.substr(start, pos - start));
    }
    return rat_canonicalize(num, den, fl);
  }

  ParaRat factor() {
    if (peek() == '-') { ++pos; return rat_neg(factor()); }
    if (peek() == '(') {
      ++pos;
      ParaRat v = expr();
      if (peek() != ')') throw Error("expected ')' in rational expression");
      ++pos;
      return v;
    }
    return literal();
  }

  ParaRat product() {
    ParaRat v = factor();
    while (peek() == '*') { ++pos; v = rat_mul(v, factor()); }
    return v;
  }

  ParaRat expr() {
    ParaRat v = product();
    while (true) {
      char c = peek();
      if (c == '+') { ++pos; v = rat_add(v, product()); }
      else if (c == '-') { ++pos; v = rat_sub(v, product()); }
      else break;
    }
    return v;
  }
};

ParaReal load_real_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open digit file " + path);
  std::string header;
  if (!std::getline(in, header) || header != "0.")
    throw Error("digit file must start with a '0.' header line");
  std::vector<int> digits;
  char c;
  while (in.get(c)) {
    if (c == '\n' || c == '\r') continue;
    if (c < '0' || c > '9') throw Error("digit file contains a non-digit byte");
    digits.push_back(c - '0');
  }
  return ParaReal::from_digits(std::move(digits), Flavor::s());
}

std::vector<DigitTable> load_tables_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tables file " + path);
  std::vector<DigitTable> tables;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    DigitTable row;
    for (char c : line) {
      if (c == '\r') continue;
      if (c < '0' || c > '9') throw Error("tables file contains a non-digit character");
      row.push_back(c - '0');
    }
    tables.push_back(std::move(row));
  }
  return tables;
}

int run(int argc, char** argv) {
  CLI::App app{"paraconsistent second-order arithmetic workbench"};
  app.require_subcommand(1);

  std::string formula_text, model_path, k_text, tables_path, scheme_text = "v1";
  std::string rat_expr, real_a, real_b, flavor_text = "s", group_text_opt = "all";
  unsigned rank = 0, samples = 8;
  std::size_t depth = 1;
  bool as_json = false;

  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and print its tree");
  cmd_parse->add_option("formula", formula_text)->required();
  cmd_parse->add_flag("--json", as_json);

  auto* cmd_godel = app.add_subcommand("godel", "print the code of a formula");
  cmd_godel->add_option("formula", formula_text)->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a closed formula over a model");
  cmd_eval->add_option("formula", formula_text)->required();
  cmd_eval->add_option("--model", model_path)->required();

  auto* cmd_axioms = app.add_subcommand("axioms", "axiom suites");
  auto* cmd_check = cmd_axioms->add_subcommand("check", "run soundness checks over a model");
  cmd_check->add_option("--model", model_path)->required();
  cmd_check->add_option("--group", group_text_opt, "i, ii, iii, v or all");
  cmd_check->add_option("--samples", samples);

  auto* cmd_compr = app.add_subcommand("comprehend", "solve a comprehension instance");
  cmd_compr->add_option("formula", formula_text)->required();
  cmd_compr->add_option("--model", model_path)->required();
  cmd_compr->add_option("--scheme", scheme_text, "iv, v1, v2 or v3");
  cmd_compr->add_option("--rank", rank);
  cmd_compr->add_flag("--json", as_json);

  auto* cmd_berry = app.add_subcommand("berry", "bounded-definability diagonal");
  cmd_berry->add_option("--model", model_path)->required();
  cmd_berry->add_option("--k", k_text)->required();
  cmd_berry->add_flag("--json", as_json);

  auto* cmd_richard = app.add_subcommand("richard", "digit-table diagonal");
  cmd_richard->add_option("--tables", tables_path)->required();
  cmd_richard->add_flag("--json", as_json);

  auto* cmd_rat = app.add_subcommand("rat", "rational arithmetic");
  auto* cmd_rat_eval = cmd_rat->add_subcommand("eval", "evaluate a rational expression");
  cmd_rat_eval->add_option("expr", rat_expr)->required();

  auto* cmd_real = app.add_subcommand("real", "truncated reals");
  auto* cmd_real_cmp = cmd_real->add_subcommand("cmp", "compare two digit files");
  cmd_real_cmp->add_option("file1", real_a)->required();
  cmd_real_cmp->add_option("file2", real_b)->required();
  cmd_real_cmp->add_option("--depth", depth)->required();
  cmd_real_cmp->add_option("--flavor", flavor_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (cmd_parse->parsed()) {
    Formula f = parse(formula_text);
    if (as_json) {
      json out{{"canonical", print(f)},
               {"code", godel_number(f).to_decimal()}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << ast_text(f, 0);
      std::cout << "canonical: " << print(f) << "\n";
    }
    return 0;
  }
  if (cmd_godel->parsed()) {
    std::cout << godel_number(parse(formula_text)).to_decimal() << "\n";
    return 0;
  }
  if (cmd_eval->parsed()) {
    Structure s = load_model(model_path);
    Formula f = parse(formula_text);
    FreeVars fv = free_vars(f);
    if (!fv.num.empty() || !fv.set.empty()) {
      std::cerr << "eval needs a closed formula\n";
      return 2;
    }
    TruthValue v = eval(s, Assignment{}, f);
    std::cout << v.text() << "\n";
    return is_designated(v) ? 0 : 1;
  }
  if (cmd_check->parsed()) {
    Structure s = load_model(model_path);
    std::vector<std::pair<std::string, GroupFamily>> wanted;
    if (group_text_opt == "i" || group_text_opt == "all") wanted.emplace_back("i", GroupFamily::I);
    if (group_text_opt == "ii" || group_text_opt == "all") wanted.emplace_back("ii", GroupFamily::II);
    if (group_text_opt == "iii" || group_text_opt == "all")
      wanted.emplace_back("iii", GroupFamily::III);
    if (group_text_opt == "v") wanted.emplace_back("v", GroupFamily::V);
    if (wanted.empty()) {
      std::cerr << "unknown group " << group_text_opt << "\n";
      return 2;
    }
    bool ok = true;
    for (const auto& [name, family] : wanted) {
      GroupReport report = check_group(s, family, samples);
      std::cout << "group " << name << ":\n" << report.text();
      ok = ok && report.all_passed();
    }
    return ok ? 0 : 1;
  }
  if (cmd_compr->parsed()) {
    Structure s = load_model(model_path);
    Formula phi = parse(formula_text);
    ComprehensionScheme scheme;
    if (scheme_text == "iv") scheme = ComprehensionScheme::Classical;
    else if (scheme_text == "v1") scheme = ComprehensionScheme::Weak;
    else if (scheme_text == "v2") scheme = ComprehensionScheme::WeakRanked;
    else if (scheme_text == "v3") scheme = ComprehensionScheme::StrictInconsistent;
    else {
      std::cerr << "unknown scheme " << scheme_text << "\n";
      return 2;
    }
    MembershipTable table = solve_comprehension(s, phi, scheme, rank);
    Classification cls = classify(s, table);
    if (as_json) {
      json entries = json::array();
      for (const auto& [e, v] : table.entries()) {
        json entry = element_json(e);
        entry["value"] = v.text();
        entries.push_back(entry);
      }
      std::cout << json{{"classification", cls.text()}, {"entries", entries}}.dump() << "\n";
    } else {
      for (const auto& [e, v] : table.entries())
        std::cout << e.text() << " -> " << v.text() << "\n";
      std::cout << "classification: " << cls.text() << "\n";
    }
    return 0;
  }
  if (cmd_berry->parsed()) {
    Structure s = load_model(model_path);
    BerryReport report = berry(s, BigNat::from_decimal(k_text));
    if (as_json) {
      json a_k = json::array();
      for (const Element& e : report.a_k) a_k.push_back(element_json(e));
      json out{{"k", report.k.to_decimal()},
               {"A_k", a_k},
               {"B_k", element_json(report.b_k)},
               {"defining_code", report.defining_code.to_decimal()},
               {"contradiction", report.contradiction},
               {"membership_value", report.membership_value.text()}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "A_k:";
      for (const Element& e : report.a_k) std::cout << " " << e.text();
      std::cout << "\nB_k: " << report.b_k.text() << "\n";
      std::cout << "defining code: " << report.defining_code.to_decimal() << "\n";
      std::cout << "contradiction: " << (report.contradiction ? "yes" : "no") << "\n";
      std::cout << "membership value: " << report.membership_value.text() << "\n";
    }
    return 0;
  }
  if (cmd_richard->parsed()) {
    std::vector<DigitTable> tables = load_tables_file(tables_path);
    ParaReal diag = richard_diagonal(tables);
    RichardReport report = richard_verify(tables, diag);
    if (as_json) {
      json table_rows = json::array();
      for (const DigitTable& t : report.tables) table_rows.push_back(t);
      json mismatches = json::array();
      for (std::size_t p : report.mismatches) mismatches.push_back(p);
      json out{{"tables", table_rows},
               {"diagonal", diag.text()},
               {"mismatches", mismatches},
               {"self_membership", report.self_membership.text()}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "diagonal: " << diag.text() << "\n";
      std::cout << "mismatches at:";
      for (std::size_t p : report.mismatches) std::cout << " " << p;
      std::cout << "\nself membership: " << report.self_membership.text() << "\n";
    }
    return report.mismatches.size() == tables.size() ? 0 : 1;
  }
  if (cmd_rat_eval->parsed()) {
    RatParser rp(rat_expr);
    ParaRat v = rp.expr();
    rp.skip();
    if (rp.pos != rat_expr.size()) throw Error("trailing input in rational expression");
    std::cout << v.text() << "\n";
    return 0;
  }
  if (cmd_real_cmp->parsed()) {
    ParaReal x = load_real_file(real_a);
    ParaReal y = load_real_file(real_b);
    Flavor fl = flavor_from_text_or_throw(flavor_text);
    x.flavor = fl.is_s() ? Flavor::s() : fl;
    y.flavor = x.flavor;
    TruthValue eq = real_compare(RelSym::Eq, x, y, fl, depth);
    TruthValue lt = real_compare(RelSym::Lt, x, y, fl, depth);
    std::cout << "eq: " << eq.text() << "\nlt: " << lt.text() << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const RankError& e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return 2;
  } catch (const SortError& e) {
    std::cerr << "sort error: " << e.what() << "\n";
    return 2;
  } catch (const NoFixpoint& e) {
    std::cerr << "no fixpoint: " << e.what() << "\n";
    return 1;
  } catch (const AllDefined& e) {
    std::cerr << "all defined: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
