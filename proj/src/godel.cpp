#include "parith/godel.hpp"

#include <array>
#include <cassert>
#include <deque>
#include <map>
#include <unordered_map>

#include "parith/errors.hpp"

namespace parith {

// The code is size-lexicographic: the AST serializes to a string over a
// fixed 14-symbol alphabet and the string is read as a bijective base-14
// numeral, so shorter serializations always code below longer ones and the
// order within one length is lexicographic. Every syntactic position knows
// its own sub-alphabet, which keeps the decoding deterministic:
//
//   formula tag : Eq 0, Lt 1, Mem 2, Not 3, And 4, Or 5, Implies 6, Iff 7,
//                 ForallNum 8, ExistsNum 9, ForallSet 10, ExistsSet 11,
//                 RankOp 12        (13 marks a standalone term)
//   term tag    : n 0, m 1, k 2, escaped-name 3, zero 4, one 5, add 6, mul 7
//   flavor      : s 0, w 1, w(rank) 2, w[rank] 3
//   rank flavor : w(rank) 0, w[rank] 1
//   set name    : X 0, Y 1, escaped-name 2
//   natural     : unary-prefixed binary of n+1 over U 0, B0 1, B1 2
//
// Escaped names read identifiers as bijective base-63 numerals; the five
// pool variables use the one-symbol forms so enumerated formulas stay small.

namespace {

constexpr std::uint32_t kAlphabet = 14;

constexpr std::uint8_t kTagEq = 0, kTagLt = 1, kTagMem = 2, kTagNot = 3, kTagAnd = 4,
                       kTagOr = 5, kTagImplies = 6, kTagIff = 7, kTagForallNum = 8,
                       kTagExistsNum = 9, kTagForallSet = 10, kTagExistsSet = 11,
                       kTagRankOp = 12, kTagStandaloneTerm = 13;

constexpr std::uint8_t kTermV0 = 0, kTermV1 = 1, kTermV2 = 2, kTermEsc = 3, kTermZero = 4,
                       kTermOne = 5, kTermAdd = 6, kTermMul = 7;

constexpr std::uint8_t kFlS = 0, kFlW = 1, kFlWR = 2, kFlSR = 3;
constexpr std::uint8_t kRFlWR = 0, kRFlSR = 1;
constexpr std::uint8_t kSetX = 0, kSetY = 1, kSetEsc = 2;
constexpr std::uint8_t kNatU = 0, kNatB0 = 1, kNatB1 = 2;

const char* const kNumPool[3] = {"n", "m", "k"};
const char* const kSetPool[2] = {"X", "Y"};

int char_value(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a';
  if (c >= 'A' && c <= 'Z') return 26 + (c - 'A');
  if (c >= '0' && c <= '9') return 52 + (c - '0');
  if (c == '_') return 62;
  return -1;
}

std::uint64_t name_code(const std::string& name) {
  if (name.empty() || name.size() > 10)
    throw ResourceError("variable name too long to encode: " + name);
  std::uint64_t acc = 0;
  for (char c : name) {
    int v = char_value(c);
    if (v < 0) throw ResourceError("variable name has uncodable character: " + name);
    acc = acc * 63 + static_cast<std::uint64_t>(v) + 1;
  }
  return acc;
}

std::string name_from_code(std::uint64_t code) {
  std::string rev;
  while (code > 0) {
    std::uint64_t d = (code - 1) % 63;
    code = (code - 1) / 63;
    char c;
    if (d < 26) c = static_cast<char>('a' + d);
    else if (d < 52) c = static_cast<char>('A' + (d - 26));
    else if (d < 62) c = static_cast<char>('0' + (d - 52));
    else c = '_';
    rev.push_back(c);
  }
  return std::string(rev.rbegin(), rev.rend());
}

void emit_nat(std::uint64_t n, std::vector<std::uint8_t>& out) {
  std::uint64_t shifted = n + 1;
  int bits = 0;
  for (std::uint64_t v = shifted; v != 0; v >>= 1) ++bits;
  for (int i = 0; i < bits - 1; ++i) out.push_back(kNatU);
  for (int i = bits - 1; i >= 0; --i)
    out.push_back((shifted >> i) & 1 ? kNatB1 : kNatB0);
}

void emit_flavor(Flavor fl, std::vector<std::uint8_t>& out) {
  switch (fl.kind()) {
    case FlavorKind::S: out.push_back(kFlS); return;
    case FlavorKind::W: out.push_back(kFlW); return;
    case FlavorKind::WRanked: out.push_back(kFlWR); break;
    case FlavorKind::StrictRanked: out.push_back(kFlSR); break;
  }
  emit_nat(fl.rank(), out);
}

void emit_rank_flavor(Flavor fl, std::vector<std::uint8_t>& out) {
  out.push_back(fl.kind() == FlavorKind::WRanked ? kRFlWR : kRFlSR);
  emit_nat(fl.rank(), out);
}

void emit_num_name(const std::string& name, std::vector<std::uint8_t>& out) {
  for (std::uint8_t i = 0; i < 3; ++i) {
    if (name == kNumPool[i]) { out.push_back(i); return; }
  }
  out.push_back(kTermEsc);
  emit_nat(name_code(name), out);
}

void emit_set_name(const std::string& name, std::vector<std::uint8_t>& out) {
  for (std::uint8_t i = 0; i < 2; ++i) {
    if (name == kSetPool[i]) { out.push_back(i); return; }
  }
  out.push_back(kSetEsc);
  emit_nat(name_code(name), out);
}

void emit_term(const Term& t, std::vector<std::uint8_t>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      emit_num_name(t.var_name(), out);
      return;
    case Term::Kind::Const:
      out.push_back(t.const_kind() == ConstKind::Zero ? kTermZero : kTermOne);
      emit_flavor(t.const_flavor(), out);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out.push_back(t.kind() == Term::Kind::Add ? kTermAdd : kTermMul);
      emit_term(t.lhs(), out);
      emit_term(t.rhs(), out);
      return;
  }
}

void emit_formula(const Formula& f, std::vector<std::uint8_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      out.push_back(f.kind() == Formula::Kind::Eq ? kTagEq : kTagLt);
      emit_flavor(f.atom_flavor(), out);
      emit_term(f.atom_lhs(), out);
      emit_term(f.atom_rhs(), out);
      return;
    case Formula::Kind::Mem:
      out.push_back(kTagMem);
      emit_flavor(f.atom_flavor(), out);
      emit_term(f.atom_lhs(), out);
      emit_set_name(f.mem_set(), out);
      return;
    case Formula::Kind::Not:
      out.push_back(kTagNot);
      emit_formula(f.child(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      std::uint8_t tag = kTagAnd;
      if (f.kind() == Formula::Kind::Or) tag = kTagOr;
      if (f.kind() == Formula::Kind::Implies) tag = kTagImplies;
      if (f.kind() == Formula::Kind::Iff) tag = kTagIff;
      out.push_back(tag);
      emit_formula(f.left(), out);
      emit_formula(f.right(), out);
      return;
    }
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsNum:
      out.push_back(f.kind() == Formula::Kind::ForallNum ? kTagForallNum : kTagExistsNum);
      emit_num_name(f.bound_var(), out);
      emit_formula(f.child(), out);
      return;
    case Formula::Kind::ForallSet:
    case Formula::Kind::ExistsSet:
      out.push_back(f.kind() == Formula::Kind::ForallSet ? kTagForallSet : kTagExistsSet);
      emit_set_name(f.bound_var(), out);
      emit_formula(f.child(), out);
      return;
    case Formula::Kind::RankOp:
      out.push_back(kTagRankOp);
      emit_rank_flavor(f.rank_flavor(), out);
      emit_formula(f.child(), out);
      return;
  }
}

// --- decoding ---

struct Reader {
  const std::vector<std::uint8_t>& sym;
  std::size_t pos = 0;

  std::uint8_t next() {
    if (pos >= sym.size()) throw Error("truncated formula code");
    return sym[pos++];
  }

  std::uint64_t read_nat() {
    int unary = 0;
    std::uint8_t c = next();
    while (c == kNatU) { ++unary; c = next(); }
    if (c != kNatB1) throw Error("malformed natural in formula code");
    std::uint64_t v = 1;
    for (int i = 0; i < unary; ++i) {
      std::uint8_t b = next();
      if (b != kNatB0 && b != kNatB1) throw Error("malformed natural in formula code");
      v = (v << 1) | (b == kNatB1 ? 1 : 0);
    }
    return v - 1;
  }

  Flavor read_flavor() {
    switch (next()) {
      case kFlS: return Flavor::s();
      case kFlW: return Flavor::w();
      case kFlWR: return Flavor::w_ranked(static_cast<unsigned>(read_nat()));
      case kFlSR: return Flavor::strict_ranked(static_cast<unsigned>(read_nat()));
      default: throw Error("bad flavor symbol");
    }
  }

  Flavor read_rank_flavor() {
    switch (next()) {
      case kRFlWR: return Flavor::w_ranked(static_cast<unsigned>(read_nat()));
      case kRFlSR: return Flavor::strict_ranked(static_cast<unsigned>(read_nat()));
      default: throw Error("bad rank flavor symbol");
    }
  }

  std::string read_num_name() {
    std::uint8_t c = next();
    if (c < 3) return kNumPool[c];
    if (c == kTermEsc) return name_from_code(read_nat());
    throw Error("bad number variable symbol");
  }

  std::string read_set_name() {
    std::uint8_t c = next();
    if (c < 2) return kSetPool[c];
    if (c == kSetEsc) return name_from_code(read_nat());
    throw Error("bad set variable symbol");
  }

  Term read_term() {
    std::uint8_t c = next();
    switch (c) {
      case kTermV0: case kTermV1: case kTermV2: return Term::var(kNumPool[c]);
      case kTermEsc: return Term::var(name_from_code(read_nat()));
      case kTermZero: return Term::constant(ConstKind::Zero, read_flavor());
      case kTermOne: return Term::constant(ConstKind::One, read_flavor());
      case kTermAdd: { Term l = read_term(); Term r = read_term(); return Term::add(l, r); }
      case kTermMul: { Term l = read_term(); Term r = read_term(); return Term::mul(l, r); }
      default: throw Error("bad term symbol");
    }
  }

  Formula read_formula() {
    std::uint8_t c = next();
    switch (c) {
      case kTagEq: {
        Flavor fl = read_flavor();
        Term l = read_term(), r = read_term();
        return Formula::eq(l, r, fl);
      }
      case kTagLt: {
        Flavor fl = read_flavor();
        Term l = read_term(), r = read_term();
        return Formula::lt(l, r, fl);
      }
      case kTagMem: {
        Flavor fl = read_flavor();
        Term l = read_term();
        return Formula::mem(l, read_set_name(), fl);
      }
      case kTagNot: return Formula::negation(read_formula());
      case kTagAnd: { Formula a = read_formula(), b = read_formula(); return Formula::conjunction(a, b); }
      case kTagOr: { Formula a = read_formula(), b = read_formula(); return Formula::disjunction(a, b); }
      case kTagImplies: { Formula a = read_formula(), b = read_formula(); return Formula::implication(a, b); }
      case kTagIff: { Formula a = read_formula(), b = read_formula(); return Formula::equivalence(a, b); }
      case kTagForallNum: { std::string v = read_num_name(); return Formula::forall_num(v, read_formula()); }
      case kTagExistsNum: { std::string v = read_num_name(); return Formula::exists_num(v, read_formula()); }
      case kTagForallSet: { std::string v = read_set_name(); return Formula::forall_set(v, read_formula()); }
      case kTagExistsSet: { std::string v = read_set_name(); return Formula::exists_set(v, read_formula()); }
      case kTagRankOp: { Flavor fl = read_rank_flavor(); return Formula::rank_op(read_formula(), fl); }
      default: throw Error("bad formula symbol");
    }
  }
};

}  // namespace

std::uint64_t pair_code(std::uint64_t m, std::uint64_t n) {
  unsigned __int128 s = static_cast<unsigned __int128>(m) + n;
  unsigned __int128 v = s * s + m;
  if (v > static_cast<unsigned __int128>(UINT64_MAX))
    throw ResourceError("pairing overflow");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint8_t> serialize_formula(const Formula& f) {
  std::vector<std::uint8_t> out;
  emit_formula(f, out);
  return out;
}

GodelCode code_of_symbols(const std::vector<std::uint8_t>& symbols) {
  BigNat acc;
  for (std::uint8_t d : symbols) acc.mul_add_small(kAlphabet, static_cast<std::uint32_t>(d) + 1);
  return acc;
}

Formula decode_formula(const std::vector<std::uint8_t>& symbols) {
  Reader r{symbols};
  Formula f = r.read_formula();
  if (r.pos != symbols.size()) throw Error("trailing symbols in formula code");
  return f;
}

GodelCode godel_number(const Formula& f) { return code_of_symbols(serialize_formula(f)); }

GodelCode godel_number(const Term& t) {
  std::vector<std::uint8_t> out;
  out.push_back(kTagStandaloneTerm);
  emit_term(t, out);
  return code_of_symbols(out);
}

// ---------------------------------------------------------------------------
// Enumeration: depth-first generation of pool serializations in length-then-
// lexicographic order, which is exactly ascending code order.

namespace {

constexpr int kMaxLen = 48;

// Grammar nonterminals of the pool language (escapes excluded, ranks 0..2).
enum NT : int { NT_F, NT_T, NT_FL, NT_RFL, NT_NV, NT_SV, NT_NAT, NT_LITB1, NT_BIT, NT_COUNT };

struct Production {
  std::uint8_t lead;
  std::vector<int> children;
};

const std::vector<Production>& productions(int nt) {
  static const std::array<std::vector<Production>, NT_COUNT> table = {{
      // NT_F
      {{kTagEq, {NT_FL, NT_T, NT_T}},
       {kTagLt, {NT_FL, NT_T, NT_T}},
       {kTagMem, {NT_FL, NT_T, NT_SV}},
       {kTagNot, {NT_F}},
       {kTagAnd, {NT_F, NT_F}},
       {kTagOr, {NT_F, NT_F}},
       {kTagImplies, {NT_F, NT_F}},
       {kTagIff, {NT_F, NT_F}},
       {kTagForallNum, {NT_NV, NT_F}},
       {kTagExistsNum, {NT_NV, NT_F}},
       {kTagForallSet, {NT_SV, NT_F}},
       {kTagExistsSet, {NT_SV, NT_F}},
       {kTagRankOp, {NT_RFL, NT_F}}},
      // NT_T
      {{kTermV0, {}},
       {kTermV1, {}},
       {kTermV2, {}},
       {kTermZero, {NT_FL}},
       {kTermOne, {NT_FL}},
       {kTermAdd, {NT_T, NT_T}},
       {kTermMul, {NT_T, NT_T}}},
      // NT_FL
      {{kFlS, {}}, {kFlW, {}}, {kFlWR, {NT_NAT}}, {kFlSR, {NT_NAT}}},
      // NT_RFL
      {{kRFlWR, {NT_NAT}}, {kRFlSR, {NT_NAT}}},
      // NT_NV
      {{kTermV0, {}}, {kTermV1, {}}, {kTermV2, {}}},
      // NT_SV
      {{kSetX, {}}, {kSetY, {}}},
      // NT_NAT: rank 0 is B1; ranks 1 and 2 are U B1 bit
      {{kNatU, {NT_LITB1, NT_BIT}}, {kNatB1, {}}},
      // NT_LITB1
      {{kNatB1, {}}},
      // NT_BIT
      {{kNatB0, {}}, {kNatB1, {}}},
  }};
  return table[nt];
}

using LenSet = std::array<bool, kMaxLen + 1>;

const std::array<LenSet, NT_COUNT>& achievable_lengths() {
  static const std::array<LenSet, NT_COUNT> result = [] {
    std::array<LenSet, NT_COUNT> reach{};
    bool changed = true;
    while (changed) {
      changed = false;
      for (int nt = 0; nt < NT_COUNT; ++nt) {
        for (const auto& prod : productions(nt)) {
          // lengths achievable by the child sequence
          std::array<bool, kMaxLen + 1> seq{};
          seq[0] = true;
          for (int child : prod.children) {
            std::array<bool, kMaxLen + 1> next{};
            for (int a = 0; a <= kMaxLen; ++a) {
              if (!seq[a]) continue;
              for (int b = 0; a + b <= kMaxLen; ++b)
                if (reach[child][b]) next[a + b] = true;
            }
            seq = next;
          }
          for (int l = 0; l + 1 <= kMaxLen; ++l) {
            if (seq[l] && !reach[nt][l + 1]) {
              reach[nt][l + 1] = true;
              changed = true;
            }
          }
        }
      }
    }
    return reach;
  }();
  return result;
}

// A pending-suffix stack node; chains are interned so the feasibility memo
// can key on pointers.
struct Pending {
  int nt;
  const Pending* next;
};

struct Enumerator {
  std::deque<Pending> arena;
  std::map<std::pair<int, const Pending*>, const Pending*> interned;
  std::unordered_map<const Pending*, std::vector<signed char>> feasible_memo;
  const std::array<LenSet, NT_COUNT>& reach = achievable_lengths();

  const Pending* cons(int nt, const Pending* next) {
    auto key = std::make_pair(nt, next);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    arena.push_back(Pending{nt, next});
    const Pending* p = &arena.back();
    interned.emplace(key, p);
    return p;
  }

  bool can_complete(const Pending* p, int rem) {
    if (rem < 0) return false;
    if (p == nullptr) return rem == 0;
    auto& memo = feasible_memo[p];
    if (memo.empty()) memo.assign(kMaxLen + 1, -1);
    if (memo[rem] >= 0) return memo[rem] == 1;
    bool ok = false;
    for (int l = 1; l <= rem && !ok; ++l)
      if (reach[p->nt][l] && can_complete(p->next, rem - l)) ok = true;
    memo[rem] = ok ? 1 : 0;
    return ok;
  }

  // Emits every serialization of `stack` with exactly `rem` symbols, in
  // lexicographic order. Returns false when the sink asks to stop.
  template <typename Sink>
  bool dfs(const Pending* stack, int rem, std::vector<std::uint8_t>& prefix, Sink&& sink) {
    if (stack == nullptr) {
      if (rem == 0) return sink(prefix);
      return true;
    }
    for (const auto& prod : productions(stack->nt)) {
      const Pending* rest = stack->next;
      for (auto it = prod.children.rbegin(); it != prod.children.rend(); ++it)
        rest = cons(*it, rest);
      if (!can_complete(rest, rem - 1)) continue;
      prefix.push_back(prod.lead);
      bool keep_going = dfs(rest, rem - 1, prefix, sink);
      prefix.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Formula> enumerate_formulas(const GodelCode& limit, const EnumOptions& opts) {
  std::vector<Formula> out;
  Enumerator en;
  const Pending* start = en.cons(NT_F, nullptr);
  BigNat min_code_at_len = 0;  // code of the all-zero string of length L
  bool done = false;
  for (int len = 1; len <= kMaxLen && !done; ++len) {
    min_code_at_len.mul_add_small(kAlphabet, 1);
    if (min_code_at_len > limit) break;
    if (!en.reach[NT_F][len]) continue;
    std::vector<std::uint8_t> prefix;
    en.dfs(start, len, prefix, [&](const std::vector<std::uint8_t>& symbols) {
      if (code_of_symbols(symbols) > limit) {
        done = true;  // codes ascend within a length batch
        return false;
      }
      if (out.size() >= opts.count_cap) {
        if (opts.truncate) {
          done = true;
          return false;
        }
        throw ResourceError("formula pool exceeds cap of " + std::to_string(opts.count_cap));
      }
      out.push_back(decode_formula(symbols));
      return true;
    });
  }
  return out;
}

}  // namespace parith
