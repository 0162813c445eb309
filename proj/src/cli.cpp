#include "settheory/cli.hpp"

#include "settheory/linorder.hpp"
#include "settheory/surreal.hpp"
#include "settheory/wforder.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace settheory::cli {

namespace {

// --- lexer --------------------------------------------------------------------

enum class Tok { End, Nat, Ident, Str, Plus, OPlus, Star, Caret, LParen, RParen, LBrace, RBrace, Comma, Slash, Minus, Equals, Colon };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Nat:
      return "number " + t.text;
    case Tok::Ident:
      return "identifier '" + t.text + "'";
    case Tok::Str:
      return "string \"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view s, int line, int offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return static_cast<int>(at) + 1 + offset; };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Nat, std::string(s.substr(start, i - start)), col(start)});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), col(start)});
      continue;
    }
    if (c == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos) throw SyntaxError("unterminated string", line, col(start), {"'\"'"});
      out.push_back({Tok::Str, std::string(s.substr(i + 1, close - i - 1)), col(start)});
      i = close + 1;
      continue;
    }
    if (s.substr(i, 3) == "(+)") {
      out.push_back({Tok::OPlus, "(+)", col(start)});
      i += 3;
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x8A\x95") {  // U+2295
      out.push_back({Tok::OPlus, "\xE2\x8A\x95", col(start)});
      i += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      case '/': kind = Tok::Slash; break;
      case '-': kind = Tok::Minus; break;
      case '=': kind = Tok::Equals; break;
      case ':': kind = Tok::Colon; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col(start),
                          {"expression"});
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), col(start)});
    ++i;
  }
  out.push_back({Tok::End, "", col(s.size())});
  return out;
}

// --- parser -------------------------------------------------------------------

const std::vector<std::string> kAtomStart{"'w'", "natural", "'-'", "'{'", "'('", "identifier"};

class Parser {
 public:
  Parser(std::vector<Token> tokens, int line) : toks_(std::move(tokens)), line_(line) {}

  Expr expression_only() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail({"'+'", "'(+)'", "'*'", "'^'", "end of input"});
    return e;
  }

  const Token& peek() const { return toks_[pos_]; }

 private:
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError("unexpected " + describe(peek()), line_, peek().column, std::move(expected));
  }

  Expr binary(Expr::Op op, Expr lhs, Expr rhs, int column) {
    Expr e;
    e.op = op;
    e.column = column;
    e.kids.push_back(std::move(lhs));
    e.kids.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::OPlus) {
      const Token& t = next();
      Expr rhs = term();
      lhs = binary(t.kind == Tok::Plus ? Expr::Op::Add : Expr::Op::OPlus, std::move(lhs), std::move(rhs), t.column);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::Star) {
      const int column = next().column;
      Expr rhs = factor();
      lhs = binary(Expr::Op::Mul, std::move(lhs), std::move(rhs), column);
    }
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (peek().kind != Tok::Caret) return base;
    const int column = next().column;
    Expr exponent = factor();
    return binary(Expr::Op::Pow, std::move(base), std::move(exponent), column);
  }

  Expr atom() {
    const Token& t = peek();
    Expr e;
    e.column = t.column;
    switch (t.kind) {
      case Tok::Ident:
        next();
        if (t.text == "w") {
          e.op = Expr::Op::Omega;
        } else {
          e.op = Expr::Op::Var;
          e.name = t.text;
        }
        return e;
      case Tok::Nat:
        next();
        e.num = BigInt(t.text);
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Nat) fail({"natural"});
          e.op = Expr::Op::Frac;
          e.den = BigInt(next().text);
          if (e.den == 0) throw SyntaxError("zero denominator", line_, t.column, {"positive natural"});
        } else {
          e.op = Expr::Op::Nat;
        }
        return e;
      case Tok::Minus:
        next();
        e.op = Expr::Op::Neg;
        e.kids.push_back(atom());
        return e;
      case Tok::LParen: {
        next();
        Expr inner = expr();
        if (peek().kind != Tok::RParen) fail({"'+'", "'(+)'", "'*'", "'^'", "')'"});
        next();
        return inner;
      }
      case Tok::LBrace:
        next();
        e.op = Expr::Op::Set;
        if (peek().kind == Tok::RBrace) {
          next();
          return e;
        }
        for (;;) {
          e.kids.push_back(expr());
          if (peek().kind == Tok::Comma) {
            next();
            continue;
          }
          if (peek().kind == Tok::RBrace) {
            next();
            return e;
          }
          fail({"','", "'}'", "'+'", "'*'", "'^'"});
        }
      default:
        fail(kAtomStart);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

const std::map<std::string, int, std::less<>>& command_arity() {
  static const std::map<std::string, int, std::less<>> table{
      {"cnf", 1},      {"hess", 2},    {"divmod", 2},  {"lsub", 2},   {"kind", 1},   {"cof", 1},
      {"simp", 2},     {"birthday", 1}, {"signs", 1},  {"fromsigns", 1}, {"options", 1}, {"stage", 1},
      {"cadd", 2},     {"cmul", 2},    {"tc", 1},      {"rank", 1},   {"power", 1},  {"vstage", 1},
      {"hull", 2},     {"ack", 1},     {"unack", 1},   {"encode", 1}, {"decode", 1}, {"collapse", 1},
      {"cbs", 1},      {"between", 2}, {"ucmp", 2},    {"bnf", 1},    {"cutclass", 2}, {"help", 0},
  };
  return table;
}

// Splits at whitespace outside brackets and quotes.
std::vector<Command::Arg> split_args(std::string_view s, int offset, int line) {
  std::vector<Command::Arg> out;
  int depth = 0;
  bool quoted = false;
  std::size_t start = std::string_view::npos;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const bool at_end = i == s.size();
    const char c = at_end ? ' ' : s[i];
    if (!at_end && c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
    }
    const bool space = std::isspace(static_cast<unsigned char>(c)) && depth <= 0 && !quoted;
    if (!space && start == std::string_view::npos) start = i;
    if ((space || at_end) && start != std::string_view::npos) {
      out.push_back({std::string(s.substr(start, i - start)), static_cast<int>(start) + 1 + offset});
      start = std::string_view::npos;
    }
  }
  if (quoted) throw SyntaxError("unterminated string", line, static_cast<int>(s.size()) + offset, {"'\"'"});
  return out;
}

// --- printing -------------------------------------------------------------------

int precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Add:
    case Expr::Op::OPlus:
      return 1;
    case Expr::Op::Mul:
      return 2;
    case Expr::Op::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string print_at(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return a.op == b.op && a.num == b.num && a.den == b.den && a.name == b.name && a.kids == b.kids;
}

std::string print(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Omega:
      return "w";
    case Expr::Op::Nat:
      return e.num.str();
    case Expr::Op::Frac:
      return e.num.str() + "/" + e.den.str();
    case Expr::Op::Var:
      return e.name;
    case Expr::Op::Neg:
      return "-" + print_at(e.kids[0], 4);
    case Expr::Op::Set: {
      std::string s = "{";
      for (std::size_t i = 0; i < e.kids.size(); ++i) s += (i ? "," : "") + print(e.kids[i]);
      return s + "}";
    }
    case Expr::Op::Add:
      return print_at(e.kids[0], 1) + "+" + print_at(e.kids[1], 2);
    case Expr::Op::OPlus:
      return print_at(e.kids[0], 1) + "(+)" + print_at(e.kids[1], 2);
    case Expr::Op::Mul:
      return print_at(e.kids[0], 2) + "*" + print_at(e.kids[1], 3);
    case Expr::Op::Pow:
      return print_at(e.kids[0], 4) + "^" + print_at(e.kids[1], 3);
  }
  return {};
}

bool is_command(std::string_view name) { return command_arity().contains(name); }

Expr parse_expr(std::string_view text, int line, int column_offset) {
  return Parser(lex(text, line, column_offset), line).expression_only();
}

namespace {

void check_arity(const Command& c, int line) {
  const int arity = command_arity().find(c.name)->second;
  if (static_cast<int>(c.args.size()) != arity) {
    throw SyntaxError(":" + c.name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") +
                          ", got " + std::to_string(c.args.size()),
                      line, c.column, {std::to_string(arity) + (arity == 1 ? " argument" : " arguments")});
  }
}

}  // namespace

Statement parse_statement(std::string_view text, int line, const std::map<std::string, bool>& bound) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  std::string_view body = text.substr(lead);
  const int offset = static_cast<int>(lead);

  auto word_end = [&](std::size_t from) {
    std::size_t i = from;
    while (i < body.size() && (std::isalnum(static_cast<unsigned char>(body[i])) || body[i] == '_')) ++i;
    return i;
  };

  if (!body.empty() && body[0] == ':') {
    const std::size_t end = word_end(1);
    std::string name(body.substr(1, end - 1));
    if (name.empty()) throw SyntaxError("missing command name", line, offset + 2, {"command"});
    if (!is_command(name)) throw SyntaxError("unknown command ':" + name + "'", line, offset + 2, {"command"});
    Command c{name, split_args(body.substr(end), offset + static_cast<int>(end), line), offset + 1};
    check_arity(c, line);
    return c;
  }

  const std::size_t end = word_end(0);
  std::string word(body.substr(0, end));
  if (word == "let") {
    std::string_view rest = body.substr(end);
    const std::size_t eq = rest.find('=');
    auto name_tokens = lex(rest.substr(0, eq == std::string_view::npos ? rest.size() : eq), line,
                           offset + static_cast<int>(end));
    if (name_tokens.size() != 2 || name_tokens[0].kind != Tok::Ident) {
      throw SyntaxError("let needs a single name", line, name_tokens[0].column, {"identifier"});
    }
    const std::string& name = name_tokens[0].text;
    if (name == "w" || name == "let") throw SyntaxError("'" + name + "' is reserved", line, name_tokens[0].column, {"identifier"});
    if (eq == std::string_view::npos) throw SyntaxError("let needs '='", line, name_tokens[1].column, {"'='"});
    Let l{name, parse_expr(rest.substr(eq + 1), line, offset + static_cast<int>(end + eq + 1))};
    return l;
  }
  if (!word.empty() && is_command(word) && !bound.contains(word)) {
    Command c{word, split_args(body.substr(end), offset + static_cast<int>(end), line), offset + 1};
    check_arity(c, line);
    return c;
  }
  return parse_expr(text, line, 0);
}

// --- values ---------------------------------------------------------------------

namespace {

// Naturals in set literals stand for von Neumann naturals up to this size.
constexpr std::size_t kMaxSetNatural = 4096;

std::string a_sort(const Value& v) {
  const std::string name = sort_name(v);
  return (name[0] == 'o' ? "an " : "a ") + name;
}

Value normalize(ord::Ordinal o) {
  if (auto n = o.as_natural()) return *n;
  return o;
}

ord::Ordinal to_ordinal(const Value& v, const char* what) {
  if (const auto* n = std::get_if<BigInt>(&v)) return ord::Ordinal(*n);
  if (const auto* o = std::get_if<ord::Ordinal>(&v)) return *o;
  throw SortError(std::string(what) + " expects an ordinal, got " + a_sort(v));
}

num::Frac to_frac(const Value& v, const char* what) {
  if (const auto* n = std::get_if<BigInt>(&v)) return num::q_make(num::ZInt{*n}, num::ZInt{1});
  if (const auto* q = std::get_if<num::Frac>(&v)) return *q;
  throw SortError(std::string(what) + " expects a rational, got " + a_sort(v));
}

sur::Dyadic to_dyadic(const Value& v, const char* what) {
  const num::Frac q = to_frac(v, what);
  auto d = num::to_dyadic(q);
  if (!d) throw DomainError(num::to_string(q) + " is not a dyadic rational");
  return *d;
}

std::size_t to_small(const Value& v, const char* what, std::size_t limit) {
  const auto* n = std::get_if<BigInt>(&v);
  if (!n) throw SortError(std::string(what) + " expects a natural, got " + a_sort(v));
  if (*n > limit) throw BudgetError(std::string(what) + " accepts naturals up to " + std::to_string(limit));
  return static_cast<std::size_t>(*n);
}

hf::HFSet to_hfset(const Value& v, const char* what) {
  if (const auto* s = std::get_if<SetValue>(&v)) {
    if (s->set) return *s->set;
    throw SortError(std::string(what) + " expects a set, got a set of rationals");
  }
  if (const auto* n = std::get_if<BigInt>(&v)) {
    if (*n <= kMaxSetNatural) return hf::vn_nat(static_cast<std::size_t>(*n));
    throw BudgetError("natural too large to materialize as a set");
  }
  throw SortError(std::string(what) + " expects a set, got " + a_sort(v));
}

std::vector<sur::Dyadic> to_dyadic_list(const Value& v, const char* what) {
  const auto* s = std::get_if<SetValue>(&v);
  if (!s || !s->numbers) throw SortError(std::string(what) + " expects a set of numbers");
  std::vector<sur::Dyadic> out;
  for (const auto& q : *s->numbers) out.push_back(to_dyadic(q, what));
  return out;
}

num::Frac frac_pow(const num::Frac& base, const BigInt& exponent) {
  if (abs(exponent) > 10000) throw BudgetError("rational exponent too large");
  num::Frac b = base;
  if (exponent < 0) {
    if (b.num() == 0) throw DomainError("zero has no reciprocal");
    const BigInt sign = b.num() < 0 ? -1 : 1;
    b = num::q_make(num::ZInt{b.den() * sign}, num::ZInt{abs(b.num())});
  }
  num::Frac out(1);
  for (BigInt k = abs(exponent); k > 0; --k) out = num::q_mul(out, b);
  return out;
}

Value apply(Expr::Op op, const Value& a, const Value& b) {
  const bool a_set = std::holds_alternative<SetValue>(a);
  const bool b_set = std::holds_alternative<SetValue>(b);
  if (a_set || b_set) throw SortError("arithmetic is not defined on sets");
  const bool a_rat = std::holds_alternative<num::Frac>(a);
  const bool b_rat = std::holds_alternative<num::Frac>(b);
  const bool a_ord = std::holds_alternative<ord::Ordinal>(a);
  const bool b_ord = std::holds_alternative<ord::Ordinal>(b);
  if ((a_rat && b_ord) || (a_ord && b_rat)) throw SortError("cannot mix ordinal and rational operands");

  if (a_rat || b_rat) {
    const num::Frac x = to_frac(a, "rational arithmetic");
    const num::Frac y = to_frac(b, "rational arithmetic");
    switch (op) {
      case Expr::Op::Add:
        return num::q_add(x, y);
      case Expr::Op::Mul:
        return num::q_mul(x, y);
      case Expr::Op::Pow:
        if (!y.is_integer()) throw DomainError("rational exponents must be integers");
        return frac_pow(x, y.num());
      default:
        throw SortError("natural sum (+) applies to ordinals only");
    }
  }
  // Naturals and ordinals: natural arithmetic is the finite case of ordinal
  // arithmetic.
  const ord::Ordinal x = to_ordinal(a, "ordinal arithmetic");
  const ord::Ordinal y = to_ordinal(b, "ordinal arithmetic");
  switch (op) {
    case Expr::Op::Add:
      return normalize(ord::add(x, y));
    case Expr::Op::OPlus:
      return normalize(ord::hessenberg(x, y));
    case Expr::Op::Mul:
      return normalize(ord::mul(x, y));
    default:
      return normalize(ord::opow(x, y));
  }
}

SetValue make_set(const std::vector<Value>& members) {
  std::vector<hf::HFSet> sets;
  std::vector<num::Frac> numbers;
  bool as_set = true;
  bool as_numbers = true;
  for (const auto& m : members) {
    if (const auto* n = std::get_if<BigInt>(&m)) {
      if (*n <= kMaxSetNatural) {
        sets.push_back(hf::vn_nat(static_cast<std::size_t>(*n)));
      } else {
        as_set = false;
      }
      numbers.push_back(num::q_make(num::ZInt{*n}, num::ZInt{1}));
    } else if (const auto* q = std::get_if<num::Frac>(&m)) {
      as_set = false;
      numbers.push_back(*q);
    } else if (const auto* s = std::get_if<SetValue>(&m)) {
      as_numbers = false;
      if (s->set) {
        sets.push_back(*s->set);
      } else {
        as_set = false;
      }
    } else {
      throw SortError("infinite ordinals cannot be members of a set literal");
    }
  }
  if (!as_set && !as_numbers) throw SortError("set literal mixes sets and rationals");
  SetValue v;
  if (as_set) v.set = hf::HFSet::of(std::move(sets));
  if (as_numbers) {
    auto less = [](const num::Frac& x, const num::Frac& y) { return num::q_cmp(x, y) < 0; };
    std::sort(numbers.begin(), numbers.end(), less);
    numbers.erase(std::unique(numbers.begin(), numbers.end()), numbers.end());
    v.numbers = std::move(numbers);
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

wf::FinDigraph load_digraph(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return wf::FinDigraph::parse_adjacency_json(text);
  return wf::FinDigraph::parse_edge_list(text);
}

// Either {"f": {...}, "g": {...}} or lines "f x y" / "g y x".
std::pair<wf::FinInjection, wf::FinInjection> load_injections(const std::string& path) {
  const std::string text = read_file(path);
  wf::FinInjection f;
  wf::FinInjection g;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SyntaxError(std::string("map file: ") + e.what(), 1, static_cast<int>(e.byte), {});
    }
    for (const char* key : {"f", "g"}) {
      if (!doc.contains(key) || !doc[key].is_object()) throw SyntaxError(std::string("map file needs an object '") + key + "'", 1, 1, {key});
      auto& target = key[0] == 'f' ? f : g;
      for (const auto& [x, y] : doc[key].items()) {
        if (!y.is_string()) throw SyntaxError("map values must be strings", 1, 1, {"string"});
        target.forward[x] = y.get<std::string>();
      }
    }
    return {f, g};
  }
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string which;
    std::string x;
    std::string y;
    if (!(fields >> which) || which[0] == '#') continue;
    if ((which != "f" && which != "g") || !(fields >> x >> y)) {
      throw SyntaxError("map lines read 'f x y' or 'g y x'", line_no, 1, {"f", "g"});
    }
    auto& target = which == "f" ? f : g;
    if (!target.forward.emplace(x, y).second) throw NotInjectiveError(which + " assigns " + x + " twice");
  }
  return {f, g};
}

std::vector<lin::BinString> parse_string_set(const Command::Arg& a, int line) {
  std::string_view s = a.text;
  auto bad = [&](const char* msg, std::vector<std::string> expected) {
    throw SyntaxError(msg, line, a.column, std::move(expected));
  };
  if (s.empty()) bad("missing argument", {"'{'"});
  if (s.front() != '{') return {lin::parse_binstring(s)};
  if (s.back() != '}') bad("unterminated string set", {"'}'"});
  std::vector<lin::BinString> out;
  std::string_view body = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view item = body.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) {
      out.push_back(lin::parse_binstring(item));
    } else if (comma < body.size()) {
      bad("empty member in string set; write \"\" for the empty string", {"\"\"", "0", "1"});
    }
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? std::string(sep) : "") + parts[i];
  return s;
}

std::string signs_text(const sur::SignExpansion& s) {
  return s.bits.empty() ? std::string("\"\"") : sur::to_string(s);
}

const char* kHelp =
    "expressions: w, naturals, m/n, -x, {..}, + * ^ (+); let x = expr\n"
    "ordinals:  :cnf a  :hess a b  :divmod b a  :lsub a b  :kind a  :cof a\n"
    "surreals:  :simp {l} {r}  :birthday x  :signs x  :fromsigns s  :options x  :stage n  :cadd x y  :cmul x y\n"
    "sets:      :tc s  :rank s|file  :power s  :vstage n  :hull s n  :ack s  :unack n  :encode q  :decode s\n"
    "relations: :collapse file  :cbs file\n"
    "orders:    :between {a} {b}  :ucmp f g  :bnf n  :cutclass sqrt n|le q|lt q";

}  // namespace

std::string sort_name(const Value& v) {
  switch (v.index()) {
    case 0:
      return "natural";
    case 1:
      return "ordinal";
    case 2:
      return "rational";
    default:
      return std::get<SetValue>(v).set ? "set" : "set of rationals";
  }
}

std::string print_value(const Value& v) {
  if (const auto* n = std::get_if<BigInt>(&v)) return n->str();
  if (const auto* o = std::get_if<ord::Ordinal>(&v)) return ord::to_string(*o);
  if (const auto* q = std::get_if<num::Frac>(&v)) return num::to_string(*q);
  const auto& s = std::get<SetValue>(v);
  if (s.set) return hf::to_string(*s.set);
  std::vector<std::string> parts;
  for (const auto& q : *s.numbers) parts.push_back(num::to_string(q));
  return "{" + join(parts, ",") + "}";
}

Value Session::evaluate(const Expr& e) const {
  switch (e.op) {
    case Expr::Op::Omega:
      return ord::Ordinal::omega();
    case Expr::Op::Nat:
      return e.num;
    case Expr::Op::Frac:
      return num::q_make(num::ZInt{e.num}, num::ZInt{e.den});
    case Expr::Op::Var: {
      auto it = env_.find(e.name);
      if (it == env_.end()) throw DomainError("unbound name '" + e.name + "'");
      return it->second;
    }
    case Expr::Op::Neg:
      return num::q_neg(to_frac(evaluate(e.kids[0]), "negation"));
    case Expr::Op::Set: {
      std::vector<Value> members;
      for (const auto& k : e.kids) members.push_back(evaluate(k));
      return make_set(members);
    }
    default:
      return apply(e.op, evaluate(e.kids[0]), evaluate(e.kids[1]));
  }
}

Value Session::eval_arg(const Command::Arg& a, int line_no) const {
  return evaluate(parse_expr(a.text, line_no, a.column - 1));
}

Result Session::run(std::string_view line, int line_no) {
  std::map<std::string, bool> bound;
  for (const auto& [name, _] : env_) bound.emplace(name, true);
  Statement st = parse_statement(line, line_no, bound);
  if (auto* c = std::get_if<Command>(&st)) return run_command(*c, line_no);
  if (auto* l = std::get_if<Let>(&st)) {
    Value v = evaluate(l->value);
    Result r{l->name + " = " + print_value(v), sort_name(v)};
    env_[l->name] = std::move(v);
    return r;
  }
  Value v = evaluate(std::get<Expr>(st));
  return {print_value(v), sort_name(v)};
}

Result Session::run_command(const Command& c, int line_no) {
  check_arity(c, line_no);
  const auto& n = c.name;
  auto arg = [&](std::size_t i) { return eval_arg(c.args[i], line_no); };
  auto ordinal = [&](std::size_t i) { return to_ordinal(arg(i), (":" + n).c_str()); };
  auto dyadic = [&](std::size_t i) { return to_dyadic(arg(i), (":" + n).c_str()); };
  auto set = [&](std::size_t i) { return to_hfset(arg(i), (":" + n).c_str()); };
  auto small = [&](std::size_t i, std::size_t limit) { return to_small(arg(i), (":" + n).c_str(), limit); };

  if (n == "help") return {kHelp, "text"};
  if (n == "cnf") return {ord::to_string(ordinal(0)), "ordinal"};
  if (n == "hess") return {ord::to_string(ord::hessenberg(ordinal(0), ordinal(1))), "ordinal"};
  if (n == "divmod") {
    auto [q, r] = ord::divmod(ordinal(0), ordinal(1));
    return {"(" + ord::to_string(q) + ", " + ord::to_string(r) + ")", "ordinal pair"};
  }
  if (n == "lsub") return {ord::to_string(ord::lsub(ordinal(0), ordinal(1))), "ordinal"};
  if (n == "kind") return {ord::to_string(ord::kind(ordinal(0))), "text"};
  if (n == "cof") return {ord::to_string(ord::cofinality_class(ordinal(0))), "ordinal"};

  if (n == "simp") {
    const auto l = to_dyadic_list(arg(0), ":simp");
    const auto r = to_dyadic_list(arg(1), ":simp");
    return {sur::to_string(sur::simplest(l, r)), "rational"};
  }
  if (n == "birthday") return {sur::birthday(dyadic(0)).str(), "natural"};
  if (n == "signs") return {signs_text(sur::to_signs(dyadic(0))), "signs"};
  if (n == "fromsigns") return {sur::to_string(sur::from_signs(sur::parse_signs(unquote(c.args[0].text)))), "rational"};
  if (n == "options") {
    auto o = sur::options(dyadic(0));
    auto side = [](const std::vector<sur::Dyadic>& v) {
      std::vector<std::string> parts;
      for (const auto& x : v) parts.push_back(sur::to_string(x));
      return "{" + join(parts, ",") + "}";
    };
    return {"(" + side(o.left) + ", " + side(o.right) + ")", "options"};
  }
  if (n == "stage") {
    std::vector<std::string> parts;
    for (const auto& x : lin::surreal_stage(small(0, 12)).carrier) parts.push_back(sur::to_string(x));
    return {join(parts, ", "), "order"};
  }
  if (n == "cadd") return {sur::to_string(sur::conway_add(dyadic(0), dyadic(1))), "rational"};
  if (n == "cmul") return {sur::to_string(sur::conway_mul(dyadic(0), dyadic(1))), "rational"};

  if (n == "tc") return {hf::to_string(hf::tc(set(0))), "set"};
  if (n == "rank") {
    const std::string& text = c.args[0].text;
    const bool looks_like_file = !text.empty() && (std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '"' ||
                                                   text[0] == '.' || text[0] == '/') &&
                                 text != "w" && !env_.contains(text);
    if (looks_like_file) {
      const auto g = load_digraph(unquote(text));
      const auto rank = wf::rank_map(g);
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < g.size(); ++i) parts.push_back(g.name(i) + ":" + std::to_string(rank[i]));
      return {join(parts, " "), "rank map"};
    }
    return {std::to_string(set(0).rank()), "natural"};
  }
  if (n == "power") return {hf::to_string(hf::power(set(0), budget_)), "set"};
  if (n == "vstage") return {hf::to_string(hf::v_stage(small(0, 16), budget_)), "set"};
  if (n == "hull") return {hf::to_string(hf::goedel_hull(set(0), small(1, 64), budget_)), "set"};
  if (n == "ack") return {hf::ackermann_encode(set(0)).str(), "natural"};
  if (n == "unack") {
    const Value v = arg(0);
    const auto* k = std::get_if<BigInt>(&v);
    if (!k) throw SortError(":unack expects a natural, got " + a_sort(v));
    return {hf::to_string(hf::ackermann_decode(*k)), "set"};
  }
  if (n == "encode") return {hf::to_string(num::q_encode(to_frac(arg(0), ":encode"))), "set"};
  if (n == "decode") {
    auto q = num::q_decode(set(0));
    if (!q) throw DomainError("the set does not encode a rational");
    return {num::to_string(*q), "rational"};
  }

  if (n == "collapse") {
    const auto g = load_digraph(unquote(c.args[0].text));
    const auto col = wf::mostowski(g);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < g.size(); ++i) parts.push_back(g.name(i) + "=" + hf::to_string(col.image[i]));
    return {join(parts, " ") + (col.is_iso ? " (isomorphism)" : " (not extensional)"), "collapse"};
  }
  if (n == "cbs") {
    auto [f, g] = load_injections(unquote(c.args[0].text));
    const auto h = wf::cbs_bijection(f, g);
    std::vector<std::string> parts;
    for (const auto& [x, y] : h.forward) parts.push_back(x + "->" + y);
    return {join(parts, " "), "bijection"};
  }

  if (n == "between") {
    const auto a = parse_string_set(c.args[0], line_no);
    const auto b = parse_string_set(c.args[1], line_no);
    return {lin::to_string(lin::insert_between(a, b)), "string"};
  }
  if (n == "ucmp") {
    const auto f = lin::parse_binstring(c.args[0].text);
    const auto g = lin::parse_binstring(c.args[1].text);
    const auto r = lin::u_cmp(f, g);
    return {r < 0 ? "LT" : r > 0 ? "GT" : "EQ", "ordering"};
  }
  if (n == "bnf") {
    const auto map = lin::back_and_forth(lin::string_order(), lin::unit_dyadic_order(), small(0, 4096));
    std::vector<std::string> parts;
    for (const auto& [s, d] : map) parts.push_back(lin::to_string(s) + "=" + sur::to_string(d));
    return {join(parts, " "), "partial isomorphism"};
  }
  if (n == "cutclass") {
    const std::string& mode = c.args[0].text;
    lin::CutSpec spec;
    if (mode == "sqrt") {
      const Value v = arg(1);
      const auto* k = std::get_if<BigInt>(&v);
      if (!k) throw SortError(":cutclass sqrt expects a natural, got " + a_sort(v));
      spec = lin::SqrtThreshold{*k};
    } else if (mode == "le") {
      spec = lin::AtRationalLeftClosed{to_frac(arg(1), ":cutclass")};
    } else if (mode == "lt") {
      spec = lin::AtRationalRightClosed{to_frac(arg(1), ":cutclass")};
    } else {
      throw SyntaxError("unknown cut description '" + mode + "'", line_no, c.args[0].column, {"sqrt", "le", "lt"});
    }
    return {lin::to_string(lin::classify_cut(spec)), "cut"};
  }
  throw SyntaxError("unknown command ':" + n + "'", line_no, c.column, {"command"});
}

// --- drivers ----------------------------------------------------------------------

namespace {

struct Outcome {
  std::string output;
  std::string sort;
  std::string error;
  int code = 0;
};

Outcome attempt(Session& session, std::string_view line, int line_no) {
  try {
    auto r = session.run(line, line_no);
    return {r.output, r.sort, "", 0};
  } catch (const SyntaxError& e) {
    return {"", "", std::string("syntax error at ") + e.what(), 2};
  } catch (const Error& e) {
    return {"", "", e.what(), 1};
  } catch (const std::exception& e) {
    return {"", "", std::string("internal error: ") + e.what(), 1};
  }
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_batch(std::istream& in, std::ostream& out, Session& session, const BatchOptions& options) {
  std::string line;
  int line_no = 0;
  int status = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const Outcome o = attempt(session, line, line_no);
    if (options.format == Format::Json) {
      nlohmann::json j{{"line", line_no}, {"input", line}};
      if (o.code == 0) {
        j["output"] = o.output;
        j["sort"] = o.sort;
      } else {
        j["error"] = o.error;
        j["kind"] = o.code == 2 ? "syntax" : "evaluation";
      }
      out << j.dump() << '\n';
    } else {
      out << line << '\t' << (o.code == 0 ? one_line(o.output) : "error: " + o.error) << '\n';
    }
    if (o.code != 0) {
      if (status == 0) status = o.code;
      if (!options.keep_going) break;
    }
  }
  return status;
}

void run_repl(std::istream& in, std::ostream& out, Session& session, bool interactive) {
  std::string line;
  int line_no = 0;
  for (;;) {
    if (interactive) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.substr(first) == ":quit" || line.substr(first) == ":q") break;
    const Outcome o = attempt(session, line, line_no);
    out << (o.code == 0 ? o.output : "error: " + o.error) << '\n';
  }
}

// --- test-vector generation ----------------------------------------------------------

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

  ord::Ordinal ordinal(int depth) {
    std::vector<ord::Ordinal> exps;
    const auto terms = below(4);
    for (std::uint64_t i = 0; i < terms; ++i) exps.push_back(depth > 0 ? ordinal(depth - 1) : ord::Ordinal(below(4)));
    std::sort(exps.begin(), exps.end(), std::greater<>());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<ord::Ordinal::Term> t;
    for (auto& e : exps) t.push_back({e, BigInt(1 + below(9))});
    return ord::Ordinal::from_terms(std::move(t));
  }

  sur::Dyadic dyadic(std::size_t max_birthday) {
    const auto& pool = pool_for(max_birthday);
    return pool[below(pool.size())];
  }

  std::string dyadic_set(const std::vector<sur::Dyadic>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(sur::to_string(x));
    return "{" + join(parts, ",") + "}";
  }

  hf::HFSet hfset(int rank) {
    if (rank == 0) return hf::empty();
    std::vector<hf::HFSet> members;
    const auto k = below(4);
    for (std::uint64_t i = 0; i < k; ++i) members.push_back(hfset(static_cast<int>(below(static_cast<std::uint64_t>(rank)))));
    return hf::HFSet::of(std::move(members));
  }

  lin::BinString bits(std::size_t max_len) {
    lin::BinString s;
    const auto len = below(max_len + 1);
    for (std::uint64_t i = 0; i < len; ++i) s.bits.push_back(below(2) ? '1' : '0');
    return s;
  }

 private:
  const std::vector<sur::Dyadic>& pool_for(std::size_t n) {
    auto it = pools_.find(n);
    if (it == pools_.end()) it = pools_.emplace(n, sur::born_by(n)).first;
    return it->second;
  }

  std::mt19937_64 rng_;
  std::map<std::size_t, std::vector<sur::Dyadic>> pools_;
};

}  // namespace

std::vector<std::string> generate_inputs(std::size_t count, std::uint64_t seed) {
  Gen g(seed);
  std::vector<std::string> out;
  out.reserve(count);
  while (out.size() < count) {
    switch (g.below(11)) {
      case 0: {
        const char* ops[] = {" + ", " * ", " (+) "};
        out.push_back(ord::to_string(g.ordinal(2)) + ops[g.below(3)] + ord::to_string(g.ordinal(2)));
        break;
      }
      case 1: {
        auto b = g.ordinal(1);
        auto a = g.ordinal(1);
        if (a.is_zero()) a = ord::Ordinal(1);
        out.push_back(":divmod " + ord::to_string(b) + " " + ord::to_string(a));
        break;
      }
      case 2:
        out.push_back(":hess " + ord::to_string(g.ordinal(2)) + " " + ord::to_string(g.ordinal(2)));
        break;
      case 3:
        out.push_back(sur::to_string(g.dyadic(6)) + " + " + sur::to_string(g.dyadic(6)) + " * " +
                      sur::to_string(g.dyadic(6)));
        break;
      case 4: {
        auto x = g.dyadic(6);
        auto y = g.dyadic(6);
        if (x == y) break;
        if (y < x) std::swap(x, y);
        out.push_back(":simp " + g.dyadic_set({x}) + " " + g.dyadic_set({y}));
        break;
      }
      case 5:
        out.push_back((g.below(2) ? ":signs " : ":birthday ") + sur::to_string(g.dyadic(7)));
        break;
      case 6:
        out.push_back(":tc " + hf::to_string(g.hfset(3)));
        break;
      case 7:
        out.push_back(":ucmp " + lin::to_string(g.bits(6)) + " " + lin::to_string(g.bits(6)));
        break;
      case 8: {
        auto f = g.bits(6);
        auto h = g.bits(6);
        if (f == h) break;
        if (lin::u_less(h, f)) std::swap(f, h);
        out.push_back(":between {" + lin::to_string(f) + "} {" + lin::to_string(h) + "}");
        break;
      }
      case 9:
        out.push_back(":cutclass sqrt " + std::to_string(1 + g.below(200)));
        break;
      default:
        out.push_back(":encode " + sur::to_string(g.dyadic(5)));
        break;
    }
  }
  return out;
}

}  // namespace settheory::cli
