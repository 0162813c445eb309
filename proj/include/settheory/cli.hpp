#pragma once

#include "settheory/bigint.hpp"
#include "settheory/errors.hpp"
#include "settheory/hfset.hpp"
#include "settheory/numtower.hpp"
#include "settheory/ordinal.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace settheory::cli {

// --- syntax ------------------------------------------------------------------

struct Expr {
  enum class Op { Omega, Nat, Frac, Neg, Var, Set, Add, OPlus, Mul, Pow };
  Op op = Op::Nat;
  BigInt num;                // Nat value, or Frac numerator
  BigInt den = 1;            // Frac denominator
  std::string name;          // Var
  std::vector<Expr> kids;    // operands or set elements
  int column = 1;

  // Structural equality, ignoring columns.
  friend bool operator==(const Expr& a, const Expr& b);
};

// A command application: `:name arg ...` or `name arg ...`. Arguments are
// split at top-level whitespace and kept as text with their columns.
struct Command {
  struct Arg {
    std::string text;
    int column = 1;
  };
  std::string name;
  std::vector<Arg> args;
  int column = 1;
};

struct Let {
  std::string name;
  Expr value;
};

using Statement = std::variant<Expr, Command, Let>;

//   expr   := term (('+' | '(+)' | '⊕') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' factor)?
//   atom   := 'w' | nat ('/' nat)? | '-' atom | '{' [expr (',' expr)*] '}'
//           | '(' expr ')' | identifier
// Throws SyntaxError with the line, column and the tokens that would have
// been accepted. `column_offset` shifts reported columns.
Expr parse_expr(std::string_view text, int line = 1, int column_offset = 0);

// `let x = expr`, a command, or an expression. A leading identifier naming a
// command starts a command unless it is a bound variable in `bound`.
Statement parse_statement(std::string_view text, int line = 1,
                          const std::map<std::string, bool>& bound = {});

// Minimal parentheses; parse_expr(print(e)) == e.
std::string print(const Expr& e);

bool is_command(std::string_view name);

// --- values ------------------------------------------------------------------

// A set literal read both ways: as a hereditarily finite set when every member
// is a set or a natural, and as a finite set of numbers when every member is a
// number.
struct SetValue {
  std::optional<hf::HFSet> set;
  std::optional<std::vector<num::Frac>> numbers;  // ascending, distinct
};

// Naturals are shared by the ordinal and the rational sorts; any operation
// joining an infinite ordinal with a rational is a SortError.
using Value = std::variant<BigInt, ord::Ordinal, num::Frac, SetValue>;

std::string sort_name(const Value& v);
std::string print_value(const Value& v);

// --- sessions ----------------------------------------------------------------

struct Result {
  std::string output;
  std::string sort;
};

class Session {
 public:
  explicit Session(hf::Budget budget = {}) : budget_(budget) {}

  // Parses and evaluates one line. Throws SyntaxError on malformed input and
  // other settheory::Error subclasses on evaluation failures.
  Result run(std::string_view line, int line_no = 1);

  Value evaluate(const Expr& e) const;

  const hf::Budget& budget() const noexcept { return budget_; }

 private:
  Result run_command(const Command& c, int line_no);
  Value eval_arg(const Command::Arg& a, int line_no) const;

  hf::Budget budget_;
  std::map<std::string, Value> env_;
};

enum class Format { Text, Json };

struct BatchOptions {
  bool keep_going = false;
  Format format = Format::Text;
};

// One report line per non-blank, non-comment input line: `input<TAB>output`
// (or `input<TAB>error: message`), or one JSON object per line. Returns 0, or
// the exit code of the first failure: 2 for syntax errors, 1 otherwise.
// Without keep_going the run stops at the first failure.
int run_batch(std::istream& in, std::ostream& out, Session& session, const BatchOptions& options);

// Reads lines until end of input, printing each result or error.
void run_repl(std::istream& in, std::ostream& out, Session& session, bool interactive);

// `count` random input lines covering every command family, reproducible
// from `seed`.
std::vector<std::string> generate_inputs(std::size_t count, std::uint64_t seed);

}  // namespace settheory::cli
