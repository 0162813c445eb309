#include "settheory/errors.hpp"

#include <sstream>

namespace settheory {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string describe_order_violation(const std::string& axiom, const std::vector<std::string>& witness) {
  return "not a strict well-order: " + axiom + " fails at (" + join(witness, ", ") + ")";
}

std::string describe_syntax(const std::string& message, int line, int column,
                            const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  if (!expected.empty()) os << " (expected one of: " << join(expected, " ") << ")";
  return os.str();
}

}  // namespace

NotWellOrderError::NotWellOrderError(std::string axiom, std::vector<std::string> witness)
    : Error(describe_order_violation(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

SyntaxError::SyntaxError(std::string message, int line, int column, std::vector<std::string> expected)
    : Error(describe_syntax(message, line, column, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace settheory
