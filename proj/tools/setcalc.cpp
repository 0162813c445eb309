#include "settheory/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

int main(int argc, char** argv) {
  CLI::App app{"setcalc: exact set theory, ordinal and surreal calculator"};
  std::string batch_file;
  bool keep_going = false;
  std::size_t max_elements = settheory::hf::Budget{}.max_elements;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::size_t gen_vectors = 0;
  std::vector<std::string> exprs;
  app.add_option("--batch", batch_file, "Evaluate FILE line by line and print input<TAB>output");
  app.add_flag("--keep-going", keep_going, "Continue a batch after a failing line");
  app.add_option("--max-elements", max_elements, "Size budget for materialized sets");
  app.add_option("--seed", seed, "Seed for --gen-vectors");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--gen-vectors", gen_vectors, "Print N random test vectors as input<TAB>output");
  app.add_option("-e,--eval", exprs, "Evaluate an expression or command (repeatable)");
  CLI11_PARSE(app, argc, argv);

  settheory::cli::Session session(settheory::hf::Budget{max_elements});
  settheory::cli::BatchOptions options;
  options.keep_going = keep_going;
  options.format = format == "json" ? settheory::cli::Format::Json : settheory::cli::Format::Text;

  if (gen_vectors > 0) {
    std::ostringstream lines;
    for (const auto& line : settheory::cli::generate_inputs(gen_vectors, seed)) lines << line << '\n';
    std::istringstream in(lines.str());
    options.keep_going = true;
    return settheory::cli::run_batch(in, std::cout, session, options);
  }
  if (!exprs.empty()) {
    std::ostringstream lines;
    for (const auto& e : exprs) lines << e << '\n';
    std::istringstream in(lines.str());
    return settheory::cli::run_batch(in, std::cout, session, options);
  }
  if (!batch_file.empty()) {
    std::ifstream in(batch_file);
    if (!in) {
      std::cerr << "setcalc: cannot open " << batch_file << '\n';
      return 1;
    }
    return settheory::cli::run_batch(in, std::cout, session, options);
  }
  settheory::cli::run_repl(std::cin, std::cout, session, isatty(STDIN_FILENO) != 0);
  return 0;
}
