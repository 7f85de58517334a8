// dhat: run one check on a presentation file and print a JSON report.
//
//   dhat [--max-degree D] [--zpower K] [--stats] [FILE]
//
// Reads standard input when FILE is missing or "-".

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dhat/session.hpp"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact holonomicity, lattice and de Rham checks for Weyl algebra modules"};
  dhat::RunOptions opts;
  std::string path;
  app.add_option("file", path, "Session file (default: standard input)");
  app.add_option("--max-degree", opts.max_degree, "Degree ceiling for Groebner basis elements")
      ->capture_default_str()
      ->check(CLI::Range(1, 10000));
  app.add_option("--zpower", opts.zpower, "Largest z power tried in lattice containment")
      ->capture_default_str()
      ->check(CLI::Range(0, 1000));
  app.add_flag("--stats", opts.stats, "Include engine statistics in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string source;
  if (!read_input(path, source)) {
    std::cerr << "dhat: cannot read " << path << "\n";
    return 2;
  }
  auto result = dhat::run_source(source, opts);
  std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}
