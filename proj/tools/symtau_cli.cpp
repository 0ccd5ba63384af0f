// Command-line front end: solve, decompose, table.  Talks to the library
// exclusively through the public C interface.

#include <symtau/symtau.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { symtau_string_free(ptr); }
  explicit operator bool() const { return ptr != nullptr; }
};

int print_last_error() {
  std::cerr << "error: " << symtau_last_error() << "\n";
  return 1;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

symtau_spec* parse_spec_file(const std::string& path) {
  std::string text;
  if (!read_input(path, text)) return nullptr;
  symtau_spec* spec = symtau_spec_parse_json(text.c_str());
  if (spec == nullptr) print_last_error();
  return spec;
}

int run_solve(const std::string& path, bool trace) {
  symtau_spec* spec = parse_spec_file(path);
  if (spec == nullptr) return 1;
  symtau_result* result = nullptr;
  const symtau_status status = symtau_solve(spec, &result);
  symtau_spec_free(spec);
  if (status != SYMTAU_OK && status != SYMTAU_ERR_INCONSISTENT) return print_last_error();
  OwnedString text{symtau_result_render(result, trace ? 1 : 0)};
  symtau_result_free(result);
  if (!text) return print_last_error();
  std::cout << text.ptr;
  return status == SYMTAU_OK ? 0 : 2;
}

int run_decompose(const std::string& path, long pencil_degree, bool verbose) {
  symtau_spec* spec = parse_spec_file(path);
  if (spec == nullptr) return 1;
  symtau_decomposition* dec = nullptr;
  const symtau_status status = symtau_decompose(spec, pencil_degree, &dec);
  symtau_spec_free(spec);
  if (status != SYMTAU_OK) return print_last_error();
  OwnedString text{symtau_decomposition_render(dec, verbose ? 1 : 0)};
  symtau_decomposition_free(dec);
  if (!text) return print_last_error();
  std::cout << text.ptr;
  return 0;
}

int run_table(const std::string& cover_text, long genus, long symmetric_index) {
  const std::size_t comma = cover_text.find(',');
  long degree = 0, target_genus = 0;
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      degree = std::stol(cover_text, &used);
      if (used != cover_text.size()) throw std::invalid_argument("trailing text");
    } else {
      degree = std::stol(cover_text.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing text");
      const std::string rest = cover_text.substr(comma + 1);
      target_genus = std::stol(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing text");
    }
  } catch (const std::exception&) {
    std::cerr << "error: --cover expects integers \"degree,target_genus\"\n";
    return 1;
  }
  OwnedString text{symtau_table_render(degree, target_genus, genus, symmetric_index)};
  if (!text) return print_last_error();
  std::cout << text.ptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact slope bounds for second symmetric products of curves"};
  app.require_subcommand(1);

  std::string solve_file;
  bool trace = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "compute tau from a specification file");
  solve_cmd->add_option("file", solve_file, "JSON specification file, or - for stdin")
      ->required();
  solve_cmd->add_flag("--trace", trace, "print the derivation trace");

  std::string dec_file;
  long pencil_degree = 0;
  bool verbose = false;
  CLI::App* dec_cmd =
      app.add_subcommand("decompose", "enumerate component scenarios of a pencil curve");
  dec_cmd->add_option("file", dec_file, "JSON specification file, or - for stdin")->required();
  dec_cmd->add_option("--pencil", pencil_degree, "degree of the declared pencil")->required();
  dec_cmd->add_flag("--verbose", verbose, "also list rejected partitions");

  std::string cover_text;
  long genus = 0;
  long symmetric_index = 0;
  CLI::App* table_cmd =
      app.add_subcommand("table", "intersection numbers of the cycles of a cover");
  table_cmd->add_option("--cover", cover_text, "cover as \"degree,target_genus\"")->required();
  table_cmd->add_option("--genus", genus, "ambient curve genus")->required();
  table_cmd->add_option("--symmetric-index", symmetric_index,
                        "also print B(H) in this symmetric product");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (solve_cmd->parsed()) return run_solve(solve_file, trace);
  if (dec_cmd->parsed()) return run_decompose(dec_file, pencil_degree, verbose);
  if (table_cmd->parsed()) return run_table(cover_text, genus, symmetric_index);
  return 1;
}
