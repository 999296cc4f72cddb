// coxforge CLI: thin front end over the shared-library C API.
// Reports go to stdout (or --out), diagnostics to stderr; the exit code is
// the cox_status of the underlying call.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "coxforge/coxforge.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { cox_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
  void operator()(cox_group* g) const { cox_group_free(g); }
};
using Group = std::unique_ptr<cox_group, GroupDeleter>;

int fail(cox_status st, const ApiString& err) {
  std::cerr << "coxforge: " << (err ? err.get() : "unknown error") << "\n";
  return static_cast<int>(st);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "coxforge: cannot open input file '" << path << "'\n";
    std::exit(static_cast<int>(COX_ERR_INPUT));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "coxforge: cannot open output file '" << out_path << "'\n";
    return static_cast<int>(COX_ERR_INPUT);
  }
  out << text;
  return 0;
}

Group parse_group_or_exit(const std::string& input_path) {
  std::string text = read_input(input_path);
  cox_group* raw = nullptr;
  ApiString err;
  char* err_raw = nullptr;
  cox_status st = cox_group_parse(text.c_str(), &raw, &err_raw);
  err.reset(err_raw);
  if (st != COX_OK) std::exit(fail(st, err));
  return Group(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coxeter group analyzer"};
  app.set_version_flag("--version", cox_version());
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  int32_t repr_length = 6;
  int32_t verify_length = 8;
  uint64_t budget = 0;  // 0 = library default
  std::string alphabet = "2,3,4,5,6,inf";
  std::string where;
  std::string n_range = "2";
  uint64_t limit = 10000;
  int32_t workers = 1;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input file, or - for stdin")
        ->default_val("-");
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  CLI::App* c_classify =
      app.add_subcommand("classify", "component classification and group verdicts");
  add_io(c_classify);

  CLI::App* c_signature =
      app.add_subcommand("signature", "signature and kernel of the Tits form");
  add_io(c_signature);

  CLI::App* c_repr =
      app.add_subcommand("repr", "reflection matrices and word-ball statistics");
  add_io(c_repr);
  c_repr->add_option("--max-length", repr_length, "word-ball radius")
      ->capture_default_str();
  c_repr->add_option("--budget", budget, "element budget (0 = default 10^6)");

  CLI::App* c_verify = app.add_subcommand(
      "verify-faithful", "flag ball elements acting as +/-I modulo the kernel");
  add_io(c_verify);
  c_verify->add_option("--max-length", verify_length, "word-ball radius")
      ->capture_default_str();
  c_verify->add_option("--budget", budget, "element budget (0 = default 10^6)");

  CLI::App* c_search = app.add_subcommand(
      "search", "enumerate connected diagrams and filter by a predicate");
  c_search->add_option("--n", n_range, "vertex count or range, e.g. 4 or 3-5")
      ->default_val("2");
  c_search->add_option("--alphabet", alphabet, "edge labels, e.g. 2,3,inf")
      ->capture_default_str();
  c_search->add_option("--where", where,
                       "predicate on p,q,r,n,kind, e.g. \"p=3 and q=1\"");
  c_search->add_option("--limit", limit, "maximum number of hits")
      ->capture_default_str();
  c_search->add_option("--workers", workers, "parallel enumeration workers")
      ->capture_default_str();
  c_search->add_option("--out", out_path, "write the hits to a file");

  CLI11_PARSE(app, argc, argv);

  ApiString err, json;
  char* err_raw = nullptr;
  char* json_raw = nullptr;
  cox_status st = COX_OK;

  if (app.got_subcommand(c_search)) {
    int32_t n_min = 0, n_max = 0;
    size_t dash = n_range.find('-');
    try {
      if (dash == std::string::npos) {
        n_min = n_max = std::stoi(n_range);
      } else {
        n_min = std::stoi(n_range.substr(0, dash));
        n_max = std::stoi(n_range.substr(dash + 1));
      }
    } catch (...) {
      std::cerr << "coxforge: bad --n range '" << n_range << "'\n";
      return static_cast<int>(COX_ERR_INPUT);
    }
    int32_t truncated = 0;
    st = cox_search_jsonl(n_min, n_max, alphabet.c_str(), where.c_str(), limit,
                          workers, &json_raw, &truncated, &err_raw);
    json.reset(json_raw);
    err.reset(err_raw);
    if (st != COX_OK) return fail(st, err);
    if (truncated) std::cerr << "coxforge: result limit reached, output truncated\n";
    return write_output(json.get(), out_path);
  }

  Group g = parse_group_or_exit(input);
  if (app.got_subcommand(c_classify)) {
    st = cox_classify_json(g.get(), &json_raw, &err_raw);
  } else if (app.got_subcommand(c_signature)) {
    st = cox_signature_json(g.get(), &json_raw, &err_raw);
  } else if (app.got_subcommand(c_repr)) {
    st = cox_repr_json(g.get(), repr_length, budget, &json_raw, &err_raw);
  } else {
    st = cox_verify_faithful_json(g.get(), verify_length, budget, &json_raw,
                                  &err_raw);
  }
  json.reset(json_raw);
  err.reset(err_raw);
  if (st != COX_OK) return fail(st, err);
  return write_output(json.get(), out_path);
}
