// Command-line front end over the ftopa shared library.
//
// Exit codes: 0 success, 1 computation or input-data error, 2 usage error
// (including sizes beyond a subcommand's supported bound).

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ftopa/ftopa.h"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

int exit_code_for(ftopa_status status) {
  return status == FTOPA_ERROR_UNSUPPORTED ? kExitUsage : kExitComputation;
}

int report_error(const std::string& prefix, ftopa_status status) {
  std::cerr << prefix << ": " << ftopa_last_error() << "\n";
  return exit_code_for(status);
}

struct StringOut {
  char* text = nullptr;
  ~StringOut() { ftopa_string_free(text); }
  std::string str() const { return text == nullptr ? std::string() : std::string(text); }
};

using AlgebraPtr = std::unique_ptr<ftopa_algebra, decltype(&ftopa_algebra_destroy)>;
using KbPtr = std::unique_ptr<ftopa_kb, decltype(&ftopa_kb_destroy)>;

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    std::size_t consumed = 0;
    int value = std::stoi(piece, &consumed);
    while (consumed < piece.size() && std::isspace(static_cast<unsigned char>(piece[consumed]))) {
      ++consumed;
    }
    if (consumed != piece.size()) throw std::invalid_argument("bad index '" + piece + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty index list");
  return out;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return kExitComputation;
  }
  return 0;
}

AlgebraPtr make_algebra(int n, const std::string& idempotents, int& error) {
  std::vector<int> indices;
  try {
    indices = parse_index_list(idempotents);
  } catch (const std::exception& e) {
    std::cerr << "bad --idempotents: " << e.what() << "\n";
    error = kExitUsage;
    return AlgebraPtr(nullptr, &ftopa_algebra_destroy);
  }
  ftopa_algebra* raw = nullptr;
  if (ftopa_status s = ftopa_algebra_create(n, indices.data(),
                                            static_cast<int>(indices.size()), &raw)) {
    error = report_error("invalid algebra", s);
    return AlgebraPtr(nullptr, &ftopa_algebra_destroy);
  }
  return AlgebraPtr(raw, &ftopa_algebra_destroy);
}

int cmd_tables(int n, const std::string& idempotents, const std::string& out_path) {
  int error = 0;
  AlgebraPtr algebra = make_algebra(n, idempotents, error);
  if (!algebra) return error;
  StringOut text;
  if (ftopa_status s = ftopa_render_tables(algebra.get(), &text.text)) {
    return report_error("tables failed", s);
  }
  return write_output(text.str(), out_path);
}

int cmd_enumerate(int n, const std::string& out_path) {
  StringOut text;
  if (ftopa_status s = ftopa_metrics_report_tsv(n, &text.text)) {
    return report_error("enumerate failed", s);
  }
  return write_output(text.str(), out_path);
}

int cmd_verify(int n) {
  StringOut text;
  int passed = 0;
  if (ftopa_status s = ftopa_verify_enumeration(n, &text.text, &passed)) {
    return report_error("verify refused", s);
  }
  std::cout << text.str();
  return passed == 1 ? 0 : kExitComputation;
}

int cmd_experiment(int n, const std::string& kb_path, const std::string& out_path) {
  KbPtr kb(nullptr, &ftopa_kb_destroy);
  {
    ftopa_kb* raw = nullptr;
    if (kb_path.empty()) {
      if (ftopa_status s = ftopa_kb_default(&raw)) {
        return report_error("built-in knowledge base failed", s);
      }
    } else {
      std::ifstream file(kb_path, std::ios::binary);
      if (!file) {
        std::cerr << "cannot read '" << kb_path << "'\n";
        return kExitComputation;
      }
      std::stringstream buffer;
      buffer << file.rdbuf();
      if (ftopa_status s = ftopa_kb_parse(buffer.str().c_str(), &raw)) {
        return report_error(kb_path, s);
      }
    }
    kb.reset(raw);
  }

  StringOut text;
  if (ftopa_status s = ftopa_experiment_text(n, kb.get(), &text.text)) {
    return report_error("experiment failed", s);
  }
  std::cout << text.str();

  if (!out_path.empty()) {
    StringOut tsv;
    if (ftopa_status s = ftopa_experiment_tsv(n, kb.get(), &tsv.text)) {
      return report_error("experiment failed", s);
    }
    return write_output(tsv.str(), out_path);
  }
  return 0;
}

int cmd_eval(const std::string& algebra_form, const std::string& expression) {
  ftopa_algebra* raw = nullptr;
  if (ftopa_status s = ftopa_algebra_parse(algebra_form.c_str(), &raw)) {
    return report_error("invalid --algebra", s);
  }
  AlgebraPtr algebra(raw, &ftopa_algebra_destroy);
  StringOut text;
  if (ftopa_status s = ftopa_eval(algebra.get(), expression.c_str(), &text.text)) {
    return report_error("eval failed", s);
  }
  std::cout << text.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite totally ordered probability algebras: tables, enumeration, "
               "verification, the smoke-alarm experiment and expression evaluation"};
  app.require_subcommand(1);

  int n = 0;
  std::string idempotents;
  std::string out_path;
  std::string kb_path;
  std::string algebra_form;
  std::string expression;

  CLI::App* tables = app.add_subcommand("tables", "print the product and solution tables");
  tables->add_option("--n", n, "set size")->required();
  tables->add_option("--idempotents", idempotents, "comma-separated idempotent indices")
      ->required();
  tables->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* enumerate = app.add_subcommand("enumerate", "metrics for every algebra of size n");
  enumerate->add_option("--n", n, "set size")->required();
  enumerate->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "exhaustively confirm the constructed family (n <= 7)");
  verify->add_option("--n", n, "set size")->required();

  CLI::App* experiment =
      app.add_subcommand("experiment", "run the smoke-alarm queries over every algebra");
  experiment->add_option("--n", n, "set size")->required();
  experiment->add_option("--kb", kb_path, "knowledge-base file (defaults to the built-in one)");
  experiment->add_option("--out", out_path, "also write the machine TSV here");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a belief expression");
  eval->add_option("--algebra", algebra_form, "algebra short form like '8:{1,5,7,8}'")
      ->required();
  eval->add_option("expression", expression, "expression over e<k> literals, *, / and i[...]")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (tables->parsed()) return cmd_tables(n, idempotents, out_path);
  if (enumerate->parsed()) return cmd_enumerate(n, out_path);
  if (verify->parsed()) return cmd_verify(n);
  if (experiment->parsed()) return cmd_experiment(n, kb_path, out_path);
  if (eval->parsed()) return cmd_eval(algebra_form, expression);
  return kExitUsage;
}
