#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "core/algebra.hpp"
#include "core/eval.hpp"
#include "core/experiment.hpp"
#include "core/inference.hpp"
#include "core/render.hpp"

using namespace ftopa;

namespace {

Algebra algebra(int n, std::vector<int> idempotents) {
  AlgebraSpec spec;
  spec.n = n;
  spec.idempotents = std::move(idempotents);
  return Algebra(std::move(spec));
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string golden(const char* name) {
  return slurp(std::string(FTOPA_TEST_DATA_DIR) + "/tests/golden/" + name);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("table rendering matches the stored reference files byte for byte") {
  CHECK(render_tables(algebra(8, {1, 7, 8})) == golden("tables_n8_idem_1_7_8.tsv"));
  CHECK(render_tables(algebra(8, {1, 2, 3, 4, 5, 6, 7, 8})) == golden("tables_n8_idem_all.tsv"));
  CHECK(render_tables(algebra(3, {1, 2, 3})) == golden("tables_n3.tsv"));
}

TEST_CASE("rendered tables carry no trailing whitespace") {
  for (const std::string& line : lines_of(render_tables(algebra(8, {1, 4, 7, 8})))) {
    if (line.empty()) continue;
    CHECK(line.back() != ' ');
    CHECK(line.back() != '\t');
  }
}

TEST_CASE("metrics report rows and footer") {
  const std::string tsv = render_metrics_tsv(8);
  const auto lines = lines_of(tsv);
  REQUIRE(lines.size() == 34);  // header + 32 rows + footer
  CHECK(lines.front() == "n\tidempotents\tA\tM\tR\tO_d\tO_m");
  CHECK(lines[1] == "8\t{1,7,8}\t21\t35\t3/5\t0\t15");
  CHECK(lines.back() == "# invariants\tOK");

  const auto small = lines_of(render_metrics_tsv(3));
  REQUIRE(small.size() == 3);
  CHECK(small[1] == "3\t{1,2,3}\t1\t5\t1/5\t0\t0");

  CHECK(lines_of(render_metrics_tsv(10)).size() == 130);
  CHECK(lines_of(render_metrics_tsv(10)).back() == "# invariants\tOK");
}

TEST_CASE("uniqueness rendering") {
  CHECK(render_uniqueness(verify_uniqueness(4)) == "found 2, expected 2, PASS\n");
  CHECK(render_uniqueness(verify_uniqueness(6)) == "found 8, expected 8, PASS\n");
}

TEST_CASE("experiment TSV carries rows, real model and classification") {
  const ExperimentReport report = run_experiment(8, default_knowledge_base());
  const std::string tsv = render_experiment_tsv(report);
  const auto lines = lines_of(tsv);
  REQUIRE(lines.size() == 37);  // header + 32 rows + real + 3 footers

  CHECK(lines[0] ==
        "backend\talgebra\tp(s|f)\tp(a|f)\tp(s|t)\tp(a|t)\tp(f|s)\tp(f|a)\tp(f|s&a)\t"
        "p(t|s)\tp(t|a)\tp(t|s&a)\tclass");

  // classification counts and their footer lines
  CHECK(report.count(FireQueryClass::IdenticalSingleton) == 8);
  CHECK(report.count(FireQueryClass::IdenticalRange) == 16);
  CHECK(report.count(FireQueryClass::Mixed) == 8);
  CHECK(lines[34] == "# class_a\t8");
  CHECK(lines[35] == "# class_b\t16");
  CHECK(lines[36] == "# class_c\t8");

  // the two worked traces are visible in their rows
  bool saw_singleton_trace = false;
  bool saw_range_trace = false;
  for (const auto& line : lines) {
    if (line.find("8:{1,5,7,8}") != std::string::npos) {
      saw_singleton_trace = line.find("\te6\te6\te6\t") != std::string::npos;
    }
    if (line.find("8:{1,4,7,8}") != std::string::npos) {
      saw_range_trace = line.find("\te5\te5\t[e4,e1]\t") != std::string::npos;
    }
  }
  CHECK(saw_singleton_trace);
  CHECK(saw_range_trace);

  // real row reference points
  const auto real_line = lines[33];
  CHECK(real_line.substr(0, 5) == "real\t");
  CHECK(real_line.find("\t0.47619\t") != std::string::npos);   // p(f|s)
  CHECK(real_line.find("\t0.974693\t") != std::string::npos);  // p(f|s&a)

  // determinism: identical inputs produce identical bytes
  CHECK(render_experiment_tsv(run_experiment(8, default_knowledge_base())) == tsv);
}

TEST_CASE("experiment text view mentions the class tallies") {
  const ExperimentReport report = run_experiment(8, default_knowledge_base());
  const std::string text = render_experiment_text(report);
  CHECK(text.find("class a") != std::string::npos);
  CHECK(text.find(": 8") != std::string::npos);
  CHECK(text.find(":  16") != std::string::npos);
  CHECK(text.find("real") != std::string::npos);
  CHECK(text.find("8:{1,7,8}") != std::string::npos);
}

TEST_CASE("class members all share the expected singleton") {
  const ExperimentReport report = run_experiment(8, default_knowledge_base());
  for (const ExperimentRow& row : report.rows) {
    if (row.cls == FireQueryClass::IdenticalSingleton) {
      CHECK(row.queries.fire_given_smoke == PRange(PValue{6}));
      CHECK(row.queries.fire_given_alarm == PRange(PValue{6}));
      CHECK(row.queries.fire_given_both == PRange(PValue{6}));
    }
    if (row.cls == FireQueryClass::IdenticalRange) {
      CHECK(row.queries.fire_given_both.width() > 1);
      CHECK(row.queries.fire_given_smoke == row.queries.fire_given_both);
    }
  }
}

TEST_CASE("expression evaluation") {
  const Algebra all = algebra(8, {1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(to_string(eval_expression(all, "e2*e5/e5")) == "[e5,e1]");
  CHECK(to_string(eval_expression(all, "e2*(e5/e5)")) == "[e5,e2]");
  CHECK(to_string(eval_expression(all, "i[i[e3]]")) == "e3");
  CHECK(to_string(eval_expression(all, "[e5,e1]*e2")) == "[e5,e2]");
  CHECK(to_string(eval_expression(all, "i[ [e5,e1] ]")) == "[e8,e4]");
  CHECK(to_string(eval_expression(all, " e2 * e5 / e5 ")) == "[e5,e1]");

  const Algebra minimal = algebra(8, {1, 7, 8});
  CHECK(to_string(eval_expression(minimal, "e2*e3")) == "e4");
  CHECK(to_string(eval_expression(minimal, "e7/e3")) == "[e7,e5]");

  CHECK_THROWS_AS(eval_expression(all, "e2*"), ParseError);
  CHECK_THROWS_AS(eval_expression(all, "e2)e3"), ParseError);
  CHECK_THROWS_AS(eval_expression(all, "i[e2"), ParseError);
  CHECK_THROWS_AS(eval_expression(all, "[e1,e5]"), ParseError);
  CHECK_THROWS_AS(eval_expression(all, "e9"), std::invalid_argument);
  CHECK_THROWS_AS(eval_expression(all, "e2/e5"), std::domain_error);
}

TEST_CASE("real formatting is stable") {
  CHECK(format_real(0.0189) == "0.0189");
  CHECK(format_real(0.9) == "0.9");
  CHECK(format_real(0.974693) == "0.974693");
  CHECK(format_real(1.0) == "1");
}
