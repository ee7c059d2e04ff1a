#include "core/render.hpp"

#include <algorithm>
#include <cstdio>

#include "core/metrics.hpp"

namespace ftopa {

namespace {

const char* kQueryHeader =
    "p(s|f)\tp(a|f)\tp(s|t)\tp(a|t)\tp(f|s)\tp(f|a)\tp(f|s&a)\tp(t|s)\tp(t|a)\tp(t|s&a)";

template <class Belief, class Fmt>
std::string joined_queries(const QueryReport<Belief>& q, Fmt&& fmt) {
  std::string out;
  const Belief* fields[] = {&q.smoke_given_fire,     &q.alarm_given_fire,
                            &q.smoke_given_tampering, &q.alarm_given_tampering,
                            &q.fire_given_smoke,      &q.fire_given_alarm,
                            &q.fire_given_both,       &q.tampering_given_smoke,
                            &q.tampering_given_alarm, &q.tampering_given_both};
  for (const Belief* field : fields) {
    if (!out.empty()) out += '\t';
    out += fmt(*field);
  }
  return out;
}

std::string idempotents_braced(const AlgebraSpec& spec) {
  std::string out = "{";
  for (std::size_t i = 0; i < spec.idempotents.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(spec.idempotents[i]);
  }
  return out + "}";
}

std::vector<std::string> split_tabs(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = text.find('\t', pos);
    out.push_back(text.substr(pos, tab == std::string::npos ? tab : tab - pos));
    if (tab == std::string::npos) return out;
    pos = tab + 1;
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string render_tables(const Algebra& alg) {
  const int n = alg.size();
  std::string out = "*";
  for (int k = 1; k <= n; ++k) out += "\te" + std::to_string(k);
  out += '\n';
  for (int j = 1; j <= n; ++j) {
    out += "e" + std::to_string(j);
    for (int k = 1; k <= n; ++k) {
      out += "\te" + std::to_string(alg.table().at(j, k));
    }
    out += '\n';
  }

  out += "\np/q";
  for (int k = 1; k <= n; ++k) out += "\te" + std::to_string(k);
  out += '\n';
  for (int q = 1; q <= n - 1; ++q) {
    out += "e" + std::to_string(q);
    for (int p = 1; p <= n; ++p) {
      out += '\t';
      if (p >= q) out += to_string(alg.solve(PValue{p}, PValue{q}));
    }
    out += '\n';
  }
  return out;
}

std::string render_metrics_tsv(int n) {
  std::string out = "n\tidempotents\tA\tM\tR\tO_d\tO_m\n";
  const long long expected_ambiguity = static_cast<long long>(n - 1) * (n - 2) / 2;
  const Rational expected_relative = Rational::reduced(n - 2, n + 2);
  const long long expected_order_sum = static_cast<long long>(n - 2) * (n - 3) / 2;

  bool identities_hold = true;
  for (const auto& [spec, rec] : metrics_report(n)) {
    out += std::to_string(n) + '\t' + idempotents_braced(spec) + '\t' +
           std::to_string(rec.ambiguity) + '\t' + std::to_string(rec.solution_cells) + '\t' +
           rec.relative_ambiguity.str() + '\t' + std::to_string(rec.denominator_indifference) +
           '\t' + std::to_string(rec.mobility) + '\n';
    identities_hold = identities_hold && rec.ambiguity == expected_ambiguity &&
                      rec.relative_ambiguity == expected_relative &&
                      rec.denominator_indifference + rec.mobility == expected_order_sum;
  }
  out += identities_hold ? "# invariants\tOK\n" : "# invariants\tFAILED\n";
  return out;
}

std::string render_uniqueness(const UniquenessCheck& check) {
  return "found " + std::to_string(check.found) + ", expected " +
         std::to_string(check.expected) + ", " + (check.passed() ? "PASS" : "FAIL") + "\n";
}

std::string render_experiment_tsv(const ExperimentReport& report) {
  std::string out = std::string("backend\talgebra\t") + kQueryHeader + "\tclass\n";
  for (const ExperimentRow& row : report.rows) {
    out += "ftopa\t" + row.spec.short_form() + '\t' +
           joined_queries(row.queries, [](const PRange& r) { return to_string(r); }) + '\t' +
           class_label(row.cls) + '\n';
  }
  out += "real\t-\t" + joined_queries(report.real_model, format_real) + "\t-\n";
  out += "# class_a\t" + std::to_string(report.count(FireQueryClass::IdenticalSingleton)) + '\n';
  out += "# class_b\t" + std::to_string(report.count(FireQueryClass::IdenticalRange)) + '\n';
  out += "# class_c\t" + std::to_string(report.count(FireQueryClass::Mixed)) + '\n';
  return out;
}

std::string render_experiment_text(const ExperimentReport& report) {
  std::string out = "smoke-alarm queries over the " + std::to_string(report.rows.size()) +
                    " legal algebras of size " + std::to_string(report.n) +
                    ", plus the real model\n";
  out += "case order in every chain: negated cases first; the four-way alarm marginal runs "
         "(~f&~t), (~f&t), (f&~t), (f&t)\n\n";

  std::vector<std::vector<std::string>> grid;
  {
    std::vector<std::string> header = {"algebra"};
    for (std::string& name : split_tabs(kQueryHeader)) header.push_back(std::move(name));
    header.push_back("class");
    grid.push_back(std::move(header));
  }
  for (const ExperimentRow& row : report.rows) {
    std::vector<std::string> cells = {row.spec.short_form()};
    for (std::string& value : split_tabs(
             joined_queries(row.queries, [](const PRange& r) { return to_string(r); }))) {
      cells.push_back(std::move(value));
    }
    cells.emplace_back(1, class_label(row.cls));
    grid.push_back(std::move(cells));
  }
  {
    std::vector<std::string> cells = {"real"};
    for (std::string& value : split_tabs(joined_queries(report.real_model, format_real))) {
      cells.push_back(std::move(value));
    }
    cells.push_back("-");
    grid.push_back(std::move(cells));
  }

  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(widths[i] - row[i].size(), ' ');
    }
    out += line + '\n';
  }

  out += "\nclass a (three identical single-valued fire answers): " +
         std::to_string(report.count(FireQueryClass::IdenticalSingleton)) + '\n';
  out += "class b (three identical range-valued fire answers):  " +
         std::to_string(report.count(FireQueryClass::IdenticalRange)) + '\n';
  out += "class c (mixed):                                      " +
         std::to_string(report.count(FireQueryClass::Mixed)) + '\n';
  out += "\nnote: real-model marginals are chained from the eight shipped entries only, so\n"
         "values computed with a fuller prior set will differ, most visibly for p(f|a).\n";
  return out;
}

}  // namespace ftopa
