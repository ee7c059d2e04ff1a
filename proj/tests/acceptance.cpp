// Acceptance suite: every release gate in one binary, one verdict line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/axioms.hpp"
#include "core/experiment.hpp"
#include "core/inference.hpp"
#include "core/metrics.hpp"
#include "core/ranges.hpp"
#include "core/render.hpp"

using namespace ftopa;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& title, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (failure.empty()) {
    std::printf("[PASS] %d. %s (%lld ms)\n", number, title.c_str(),
                static_cast<long long>(ms));
  } else {
    std::printf("[FAIL] %d. %s: %s\n", number, title.c_str(), failure.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

Algebra algebra(int n, std::vector<int> idempotents) {
  AlgebraSpec spec;
  spec.n = n;
  spec.idempotents = std::move(idempotents);
  return Algebra(std::move(spec));
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  require(file.good(), "cannot read " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<PRange> all_ranges(int n) {
  std::vector<PRange> out;
  for (int up = 1; up <= n; ++up) {
    for (int lo = up; lo <= n; ++lo) out.emplace_back(PValue{lo}, PValue{up});
  }
  return out;
}

void golden_tables() {
  const std::string base = std::string(FTOPA_TEST_DATA_DIR) + "/tests/golden/";
  require(render_tables(algebra(8, {1, 7, 8})) == slurp(base + "tables_n8_idem_1_7_8.tsv"),
          "n=8 {1,7,8} tables diverge from the stored reference file");
  require(render_tables(algebra(8, {1, 2, 3, 4, 5, 6, 7, 8})) ==
              slurp(base + "tables_n8_idem_all.tsv"),
          "n=8 all-idempotent tables diverge from the stored reference file");
}

void uniqueness_counts() {
  const long long expected[] = {1, 2, 4, 8};
  for (int n = 3; n <= 6; ++n) {
    const UniquenessCheck check = verify_uniqueness(n);
    require(check.found == expected[n - 3],
            "n=" + std::to_string(n) + ": found " + std::to_string(check.found) +
                " tables, expected " + std::to_string(expected[n - 3]));
    require(check.tables_match,
            "n=" + std::to_string(n) + ": search results differ from the constructed family");
  }
}

void solution_oracle() {
  int algebras = 0;
  for (int n = 3; n <= 9; ++n) {
    for (const AlgebraSpec& spec : enumerate_algebras(n)) {
      Algebra alg(spec);
      ++algebras;
      for (int q = 1; q <= n; ++q) {
        for (int p = q; p <= n; ++p) {
          require(alg.solve(PValue{p}, PValue{q}) == brute_solve(alg.table(), p, q),
                  spec.short_form() + ": solve disagrees with the brute-force set at e" +
                      std::to_string(p) + "/e" + std::to_string(q));
        }
      }
    }
  }
  require(algebras == 127, "expected 127 algebras across n=3..9, saw " +
                               std::to_string(algebras));
}

void axiom_suite() {
  for (int n = 3; n <= 10; ++n) {
    for (const AlgebraSpec& spec : enumerate_algebras(n)) {
      Algebra alg(spec);
      const AxiomReport report = check_axioms(alg.table());
      require(report.all_passed(), spec.short_form() + ": " + report.summary());

      for (int i : spec.idempotents) {
        for (int k = 1; k <= n; ++k) {
          require(alg.product(PValue{i}, PValue{k}) == std::min(PValue{i}, PValue{k}),
                  spec.short_form() + ": idempotent e" + std::to_string(i) +
                      " does not absorb e" + std::to_string(k));
        }
      }
      for (int k = 1; k <= n; ++k) {
        require(alg.inverse(PValue{k}) == PValue{n + 1 - k},
                spec.short_form() + ": inverse is not the index reversal");
        require(alg.inverse(alg.inverse(PValue{k})) == PValue{k},
                spec.short_form() + ": inverse is not involutive");
      }
    }
  }
}

void metric_identities() {
  for (int n = 3; n <= 10; ++n) {
    const long long expected_ambiguity = static_cast<long long>(n - 1) * (n - 2) / 2;
    const Rational expected_relative = Rational::reduced(n - 2, n + 2);
    const long long expected_order_sum = static_cast<long long>(n - 2) * (n - 3) / 2;
    for (const AlgebraSpec& spec : enumerate_algebras(n)) {
      const MetricsRecord rec = metrics_of(Algebra(spec));
      require(rec.ambiguity == expected_ambiguity, spec.short_form() + ": ambiguity amount");
      require(rec.relative_ambiguity == expected_relative,
              spec.short_form() + ": relative ambiguity");
      require(rec.denominator_indifference + rec.mobility == expected_order_sum,
              spec.short_form() + ": order conservation");
    }
  }
  require(ambiguity_amount(algebra(8, {1, 7, 8})) == 21, "n=8 ambiguity spot value");
  require(relative_ambiguity(algebra(8, {1, 7, 8})) == Rational{3, 5},
          "n=8 relative ambiguity spot value");
  require(denominator_indifference(algebra(8, {1, 2, 3, 4, 5, 6, 7, 8})) == 15,
          "all-idempotent denominator indifference");
  require(denominator_indifference(algebra(8, {1, 7, 8})) == 0,
          "minimal-idempotent denominator indifference");
  require(denominator_indifference(algebra(8, {1, 4, 7, 8})) == 9, "{1,4,7,8} O_d");
  require(mobility(algebra(8, {1, 4, 7, 8})) == 6, "{1,4,7,8} O_m");
}

void case_chain_additivity() {
  RealCalculus real;
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> unit_interval(0.0, 1.0);
  std::uniform_int_distribution<int> term_count(2, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> terms(static_cast<std::size_t>(term_count(rng)));
    double total = 0.0;
    for (double& t : terms) {
      t = unit_interval(rng);
      total += t;
    }
    const double scale = (0.05 + 0.94 * unit_interval(rng)) / total;
    double direct = 0.0;
    for (double& t : terms) {
      t *= scale;
      direct += t;
    }
    const double chained = sum_cases(real, terms);
    require(std::abs(chained - direct) < 1e-12,
            "trial " + std::to_string(trial) + ": chain " + std::to_string(chained) +
                " vs direct sum " + std::to_string(direct));
  }
}

void range_semantics() {
  for (int n = 3; n <= 8; ++n) {
    for (const AlgebraSpec& spec : enumerate_algebras(n)) {
      Algebra alg(spec);
      const auto ranges = all_ranges(n);
      for (const PRange& a : ranges) {
        for (const PRange& b : ranges) {
          // product image
          int image_lo = 0;
          int image_up = 0;
          int image_count = 0;
          for (int v = 1; v <= n; ++v) {
            bool hit = false;
            for (int x = a.upper.index; x <= a.lower.index && !hit; ++x) {
              for (int y = b.upper.index; y <= b.lower.index && !hit; ++y) {
                hit = alg.product(PValue{x}, PValue{y}).index == v;
              }
            }
            if (hit) {
              if (image_count == 0) image_up = v;
              image_lo = v;
              ++image_count;
            }
          }
          require(image_count == image_lo - image_up + 1,
                  spec.short_form() + ": product image not contiguous");
          require(range_product(alg, a, b) == PRange(PValue{image_lo}, PValue{image_up}),
                  spec.short_form() + ": endpoint product differs from the set image");

          if (!(a.lower <= b.upper)) continue;
          int sol_lo = 0;
          int sol_up = 0;
          int sol_count = 0;
          for (int z = 1; z <= n; ++z) {
            bool solves = false;
            for (int y = b.upper.index; y <= b.lower.index && !solves; ++y) {
              const int prod = alg.product(PValue{y}, PValue{z}).index;
              solves = prod >= a.upper.index && prod <= a.lower.index;
            }
            if (solves) {
              if (sol_count == 0) sol_up = z;
              sol_lo = z;
              ++sol_count;
            }
          }
          require(sol_count == sol_lo - sol_up + 1,
                  spec.short_form() + ": solution set not contiguous");
          require(range_solve(alg, a, b) == PRange(PValue{sol_lo}, PValue{sol_up}),
                  spec.short_form() + ": endpoint solution differs from the set");
        }
      }
    }
  }

  const Algebra all = algebra(8, {1, 2, 3, 4, 5, 6, 7, 8});
  const PRange e2(PValue{2});
  const PRange e5(PValue{5});
  require(range_solve(all, range_product(all, e2, e5), e5) == PRange(PValue{5}, PValue{1}),
          "product-then-solve witness");
  require(range_product(all, e2, range_solve(all, e5, e5)) == PRange(PValue{5}, PValue{2}),
          "solve-then-product witness");
}

void experiment_reproduction() {
  const ExperimentReport report = run_experiment(8, default_knowledge_base());
  const int identical_singletons = report.count(FireQueryClass::IdenticalSingleton);
  const int identical_ranges = report.count(FireQueryClass::IdenticalRange);
  const int mixed = report.count(FireQueryClass::Mixed);
  require(identical_singletons == 8 && identical_ranges == 16,
          "classification split is " + std::to_string(identical_singletons) + "/" +
              std::to_string(identical_ranges) + "/" + std::to_string(mixed) +
              ", expected 8/16/8");

  for (const ExperimentRow& row : report.rows) {
    if (row.cls == FireQueryClass::IdenticalSingleton) {
      require(row.queries.fire_given_both == PRange(PValue{6}),
              row.spec.short_form() + ": identical singleton is not e6");
    }
    if (row.spec.idempotents == std::vector<int>{1, 5, 7, 8}) {
      require(row.queries.fire_given_both == PRange(PValue{6}),
              "worked trace {1,5,7,8} did not yield e6");
    }
    if (row.spec.idempotents == std::vector<int>{1, 4, 7, 8}) {
      require(row.queries.fire_given_both == PRange(PValue{4}, PValue{1}),
              "worked trace {1,4,7,8} did not yield [e4,e1]");
    }
  }

  require(std::abs(report.real_model.fire_given_smoke - 0.48) <= 0.01,
          "real p(f|s) = " + std::to_string(report.real_model.fire_given_smoke) +
              " outside 0.48 +/- 0.01");
  require(std::abs(report.real_model.fire_given_both - 0.98) <= 0.01,
          "real p(f|s&a) = " + std::to_string(report.real_model.fire_given_both) +
              " outside 0.98 +/- 0.01");
  // p(f|a) is recorded, not targeted: the shipped entries are only part of
  // the full prior set, and chaining from them gives a lower value
  require(report.real_model.fire_given_alarm < 0.37,
          "real p(f|a) unexpectedly reached the fuller-prior reference value");
}

void closed_form_solutions() {
  for (int n = 3; n <= 10; ++n) {
    std::vector<int> every(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) every[static_cast<std::size_t>(k - 1)] = k;
    const Algebra all_idem = algebra(n, every);
    for (int j = 1; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        const PRange got = all_idem.solve(PValue{k}, PValue{j});
        const PRange expected =
            j < k ? PRange(PValue{k}) : PRange(PValue{k}, PValue{1});
        require(got == expected, "all-idempotent closed form at n=" + std::to_string(n) +
                                     ", e" + std::to_string(k) + "/e" + std::to_string(j));
      }
    }

    const Algebra minimal = algebra(n, {1, n - 1, n});
    for (int j = 1; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        if (k == n && j == n) continue;  // not covered by the case split
        PRange expected = PRange(PValue{1});
        if (j <= k && k < n - 1) {
          expected = PRange(PValue{k - j + 1});
        } else if (k == n - 1) {
          expected = PRange(PValue{n - 1}, PValue{n - j});
        } else {
          expected = PRange(PValue{n});
        }
        require(minimal.solve(PValue{k}, PValue{j}) == expected,
                "minimal-idempotent closed form at n=" + std::to_string(n) + ", e" +
                    std::to_string(k) + "/e" + std::to_string(j));
      }
    }
  }
}

}  // namespace

int main() {
  run_criterion(1, "stored reference tables match cell for cell", golden_tables);
  run_criterion(2, "exhaustive search finds exactly the constructed family for n=3..6",
                uniqueness_counts);
  run_criterion(3, "cached solutions equal the brute-force sets for all 127 algebras, n<=9",
                solution_oracle);
  run_criterion(4, "axiom suite, idempotent absorption and inverse laws hold for n<=10",
                axiom_suite);
  run_criterion(5, "ambiguity, relative ambiguity and order conservation for n=3..10",
                metric_identities);
  run_criterion(6, "case chains equal direct sums on the real backend (1000 random lists)",
                case_chain_additivity);
  run_criterion(7, "endpoint range formulas equal set semantics for n<=8, plus the "
                   "order-of-operations witness",
                range_semantics);
  run_criterion(8, "smoke-alarm experiment: 8/16 classification, worked traces, real targets",
                experiment_reproduction);
  run_criterion(9, "closed-form solution tables for the two extreme families, n=3..10",
                closed_form_solutions);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
