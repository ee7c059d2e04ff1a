#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/algebra.hpp"
#include "core/metrics.hpp"

using namespace ftopa;

namespace {

Algebra algebra(int n, std::vector<int> idempotents) {
  AlgebraSpec spec;
  spec.n = n;
  spec.idempotents = std::move(idempotents);
  return Algebra(std::move(spec));
}

}  // namespace

TEST_CASE("rationals reduce") {
  CHECK(Rational::reduced(21, 35) == Rational{3, 5});
  CHECK(Rational::reduced(8, 12).str() == "2/3");
  CHECK(Rational::reduced(1, 5) == Rational{1, 5});
  CHECK_THROWS_AS(Rational::reduced(1, 0), std::invalid_argument);
}

TEST_CASE("ambiguity amounts") {
  CHECK(ambiguity_amount(algebra(8, {1, 2, 3, 4, 5, 6, 7, 8})) == 21);
  CHECK(ambiguity_amount(algebra(8, {1, 7, 8})) == 21);
  CHECK(ambiguity_amount(algebra(3, {1, 2, 3})) == 1);
}

TEST_CASE("relative ambiguity is exact") {
  CHECK(relative_ambiguity(algebra(8, {1, 7, 8})) == Rational{3, 5});
  CHECK(relative_ambiguity(algebra(3, {1, 2, 3})) == Rational{1, 5});
  CHECK(relative_ambiguity(algebra(10, {1, 9, 10})) == Rational{2, 3});
  CHECK(relative_ambiguity(algebra(10, {1, 3, 6, 9, 10})) == Rational{2, 3});
}

TEST_CASE("denominator indifference extremes and interior value") {
  CHECK(denominator_indifference(algebra(8, {1, 7, 8})) == 0);
  CHECK(denominator_indifference(algebra(8, {1, 2, 3, 4, 5, 6, 7, 8})) == 15);
  CHECK(denominator_indifference(algebra(8, {1, 4, 7, 8})) == 9);
}

TEST_CASE("mobility extremes and interior value") {
  CHECK(mobility(algebra(8, {1, 2, 3, 4, 5, 6, 7, 8})) == 0);
  CHECK(mobility(algebra(8, {1, 7, 8})) == 15);
  CHECK(mobility(algebra(8, {1, 4, 7, 8})) == 6);
}

TEST_CASE("size-only identities hold for every algebra up to n=10") {
  for (int n = 3; n <= 10; ++n) {
    const long long expected_ambiguity = static_cast<long long>(n - 1) * (n - 2) / 2;
    const long long expected_cells = static_cast<long long>(n) * (n + 1) / 2 - 1;
    const Rational expected_relative = Rational::reduced(n - 2, n + 2);
    const long long expected_order_sum = static_cast<long long>(n - 2) * (n - 3) / 2;
    for (const AlgebraSpec& spec : enumerate_algebras(n)) {
      const MetricsRecord rec = metrics_of(Algebra(spec));
      CHECK(rec.ambiguity == expected_ambiguity);
      CHECK(rec.solution_cells == expected_cells);
      CHECK(rec.relative_ambiguity == expected_relative);
      CHECK(rec.denominator_indifference + rec.mobility == expected_order_sum);
    }
  }
}

TEST_CASE("direct counts equal the idempotent-gap closed forms") {
  for (int n = 3; n <= 10; ++n) {
    for (const AlgebraSpec& spec : enumerate_algebras(n)) {
      Algebra alg(spec);
      CHECK(denominator_indifference(alg) == denominator_indifference_from_idempotents(spec));
      CHECK(mobility(alg) == mobility_from_idempotents(spec));
    }
  }
}

TEST_CASE("report covers the enumeration in order") {
  const auto report = metrics_report(6);
  REQUIRE(report.size() == 8);
  CHECK(report.front().first.idempotents == std::vector<int>{1, 5, 6});

  bool saw_zero = false;
  bool saw_six = false;
  for (const auto& [spec, rec] : report) {
    saw_zero = saw_zero || rec.denominator_indifference == 0;
    saw_six = saw_six || rec.denominator_indifference == 6;
  }
  CHECK(saw_zero);
  CHECK(saw_six);

  CHECK(metrics_report(3).size() == 1);
  CHECK(metrics_report(3)[0].second.denominator_indifference == 0);
  CHECK(metrics_report(3)[0].second.mobility == 0);
  CHECK(metrics_report(8).size() == 32);
}
