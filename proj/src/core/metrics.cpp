#include "core/metrics.hpp"

#include <numeric>
#include <stdexcept>

namespace ftopa {

Rational Rational::reduced(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  return Rational{g == 0 ? 0 : num / g, g == 0 ? 1 : den / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

long long ambiguity_amount(const Algebra& alg) {
  const int n = alg.size();
  long long total = 0;
  for (int q = 1; q <= n - 1; ++q) {
    for (int p = q; p <= n; ++p) {
      const PRange r = alg.solve(PValue{p}, PValue{q});
      total += r.width() - 1;
    }
  }
  return total;
}

Rational relative_ambiguity(const Algebra& alg) {
  const int n = alg.size();
  const long long cells = static_cast<long long>(n) * (n + 1) / 2 - 1;
  return Rational::reduced(ambiguity_amount(alg), cells);
}

long long denominator_indifference(const Algebra& alg) {
  long long total = 0;
  for (int j = 2; j <= alg.size() - 1; ++j) {
    long long d_j = 0;
    for (int k = 1; k <= j; ++k) {
      const PRange r = alg.solve(PValue{j}, PValue{k});
      if (r.singleton() && r.lower.index == j) ++d_j;
    }
    total += d_j - 1;
  }
  return total;
}

long long mobility(const Algebra& alg) {
  const int n = alg.size();
  long long count = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      if (alg.table().at(a, b) > std::max(a, b)) ++count;
    }
  }
  return count;
}

MetricsRecord metrics_of(const Algebra& alg) {
  const int n = alg.size();
  MetricsRecord rec;
  rec.ambiguity = ambiguity_amount(alg);
  rec.solution_cells = static_cast<long long>(n) * (n + 1) / 2 - 1;
  rec.relative_ambiguity = Rational::reduced(rec.ambiguity, rec.solution_cells);
  rec.denominator_indifference = denominator_indifference(alg);
  rec.mobility = mobility(alg);
  return rec;
}

std::vector<std::pair<AlgebraSpec, MetricsRecord>> metrics_report(int n) {
  std::vector<std::pair<AlgebraSpec, MetricsRecord>> out;
  for (AlgebraSpec& spec : enumerate_algebras(n)) {
    Algebra alg(spec);
    out.emplace_back(std::move(spec), metrics_of(alg));
  }
  return out;
}

long long denominator_indifference_from_idempotents(const AlgebraSpec& spec) {
  const auto& idem = spec.idempotents;
  long long total = 0;
  // interior gaps only: the gap below the first idempotent above e_1 does
  // not contribute, nor does the step onto the zero
  for (std::size_t m = 1; m + 2 < idem.size(); ++m) {
    total += static_cast<long long>(idem[m] - 1) * (idem[m + 1] - idem[m]);
  }
  return total;
}

long long mobility_from_idempotents(const AlgebraSpec& spec) {
  const auto& idem = spec.idempotents;
  long long total = 0;
  for (std::size_t m = 0; m + 2 < idem.size(); ++m) {
    const long long gap = idem[m + 1] - idem[m];
    total += gap * (gap - 1) / 2;
  }
  return total;
}

}  // namespace ftopa
