#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/algebra.hpp"

namespace ftopa {

// Reduced fraction with positive denominator. Relative ambiguity must be
// compared exactly, so no floating point here.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long num, long long den);
  std::string str() const;  // "3/5"

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct MetricsRecord {
  long long ambiguity = 0;                 // A
  long long solution_cells = 0;            // M
  Rational relative_ambiguity;             // R = A/M
  long long denominator_indifference = 0;  // O_d
  long long mobility = 0;                  // O_m
};

// The metric counts below run over the solution cells with nonzero
// denominator: q in [e_1, e_{n-1}], p in [q, e_n] in indices. This is the
// only cell set under which R comes out to (n-2)/(n+2).

// Sum of (width - 1) over the range-valued solution cells.
long long ambiguity_amount(const Algebra& alg);

Rational relative_ambiguity(const Algebra& alg);

// For each numerator e_j, d_j counts denominators e_k (k <= j) whose
// solution is the singleton e_j itself; range-valued cells never count,
// even when e_j is an endpoint. The order is the sum of (d_j - 1) over the
// interior numerators.
long long denominator_indifference(const Algebra& alg);

// Distinct unordered operand pairs whose product lies strictly below both.
long long mobility(const Algebra& alg);

MetricsRecord metrics_of(const Algebra& alg);

std::vector<std::pair<AlgebraSpec, MetricsRecord>> metrics_report(int n);

// Closed forms of the two orders in terms of the idempotent gap layout;
// cross-checks for the direct table counts above.
long long denominator_indifference_from_idempotents(const AlgebraSpec& spec);
long long mobility_from_idempotents(const AlgebraSpec& spec);

}  // namespace ftopa
