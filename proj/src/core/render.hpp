#pragma once

#include <string>

#include "core/algebra.hpp"
#include "core/axioms.hpp"
#include "core/experiment.hpp"

namespace ftopa {

// "%.6g" with a fixed buffer, so identical inputs render identical bytes
std::string format_real(double v);

// Product table followed by the solution table, tab-separated. Solution
// rows run over denominators e_1 .. e_{n-1}; cells left of the diagonal
// stay empty. Cells use the belief literal grammar.
std::string render_tables(const Algebra& alg);

// One metrics row per algebra of size n:
//   n\tidempotents\tA\tM\tR\tO_d\tO_m
// followed by a footer line confirming the size-only identities
// (A, R and the O_d + O_m sum depend on n alone).
std::string render_metrics_tsv(int n);

std::string render_uniqueness(const UniquenessCheck& check);  // "found 8, expected 8, PASS"

std::string render_experiment_tsv(const ExperimentReport& report);
std::string render_experiment_text(const ExperimentReport& report);

}  // namespace ftopa
