#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/values.hpp"

namespace ftopa {

// Thrown when an operation is refused because the requested size is beyond
// its tractability bound.
struct UnsupportedSizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AxiomResult {
  std::string name;
  bool passed = false;
  std::string counterexample;  // empty when passed
};

// Pass/fail for each of the ten conditions a legal product table must
// satisfy, with one witness per failing condition.
struct AxiomReport {
  std::array<AxiomResult, 10> conditions;

  bool all_passed() const;
  std::string summary() const;
};

// Checks a candidate product table against the full axiom suite by
// exhaustive quantification over element tuples. The inverse carries no
// freedom (index reversal is the only strictly decreasing involution on a
// finite chain), so conditions on it are checked against that fixed map.
AxiomReport check_axioms(const ProductTable& table);

// The set { r : q * r = p } read directly off the table, returned as its
// hull. Requires index(p) >= index(q), i.e. p <= q in probability. Throws
// std::logic_error if the set is empty or not contiguous, which cannot
// happen on a table that passed check_axioms.
PRange brute_solve(const ProductTable& table, int p, int q);

// Backtracking search over all product tables of size n that satisfy the
// axiom suite. Row/column of the unit and the zero are forced, commutativity
// halves the free cells, and monotonicity plus incremental associativity
// prune the domains. Results are sorted canonically. Refuses n > 7.
std::vector<ProductTable> exhaustive_search(int n);

struct UniquenessCheck {
  int n = 0;
  long long found = 0;
  long long expected = 0;
  bool tables_match = false;

  bool passed() const { return found == expected && tables_match; }
};

// Confirms that exhaustive search finds exactly 2^(n-3) legal tables and
// that they coincide, as a set, with the constructed family.
UniquenessCheck verify_uniqueness(int n);

}  // namespace ftopa
