#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/values.hpp"

namespace ftopa {

// Size n plus the sorted index set of the idempotent elements. Indices 1,
// n-1 and n are mandatory members of every legal idempotent set.
struct AlgebraSpec {
  int n = 0;
  std::vector<int> idempotents;

  // sorts and deduplicates, then throws std::invalid_argument on violation
  void normalize_and_validate();

  std::string short_form() const;  // "8:{1,5,7,8}"
  std::string line_form() const;   // "n=8; idempotents=1,5,7,8"
  static AlgebraSpec parse_short_form(std::string_view text);
  static AlgebraSpec parse_line(std::string_view text);

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

// An immutable totally ordered probability algebra: the product table
// determined by the idempotent set, the index-reversing inverse, and a
// solution table precomputed cell by cell from the product table. The
// constructor re-checks the full axiom suite and refuses tables that fail
// it, so an Algebra in hand is always legal.
class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);

  int size() const { return spec_.n; }
  const AlgebraSpec& spec() const { return spec_; }
  const ProductTable& table() const { return table_; }

  PValue value(int index) const;
  PValue product(PValue p, PValue q) const;
  PValue inverse(PValue p) const;

  // the set { r : q * r = p } as its hull; requires p <= q in probability
  PRange solve(PValue p, PValue q) const;

 private:
  void require_valid(PValue v) const;

  AlgebraSpec spec_;
  ProductTable table_;
  std::vector<int> inverse_;                 // inverse_[k] = n+1-k, entry 0 unused
  std::vector<std::optional<PRange>> solutions_;  // dense over (q, p) cells
};

Algebra make_algebra(AlgebraSpec spec);

// All legal idempotent sets of size-n algebras: {1, n-1, n} joined with each
// subset of {2, ..., n-2}, in lexicographic order of the optional subset
// (so the minimal idempotent set comes first).
std::vector<AlgebraSpec> enumerate_algebras(int n);

// Idempotent indices read back off the product table diagonal.
std::vector<int> idempotents_of(const Algebra& alg);

}  // namespace ftopa
