#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ftopa {

// A probability value e_k of a finite totally ordered probability set,
// identified by its 1-based index. Index 1 is certainty, index n is
// impossibility; probability order is the reverse of index order, so the
// comparison operators below read in probability order.
struct PValue {
  int index = 0;

  friend constexpr bool operator==(PValue, PValue) = default;
  friend constexpr std::strong_ordering operator<=>(PValue a, PValue b) {
    return b.index <=> a.index;  // e_j > e_k iff j < k
  }
};

// A contiguous interval of probability values. `lower` is the smallest
// probability in the set (largest index), `upper` the largest. Singletons
// are degenerate ranges; there is no separate single-value belief type.
struct PRange {
  PValue lower;
  PValue upper;

  explicit constexpr PRange(PValue single) : lower(single), upper(single) {}
  constexpr PRange(PValue lo, PValue up) : lower(lo), upper(up) {
    if (lo > up) {
      throw std::invalid_argument("range endpoints out of probability order");
    }
  }

  constexpr bool singleton() const { return lower == upper; }
  // number of values covered
  constexpr int width() const { return lower.index - upper.index + 1; }
  constexpr bool contains(PValue v) const { return lower <= v && v <= upper; }

  friend constexpr bool operator==(const PRange&, const PRange&) = default;
};

// Square table of product results, stored as 1-based e-indices. A cell value
// of zero means "not assigned yet" (used by the exhaustive search).
class ProductTable {
 public:
  explicit ProductTable(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("table size must be positive");
  }

  int n() const { return n_; }
  int at(int j, int k) const { return cells_[offset(j, k)]; }
  void set(int j, int k, int value) { cells_[offset(j, k)] = value; }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const ProductTable&, const ProductTable&) = default;

 private:
  std::size_t offset(int j, int k) const {
    return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(k - 1);
  }

  int n_;
  std::vector<int> cells_;
};

inline std::string to_string(PValue v) { return "e" + std::to_string(v.index); }

inline std::string to_string(const PRange& r) {
  if (r.singleton()) return to_string(r.lower);
  return "[" + to_string(r.lower) + "," + to_string(r.upper) + "]";
}

// Belief literal grammar: `e<digits>` | `[e<digits>,e<digits>]`.
PValue parse_pvalue(std::string_view text);
PRange parse_belief(std::string_view text);

}  // namespace ftopa
