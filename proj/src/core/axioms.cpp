#include "core/axioms.hpp"

#include <algorithm>

#include "core/algebra.hpp"

namespace ftopa {

namespace {

std::string cell(int j, int k, int v) {
  return "e" + std::to_string(j) + "*e" + std::to_string(k) + "=e" + std::to_string(v);
}

}  // namespace

bool AxiomReport::all_passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const AxiomResult& r) { return r.passed; });
}

std::string AxiomReport::summary() const {
  std::string out;
  for (const AxiomResult& r : conditions) {
    if (r.passed) continue;
    if (!out.empty()) out += "; ";
    out += r.name + " (" + r.counterexample + ")";
  }
  return out.empty() ? "all conditions hold" : out;
}

AxiomReport check_axioms(const ProductTable& t) {
  const int n = t.n();
  AxiomReport report;
  auto& c = report.conditions;
  for (auto& r : c) r.passed = true;

  c[0].name = "closure and order preservation";
  c[1].name = "commutativity";
  c[2].name = "associativity";
  c[3].name = "product bounded by both operands";
  c[4].name = "no nontrivial zero";
  c[5].name = "solution existence";
  c[6].name = "values within certainty and impossibility";
  c[7].name = "unit law";
  c[8].name = "inverse strictly decreasing";
  c[9].name = "inverse involution";

  auto fail = [&](int idx, std::string witness) {
    if (c[idx].passed) {
      c[idx].passed = false;
      c[idx].counterexample = std::move(witness);
    }
  };

  // closure; monotone in each argument (index-wise nondecreasing as the
  // operand probability decreases)
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      int v = t.at(j, k);
      if (v < 1 || v > n) {
        fail(0, cell(j, k, v) + " outside the value set");
        fail(6, cell(j, k, v) + " outside the value set");
      }
    }
  }
  for (int j = 2; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      if (t.at(j - 1, k) > t.at(j, k)) {
        fail(0, cell(j - 1, k, t.at(j - 1, k)) + " below " + cell(j, k, t.at(j, k)));
      }
      if (t.at(k, j - 1) > t.at(k, j)) {
        fail(0, cell(k, j - 1, t.at(k, j - 1)) + " below " + cell(k, j, t.at(k, j)));
      }
    }
  }

  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (t.at(j, k) != t.at(k, j)) {
        fail(1, cell(j, k, t.at(j, k)) + " vs " + cell(k, j, t.at(k, j)));
      }
    }
  }

  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      const int ab = t.at(a, b);
      if (ab < 1 || ab > n) continue;
      for (int cc = 1; cc <= n; ++cc) {
        const int bc = t.at(b, cc);
        if (bc < 1 || bc > n) continue;
        if (t.at(ab, cc) != t.at(a, bc)) {
          fail(2, "(e" + std::to_string(a) + "*e" + std::to_string(b) + ")*e" +
                      std::to_string(cc) + " != e" + std::to_string(a) + "*(e" +
                      std::to_string(b) + "*e" + std::to_string(cc) + ")");
        }
      }
    }
  }

  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      if (t.at(j, k) < std::max(j, k)) {
        fail(3, cell(j, k, t.at(j, k)) + " exceeds the smaller operand");
      }
    }
  }

  for (int j = 1; j < n; ++j) {
    for (int k = 1; k < n; ++k) {
      if (t.at(j, k) == n) {
        fail(4, cell(j, k, n) + " with both operands nonzero");
      }
    }
  }

  // for every p <= q in probability (index p >= index q) some r solves q*r = p
  for (int q = 1; q <= n; ++q) {
    for (int p = q; p <= n; ++p) {
      bool found = false;
      for (int r = 1; r <= n && !found; ++r) found = t.at(q, r) == p;
      if (!found) {
        fail(5, "no r with e" + std::to_string(q) + "*r=e" + std::to_string(p));
      }
    }
  }

  for (int k = 1; k <= n; ++k) {
    if (t.at(1, k) != k) {
      fail(7, cell(1, k, t.at(1, k)));
    }
  }

  // inverse fixed as index reversal: the only strictly decreasing bijection
  // on a finite chain
  for (int j = 1; j < n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      PValue p{k};  // p < q in probability
      PValue q{j};
      PValue inv_p{n + 1 - k};
      PValue inv_q{n + 1 - j};
      if (!(p < q && inv_p > inv_q)) {
        fail(8, "i[e" + std::to_string(j) + "], i[e" + std::to_string(k) + "]");
      }
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (n + 1 - (n + 1 - k) != k) {
      fail(9, "i[i[e" + std::to_string(k) + "]]");
    }
  }

  return report;
}

PRange brute_solve(const ProductTable& t, int p, int q) {
  const int n = t.n();
  if (p < 1 || p > n || q < 1 || q > n) {
    throw std::invalid_argument("value index outside [1, n]");
  }
  if (p < q) {
    throw std::domain_error("solution not guaranteed: numerator e" + std::to_string(p) +
                            " exceeds denominator e" + std::to_string(q) +
                            " in probability");
  }
  int first = 0;
  int last = 0;
  int count = 0;
  for (int r = 1; r <= n; ++r) {
    if (t.at(q, r) == p) {
      if (first == 0) first = r;
      last = r;
      ++count;
    }
  }
  if (count == 0) {
    throw std::logic_error("empty solution set for e" + std::to_string(p) + "/e" +
                           std::to_string(q));
  }
  if (count != last - first + 1) {
    throw std::logic_error("non-contiguous solution set for e" + std::to_string(p) + "/e" +
                           std::to_string(q));
  }
  return PRange(PValue{last}, PValue{first});
}

namespace {

class TableSearch {
 public:
  explicit TableSearch(int n) : n_(n), table_(n) {
    for (int k = 1; k <= n_; ++k) {
      table_.set(1, k, k);
      table_.set(k, 1, k);
      table_.set(n_, k, n_);
      table_.set(k, n_, n_);
    }
    for (int j = 2; j < n_; ++j) {
      for (int k = j; k < n_; ++k) cells_.emplace_back(j, k);
    }
  }

  std::vector<ProductTable> run() {
    descend(0);
    std::sort(found_.begin(), found_.end(),
              [](const ProductTable& a, const ProductTable& b) { return a.cells() < b.cells(); });
    return std::move(found_);
  }

 private:
  bool associativity_holds_so_far() const {
    for (int a = 1; a <= n_; ++a) {
      for (int b = 1; b <= n_; ++b) {
        const int ab = table_.at(a, b);
        if (ab == 0) continue;
        for (int c = 1; c <= n_; ++c) {
          const int bc = table_.at(b, c);
          if (bc == 0) continue;
          const int l = table_.at(ab, c);
          const int r = table_.at(a, bc);
          if (l != 0 && r != 0 && l != r) return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t i) {
    if (i == cells_.size()) {
      if (check_axioms(table_).all_passed()) found_.push_back(table_);
      return;
    }
    auto [j, k] = cells_[i];
    int lo = std::max(j, k);
    lo = std::max(lo, table_.at(j - 1, k));
    lo = std::max(lo, table_.at(j, k - 1));
    for (int v = lo; v < n_; ++v) {
      table_.set(j, k, v);
      table_.set(k, j, v);
      if (associativity_holds_so_far()) descend(i + 1);
    }
    table_.set(j, k, 0);
    table_.set(k, j, 0);
  }

  int n_;
  ProductTable table_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<ProductTable> found_;
};

}  // namespace

std::vector<ProductTable> exhaustive_search(int n) {
  if (n < 3) throw std::invalid_argument("probability sets need at least 3 elements");
  if (n > 7) {
    throw UnsupportedSizeError(
        "exhaustive table search is bounded at n <= 7; larger sizes are covered by the "
        "constructive enumeration");
  }
  return TableSearch(n).run();
}

UniquenessCheck verify_uniqueness(int n) {
  UniquenessCheck check;
  check.n = n;
  check.expected = 1LL << (n - 3);

  std::vector<ProductTable> found = exhaustive_search(n);
  check.found = static_cast<long long>(found.size());

  std::vector<ProductTable> constructed;
  constructed.reserve(found.size());
  for (const AlgebraSpec& spec : enumerate_algebras(n)) {
    constructed.push_back(Algebra(spec).table());
  }
  std::sort(constructed.begin(), constructed.end(),
            [](const ProductTable& a, const ProductTable& b) { return a.cells() < b.cells(); });
  check.tables_match = found == constructed;
  return check;
}

}  // namespace ftopa
