#include "core/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "core/axioms.hpp"

namespace ftopa {

namespace {

int parse_int(std::string_view text, std::size_t& pos, std::string_view what) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw std::invalid_argument("expected " + std::string(what) + " in '" + std::string(text) +
                                "'");
  }
  try {
    return std::stoi(std::string(text.substr(start, pos - start)));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(std::string(what) + " too large in '" + std::string(text) + "'");
  }
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool consume(std::string_view text, std::size_t& pos, std::string_view token) {
  skip_spaces(text, pos);
  if (text.substr(pos, token.size()) != token) return false;
  pos += token.size();
  return true;
}

std::vector<int> parse_index_list(std::string_view text, std::size_t& pos) {
  std::vector<int> out;
  for (;;) {
    skip_spaces(text, pos);
    out.push_back(parse_int(text, pos, "an index"));
    std::size_t mark = pos;
    if (!consume(text, pos, ",")) {
      pos = mark;
      break;
    }
  }
  return out;
}

ProductTable build_product_table(const AlgebraSpec& spec) {
  const int n = spec.n;
  std::vector<bool> idem(static_cast<std::size_t>(n) + 1, false);
  for (int i : spec.idempotents) idem[static_cast<std::size_t>(i)] = true;

  // gap_floor[x] = largest idempotent strictly below x, for non-idempotent x
  std::vector<int> gap_floor(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> gap_ceil(static_cast<std::size_t>(n) + 1, 0);
  {
    int floor = 0;
    for (int x = 1; x <= n; ++x) {
      if (idem[static_cast<std::size_t>(x)]) {
        floor = x;
      } else {
        gap_floor[static_cast<std::size_t>(x)] = floor;
      }
    }
    int ceil = 0;
    for (int x = n; x >= 1; --x) {
      if (idem[static_cast<std::size_t>(x)]) {
        ceil = x;
      } else {
        gap_ceil[static_cast<std::size_t>(x)] = ceil;
      }
    }
  }

  // Operands strictly inside the same idempotent gap combine additively,
  // capped at the gap's lower idempotent; every other pair yields the
  // smaller probability of the two outright.
  ProductTable table(n);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const bool same_gap = !idem[static_cast<std::size_t>(j)] &&
                            !idem[static_cast<std::size_t>(k)] &&
                            gap_floor[static_cast<std::size_t>(j)] ==
                                gap_floor[static_cast<std::size_t>(k)];
      if (same_gap) {
        const int floor = gap_floor[static_cast<std::size_t>(j)];
        const int ceil = gap_ceil[static_cast<std::size_t>(j)];
        table.set(j, k, std::min(j + k - floor, ceil));
      } else {
        table.set(j, k, std::max(j, k));
      }
    }
  }
  return table;
}

}  // namespace

void AlgebraSpec::normalize_and_validate() {
  if (n < 3) {
    throw std::invalid_argument("probability sets need at least 3 elements, got n=" +
                                std::to_string(n));
  }
  std::sort(idempotents.begin(), idempotents.end());
  idempotents.erase(std::unique(idempotents.begin(), idempotents.end()), idempotents.end());
  for (int i : idempotents) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("idempotent index " + std::to_string(i) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
  }
  for (int required : {1, n - 1, n}) {
    if (!std::binary_search(idempotents.begin(), idempotents.end(), required)) {
      throw std::invalid_argument("idempotent set must contain index " +
                                  std::to_string(required));
    }
  }
}

std::string AlgebraSpec::short_form() const {
  std::string out = std::to_string(n) + ":{";
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(idempotents[i]);
  }
  out += "}";
  return out;
}

std::string AlgebraSpec::line_form() const {
  std::string out = "n=" + std::to_string(n) + "; idempotents=";
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(idempotents[i]);
  }
  return out;
}

AlgebraSpec AlgebraSpec::parse_short_form(std::string_view text) {
  std::size_t pos = 0;
  AlgebraSpec spec;
  skip_spaces(text, pos);
  spec.n = parse_int(text, pos, "the set size");
  if (!consume(text, pos, ":") || !consume(text, pos, "{")) {
    throw std::invalid_argument("expected '<n>:{i,...}' in '" + std::string(text) + "'");
  }
  spec.idempotents = parse_index_list(text, pos);
  if (!consume(text, pos, "}")) {
    throw std::invalid_argument("expected '}' in '" + std::string(text) + "'");
  }
  skip_spaces(text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in '" + std::string(text) + "'");
  }
  spec.normalize_and_validate();
  return spec;
}

AlgebraSpec AlgebraSpec::parse_line(std::string_view text) {
  std::size_t pos = 0;
  AlgebraSpec spec;
  if (!consume(text, pos, "n=")) {
    throw std::invalid_argument("expected 'n=<int>; idempotents=...' in '" + std::string(text) +
                                "'");
  }
  skip_spaces(text, pos);
  spec.n = parse_int(text, pos, "the set size");
  if (!consume(text, pos, ";") || !consume(text, pos, "idempotents=")) {
    throw std::invalid_argument("expected '; idempotents=' in '" + std::string(text) + "'");
  }
  spec.idempotents = parse_index_list(text, pos);
  skip_spaces(text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in '" + std::string(text) + "'");
  }
  spec.normalize_and_validate();
  return spec;
}

Algebra::Algebra(AlgebraSpec spec) : spec_(std::move(spec)), table_(1) {
  spec_.normalize_and_validate();
  table_ = build_product_table(spec_);

  AxiomReport report = check_axioms(table_);
  if (!report.all_passed()) {
    throw std::logic_error("constructed table violates the axiom suite: " + report.summary());
  }

  const int n = spec_.n;
  inverse_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) inverse_[static_cast<std::size_t>(k)] = n + 1 - k;

  solutions_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), std::nullopt);
  for (int q = 1; q <= n; ++q) {
    for (int p = q; p <= n; ++p) {
      solutions_[static_cast<std::size_t>(q - 1) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(p - 1)] = brute_solve(table_, p, q);
    }
  }
}

void Algebra::require_valid(PValue v) const {
  if (v.index < 1 || v.index > spec_.n) {
    throw std::invalid_argument("value index " + std::to_string(v.index) + " outside [1, " +
                                std::to_string(spec_.n) + "]");
  }
}

PValue Algebra::value(int index) const {
  PValue v{index};
  require_valid(v);
  return v;
}

PValue Algebra::product(PValue p, PValue q) const {
  require_valid(p);
  require_valid(q);
  return PValue{table_.at(p.index, q.index)};
}

PValue Algebra::inverse(PValue p) const {
  require_valid(p);
  return PValue{inverse_[static_cast<std::size_t>(p.index)]};
}

PRange Algebra::solve(PValue p, PValue q) const {
  require_valid(p);
  require_valid(q);
  if (p > q) {
    throw std::domain_error("solution not guaranteed: " + to_string(p) +
                            " exceeds denominator " + to_string(q) + " in probability");
  }
  const int n = spec_.n;
  return *solutions_[static_cast<std::size_t>(q.index - 1) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(p.index - 1)];
}

Algebra make_algebra(AlgebraSpec spec) { return Algebra(std::move(spec)); }

std::vector<AlgebraSpec> enumerate_algebras(int n) {
  if (n < 3) throw std::invalid_argument("probability sets need at least 3 elements");

  std::vector<AlgebraSpec> out;
  std::vector<int> optional_members;

  auto emit = [&] {
    AlgebraSpec spec;
    spec.n = n;
    spec.idempotents = optional_members;
    spec.idempotents.push_back(1);
    spec.idempotents.push_back(n - 1);
    spec.idempotents.push_back(n);
    spec.normalize_and_validate();
    out.push_back(std::move(spec));
  };

  auto extend = [&](auto&& self, int next) -> void {
    emit();
    for (int v = next; v <= n - 2; ++v) {
      optional_members.push_back(v);
      self(self, v + 1);
      optional_members.pop_back();
    }
  };
  extend(extend, 2);
  return out;
}

std::vector<int> idempotents_of(const Algebra& alg) {
  std::vector<int> out;
  for (int k = 1; k <= alg.size(); ++k) {
    if (alg.table().at(k, k) == k) out.push_back(k);
  }
  return out;
}

}  // namespace ftopa
