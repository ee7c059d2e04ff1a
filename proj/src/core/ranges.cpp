#include "core/ranges.hpp"

namespace ftopa {

PRange range_product(const Algebra& alg, const PRange& a, const PRange& b) {
  return PRange(alg.product(a.lower, b.lower), alg.product(a.upper, b.upper));
}

PRange range_solve(const Algebra& alg, const PRange& numerator, const PRange& denominator) {
  if (numerator.lower > denominator.upper) {
    throw std::domain_error("range solution undefined: numerator lower bound " +
                            to_string(numerator.lower) + " exceeds denominator upper bound " +
                            to_string(denominator.upper) + " in probability");
  }
  const PValue lo = alg.solve(numerator.lower, denominator.upper).lower;
  if (numerator.upper <= denominator.lower) {
    return PRange(lo, alg.solve(numerator.upper, denominator.lower).upper);
  }
  return PRange(lo, PValue{1});
}

PRange range_inverse(const Algebra& alg, const PRange& a) {
  return PRange(alg.inverse(a.upper), alg.inverse(a.lower));
}

}  // namespace ftopa
