#pragma once

#include "core/algebra.hpp"
#include "core/values.hpp"

namespace ftopa {

// Endpoint-wise product. Equals the set image { x*y : x in a, y in b }: a
// unit index step in either operand moves the product index by at most one,
// so the image is contiguous.
PRange range_product(const Algebra& alg, const PRange& a, const PRange& b);

// Hull of { z : exists x in numerator, y in denominator with x = y*z }.
// Requires lower(numerator) <= upper(denominator) in probability; throws
// std::domain_error otherwise. When the operand intervals overlap the upper
// endpoint is certainty itself, since x = x*e_1 for the shared values.
PRange range_solve(const Algebra& alg, const PRange& numerator, const PRange& denominator);

// Pointwise image under the inverse; a decreasing bijection reflects the
// interval, so the endpoints swap and invert.
PRange range_inverse(const Algebra& alg, const PRange& a);

}  // namespace ftopa
