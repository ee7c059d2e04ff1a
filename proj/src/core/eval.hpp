#pragma once

#include <string_view>

#include "core/algebra.hpp"
#include "core/values.hpp"

namespace ftopa {

// Evaluates a belief expression over one algebra. Literals are `e<k>` and
// `[e<l>,e<u>]`; operators are `*` and `/` with equal precedence and left
// associativity, so unparenthesized chains evaluate left to right; `i[...]`
// is the inverse; parentheses group. Throws ParseError for bad syntax and
// std::domain_error when a division leaves its domain.
PRange eval_expression(const Algebra& alg, std::string_view text);

}  // namespace ftopa
