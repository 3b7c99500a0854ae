/* Text form of polynomials: +, -, *, ^, integer and rational literals,
 * declared variable names, parentheses.  parse(print(p)) == p.
 */
#pragma once

#include <string>

#include "detsing/polynomial.hpp"

namespace detsing {

// Throws DsError(Parse) with a 0-based position, or DsError(UnknownVariable).
PolyQ parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace detsing
