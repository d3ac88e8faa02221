#pragma once

#include <string_view>
#include <utility>

#include "ratwitt/poly.hpp"

namespace ratwitt {

// Evaluates an arithmetic expression in T with ring-element literals into
// P/Q over `ring` with P(0) = Q(0) = 1. Proper subrings are evaluated in
// their ambient literal ring and every coefficient is checked for
// membership. Throws ParseError for malformed text, a constant term that is
// not 1, or a denominator whose constant term is not a unit.
std::pair<Poly, Poly> parse_t_fraction(const RingPtr& ring, std::string_view text);

// P(0) = Q(0) = 1 after scaling by the inverse of Q(0); throws ParseError
// when that is impossible.
std::pair<Poly, Poly> normalize_constant_terms(Poly p, Poly q);

}  // namespace ratwitt
