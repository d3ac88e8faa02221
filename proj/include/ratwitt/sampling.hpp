#pragma once

#include <cstddef>
#include <random>

#include "ratwitt/matrix.hpp"
#include "ratwitt/ratwitt.hpp"
#include "ratwitt/wittseries.hpp"

namespace ratwitt {

// Random test data with ring-specific `size` (coefficient magnitude for ZZ
// and QQ, ignored for finite rings).
WittSeries random_series(const RingPtr& ring, std::size_t precision, std::mt19937_64& rng, int size = 3);
// 1 + c_1 T + .. + c_d T^d with d drawn from [0, max_degree].
Poly random_unit_poly(const RingPtr& ring, std::size_t max_degree, std::mt19937_64& rng, int size = 3);
// P/Q with deg P < b and deg Q <= b, so bound <= b.
RatWitt random_ratwitt(const RingPtr& ring, std::size_t b, std::mt19937_64& rng, int size = 3);
Matrix random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int size = 3);

}  // namespace ratwitt
