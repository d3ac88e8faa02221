#include "ratwitt/sampling.hpp"

namespace ratwitt {

WittSeries random_series(const RingPtr& ring, std::size_t precision, std::mt19937_64& rng, int size) {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < precision; ++i) c.push_back(ring->random(rng, size));
  return WittSeries(ring, std::move(c));
}

Poly random_unit_poly(const RingPtr& ring, std::size_t max_degree, std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Elem> c{ring->one()};
  std::size_t d = deg(rng);
  for (std::size_t i = 0; i < d; ++i) c.push_back(ring->random(rng, size));
  return Poly(ring, std::move(c));
}

RatWitt random_ratwitt(const RingPtr& ring, std::size_t b, std::mt19937_64& rng, int size) {
  if (b == 0) throw DomainError("bound must be positive");
  return RatWitt::make(random_unit_poly(ring, b - 1, rng, size), random_unit_poly(ring, b, rng, size));
}

Matrix random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int size) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ring->random(rng, size);
  return m;
}

}  // namespace ratwitt
