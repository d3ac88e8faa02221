#include <doctest.h>

#include <random>

#include "ratwitt/almkvist.hpp"
#include "ratwitt/sampling.hpp"

using namespace ratwitt;

TEST_CASE("char_poly is det(1 - T phi) by Leibniz over A[T]") {
  std::mt19937_64 rng(51);
  for (const char* d : {"ZZ", "GF/5", "Zmod/6"}) {
    RingPtr a = parse_ring(d);
    RingPtr at = poly_ring(a, "t");
    for (std::size_t n = 1; n <= 4; ++n) {
      Matrix phi = random_matrix(a, n, n, rng, 3);
      Matrix m(at, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Elem::Vec v{i == j ? a->one() : a->zero(), a->neg(phi(i, j))};
          coeffs::trim(*a, v);
          m(i, j) = Elem(std::move(v));
        }
      Poly want(a, det_leibniz(m).vec());
      CHECK(char_poly(EndoModule(phi)) == want);
    }
  }
}

TEST_CASE("examples") {
  RingPtr zz = integers();
  EndoModule m(parse_matrix(zz, "[[1,2],[3,4]]"));
  CHECK(format_poly(char_poly(m)) == "1-5*T-2*T^2");
  CHECK(char_map(m) == parse_ratwitt(zz, "1-5*T-2*T^2"));
  CHECK(char_map(oracle_frobenius(m, 2)) == rw_frobenius(char_map(m), 2));
  CHECK(char_map(oracle_verschiebung(m, 3)) == rw_verschiebung(char_map(m), 3));
  CHECK(oracle_verschiebung(m, 3).rank() == 6);
  CHECK(char_map(oracle_tensor(m, m)) == rw_mul(char_map(m), char_map(m)));
  CHECK(char_map(EndoModule(Matrix(zz, 0, 0))) == RatWitt::zero(zz));
}

TEST_CASE("additivity on block triangular endomorphisms") {
  RingPtr zz = integers();
  EndoModule m(parse_matrix(zz, "[[1,2,5],[3,4,6],[0,0,7]]"));
  CHECK(ses_additivity_check(m, 2));
  CHECK_THROWS_AS(ses_additivity_check(EndoModule(parse_matrix(zz, "[[1,2],[3,4]]")), 1), DomainError);
}

TEST_CASE("torsion coefficients") {
  std::mt19937_64 rng(52);
  RingPtr z6 = parse_ring("Zmod/6");
  for (int s = 0; s < 10; ++s) {
    EndoModule a(random_matrix(z6, 2, 2, rng)), b(random_matrix(z6, 2, 2, rng));
    const std::size_t p = 10;
    CHECK(char_map(oracle_tensor(a, b)).to_series(p) == witt_mul(char_map(a).to_series(p), char_map(b).to_series(p)));
    CHECK(char_map(oracle_frobenius(a, 2)).to_series(p) == frobenius(char_map(a).to_series(2 * p), 2));
  }
}
