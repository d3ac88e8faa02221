#include <doctest.h>

#include <random>

#include "ratwitt/matrix.hpp"
#include "ratwitt/poly.hpp"
#include "ratwitt/sampling.hpp"

using namespace ratwitt;

namespace {

// prod (T - r_i) over ZZ
Poly from_roots(const std::vector<long>& roots) {
  RingPtr zz = integers();
  Poly p = Poly::constant(zz, zz->one());
  for (long r : roots) p = p * Poly(zz, {zz->from_int(-r), zz->one()});
  return p;
}

}  // namespace

TEST_CASE("Sylvester resultant equals the product over root differences") {
  std::mt19937_64 rng(11);
  RingPtr zz = integers();
  for (int s = 0; s < 40; ++s) {
    std::vector<long> a, b;
    for (int i = 0, n = 1 + s % 3; i < n; ++i) a.push_back(static_cast<long>(rng() % 9) - 4);
    for (int i = 0, n = 1 + s % 4; i < n; ++i) b.push_back(static_cast<long>(rng() % 9) - 4);
    mpz_class expect = 1;
    for (long x : a)
      for (long y : b) expect *= (x - y);
    CHECK(resultant(from_roots(a), from_roots(b)) == Elem(expect));
    CHECK(norm_monic(from_roots(a), from_roots(b)) == Elem(expect));
  }
}

TEST_CASE("resultant over a ring with zero divisors") {
  RingPtr z6 = parse_ring("Zmod/6");
  Poly f(z6, {z6->from_int(1), z6->one()}), g(z6, {z6->from_int(4), z6->one()});
  // Res(T+1, T+4) = 4 - 1 = 3
  CHECK(z6->eq(resultant(f, g), z6->from_int(3)));
}

TEST_CASE("gcd and division over a field") {
  RingPtr qq = rationals();
  auto lift = [&](const Poly& p) { return p.mapped(qq, [](const Elem& c) { return Elem(mpq_class(c.z())); }); };
  Poly a = lift(from_roots({1, 2, 3})), b = lift(from_roots({2, 3, 5}));
  CHECK(poly_gcd(a, b) == lift(from_roots({2, 3})));
  auto [q, r] = poly_divmod(a, lift(from_roots({1})));
  CHECK(r.is_zero());
  CHECK(q == lift(from_roots({2, 3})));
  CHECK_THROWS_AS(poly_gcd(from_roots({1}), from_roots({2})), DomainError);
}

TEST_CASE("polynomial text") {
  RingPtr zz = integers();
  Poly p(zz, {zz->one(), zz->from_int(-5), zz->from_int(6)});
  CHECK(format_poly(p) == "1-5*T+6*T^2");
  CHECK(p.substitute_power(2) == Poly(zz, {zz->one(), zz->zero(), zz->from_int(-5), zz->zero(), zz->from_int(6)}));
  CHECK(format_poly(p.reversed()) == "6-5*T+T^2");
}

TEST_CASE("determinant algorithms agree with the Leibniz sum") {
  std::mt19937_64 rng(12);
  for (const char* d : {"ZZ", "QQ", "GF/7", "GF/4", "Zmod/6", "Dual(GF/3)", "ZZ[x]"}) {
    RingPtr r = parse_ring(d);
    CAPTURE(d);
    for (std::size_t n = 0; n <= 5; ++n) {
      Matrix m = random_matrix(r, n, n, rng, 3);
      Elem want = det_leibniz(m);
      CHECK(r->eq(det(m), want));
      CHECK(r->eq(det_berkowitz(m), want));
      CHECK(r->eq(det_laplace(m), want));
      if (r->is_field()) CHECK(r->eq(det_gauss(m), want));
      if (r->is_domain() && !r->is_field()) CHECK(r->eq(det_bareiss(m), want));
    }
  }
}

TEST_CASE("Berkowitz characteristic polynomial satisfies Cayley-Hamilton") {
  std::mt19937_64 rng(13);
  for (const char* d : {"ZZ", "Zmod/6", "GF/4"}) {
    RingPtr r = parse_ring(d);
    for (std::size_t n = 1; n <= 4; ++n) {
      Matrix m = random_matrix(r, n, n, rng, 4);
      auto c = char_poly_berkowitz(m);  // highest first
      REQUIRE(c.size() == n + 1);
      CHECK(r->is_one(c[0]));
      Matrix acc(r, n, n);
      for (const auto& coef : c) {
        acc = acc * m;
        Matrix scalar = Matrix::identity(r, n);
        for (std::size_t i = 0; i < n; ++i) scalar(i, i) = coef;
        acc = acc + scalar;
      }
      CHECK(acc == Matrix(r, n, n));
      // constant term is (-1)^n det
      Elem det_sign = n % 2 ? r->neg(det_leibniz(m)) : det_leibniz(m);
      CHECK(r->eq(c.back(), det_sign));
    }
  }
}

TEST_CASE("rank and linear solve over fields") {
  RingPtr qq = rationals();
  Matrix m = parse_matrix(qq, "[[1,2,3],[2,4,6],[1,0,1]]");
  CHECK(rank_field(m) == 2);
  auto x = solve_field(m, {qq->from_int(4), qq->from_int(8), qq->from_int(2)});
  REQUIRE(x);
  for (std::size_t i = 0; i < 3; ++i) {
    Elem s = qq->zero();
    for (std::size_t j = 0; j < 3; ++j) s = qq->add(s, qq->mul(m(i, j), (*x)[j]));
    CHECK(qq->eq(s, i == 1 ? qq->from_int(8) : (i == 0 ? qq->from_int(4) : qq->from_int(2))));
  }
  CHECK(!solve_field(m, {qq->from_int(1), qq->from_int(1), qq->from_int(1)}));
  CHECK(format_matrix(m) == "[[1,2,3],[2,4,6],[1,0,1]]");
  CHECK_THROWS_AS(parse_matrix(qq, "[[1,2],[3]]"), ParseError);
}
