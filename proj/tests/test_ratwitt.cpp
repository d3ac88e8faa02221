#include <doctest.h>

#include <random>

#include "ratwitt/ratwitt.hpp"
#include "ratwitt/sampling.hpp"

using namespace ratwitt;

namespace {

// prod (1 - r_i T)
Poly teich_product(const RingPtr& r, const std::vector<long>& roots) {
  Poly p = Poly::constant(r, r->one());
  for (long x : roots) p = p * Poly::linear_one_minus(r, r->from_int(x));
  return p;
}

}  // namespace

TEST_CASE("examples") {
  RingPtr zz = integers(), qq = rationals();
  CHECK(format_ratwitt(rw_mul(parse_ratwitt(zz, "1-2*T"), parse_ratwitt(zz, "1-3*T"))) == "1-6*T");
  CHECK(format_ratwitt(rw_mul(RatWitt::teichmuller(zz, zz->from_int(2)), parse_ratwitt(zz, "(1-T)/(1-3*T)"))) ==
        "(1-2*T)/(1-6*T)");
  CHECK(format_ratwitt(rw_frobenius(parse_ratwitt(zz, "1-5*T+6*T^2"), 2)) == "1-13*T+36*T^2");
  CHECK(format_ratwitt(rw_verschiebung(parse_ratwitt(zz, "(1-T)/(1-2*T)"), 2)) == "(1-T^2)/(1-2*T^2)");
  CHECK(format_ratwitt(rw_neg(parse_ratwitt(zz, "1-T"))) == "1/(1-T)");
  CHECK(rw_add(parse_ratwitt(qq, "1-T"), rw_neg(parse_ratwitt(qq, "1-T"))).is_witt_zero());
  CHECK(parse_ratwitt(qq, "(1-T)*(1-2*T)/(1-T)") == parse_ratwitt(qq, "1-2*T"));
  CHECK(parse_ratwitt(qq, "(1-T)*(1-2*T)/(1-T)").bound() == 2);
  CHECK_THROWS_AS(parse_ratwitt(zz, "2-T"), ParseError);
}

TEST_CASE("product of Teichmuller sums pairs roots") {
  // (sum [a_i] - sum [b_j]) (.) (sum [c_k] - sum [d_l]) computed by hand.
  std::mt19937_64 rng(31);
  RingPtr zz = integers();
  auto pick = [&](int n) {
    std::vector<long> v;
    for (int i = 0; i < n; ++i) v.push_back(static_cast<long>(rng() % 7) - 3);
    return v;
  };
  for (int s = 0; s < 40; ++s) {
    auto a = pick(s % 3), b = pick((s / 3) % 3), c = pick(1 + s % 2), d = pick(s % 2);
    std::vector<long> num, den;
    for (long x : a)
      for (long y : c) num.push_back(x * y);
    for (long x : b)
      for (long y : d) num.push_back(x * y);
    for (long x : a)
      for (long y : d) den.push_back(x * y);
    for (long x : b)
      for (long y : c) den.push_back(x * y);
    RatWitt f = RatWitt::make(teich_product(zz, a), teich_product(zz, b));
    RatWitt g = RatWitt::make(teich_product(zz, c), teich_product(zz, d));
    RatWitt want = RatWitt::make(teich_product(zz, num), teich_product(zz, den));
    CHECK(rw_mul(f, g) == want);
    CHECK(rw_mul_root_pairing(f, g) == want);
    CHECK(rw_mul(f, g).bound() <= rw_mul_bound(f, g));
  }
}

TEST_CASE("product bound exceeds n+m") {
  RingPtr qq = rationals();
  RatWitt f = parse_ratwitt(qq, "1/((1-T)*(1-2*T))");
  RatWitt sq = rw_mul(f, f);
  CHECK(sq == parse_ratwitt(qq, "(1-T)*(1-2*T)^2*(1-4*T)"));
  CHECK(sq.bound() == 5);
  CHECK(rw_mul_bound(f, f) == 5);
}

TEST_CASE("rational operations match the series operations") {
  std::mt19937_64 rng(32);
  for (const char* d : {"ZZ", "QQ", "GF/3", "GF/4"}) {
    RingPtr r = parse_ring(d);
    for (int s = 0; s < 25; ++s) {
      RatWitt f = random_ratwitt(r, 1 + s % 3, rng), g = random_ratwitt(r, 1 + (s / 3) % 3, rng);
      const std::size_t n = 12;
      CHECK(rw_add(f, g).to_series(n) == witt_add(f.to_series(n), g.to_series(n)));
      CHECK(rw_neg(f).to_series(n) == witt_neg(f.to_series(n)));
      CHECK(rw_mul(f, g).to_series(n) == witt_mul(f.to_series(n), g.to_series(n)));
      CHECK(rw_frobenius(f, 2).to_series(6) == frobenius(f.to_series(n), 2));
      CHECK(rw_verschiebung(f, 3).to_series(3 * n) == verschiebung(f.to_series(n), 3));
      CHECK(rw_frobenius(f, 2).bound() <= f.bound());
    }
  }
}

TEST_CASE("non-domains keep the presentation") {
  RingPtr z6 = parse_ring("Zmod/6");
  RatWitt f = parse_ratwitt(z6, "(1-2*T)/(1-2*T)");
  CHECK(f.is_witt_zero());
  CHECK(!f.is_reduced());
  CHECK_THROWS_AS(rw_mul(f, f), DomainError);
  RatWitt g = rw_mul_root_pairing(parse_ratwitt(z6, "1-2*T"), parse_ratwitt(z6, "1-3*T"));
  CHECK(g.to_series(6) == WittSeries::zero(z6, 6));
  CHECK(format_ratwitt(RatWitt::make(poly_frobenius(parse_ratwitt(z6, "1-5*T+T^2").numerator(), 2))) ==
        "1+T+T^2");
}

TEST_CASE("MonSub keeps an A[T] presentation next to its K[T] form") {
  RingPtr a = parse_ring("MonSub(GF/2)");
  RatWitt f = parse_ratwitt(a, "(1+x*y*T)*(1+x*T)/(1+x*T)");
  REQUIRE(f.reduced_over_fraction_field());
  CHECK(format_poly(f.reduced_over_fraction_field()->first) == "1+(x*y)*T");
  RatWitt g = rw_mul(parse_ratwitt(a, "1+x*T"), parse_ratwitt(a, "1+x*y*T"));
  CHECK(g.to_series(8) == witt_mul(parse_ratwitt(a, "1+x*T").to_series(8), parse_ratwitt(a, "1+x*y*T").to_series(8)));
}

TEST_CASE("localization") {
  RingPtr zz = integers(), qq = rationals();
  auto w = localization_preimage(parse_ratwitt(qq, "1-3/2*T"), 2);
  CHECK(w.k == 1);
  CHECK(w.integral == parse_ratwitt(zz, "1-3*T"));
  auto w2 = localization_preimage(parse_ratwitt(qq, "(1-1/4*T)/(1+1/2*T^2)"), 2);
  CHECK(w2.k == 2);
  CHECK(localize(w2.integral) == rw_mul(RatWitt::teichmuller(qq, qq->from_int(4)), parse_ratwitt(qq, "(1-1/4*T)/(1+1/2*T^2)")));
  CHECK(localization_preimage(parse_ratwitt(qq, "1-1/8*T^2"), 2).k == 2);
  CHECK(localization_preimage(parse_ratwitt(qq, "1-1/8*T^3"), 2).k == 1);
  CHECK_THROWS_AS(localization_preimage(parse_ratwitt(qq, "1-1/3*T"), 2), DomainError);
  CHECK(localization_preimage(parse_ratwitt(qq, "1-1/3*T"), 6).k == 1);
}
