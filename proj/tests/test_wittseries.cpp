#include <doctest.h>

#include <random>
#include <sstream>

#include "ratwitt/sampling.hpp"
#include "ratwitt/wittseries.hpp"

using namespace ratwitt;

TEST_CASE("Teichmuller elements multiply") {
  RingPtr zz = integers();
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      CHECK(witt_mul(WittSeries::teichmuller(zz, zz->from_int(a), 8), WittSeries::teichmuller(zz, zz->from_int(b), 8)) ==
            WittSeries::teichmuller(zz, zz->from_int(a * b), 8));
}

TEST_CASE("table product agrees with the ghost route over QQ") {
  // from_ghost inverts the logarithmic derivative by Newton's identities,
  // independent of the universal table.
  std::mt19937_64 rng(21);
  RingPtr qq = rationals();
  for (int s = 0; s < 30; ++s) {
    WittSeries f = random_series(qq, 12, rng), g = random_series(qq, 12, rng);
    auto wf = ghost(f), wg = ghost(g);
    std::vector<Elem> wp;
    for (std::size_t i = 0; i < 12; ++i) wp.push_back(qq->mul(wf[i], wg[i]));
    CHECK(witt_mul(f, g) == from_ghost(qq, wp));
    CHECK(from_ghost(qq, ghost(f)) == f);
  }
}

TEST_CASE("reduction mod n commutes with the Witt product") {
  std::mt19937_64 rng(22);
  RingPtr zz = integers();
  for (const char* d : {"Zmod/6", "Zmod/4", "GF/2"}) {
    RingPtr r = parse_ring(d);
    auto red = [&](const WittSeries& f) { return f.mapped(r, [&](const Elem& c) { return r->from_int(c.z()); }); };
    for (int s = 0; s < 20; ++s) {
      WittSeries f = random_series(zz, 10, rng, 5), g = random_series(zz, 10, rng, 5);
      CHECK(red(witt_mul(f, g)) == witt_mul(red(f), red(g)));
      CHECK(red(frobenius(f, 2)) == frobenius(red(f), 2));
    }
  }
}

TEST_CASE("F_2 is f(T) f(-T) evaluated at sqrt(T)") {
  std::mt19937_64 rng(23);
  RingPtr zz = integers();
  for (int s = 0; s < 20; ++s) {
    WittSeries f = random_series(zz, 12, rng, 4);
    Poly p = f.as_poly(), pm = p.substitute_scaled(zz->from_int(-1));
    Poly prod = (p * pm).truncated(13);
    std::vector<Elem> even;
    for (std::size_t i = 1; i <= 6; ++i) even.push_back(prod.coeff(2 * i));
    CHECK(frobenius(f, 2) == WittSeries(zz, even));
    CHECK(frobenius_resultant(f, 2) == frobenius_ghost(f, 2));
    CHECK(frobenius_resultant(f, 3) == frobenius_ghost(f, 3));
  }
}

TEST_CASE("fixed values") {
  RingPtr zz = integers();
  CHECK(frobenius(parse_series(zz, "1-5*T+6*T^2; prec=8", 8), 2) == parse_series(zz, "1-13*T+36*T^2; prec=4", 4));
  CHECK(witt_neg(parse_series(zz, "1-2*T; prec=4", 4)) == parse_series(zz, "1/(1-2*T); prec=4", 4));
  CHECK(parse_series(zz, "1,1,2,4", 16).precision() == 3);
  CHECK(format_series(parse_series(zz, "1-6*T", 4)) == "1-6*T; prec=4");
  CHECK_THROWS_AS(parse_series(zz, "2,1", 4), ParseError);
  CHECK_THROWS_AS(ghost(parse_series(parse_ring("Zmod/6"), "1-T", 3)), DomainError);
}

TEST_CASE("precision of results") {
  RingPtr zz = integers();
  WittSeries f = parse_series(zz, "1-T; prec=6", 6), g = parse_series(zz, "1-T; prec=4", 4);
  CHECK(witt_add(f, g).precision() == 4);
  CHECK(witt_mul(f, g).precision() == 4);
  CHECK(frobenius(f, 4).precision() == 1);
  CHECK(verschiebung(f, 3).precision() == 18);
  CHECK_THROWS_AS(witt_add(f, parse_series(rationals(), "1-T", 3)), RingMismatch);
}

TEST_CASE("universal table: save, load and regeneration agree") {
  auto& t = UniversalMulTable::instance();
  t.ensure(8);
  std::stringstream ss;
  t.save(ss, 8);
  std::string text = ss.str();
  CHECK(text.rfind(UniversalMulTable::kFileHeader, 0) == 0);
  std::istringstream in(text);
  CHECK_NOTHROW(t.load(in, true));
  auto fresh = UniversalMulTable::generate(6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(fresh[n - 1]->c == t.level(n)->c);
  // Coefficient 1 is -a_1 b_1.
  CHECK(t.level(1)->c == std::vector<mpz_class>{-1});
  std::istringstream bad("ratwitt-multable v0\n");
  CHECK_THROWS_AS(t.load(bad), ParseError);
  std::string corrupt = text;
  corrupt[corrupt.size() - 2] = corrupt[corrupt.size() - 2] == '1' ? '2' : '1';
  std::istringstream in2(corrupt);
  CHECK_THROWS(t.load(in2, true));
}

TEST_CASE("partition counts") {
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(UniversalMulTable::partitions_of(n).size() == p[n]);
}
