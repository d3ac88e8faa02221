#include <doctest.h>

#include <random>

#include "ratwitt/fatou.hpp"

using namespace ratwitt;

TEST_CASE("MonSub witness") {
  RingPtr a = parse_ring("MonSub(GF/2)");
  RingPtr k = a->fraction_field();
  auto w = quasi_integral_witness(k, k->parse("y"), k->parse("x"), 12);
  for (unsigned long n = 0; n + 2 <= 12; ++n)
    CHECK(k->eq(w.series.coeff(n + 2), k->mul(k->parse("x"), k->pow(k->parse("y"), n))));
  FatouVerdict v = strong_fatou_check(a, w.f);
  CHECK(v.verdict == FatouClass::in_W_A_only);
  CHECK(v.series_prefix_in_ring);
  CHECK(v.text().find("verdict=in_W_A_only") != std::string::npos);
}

TEST_CASE("integers") {
  RingPtr zz = integers(), qq = rationals();
  CHECK(strong_fatou_check(zz, parse_ratwitt(qq, "(1-T)/(1-2*T)")).verdict == FatouClass::in_Wrat_A);
  FatouVerdict half = strong_fatou_check(zz, parse_ratwitt(qq, "1/(1-1/2*T)"));
  CHECK(half.verdict == FatouClass::not_in_W_A);
  CHECK(half.first_coefficient_outside == 1);
  // Short prefix cannot decide.
  CHECK(strong_fatou_check(zz, parse_series(qq, "1-T/2; prec=3", 3), 2).verdict != FatouClass::in_Wrat_A);
}

TEST_CASE("cic suite") {
  std::mt19937_64 rng(61);
  CicReport r = cic_counterexample_suite(parse_ring("GF/2"), 10, rng);
  CHECK(r.pass());
}
