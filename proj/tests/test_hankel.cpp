#include <doctest.h>

#include <random>

#include "ratwitt/hankel.hpp"
#include "ratwitt/kernels/modp.hpp"
#include "ratwitt/sampling.hpp"

using namespace ratwitt;
namespace kn = ratwitt::kernels;

TEST_CASE("mod-p rank: scalar, AVX2 and generic elimination agree") {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 3u, 7u, 65521u, 16777213u}) {
    RingPtr f = finite_field(p, 1);
    for (int s = 0; s < 40; ++s) {
      std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
      std::vector<std::uint32_t> a(rows * cols);
      // Low-rank products make rank deficiency common.
      std::size_t inner = 1 + rng() % 6;
      std::vector<std::uint32_t> u(rows * inner), v(inner * cols);
      for (auto& x : u) x = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
      Matrix m(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          unsigned long long acc = 0;
          for (std::size_t k = 0; k < inner; ++k) acc = (acc + 1ull * u[i * inner + k] * v[k * cols + j]) % p;
          a[i * cols + j] = static_cast<std::uint32_t>(acc);
          m(i, j) = f->from_int(static_cast<long>(acc));
        }
      std::size_t want = rank_field(m);
      CHECK(kn::rank_mod_p(a, rows, cols, p, kn::Variant::Scalar) == want);
      if (kn::cpu_has_avx2() && p < kn::kMaxVectorModulus)
        CHECK(kn::rank_mod_p(a, rows, cols, p, kn::Variant::Avx2) == want);
    }
  }
}

TEST_CASE("axpy kernels agree elementwise") {
  if (!kn::cpu_has_avx2()) return;
  std::mt19937_64 rng(42);
  for (std::uint32_t p : {3u, 65521u, (1u << 25) - 39}) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u}) {
      std::vector<std::uint32_t> x(n), y(n);
      for (auto& e : x) e = static_cast<std::uint32_t>(rng() % p);
      for (auto& e : y) e = static_cast<std::uint32_t>(rng() % p);
      auto y2 = y;
      std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
      kn::axpy_mod_scalar(y.data(), x.data(), c, p, n);
      kn::axpy_mod_avx2(y2.data(), x.data(), c, p, n);
      CHECK(y == y2);
    }
  }
}

TEST_CASE("Hankel rank of rational vectors is the Kronecker bound") {
  RingPtr qq = rationals();
  CHECK(hankel_rank_field(parse_ratwitt(qq, "1/(1-T-T^2)")) == 2);
  CHECK(hankel_rank_field(parse_ratwitt(qq, "1-T")) == 2);
  CHECK(hankel_rank_field(parse_ratwitt(qq, "1/(1-T)")) == 1);
  HankelRank hr = hankel_rank_field(parse_series(qq, "1/(1-T-T^2); prec=12", 12));
  REQUIRE(hr.rank);
  CHECK(*hr.rank == 2);
  CHECK(!hr.truncation_limited);
  HankelRank full = hankel_rank_field(parse_series(qq, "1,1,2,6,24", 4));
  CHECK(!full.rank);
}

TEST_CASE("reconstruction") {
  RingPtr qq = rationals();
  CHECK(format_ratwitt(kronecker_reconstruct(parse_series(qq, "1,1,2,4", 16), 2)) == "(1-T)/(1-2*T)");
  CHECK(kronecker_reconstruct(parse_series(qq, "1,1,2,3,5,8,13", 16), 2) == parse_ratwitt(qq, "1/(1-T-T^2)"));
  CHECK_THROWS_AS(kronecker_reconstruct(parse_series(qq, "1,1,2,3", 16), 3), PrecisionError);
  CHECK_THROWS_AS(kronecker_reconstruct(parse_series(qq, "1,1,2,6,24,120", 16), 2), ReconstructionError);
  std::mt19937_64 rng(43);
  for (const char* d : {"QQ", "GF/5", "GF/8"}) {
    RingPtr k = parse_ring(d);
    for (int s = 0; s < 30; ++s) {
      RatWitt f = random_ratwitt(k, 1 + s % 4, rng);
      std::size_t r = f.bound();
      CHECK(kronecker_reconstruct(f.to_series(2 * r), r) == f);
      CHECK(kronecker_reconstruct(f.to_series(2 * r - 1), r) == f);
      CHECK(kronecker_reconstruct(f.to_series(2 * r + 3), r + 1) == f);
    }
  }
  RingPtr zz = integers();
  CHECK(reconstruct_over(parse_series(zz, "1,1,2,4", 16), 2) == parse_ratwitt(zz, "(1-T)/(1-2*T)"));
}

TEST_CASE("W_J membership") {
  RingPtr dual = parse_ring("Dual(GF/2)");
  CHECK(wj_member(parse_series(dual, "1+e*T+e*T^3+e*T^4; prec=12", 12), 2));
  CHECK(!wj_member(parse_series(dual, "1+e*T+e*T^3+e*T^4; prec=12", 12), 1));
  RingPtr zz = integers();
  CHECK(wj_member(parse_series(zz, "1/(1-T-T^2); prec=10", 10), 2));
  CHECK(!wj_member(parse_series(zz, "1/(1-T-T^2); prec=10", 10), 1));
  auto v = wj_member_qualified(parse_series(zz, "1-T; prec=4", 4), 2);
  CHECK(v.member);
  CHECK(!v.conclusive);
  RingPtr z6 = parse_ring("Zmod/6");
  CHECK(wj_member(parse_series(z6, "(1-2*T)/(1-3*T); prec=10", 10), 2));
}

TEST_CASE("block minor expansion") {
  RingPtr zz = integers();
  Matrix m = parse_matrix(zz, "[[1,2,3,4],[0,1,5,2],[3,1,0,1],[2,2,1,7]]");
  auto d = minor_decomposition_check(m, 2, 2);
  CHECK(d.equal);
  CHECK(d.terms == 6);
  CHECK(zz->eq(d.direct, det_leibniz(m)));
  CHECK(minor_decomposition_check(m, 1, 4).terms == 24);
}

TEST_CASE("nilpotent thickening bound") {
  RingPtr dual = parse_ring("Dual(GF/2)");
  auto c = nilpotent_rank_bound_check(parse_series(dual, "1-T+e*T^2; prec=12", 12), 3);
  CHECK(c.premise);
  CHECK(c.conclusion);
  CHECK_THROWS_AS(nilpotent_rank_bound_check(parse_series(dual, "1-T; prec=6", 6), 3), PrecisionError);
}

TEST_CASE("Verschiebung sections") {
  RingPtr zz = integers();
  auto s = verschiebung_section(parse_series(zz, "(1-T^3)/(1-2*T^3); prec=12", 12), 3, 3);
  REQUIRE(s.f);
  CHECK(*s.f == parse_series(zz, "(1-T)/(1-2*T); prec=4", 4));
  CHECK(s.consistent());
  CHECK(!verschiebung_section(parse_series(zz, "1-T; prec=6", 6), 2, 2).f);
}
