#include <doctest.h>

#include "ratwitt/monoid.hpp"

using namespace ratwitt;

TEST_CASE("formal sum text") {
  RingPtr zz = integers();
  FormalSum u = parse_formal_sum(zz, "2*(3) - (5) + (0) + (3)");
  CHECK(format_formal_sum(u) == "3*(3) - (5)");
  CHECK(parse_formal_sum(zz, format_formal_sum(u)) == u);
  CHECK(format_formal_sum(parse_formal_sum(zz, "(2) - (2)")) == "0");
  CHECK_THROWS_AS(parse_formal_sum(zz, "2*(3"), ParseError);
  RingPtr gf4 = parse_ring("GF/4");
  CHECK(format_formal_sum(parse_formal_sum(gf4, "(x+1) - (1) + (x)")) == "-(1) + (x) + (x+1)");
}

TEST_CASE("omega is a ring map on examples") {
  RingPtr zz = integers();
  FormalSum u = parse_formal_sum(zz, "(2) + (3)"), v = parse_formal_sum(zz, "(5) - (1)");
  CHECK(omega(u) == parse_ratwitt(zz, "(1-2*T)*(1-3*T)"));
  CHECK(omega(u * v) == rw_mul(omega(u), omega(v)));
  CHECK(omega(u - v) == rw_sub(omega(u), omega(v)));
  CHECK(omega(FormalSum::term(zz, zz->one())) == RatWitt::one(zz));
}

TEST_CASE("kernel witnesses") {
  RingPtr dual = parse_ring("Dual(GF/2)");
  FormalSum u = parse_formal_sum(dual, "2*(e)");
  CHECK(!u.is_zero());
  CHECK(omega(u).is_witt_zero());
  RingPtr z6 = parse_ring("Zmod/6");
  CHECK(omega(parse_formal_sum(z6, "(5) - (2) - (3)")).is_witt_zero());
  for (const auto& w : kernel_witnesses(z6)) {
    CHECK(!w.is_zero());
    CHECK(omega(w).is_witt_zero());
  }
  CHECK(!kernel_witnesses(z6).empty());
  CHECK(kernel_witnesses(integers()).empty());
  CHECK(kernel_witnesses(parse_ring("GF/4")).empty());
}

TEST_CASE("field embeddings and split preimages") {
  RingPtr gf2 = parse_ring("GF/2"), gf4 = parse_ring("GF/4"), gf16 = parse_ring("GF/16");
  FieldEmbedding e = embed_finite_field(gf4, gf16);
  for (const auto& a : gf4->elements())
    for (const auto& b : gf4->elements()) {
      CHECK(gf16->eq(e(gf4->mul(a, b)), gf16->mul(e(a), e(b))));
      CHECK(gf16->eq(e(gf4->add(a, b)), gf16->add(e(a), e(b))));
    }
  SplitPreimage sp = split_preimage(parse_ratwitt(gf2, "(1+T+T^2)/(1+T)"));
  CHECK(sp.k == 2);
  CHECK(format_formal_sum(sp.u) == "-(1) + (x) + (x+1)");
  CHECK(omega(sp.u) == base_change(parse_ratwitt(gf2, "(1+T+T^2)/(1+T)"), sp.embedding));
  CHECK(!roots_preimage(parse_ratwitt(gf2, "1+T+T^2"), embed_finite_field(gf2, gf2)));
  CHECK(split_preimage(parse_ratwitt(gf2, "1+T+T^3")).k == 3);
}
