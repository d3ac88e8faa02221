#include <doctest.h>

#include <random>

#include "ratwitt/ring.hpp"

using namespace ratwitt;

namespace {

std::vector<Elem> samples(const RingPtr& r, int n, int size = 4) {
  std::mt19937_64 rng(7);
  std::vector<Elem> out;
  for (int i = 0; i < n; ++i) out.push_back(r->random(rng, size));
  return out;
}

}  // namespace

TEST_CASE("ring axioms hold on random samples") {
  for (const char* d : {"ZZ", "QQ", "Zmod/6", "Zmod/7", "GF/2", "GF/4", "GF/8", "GF/9", "GF/25", "Dual(GF/2)",
                        "Dual(ZZ)", "ZZ[x]", "GF/3[x]", "MonSub(GF/2)", "Frac(GF/2[x][y])"}) {
    CAPTURE(d);
    RingPtr r = parse_ring(d);
    auto rep = ring_axiom_suite(*r, samples(r, 8));
    CHECK_MESSAGE(rep.pass, rep.counterexample);
  }
}

TEST_CASE("in-place accumulation agrees with add, sub and mul_int") {
  for (const char* d : {"ZZ", "QQ", "Zmod/6", "Zmod/7", "GF/2", "GF/4", "GF/9", "GF/25", "Dual(GF/2)", "Dual(ZZ)", "ZZ[x]"}) {
    CAPTURE(d);
    RingPtr r = parse_ring(d);
    auto xs = samples(r, 6);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        Elem s = a, t = a;
        r->add_assign(s, b);
        r->sub_assign(t, b);
        CHECK(r->eq(s, r->add(a, b)));
        CHECK(r->eq(t, r->sub(a, b)));
        for (long n : {-7L, -1L, 0L, 2L, 5L, 1000003L}) {
          Elem u = a;
          r->addmul_int(u, b, mpz_class(n));
          CHECK(r->eq(u, r->add(a, r->mul_int(b, mpz_class(n)))));
        }
      }
  }
}

TEST_CASE("descriptors round-trip") {
  for (const char* d : {"ZZ", "QQ", "Zmod/6", "GF/2", "Dual(GF/2)", "MonSub(GF/2)", "ZZ[x]"}) {
    RingPtr r = parse_ring(d);
    CHECK(parse_ring(r->descriptor())->descriptor() == r->descriptor());
  }
  CHECK(parse_ring("GF/4")->descriptor() == "GF/4=x^2+x+1");
  CHECK(parse_ring("GF/9")->descriptor() == "GF/9=x^2+2*x+2");
  CHECK_THROWS_AS(parse_ring("GF/6"), ParseError);
  CHECK_THROWS_AS(parse_ring("Frob(ZZ)"), ParseError);
}

TEST_CASE("GF(4) multiplication table") {
  RingPtr f = parse_ring("GF/4");
  Elem x = f->parse("x"), x1 = f->parse("x+1");
  CHECK(f->eq(f->mul(x, x), x1));
  CHECK(f->eq(f->mul(x, x1), f->one()));
  CHECK(f->eq(f->mul(x1, x1), x));
  CHECK(f->eq(f->add(x, x), f->zero()));
  // Multiplicative group is cyclic of order 3.
  CHECK(f->is_one(f->pow(x, 3ul)));
}

TEST_CASE("every non-zero element of a finite field is a unit") {
  for (const char* d : {"GF/2", "GF/4", "GF/5", "GF/8", "GF/9", "GF/27"}) {
    RingPtr f = parse_ring(d);
    std::size_t count = 0;
    for (const auto& a : f->elements()) {
      if (f->is_zero(a)) continue;
      auto inv = f->inverse(a);
      REQUIRE(inv);
      CHECK(f->is_one(f->mul(a, *inv)));
      ++count;
    }
    CHECK(mpz_class(count + 1) == *f->cardinality());
  }
}

TEST_CASE("zero divisors and nilpotents") {
  RingPtr z6 = parse_ring("Zmod/6");
  CHECK(!z6->is_domain());
  for (const auto& [a, b] : z6->zero_divisor_pairs()) CHECK(z6->is_zero(z6->mul(a, b)));
  CHECK(!z6->inverse(z6->from_int(2)));
  RingPtr d = parse_ring("Dual(GF/2)");
  Elem e = d->parse("e");
  CHECK(d->is_zero(d->mul(e, e)));
  CHECK(!d->nilpotents().empty());
  CHECK(d->is_one(d->mul(d->parse("1+e"), d->parse("1+e"))));
}

TEST_CASE("fraction fields and pull-back") {
  RingPtr zz = integers();
  CHECK(zz->fraction_field()->descriptor() == "QQ");
  RingPtr qq = rationals();
  CHECK(zz->from_fraction(qq->parse("4/2")));
  CHECK(!zz->from_fraction(qq->parse("1/2")));
  RingPtr a = parse_ring("MonSub(GF/2)");
  RingPtr k = a->fraction_field();
  CHECK(a->from_fraction(k->parse("x*y")));
  CHECK(!a->from_fraction(k->parse("y")));
  CHECK(a->from_fraction(k->parse("1+x*y^3")));
}

TEST_CASE("literals") {
  RingPtr qq = rationals();
  CHECK(qq->format(qq->parse("-6/4")) == "-3/2");
  RingPtr z6 = parse_ring("Zmod/6");
  CHECK(z6->format(z6->parse("-1")) == "5");
  CHECK_THROWS_AS(qq->parse("1/0"), Error);
  CHECK_THROWS_AS(qq->parse("2+"), ParseError);
}
