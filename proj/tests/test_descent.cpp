#include <doctest.h>

#include "ratwitt/descent.hpp"

using namespace ratwitt;

TEST_CASE("tensor split structure") {
  for (auto [p, m, n] : {std::tuple<unsigned long, unsigned, unsigned>{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
    TensorSplit s(p, m, n);
    CHECK(s.verify());
    CHECK(s.degree() == n);
    for (const auto& a : s.extension()->elements()) {
      CHECK(s.extension()->eq(s.sigma(a, n), a));
      CHECK(s.in_base(a) == s.extension()->eq(s.sigma(a, 1), a));
    }
  }
}

TEST_CASE("equalizer") {
  TensorSplit s(2, 1, 2);
  RingPtr l = s.extension();
  auto inside = equalizer_check(parse_ratwitt(l, "1+T+T^2"), s);
  CHECK(inside.equal);
  CHECK(inside.consistent());
  auto outside = equalizer_check(parse_ratwitt(l, "1+x*T"), s);
  CHECK(!outside.equal);
  CHECK(outside.consistent());
  // (1 + xT)(1 + (x+1)T) = 1 + T + T^2 descends although its factors do not.
  CHECK(equalizer_check(parse_ratwitt(l, "(1+x*T)*(1+(x+1)*T)"), s).equal);
}

TEST_CASE("Galois invariants") {
  TensorSplit s(3, 1, 2);
  auto rep = galois_invariants_check(parse_ratwitt(s.base(), "(1+T^2)/(1-T)"), s);
  CHECK(rep.splits);
  CHECK(rep.pass());
  CHECK(fixed_sums_descend(s, 1).pass);
  std::size_t total = 0;
  for (const auto& o : frobenius_orbits(s)) total += o.size();
  CHECK(total == 8);
}
