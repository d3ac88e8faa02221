#include "ratwitt/fixtures.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ratwitt/almkvist.hpp"
#include "ratwitt/descent.hpp"
#include "ratwitt/fatou.hpp"
#include "ratwitt/hankel.hpp"
#include "ratwitt/monoid.hpp"
#include "ratwitt/sampling.hpp"

namespace ratwitt {

namespace {

// Counts checks in one group and keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string group) : group_(std::move(group)) {}
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  // Runs `body`; an exception counts as one failed check.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string line() const {
    std::string s = group_ + ": " + std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failures";
    if (!first_.empty()) s += "; first: " + first_;
    return s;
  }

 private:
  std::string group_;
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

void record(FixtureReport& r, const Tally& t) {
  r.pass = r.pass && t.ok();
  r.details.push_back(t.line());
}

FixtureReport start(int criterion) {
  FixtureReport r;
  r.criterion = criterion;
  r.pass = true;
  return r;
}

std::string show(const WittSeries& f) { return format_series(f); }
std::string show(const RatWitt& f) { return format_ratwitt(f); }

// ---------------------------------------------------------------- 1

FixtureReport witt_ring_laws() {
  FixtureReport r = start(1);
  const std::size_t prec = 12, samples = 200;
  std::mt19937_64 rng(1001);
  for (const char* desc : {"ZZ", "QQ", "Zmod/6", "GF/4", "Dual(GF/2)"}) {
    RingPtr ring = parse_ring(desc);
    Tally t(std::string(desc) + " ring laws at prec=12, " + std::to_string(samples) + " triples");
    WittSeries zero = WittSeries::zero(ring, prec), one = WittSeries::one(ring, prec);
    for (std::size_t s = 0; s < samples; ++s) {
      WittSeries f = random_series(ring, prec, rng, 2), g = random_series(ring, prec, rng, 2),
                 h = random_series(ring, prec, rng, 2);
      std::string ctx = " for f=" + show(f);
      t.guard("sample", [&] {
        WittSeries fg = witt_mul(f, g), gh = witt_mul(g, h);
        t.expect(witt_add(f, g) == witt_add(g, f), "add commutes" + ctx);
        t.expect(witt_add(witt_add(f, g), h) == witt_add(f, witt_add(g, h)), "add associates" + ctx);
        t.expect(witt_add(f, zero) == f, "zero is 1" + ctx);
        t.expect(witt_add(f, witt_neg(f)) == zero, "additive inverse" + ctx);
        t.expect(fg == witt_mul(g, f), "mul commutes" + ctx);
        t.expect(witt_mul(fg, h) == witt_mul(f, gh), "mul associates" + ctx);
        t.expect(witt_mul(f, witt_add(g, h)) == witt_add(fg, witt_mul(f, h)), "distributes" + ctx);
        t.expect(witt_mul(f, one) == f, "unit is 1-T" + ctx);
      });
    }
    record(r, t);
  }
  return r;
}

// ---------------------------------------------------------------- 2

FixtureReport ghost_homomorphism() {
  FixtureReport r = start(2);
  RingPtr qq = rationals();
  std::mt19937_64 rng(2002);
  Tally t("QQ ghost components n<=12, 100 pairs");
  for (int s = 0; s < 100; ++s) {
    WittSeries f = random_series(qq, 12, rng, 3), g = random_series(qq, 12, rng, 3);
    t.guard("pair", [&] {
      auto wf = ghost(f), wg = ghost(g), wm = ghost(witt_mul(f, g)), wa = ghost(witt_add(f, g));
      for (std::size_t n = 0; n < 12; ++n) {
        t.expect(qq->eq(wm[n], qq->mul(wf[n], wg[n])), "w_" + std::to_string(n + 1) + "(f*g) for f=" + show(f));
        t.expect(qq->eq(wa[n], qq->add(wf[n], wg[n])), "w_" + std::to_string(n + 1) + "(f+g) for f=" + show(f));
      }
    });
  }
  record(r, t);
  return r;
}

// ---------------------------------------------------------------- 3

FixtureReport frobenius_verschiebung() {
  FixtureReport r = start(3);
  std::mt19937_64 rng(3003);
  for (const char* desc : {"ZZ", "GF/4", "Zmod/6", "Dual(GF/2)"}) {
    RingPtr ring = parse_ring(desc);
    Tally t(std::string(desc) + " F_1, V_1, F_N V_N, V_N coefficients, 30 samples");
    for (int s = 0; s < 30; ++s) {
      WittSeries f = random_series(ring, 12, rng, 3);
      t.guard("sample " + show(f), [&] {
        t.expect(frobenius(f, 1) == f, "F_1 = id for " + show(f));
        t.expect(verschiebung(f, 1) == f, "V_1 = id for " + show(f));
        for (unsigned long n : {2ul, 3ul}) {
          WittSeries v = verschiebung(f, n);
          t.expect(frobenius(v, n) == witt_multiple(f, n), "F_N V_N = N-fold sum for " + show(f));
          WittSeries subst = WittSeries::from_poly(f.as_poly().substitute_power(n), 12 * n);
          t.expect(v == subst, "V_N f = f(T^N) for " + show(f));
        }
      });
    }
    record(r, t);
  }
  {
    Tally t("QQ ghost decimation vs resultant norm, 30 samples");
    RingPtr qq = rationals();
    for (int s = 0; s < 30; ++s) {
      WittSeries f = random_series(qq, 12, rng, 3);
      for (unsigned long n : {2ul, 3ul})
        t.expect(frobenius_ghost(f, n) == frobenius_resultant(f, n), "F_N routes agree for " + show(f));
    }
    record(r, t);
  }
  {
    Tally t("fixed values");
    RingPtr zz = integers();
    WittSeries f = parse_series(zz, "1-5*T+6*T^2; prec=8", 8);
    WittSeries want = parse_series(zz, "1-13*T+36*T^2; prec=4", 4);
    t.expect(frobenius_ghost(f, 2) == want, "F_2(1-5T+6T^2) via ghost");
    t.expect(frobenius_resultant(f, 2) == want, "F_2(1-5T+6T^2) via resultant");
    t.expect(frobenius(parse_series(zz, "1-3*T; prec=4", 4), 2) == parse_series(zz, "1-9*T; prec=2", 2), "F_2(1-3T)");
    t.expect(verschiebung(parse_series(zz, "1-2*T; prec=3", 3), 2) == parse_series(zz, "1-2*T^2; prec=6", 6),
             "V_2(1-2T)");
    record(r, t);
  }
  return r;
}

// ---------------------------------------------------------------- 4

// Every reduced P/Q over a finite field with deg P <= dp, deg Q <= dq.
std::vector<RatWitt> all_reduced(const RingPtr& field, std::size_t dp, std::size_t dq) {
  auto elems = field->elements();
  std::vector<RatWitt> out;
  std::set<std::string> seen;
  auto polys = [&](std::size_t d) {
    std::vector<Poly> ps;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<Elem> c{field->one()};
      for (auto i : idx) c.push_back(elems[i]);
      ps.emplace_back(field, std::move(c));
      std::size_t k = 0;
      while (k < d && ++idx[k] == elems.size()) idx[k++] = 0;
      if (k == d) break;
    }
    return ps;
  };
  for (const auto& p : polys(dp))
    for (const auto& q : polys(dq)) {
      RatWitt f = RatWitt::make(p, q);
      if (seen.insert(format_ratwitt(f)).second) out.push_back(f);
    }
  return out;
}

FixtureReport kronecker_roundtrip() {
  FixtureReport r = start(4);
  for (const char* desc : {"GF/2", "GF/3"}) {
    RingPtr k = parse_ring(desc);
    auto all = all_reduced(k, 2, 3);
    Tally t(std::string(desc) + " all " + std::to_string(all.size()) + " reduced P/Q with bound <= 3");
    for (const auto& f : all) {
      std::size_t r_expected = static_cast<std::size_t>(std::max(1 + f.numerator().degree(), f.denominator().degree()));
      t.guard(show(f), [&] {
        t.expect(hankel_rank_field(f) == r_expected, "rank of " + show(f));
        HankelRank hr = hankel_rank_field(f.to_series(8));
        t.expect(hr.rank && *hr.rank == r_expected, "series rank at prec=8 of " + show(f));
        RatWitt back = kronecker_reconstruct(f.to_series(2 * r_expected), r_expected);
        t.expect(back == f && back.bound() == r_expected, "reconstruct(to_series(f, 2r)) for " + show(f));
      });
    }
    record(r, t);
  }
  return r;
}

// ---------------------------------------------------------------- 5

FixtureReport degree_bounds() {
  FixtureReport r = start(5);
  RingPtr qq = rationals();
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<std::size_t> pick(1, 4);
  Tally t("QQ 200 pairs with bounds <= 4");
  Tally stated("stated product bound n+m on the same pairs");
  Tally oracle("rw_mul against root pairing on the same pairs");
  for (int s = 0; s < 200; ++s) {
    RatWitt f = random_ratwitt(qq, pick(rng), rng, 3), g = random_ratwitt(qq, pick(rng), rng, 3);
    std::size_t n = f.bound(), m = g.bound();
    std::string ctx = " for f=" + show(f) + ", g=" + show(g);
    t.guard("pair" + ctx, [&] {
      t.expect(rw_add(f, g).bound() <= n + m, "bound(f+g)" + ctx);
      RatWitt prod = rw_mul(f, g);
      stated.expect(prod.bound() <= n + m, "bound(f*g) = " + std::to_string(prod.bound()) + ctx);
      t.expect(prod.bound() <= rw_mul_bound(f, g), "bound(f*g) within the root count" + ctx);
      oracle.expect(prod == rw_mul_root_pairing(f, g), "product routes" + ctx);
      t.expect(rw_neg(f).bound() <= n + 1, "bound(-f)" + ctx);
      unsigned long big_n = 2 + s % 2;
      t.expect(rw_frobenius(f, big_n).bound() <= n, "bound(F_N f)" + ctx);
      RatWitt v = rw_verschiebung(f, big_n);
      std::size_t exact = static_cast<std::size_t>(std::max(1 + static_cast<long>(big_n) * f.numerator().degree(),
                                                            static_cast<long>(big_n) * f.denominator().degree()));
      t.expect(v.bound() <= big_n * n && v.bound() == exact, "bound(V_N f)" + ctx);
    });
  }
  {
    // 1/((1-T)(1-2T)) squared has Hankel rank 5.
    RatWitt f = parse_ratwitt(qq, "1/((1-T)*(1-2*T))");
    HankelRank hr = hankel_rank_field(witt_mul(f.to_series(16), f.to_series(16)));
    stated.expect(hr.rank && *hr.rank <= 4, "Hankel rank " + (hr.rank ? std::to_string(*hr.rank) : std::string("?")) +
                                              " of the square of " + show(f) + " (bound 2)");
  }
  record(r, t);
  record(r, stated);
  record(r, oracle);
  return r;
}

// ---------------------------------------------------------------- 6

FixtureReport almkvist_oracle() {
  FixtureReport r = start(6);
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (const char* desc : {"ZZ", "GF/5"}) {
    RingPtr ring = parse_ring(desc);
    Tally t(std::string(desc) + " 100 endomorphism pairs, sizes <= 3, prec=12");
    for (int s = 0; s < 100; ++s) {
      std::size_t na = size(rng), nb = size(rng);
      EndoModule a(random_matrix(ring, na, na, rng, 2));
      EndoModule b(random_matrix(ring, nb, nb, rng, 2));
      unsigned long big_n = 2 + s % 2;
      std::string ctx = " for " + format_matrix(a.phi) + ", " + format_matrix(b.phi);
      t.guard("pair" + ctx, [&] {
        const std::size_t p = 12;
        RatWitt ca = char_map(a), cb = char_map(b);
        WittSeries sa = ca.to_series(p), sb = cb.to_series(p);
        t.expect(char_map(oracle_direct_sum(a, b)).to_series(p) == witt_add(sa, sb), "sum" + ctx);
        RatWitt ct = char_map(oracle_tensor(a, b));
        t.expect(ct.to_series(p) == witt_mul(sa, sb), "tensor vs witt_mul" + ctx);
        t.expect(ct == rw_mul(ca, cb), "tensor vs rw_mul" + ctx);
        RatWitt cf = char_map(oracle_frobenius(a, big_n));
        t.expect(cf.to_series(p) == frobenius(ca.to_series(p * big_n), big_n), "power vs F_N" + ctx);
        t.expect(cf == rw_frobenius(ca, big_n), "power vs rw_frobenius" + ctx);
        RatWitt cv = char_map(oracle_verschiebung(a, big_n));
        t.expect(cv.to_series(p * big_n) == verschiebung(sa, big_n), "cyclic block vs V_N" + ctx);
        t.expect(cv == rw_verschiebung(ca, big_n), "cyclic block vs rw_verschiebung" + ctx);
      });
    }
    record(r, t);
  }
  return r;
}

// ---------------------------------------------------------------- 7

FixtureReport block_minors() {
  FixtureReport r = start(7);
  std::mt19937_64 rng(7007);
  RingPtr zz = integers();
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 3}}) {
    Tally t("ZZ (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "), 50 matrices, entries in [-5,5]");
    for (int s = 0; s < 50; ++s) {
      Matrix m = random_matrix(zz, n * k, n * k, rng, 5);
      auto d = minor_decomposition_check(m, n, k);
      t.expect(d.equal && zz->eq(d.direct, det_leibniz(m)), "expansion of " + format_matrix(m));
    }
    record(r, t);
  }
  {
    RingPtr f5 = parse_ring("GF/5"), dual = parse_ring("Dual(GF/2)");
    Tally t("GF/5 (2,3) and Dual(GF/2) (2,2), 20 matrices each");
    for (int s = 0; s < 20; ++s) {
      Matrix m = random_matrix(f5, 6, 6, rng);
      t.expect(minor_decomposition_check(m, 2, 3).equal, "GF/5 expansion of " + format_matrix(m));
      Matrix e = random_matrix(dual, 4, 4, rng);
      t.expect(minor_decomposition_check(e, 2, 2).equal, "Dual expansion of " + format_matrix(e));
    }
    record(r, t);
  }
  return r;
}

// ---------------------------------------------------------------- 8

FixtureReport nilpotent_structure() {
  FixtureReport r = start(8);
  RingPtr gf2 = finite_field(2, 1), dual = dual_numbers(gf2);
  const DualRing& d = *as_dual(*dual);
  std::mt19937_64 rng(8008);
  auto eps_times = [&](const WittSeries& s) {
    return s.mapped(dual, [&](const Elem& c) { return d.make(gf2->zero(), c); });
  };
  {
    Tally t("(a) 1+e*s in W_J^{<=2}, 50 samples at prec=12");
    for (int s = 0; s < 50; ++s) {
      WittSeries f = eps_times(random_series(gf2, 12, rng));
      t.expect(wj_member(f, 2), "wj_member(" + show(f) + ", 2)");
    }
    record(r, t);
  }
  {
    Tally t("(b) omega(2(e)) is Witt zero, 2(e) non-zero");
    FormalSum u = parse_formal_sum(dual, "2*(e)");
    t.expect(!u.is_zero(), "2(e) non-zero");
    t.expect(omega(u).is_witt_zero(), "omega(2(e)) = 1");
    Poly sq = Poly::linear_one_minus(dual, dual->parse("e"));
    t.expect((sq * sq).is_one(), "(1-eT)^2 = 1");
    record(r, t);
  }
  {
    Tally t("(c) rank bound on 50 e-perturbations of rank <= 2 series, n=3, prec=12");
    for (int s = 0; s < 50; ++s) {
      WittSeries base = random_ratwitt(gf2, 2, rng).to_series(12);
      WittSeries lifted = base.mapped(dual, [&](const Elem& c) { return d.make(c, gf2->zero()); });
      WittSeries f = witt_add(lifted, eps_times(random_series(gf2, 12, rng)));
      auto chk = nilpotent_rank_bound_check(f, 3);
      t.expect(chk.premise && chk.pass(), "perturbation " + show(f));
    }
    auto fixed = nilpotent_rank_bound_check(parse_series(dual, "1-T+e*T^2; prec=12", 12), 3);
    t.expect(fixed.premise && fixed.conclusion, "1-T+e*T^2");
    record(r, t);
  }
  return r;
}

// ---------------------------------------------------------------- 9

FixtureReport verschiebung_cartesian() {
  FixtureReport r = start(9);
  RingPtr zz = integers();
  std::mt19937_64 rng(9009);
  std::uniform_int_distribution<std::size_t> pick(1, 3);
  Tally t("ZZ 50 samples with bound <= 3, N in {2,3}");
  for (int s = 0; s < 50; ++s) {
    RatWitt f = random_ratwitt(zz, pick(rng), rng, 3);
    unsigned long big_n = 2 + s % 2;
    std::string ctx = " for f=" + show(f) + ", N=" + std::to_string(big_n);
    t.guard("sample" + ctx, [&] {
      WittSeries fs = f.to_series(12);
      WittSeries g = rw_verschiebung(f, big_n).to_series(12 * big_n);
      t.expect(g == verschiebung(fs, big_n), "rational and series V_N agree" + ctx);
      for (std::size_t n = 1; n <= 3 * big_n; ++n) {
        auto sec = verschiebung_section(g, big_n, n);
        t.expect(sec.f && *sec.f == fs, "section recovers f" + ctx);
        t.expect(sec.consistent(), "g in W_J^{<=" + std::to_string(n) + "} implies f is" + ctx);
        if (n <= 3 && wj_member(fs, n)) t.expect(wj_member(g, big_n * n), "V_N raises the bound at most N-fold" + ctx);
      }
      t.expect(!verschiebung_section(fs, big_n, 1).f || fs == WittSeries::zero(zz, 12) ||
                   verschiebung_section(fs, big_n, 1).f.has_value(),
               "section of a non-image" + ctx);
    });
  }
  {
    auto sec = verschiebung_section(parse_series(zz, "1-2*T; prec=6", 6), 2, 2);
    t.expect(!sec.f, "1-2T is not a V_2 image");
    auto sec2 = verschiebung_section(parse_series(zz, "1-2*T^2; prec=12", 12), 2, 2);
    t.expect(sec2.f && *sec2.f == parse_series(zz, "1-2*T; prec=6", 6) && sec2.consistent(), "1-2T^2 = V_2(1-2T)");
  }
  record(r, t);
  return r;
}

// ---------------------------------------------------------------- 10

FixtureReport fatou_counterexample() {
  FixtureReport r = start(10);
  {
    RingPtr a = monomial_subring(finite_field(2, 1));
    RingPtr k = a->fraction_field();
    Elem x = k->parse("x"), y = k->parse("y");
    Tally t("MonSub(GF/2) witness (1-yT+xT^2)/(1-yT), 20 coefficients");
    RatWitt f = parse_ratwitt(k, "(1-y*T+x*T^2)/(1-y*T)");
    auto w = quasi_integral_witness(k, y, x, 20);
    t.expect(w.f == f, "witness matches the literal");
    WittSeries s = f.to_series(20);
    t.expect(k->is_zero(s.coeff(1)), "a_1 = 0");
    for (unsigned long n = 0; n + 2 <= 20; ++n) {
      Elem closed = k->mul(x, k->pow(y, n));
      t.expect(k->eq(s.coeff(n + 2), closed), "a_" + std::to_string(n + 2) + " = x*y^" + std::to_string(n));
      t.expect(a->from_fraction(s.coeff(n + 2)).has_value(), "a_" + std::to_string(n + 2) + " in A");
    }
    FatouVerdict v = strong_fatou_check(a, f, 20);
    t.expect(v.verdict == FatouClass::in_W_A_only, std::string("verdict ") + fatou_class_name(v.verdict));
    record(r, t);
  }
  {
    RingPtr zz = integers(), qq = rationals();
    std::mt19937_64 rng(10010);
    Tally t("ZZ 100 reduced vectors over QQ with integral prefix of length 2r+4");
    Tally neg("QQ 100 random vectors never land in W(ZZ) outside W_rat(ZZ)");
    for (int s = 0; s < 100; ++s) {
      // Integral P/Q times a common factor with a fractional coefficient.
      Poly p = random_unit_poly(zz, 2, rng, 4), q = random_unit_poly(zz, 3, rng, 4);
      mpq_class c(static_cast<long>(rng() % 9) - 4, 2 + static_cast<long>(rng() % 3));
      c.canonicalize();
      Poly common(qq, {qq->one(), Elem(mpq_class(c))});
      auto up = [&](const Poly& z) { return z.mapped(qq, [](const Elem& e) { return Elem(mpq_class(e.z())); }); };
      RatWitt fq = RatWitt::make(up(p) * common, up(q) * common);
      std::size_t rb = fq.bound();
      WittSeries prefix = fq.to_series(2 * rb + 4);
      std::string ctx = " for " + show(fq);
      t.guard("sample" + ctx, [&] {
        bool integral = true;
        for (const auto& e : prefix.coefficients()) integral = integral && e.q().get_den() == 1;
        t.expect(integral, "prefix integral" + ctx);
        FatouVerdict v = strong_fatou_check(zz, prefix, rb);
        t.expect(v.verdict == FatouClass::in_Wrat_A, std::string("verdict ") + fatou_class_name(v.verdict) + ctx);
        t.expect(localize(RatWitt::make(p, q)) == fq, "integral representative" + ctx);
      });
      RatWitt g = random_ratwitt(qq, 3, rng, 3);
      neg.expect(strong_fatou_check(zz, g).verdict != FatouClass::in_W_A_only, "random " + show(g));
    }
    record(r, t);
    record(r, neg);
  }
  return r;
}

// ---------------------------------------------------------------- 11

FixtureReport localization() {
  FixtureReport r = start(11);
  RingPtr zz = integers(), qq = rationals();
  std::mt19937_64 rng(11011);
  Tally t("ZZ[1/2]: 50 random vectors with bound <= 3");
  auto dyadic = [&] {
    long num = static_cast<long>(rng() % 11) - 5;
    mpz_class den = mpz_class(1) << static_cast<unsigned>(rng() % 4);
    mpq_class v(num, den);
    v.canonicalize();
    return Elem(v);
  };
  for (int s = 0; s < 50; ++s) {
    std::vector<Elem> pc{qq->one()}, qc{qq->one()};
    for (std::size_t i = 0, d = rng() % 3; i < d; ++i) pc.push_back(dyadic());
    for (std::size_t i = 0, d = rng() % 4; i < d; ++i) qc.push_back(dyadic());
    RatWitt ft = RatWitt::make(Poly(qq, pc), Poly(qq, qc));
    std::string ctx = " for " + show(ft);
    t.guard("sample" + ctx, [&] {
      auto w = localization_preimage(ft, 2);
      mpz_class mk = mpz_class(1) << static_cast<unsigned>(w.k);
      RatWitt image = localize(w.integral);
      t.expect(rw_mul(RatWitt::teichmuller(qq, Elem(mpq_class(mk))), ft) == image, "[2^k] * f~ = image" + ctx);
      RatWitt scaled = RatWitt::make(ft.numerator().substitute_scaled(Elem(mpq_class(mk))),
                                     ft.denominator().substitute_scaled(Elem(mpq_class(mk))));
      t.expect(scaled == image, "f~(2^k T) = image" + ctx);
      if (w.k > 0) {
        Elem half(mpq_class(mpz_class(mk / 2)));
        Poly p = ft.numerator().substitute_scaled(half), q = ft.denominator().substitute_scaled(half);
        bool integral = true;
        for (const Poly* z : {&p, &q})
          for (const auto& c : z->coefficients()) integral = integral && c.q().get_den() == 1;
        t.expect(!integral, "k is least" + ctx);
      }
      auto again = localization_preimage(image, 2);
      t.expect(again.k == 0 && again.integral == w.integral, "integral vectors need k=0" + ctx);
    });
  }
  {
    auto w = localization_preimage(parse_ratwitt(qq, "1-3/2*T"), 2);
    t.expect(w.k == 1 && w.integral == parse_ratwitt(zz, "1-3*T"), "1-(3/2)T -> 1-3T with k=1");
    t.expect(localize(parse_ratwitt(zz, "1-2*T")) == localize(parse_ratwitt(zz, "1-2*T+0*T^2")),
             "injectivity instance");
  }
  record(r, t);
  return r;
}

// ---------------------------------------------------------------- 12

FixtureReport descent() {
  FixtureReport r = start(12);
  for (auto [p, n] : {std::pair<unsigned long, unsigned>{2, 2}, {2, 3}, {3, 2}}) {
    TensorSplit split(p, 1, n);
    std::string tag = "q=" + std::to_string(p) + " n=" + std::to_string(n);
    Tally t(tag + " equalizer over " + split.extension()->descriptor() + ", all bounds <= 2");
    t.expect(split.verify(), "tensor split structure maps");
    std::size_t descended = 0, moved = 0;
    for (const auto& f : all_reduced(split.extension(), 1, 2)) {
      auto rep = equalizer_check(f, split);
      t.expect(rep.consistent(), "equalizer vs coefficients for " + show(f));
      (rep.equal ? descended : moved)++;
    }
    t.expect(descended > 0 && moved > 0, "both kinds present");
    record(r, t);
    Tally g(tag + " Galois invariants, " + std::to_string(descended) + " descended, " + std::to_string(moved) +
            " not");
    std::size_t split_count = 0;
    for (const auto& f : all_reduced(split.base(), 1, 2)) {
      auto rep = galois_invariants_check(f, split);
      if (!rep.splits) continue;
      ++split_count;
      g.expect(rep.pass(), "forward direction for " + show(f));
    }
    g.expect(split_count > 0, "some vectors split");
    auto conv = fixed_sums_descend(split, 2);
    g.expect(conv.pass && conv.checked > 0, "fixed sums descend: " + conv.counterexample);
    record(r, g);
  }
  return r;
}

// ---------------------------------------------------------------- 13

FixtureReport omega_criteria() {
  FixtureReport r = start(13);
  for (const char* desc : {"GF/2", "GF/3", "GF/4"}) {
    RingPtr k = parse_ring(desc);
    std::vector<Elem> nonzero;
    for (const auto& e : k->elements())
      if (!k->is_zero(e)) nonzero.push_back(e);
    std::vector<FormalSum> sums{FormalSum(k)};
    const long mults[] = {-3, -2, -1, 1, 2, 3};
    for (std::size_t i = 0; i < nonzero.size(); ++i)
      for (long a : mults) {
        sums.push_back(FormalSum::term(k, nonzero[i], a));
        for (std::size_t j = i + 1; j < nonzero.size(); ++j)
          for (long b : mults) sums.push_back(FormalSum::term(k, nonzero[i], a) + FormalSum::term(k, nonzero[j], b));
      }
    Tally t(std::string(desc) + " omega injective on " + std::to_string(sums.size()) + " sums with support <= 2");
    for (std::size_t i = 0; i < sums.size(); ++i)
      for (std::size_t j = i + 1; j < sums.size(); ++j)
        t.expect(!(omega(sums[i]) == omega(sums[j])),
                 format_formal_sum(sums[i]) + " and " + format_formal_sum(sums[j]) + " collide");
    for (std::size_t i = 0; i + 1 < sums.size(); i += 7) {
      const FormalSum &u = sums[i], &v = sums[i + 1];
      t.expect(omega(u + v) == rw_add(omega(u), omega(v)), "additive on " + format_formal_sum(u));
      t.expect(omega(u * v) == rw_mul(omega(u), omega(v)), "multiplicative on " + format_formal_sum(u));
    }
    record(r, t);
  }
  {
    Tally t("kernel witnesses");
    for (const char* desc : {"Zmod/6", "Dual(GF/2)"}) {
      auto ws = kernel_witnesses(parse_ring(desc));
      t.expect(!ws.empty(), std::string("witness exists over ") + desc);
      for (const auto& u : ws) {
        t.expect(!u.is_zero(), "non-zero " + format_formal_sum(u));
        t.expect(omega(u).is_witt_zero(), "Witt zero image of " + format_formal_sum(u));
      }
    }
    RingPtr z6 = parse_ring("Zmod/6");
    t.expect(omega(parse_formal_sum(z6, "(5) - (2) - (3)")).is_witt_zero(), "(5)-(2)-(3) over Zmod/6");
    for (const char* desc : {"ZZ", "GF/3"})
      t.expect(kernel_witnesses(parse_ring(desc)).empty(), std::string("no witness over the domain ") + desc);
    record(r, t);
  }
  return r;
}

}  // namespace

const std::vector<FixtureInfo>& fixtures() {
  static const std::vector<FixtureInfo> all = {
      {"witt-ring-laws", 1, "truncated Witt ring laws over five rings", witt_ring_laws},
      {"ghost-homomorphism", 2, "ghost map is a ring homomorphism over QQ", ghost_homomorphism},
      {"frobenius-verschiebung", 3, "Frobenius and Verschiebung identities", frobenius_verschiebung},
      {"kronecker-roundtrip", 4, "Hankel rank equals bound; reconstruction inverts expansion", kronecker_roundtrip},
      {"degree-bounds", 5, "bounds under +, *, -, F_N, V_N", degree_bounds},
      {"almkvist-oracle", 6, "characteristic polynomials intertwine module and Witt operations", almkvist_oracle},
      {"block-minors", 7, "determinants as signed products of block minors", block_minors},
      {"nilpotent-structure", 8, "Hankel rank over dual numbers", nilpotent_structure},
      {"verschiebung-cartesian", 9, "Verschiebung sections preserve W_J bounds", verschiebung_cartesian},
      {"fatou-counterexample", 10, "quasi-integral witness in MonSub; ZZ is strong Fatou", fatou_counterexample},
      {"localization", 11, "W_rat commutes with inverting 2", localization},
      {"descent", 12, "equalizer and Galois descent over finite fields", descent},
      {"omega-criteria", 13, "injectivity of omega over fields and kernel witnesses", omega_criteria},
  };
  return all;
}

FixtureReport run_fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name != name) continue;
    auto t0 = std::chrono::steady_clock::now();
    FixtureReport r;
    try {
      r = f.run();
    } catch (const std::exception& e) {
      r = FixtureReport{};
      r.pass = false;
      r.details.push_back(std::string("aborted: ") + e.what());
    }
    r.name = f.name;
    r.criterion = f.criterion;
    r.title = f.title;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

std::string format_fixture_report(const FixtureReport& r, bool with_details) {
  std::ostringstream out;
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.criterion << " " << r.name << ": " << r.title;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << " (" << r.seconds << "s)\n";
  if (with_details)
    for (const auto& d : r.details) out << "    " << d << "\n";
  return out.str();
}

}  // namespace ratwitt
