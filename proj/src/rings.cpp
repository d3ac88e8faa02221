#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "ratwitt/poly.hpp"
#include "ratwitt/ring.hpp"

namespace ratwitt {
namespace {

mpz_class random_below(std::mt19937_64& rng, const mpz_class& n) {
  if (n.fits_ulong_p()) return mpz_class(static_cast<unsigned long>(rng() % n.get_ui()));
  mpz_class r = 0;
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2) + 64;
  for (std::size_t b = 0; b < bits; b += 64) {
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(rng()));
  }
  return mpz_class(r % n);
}

long random_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

std::string wrap(const std::string& s) { return is_atomic_literal(s) ? s : "(" + s + ")"; }

// ---------------------------------------------------------------- ZZ, QQ

class IntegerRing final : public Ring {
 public:
  std::string descriptor() const override { return "ZZ"; }
  Elem from_int(const mpz_class& n) const override { return n; }
  Elem add(const Elem& a, const Elem& b) const override { return mpz_class(a.z() + b.z()); }
  Elem neg(const Elem& a) const override { return mpz_class(-a.z()); }
  Elem mul(const Elem& a, const Elem& b) const override { return mpz_class(a.z() * b.z()); }
  Elem sub(const Elem& a, const Elem& b) const override { return mpz_class(a.z() - b.z()); }
  void add_assign(Elem& a, const Elem& b) const override { a.z() += b.z(); }
  void sub_assign(Elem& a, const Elem& b) const override { a.z() -= b.z(); }
  void addmul_int(Elem& a, const Elem& b, const mpz_class& n) const override {
    mpz_addmul(a.z().get_mpz_t(), b.z().get_mpz_t(), n.get_mpz_t());
  }
  Elem mul_int(const Elem& a, const mpz_class& n) const override { return mpz_class(a.z() * n); }
  std::optional<Elem> inverse(const Elem& a) const override {
    if (a.z() == 1 || a.z() == -1) return a;
    return std::nullopt;
  }
  std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const override {
    if (b.z() == 0 || !mpz_divisible_p(a.z().get_mpz_t(), b.z().get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.z().get_mpz_t(), b.z().get_mpz_t());
    return q;
  }
  bool is_domain() const override { return true; }
  bool is_torsion_free() const override { return true; }
  bool has_gcd() const override { return true; }
  bool is_strong_fatou() const override { return true; }
  mpz_class characteristic() const override { return 0; }
  Elem gcd(const Elem& a, const Elem& b) const override {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.z().get_mpz_t(), b.z().get_mpz_t());
    return g;
  }
  Elem canonical_unit(const Elem& a) const override { return mpz_class(a.z() < 0 ? -1 : 1); }
  Elem random(std::mt19937_64& rng, int size) const override { return mpz_class(random_in(rng, -size, size)); }
  std::string format(const Elem& a) const override { return a.z().get_str(); }
  RingPtr fraction_field() const override { return rationals(); }
  Elem to_fraction(const Elem& a) const override { return mpq_class(a.z()); }
  std::optional<Elem> from_fraction(const Elem& a) const override {
    if (a.q().get_den() != 1) return std::nullopt;
    return a.q().get_num();
  }
};

class RationalField final : public FractionFieldBase {
 public:
  std::string descriptor() const override { return "QQ"; }
  Elem from_int(const mpz_class& n) const override { return mpq_class(n); }
  Elem add(const Elem& a, const Elem& b) const override { return mpq_class(a.q() + b.q()); }
  Elem neg(const Elem& a) const override { return mpq_class(-a.q()); }
  Elem mul(const Elem& a, const Elem& b) const override { return mpq_class(a.q() * b.q()); }
  Elem sub(const Elem& a, const Elem& b) const override { return mpq_class(a.q() - b.q()); }
  void add_assign(Elem& a, const Elem& b) const override { a.q() += b.q(); }
  void sub_assign(Elem& a, const Elem& b) const override { a.q() -= b.q(); }
  std::optional<Elem> inverse(const Elem& a) const override {
    if (a.q() == 0) return std::nullopt;
    return mpq_class(1 / a.q());
  }
  bool is_field() const override { return true; }
  bool is_torsion_free() const override { return true; }
  bool is_strong_fatou() const override { return true; }
  mpz_class characteristic() const override { return 0; }
  Elem random(std::mt19937_64& rng, int size) const override {
    mpq_class q(random_in(rng, -size, size), random_in(rng, 1, std::max(1, size)));
    q.canonicalize();
    return q;
  }
  std::string format(const Elem& a) const override { return a.q().get_str(); }
  RingPtr base() const override { return integers(); }
  Elem numerator(const Elem& a) const override { return a.q().get_num(); }
  Elem denominator(const Elem& a) const override { return a.q().get_den(); }
  Elem make_fraction(const Elem& num, const Elem& den) const override {
    if (den.z() == 0) throw DomainError("zero denominator");
    mpq_class q(num.z(), den.z());
    q.canonicalize();
    return q;
  }
};

// ---------------------------------------------------------------- Zmod/n

class IntegersMod final : public Ring {
 public:
  explicit IntegersMod(mpz_class n) : n_(std::move(n)) {
    if (n_ < 2) throw DomainError("Zmod/n needs n >= 2");
    prime_ = mpz_probab_prime_p(n_.get_mpz_t(), 30) > 0;
  }
  std::string descriptor() const override { return "Zmod/" + n_.get_str(); }
  Elem from_int(const mpz_class& v) const override { return reduce(v); }
  Elem add(const Elem& a, const Elem& b) const override { return reduce(a.z() + b.z()); }
  Elem neg(const Elem& a) const override { return reduce(-a.z()); }
  Elem mul(const Elem& a, const Elem& b) const override { return reduce(a.z() * b.z()); }
  Elem sub(const Elem& a, const Elem& b) const override { return reduce(a.z() - b.z()); }
  // Residues are kept in [0, n).
  void add_assign(Elem& a, const Elem& b) const override {
    a.z() += b.z();
    if (a.z() >= n_) a.z() -= n_;
  }
  void sub_assign(Elem& a, const Elem& b) const override {
    a.z() -= b.z();
    if (a.z() < 0) a.z() += n_;
  }
  void addmul_int(Elem& a, const Elem& b, const mpz_class& n) const override {
    if (n_.fits_sint_p() && n.fits_sint_p()) {
      // |a + n*b| < 2^62 when n_ and n fit in an int.
      long m = n_.get_si(), v = (a.z().get_si() + n.get_si() * b.z().get_si()) % m;
      a.z() = v < 0 ? v + m : v;
      return;
    }
    mpz_addmul(a.z().get_mpz_t(), b.z().get_mpz_t(), n.get_mpz_t());
    mpz_mod(a.z().get_mpz_t(), a.z().get_mpz_t(), n_.get_mpz_t());
  }
  std::optional<Elem> inverse(const Elem& a) const override {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.z().get_mpz_t(), n_.get_mpz_t()) == 0) return std::nullopt;
    return reduce(inv);
  }
  bool is_field() const override { return prime_; }
  bool is_strong_fatou() const override { return prime_; }
  mpz_class characteristic() const override { return n_; }
  std::optional<mpz_class> cardinality() const override { return n_; }
  std::vector<Elem> elements() const override {
    if (n_ > (1 << 20)) throw DomainError(descriptor() + " is too large to enumerate");
    std::vector<Elem> out;
    for (unsigned long i = 0; i < n_.get_ui(); ++i) out.emplace_back(mpz_class(i));
    return out;
  }
  Elem random(std::mt19937_64& rng, int) const override { return random_below(rng, n_); }
  std::string format(const Elem& a) const override { return a.z().get_str(); }
  std::vector<std::pair<Elem, Elem>> zero_divisor_pairs() const override {
    if (prime_) return {};
    auto d = smallest_factor();
    if (!d) return {};
    return {{mpz_class(*d), mpz_class(n_ / *d)}};
  }
  std::vector<Elem> nilpotents() const override {
    // rad(n) is a nonzero nilpotent iff n is not squarefree.
    mpz_class m = n_, rad = 1;
    for (unsigned long d = 2; mpz_class(d) * d <= m && d < (1UL << 20); ++d) {
      if (m % d == 0) {
        rad *= d;
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) rad *= m;
    if (rad == n_) return {};
    return {Elem(rad)};
  }

 private:
  mpz_class n_;
  bool prime_;

  Elem reduce(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t());
    return r;
  }
  std::optional<unsigned long> smallest_factor() const {
    for (unsigned long d = 2; d < (1UL << 20) && mpz_class(d) * d <= n_; ++d)
      if (n_ % d == 0) return d;
    return std::nullopt;
  }
};

// ---------------------------------------------------------------- GF(p^k)

using UPoly = std::vector<unsigned long>;  // over GF(p), lowest first

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& m, unsigned long p) {
  utrim(a);
  std::size_t dm = m.size() - 1;
  unsigned long lead_inv = 1;
  {
    mpz_class inv;
    mpz_class lc(m.back()), pp(p);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pp.get_mpz_t());
    lead_inv = inv.get_ui();
  }
  while (a.size() > dm) {
    unsigned long c = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - (c * m[i]) % p)) % p;
    utrim(a);
  }
  return a;
}

UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, unsigned long p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return umod(std::move(r), m, p);
}

UPoly ugcd(UPoly a, UPoly b, unsigned long p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// No factor of degree <= k/2 means irreducible.
bool uirreducible(const UPoly& m, unsigned long p) {
  std::size_t k = m.size() - 1;
  if (k == 0 || m.back() == 0) return false;
  if (k == 1) return true;
  UPoly x{0, 1};
  UPoly h = umod(x, m, p);
  for (std::size_t i = 1; i <= k / 2; ++i) {
    UPoly acc{1};
    for (unsigned long e = 0; e < p; ++e) acc = umulmod(acc, h, m, p);
    h = acc;
    UPoly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    utrim(d);
    if (d.empty()) return false;
    if (ugcd(m, d, p).size() > 1) return false;
  }
  return true;
}

// Conway polynomials, lowest coefficient first.
const std::map<std::pair<unsigned long, unsigned>, UPoly>& conway_table() {
  static const std::map<std::pair<unsigned long, unsigned>, UPoly> t = {
      {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},       {{7, 3}, {4, 0, 6, 1}},    {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return t;
}

UPoly default_modulus(unsigned long p, unsigned k) {
  if (k == 1) return {0, 1};
  auto it = conway_table().find({p, k});
  if (it != conway_table().end()) return it->second;
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, k);
  for (mpz_class idx = 0; idx < count; ++idx) {
    UPoly m(k + 1, 0);
    mpz_class t = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = mpz_class(t % p).get_ui();
      t /= p;
    }
    m[k] = 1;
    if (m[0] != 0 && uirreducible(m, p)) return m;
  }
  throw InternalError("no irreducible polynomial found");
}

class FiniteField final : public FiniteFieldRing {
 public:
  FiniteField(unsigned long p, UPoly modulus) : p_(p), m_(std::move(modulus)) {
    if (!is_prime(p) || p >= (1UL << 31)) throw DomainError("GF(p) needs a prime p < 2^31");
    if (m_.size() < 2 || m_.back() != 1) throw DomainError("modulus must be monic of positive degree");
    for (auto c : m_)
      if (c >= p) throw DomainError("modulus coefficients must lie in [0, p)");
    k_ = static_cast<unsigned>(m_.size() - 1);
    if (k_ > 1 && !uirreducible(m_, p)) throw DomainError("modulus is not irreducible over GF(" + std::to_string(p) + ")");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, k_);
    if (!q.fits_ulong_p() || q > (mpz_class(1) << 62)) throw DomainError("field too large");
    q_ = q.get_ui();
    prime_field_ = integers_mod(mpz_class(p));
    if (q_ <= (1UL << 16)) build_tables();
  }

  std::string descriptor() const override {
    if (k_ == 1) return "GF/" + std::to_string(p_);
    std::vector<Elem> c;
    for (auto v : m_) c.emplace_back(mpz_class(v));
    return "GF/" + std::to_string(q_) + "=" + format_poly_desc(*prime_field_, c, "x");
  }
  Elem from_int(const mpz_class& n) const override {
    mpz_class r;
    mpz_mod_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const override { return mpz_class(add_idx(a.z().get_ui(), b.z().get_ui(), false)); }
  Elem sub(const Elem& a, const Elem& b) const override { return mpz_class(add_idx(a.z().get_ui(), b.z().get_ui(), true)); }
  void add_assign(Elem& a, const Elem& b) const override { a.z() = add_idx(a.z().get_ui(), b.z().get_ui(), false); }
  void sub_assign(Elem& a, const Elem& b) const override { a.z() = add_idx(a.z().get_ui(), b.z().get_ui(), true); }
  void addmul_int(Elem& a, const Elem& b, const mpz_class& n) const override {
    unsigned long c = mpz_fdiv_ui(n.get_mpz_t(), p_);  // index of n in the prime subfield
    a.z() = add_idx(a.z().get_ui(), mul_idx(b.z().get_ui(), c), false);
  }
  Elem neg(const Elem& a) const override { return sub(zero(), a); }
  Elem mul(const Elem& a, const Elem& b) const override { return mpz_class(mul_idx(a.z().get_ui(), b.z().get_ui())); }
  std::optional<Elem> inverse(const Elem& a) const override {
    unsigned long x = a.z().get_ui();
    if (x == 0) return std::nullopt;
    if (!log_.empty()) return mpz_class(static_cast<unsigned long>(exp_[(q_ - 1 - log_[x]) % (q_ - 1)]));
    return pow(a, mpz_class(q_ - 2));
  }
  bool is_field() const override { return true; }
  bool is_strong_fatou() const override { return true; }
  mpz_class characteristic() const override { return p_; }
  std::optional<mpz_class> cardinality() const override { return mpz_class(q_); }
  std::vector<Elem> elements() const override {
    if (q_ > (1UL << 20)) throw DomainError(descriptor() + " is too large to enumerate");
    std::vector<Elem> out;
    for (unsigned long i = 0; i < q_; ++i) out.emplace_back(mpz_class(i));
    return out;
  }
  Elem random(std::mt19937_64& rng, int) const override { return mpz_class(static_cast<unsigned long>(rng() % q_)); }
  std::string format(const Elem& a) const override {
    if (k_ == 1) return a.z().get_str();
    std::vector<Elem> c;
    for (auto v : dec(a.z().get_ui())) c.emplace_back(mpz_class(v));
    return format_poly_desc(*prime_field_, c, "x");
  }
  std::optional<Elem> generator(std::string_view name) const override {
    if (k_ > 1 && name == "x") return mpz_class(p_);
    return std::nullopt;
  }

  unsigned long prime() const override { return p_; }
  unsigned degree() const override { return k_; }
  const std::vector<unsigned long>& modulus() const override { return m_; }
  std::vector<unsigned long> coordinates(const Elem& a) const override { return dec(a.z().get_ui()); }
  Elem from_coordinates(const std::vector<unsigned long>& c) const override {
    UPoly d(k_, 0);
    for (std::size_t i = 0; i < c.size() && i < k_; ++i) d[i] = c[i] % p_;
    return enc(d);
  }

 private:
  unsigned long p_;
  UPoly m_;
  unsigned k_;
  unsigned long q_;
  RingPtr prime_field_;
  std::vector<std::uint32_t> log_, exp_;  // discrete log tables for small q

  UPoly dec(unsigned long x) const {
    UPoly d(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }
  Elem enc(const UPoly& d) const { return mpz_class(enc_idx(d)); }
  unsigned long enc_idx(const UPoly& d) const {
    unsigned long x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * p_ + d[i];
    return x;
  }
  // Index of a +- b; indices are base-p digit vectors of the coefficients.
  unsigned long add_idx(unsigned long a, unsigned long b, bool subtract) const {
    if (p_ == 2) return a ^ b;
    unsigned long out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      unsigned long x = a % p_, y = b % p_;
      out += place * (subtract ? (x + p_ - y) % p_ : (x + y) % p_);
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }
  unsigned long mul_slow(unsigned long a, unsigned long b) const {
    UPoly x = dec(a), y = dec(b);
    utrim(x);
    utrim(y);
    UPoly r = umulmod(x, y, m_, p_);
    r.resize(k_, 0);
    return enc_idx(r);
  }
  unsigned long mul_idx(unsigned long a, unsigned long b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[(static_cast<unsigned long>(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_slow(a, b);
  }
  void build_tables() {
    std::vector<unsigned long> factors;
    unsigned long n = q_ - 1;
    for (unsigned long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) factors.push_back(n);
    auto power = [&](unsigned long g, unsigned long e) {
      unsigned long r = 1;
      while (e) {
        if (e & 1) r = mul_slow(r, g);
        g = mul_slow(g, g);
        e >>= 1;
      }
      return r;
    };
    unsigned long gen = 0;
    for (unsigned long g = 1; g < q_ && gen == 0; ++g) {
      bool ok = true;
      for (auto f : factors)
        if (power(g, (q_ - 1) / f) == 1) ok = false;
      if (ok) gen = g;
    }
    if (gen == 0) {
      if (q_ == 2) gen = 1;
      else throw InternalError("no primitive element");
    }
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    unsigned long x = 1;
    for (unsigned long i = 0; i + 1 < q_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, gen);
    }
  }
};

// ---------------------------------------------------------------- Dual(R)

class DualNumbers final : public DualRing {
 public:
  explicit DualNumbers(RingPtr base) : b_(std::move(base)) {}
  std::string descriptor() const override { return "Dual(" + b_->descriptor() + ")"; }
  Elem zero() const override { return Elem::Vec{b_->zero(), b_->zero()}; }
  Elem one() const override { return Elem::Vec{b_->one(), b_->zero()}; }
  Elem from_int(const mpz_class& n) const override { return Elem::Vec{b_->from_int(n), b_->zero()}; }
  Elem add(const Elem& x, const Elem& y) const override {
    return Elem::Vec{b_->add(x.vec()[0], y.vec()[0]), b_->add(x.vec()[1], y.vec()[1])};
  }
  Elem neg(const Elem& x) const override { return Elem::Vec{b_->neg(x.vec()[0]), b_->neg(x.vec()[1])}; }
  void add_assign(Elem& x, const Elem& y) const override {
    b_->add_assign(x.vec()[0], y.vec()[0]);
    b_->add_assign(x.vec()[1], y.vec()[1]);
  }
  void sub_assign(Elem& x, const Elem& y) const override {
    b_->sub_assign(x.vec()[0], y.vec()[0]);
    b_->sub_assign(x.vec()[1], y.vec()[1]);
  }
  void addmul_int(Elem& x, const Elem& y, const mpz_class& n) const override {
    b_->addmul_int(x.vec()[0], y.vec()[0], n);
    b_->addmul_int(x.vec()[1], y.vec()[1], n);
  }
  Elem mul_int(const Elem& x, const mpz_class& n) const override {
    return Elem::Vec{b_->mul_int(x.vec()[0], n), b_->mul_int(x.vec()[1], n)};
  }
  Elem mul(const Elem& x, const Elem& y) const override {
    const auto &a = x.vec()[0], &b = x.vec()[1], &c = y.vec()[0], &d = y.vec()[1];
    return Elem::Vec{b_->mul(a, c), b_->add(b_->mul(a, d), b_->mul(b, c))};
  }
  std::optional<Elem> inverse(const Elem& x) const override {
    auto ia = b_->inverse(x.vec()[0]);
    if (!ia) return std::nullopt;
    return Elem::Vec{*ia, b_->neg(b_->mul(x.vec()[1], b_->mul(*ia, *ia)))};
  }
  bool is_torsion_free() const override { return b_->is_torsion_free(); }
  mpz_class characteristic() const override { return b_->characteristic(); }
  std::optional<mpz_class> cardinality() const override {
    auto c = b_->cardinality();
    if (!c) return std::nullopt;
    return mpz_class(*c * *c);
  }
  std::vector<Elem> elements() const override {
    auto base = b_->elements();
    std::vector<Elem> out;
    for (const auto& a : base)
      for (const auto& b : base) out.emplace_back(Elem::Vec{a, b});
    return out;
  }
  Elem random(std::mt19937_64& rng, int size) const override {
    Elem a = b_->random(rng, size);
    return Elem::Vec{a, b_->random(rng, size)};
  }
  std::string format(const Elem& x) const override {
    const auto &a = x.vec()[0], &b = x.vec()[1];
    if (b_->is_zero(b)) return b_->format(a);
    std::string eps;
    if (b_->is_one(b)) {
      eps = "e";
    } else if (b_->is_one(b_->neg(b))) {
      eps = "-e";
    } else {
      std::string s = b_->format(b);
      eps = (is_atomic_literal(s) || (s[0] == '-' && is_atomic_literal(s.substr(1))) ? s : "(" + s + ")") + "*e";
    }
    if (b_->is_zero(a)) return eps;
    return b_->format(a) + (eps[0] == '-' ? "" : "+") + eps;
  }
  std::optional<Elem> generator(std::string_view name) const override {
    if (name == "e") return Elem::Vec{b_->zero(), b_->one()};
    if (auto g = b_->generator(name)) return Elem::Vec{*g, b_->zero()};
    return std::nullopt;
  }
  std::vector<std::pair<Elem, Elem>> zero_divisor_pairs() const override {
    std::vector<std::pair<Elem, Elem>> out;
    for (auto& [a, b] : b_->zero_divisor_pairs()) out.emplace_back(lift(a), lift(b));
    return out;
  }
  std::vector<Elem> nilpotents() const override { return {Elem::Vec{b_->zero(), b_->one()}}; }

  RingPtr base() const override { return b_; }
  Elem real_part(const Elem& x) const override { return x.vec()[0]; }
  Elem make(const Elem& a, const Elem& b) const override { return Elem::Vec{a, b}; }

 private:
  RingPtr b_;
  Elem lift(const Elem& a) const { return Elem::Vec{a, b_->zero()}; }
};

// ---------------------------------------------------------------- R[v]

class PolyRing final : public PolyRingBase {
 public:
  PolyRing(RingPtr base, std::string var) : b_(std::move(base)), var_(std::move(var)) {
    if (var_.empty() || !std::isalpha(static_cast<unsigned char>(var_[0])))
      throw DomainError("invalid polynomial variable '" + var_ + "'");
    if (var_ == "T") throw DomainError("T is reserved for the Witt variable");
    if (b_->generator(var_)) throw DomainError("variable " + var_ + " clashes with a generator of " + b_->descriptor());
  }
  std::string descriptor() const override { return b_->descriptor() + "[" + var_ + "]"; }
  Elem zero() const override { return Elem::Vec{}; }
  Elem one() const override { return from_int(1); }
  Elem from_int(const mpz_class& n) const override { return lift(b_->from_int(n)); }
  Elem add(const Elem& a, const Elem& b) const override { return coeffs::add(*b_, a.vec(), b.vec()); }
  Elem neg(const Elem& a) const override { return coeffs::neg(*b_, a.vec()); }
  Elem sub(const Elem& a, const Elem& b) const override { return coeffs::sub(*b_, a.vec(), b.vec()); }
  Elem mul(const Elem& a, const Elem& b) const override { return coeffs::mul(*b_, a.vec(), b.vec()); }
  std::optional<Elem> inverse(const Elem& a) const override {
    // Units of positive degree (possible over non-reduced bases) are not detected.
    if (a.vec().size() != 1) return std::nullopt;
    auto inv = b_->inverse(a.vec()[0]);
    if (!inv) return std::nullopt;
    return lift(*inv);
  }
  std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const override {
    if (b.vec().empty()) return std::nullopt;
    auto q = coeffs::divide_exact(*b_, a.vec(), b.vec());
    if (!q) return std::nullopt;
    return *q;
  }
  bool is_domain() const override { return b_->is_domain(); }
  bool is_torsion_free() const override { return b_->is_torsion_free(); }
  bool has_gcd() const override { return b_->is_field() || (b_->is_domain() && b_->has_gcd()); }
  bool is_strong_fatou() const override { return is_domain() && has_gcd(); }
  mpz_class characteristic() const override { return b_->characteristic(); }
  Elem gcd(const Elem& a, const Elem& b) const override {
    if (!has_gcd()) throw DomainError("no gcd available in " + descriptor());
    if (b_->is_field()) return coeffs::gcd_field(*b_, a.vec(), b.vec());
    return coeffs::gcd_ufd(*b_, a.vec(), b.vec());
  }
  Elem canonical_unit(const Elem& a) const override {
    if (a.vec().empty()) return one();
    return lift(b_->canonical_unit(a.vec().back()));
  }
  Elem random(std::mt19937_64& rng, int size) const override {
    int deg = static_cast<int>(rng() % 3);
    coeffs::Vec c;
    for (int i = 0; i <= deg; ++i) c.push_back(b_->random(rng, size));
    coeffs::trim(*b_, c);
    return c;
  }
  std::string format(const Elem& a) const override { return format_poly_desc(*b_, a.vec(), var_); }
  std::optional<Elem> generator(std::string_view name) const override {
    if (name == var_) return Elem::Vec{b_->zero(), b_->one()};
    if (auto g = b_->generator(name)) return lift(*g);
    return std::nullopt;
  }
  RingPtr fraction_field() const override {
    if (!is_domain() || !has_gcd()) return nullptr;
    return fraction_field_of(self());
  }
  Elem to_fraction(const Elem& a) const override {
    auto f = fraction_field();
    if (!f) throw DomainError(descriptor() + " has no fraction field");
    return as_fraction_field(*f)->make_fraction(a, one());
  }
  std::optional<Elem> from_fraction(const Elem& a) const override {
    if (!is_one(a.vec()[1])) return std::nullopt;
    return a.vec()[0];
  }

  RingPtr base() const override { return b_; }
  const std::string& variable() const override { return var_; }

 private:
  RingPtr b_;
  std::string var_;
  Elem lift(const Elem& c) const {
    coeffs::Vec v{c};
    coeffs::trim(*b_, v);
    return v;
  }
};

// ---------------------------------------------------------------- Frac(R)

class FractionField final : public FractionFieldBase {
 public:
  explicit FractionField(RingPtr base) : b_(std::move(base)) {
    if (!b_->is_domain() || !b_->has_gcd())
      throw DomainError("fraction field requires a gcd domain, got " + b_->descriptor());
  }
  std::string descriptor() const override { return "Frac(" + b_->descriptor() + ")"; }
  Elem zero() const override { return Elem::Vec{b_->zero(), b_->one()}; }
  Elem one() const override { return Elem::Vec{b_->one(), b_->one()}; }
  Elem from_int(const mpz_class& n) const override { return make_fraction(b_->from_int(n), b_->one()); }
  Elem add(const Elem& x, const Elem& y) const override {
    const auto &a = x.vec()[0], &b = x.vec()[1], &c = y.vec()[0], &d = y.vec()[1];
    return make_fraction(b_->add(b_->mul(a, d), b_->mul(c, b)), b_->mul(b, d));
  }
  Elem neg(const Elem& x) const override { return Elem::Vec{b_->neg(x.vec()[0]), x.vec()[1]}; }
  Elem mul(const Elem& x, const Elem& y) const override {
    return make_fraction(b_->mul(x.vec()[0], y.vec()[0]), b_->mul(x.vec()[1], y.vec()[1]));
  }
  std::optional<Elem> inverse(const Elem& x) const override {
    if (b_->is_zero(x.vec()[0])) return std::nullopt;
    return make_fraction(x.vec()[1], x.vec()[0]);
  }
  bool is_field() const override { return true; }
  bool is_torsion_free() const override { return b_->is_torsion_free(); }
  bool is_strong_fatou() const override { return true; }
  mpz_class characteristic() const override { return b_->characteristic(); }
  Elem random(std::mt19937_64& rng, int size) const override {
    Elem den = b_->random(rng, size);
    while (b_->is_zero(den)) den = b_->random(rng, size);
    return make_fraction(b_->random(rng, size), den);
  }
  std::string format(const Elem& x) const override {
    std::string num = b_->format(x.vec()[0]);
    if (b_->is_one(x.vec()[1])) return num;
    return wrap(num) + "/" + wrap(b_->format(x.vec()[1]));
  }
  std::optional<Elem> generator(std::string_view name) const override {
    if (auto g = b_->generator(name)) return Elem::Vec{*g, b_->one()};
    return std::nullopt;
  }

  RingPtr base() const override { return b_; }
  Elem numerator(const Elem& x) const override { return x.vec()[0]; }
  Elem denominator(const Elem& x) const override { return x.vec()[1]; }
  Elem make_fraction(const Elem& num, const Elem& den) const override {
    if (b_->is_zero(den)) throw DomainError("zero denominator");
    if (b_->is_zero(num)) return zero();
    Elem g = b_->gcd(num, den);
    Elem n = *b_->divide_exact(num, g), d = *b_->divide_exact(den, g);
    Elem u = b_->canonical_unit(d);
    if (!b_->is_one(u)) {
      Elem ui = *b_->inverse(u);
      n = b_->mul(n, ui);
      d = b_->mul(d, ui);
    }
    return Elem::Vec{n, d};
  }

 private:
  RingPtr b_;
};

// ---------------------------------------------------------------- MonSub(k)

class MonomialSubring final : public MonomialSubringBase {
 public:
  explicit MonomialSubring(RingPtr k) : k_(std::move(k)) {
    if (!k_->is_field()) throw DomainError("MonSub needs a field, got " + k_->descriptor());
    amb_ = poly_ring(poly_ring(k_, "x"), "y");
  }
  std::string descriptor() const override { return "MonSub(" + k_->descriptor() + ")"; }
  Elem zero() const override { return amb_->zero(); }
  Elem one() const override { return amb_->one(); }
  Elem from_int(const mpz_class& n) const override { return amb_->from_int(n); }
  Elem add(const Elem& a, const Elem& b) const override { return amb_->add(a, b); }
  Elem neg(const Elem& a) const override { return amb_->neg(a); }
  Elem sub(const Elem& a, const Elem& b) const override { return amb_->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const override { return amb_->mul(a, b); }
  std::optional<Elem> inverse(const Elem& a) const override { return amb_->inverse(a); }
  std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const override {
    auto q = amb_->divide_exact(a, b);
    if (!q || !member(*q)) return std::nullopt;
    return q;
  }
  bool is_domain() const override { return true; }
  bool is_torsion_free() const override { return k_->is_torsion_free(); }
  mpz_class characteristic() const override { return k_->characteristic(); }
  Elem random(std::mt19937_64& rng, int size) const override {
    Elem a = amb_->random(rng, size);
    auto c = a.vec();
    for (std::size_t j = 1; j < c.size(); ++j) {
      auto& cj = c[j].vec();
      if (!cj.empty()) cj[0] = k_->zero();
      coeffs::trim(*k_, cj);
    }
    coeffs::trim(*as_poly_ring(*amb_)->base(), c);
    return c;
  }
  std::string format(const Elem& a) const override { return amb_->format(a); }
  std::optional<Elem> generator(std::string_view name) const override {
    if (name == "x") return amb_->generator(name);
    return std::nullopt;
  }
  RingPtr literal_ring() const override { return amb_; }
  bool contains(const Elem& a) const override { return member(a); }
  RingPtr fraction_field() const override { return fraction_field_of(amb_); }
  Elem to_fraction(const Elem& a) const override {
    return as_fraction_field(*fraction_field())->make_fraction(a, amb_->one());
  }
  std::optional<Elem> from_fraction(const Elem& a) const override {
    if (!amb_->is_one(a.vec()[1]) || !member(a.vec()[0])) return std::nullopt;
    return a.vec()[0];
  }

  RingPtr field() const override { return k_; }
  RingPtr ambient() const override { return amb_; }
  bool member(const Elem& p) const override {
    const auto& c = p.vec();
    for (std::size_t j = 1; j < c.size(); ++j) {
      const auto& cj = c[j].vec();
      if (!cj.empty() && !k_->is_zero(cj[0])) return false;
    }
    return true;
  }

 private:
  RingPtr k_, amb_;
};

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool starts_with_call(const std::string& s, std::string_view name, std::string& inner) {
  if (s.size() < name.size() + 2 || s.compare(0, name.size(), name) != 0 || s[name.size()] != '(' || s.back() != ')')
    return false;
  int depth = 0;
  for (std::size_t i = name.size(); i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return false;
  }
  inner = s.substr(name.size() + 1, s.size() - name.size() - 2);
  return true;
}

}  // namespace

RingPtr integers() {
  static const RingPtr r = std::make_shared<IntegerRing>();
  return r;
}

RingPtr rationals() {
  static const RingPtr r = std::make_shared<RationalField>();
  return r;
}

RingPtr integers_mod(const mpz_class& n) { return std::make_shared<IntegersMod>(n); }

RingPtr finite_field(unsigned long p, unsigned k, std::optional<std::vector<unsigned long>> modulus) {
  if (k == 0) throw DomainError("finite field degree must be positive");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  UPoly m = modulus ? *modulus : default_modulus(p, k);
  if (m.size() != k + 1) throw DomainError("modulus degree does not match the field degree");
  return std::make_shared<FiniteField>(p, std::move(m));
}

RingPtr dual_numbers(RingPtr base) { return std::make_shared<DualNumbers>(std::move(base)); }

RingPtr poly_ring(RingPtr base, std::string variable) {
  return std::make_shared<PolyRing>(std::move(base), std::move(variable));
}

RingPtr monomial_subring(RingPtr field) { return std::make_shared<MonomialSubring>(std::move(field)); }

RingPtr fraction_field_of(RingPtr base) {
  if (base->same_as(*integers())) return rationals();
  if (base->is_field()) return base;
  if (as_monomial_subring(*base)) return base->fraction_field();
  return std::make_shared<FractionField>(std::move(base));
}

RingPtr parse_ring(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty ring descriptor", 0);
  if (s.back() == ']') {
    auto open = s.rfind('[');
    if (open == std::string::npos || open == 0) throw ParseError("unbalanced '[' in ring descriptor", s.size() - 1);
    return poly_ring(parse_ring(s.substr(0, open)), strip(s.substr(open + 1, s.size() - open - 2)));
  }
  if (s == "ZZ") return integers();
  if (s == "QQ") return rationals();
  std::string inner;
  if (starts_with_call(s, "Dual", inner)) return dual_numbers(parse_ring(inner));
  if (starts_with_call(s, "MonSub", inner)) return monomial_subring(parse_ring(inner));
  if (starts_with_call(s, "Frac", inner)) return fraction_field_of(parse_ring(inner));
  auto number = [&](const std::string& t, std::size_t at) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected a positive integer in ring descriptor", at);
    return mpz_class(t);
  };
  if (s.rfind("Zmod/", 0) == 0) {
    mpz_class n = number(s.substr(5), 5);
    if (n < 2) throw ParseError("Zmod/n needs n >= 2", 5);
    return integers_mod(n);
  }
  if (s.rfind("GF/", 0) == 0) {
    auto eq = s.find('=');
    mpz_class q = number(strip(s.substr(3, eq == std::string::npos ? std::string::npos : eq - 3)), 3);
    if (!q.fits_ulong_p()) throw ParseError("field order too large", 3);
    unsigned long qq = q.get_ui(), p = 0;
    for (unsigned long d = 2; d <= qq; ++d)
      if (qq % d == 0) {
        p = d;
        break;
      }
    if (p == 0) throw ParseError("GF/q needs a prime power q", 3);
    unsigned k = 0;
    for (unsigned long t = qq; t > 1; t /= p, ++k)
      if (t % p != 0) throw ParseError("GF/q needs a prime power q", 3);
    if (eq == std::string::npos) return finite_field(p, k);
    RingPtr fx = poly_ring(finite_field(p, 1), "x");
    Elem m = fx->parse(s.substr(eq + 1));
    UPoly mod;
    for (const auto& c : m.vec()) mod.push_back(c.z().get_ui());
    if (mod.size() != k + 1 || mod.back() != 1)
      throw ParseError("modulus must be monic of degree " + std::to_string(k), eq + 1);
    if (k == 1) return finite_field(p, 1);
    return finite_field(p, k, mod);
  }
  throw ParseError("unknown ring descriptor '" + s + "'", 0);
}

}  // namespace ratwitt
