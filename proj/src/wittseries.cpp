#include "ratwitt/wittseries.hpp"

#include <algorithm>
#include <istream>
#include <cstdint>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "ratwitt/literals.hpp"

namespace ratwitt {

// ---------------------------------------------------------------- WittSeries

WittSeries::WittSeries(RingPtr ring, std::vector<Elem> coefficients)
    : ring_(std::move(ring)), a_(std::move(coefficients)) {
  if (a_.empty()) throw PrecisionError("Witt series precision must be at least 1", 1);
}

WittSeries WittSeries::zero(RingPtr ring, std::size_t n) {
  std::vector<Elem> a(n, ring->zero());
  return WittSeries(std::move(ring), std::move(a));
}

WittSeries WittSeries::one(RingPtr ring, std::size_t n) { return teichmuller(ring, ring->one(), n); }

WittSeries WittSeries::teichmuller(RingPtr ring, const Elem& a, std::size_t n) {
  std::vector<Elem> c(n, ring->zero());
  if (n) c[0] = ring->neg(a);
  return WittSeries(std::move(ring), std::move(c));
}

WittSeries WittSeries::from_poly(const Poly& p, std::size_t n) {
  if (!p.ring()->is_one(p.coeff(0))) throw DomainError("Witt series must have constant term 1");
  std::vector<Elem> c;
  for (std::size_t i = 1; i <= n; ++i) c.push_back(p.coeff(i));
  return WittSeries(p.ring(), std::move(c));
}

Elem WittSeries::coeff(std::size_t n) const {
  if (n == 0) return ring_->one();
  if (n > a_.size()) throw PrecisionError("coefficient beyond precision", n);
  return a_[n - 1];
}

Poly WittSeries::as_poly() const {
  std::vector<Elem> c{ring_->one()};
  c.insert(c.end(), a_.begin(), a_.end());
  return Poly(ring_, std::move(c));
}

WittSeries WittSeries::truncated(std::size_t n) const {
  if (n > a_.size()) throw PrecisionError("cannot raise precision by truncation", n);
  return WittSeries(ring_, std::vector<Elem>(a_.begin(), a_.begin() + static_cast<long>(n)));
}

bool operator==(const WittSeries& a, const WittSeries& b) {
  if (!same_ring(a.ring_, b.ring_) || a.a_.size() != b.a_.size()) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!a.ring_->eq(a.a_[i], b.a_[i])) return false;
  return true;
}

namespace {

void require_same(const WittSeries& f, const WittSeries& g) { require_same_ring(f.ring(), g.ring()); }

WittSeries from_full(const RingPtr& r, std::vector<Elem> c, std::size_t n) {
  c.resize(n + 1, r->zero());
  return WittSeries(r, std::vector<Elem>(c.begin() + 1, c.end()));
}

}  // namespace

WittSeries witt_add(const WittSeries& f, const WittSeries& g) {
  require_same(f, g);
  const Ring& r = *f.ring();
  std::size_t n = std::min(f.precision(), g.precision());
  std::vector<Elem> out(n, r.zero());
  for (std::size_t k = 1; k <= n; ++k) {
    Elem acc = r.add(f.coefficients()[k - 1], g.coefficients()[k - 1]);
    for (std::size_t i = 1; i < k; ++i) acc = r.add(acc, r.mul(f.coefficients()[i - 1], g.coefficients()[k - i - 1]));
    out[k - 1] = std::move(acc);
  }
  return WittSeries(f.ring(), std::move(out));
}

WittSeries witt_neg(const WittSeries& f) {
  const Ring& r = *f.ring();
  std::size_t n = f.precision();
  // b_k = -sum_{i=1..k} a_i b_{k-i}
  std::vector<Elem> b(n + 1, r.zero());
  b[0] = r.one();
  for (std::size_t k = 1; k <= n; ++k) {
    Elem acc = r.zero();
    for (std::size_t i = 1; i <= k; ++i) acc = r.add(acc, r.mul(f.coefficients()[i - 1], b[k - i]));
    b[k] = r.neg(acc);
  }
  return from_full(f.ring(), std::move(b), n);
}

WittSeries witt_sub(const WittSeries& f, const WittSeries& g) { return witt_add(f, witt_neg(g)); }

WittSeries witt_multiple(const WittSeries& f, unsigned long n) {
  WittSeries acc = WittSeries::zero(f.ring(), f.precision());
  for (unsigned long i = 0; i < n; ++i) acc = witt_add(acc, f);
  return acc;
}

namespace {

// Nonzero entries of one table level reduced into (-c/2, c/2] for
// characteristic c > 0, stored row by row.
struct SparseLevel {
  std::shared_ptr<const UniversalMulTable::Level> level;  // keeps the key alive
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> rows;
};

std::shared_ptr<const SparseLevel> sparse_level(std::shared_ptr<const UniversalMulTable::Level> level,
                                                const mpz_class& characteristic) {
  static std::mutex mu;
  static std::map<std::pair<const UniversalMulTable::Level*, std::string>, std::shared_ptr<const SparseLevel>> cache;
  auto key = std::make_pair(level.get(), characteristic.get_str());
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto sp = std::make_shared<SparseLevel>();
  std::size_t pk = level->partitions.size();
  sp->rows.resize(pk);
  mpz_class c, half = characteristic / 2;
  for (std::size_t i = 0; i < pk; ++i)
    for (std::size_t j = 0; j < pk; ++j) {
      c = level->at(i, j);
      if (characteristic != 0) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), characteristic.get_mpz_t());
        if (c > half) c -= characteristic;
      }
      if (c != 0) sp->rows[i].emplace_back(static_cast<std::uint32_t>(j), c);
    }
  sp->level = std::move(level);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(sp)).first->second;
}

WittSeries witt_mul_table(const WittSeries& f, const WittSeries& g) {
  const Ring& r = *f.ring();
  std::size_t n = std::min(f.precision(), g.precision());
  auto& table = UniversalMulTable::instance();
  table.ensure(n);
  const mpz_class characteristic = r.characteristic();
  const Elem zero = r.zero();
  // x[k][i] = product of the parts of partition i of k, evaluated at f (resp. g).
  std::vector<std::vector<Elem>> x(n + 1), y(n + 1);
  x[0] = {r.one()};
  y[0] = {r.one()};
  std::vector<Elem> out(n, r.zero());
  for (std::size_t k = 1; k <= n; ++k) {
    auto sp = sparse_level(table.level(k), characteristic);
    const auto& level = *sp->level;
    std::size_t pk = level.partitions.size();
    x[k].reserve(pk);
    y[k].reserve(pk);
    for (const auto& [first, idx] : level.split) {
      std::size_t rest = k - first;
      x[k].push_back(r.mul(f.coefficients()[first - 1], x[rest][idx]));
      y[k].push_back(r.mul(g.coefficients()[first - 1], y[rest][idx]));
    }
    std::vector<bool> y_zero(pk);
    for (std::size_t j = 0; j < pk; ++j) y_zero[j] = r.eq(y[k][j], zero);
    Elem acc = zero;
    for (std::size_t i = 0; i < pk; ++i) {
      if (r.eq(x[k][i], zero)) continue;
      Elem inner = zero;
      for (const auto& [j, c] : sp->rows[i]) {
        if (y_zero[j]) continue;
        if (c == 1)
          r.add_assign(inner, y[k][j]);
        else if (c == -1)
          r.sub_assign(inner, y[k][j]);
        else
          r.addmul_int(inner, y[k][j], c);
      }
      r.add_assign(acc, r.mul(x[k][i], inner));
    }
    out[k - 1] = std::move(acc);
  }
  return WittSeries(f.ring(), std::move(out));
}

// d with d^i a_i integral for all i.
mpz_class clearing_scale(const WittSeries& f) {
  mpz_class d = 1;
  for (const auto& a : f.coefficients()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a.q().get_den_mpz_t());
  return d;
}

}  // namespace

WittSeries witt_mul(const WittSeries& f, const WittSeries& g) {
  require_same(f, g);
  if (f.ring()->descriptor() != "QQ") return witt_mul_table(f, g);
  // f(dT) (.) g(eT) = (f (.) g)(deT), so the product runs over ZZ.
  RingPtr zz = integers();
  auto scaled_integral = [&](const WittSeries& h, const mpz_class& d) {
    std::vector<Elem> c;
    mpz_class power = 1;
    for (const auto& a : h.coefficients()) {
      power *= d;
      mpq_class v = a.q() * power;
      c.push_back(Elem(mpz_class(v.get_num())));
    }
    return WittSeries(zz, std::move(c));
  };
  mpz_class d = clearing_scale(f), e = clearing_scale(g), de = d * e;
  WittSeries p = witt_mul_table(scaled_integral(f, d), scaled_integral(g, e));
  std::vector<Elem> out;
  mpz_class power = 1;
  for (const auto& a : p.coefficients()) {
    power *= de;
    mpq_class v(a.z(), power);
    v.canonicalize();
    out.push_back(Elem(v));
  }
  return WittSeries(f.ring(), std::move(out));
}


// ---------------------------------------------------------------- ghost

std::vector<Elem> ghost(const WittSeries& f) {
  const Ring& r = *f.ring();
  if (!r.is_torsion_free()) throw DomainError("ghost components need a torsion-free ring, got " + r.descriptor());
  std::size_t n = f.precision();
  std::vector<Elem> w(n + 1, r.zero());
  for (std::size_t k = 1; k <= n; ++k) {
    Elem acc = r.mul_int(f.coefficients()[k - 1], mpz_class(static_cast<unsigned long>(k)));
    for (std::size_t i = 1; i < k; ++i) acc = r.add(acc, r.mul(w[i], f.coefficients()[k - i - 1]));
    w[k] = r.neg(acc);
  }
  w.erase(w.begin());
  return w;
}

WittSeries from_ghost(const RingPtr& ring, const std::vector<Elem>& w) {
  const Ring& r = *ring;
  std::size_t n = w.size();
  std::vector<Elem> a(n + 1, r.zero());
  a[0] = r.one();
  for (std::size_t k = 1; k <= n; ++k) {
    Elem acc = r.zero();
    for (std::size_t i = 1; i <= k; ++i) acc = r.add(acc, r.mul(w[i - 1], a[k - i]));
    auto q = r.divide_exact(r.neg(acc), r.from_int(mpz_class(static_cast<unsigned long>(k))));
    if (!q) throw DomainError("ghost vector has no Witt preimage over " + r.descriptor());
    a[k] = *q;
  }
  return from_full(ring, std::move(a), n);
}

// ---------------------------------------------------------------- F_N, V_N

namespace {
void require_frobenius_precision(const WittSeries& f, unsigned long n) {
  if (n == 0) throw DomainError("Frobenius index must be positive");
  if (f.precision() < n) throw PrecisionError("F_" + std::to_string(n) + " needs more input precision", n);
}
}  // namespace

WittSeries frobenius_ghost(const WittSeries& f, unsigned long n) {
  require_frobenius_precision(f, n);
  auto w = ghost(f);
  std::size_t out = f.precision() / n;
  std::vector<Elem> d;
  for (std::size_t k = 1; k <= out; ++k) d.push_back(w[k * n - 1]);
  return from_ghost(f.ring(), d);
}

WittSeries frobenius_resultant(const WittSeries& f, unsigned long n) {
  require_frobenius_precision(f, n);
  const RingPtr& a = f.ring();
  std::size_t out = f.precision() / n;
  if (n == 1) return f;
  RingPtr at = poly_ring(a, "T_");
  auto lift = [&](const Elem& c) {
    Elem::Vec v{c};
    coeffs::trim(*a, v);
    return Elem(std::move(v));
  };
  // m(Z) = Z^N - T^N over A[T]
  std::vector<Elem> mc(n + 1, at->zero());
  {
    std::vector<Elem> tn(n + 1, a->zero());
    tn[n] = a->neg(a->one());
    mc[0] = Elem(Elem::Vec(tn));
    coeffs::trim(*a, mc[0].vec());
  }
  mc[n] = at->one();
  std::vector<Elem> hc;
  for (std::size_t i = 0; i <= f.precision(); ++i) hc.push_back(lift(f.coeff(i)));
  Elem res = norm_monic(Poly(at, mc), Poly(at, hc));
  const auto& rc = res.vec();
  auto coeff_at = [&](std::size_t i) { return i < rc.size() ? rc[i] : a->zero(); };
  for (std::size_t i = 1; i <= f.precision(); ++i)
    if (i % n != 0 && !a->is_zero(coeff_at(i)))
      throw InternalError("resultant Frobenius produced a term off the T^N lattice");
  if (!a->is_one(coeff_at(0))) throw InternalError("resultant Frobenius lost the constant term");
  std::vector<Elem> b;
  for (std::size_t k = 1; k <= out; ++k) b.push_back(coeff_at(k * n));
  return WittSeries(a, std::move(b));
}

WittSeries frobenius(const WittSeries& f, unsigned long n) {
  if (f.ring()->is_torsion_free()) return frobenius_ghost(f, n);
  return frobenius_resultant(f, n);
}

WittSeries verschiebung(const WittSeries& f, unsigned long n) {
  if (n == 0) throw DomainError("Verschiebung index must be positive");
  const Ring& r = *f.ring();
  std::vector<Elem> c(f.precision() * n, r.zero());
  for (std::size_t k = 1; k <= f.precision(); ++k) c[k * n - 1] = f.coefficients()[k - 1];
  return WittSeries(f.ring(), std::move(c));
}

// ---------------------------------------------------------------- text

std::string format_series(const WittSeries& f, bool with_precision) {
  std::string s = format_poly(f.as_poly());
  if (with_precision) s += "; prec=" + std::to_string(f.precision());
  return s;
}

namespace {
std::string trim_copy(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim_copy(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim_copy(s.substr(start)));
  return out;
}
}  // namespace

WittSeries parse_series(const RingPtr& ring, std::string_view text, std::size_t default_precision) {
  auto items = split_top_level(text, ',');
  if (items.size() > 1) {
    std::vector<Elem> c;
    for (const auto& it : items) c.push_back(ring->parse(it));
    if (!ring->is_one(c[0])) throw ParseError("series list must start with a_0 = 1", 0);
    c.erase(c.begin());
    return WittSeries(ring, std::move(c));
  }
  auto semi = text.find(';');
  std::string_view expr = text.substr(0, semi);
  std::size_t prec = default_precision;
  bool explicit_prec = false;
  if (semi != std::string_view::npos) {
    std::string tail = trim_copy(text.substr(semi + 1));
    if (tail.rfind("prec=", 0) != 0) throw ParseError("expected 'prec=N' after ';'", semi + 1);
    try {
      std::size_t used = 0;
      long v = std::stol(tail.substr(5), &used);
      if (used != tail.size() - 5 || v < 1) throw std::invalid_argument("prec");
      prec = static_cast<std::size_t>(v);
      explicit_prec = true;
    } catch (const std::exception&) {
      throw ParseError("precision must be a positive integer", semi + 1);
    }
  }
  auto [p, q] = parse_t_fraction(ring, expr);
  if (!explicit_prec && q.is_one()) prec = std::max<std::size_t>(prec, static_cast<std::size_t>(std::max(1L, p.degree())));
  return expand_fraction(p, q, prec);
}

WittSeries expand_fraction(const Poly& p, const Poly& q, std::size_t n) {
  require_same_ring(p, q);
  const Ring& r = *p.ring();
  if (!r.is_one(p.coeff(0)) || !r.is_one(q.coeff(0))) throw DomainError("expansion needs P(0) = Q(0) = 1");
  std::size_t dq = static_cast<std::size_t>(std::max(0L, q.degree()));
  std::vector<Elem> b(n + 1, r.zero());
  for (std::size_t k = 0; k <= n; ++k) {
    Elem acc = p.coeff(k);
    for (std::size_t i = 1; i <= k && i <= dq; ++i) acc = r.sub(acc, r.mul(q.coeff(i), b[k - i]));
    b[k] = std::move(acc);
  }
  return WittSeries(p.ring(), std::vector<Elem>(b.begin() + 1, b.end()));
}

// ---------------------------------------------------------------- table

std::vector<UniversalMulTable::Partition> UniversalMulTable::partitions_of(std::size_t n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(static_cast<unsigned char>(p));
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (n == 0) return {Partition{}};
  if (n > 255) throw DomainError("table precision limited to 255");
  rec(rec, n, n);
  return out;
}

namespace {

using Partition = UniversalMulTable::Partition;
using Level = UniversalMulTable::Level;

struct Index {
  std::vector<std::vector<Partition>> parts;  // parts[n]
  std::vector<std::map<Partition, std::size_t>> pos;

  explicit Index(std::size_t n) : parts(n + 1), pos(n + 1) {
    for (std::size_t k = 0; k <= n; ++k) {
      parts[k] = UniversalMulTable::partitions_of(k);
      for (std::size_t i = 0; i < parts[k].size(); ++i) pos[k][parts[k][i]] = i;
    }
  }
  std::size_t merged(std::size_t k, std::size_t i, std::size_t l, std::size_t j) const {
    Partition m;
    m.reserve(parts[k][i].size() + parts[l][j].size());
    std::merge(parts[k][i].begin(), parts[k][i].end(), parts[l][j].begin(), parts[l][j].end(), std::back_inserter(m),
               std::greater<>());
    return pos[k + l].at(m);
  }
  void attach_split(Level& lv) const {
    lv.split.clear();
    for (const auto& lam : lv.partitions) {
      Partition tail(lam.begin() + 1, lam.end());
      lv.split.emplace_back(lam[0], pos[lv.n - lam[0]].at(tail));
    }
  }
};

}  // namespace

std::vector<std::shared_ptr<const Level>> UniversalMulTable::generate(std::size_t n) {
  Index idx(n);
  // Integer ghost polynomials w_k(X), isobaric of weight k.
  std::vector<std::vector<mpz_class>> w(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    w[k].assign(idx.parts[k].size(), 0);
    w[k][idx.pos[k].at(Partition{static_cast<unsigned char>(k)})] -= static_cast<unsigned long>(k);
    for (std::size_t i = 1; i < k; ++i) {
      // w_i * X_{k-i}
      std::size_t single = 0;  // index of the partition (k-i) in P(k-i)
      for (std::size_t a = 0; a < idx.parts[i].size(); ++a) {
        if (w[i][a] == 0) continue;
        w[k][idx.merged(i, a, k - i, single)] -= w[i][a];
      }
    }
  }
  // z_n = -(G_n + sum_{k<n} G_k z_{n-k}) / n with G_k = w_k (x) w_k.
  std::vector<std::vector<mpz_class>> z(n + 1);
  std::vector<std::shared_ptr<const Level>> out;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t pm = idx.parts[m].size();
    std::vector<mpz_class> acc(pm * pm, 0);
    for (std::size_t i = 0; i < pm; ++i)
      for (std::size_t j = 0; j < pm; ++j) acc[i * pm + j] = w[m][i] * w[m][j];
    for (std::size_t k = 1; k < m; ++k) {
      std::size_t pk = idx.parts[k].size(), pr = idx.parts[m - k].size();
      std::vector<std::size_t> mi(pk * pr);
      for (std::size_t a = 0; a < pk; ++a)
        for (std::size_t b = 0; b < pr; ++b) mi[a * pr + b] = idx.merged(k, a, m - k, b);
      for (std::size_t a1 = 0; a1 < pk; ++a1)
        for (std::size_t a2 = 0; a2 < pk; ++a2) {
          mpz_class g = w[k][a1] * w[k][a2];
          if (g == 0) continue;
          for (std::size_t b1 = 0; b1 < pr; ++b1)
            for (std::size_t b2 = 0; b2 < pr; ++b2) {
              const mpz_class& zz = z[m - k][b1 * pr + b2];
              if (zz == 0) continue;
              mpz_class& t = acc[mi[a1 * pr + b1] * pm + mi[a2 * pr + b2]];
              mpz_addmul(t.get_mpz_t(), g.get_mpz_t(), zz.get_mpz_t());
            }
        }
    }
    for (auto& v : acc) {
      if (!mpz_divisible_ui_p(v.get_mpz_t(), m)) throw InternalError("universal product is not integral");
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), m);
      v = -v;
    }
    z[m] = acc;
    auto lv = std::make_shared<Level>();
    lv->n = m;
    lv->partitions = idx.parts[m];
    lv->c = std::move(acc);
    idx.attach_split(*lv);
    out.push_back(std::move(lv));
  }
  return out;
}

UniversalMulTable& UniversalMulTable::instance() {
  static UniversalMulTable table;
  return table;
}

void UniversalMulTable::ensure(std::size_t n) {
  std::lock_guard<std::mutex> lock(mu_);
  if (levels_.size() >= n) return;
  levels_ = generate(std::max(n, kShippedPrecision));
}

std::shared_ptr<const Level> UniversalMulTable::level(std::size_t n) {
  if (n == 0) throw DomainError("table levels start at 1");
  ensure(n);
  std::lock_guard<std::mutex> lock(mu_);
  return levels_[n - 1];
}

std::size_t UniversalMulTable::available() const {
  std::lock_guard<std::mutex> lock(mu_);
  return levels_.size();
}

void UniversalMulTable::save(std::ostream& out, std::size_t n) {
  ensure(n);
  out << kFileHeader << "\nN " << n << "\n";
  for (std::size_t m = 1; m <= n; ++m) {
    auto lv = level(m);
    std::size_t p = lv->partitions.size();
    out << "level " << m << " " << p << "\n";
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) out << (j ? " " : "") << lv->at(i, j).get_str();
      out << "\n";
    }
  }
}

void UniversalMulTable::load(std::istream& in, bool verify) {
  std::string line;
  if (!std::getline(in, line) || line != kFileHeader) throw ParseError("not a ratwitt-multable v1 file", 0);
  std::string tag;
  std::size_t n = 0;
  if (!(in >> tag >> n) || tag != "N" || n == 0) throw ParseError("missing precision line", 0);
  std::vector<std::shared_ptr<const Level>> loaded;
  Index idx(n);
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t lm = 0, p = 0;
    if (!(in >> tag >> lm >> p) || tag != "level" || lm != m) throw ParseError("bad level header", m);
    auto lv = std::make_shared<Level>();
    lv->n = m;
    lv->partitions = partitions_of(m);
    if (lv->partitions.size() != p) throw ParseError("partition count mismatch", m);
    lv->c.resize(p * p);
    for (auto& v : lv->c) {
      std::string s;
      if (!(in >> s) || v.set_str(s, 10) != 0) throw ParseError("bad table entry", m);
    }
    idx.attach_split(*lv);
    loaded.push_back(std::move(lv));
  }
  if (verify) {
    auto fresh = generate(n);
    for (std::size_t m = 0; m < n; ++m)
      if (fresh[m]->c != loaded[m]->c) throw ParseError("table file disagrees with regeneration", m + 1);
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (loaded.size() > levels_.size()) levels_ = std::move(loaded);
}

}  // namespace ratwitt
