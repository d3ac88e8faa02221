#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ratwitt/poly.hpp"
#include "ratwitt/ring.hpp"

namespace ratwitt {

// Truncated element 1 + a_1 T + ... + a_N T^N of W(A). Witt addition is the
// power-series product, the Witt zero is 1 and the Witt unit is 1 - T.
class WittSeries {
 public:
  // `coefficients` holds a_1..a_N; the precision is N.
  WittSeries(RingPtr ring, std::vector<Elem> coefficients);

  static WittSeries zero(RingPtr ring, std::size_t n);
  static WittSeries one(RingPtr ring, std::size_t n);
  // [a] = 1 - aT
  static WittSeries teichmuller(RingPtr ring, const Elem& a, std::size_t n);
  // Truncation of a polynomial with constant term 1.
  static WittSeries from_poly(const Poly& p, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t precision() const { return a_.size(); }
  // a_n for 0 <= n <= N, with a_0 = 1.
  Elem coeff(std::size_t n) const;
  const std::vector<Elem>& coefficients() const { return a_; }
  // 1 + a_1 T + ... + a_N T^N
  Poly as_poly() const;
  WittSeries truncated(std::size_t n) const;
  // Coefficients mapped into another ring by `f`.
  template <class F>
  WittSeries mapped(RingPtr target, F&& f) const {
    std::vector<Elem> out;
    out.reserve(a_.size());
    for (const auto& c : a_) out.push_back(f(c));
    return WittSeries(std::move(target), std::move(out));
  }

  // Same ring, same precision, same coefficients.
  friend bool operator==(const WittSeries& a, const WittSeries& b);

 private:
  RingPtr ring_;
  std::vector<Elem> a_;
};

// Results carry precision min(N_f, N_g).
WittSeries witt_add(const WittSeries& f, const WittSeries& g);
WittSeries witt_neg(const WittSeries& f);
WittSeries witt_sub(const WittSeries& f, const WittSeries& g);
WittSeries witt_mul(const WittSeries& f, const WittSeries& g);
// f + f + ... + f (n times); n = 0 gives the zero.
WittSeries witt_multiple(const WittSeries& f, unsigned long n);

// F_N with output precision floor(N_f / N). Uses ghost decimation over
// torsion-free rings and the resultant otherwise.
WittSeries frobenius(const WittSeries& f, unsigned long n);
// F_N(f)(T^N) = Res_Z(Z^N - T^N, f(Z)) computed over A[T]; any ring.
WittSeries frobenius_resultant(const WittSeries& f, unsigned long n);
// w_n(F_N f) = w_{Nn}(f); torsion-free rings only.
WittSeries frobenius_ghost(const WittSeries& f, unsigned long n);
// V_N(f)(T) = f(T^N) with output precision N * N_f.
WittSeries verschiebung(const WittSeries& f, unsigned long n);

// a_1..a_n of P * Q^{-1} for P(0) = Q(0) = 1.
WittSeries expand_fraction(const Poly& p, const Poly& q, std::size_t n);

// Ghost components w_1..w_N defined by -T f'/f = sum w_n T^n. Throws
// DomainError unless the ring is torsion-free.
std::vector<Elem> ghost(const WittSeries& f);
// Inverse of `ghost`; needs exact division by 1..N in the ring.
WittSeries from_ghost(const RingPtr& ring, const std::vector<Elem>& w);

// "1-6*T; prec=4". With `with_precision` false only the polynomial part.
std::string format_series(const WittSeries& f, bool with_precision = true);
// "<T-expression> [; prec=N]" or a comma list a_0,a_1,..,a_N with a_0 = 1.
// Rational expressions are expanded; `default_precision` applies when no
// precision is given.
WittSeries parse_series(const RingPtr& ring, std::string_view text, std::size_t default_precision);

// Coefficient n of f (.) g as a bihomogeneous integer polynomial
//   sum over partitions lambda, mu of n of c[lambda][mu] x_lambda y_mu,
// where x_lambda is the product of a_{lambda_i}.
class UniversalMulTable {
 public:
  using Partition = std::vector<unsigned char>;  // parts in decreasing order

  struct Level {
    std::size_t n;
    std::vector<Partition> partitions;
    std::vector<mpz_class> c;  // row-major p(n) x p(n)
    // For partition i: its largest part and the index of the remaining
    // parts among the partitions of n minus that part.
    std::vector<std::pair<std::size_t, std::size_t>> split;
    const mpz_class& at(std::size_t i, std::size_t j) const { return c[i * partitions.size() + j]; }
  };

  static constexpr std::size_t kShippedPrecision = 16;
  static constexpr const char* kFileHeader = "ratwitt-multable v1";

  // Process-wide table, lazily extended. Concurrent extension is serialized
  // and deterministic.
  static UniversalMulTable& instance();

  std::shared_ptr<const Level> level(std::size_t n);
  std::size_t available() const;
  // Builds levels 1..n if needed.
  void ensure(std::size_t n);

  void save(std::ostream& out, std::size_t n);
  // Loads levels from a table file; throws ParseError on a malformed or
  // inconsistent file. Each loaded level is checked against regeneration
  // when `verify` is set.
  void load(std::istream& in, bool verify = false);

  // Partitions of n in the canonical order used by the table.
  static std::vector<Partition> partitions_of(std::size_t n);

  // Fresh table generation (no cache) for tests.
  static std::vector<std::shared_ptr<const Level>> generate(std::size_t n);

 private:
  UniversalMulTable() = default;
  mutable std::mutex mu_;
  std::vector<std::shared_ptr<const Level>> levels_;  // levels_[n-1]
};

}  // namespace ratwitt
