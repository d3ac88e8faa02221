#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratwitt/ring.hpp"

namespace ratwitt {

// Coefficient-vector kernels shared by `Poly` and the polynomial-ring
// implementation. Vectors are lowest degree first with no trailing zeros.
namespace coeffs {
using Vec = std::vector<Elem>;

void trim(const Ring& r, Vec& v);
Vec add(const Ring& r, const Vec& a, const Vec& b);
Vec sub(const Ring& r, const Vec& a, const Vec& b);
Vec neg(const Ring& r, const Vec& a);
Vec mul(const Ring& r, const Vec& a, const Vec& b);
Vec scale(const Ring& r, const Vec& a, const Elem& c);
// Product truncated to degrees < n.
Vec mul_trunc(const Ring& r, const Vec& a, const Vec& b, std::size_t n);
Elem eval(const Ring& r, const Vec& a, const Elem& x);
// Quotient and remainder when the leading coefficient of b is a unit.
std::pair<Vec, Vec> divmod(const Ring& r, const Vec& a, const Vec& b);
// Exact quotient over a domain, nullopt when b does not divide a.
std::optional<Vec> divide_exact(const Ring& r, const Vec& a, const Vec& b);
// Monic gcd over a field.
Vec gcd_field(const Ring& r, const Vec& a, const Vec& b);
// gcd over a gcd domain via primitive remainder sequences, normalized so
// the leading coefficient is a canonical associate.
Vec gcd_ufd(const Ring& r, const Vec& a, const Vec& b);
Elem content(const Ring& r, const Vec& a);
}  // namespace coeffs

// Dense univariate polynomial over a ring.
class Poly {
 public:
  static constexpr long kZeroDegree = -1;  // degree of the zero polynomial

  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, std::vector<Elem> coefficients);

  static Poly constant(RingPtr ring, Elem c);
  static Poly monomial(RingPtr ring, Elem c, std::size_t degree);
  // 1 - a*T
  static Poly linear_one_minus(RingPtr ring, const Elem& a);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Elem>& coefficients() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  Elem coeff(std::size_t i) const;  // zero beyond the degree
  const Elem& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Elem& c) const;
  Poly truncated(std::size_t n) const;
  Elem operator()(const Elem& x) const;

  // T -> T^n
  Poly substitute_power(std::size_t n) const;
  // T -> c*T
  Poly substitute_scaled(const Elem& c) const;
  // T^deg * P(1/T)
  Poly reversed() const;
  Poly derivative() const;
  // Map coefficients into another ring.
  template <class F>
  Poly mapped(RingPtr target, F&& f) const {
    std::vector<Elem> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly(std::move(target), std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  RingPtr ring_;
  std::vector<Elem> c_;
};

// Throws RingMismatch unless both polynomials live over the same ring.
void require_same_ring(const Poly& a, const Poly& b);

// Monic gcd over a field; gcd(f, 0) = monic(f). Throws DomainError when the
// coefficient ring is not a field.
Poly poly_gcd(const Poly& f, const Poly& g);
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
Poly monic(const Poly& f);

// Resultant as the determinant of the Sylvester matrix with the rows of `f`
// first: Res(f, g) = lc(f)^deg(g) * prod over roots a of f of g(a).
// Computed without divisions over non-domains. Throws DomainError on a zero
// input.
Elem resultant(const Poly& f, const Poly& g);

// Norm of h(Z) in R[Z]/(m(Z)) for monic m: the determinant of
// multiplication by h. Equals resultant(m, h).
Elem norm_monic(const Poly& m, const Poly& h);

// Lowest-first text form in the variable `var`: "1-5*T+6*T^2".
std::string format_poly(const Poly& p, const std::string& var = "T");
// Highest-first text form used for ring elements: "x^2+x+1".
std::string format_poly_desc(const Ring& base, const std::vector<Elem>& c, const std::string& var);
// True when a formatted element can be used as a factor without parentheses.
bool is_atomic_literal(const std::string& s);

}  // namespace ratwitt
