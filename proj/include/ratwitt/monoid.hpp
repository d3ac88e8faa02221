#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratwitt/ratwitt.hpp"

namespace ratwitt {

// Element sum n_a (a) of the reduced monoid algebra: the class of (0) is 0.
// Terms are keyed by the element's literal, so iteration order is
// lexicographic on literals, and zero multiplicities are dropped.
class FormalSum {
 public:
  explicit FormalSum(RingPtr ring);
  // n * (a); zero when a = 0 or n = 0.
  static FormalSum term(RingPtr ring, const Elem& a, long n = 1);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  // (element, multiplicity) in literal order.
  std::vector<std::pair<Elem, long>> terms() const;
  long multiplicity(const Elem& a) const;

  FormalSum operator+(const FormalSum& o) const;
  FormalSum operator-(const FormalSum& o) const;
  FormalSum operator-() const;
  // Bilinear extension of (a)(b) = (ab).
  FormalSum operator*(const FormalSum& o) const;
  FormalSum scaled(long n) const;
  // Sum of n_a (f(a)) for a multiplicative map f into `target`.
  FormalSum mapped(RingPtr target, const std::function<Elem(const Elem&)>& f) const;

  friend bool operator==(const FormalSum& a, const FormalSum& b);

 private:
  void add_term(const Elem& a, long n);
  RingPtr ring_;
  std::map<std::string, std::pair<Elem, long>> terms_;
};

// "2*(3) - (5) + (x+1)"; "0" for the zero sum.
std::string format_formal_sum(const FormalSum& u);
FormalSum parse_formal_sum(const RingPtr& ring, std::string_view text);

// Product of (1 - aT)^{n_a}; negative multiplicities go to the denominator.
RatWitt omega(const FormalSum& u);

// Non-zero sums with Witt-zero image, built from the ring's nilpotent and
// zero-divisor certificates: 2(b) - (2b) for b^2 = 0, and (d+e) - (d) - (e)
// for de = 0. Each is checked before it is returned.
std::vector<FormalSum> kernel_witnesses(const RingPtr& ring);

// A field embedding GF(q) -> GF(q^k) determined by the image of the
// generator of GF(q).
struct FieldEmbedding {
  RingPtr source, target;
  Elem generator_image;
  Elem operator()(const Elem& a) const;
};
// Sends the generator to x^{(p^{mk}-1)/(p^m-1)} when that is a root of the
// source modulus (as for compatible default tables), else to the least root.
FieldEmbedding embed_finite_field(const RingPtr& source, const RingPtr& target);

// Inverse roots of P and Q of f over GF(q) inside `target`, or nullopt
// when they do not all lie there.
std::optional<FormalSum> roots_preimage(const RatWitt& f, const FieldEmbedding& e);

struct SplitPreimage {
  unsigned k = 1;
  FieldEmbedding embedding;
  FormalSum u;  // omega(u) = f over GF(q^k)
};
// Least k such that P*, Q* split over GF(q^k).
SplitPreimage split_preimage(const RatWitt& f);

// Base change of a rational vector along a field embedding.
RatWitt base_change(const RatWitt& f, const FieldEmbedding& e);

}  // namespace ratwitt
