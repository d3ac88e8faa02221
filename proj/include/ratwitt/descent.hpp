#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratwitt/monoid.hpp"
#include "ratwitt/ratwitt.hpp"

namespace ratwitt {

// L (x)_K L ~ L^n for K = GF(q), L = GF(q^n), via a (x) b -> (a s^j(b))_j
// with s the q-power Frobenius of L. The constructor verifies that s fixes
// the image of K, s^n = id with s^0..s^{n-1} distinct, and that the Moore
// matrix (s^j(x^i)) of the basis 1, x, .., x^{n-1} is invertible.
class TensorSplit {
 public:
  TensorSplit(unsigned long p, unsigned m, unsigned n);

  const RingPtr& base() const { return k_; }
  const RingPtr& extension() const { return l_; }
  const FieldEmbedding& embedding() const { return embed_; }
  unsigned degree() const { return n_; }
  // s^j on L.
  Elem sigma(const Elem& a, unsigned j) const;
  // Image of a (x) b in factor j.
  Elem factor(const Elem& a, const Elem& b, unsigned j) const;
  // Re-runs the construction checks.
  bool verify() const;
  // a^q = a, i.e. a lies in the image of K.
  bool in_base(const Elem& a) const;

 private:
  unsigned long p_;
  unsigned m_, n_;
  RingPtr k_, l_;
  FieldEmbedding embed_;
  mpz_class q_;
};

// The two images of f in prod_j W_rat(L): (f)_j and (s^j f)_j.
struct EqualizerReport {
  bool equal = false;             // the images agree
  bool coefficients_in_base = false;  // reduced P, Q have coefficients in K
  bool consistent() const { return equal == coefficients_in_base; }
};
EqualizerReport equalizer_check(const RatWitt& f, const TensorSplit& split);

struct GaloisInvariantsReport {
  bool splits = false;
  std::optional<FormalSum> preimage;  // u with omega(u) = f over L
  bool fixed = false;  // u is Frobenius fixed
  bool omega_matches = false;
  bool pass() const { return splits && fixed && omega_matches; }
};
// f over K: its preimage in the monoid algebra of L is Frobenius fixed.
GaloisInvariantsReport galois_invariants_check(const RatWitt& f, const TensorSplit& split);

struct FixedSumsReport {
  std::size_t checked = 0;
  bool pass = true;
  std::string counterexample;
};
// Converse direction: every Frobenius-fixed sum over L with support at most
// `support_bound` and multiplicities in {-2, -1, 1, 2} on whole orbits has
// omega image with coefficients in K.
FixedSumsReport fixed_sums_descend(const TensorSplit& split, std::size_t support_bound);

// Frobenius orbits of L^* under s, each as its sorted element list.
std::vector<std::vector<Elem>> frobenius_orbits(const TensorSplit& split);

}  // namespace ratwitt
