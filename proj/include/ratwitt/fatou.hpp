#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ratwitt/ratwitt.hpp"
#include "ratwitt/wittseries.hpp"

namespace ratwitt {

enum class FatouClass {
  in_Wrat_A,    // reduced P, Q have coefficients in A
  in_W_A_only,  // series in A[[T]] (to the checked precision) but P, Q are not
  not_in_W_A,   // some series coefficient leaves A
  undetermined  // prefix in A, P or Q outside A[T], precision below 2r + 4
};
const char* fatou_class_name(FatouClass c);

struct CoefficientMembership {
  std::string label;  // "P1", "Q2", ...
  std::string value;
  bool in_ring = false;
};

struct FatouVerdict {
  RingPtr subring;          // A
  Poly p{nullptr}, q{nullptr};  // reduced over K with Q(0) = 1
  std::size_t bound = 0;
  std::size_t precision = 0;  // series coefficients examined
  std::vector<CoefficientMembership> coefficients;
  bool series_prefix_in_ring = false;
  std::size_t first_coefficient_outside = 0;  // index, 0 when none
  FatouClass verdict = FatouClass::undetermined;
  // key=value lines.
  std::string text() const;
};

// The subring A and a vector over K = Frac(A). Membership uses A's pull
// back from K. Precision defaults to max(20, 2r + 4).
FatouVerdict strong_fatou_check(const RingPtr& subring, const RatWitt& f_over_k, std::size_t precision = 0);
// Series input over K is first reconstructed with bound `r`.
FatouVerdict strong_fatou_check(const RingPtr& subring, const WittSeries& f_over_k, std::size_t r);

// (1 - xT + dT^2)/(1 - xT) over K; its coefficients are 1, 0, d, dx, dx^2, ...
struct QuasiIntegralWitness {
  RatWitt f;
  WittSeries series;
};
QuasiIntegralWitness quasi_integral_witness(const RingPtr& k, const Elem& x, const Elem& d, std::size_t n);

struct CicReport {
  bool monsub_not_cic = false;  // y quasi-integral, y not in A, verdict in_W_A_only
  bool integers_consistent = false;
  bool poly_ring_consistent = false;
  std::size_t samples = 0;
  std::vector<std::string> lines;
  bool pass() const { return monsub_not_cic && integers_consistent && poly_ring_consistent; }
};
// MonSub(k) fails the witness test; ZZ and GF(p)[x] pass on `samples`
// random vectors each.
CicReport cic_counterexample_suite(const RingPtr& field, std::size_t samples, std::mt19937_64& rng);

}  // namespace ratwitt
