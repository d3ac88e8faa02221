#pragma once

#include <cstddef>

#include "ratwitt/matrix.hpp"
#include "ratwitt/ratwitt.hpp"

namespace ratwitt {

// Free module A^n with an endomorphism; n = 0 is the zero object.
struct EndoModule {
  Matrix phi;
  explicit EndoModule(Matrix m);
  const RingPtr& ring() const { return phi.ring(); }
  std::size_t rank() const { return phi.rows(); }
};

// det(1 - T phi) as a polynomial with constant term 1.
Poly char_poly(const EndoModule& m);
// The same polynomial as a rational Witt vector with Q = 1.
RatWitt char_map(const EndoModule& m);

// Block diagonal sum; char_map turns it into Witt addition.
EndoModule oracle_direct_sum(const EndoModule& a, const EndoModule& b);
// Kronecker product; char_map turns it into Witt multiplication.
EndoModule oracle_tensor(const EndoModule& a, const EndoModule& b);
// phi^N; char_map turns it into F_N.
EndoModule oracle_frobenius(const EndoModule& m, unsigned long n);
// A^{nN} with e_i -> e_{i+1} blockwise and the last block mapped to phi on
// the first; char_map turns it into V_N.
EndoModule oracle_verschiebung(const EndoModule& m, unsigned long n);

// For phi block upper triangular with diagonal blocks of sizes k and n - k:
// char_map(phi) equals the Witt sum of the block char maps. Throws
// DomainError when the lower-left block is not zero.
bool ses_additivity_check(const EndoModule& m, std::size_t k);

}  // namespace ratwitt
