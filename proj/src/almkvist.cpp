#include "ratwitt/almkvist.hpp"

#include <numeric>

namespace ratwitt {

EndoModule::EndoModule(Matrix m) : phi(std::move(m)) {
  if (!phi.square()) throw DomainError("endomorphism matrix must be square");
}

Poly char_poly(const EndoModule& m) {
  // det(xI - phi) = sum c_k x^{n-k}, so det(1 - T phi) = sum c_k T^k.
  return Poly(m.ring(), char_poly_berkowitz(m.phi));
}

RatWitt char_map(const EndoModule& m) { return RatWitt::make(char_poly(m)); }

EndoModule oracle_direct_sum(const EndoModule& a, const EndoModule& b) {
  require_same_ring(a.ring(), b.ring());
  std::size_t n = a.rank(), m = b.rank();
  Matrix s(a.ring(), n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a.phi(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b.phi(i, j);
  return EndoModule(std::move(s));
}

EndoModule oracle_tensor(const EndoModule& a, const EndoModule& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& r = *a.ring();
  std::size_t n = a.rank(), m = b.rank();
  Matrix t(a.ring(), n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) t(i * m + k, j * m + l) = r.mul(a.phi(i, j), b.phi(k, l));
  return EndoModule(std::move(t));
}

EndoModule oracle_frobenius(const EndoModule& m, unsigned long n) {
  if (n == 0) throw DomainError("Frobenius index must be positive");
  return EndoModule(m.phi.pow(n));
}

EndoModule oracle_verschiebung(const EndoModule& m, unsigned long n) {
  if (n == 0) throw DomainError("Verschiebung index must be positive");
  const Ring& r = *m.ring();
  std::size_t d = m.rank();
  Matrix v(m.ring(), n * d, n * d);
  for (std::size_t b = 0; b + 1 < n; ++b)
    for (std::size_t i = 0; i < d; ++i) v((b + 1) * d + i, b * d + i) = r.one();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) v(i, (n - 1) * d + j) = m.phi(i, j);
  return EndoModule(std::move(v));
}

bool ses_additivity_check(const EndoModule& m, std::size_t k) {
  std::size_t n = m.rank();
  if (k > n) throw DomainError("block size exceeds the matrix size");
  const Ring& r = *m.ring();
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!r.is_zero(m.phi(i, j))) throw DomainError("matrix is not block upper triangular for the given split");
  std::vector<std::size_t> top(k), bottom(n - k);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), k);
  EndoModule a(m.phi.submatrix(top, top)), b(m.phi.submatrix(bottom, bottom));
  return char_map(m) == rw_add(char_map(a), char_map(b));
}

}  // namespace ratwitt
