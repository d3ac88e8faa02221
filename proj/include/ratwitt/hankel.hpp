#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "ratwitt/matrix.hpp"
#include "ratwitt/ratwitt.hpp"
#include "ratwitt/wittseries.hpp"

namespace ratwitt {

// Order m Hankel matrix (a_{i+j}), 0 <= i,j < m, with a_0 = 1. Needs
// 2(m-1) <= N.
Matrix hankel_view(const WittSeries& f, std::size_t m);
// Largest m with 2(m-1) <= N.
inline std::size_t max_view_order(std::size_t precision) { return precision / 2 + 1; }

struct HankelRank {
  // Rank of the largest view when it is below the view order; empty when the
  // view has full rank, so the rank exceeds what the precision can show.
  std::optional<std::size_t> rank;
  std::size_t view_order = 0;
  std::size_t precision = 0;
  // 2r > N - 1: fewer than 2r coefficients past a_0 back the answer.
  bool truncation_limited = false;
  std::string text() const;
};

// Over a field.
HankelRank hankel_rank_field(const WittSeries& f);
// Exact rank of a rational Witt vector over a field; equals its bound.
std::size_t hankel_rank_field(const RatWitt& f);

struct WjVerdict {
  bool member = false;
  std::size_t view_order = 0;
  // The view holds (n+2) x (n+2) minors, i.e. N >= 2n+2. Verdicts on series
  // expanded from a rational vector of bound <= n+1 are then exact.
  bool conclusive = false;
};

// All (n+1)-minors of the largest in-precision view vanish. Fields use rank
// (a vectorized mod-p elimination over prime fields), other domains rank in
// the fraction field, rings with zero divisors enumerate minors.
bool wj_member(const WittSeries& f, std::size_t n);
WjVerdict wj_member_qualified(const WittSeries& f, std::size_t n);

// Least-degree P/Q over a field with bound <= r matching a_1..a_N, reduced
// and normalized to Q(0) = 1. Needs N >= 2r - 1; throws PrecisionError
// below that and ReconstructionError when no representative exists.
std::pair<Poly, Poly> kronecker_reconstruct_poly(const WittSeries& f, std::size_t r);
RatWitt kronecker_reconstruct(const WittSeries& f, std::size_t r);
// Over a domain A: reconstruct over Frac(A) and return the A-representative.
// Strong Fatou rings only; throws DomainError when the reduced form leaves
// A[T].
RatWitt reconstruct_over(const WittSeries& f, std::size_t r);

// Generalized Laplace expansion of an nk x nk determinant into signed
// k-fold products of n x n minors on row blocks, compared with det.
struct MinorDecomposition {
  bool equal = false;
  Elem direct;
  Elem expansion;
  std::size_t terms = 0;  // number of products summed
};
MinorDecomposition minor_decomposition_check(const Matrix& m, std::size_t n, std::size_t k);

// For f over Dual(B) with real part f': f' in W_J^{<n} implies f in
// W_J^{<2n}. Needs precision >= 4n - 2 to see all 2n-minors.
struct NilpotentBoundCheck {
  bool premise = false;     // f' has rank <= n - 1
  bool conclusion = false;  // f has rank <= 2n - 1
  bool pass() const { return !premise || conclusion; }
};
NilpotentBoundCheck nilpotent_rank_bound_check(const WittSeries& f, std::size_t n);

// De-interleaves g = V_N(f). Empty f when some a_i with N not dividing i is
// non-zero.
struct VerschiebungSection {
  std::optional<WittSeries> f;
  bool g_member = false;
  bool f_member = false;
  bool consistent() const { return !f || !g_member || f_member; }
};
VerschiebungSection verschiebung_section(const WittSeries& g, unsigned long n_shift, std::size_t n);

}  // namespace ratwitt
