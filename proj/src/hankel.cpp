#include "ratwitt/hankel.hpp"

#include <algorithm>
#include <numeric>

#include "ratwitt/kernels/modp.hpp"

namespace ratwitt {

namespace {

void require_field(const Ring& r, const char* op) {
  if (!r.is_field()) throw DomainError(std::string(op) + " needs a field, got " + r.descriptor());
}

// Prime field small enough for the vector kernel.
std::optional<std::uint32_t> small_prime_field(const Ring& r) {
  const FiniteFieldRing* ff = as_finite_field(r);
  if (!ff || ff->degree() != 1 || ff->prime() >= kernels::kMaxVectorModulus) return std::nullopt;
  return static_cast<std::uint32_t>(ff->prime());
}

std::size_t rank_over_field(const Matrix& m) {
  if (auto p = small_prime_field(*m.ring())) {
    std::vector<std::uint32_t> a;
    a.reserve(m.entries().size());
    for (const auto& e : m.entries()) a.push_back(static_cast<std::uint32_t>(e.z().get_ui()));
    return kernels::rank_mod_p(std::move(a), m.rows(), m.cols(), *p);
  }
  return rank_field(m);
}

// Visits the size-k subsets of {0..n-1} in lexicographic order until `fn`
// returns false.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool all_minors_vanish(const Matrix& m, std::size_t order) {
  const Ring& r = *m.ring();
  return for_each_subset(m.rows(), order, [&](const std::vector<std::size_t>& rows) {
    return for_each_subset(m.cols(), order, [&](const std::vector<std::size_t>& cols) {
      return r.is_zero(det(m.submatrix(rows, cols)));
    });
  });
}

}  // namespace

Matrix hankel_view(const WittSeries& f, std::size_t m) {
  if (m == 0) return Matrix(f.ring(), 0, 0);
  if (2 * (m - 1) > f.precision())
    throw PrecisionError("Hankel view of order " + std::to_string(m), 2 * (m - 1));
  Matrix h(f.ring(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h(i, j) = f.coeff(i + j);
  return h;
}

std::string HankelRank::text() const {
  if (!rank) return "exceeds precision (full rank " + std::to_string(view_order) + " at prec=" + std::to_string(precision) + ")";
  std::string s = std::to_string(*rank);
  if (truncation_limited) s += " (truncation-limited)";
  return s;
}

HankelRank hankel_rank_field(const WittSeries& f) {
  require_field(*f.ring(), "hankel_rank_field");
  HankelRank out;
  out.precision = f.precision();
  out.view_order = max_view_order(f.precision());
  std::size_t r = rank_over_field(hankel_view(f, out.view_order));
  if (r < out.view_order) {
    out.rank = r;
    out.truncation_limited = 2 * r + 1 > f.precision();
  } else {
    out.truncation_limited = true;
  }
  return out;
}

std::size_t hankel_rank_field(const RatWitt& f) {
  require_field(*f.ring(), "hankel_rank_field");
  // A view of order bound + 1 exceeds the rank.
  std::size_t n = 2 * f.bound();
  HankelRank hr = hankel_rank_field(f.to_series(n));
  if (!hr.rank) throw InternalError("rational vector has full-rank Hankel view beyond its bound");
  return *hr.rank;
}

WjVerdict wj_member_qualified(const WittSeries& f, std::size_t n) {
  WjVerdict v;
  v.view_order = max_view_order(f.precision());
  v.conclusive = f.precision() >= 2 * n + 2;
  if (n + 1 > v.view_order) {
    v.member = true;
    return v;
  }
  Matrix h = hankel_view(f, v.view_order);
  const Ring& r = *f.ring();
  if (r.is_field()) {
    v.member = rank_over_field(h) <= n;
  } else if (RingPtr k = r.is_domain() ? r.fraction_field() : nullptr) {
    std::vector<Elem> e;
    for (const auto& x : h.entries()) e.push_back(r.to_fraction(x));
    v.member = rank_field(Matrix(k, h.rows(), h.cols(), std::move(e))) <= n;
  } else {
    v.member = all_minors_vanish(h, n + 1);
  }
  return v;
}

bool wj_member(const WittSeries& f, std::size_t n) { return wj_member_qualified(f, n).member; }

std::pair<Poly, Poly> kronecker_reconstruct_poly(const WittSeries& f, std::size_t r) {
  require_field(*f.ring(), "kronecker_reconstruct");
  if (r == 0) throw DomainError("reconstruction bound must be positive");
  if (f.precision() + 1 < 2 * r) throw PrecisionError("reconstruction with bound " + std::to_string(r), 2 * r - 1);
  const RingPtr& k = f.ring();
  const Ring& K = *k;
  // Coefficients r..2r-1 of f*Q vanish: sum_{i=1..r} q_i a_{j-i} = -a_j.
  Matrix sys(k, r, r);
  std::vector<Elem> rhs;
  for (std::size_t e = 0; e < r; ++e) {
    std::size_t j = r + e;
    for (std::size_t i = 1; i <= r; ++i) sys(e, i - 1) = f.coeff(j - i);
    rhs.push_back(K.neg(f.coeff(j)));
  }
  auto sol = solve_field(sys, rhs);
  if (!sol) throw ReconstructionError("no rational representative within bound " + std::to_string(r));
  std::vector<Elem> qc{K.one()};
  qc.insert(qc.end(), sol->begin(), sol->end());
  Poly q(k, std::move(qc));
  Poly p = (f.as_poly().truncated(r) * q).truncated(r);
  Poly g = poly_gcd(p, q);
  p = poly_divmod(p, g).first;
  q = poly_divmod(q, g).first;
  Elem inv = *K.inverse(q.coeff(0));
  p = p.scaled(inv);
  q = q.scaled(inv);
  if (!(expand_fraction(p, q, f.precision()) == f))
    throw ReconstructionError("no rational representative within bound " + std::to_string(r));
  return {std::move(p), std::move(q)};
}

RatWitt kronecker_reconstruct(const WittSeries& f, std::size_t r) {
  auto [p, q] = kronecker_reconstruct_poly(f, r);
  return RatWitt::make(std::move(p), std::move(q));
}

RatWitt reconstruct_over(const WittSeries& f, std::size_t r) {
  const RingPtr& a = f.ring();
  if (a->is_field()) return kronecker_reconstruct(f, r);
  RingPtr k = a->is_domain() ? a->fraction_field() : nullptr;
  if (!k) throw DomainError("reconstruction needs a domain, got " + a->descriptor());
  auto [p, q] = kronecker_reconstruct_poly(f.mapped(k, [&](const Elem& c) { return a->to_fraction(c); }), r);
  return RatWitt::from_fraction_field(a, p, q);
}

MinorDecomposition minor_decomposition_check(const Matrix& m, std::size_t n, std::size_t k) {
  if (!m.square() || n == 0 || k == 0 || m.rows() != n * k)
    throw DomainError("minor decomposition needs a square matrix of size n*k");
  const Ring& r = *m.ring();
  MinorDecomposition out;
  out.direct = det(m);
  out.expansion = r.zero();
  const std::size_t size = n * k;
  // Row block b is rows b*n..b*n+n-1; columns are split into ordered blocks.
  std::vector<int> owner(size, -1);
  std::vector<std::vector<std::size_t>> blocks(k);
  std::vector<std::size_t> row_block(n);
  auto sign_of = [&]() {
    std::vector<std::size_t> word;
    for (const auto& b : blocks) word.insert(word.end(), b.begin(), b.end());
    std::size_t inv = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j) inv += word[i] > word[j];
    return inv % 2 == 0;
  };
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == k) {
      Elem term = r.one();
      for (std::size_t i = 0; i < k; ++i) {
        std::iota(row_block.begin(), row_block.end(), i * n);
        term = r.mul(term, det(m.submatrix(row_block, blocks[i])));
      }
      out.expansion = sign_of() ? r.add(out.expansion, term) : r.sub(out.expansion, term);
      ++out.terms;
      return;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < size; ++c)
      if (owner[c] < 0) free.push_back(c);
    for_each_subset(free.size(), n, [&](const std::vector<std::size_t>& pick) {
      blocks[b].clear();
      for (auto i : pick) {
        blocks[b].push_back(free[i]);
        owner[free[i]] = static_cast<int>(b);
      }
      self(self, b + 1);
      for (auto i : pick) owner[free[i]] = -1;
      return true;
    });
  };
  rec(rec, 0);
  out.equal = r.eq(out.direct, out.expansion);
  return out;
}

NilpotentBoundCheck nilpotent_rank_bound_check(const WittSeries& f, std::size_t n) {
  const DualRing* dual = as_dual(*f.ring());
  if (!dual) throw DomainError("nilpotent rank bound is shipped for dual numbers, got " + f.ring()->descriptor());
  if (n == 0) throw DomainError("rank bound index must be positive");
  if (f.precision() < 4 * n - 2) throw PrecisionError("2n-minors of the Hankel view", 4 * n - 2);
  WittSeries reduced = f.mapped(dual->base(), [&](const Elem& c) { return dual->real_part(c); });
  NilpotentBoundCheck out;
  out.premise = wj_member(reduced, n - 1);
  out.conclusion = wj_member(f, 2 * n - 1);
  return out;
}

VerschiebungSection verschiebung_section(const WittSeries& g, unsigned long n_shift, std::size_t n) {
  if (n_shift == 0) throw DomainError("Verschiebung index must be positive");
  const Ring& r = *g.ring();
  VerschiebungSection out;
  std::vector<Elem> c;
  for (std::size_t i = 1; i <= g.precision(); ++i) {
    if (i % n_shift == 0)
      c.push_back(g.coeff(i));
    else if (!r.is_zero(g.coeff(i)))
      return out;
  }
  if (c.empty()) throw PrecisionError("Verschiebung section", n_shift);
  out.f = WittSeries(g.ring(), std::move(c));
  out.g_member = wj_member(g, n);
  out.f_member = wj_member(*out.f, n);
  return out;
}

}  // namespace ratwitt
