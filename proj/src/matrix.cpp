#include "ratwitt/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ratwitt {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_->zero()) {}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring->one();
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_->add(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
  Matrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem& x = (*this)(i, k);
      if (ring_->is_zero(x)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = ring_->add(out(i, j), ring_->mul(x, o(k, j)));
    }
  return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

Matrix Matrix::pow(unsigned long n) const {
  if (!square()) throw DomainError("power of a non-square matrix");
  Matrix result = identity(ring_, rows_), base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!same_ring(a.ring_, b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!a.ring_->eq(a.a_[i], b.a_[i])) return false;
  return true;
}

namespace {
void require_square(const Matrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
}

constexpr std::size_t kLaplaceLimit = 12;
}  // namespace

Elem det(const Matrix& m) {
  require_square(m);
  const Ring& r = *m.ring();
  if (m.rows() == 0) return r.one();
  if (r.is_field()) return det_gauss(m);
  if (r.is_domain()) return det_bareiss(m);
  if (m.rows() <= kLaplaceLimit) return det_laplace(m);
  return det_berkowitz(m);
}

Elem det_gauss(const Matrix& m0) {
  require_square(m0);
  const Ring& r = *m0.ring();
  Matrix m = m0;
  std::size_t n = m.rows();
  Elem d = r.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && r.is_zero(m(p, c))) ++p;
    if (p == n) return r.zero();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = r.neg(d);
    }
    d = r.mul(d, m(c, c));
    Elem inv = *r.inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (r.is_zero(m(i, c))) continue;
      Elem f = r.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = r.sub(m(i, j), r.mul(f, m(c, j)));
    }
  }
  return d;
}

Elem det_bareiss(const Matrix& m0) {
  require_square(m0);
  const Ring& r = *m0.ring();
  Matrix m = m0;
  std::size_t n = m.rows();
  if (n == 0) return r.one();
  bool negate = false;
  Elem prev = r.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (r.is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && r.is_zero(m(p, k))) ++p;
      if (p == n) return r.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Elem num = r.sub(r.mul(m(i, j), m(k, k)), r.mul(m(i, k), m(k, j)));
        auto q = r.divide_exact(num, prev);
        if (!q) throw InternalError("Bareiss division was not exact in " + r.descriptor());
        m(i, j) = *q;
      }
      m(i, k) = r.zero();
    }
    prev = m(k, k);
  }
  Elem d = m(n - 1, n - 1);
  return negate ? r.neg(d) : d;
}

Elem det_laplace(const Matrix& m) {
  require_square(m);
  const Ring& r = *m.ring();
  std::size_t n = m.rows();
  if (n > 24) throw DomainError("Laplace expansion limited to 24x24");
  // f[mask] = det of rows 0..|mask|-1 against the columns in mask.
  std::vector<Elem> f(std::size_t{1} << n, r.zero());
  f[0] = r.one();
  for (std::size_t mask = 1; mask < f.size(); ++mask) {
    int size = __builtin_popcountll(mask);
    std::size_t row = static_cast<std::size_t>(size - 1);
    Elem acc = r.zero();
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const Elem& a = m(row, j);
      const Elem& sub = f[mask ^ (std::size_t{1} << j)];
      if (!r.is_zero(a) && !r.is_zero(sub)) {
        Elem t = r.mul(a, sub);
        acc = ((static_cast<int>(row) + pos) % 2) ? r.sub(acc, t) : r.add(acc, t);
      }
      ++pos;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

std::vector<Elem> char_poly_berkowitz(const Matrix& m) {
  require_square(m);
  const Ring& r = *m.ring();
  std::size_t n = m.rows();
  if (n == 0) return {r.one()};
  // vect holds det(xI - A_k) for the leading k x k block, highest degree first.
  std::vector<Elem> vect{r.one(), r.neg(m(0, 0))};
  for (std::size_t k = 1; k < n; ++k) {
    // Leading block [[M, C], [R, a]] with M of size k.
    std::vector<Elem> c(k + 2, r.zero());
    c[0] = r.one();
    c[1] = r.neg(m(k, k));
    std::vector<Elem> v(k);  // M^i C
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t p = 2; p <= k + 1; ++p) {
      Elem dot = r.zero();
      for (std::size_t j = 0; j < k; ++j) dot = r.add(dot, r.mul(m(k, j), v[j]));
      c[p] = r.neg(dot);
      if (p == k + 1) break;
      std::vector<Elem> w(k, r.zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) w[i] = r.add(w[i], r.mul(m(i, j), v[j]));
      v = std::move(w);
    }
    std::vector<Elem> next(k + 2, r.zero());
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) next[i] = r.add(next[i], r.mul(c[i - j], vect[j]));
    vect = std::move(next);
  }
  return vect;
}

Elem det_berkowitz(const Matrix& m) {
  std::vector<Elem> vect = char_poly_berkowitz(m);
  std::size_t n = m.rows();
  return n % 2 ? m.ring()->neg(vect[n]) : vect[n];
}

Elem det_leibniz(const Matrix& m) {
  require_square(m);
  const Ring& r = *m.ring();
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem total = r.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem t = r.one();
    for (std::size_t i = 0; i < n; ++i) t = r.mul(t, m(i, perm[i]));
    total = inversions % 2 ? r.sub(total, t) : r.add(total, t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  const Ring& r = *m.ring();
  if (!r.is_field()) throw DomainError("row reduction needs a field, got " + r.descriptor());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && r.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Elem inv = *r.inverse(m(row, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = r.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || r.is_zero(m(i, c))) continue;
      Elem f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = r.sub(m(i, j), r.mul(f, m(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}
}  // namespace

std::size_t rank_field(const Matrix& m0) {
  Matrix m = m0;
  return rref(m, m.cols()).size();
}

std::optional<std::vector<Elem>> solve_field(const Matrix& a, const std::vector<Elem>& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  const Ring& r = *a.ring();
  Matrix aug(a.ring(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (!r.is_zero(aug(i, a.cols()))) return std::nullopt;
  std::vector<Elem> x(a.cols(), r.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

Matrix parse_matrix(const RingPtr& ring, std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  std::vector<std::vector<Elem>> rows;
  expect('[');
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      expect('[');
      std::vector<Elem> row;
      for (;;) {
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
          char c = text[pos];
          if (c == '(') ++depth;
          if (c == ')') --depth;
          if (depth == 0 && (c == ',' || c == ']')) break;
          ++pos;
        }
        if (pos >= text.size()) throw ParseError("unterminated matrix row", pos);
        try {
          row.push_back(ring->parse(text.substr(start, pos - start)));
        } catch (const ParseError& e) {
          throw ParseError(std::string(e.what()) + " in matrix entry", start);
        }
        if (text[pos++] == ']') break;
      }
      if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix rows", pos);
      rows.push_back(std::move(row));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters after matrix", pos);
  std::size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
  std::vector<Elem> entries;
  for (auto& row : rows)
    for (auto& e : row) entries.push_back(std::move(e));
  return Matrix(ring, nr, nc, std::move(entries));
}

std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m.ring()->format(m(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace ratwitt
