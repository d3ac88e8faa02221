#include "ratwitt/monoid.hpp"

#include <cctype>

namespace ratwitt {

FormalSum::FormalSum(RingPtr ring) : ring_(std::move(ring)) {}

FormalSum FormalSum::term(RingPtr ring, const Elem& a, long n) {
  FormalSum u(std::move(ring));
  u.add_term(a, n);
  return u;
}

void FormalSum::add_term(const Elem& a, long n) {
  if (n == 0 || ring_->is_zero(a)) return;
  std::string key = ring_->format(a);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::make_pair(a, n));
    return;
  }
  it->second.second += n;
  if (it->second.second == 0) terms_.erase(it);
}

std::vector<std::pair<Elem, long>> FormalSum::terms() const {
  std::vector<std::pair<Elem, long>> out;
  for (const auto& [key, t] : terms_) out.push_back(t);
  return out;
}

long FormalSum::multiplicity(const Elem& a) const {
  auto it = terms_.find(ring_->format(a));
  return it == terms_.end() ? 0 : it->second.second;
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
  require_same_ring(ring_, o.ring_);
  FormalSum u = *this;
  for (const auto& [key, t] : o.terms_) u.add_term(t.first, t.second);
  return u;
}

FormalSum FormalSum::operator-() const { return scaled(-1); }

FormalSum FormalSum::operator-(const FormalSum& o) const { return *this + (-o); }

FormalSum FormalSum::operator*(const FormalSum& o) const {
  require_same_ring(ring_, o.ring_);
  FormalSum u(ring_);
  for (const auto& [ka, a] : terms_)
    for (const auto& [kb, b] : o.terms_) u.add_term(ring_->mul(a.first, b.first), a.second * b.second);
  return u;
}

FormalSum FormalSum::scaled(long n) const {
  FormalSum u(ring_);
  for (const auto& [key, t] : terms_) u.add_term(t.first, t.second * n);
  return u;
}

FormalSum FormalSum::mapped(RingPtr target, const std::function<Elem(const Elem&)>& f) const {
  FormalSum u(std::move(target));
  for (const auto& [key, t] : terms_) u.add_term(f(t.first), t.second);
  return u;
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [key, t] : a.terms_) {
    auto it = b.terms_.find(key);
    if (it == b.terms_.end() || it->second.second != t.second) return false;
  }
  return true;
}

std::string format_formal_sum(const FormalSum& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, n] : u.terms()) {
    long mag = n < 0 ? -n : n;
    if (first)
      out += n < 0 ? "-" : "";
    else
      out += n < 0 ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "(" + u.ring()->format(a) + ")";
    first = false;
  }
  return out;
}

FormalSum parse_formal_sum(const RingPtr& ring, std::string_view text) {
  FormalSum u(ring);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return u;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) throw ParseError("empty formal sum", pos);
      break;
    }
    long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    long mult = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      mult = std::stol(std::string(text.substr(start, pos - start)));
      skip();
      if (pos >= text.size() || text[pos] != '*') throw ParseError("expected '*' after multiplicity", pos);
      ++pos;
      skip();
    }
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' opening a monoid element", pos);
    std::size_t open = pos++;
    int depth = 1;
    while (pos < text.size() && depth > 0) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", open);
    std::string_view literal = text.substr(open + 1, pos - open - 2);
    Elem a;
    try {
      a = ring->parse(literal);
    } catch (const ParseError& e) {
      throw ParseError("bad element literal '" + std::string(literal) + "': " + e.what(), open + 1 + e.position());
    }
    u = u + FormalSum::term(ring, a, sign * mult);
    first = false;
  }
  return u;
}

RatWitt omega(const FormalSum& u) {
  const RingPtr& r = u.ring();
  Poly p = Poly::constant(r, r->one()), q = p;
  for (const auto& [a, n] : u.terms()) {
    Poly lin = Poly::linear_one_minus(r, a);
    for (long i = 0; i < (n < 0 ? -n : n); ++i) (n > 0 ? p : q) = (n > 0 ? p : q) * lin;
  }
  return RatWitt::make(std::move(p), std::move(q));
}

std::vector<FormalSum> kernel_witnesses(const RingPtr& ring) {
  const Ring& r = *ring;
  std::vector<FormalSum> out;
  auto accept = [&](FormalSum u) {
    if (u.is_zero() || !omega(u).is_witt_zero())
      throw InternalError("kernel witness " + format_formal_sum(u) + " failed verification");
    out.push_back(std::move(u));
  };
  for (const auto& a : r.nilpotents()) {
    Elem b = a;
    while (!r.is_zero(r.mul(b, b))) b = r.mul(b, a);
    accept(FormalSum::term(ring, b, 2) - FormalSum::term(ring, r.add(b, b)));
  }
  for (const auto& [d, e] : r.zero_divisor_pairs())
    accept(FormalSum::term(ring, r.add(d, e)) - FormalSum::term(ring, d) - FormalSum::term(ring, e));
  return out;
}

Elem FieldEmbedding::operator()(const Elem& a) const {
  const FiniteFieldRing* s = as_finite_field(*source);
  const Ring& t = *target;
  Elem acc = t.zero(), power = t.one();
  for (unsigned long c : s->coordinates(a)) {
    acc = t.add(acc, t.mul(t.from_int(static_cast<long>(c)), power));
    power = t.mul(power, generator_image);
  }
  return acc;
}

FieldEmbedding embed_finite_field(const RingPtr& source, const RingPtr& target) {
  const FiniteFieldRing* s = as_finite_field(*source);
  const FiniteFieldRing* t = as_finite_field(*target);
  if (!s || !t) throw DomainError("field embedding needs finite fields");
  if (s->prime() != t->prime() || t->degree() % s->degree() != 0)
    throw DomainError(source->descriptor() + " does not embed in " + target->descriptor());
  FieldEmbedding e{source, target, target->one()};
  if (s->degree() == 1) return e;
  const Ring& tr = *target;
  auto root_of_modulus = [&](const Elem& z) {
    Elem acc = tr.zero();
    const auto& m = s->modulus();
    for (std::size_t i = m.size(); i-- > 0;) acc = tr.add(tr.mul(acc, z), tr.from_int(static_cast<long>(m[i])));
    return tr.is_zero(acc);
  };
  if (t->degree() == s->degree()) {
    std::vector<unsigned long> x(t->degree(), 0);
    x[1] = 1;
    Elem gen = t->from_coordinates(x);
    if (root_of_modulus(gen)) {
      e.generator_image = gen;
      return e;
    }
  } else {
    std::vector<unsigned long> x(t->degree(), 0);
    x[1] = 1;
    mpz_class big, small;
    mpz_ui_pow_ui(big.get_mpz_t(), t->prime(), t->degree());
    mpz_ui_pow_ui(small.get_mpz_t(), s->prime(), s->degree());
    Elem cand = tr.pow(t->from_coordinates(x), mpz_class((big - 1) / (small - 1)));
    if (root_of_modulus(cand)) {
      e.generator_image = cand;
      return e;
    }
  }
  for (const auto& z : tr.elements())
    if (root_of_modulus(z)) {
      e.generator_image = z;
      return e;
    }
  throw InternalError("no root of the source modulus in " + target->descriptor());
}

RatWitt base_change(const RatWitt& f, const FieldEmbedding& e) {
  return RatWitt::make(f.numerator().mapped(e.target, e), f.denominator().mapped(e.target, e));
}

namespace {
// Inverse roots of p (constant term 1) with multiplicity, or nullopt.
std::optional<std::vector<Elem>> inverse_roots(const Poly& p) {
  const RingPtr& t = p.ring();
  std::vector<Elem> roots;
  Poly rest = p.reversed();
  for (const auto& z : t->elements()) {
    if (rest.degree() <= 0) break;
    if (t->is_zero(z)) continue;
    Poly lin(t, {t->neg(z), t->one()});
    while (rest.degree() > 0 && t->is_zero(rest(z))) {
      rest = poly_divmod(rest, lin).first;
      roots.push_back(z);
    }
  }
  if (rest.degree() > 0) return std::nullopt;
  return roots;
}
}  // namespace

std::optional<FormalSum> roots_preimage(const RatWitt& f, const FieldEmbedding& e) {
  if (!same_ring(f.ring(), e.source)) throw RingMismatch("vector is not over the embedding's source field");
  auto pr = inverse_roots(f.numerator().mapped(e.target, e));
  auto qr = inverse_roots(f.denominator().mapped(e.target, e));
  if (!pr || !qr) return std::nullopt;
  FormalSum u(e.target);
  for (const auto& a : *pr) u = u + FormalSum::term(e.target, a);
  for (const auto& b : *qr) u = u - FormalSum::term(e.target, b);
  return u;
}

SplitPreimage split_preimage(const RatWitt& f) {
  const FiniteFieldRing* s = as_finite_field(*f.ring());
  if (!s) throw DomainError("split_preimage needs a finite field, got " + f.ring()->descriptor());
  constexpr unsigned long kMaxOrder = 1ul << 16;
  for (unsigned k = 1;; ++k) {
    mpz_class order;
    mpz_ui_pow_ui(order.get_mpz_t(), s->prime(), s->degree() * k);
    if (order > kMaxOrder) throw DomainError("splitting field exceeds " + std::to_string(kMaxOrder) + " elements");
    RingPtr target = k == 1 ? f.ring() : finite_field(s->prime(), s->degree() * k);
    FieldEmbedding e = embed_finite_field(f.ring(), target);
    if (auto u = roots_preimage(f, e)) return {k, e, *u};
  }
}

}  // namespace ratwitt
