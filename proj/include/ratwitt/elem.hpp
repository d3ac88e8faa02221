#pragma once

#include <gmpxx.h>

#include <utility>
#include <variant>
#include <vector>

namespace ratwitt {

// Opaque ring element. The owning Ring decides which alternative is used and
// keeps every value in a canonical normal form, so structural equality is
// ring equality.
//
//   integer   ZZ, Zmod/n, GF/q (coordinates c_i packed as sum c_i p^i)
//   rational  QQ
//   vector    Dual (a, b), polynomial rings, fraction fields (num, den),
//             MonSub
class Elem {
 public:
  using Vec = std::vector<Elem>;

  Elem() = default;
  Elem(mpz_class z) : value_(std::move(z)) {}
  Elem(mpq_class q) : value_(std::move(q)) {}
  Elem(Vec v) : value_(std::move(v)) {}
  explicit Elem(long v) : value_(mpz_class(v)) {}

  bool is_integer() const noexcept { return std::holds_alternative<mpz_class>(value_); }
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  bool is_vector() const noexcept { return std::holds_alternative<Vec>(value_); }

  const mpz_class& z() const { return std::get<mpz_class>(value_); }
  const mpq_class& q() const { return std::get<mpq_class>(value_); }
  const Vec& vec() const { return std::get<Vec>(value_); }
  mpz_class& z() { return std::get<mpz_class>(value_); }
  mpq_class& q() { return std::get<mpq_class>(value_); }
  Vec& vec() { return std::get<Vec>(value_); }

  friend bool operator==(const Elem& a, const Elem& b) { return a.value_ == b.value_; }

 private:
  std::variant<mpz_class, mpq_class, Vec> value_;
};

}  // namespace ratwitt
