#pragma once

#include <gmpxx.h>

#include "json.hpp"
#include <string>
#include <utility>
#include <vector>

#include "wexp/errors.hpp"

namespace wexp {

// Element of Z[q] or Z[q, 1/q] with arbitrary-precision coefficients.
// Dense storage: coefficient i of c_ multiplies q^(low_ + i). Normalized so
// that the first and last stored coefficients are nonzero; zero has c_ empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long v);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const mpz_class& v);

  static QPoly q_pow(int e, bool laurent = false);
  static QPoly q() { return q_pow(1); }
  // Builds from (exponent, coefficient) pairs; duplicates are summed.
  static QPoly from_terms(const std::vector<std::pair<int, mpz_class>>& terms, bool laurent = false);

  bool laurent() const { return laurent_; }
  void set_laurent(bool l);
  bool is_zero() const { return c_.empty(); }
  // Highest exponent; -1 for zero (callers check is_zero for Laurent data).
  int degree() const;
  int low_degree() const;
  mpz_class coeff(int e) const;
  std::vector<std::pair<int, mpz_class>> terms() const;

  mpz_class specialize(const mpz_class& q) const;  // throws for Laurent with q not a unit unless exact
  mpq_class specialize_q(const mpq_class& q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // True when a = u q^k with u = +1 or -1.
  bool is_signed_q_power(int* k = nullptr, int* sign = nullptr) const;
  bool has_nonnegative_coeffs() const;
  // p(q + c) for a polynomial p.
  QPoly shift_var(long c) const;
  // p(q + 2) has nonnegative coefficients, so p >= 0 at every q >= 2. Holds
  // for classes of cellular varieties with pieces A^1, G_m, G_m minus a point.
  bool nonnegative_from_two() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static QPoly from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<mpz_class> c_;
  int low_ = 0;
  bool laurent_ = false;
};

struct DivisionNotExact : Error {
  DivisionNotExact(QPoly num, QPoly den, QPoly rem);
  QPoly numerator, denominator, remainder;
};

// Returns c with a = b * c, or throws DivisionNotExact carrying the remainder.
QPoly qpoly_exact_div(const QPoly& a, const QPoly& b);

// Unique integer polynomial of degree <= degree_bound through the samples.
// Throws NonIntegral or Inconsistent.
QPoly qpoly_interpolate(const std::vector<std::pair<long, mpz_class>>& samples, int degree_bound);

}  // namespace wexp
