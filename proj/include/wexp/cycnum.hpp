#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wexp/finite_field.hpp"

namespace wexp {

// Element of Z[zeta_p, 1/q] with q = p^k, written num / q^e where num is in
// the integral basis 1, zeta, ..., zeta^(p-2). e is kept minimal.
class CycNum {
 public:
  CycNum() = default;
  CycNum(int p, int q, long v = 0);
  static CycNum zeta_pow(int p, int q, long k);
  // Additive character a -> zeta_p^tr(a) on the field.
  static CycNum psi(const FiniteField& F, int a);

  int p() const { return p_; }
  int q() const { return q_; }
  int den_exp() const { return e_; }
  const std::vector<mpz_class>& num() const { return num_; }
  bool is_zero() const;
  // Integer value when the element lies in Z[1/q] with zero denominator.
  bool is_integer(mpz_class* v = nullptr) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum operator-() const;
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  // Complex conjugation zeta -> zeta^-1, which inverts character values.
  CycNum conj() const;
  // Multiplies by q^(-k).
  CycNum div_q_pow(int k) const;
  CycNum mul_int(const mpz_class& v) const;

  std::string str() const;

 private:
  void check_compatible(const CycNum& o) const;
  void normalize();
  int p_ = 2, q_ = 2, e_ = 0;
  std::vector<mpz_class> num_{mpz_class(0)};
};

}  // namespace wexp
