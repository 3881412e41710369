#pragma once

#include <climits>
#include <cstdint>
#include <vector>

#include "wexp/finite_field.hpp"

namespace wexp {

// Finite Laurent polynomial over F_q: coefficient i multiplies t^(low + i).
// Normalized: no leading or trailing zeros; zero has c empty.
struct Laurent {
  int low = 0;
  std::vector<uint8_t> c;

  bool is_zero() const { return c.empty(); }
  int val() const { return c.empty() ? INT_MAX : low; }
  int top() const { return c.empty() ? INT_MIN : low + static_cast<int>(c.size()) - 1; }
  int coeff(int e) const {
    const int i = e - low;
    return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.low == b.low && a.c == b.c; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
};

// Arithmetic in F_q((t)) modulo t^prec: all exponents >= prec are dropped.
class LaurentRing {
 public:
  LaurentRing(const FiniteField& F, int prec) : F_(F), prec_(prec) {}
  const FiniteField& field() const { return F_; }
  int prec() const { return prec_; }

  Laurent monomial(int a, int e) const;
  Laurent add(const Laurent& x, const Laurent& y) const;
  Laurent sub(const Laurent& x, const Laurent& y) const;
  Laurent neg(const Laurent& x) const;
  Laurent mul(const Laurent& x, const Laurent& y) const;
  Laurent scale(const Laurent& x, int a) const;
  // Not truncated, so shifted multipliers keep their tails.
  Laurent shift(const Laurent& x, int k) const;
  // Inverse of a unit of F_q[[t]] (val 0) truncated to exponents < 2 prec.
  Laurent inv_unit(const Laurent& x) const;
  // Terms with exponent >= e, and terms with exponent < e.
  Laurent high_part(const Laurent& x, int e) const;
  Laurent low_part(const Laurent& x, int e) const;

 private:
  Laurent make(int low, std::vector<int>&& c, int cap) const;
  const FiniteField& F_;
  int prec_;
};

}  // namespace wexp
