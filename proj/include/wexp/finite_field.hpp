#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wexp {

// GF(q), q = p^k <= 49, elements encoded as integers 0..q-1 via base-p digits
// of the polynomial representative modulo a fixed Conway polynomial.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  // Absolute trace to F_p, as an integer in [0, p).
  int trace(int a) const { return trace_[a]; }
  // Conway polynomial coefficients, low degree first, monic of degree k.
  const std::vector<int>& modulus() const { return modulus_; }
  // A generator of the multiplicative group.
  int primitive() const { return primitive_; }

  static bool is_supported(int q);

 private:
  int q_, p_, k_;
  std::vector<int> modulus_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, trace_;
  int primitive_ = 1;
};

// Returns p if n is a prime power p^k, else 0.
int prime_power_base(int n, int* exponent = nullptr);

}  // namespace wexp
