#include "wexp/finite_field.hpp"

#include <map>

#include "wexp/errors.hpp"

namespace wexp {

namespace {

// Conway polynomials C_{p,k}, low degree first.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{2, 1}, {1, 1}},       {{3, 1}, {1, 1}},       {{5, 1}, {3, 1}},       {{7, 1}, {4, 1}},
      {{11, 1}, {9, 1}},      {{13, 1}, {11, 1}},     {{17, 1}, {14, 1}},     {{19, 1}, {17, 1}},
      {{23, 1}, {18, 1}},     {{29, 1}, {27, 1}},     {{31, 1}, {28, 1}},     {{37, 1}, {35, 1}},
      {{41, 1}, {35, 1}},     {{43, 1}, {40, 1}},     {{47, 1}, {42, 1}},     {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}}, {{2, 4}, {1, 1, 0, 0, 1}}, {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}}, {{5, 2}, {2, 4, 1}},    {{7, 2}, {3, 6, 1}},
  };
  return t;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

int prime_power_base(int n, int* exponent) {
  if (n < 2) return 0;
  int p = 2;
  while (n % p != 0) ++p;
  int k = 0, m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1 || !is_prime(p)) return 0;
  if (exponent) *exponent = k;
  return p;
}

bool FiniteField::is_supported(int q) {
  int k = 0;
  int p = prime_power_base(q, &k);
  return p != 0 && q <= 49 && conway_table().count({p, k}) > 0;
}

FiniteField::FiniteField(int q) : q_(q) {
  p_ = prime_power_base(q, &k_);
  if (p_ == 0) throw ConfigError("field size " + std::to_string(q) + " is not a prime power");
  if (q > 49) throw ConfigError("field size " + std::to_string(q) + " exceeds 49");
  auto it = conway_table().find({p_, k_});
  if (it == conway_table().end()) throw ConfigError("no field polynomial for q=" + std::to_string(q));
  modulus_ = it->second;

  auto digits = [&](int a) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  trace_.resize(q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<uint8_t>(encode(dn));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<uint8_t>(encode(s));
      std::vector<int> prod(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * k_ - 1; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i) prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[a * q + b] = static_cast<uint8_t>(encode(prod));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
  // Trace: a + a^p + ... + a^(p^(k-1)), which lies in the prime field.
  for (int a = 0; a < q; ++a) {
    int t = 0, f = a;
    for (int i = 0; i < k_; ++i) {
      t = add(t, f);
      int g = 1;
      for (int j = 0; j < p_; ++j) g = mul(g, f);
      f = g;
    }
    if (t >= p_) throw InvariantViolation("trace left the prime field");
    trace_[a] = static_cast<uint8_t>(t);
  }
  for (int g = 1; g < q; ++g) {
    int order = 1, x = g;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error("inverse of zero in finite field");
  return inv_[a];
}

}  // namespace wexp
