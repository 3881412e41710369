#include "wexp/cycnum.hpp"

#include <sstream>

#include "wexp/errors.hpp"

namespace wexp {

CycNum::CycNum(int p, int q, long v) : p_(p), q_(q) {
  int k = 0;
  if (prime_power_base(p, &k) != p || k != 1) throw ConfigError("cyclotomic base " + std::to_string(p) + " is not prime");
  if (prime_power_base(q) != p) throw ConfigError("q=" + std::to_string(q) + " is not a power of p=" + std::to_string(p));
  num_.assign(p - 1, 0);
  num_[0] = v;
}

CycNum CycNum::zeta_pow(int p, int q, long k) {
  CycNum r(p, q, 0);
  long m = ((k % p) + p) % p;
  if (m < p - 1) {
    r.num_[m] = 1;
  } else {
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    for (auto& c : r.num_) c = -1;
  }
  return r;
}

CycNum CycNum::psi(const FiniteField& F, int a) { return zeta_pow(F.p(), F.q(), F.trace(a)); }

bool CycNum::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_integer(mpz_class* v) const {
  if (e_ != 0) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  if (v) *v = num_[0];
  return true;
}

void CycNum::check_compatible(const CycNum& o) const {
  if (p_ != o.p_ || q_ != o.q_) throw Error("mixing cyclotomic numbers over different rings");
}

void CycNum::normalize() {
  if (is_zero()) {
    e_ = 0;
    return;
  }
  while (e_ > 0) {
    for (const auto& c : num_)
      if (c % q_ != 0) return;
    for (auto& c : num_) c /= q_;
    --e_;
  }
}

namespace {
mpz_class qpow(int q, int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  return r;
}
}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  check_compatible(o);
  int e = std::max(e_, o.e_);
  mpz_class sa = qpow(q_, e - e_), sb = qpow(q_, e - o.e_);
  for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * sa + o.num_[i] * sb;
  e_ = e;
  normalize();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_compatible(b);
  const int p = a.p_;
  std::vector<mpz_class> full(p, 0);  // coefficients of zeta^0..zeta^(p-1)
  for (int i = 0; i < p - 1; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) full[(i + j) % p] += a.num_[i] * b.num_[j];
  }
  CycNum r(p, a.q_, 0);
  for (int i = 0; i < p - 1; ++i) r.num_[i] = full[i] - full[p - 1];
  r.e_ = a.e_ + b.e_;
  r.normalize();
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  a.check_compatible(b);
  return a.e_ == b.e_ && a.num_ == b.num_;
}

CycNum CycNum::conj() const {
  CycNum r(p_, q_, 0);
  for (int i = 0; i < p_ - 1; ++i) {
    if (num_[i] == 0) continue;
    r += zeta_pow(p_, q_, -i).mul_int(num_[i]);
  }
  r.e_ = e_;
  r.normalize();
  return r;
}

CycNum CycNum::div_q_pow(int k) const {
  if (k < 0) return mul_int(qpow(q_, -k));
  CycNum r = *this;
  r.e_ += k;
  r.normalize();
  return r;
}

CycNum CycNum::mul_int(const mpz_class& v) const {
  CycNum r = *this;
  for (auto& c : r.num_) c *= v;
  r.normalize();
  return r;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < p_ - 1; ++i) {
    if (num_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << num_[i].get_str() << ")";
    if (i > 0) os << "*z^" << i;
  }
  if (first) os << "0";
  if (e_ > 0) os << " / " << q_ << "^" << e_;
  return os.str();
}

}  // namespace wexp
