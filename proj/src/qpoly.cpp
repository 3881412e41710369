#include "wexp/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace wexp {

QPoly::QPoly(long v) {
  if (v != 0) c_.emplace_back(v);
}

QPoly::QPoly(const mpz_class& v) {
  if (v != 0) c_.push_back(v);
}

QPoly QPoly::q_pow(int e, bool laurent) {
  if (e < 0 && !laurent) throw Error("negative power of q in non-Laurent QPoly");
  QPoly r;
  r.laurent_ = laurent;
  r.low_ = e;
  r.c_.emplace_back(1);
  return r;
}

QPoly QPoly::from_terms(const std::vector<std::pair<int, mpz_class>>& terms, bool laurent) {
  QPoly r;
  r.laurent_ = laurent;
  if (terms.empty()) return r;
  int lo = terms[0].first, hi = terms[0].first;
  for (const auto& [e, v] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  if (lo < 0 && !laurent) throw Error("negative exponent in non-Laurent QPoly");
  r.low_ = lo;
  r.c_.assign(hi - lo + 1, 0);
  for (const auto& [e, v] : terms) r.c_[e - lo] += v;
  r.normalize();
  return r;
}

void QPoly::set_laurent(bool l) {
  if (!l && !c_.empty() && low_ < 0) throw Error("QPoly has negative exponents");
  laurent_ = l;
}

void QPoly::normalize() {
  size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  size_t e = c_.size();
  while (c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<mpz_class>(c_.begin() + b, c_.begin() + e);
    low_ += static_cast<int>(b);
  }
}

int QPoly::degree() const { return c_.empty() ? -1 : low_ + static_cast<int>(c_.size()) - 1; }
int QPoly::low_degree() const { return c_.empty() ? 0 : low_; }

mpz_class QPoly::coeff(int e) const {
  if (e < low_ || e >= low_ + static_cast<int>(c_.size())) return 0;
  return c_[e - low_];
}

std::vector<std::pair<int, mpz_class>> QPoly::terms() const {
  std::vector<std::pair<int, mpz_class>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
  return out;
}

mpz_class QPoly::specialize(const mpz_class& q) const {
  if (c_.empty()) return 0;
  mpz_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  if (low_ >= 0) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(low_));
    return acc * p;
  }
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(-low_));
  if (p == 0 || acc % p != 0) throw Error("Laurent specialization is not an integer");
  return acc / p;
}

mpq_class QPoly::specialize_q(const mpq_class& q) const {
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q + mpq_class(c_[i]);
  mpq_class p = 1;
  for (int i = 0; i < std::abs(low_); ++i) p *= q;
  return low_ >= 0 ? mpq_class(acc * p) : mpq_class(acc / p);
}

QPoly& QPoly::operator+=(const QPoly& o) {
  laurent_ = laurent_ || o.laurent_;
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    c_ = o.c_;
    low_ = o.low_;
    return *this;
  }
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  if (lo < low_ || hi > degree()) {
    std::vector<mpz_class> n(hi - lo + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) n[low_ - lo + i] = std::move(c_[i]);
    c_ = std::move(n);
    low_ = lo;
  }
  for (size_t i = 0; i < o.c_.size(); ++i) c_[o.low_ - low_ + i] += o.c_[i];
  normalize();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.laurent_ = a.laurent_ || b.laurent_;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.normalize();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

bool QPoly::is_signed_q_power(int* k, int* sign) const {
  if (c_.size() != 1 || (c_[0] != 1 && c_[0] != -1)) return false;
  if (k) *k = low_;
  if (sign) *sign = c_[0] > 0 ? 1 : -1;
  return true;
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return v >= 0; });
}

QPoly QPoly::shift_var(long c) const {
  if (laurent_ && low_ < 0) throw Error("shift_var needs a polynomial");
  const QPoly x = QPoly::q() + QPoly(c);
  QPoly r;
  for (int e = degree(); e >= 0; --e) r = r * x + QPoly(coeff(e));
  return r;
}

bool QPoly::nonnegative_from_two() const {
  if (is_zero()) return true;
  if (low_ < 0) return false;
  return shift_var(2).has_nonnegative_coeffs();
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    mpz_class v = c_[i];
    if (v == 0) continue;
    int e = low_ + static_cast<int>(i);
    bool neg = v < 0;
    mpz_class a = neg ? mpz_class(-v) : v;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

nlohmann::json QPoly::to_json() const {
  nlohmann::json terms_j = nlohmann::json::array();
  for (const auto& [e, v] : terms()) terms_j.push_back({e, v.get_str()});
  return {{"laurent", laurent_}, {"terms", terms_j}};
}

QPoly QPoly::from_json(const nlohmann::json& j) {
  bool laurent = j.value("laurent", false);
  std::vector<std::pair<int, mpz_class>> t;
  for (const auto& term : j.at("terms")) t.emplace_back(term.at(0).get<int>(), mpz_class(term.at(1).get<std::string>()));
  return from_terms(t, laurent);
}

DivisionNotExact::DivisionNotExact(QPoly num, QPoly den, QPoly rem)
    : Error("division not exact: (" + num.str() + ") / (" + den.str() + "), remainder " + rem.str()),
      numerator(std::move(num)),
      denominator(std::move(den)),
      remainder(std::move(rem)) {}

QPoly qpoly_exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error("division by zero QPoly");
  bool laurent = a.laurent() || b.laurent();
  QPoly quot;
  quot.set_laurent(true);
  QPoly rem = a;
  rem.set_laurent(true);
  const int bdeg = b.degree();
  const int blow = b.low_degree();
  const mpz_class blead = b.coeff(bdeg);
  // Long division from the top. For Laurent data the quotient's support is
  // bounded below by low(a) - low(b); polynomials use Euclidean division.
  const int stop = laurent ? a.low_degree() - blow : 0;
  while (!rem.is_zero() && rem.degree() - bdeg >= stop) {
    int e = rem.degree() - bdeg;
    mpz_class lead = rem.coeff(rem.degree());
    if (lead % blead != 0) break;
    QPoly t = QPoly::from_terms({{e, lead / blead}}, true);
    quot += t;
    rem -= t * b;
  }
  if (!laurent && (rem.is_zero() || rem.low_degree() >= 0)) rem.set_laurent(false);
  if (!rem.is_zero()) throw DivisionNotExact(a, b, rem);
  if (!laurent) {
    if (quot.low_degree() < 0 && !quot.is_zero()) throw DivisionNotExact(a, b, rem);
    quot.set_laurent(false);
  }
  return quot;
}

QPoly qpoly_interpolate(const std::vector<std::pair<long, mpz_class>>& samples, int degree_bound) {
  if (degree_bound < 0) throw Error("degree bound must be nonnegative");
  if (static_cast<int>(samples.size()) < degree_bound + 1) throw Error("not enough samples for interpolation");
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first) throw Error("interpolation nodes must be distinct");
  const size_t n = static_cast<size_t>(degree_bound) + 1;
  // Newton divided differences on the first n nodes, then expand.
  std::vector<mpq_class> x(n), dd(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = samples[i].first;
    dd[i] = mpq_class(samples[i].second);
  }
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - k]);
  std::vector<mpq_class> poly(n, 0);  // coefficients in increasing degree
  for (size_t k = n; k-- > 0;) {
    // poly = poly * (X - x_k) + dd_k
    std::vector<mpq_class> next(n, 0);
    for (size_t i = 0; i < n; ++i) {
      if (poly[i] == 0) continue;
      if (i + 1 < n) next[i + 1] += poly[i];
      next[i] -= poly[i] * x[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<std::pair<int, mpz_class>> terms;
  for (size_t i = 0; i < n; ++i) {
    poly[i].canonicalize();
    if (poly[i].get_den() != 1) throw NonIntegral("interpolant has non-integral coefficient " + poly[i].get_str());
    terms.emplace_back(static_cast<int>(i), poly[i].get_num());
  }
  QPoly r = QPoly::from_terms(terms);
  for (const auto& [qv, val] : samples)
    if (r.specialize(qv) != val)
      throw Inconsistent("sample at q=" + std::to_string(qv) + " disagrees with the degree-" + std::to_string(degree_bound) + " interpolant " + r.str());
  return r;
}

}  // namespace wexp
