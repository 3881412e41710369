#include "wexp/laurent.hpp"

#include <algorithm>
#include <limits>

#include "wexp/errors.hpp"

namespace wexp {

Laurent LaurentRing::make(int low, std::vector<int>&& c, int cap) const {
  Laurent r;
  int hi = static_cast<int>(c.size());
  if (low + hi > cap) hi = std::max(0, cap - low);
  int lo = 0;
  while (lo < hi && c[lo] == 0) ++lo;
  while (hi > lo && c[hi - 1] == 0) --hi;
  if (lo == hi) return r;
  r.low = low + lo;
  r.c.assign(c.begin() + lo, c.begin() + hi);
  return r;
}

Laurent LaurentRing::monomial(int a, int e) const {
  std::vector<int> c = {a};
  return make(e, std::move(c), prec_);
}

Laurent LaurentRing::add(const Laurent& x, const Laurent& y) const {
  if (x.is_zero()) return y.top() < prec_ ? y : make(y.low, std::vector<int>(y.c.begin(), y.c.end()), prec_);
  if (y.is_zero()) return x.top() < prec_ ? x : make(x.low, std::vector<int>(x.c.begin(), x.c.end()), prec_);
  const int lo = std::min(x.low, y.low), hi = std::max(x.top(), y.top());
  std::vector<int> c(hi - lo + 1, 0);
  for (size_t i = 0; i < x.c.size(); ++i) c[x.low - lo + i] = x.c[i];
  for (size_t i = 0; i < y.c.size(); ++i) {
    int& s = c[y.low - lo + i];
    s = F_.add(s, y.c[i]);
  }
  return make(lo, std::move(c), prec_);
}

Laurent LaurentRing::neg(const Laurent& x) const {
  Laurent r = x;
  for (auto& v : r.c) v = static_cast<uint8_t>(F_.neg(v));
  return r;
}

Laurent LaurentRing::sub(const Laurent& x, const Laurent& y) const { return add(x, neg(y)); }

Laurent LaurentRing::mul(const Laurent& x, const Laurent& y) const {
  if (x.is_zero() || y.is_zero()) return {};
  const int lo = x.low + y.low;
  const int len = std::min(static_cast<int>(x.c.size() + y.c.size() - 1), std::max(0, prec_ - lo));
  if (len <= 0) return {};
  std::vector<int> c(len, 0);
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (size_t j = 0; j < y.c.size() && static_cast<int>(i + j) < len; ++j)
      c[i + j] = F_.add(c[i + j], F_.mul(x.c[i], y.c[j]));
  }
  return make(lo, std::move(c), prec_);
}

Laurent LaurentRing::scale(const Laurent& x, int a) const {
  if (a == 0) return {};
  std::vector<int> c(x.c.size());
  for (size_t i = 0; i < x.c.size(); ++i) c[i] = F_.mul(x.c[i], a);
  return make(x.low, std::move(c), prec_);
}

Laurent LaurentRing::shift(const Laurent& x, int k) const {
  if (x.is_zero()) return x;
  return make(x.low + k, std::vector<int>(x.c.begin(), x.c.end()), std::numeric_limits<int>::max() / 2);
}

Laurent LaurentRing::inv_unit(const Laurent& x) const {
  if (x.val() != 0) throw Error("inv_unit needs a power series unit");
  const int len = 2 * std::max(prec_, 1);
  std::vector<int> r(len, 0);
  const int inv0 = F_.inv(x.c[0]);
  r[0] = inv0;
  for (int k = 1; k < len; ++k) {
    int s = 0;
    for (int i = 1; i <= k && i < static_cast<int>(x.c.size()); ++i) s = F_.add(s, F_.mul(x.c[i], r[k - i]));
    r[k] = F_.mul(F_.neg(s), inv0);
  }
  return make(0, std::move(r), 2 * std::max(prec_, 1));
}

Laurent LaurentRing::high_part(const Laurent& x, int e) const {
  if (x.is_zero() || x.top() < e) return {};
  if (x.low >= e) return x;
  return make(e, std::vector<int>(x.c.begin() + (e - x.low), x.c.end()), prec_);
}

Laurent LaurentRing::low_part(const Laurent& x, int e) const {
  if (x.is_zero() || x.low >= e) return {};
  if (x.top() < e) return x;
  return make(x.low, std::vector<int>(x.c.begin(), x.c.begin() + (e - x.low)), prec_);
}

}  // namespace wexp
