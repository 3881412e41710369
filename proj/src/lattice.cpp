#include "wexp/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "wexp/errors.hpp"

namespace wexp {

std::string GrPoint::key() const {
  std::string s;
  auto put = [&](int v) {
    for (int k = 0; k < 4; ++k) s.push_back(static_cast<char>((static_cast<unsigned>(v) >> (8 * k)) & 0xff));
  };
  const int n = static_cast<int>(a.size());
  for (int v : a) put(v);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const Laurent& e = b[i + n * j];
      put(e.low);
      put(static_cast<int>(e.c.size()));
      s.append(e.c.begin(), e.c.end());
    }
  return s;
}

bool LatticeModel::supports(const std::string& preset) {
  return preset == "SL2" || preset == "PGL2" || preset == "GL2" || preset == "SL3";
}

LatticeModel::LatticeModel(const RootDatum& rd, const FiniteField& F, int prec) : rd_(rd), R_(F, prec), kind_(rd.name()) {
  if (!supports(kind_)) throw ConfigError("no lattice model for group " + kind_);
  n_ = kind_ == "SL3" ? 3 : 2;
  homothety_ = kind_ == "PGL2";
  for (size_t r = 0; r < rd_.roots().size(); ++r) {
    const IVec& alpha = rd_.roots()[r].vec;
    std::pair<int, int> found{-1, -1};
    for (int i = 0; i < n_ && found.first < 0; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        bool ok = true;
        for (int k = 0; k < rd_.lattice_rank() && ok; ++k) {
          IVec unit(rd_.lattice_rank(), 0);
          unit[k] = 1;
          const std::vector<int> e = exps(unit);
          ok = e[i] - e[j] == alpha[k];
        }
        if (ok) {
          found = {i, j};
          break;
        }
      }
    if (found.first < 0) throw Error("root does not match a matrix entry in the lattice model");
    root_entry_.push_back(found);
  }
}

std::vector<int> LatticeModel::exps(const IVec& lam) const {
  if (kind_ == "SL2") return {lam[0], -lam[0]};
  if (kind_ == "PGL2") return {lam[0], 0};
  if (kind_ == "GL2") return {lam[0], lam[1]};
  return {lam[0], lam[1] - lam[0], -lam[1]};
}

IVec LatticeModel::coords(const std::vector<int>& e) const {
  if (kind_ == "SL2") {
    if (e[0] + e[1] != 0) throw Error("lattice is not in the SL2 component");
    return {e[0]};
  }
  if (kind_ == "PGL2") return {e[0] - e[1]};
  if (kind_ == "GL2") return {e[0], e[1]};
  if (e[0] + e[1] + e[2] != 0) throw Error("lattice is not in the SL3 component");
  return {e[0], e[0] + e[1]};
}

GrPoint LatticeModel::hnf(std::vector<std::vector<Laurent>> cols) const {
  const int n = n_;
  std::vector<bool> used(cols.size(), false);
  std::vector<int> pivot_of(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    int piv = -1;
    for (size_t k = 0; k < cols.size(); ++k) {
      if (used[k] || cols[k][i].is_zero()) continue;
      if (piv < 0 || cols[k][i].val() < cols[piv][i].val()) piv = static_cast<int>(k);
    }
    if (piv < 0) throw Error("lattice generators do not span F^n");
    used[piv] = true;
    pivot_of[i] = piv;
    auto& pc = cols[piv];
    const int a = pc[i].val();
    const Laurent u = R_.inv_unit(R_.shift(pc[i], -a));
    for (int r = 0; r <= i; ++r) pc[r] = R_.mul(pc[r], u);
    pc[i] = R_.monomial(1, a);
    for (size_t k = 0; k < cols.size(); ++k) {
      if (used[k] || cols[k][i].is_zero()) continue;
      const Laurent f = R_.shift(cols[k][i], -a);
      for (int r = 0; r < i; ++r) cols[k][r] = R_.sub(cols[k][r], R_.mul(f, pc[r]));
      cols[k][i] = Laurent{};
    }
  }
  GrPoint p;
  p.a.resize(n);
  p.b.assign(n * n, Laurent{});
  for (int j = 0; j < n; ++j) {
    const auto& c = cols[pivot_of[j]];
    p.a[j] = c[j].val();
    for (int i = 0; i <= j; ++i) p.b[i + n * j] = c[i];
  }
  // Reduce entry (i, j) modulo t^{a_i} with column i, bottom rows first.
  for (int i = n - 2; i >= 0; --i)
    for (int j = i + 1; j < n; ++j) {
      const Laurent h = R_.high_part(p.b[i + n * j], p.a[i]);
      if (h.is_zero()) continue;
      const Laurent f = R_.shift(h, -p.a[i]);
      for (int r = 0; r <= i; ++r) p.b[r + n * j] = R_.sub(p.b[r + n * j], R_.mul(f, p.b[r + n * i]));
    }
  if (homothety_) {
    const int s = p.a[n - 1];
    if (s != 0) {
      for (int& v : p.a) v -= s;
      for (auto& e : p.b) e = R_.add(Laurent{}, R_.shift(e, -s));
    }
  }
  return p;
}

GrPoint LatticeModel::torus_point(const IVec& lam) const {
  const std::vector<int> e = exps(lam);
  std::vector<std::vector<Laurent>> cols(n_, std::vector<Laurent>(n_));
  for (int i = 0; i < n_; ++i) cols[i][i] = R_.monomial(1, e[i]);
  return hnf(std::move(cols));
}

LMat LatticeModel::basis_matrix(const GrPoint& p) const { return p.b; }

GrPoint LatticeModel::act_root(const GrPoint& p, int r, int a, int level) const {
  const auto [i, j] = root_entry_[r];
  const Laurent s = R_.monomial(a, level);
  std::vector<std::vector<Laurent>> cols(n_);
  for (int k = 0; k < n_; ++k) {
    cols[k].assign(p.b.begin() + n_ * k, p.b.begin() + n_ * (k + 1));
    if (!cols[k][j].is_zero()) cols[k][i] = R_.add(cols[k][i], R_.mul(s, cols[k][j]));
  }
  return hnf(std::move(cols));
}

GrPoint LatticeModel::act_diag(const GrPoint& p, const std::vector<int>& d) const {
  std::vector<std::vector<Laurent>> cols(n_);
  for (int k = 0; k < n_; ++k) {
    cols[k].resize(n_);
    for (int i = 0; i < n_; ++i) cols[k][i] = R_.scale(p.b[i + n_ * k], d[i]);
  }
  return hnf(std::move(cols));
}

LMat LatticeModel::mat_mul(const LMat& x, const LMat& y) const {
  LMat z(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Laurent s;
      for (int k = 0; k < n_; ++k)
        if (!x[i + n_ * k].is_zero() && !y[k + n_ * j].is_zero()) s = R_.add(s, R_.mul(x[i + n_ * k], y[k + n_ * j]));
      z[i + n_ * j] = s;
    }
  return z;
}

GrPoint LatticeModel::act_matrix(const LMat& g, const GrPoint& p) const {
  const LMat m = mat_mul(g, p.b);
  std::vector<std::vector<Laurent>> cols(n_);
  for (int k = 0; k < n_; ++k) cols[k].assign(m.begin() + n_ * k, m.begin() + n_ * (k + 1));
  return hnf(std::move(cols));
}

GrPoint LatticeModel::right_translate(const GrPoint& p, const GrPoint& p2) const { return act_matrix(p.b, p2); }

LMat LatticeModel::upper_inverse(const GrPoint& p) const {
  const int n = n_;
  LMat x(n * n);
  for (int j = 0; j < n; ++j) {
    x[j + n * j] = R_.monomial(1, -p.a[j]);
    for (int i = j - 1; i >= 0; --i) {
      Laurent s;
      for (int k = i + 1; k <= j; ++k) s = R_.add(s, R_.mul(p.b[i + n * k], x[k + n * j]));
      x[i + n * j] = R_.neg(R_.shift(s, -p.a[i]));
    }
  }
  return x;
}

IVec LatticeModel::relative_position(const GrPoint& p, const GrPoint& p2) const {
  const LMat m = mat_mul(upper_inverse(p), p2.b);
  const int n = n_;
  int d1 = INT_MAX;
  for (const auto& e : m) d1 = std::min(d1, e.val());
  int dn = 0;
  for (int i = 0; i < n; ++i) dn += p2.a[i] - p.a[i];
  std::vector<int> ed;
  if (n == 2) {
    ed = {dn - d1, d1};
  } else {
    int d2 = INT_MAX;
    for (int r0 = 0; r0 < n; ++r0)
      for (int r1 = r0 + 1; r1 < n; ++r1)
        for (int c0 = 0; c0 < n; ++c0)
          for (int c1 = c0 + 1; c1 < n; ++c1) {
            const Laurent det = R_.sub(R_.mul(m[r0 + n * c0], m[r1 + n * c1]), R_.mul(m[r0 + n * c1], m[r1 + n * c0]));
            d2 = std::min(d2, det.val());
          }
    ed = {dn - d2, d2 - d1, d1};
  }
  for (size_t i = 0; i + 1 < ed.size(); ++i)
    if (ed[i] < ed[i + 1]) throw Error("elementary divisors out of order; truncation depth too small");
  return coords(ed);
}

int LatticeModel::whittaker_coordinate(const GrPoint& p) const {
  // u = B t^{-a}: the (i, i+1) entry is b_{i,i+1} t^{-a_{i+1}}.
  int s = 0;
  for (int i = 0; i + 1 < n_; ++i) s = field().add(s, p.b[i + n_ * (i + 1)].coeff(p.a[i + 1] - 1));
  return s;
}

std::vector<int> LatticeModel::gm_diag(int gamma) const {
  std::vector<int> d(n_, 1);
  for (int i = n_ - 2; i >= 0; --i) d[i] = field().mul(d[i + 1], gamma);
  return d;
}

std::string LatticeModel::point_str(const GrPoint& p) const {
  std::ostringstream os;
  os << "a=(";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << p.a[i];
  os << ")";
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < j; ++i) {
      os << " b" << i << j << "=[";
      const Laurent& e = p.b[i + n_ * j];
      for (size_t k = 0; k < e.c.size(); ++k) os << (k ? " " : "") << int(e.c[k]) << "t^" << e.low + static_cast<int>(k);
      os << "]";
    }
  return os.str();
}

}  // namespace wexp
