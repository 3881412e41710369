#include "wexp/root_datum.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "wexp/errors.hpp"

namespace wexp {

int dot(const IVec& a, const IVec& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec mat_vec(const IMat& m, const IVec& v) {
  IVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat r(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

IMat identity_mat(int n) {
  IMat r(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

std::string ivec_key(const IVec& v) {
  std::string s;
  s.reserve(v.size() * 4);
  for (int x : v) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

std::string imat_key(const IMat& m) {
  std::string s;
  for (const auto& r : m) {
    s += ivec_key(r);
    s += ';';
  }
  return s;
}

std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

RootDatum RootDatum::preset(const std::string& name) {
  if (name == "SL2") return RootDatum("SL2", {{2}}, {{2}}, {{1}});
  if (name == "PGL2") return RootDatum("PGL2", {{2}}, {{1}}, {{2}});
  if (name == "GL2") return RootDatum("GL2", {{2}}, {{1, -1}}, {{1, -1}});
  if (name == "SL3") return RootDatum("SL3", {{2, -1}, {-1, 2}}, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}});
  if (name == "PGL3") return RootDatum("PGL3", {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}});
  // alpha_1 short, alpha_2 long
  if (name == "Sp4") return RootDatum("Sp4", {{2, -1}, {-2, 2}}, {{2, -1}, {-2, 2}}, {{1, 0}, {0, 1}});
  // alpha_1 short, alpha_2 long
  if (name == "G2") return RootDatum("G2", {{2, -1}, {-3, 2}}, {{2, -1}, {-3, 2}}, {{1, 0}, {0, 1}});
  throw ConfigError("unknown group preset '" + name + "'");
}

RootDatum RootDatum::from_json(const nlohmann::json& j) {
  try {
    return RootDatum(j.at("name").get<std::string>(), j.at("cartan").get<IMat>(), j.at("simple_roots").get<IMat>(),
                     j.at("simple_coroots").get<IMat>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed root datum JSON: ") + e.what());
  }
}

RootDatum RootDatum::load(const std::string& spec) {
  static const std::vector<std::string> presets = {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "G2"};
  if (std::find(presets.begin(), presets.end(), spec) != presets.end()) return preset(spec);
  std::ifstream in(spec);
  if (!in) throw ConfigError("'" + spec + "' is neither a preset nor a readable file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("cannot parse root datum file: ") + e.what());
  }
  return from_json(j);
}

nlohmann::json RootDatum::to_json() const {
  return {{"name", name_}, {"cartan", cartan_}, {"simple_roots", simple_roots_}, {"simple_coroots", simple_coroots_}};
}

RootDatum::RootDatum(std::string name, IMat cartan, IMat simple_roots, IMat simple_coroots)
    : name_(std::move(name)), cartan_(std::move(cartan)), simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  validate();
  build();
}

void RootDatum::validate() const {
  const size_t r = cartan_.size();
  if (r == 0) throw ConfigError("root datum has no simple roots (torus); the group must not be a torus");
  if (simple_roots_.size() != r || simple_coroots_.size() != r)
    throw ConfigError("number of simple roots/coroots does not match the Cartan matrix");
  const size_t n = simple_roots_[0].size();
  if (n == 0) throw ConfigError("zero-dimensional lattice");
  if (n > 8) throw ConfigError("lattice rank above 8 is not supported");
  for (size_t i = 0; i < r; ++i) {
    if (cartan_[i].size() != r) throw ConfigError("Cartan matrix is not square");
    if (simple_roots_[i].size() != n || simple_coroots_[i].size() != n)
      throw ConfigError("simple (co)root vectors have inconsistent lengths");
  }
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const int a = cartan_[i][j];
      if (i == j && a != 2) throw ConfigError("Cartan matrix diagonal must be 2");
      if (i != j && a > 0) throw ConfigError("Cartan matrix off-diagonal entries must be <= 0");
      if (i != j && ((a == 0) != (cartan_[j][i] == 0))) throw ConfigError("Cartan matrix zero pattern is not symmetric");
      if (i != j && cartan_[i][j] * cartan_[j][i] > 3) throw ConfigError("Cartan matrix is not of finite type");
      if (dot(simple_roots_[i], simple_coroots_[j]) != a)
        throw ConfigError("pairing <alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(j + 1) +
                          "^vee> does not match the Cartan matrix");
    }
  // Symmetrize: find d with d_i A_ij = d_j A_ji, then test positive definiteness.
  std::vector<mpq_class> d(r, 0);
  for (size_t s = 0; s < r; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::queue<size_t> qu;
    qu.push(s);
    while (!qu.empty()) {
      size_t i = qu.front();
      qu.pop();
      for (size_t j = 0; j < r; ++j) {
        if (j == i || cartan_[i][j] == 0) continue;
        mpq_class dj = d[i] * cartan_[i][j] / cartan_[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          qu.push(j);
        } else if (d[j] != dj) {
          throw ConfigError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  std::vector<std::vector<mpq_class>> m(r, std::vector<mpq_class>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) m[i][j] = d[i] * cartan_[i][j];
  // Gaussian elimination; all pivots positive iff positive definite.
  for (size_t k = 0; k < r; ++k) {
    if (m[k][k] <= 0) throw ConfigError("Cartan matrix is not of finite type (symmetrization not positive definite)");
    for (size_t i = k + 1; i < r; ++i) {
      mpq_class f = m[i][k] / m[k][k];
      for (size_t j = k; j < r; ++j) m[i][j] -= f * m[k][j];
    }
  }
}

void RootDatum::build() {
  const int r = rank();
  n_ = static_cast<int>(simple_roots_[0].size());

  // Roots by reflection closure in simple-root coordinates; coroots tracked
  // in simple-coroot coordinates alongside.
  auto to_lattice = [&](const IVec& coeffs, const IMat& basis) {
    IVec v(n_, 0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < n_; ++k) v[k] += coeffs[i] * basis[i][k];
    return v;
  };
  std::map<IVec, IVec> found;  // simple coords of root -> simple coords of coroot
  std::queue<IVec> qu;
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = 1;
    found[e] = e;
    qu.push(e);
  }
  while (!qu.empty()) {
    IVec b = qu.front();
    qu.pop();
    IVec bc = found[b];
    for (int i = 0; i < r; ++i) {
      int pb = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < r; ++j) pb += b[j] * cartan_[j][i];
      int pc = 0;  // <alpha_i, beta^vee>
      for (int j = 0; j < r; ++j) pc += bc[j] * cartan_[i][j];
      IVec nb = b, nc = bc;
      nb[i] -= pb;
      nc[i] -= pc;
      if (!found.count(nb)) {
        found[nb] = nc;
        qu.push(nb);
        if (found.size() > 4000) throw ConfigError("root system is not finite");
      }
    }
  }
  // Components of the Dynkin diagram.
  std::vector<int> comp(r, -1);
  for (int s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(components_.size());
    components_.push_back({});
    std::queue<int> cq;
    cq.push(s);
    comp[s] = c;
    while (!cq.empty()) {
      int i = cq.front();
      cq.pop();
      components_[c].push_back(i);
      for (int j = 0; j < r; ++j)
        if (j != i && cartan_[i][j] != 0 && comp[j] < 0) {
          comp[j] = c;
          cq.push(j);
        }
    }
    std::sort(components_[c].begin(), components_[c].end());
  }

  std::vector<Root> pos, negs;
  for (const auto& [b, bc] : found) {
    Root rt;
    rt.simple = b;
    rt.vec = to_lattice(b, simple_roots_);
    rt.coroot = to_lattice(bc, simple_coroots_);
    rt.height = 0;
    for (int x : b) rt.height += x;
    rt.positive = rt.height > 0;
    for (int i = 0; i < r; ++i)
      if (b[i] != 0) rt.component = comp[i];
    (rt.positive ? pos : negs).push_back(rt);
  }
  auto order = [](const Root& a, const Root& b) {
    if (std::abs(a.height) != std::abs(b.height)) return std::abs(a.height) < std::abs(b.height);
    return a.positive ? a.simple > b.simple : a.simple < b.simple;
  };
  std::sort(pos.begin(), pos.end(), order);
  std::sort(negs.begin(), negs.end(), order);
  num_pos_ = static_cast<int>(pos.size());
  roots_ = pos;
  roots_.insert(roots_.end(), negs.begin(), negs.end());
  for (size_t k = 0; k < roots_.size(); ++k) root_lookup_[ivec_key(roots_[k].simple)] = static_cast<int>(k);
  neg_.resize(roots_.size());
  simple_of_.assign(roots_.size(), -1);
  simple_idx_.assign(r, -1);
  for (size_t k = 0; k < roots_.size(); ++k) {
    IVec m = roots_[k].simple;
    for (auto& x : m) x = -x;
    neg_[k] = root_lookup_.at(ivec_key(m));
    if (roots_[k].height == 1) {
      for (int i = 0; i < r; ++i)
        if (roots_[k].simple[i] == 1) {
          simple_of_[k] = i;
          simple_idx_[i] = static_cast<int>(k);
        }
    }
  }
  two_rho_hat_.assign(n_, 0);
  for (int k = 0; k < num_pos_; ++k)
    for (int c = 0; c < n_; ++c) two_rho_hat_[c] += roots_[k].coroot[c];
  highest_.assign(components_.size(), -1);
  for (int k = 0; k < num_pos_; ++k) {
    int c = roots_[k].component;
    if (highest_[c] < 0 || roots_[k].height > roots_[highest_[c]].height) highest_[c] = k;
  }

  // Finite Weyl group by breadth-first search over right multiplication.
  std::vector<IMat> smat(r), sdual(r);
  for (int i = 0; i < r; ++i) {
    smat[i] = identity_mat(n_);
    sdual[i] = identity_mat(n_);
    // s_i(x) = x - <alpha_i, x> alpha_i^vee on X_*
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) smat[i][a][b] -= simple_coroots_[i][a] * simple_roots_[i][b];
    // s_i(y) = y - <y, alpha_i^vee> alpha_i on X^*
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) sdual[i][a][b] -= simple_roots_[i][a] * simple_coroots_[i][b];
  }
  FiniteWeylElement e;
  e.matrix = identity_mat(n_);
  e.dual = identity_mat(n_);
  weyl_.push_back(e);
  weyl_lookup_[imat_key(e.matrix)] = 0;
  std::vector<int> layer = {0};
  while (!layer.empty()) {
    std::vector<int> next;
    for (int w : layer) {
      for (int i = 0; i < r; ++i) {
        IMat m = mat_mul(weyl_[w].matrix, smat[i]);
        std::string key = imat_key(m);
        if (weyl_lookup_.count(key)) continue;
        FiniteWeylElement x;
        x.matrix = m;
        x.dual = mat_mul(weyl_[w].dual, sdual[i]);
        x.word = weyl_[w].word;
        x.word.push_back(i);
        x.length = weyl_[w].length + 1;
        weyl_lookup_[key] = static_cast<int>(weyl_.size());
        next.push_back(static_cast<int>(weyl_.size()));
        weyl_.push_back(std::move(x));
        if (weyl_.size() > 100000) throw ConfigError("finite Weyl group too large");
      }
    }
    layer = std::move(next);
  }
  const int W = weyl_order();
  mul_.assign(W * W, -1);
  inv_.assign(W, -1);
  for (int a = 0; a < W; ++a)
    for (int b = 0; b < W; ++b) {
      int c = weyl_index(mat_mul(weyl_[a].matrix, weyl_[b].matrix));
      mul_[a * W + b] = c;
      if (c == 0) inv_[a] = b;
    }
  simple_w_.resize(r);
  for (int i = 0; i < r; ++i) simple_w_[i] = weyl_index(smat[i]);
  longest_ = 0;
  for (int a = 0; a < W; ++a)
    if (weyl_[a].length > weyl_[longest_].length) longest_ = a;
  const int R = static_cast<int>(roots_.size());
  act_root_.assign(W * R, -1);
  for (int a = 0; a < W; ++a)
    for (int k = 0; k < R; ++k) {
      IVec img = mat_vec(weyl_[a].dual, roots_[k].vec);
      // Locate by lattice vector; roots are distinct as lattice vectors.
      int found_idx = -1;
      for (int m = 0; m < R; ++m)
        if (roots_[m].vec == img) found_idx = m;
      if (found_idx < 0) throw InvariantViolation("Weyl group does not preserve the root set");
      act_root_[a * R + k] = found_idx;
    }
}

int RootDatum::root_index(const IVec& vec) const {
  for (size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].vec == vec) return static_cast<int>(k);
  return -1;
}

std::vector<IVec> RootDatum::positive_roots() const {
  std::vector<IVec> out;
  for (int k = 0; k < num_pos_; ++k) out.push_back(roots_[k].vec);
  return out;
}

IVec RootDatum::two_rho() const {
  IVec s(n_, 0);
  for (int k = 0; k < num_pos_; ++k)
    for (int c = 0; c < n_; ++c) s[c] += roots_[k].vec[c];
  return s;
}

bool RootDatum::rho_hat_integral() const {
  return std::all_of(two_rho_hat_.begin(), two_rho_hat_.end(), [](int x) { return x % 2 == 0; });
}

IVec RootDatum::rho_hat() const {
  if (!rho_hat_integral()) throw Error("rho_hat is not a cocharacter of " + name_);
  IVec r = two_rho_hat_;
  for (auto& x : r) x /= 2;
  return r;
}

int RootDatum::weyl_index(const IMat& matrix) const {
  auto it = weyl_lookup_.find(imat_key(matrix));
  return it == weyl_lookup_.end() ? -1 : it->second;
}

bool RootDatum::is_dominant(const IVec& lam) const {
  for (const auto& a : simple_roots_)
    if (dot(a, lam) < 0) return false;
  return true;
}

bool RootDatum::is_strictly_dominant(const IVec& lam) const {
  for (const auto& a : simple_roots_)
    if (dot(a, lam) <= 0) return false;
  return true;
}

IVec RootDatum::dominant_rep(const IVec& lam) const {
  IVec x = lam;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rank(); ++i) {
      int p = dot(simple_roots_[i], x);
      if (p < 0) {
        for (int c = 0; c < n_; ++c) x[c] -= p * simple_coroots_[i][c];
        changed = true;
      }
    }
  }
  return x;
}

bool RootDatum::coroot_coords(const IVec& x, std::vector<mpq_class>* out) const {
  // Solve sum_i c_i alpha_i^vee = x over Q by elimination on the n x r system.
  const int r = rank();
  std::vector<std::vector<mpq_class>> m(n_, std::vector<mpq_class>(r + 1));
  for (int k = 0; k < n_; ++k) {
    for (int i = 0; i < r; ++i) m[k][i] = simple_coroots_[i][k];
    m[k][r] = x[k];
  }
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < r && row < n_; ++col) {
    int piv = -1;
    for (int k = row; k < n_; ++k)
      if (m[k][col] != 0) piv = k;
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    for (int k = 0; k < n_; ++k) {
      if (k == row || m[k][col] == 0) continue;
      mpq_class f = m[k][col] / m[row][col];
      for (int c = col; c <= r; ++c) m[k][c] -= f * m[row][c];
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int k = row; k < n_; ++k)
    if (m[k][r] != 0) return false;
  if (out) {
    out->assign(r, 0);
    for (int k = 0; k < row; ++k) (*out)[pivcol[k]] = m[k][r] / m[k][pivcol[k]];
  }
  return true;
}

bool RootDatum::dominance_leq(const IVec& lam, const IVec& mu) const {
  IVec d(n_);
  for (int c = 0; c < n_; ++c) d[c] = mu[c] - lam[c];
  std::vector<mpq_class> co;
  if (!coroot_coords(d, &co)) return false;
  for (auto& v : co) {
    v.canonicalize();
    if (v < 0 || v.get_den() != 1) return false;
  }
  return true;
}

int RootDatum::pair_two_rho(const IVec& lam) const { return dot(two_rho(), lam); }

}  // namespace wexp
