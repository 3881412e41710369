#include "wexp/exp_module.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wexp/errors.hpp"

namespace wexp {

void exp_add_to(BigExpVector& acc, const ExpLabel& w, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

void exp_add_to(ExpModVector& acc, const IVec& nu, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = acc.find(nu);
  if (it == acc.end()) {
    acc.emplace(nu, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

bool exp_equal(const BigExpVector& a, const BigExpVector& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [w, c] : a) {
    auto it = b.find(w);
    if (it == b.end() || it->second != c) return false;
  }
  return true;
}

std::vector<FiberStep> steps_of(const AffineWeyl& W, const AffineWeylElement& x) {
  ReducedWord rw = W.reduced_word(x);
  std::vector<FiberStep> out;
  if (rw.omega != W.identity()) out.push_back(FiberStep::omega(rw.omega));
  for (int s : rw.word) out.push_back(FiberStep::simple(s));
  return out;
}

// ---------------------------------------------------------------------------
// ExpModule

ExpModule::ExpModule(const AffineWeyl& W, const CaseTable& table) : W_(W), table_(table) {}

void ExpModule::validate_label(const ExpLabel& w) const {
  if (w.el.n != W_.rd().lattice_rank()) throw ConfigError("label has the wrong lattice rank");
  if (w.tag == Tag::Zero && !W_.is_left_max(w.el))
    throw ConfigError("zero-tagged label " + W_.label_str(w) + " is not left-maximal");
}

namespace {

bool is_finite_simple_root(const AffineWeyl& W, const AffineRoot& r) {
  return r.level == 0 && W.rd().is_simple_root(r.root);
}

}  // namespace

std::string ExpModule::key_lemma_case(const ExpLabel& w, int s) const {
  validate_label(w);
  if (s < 0 || s >= W_.num_simple()) throw ConfigError("simple reflection index out of range");
  const AffineRoot beta = W_.act(w.el, W_.simple_affine_root(s));
  const bool ascent = W_.is_positive(beta);
  const AffineWeylElement ws = W_.mul_simple_right(w.el, s);
  const AffineRoot neg{W_.rd().neg_root(beta.root), -beta.level};
  if (w.tag == Tag::Coset) {
    if (ascent) {
      if (!W_.is_left_max(ws)) return "I-nosplit";
      return is_finite_simple_root(W_, beta) ? "I-iso" : "I-triv";
    }
    if (W_.is_left_max(w.el) && is_finite_simple_root(W_, neg)) return "II-off-kernel";
    return "II-in-kernel";
  }
  if (ascent) {
    if (!W_.is_left_max(ws))
      throw InvariantViolation("ascent from the zero-tagged label " + W_.label_str(w) + " leaves the left-maximal set");
    return is_finite_simple_root(W_, beta) ? "IIIa-iso" : "IIIa-triv";
  }
  return is_finite_simple_root(W_, neg) ? "IIIb-open-immersion" : "IIIb-triv";
}

const ExpModule::Row& ExpModule::line_row(const ExpLabel& w, int s) const {
  Key key{w, s};
  auto it = line_cache_.find(key);
  if (it != line_cache_.end()) return it->second;
  const CaseEntry& e = table_.at(key_lemma_case(w, s));
  const AffineWeylElement ws = W_.mul_simple_right(w.el, s);
  const AffineWeylElement& cell = e.cell == CaseCell::W ? w.el : ws;
  const AffineWeylElement& other = e.cell == CaseCell::W ? ws : w.el;
  Row row;
  if (e.coset) row.push_back({{Tag::Coset, cell}, e.coset->class_in_q()});
  if (e.zero) {
    if (!W_.is_left_max(cell))
      throw InvariantViolation("case " + e.id + " places a class on the open orbit of a non-splitting cell");
    row.push_back({{Tag::Zero, cell}, e.zero->class_in_q()});
  }
  if (e.point) {
    const Tag t = e.point_at == PointTarget::Auto && W_.is_left_max(other) ? Tag::Zero : Tag::Coset;
    row.push_back({{t, other}, e.point->class_in_q()});
  }
  return line_cache_.emplace(key, std::move(row)).first->second;
}

QPoly ExpModule::key_lemma_class(const ExpLabel& target, const ExpLabel& w, int s) const {
  validate_label(target);
  for (const auto& [t, c] : line_row(w, s))
    if (t == target) return c;
  return QPoly();
}

BigExpVector ExpModule::line_decomposition(const ExpLabel& w, int s) const {
  BigExpVector out;
  for (const auto& [t, c] : line_row(w, s)) exp_add_to(out, t, c);
  return out;
}

const ExpModule::Row& ExpModule::action_row(const ExpLabel& w, int s) const {
  Key key{w, s};
  auto it = action_cache_.find(key);
  if (it != action_cache_.end()) return it->second;
  validate_label(w);
  Row row;
  // Lines through basepoints of orbits t meet O_w only if the Iwahori
  // label of t is w or ws.
  for (const AffineWeylElement& x : {w.el, W_.mul_simple_right(w.el, s)})
    for (Tag tag : {Tag::Coset, Tag::Zero}) {
      if (tag == Tag::Zero && !W_.is_left_max(x)) continue;
      const ExpLabel t{tag, x};
      for (const auto& [y, c] : line_row(t, s))
        if (y == w) row.push_back({t, c});
    }
  return action_cache_.emplace(key, std::move(row)).first->second;
}

BigExpVector ExpModule::basis_action(const ExpLabel& w, int s) const {
  BigExpVector out;
  for (const auto& [t, c] : action_row(w, s)) exp_add_to(out, t, c);
  return out;
}

BigExpVector ExpModule::ts_action(const BigExpVector& v, int s) const {
  BigExpVector out;
  out.reserve(v.size() * 3);
  for (const auto& [w, c] : v)
    for (const auto& [t, k] : action_row(w, s)) exp_add_to(out, t, c * k);
  return out;
}

BigExpVector ExpModule::omega_action(const BigExpVector& v, const AffineWeylElement& tau) const {
  if (W_.length(tau) != 0) throw ConfigError("omega_action needs a length-zero element, got " + W_.element_str(tau));
  BigExpVector out;
  out.reserve(v.size());
  for (const auto& [w, c] : v) out.emplace(ExpLabel{w.tag, W_.mul(w.el, tau)}, c);
  return out;
}

BigExpVector ExpModule::convolve(const BigExpVector& v, const std::vector<FiberStep>& word) const {
  BigExpVector x = v;
  for (const FiberStep& st : word) x = st.is_omega ? omega_action(x, st.tau) : ts_action(x, st.s);
  return x;
}

QPoly ExpModule::fiber_class(const ExpLabel& v0, const std::vector<FiberStep>& word, const ExpLabel& target) const {
  validate_label(v0);
  validate_label(target);
  BigExpVector x = convolve({{v0, QPoly(1)}}, word);
  auto it = x.find(target);
  return it == x.end() ? QPoly() : it->second;
}

// ---------------------------------------------------------------------------
// ExpModel

namespace {

// Columns of an echelon basis of the lattice spanned by 2 e_i and 2 rho_hat.
IMat extended_basis_doubled(const RootDatum& G) {
  const int n = G.lattice_rank();
  std::vector<IVec> rows;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 2;
    rows.push_back(e);
  }
  rows.push_back(G.two_rho_hat());
  // Row echelon form over Z by Euclidean elimination, column by column.
  int top = 0;
  for (int c = 0; c < n; ++c) {
    for (;;) {
      int piv = -1;
      for (int r = top; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][c] != 0 && (piv < 0 || std::abs(rows[r][c]) < std::abs(rows[piv][c]))) piv = r;
      if (piv < 0) break;
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (int r = top + 1; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][c] == 0) continue;
        const int f = rows[r][c] / rows[top][c];
        for (int k = 0; k < n; ++k) rows[r][k] -= f * rows[top][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    ++top;
  }
  IMat cols(n, IVec(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cols[i][j] = rows[j][i];
  return cols;
}

// Solves B c = y exactly; B is the column matrix above (upper triangular
// in row echelon transpose form, i.e. lower triangular as columns).
bool solve_integral(const IMat& B, const IVec& y, IVec* out) {
  const int n = static_cast<int>(y.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = B[i][j];
    a[i][n] = y[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("singular lattice basis");
    std::swap(a[c], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  IVec c(n);
  for (int i = 0; i < n; ++i) {
    mpq_class v = a[i][n] / a[i][i];
    if (v.get_den() != 1) return false;
    c[i] = static_cast<int>(v.get_num().get_si());
  }
  *out = c;
  return true;
}

RootDatum extended_datum(const RootDatum& G) {
  if (G.rho_hat_integral()) return G;
  const IMat B = extended_basis_doubled(G);
  const int n = G.lattice_rank();
  IMat roots, coroots;
  for (int i = 0; i < G.rank(); ++i) {
    IVec a(n);
    for (int j = 0; j < n; ++j) {
      int d = 0;
      for (int k = 0; k < n; ++k) d += G.simple_roots()[i][k] * B[k][j];
      if (d % 2 != 0) throw Error("root not integral on the extended lattice");
      a[j] = d / 2;
    }
    roots.push_back(a);
    IVec c2 = G.simple_coroots()[i];
    for (int& x : c2) x *= 2;
    IVec c;
    if (!solve_integral(B, c2, &c)) throw Error("coroot not in the extended lattice");
    coroots.push_back(c);
  }
  return RootDatum(G.name() + "+rho", G.cartan(), roots, coroots);
}

}  // namespace

ExpModel::ExpModel(const RootDatum& G, const CaseTable& table)
    : G_(G), Wp_(extended_datum(G)), E_(Wp_, table) {
  const int n = G_.lattice_rank();
  if (G_.rho_hat_integral()) {
    basis2_ = identity_mat(n);
    for (int i = 0; i < n; ++i) basis2_[i][i] = 2;
  } else {
    basis2_ = extended_basis_doubled(G_);
  }
}

IVec ExpModel::ext_coords_doubled(const IVec& x2) const {
  IVec c;
  if (!solve_integral(basis2_, x2, &c)) throw Error("vector is not in the extended lattice");
  return c;
}

IVec ExpModel::ext_coords(const IVec& x) const {
  IVec x2 = x;
  for (int& v : x2) v *= 2;
  return ext_coords_doubled(x2);
}

IVec ExpModel::shifted(const IVec& nu) const {
  IVec x2 = nu;
  const IVec& r2 = G_.two_rho_hat();
  for (size_t i = 0; i < x2.size(); ++i) x2[i] = 2 * x2[i] + r2[i];
  return ext_coords_doubled(x2);
}

std::optional<IVec> ExpModel::unshift(const IVec& lam_ext) const {
  const int n = G_.lattice_rank();
  IVec nu(n);
  const IVec& r2 = G_.two_rho_hat();
  for (int i = 0; i < n; ++i) {
    int x2 = 0;
    for (int j = 0; j < n; ++j) x2 += basis2_[i][j] * lam_ext[j];
    x2 -= r2[i];
    if (x2 % 2 != 0) return std::nullopt;
    nu[i] = x2 / 2;
  }
  return nu;
}

ExpLabel ExpModel::closed_label(const IVec& nu) const {
  if (!G_.is_dominant(nu)) throw Error("exponential module index must be dominant, got " + ivec_str(nu));
  return {Tag::Coset, Wp_.translation(shifted(nu))};
}

ExpLabel ExpModel::open_label(const IVec& nu) const {
  ExpLabel l = closed_label(nu);
  l.tag = Tag::Zero;
  return l;
}

BigExpVector ExpModel::lift_closed(const IVec& nu) const {
  const ExpLabel target = closed_label(nu);
  const Facet f0 = Facet::f0(Wp_.rd().rank());
  BigExpVector out;
  for (int u = 0; u < Wp_.rd().weyl_order(); ++u)
    for (Tag tag : {Tag::Coset, Tag::Zero}) {
      const ExpLabel l{tag, Wp_.mul(target.el, Wp_.finite(u))};
      if (tag == Tag::Zero && !Wp_.is_left_max(l.el)) continue;
      if (Wp_.orbit_projection(l, f0) == target) exp_add_to(out, l, QPoly(1));
    }
  return out;
}

std::vector<AffineWeylElement> ExpModel::spherical_coset_reps(const IVec& mu) const {
  if (!G_.is_dominant(mu)) throw Error("spherical index must be dominant, got " + ivec_str(mu));
  const RootDatum& rd = Wp_.rd();
  const IVec mu_ext = ext_coords(mu);
  std::set<IVec> orbit;
  for (int u = 0; u < rd.weyl_order(); ++u) orbit.insert(rd.weyl_act_coweight(u, mu_ext));
  std::vector<AffineWeylElement> out;
  for (const IVec& lam : orbit) {
    AffineWeylElement x = Wp_.translation(lam);
    for (bool moved = true; moved;) {
      moved = false;
      for (int i : Wp_.finite_simple_indices())
        if (Wp_.left_descent(x, i)) {
          x = Wp_.mul_simple_left(i, x);
          moved = true;
        }
    }
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigExpVector ExpModel::lifted_action(const BigExpVector& F, const IVec& mu) const {
  BigExpVector out;
  for (const AffineWeylElement& x : spherical_coset_reps(mu))
    for (const auto& [w, c] : E_.convolve(F, steps_of(Wp_, x))) exp_add_to(out, w, c);
  return out;
}

BigExpVector ExpModel::push_to_f0(const BigExpVector& v) const {
  const Facet a0 = Facet::a0();
  const Facet f0 = Facet::f0(Wp_.rd().rank());
  BigExpVector out;
  for (const auto& [w, c] : v) {
    const ExpLabel p = Wp_.orbit_projection(w, f0);
    const QPoly num = orbit_shape(Wp_, w, a0).class_in_q();
    const QPoly den = orbit_shape(Wp_, p, f0).class_in_q();
    QPoly ratio;
    try {
      ratio = qpoly_exact_div(num, den);
    } catch (const DivisionNotExact&) {
      throw InvariantViolation("orbit class of " + Wp_.label_str(w) + " is not a multiple of its image class");
    }
    exp_add_to(out, p, c * ratio);
  }
  return out;
}

ExpModVector ExpModel::quotient_to_exp(const BigExpVector& v, const Facet& f) const {
  const Facet f0 = Facet::f0(Wp_.rd().rank());
  BigExpVector over_f0;
  if (f == Facet::a0()) over_f0 = push_to_f0(v);
  else if (f == f0) over_f0 = v;
  else throw ConfigError("the exponential module quotient is defined over a0 or f0 labels only");
  ExpModVector out;
  for (const auto& [p, c] : over_f0) {
    if (!Wp_.is_right_minimal(p.el, f0)) throw ConfigError("label " + Wp_.label_str(p) + " is not over f0");
    if (!Wp_.is_left_max(p.el)) continue;  // equivariant class of a non-splitting orbit
    if (p.el.v != 0) throw InvariantViolation("splitting f0 label " + Wp_.label_str(p) + " is not a translation");
    const std::optional<IVec> nu = unshift(p.el.lambda());
    if (!nu) throw InvariantViolation("label " + Wp_.label_str(p) + " lies outside the image of the original group");
    exp_add_to(out, *nu, p.tag == Tag::Coset ? c : -c);
  }
  return out;
}

ExpModVector ExpModel::basis_action(const IVec& lam, const IVec& mu) const {
  auto key = std::make_pair(lam, mu);
  auto it = action_cache_.find(key);
  if (it != action_cache_.end()) return it->second;
  const BigExpVector g = lifted_action(lift_closed(lam), mu);
  // The lifted function is constant along fibers of Fl -> Gr.
  const Facet f0 = Facet::f0(Wp_.rd().rank());
  std::unordered_map<ExpLabel, QPoly, ExpLabelHash> fiber_value;
  for (const auto& [w, c] : g) {
    const ExpLabel p = Wp_.orbit_projection(w, f0);
    auto [pos, fresh] = fiber_value.emplace(p, c);
    if (!fresh && pos->second != c)
      throw InvariantViolation("lifted convolution is not constant along the fiber over " + Wp_.label_str(p));
  }
  const QPoly P = SphericalAlgebra(Wp_).poincare_poly();
  ExpModVector out;
  for (const auto& [nu, c] : quotient_to_exp(g, Facet::a0())) {
    try {
      exp_add_to(out, nu, qpoly_exact_div(c, P));
    } catch (const DivisionNotExact&) {
      throw NormalizationFailure("pushforward coefficient at " + ivec_str(nu) + " is not divisible by the Poincare polynomial");
    }
  }
  return action_cache_.emplace(key, out).first->second;
}

ExpModVector ExpModel::spherical_action(const ExpModVector& v, const IVec& mu) const {
  ExpModVector out;
  for (const auto& [lam, c] : v)
    for (const auto& [nu, k] : basis_action(lam, mu)) exp_add_to(out, nu, c * k);
  return out;
}

bool ExpModel::k_invariance_check(const IVec& nu) const {
  const BigExpVector F = lift_closed(nu);
  BigExpVector sum;
  for (int u = 0; u < Wp_.rd().weyl_order(); ++u)
    for (const auto& [w, c] : E_.convolve(F, steps_of(Wp_, Wp_.finite(u)))) exp_add_to(sum, w, c);
  const QPoly P = SphericalAlgebra(Wp_).poincare_poly();
  BigExpVector expect;
  for (const auto& [w, c] : F) exp_add_to(expect, w, c * P);
  return exp_equal(sum, expect);
}

QPoly ExpModel::closed_fiber_class(const IVec& lam, const IVec& mu) const {
  const BigExpVector g = lifted_action(lift_closed(IVec(G_.lattice_rank(), 0)), mu);
  auto it = g.find(closed_label(lam));
  return it == g.end() ? QPoly() : it->second;
}

bool ExpModel::dimension_bound_check(const IVec& lam, const IVec& mu) const {
  if (lam == mu) throw ConfigError("dimension bound check needs lambda != mu");
  const QPoly c = closed_fiber_class(lam, mu);
  if (c.is_zero()) return true;
  IVec diff(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) diff[i] = mu[i] - lam[i];
  return 2 * c.degree() < G_.pair_two_rho(diff);
}

RankOneReport ExpModel::verify_rank_one(const std::vector<IVec>& window_in) const {
  RankOneReport rep;
  rep.window = window_in;
  std::sort(rep.window.begin(), rep.window.end(), [&](const IVec& a, const IVec& b) {
    const int ha = G_.pair_two_rho(a), hb = G_.pair_two_rho(b);
    return ha != hb ? ha < hb : a < b;
  });
  const auto& win = rep.window;
  const size_t m = win.size();
  for (const IVec& mu : win)
    if (!G_.is_dominant(mu)) throw ConfigError("rank-one window entry " + ivec_str(mu) + " is not dominant");
  std::map<IVec, size_t> pos;
  for (size_t i = 0; i < m; ++i) pos[win[i]] = i;
  rep.matrix.assign(m, std::vector<QPoly>(m));
  const IVec zero(G_.lattice_rank(), 0);
  for (size_t j = 0; j < m; ++j)
    for (const auto& [nu, c] : basis_action(zero, win[j])) {
      auto it = pos.find(nu);
      if (it == pos.end())
        throw WindowTooSmall("m_0 * 1_" + ivec_str(win[j]) + " has support at " + ivec_str(nu) + " outside the window");
      rep.matrix[it->second][j] = c;
    }
  rep.determinant = QPoly(1);
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = 0; i < m; ++i)
      if (!rep.matrix[i][j].is_zero() && !G_.dominance_leq(win[i], win[j]))
        throw RankOneViolated("m_0 * 1_" + ivec_str(win[j]) + " has a term at " + ivec_str(win[i]) + " not below it");
    int k = 0, sign = 0;
    if (!rep.matrix[j][j].is_signed_q_power(&k, &sign))
      throw RankOneViolated("diagonal entry at " + ivec_str(win[j]) + " is " + rep.matrix[j][j].str() + ", not a signed power of q");
    rep.diag_exponent.push_back(k);
    rep.diag_sign.push_back(sign);
    rep.determinant *= rep.matrix[j][j];
  }
  // A_mu = d_mu^{-1} (1_mu - sum_{nu < mu} a_{nu mu} A_nu), in window order.
  rep.solutions.assign(m, {});
  for (size_t j = 0; j < m; ++j) {
    SphericalElement a = {{win[j], QPoly(1)}};
    for (size_t i = 0; i < j; ++i) {
      if (rep.matrix[i][j].is_zero()) continue;
      for (const auto& [kappa, c] : rep.solutions[i]) {
        QPoly& slot = a[kappa];
        QPoly t = c * rep.matrix[i][j];
        t.set_laurent(true);
        slot.set_laurent(true);
        slot -= t;
      }
    }
    QPoly inv = QPoly::q_pow(-rep.diag_exponent[j], true);
    if (rep.diag_sign[j] < 0) inv = -inv;
    SphericalElement clean;
    for (auto& [kappa, c] : a)
      if (!c.is_zero()) clean[kappa] = c * inv;
    rep.solutions[j] = clean;
  }
  // Certificate: m_0 * A_mu recomputed from the matrix equals m_mu.
  for (size_t j = 0; j < m; ++j) {
    std::vector<QPoly> col(m);
    for (const auto& [kappa, c] : rep.solutions[j]) {
      const size_t kk = pos.at(kappa);
      for (size_t i = 0; i < m; ++i) {
        QPoly t = rep.matrix[i][kk] * c;
        t.set_laurent(true);
        col[i] += t;
      }
    }
    for (size_t i = 0; i < m; ++i) {
      QPoly expect(i == j ? 1L : 0L);
      if (col[i] != expect) throw RankOneViolated("triangular solve certificate failed at " + ivec_str(win[j]));
    }
  }
  return rep;
}

nlohmann::json ExpModel::to_json(const ExpModVector& v) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [nu, c] : v) arr.push_back({{"nu", nu}, {"qpoly", c.to_json()}});
  return arr;
}

nlohmann::json RankOneReport::to_json() const {
  nlohmann::json mat = nlohmann::json::array();
  for (const auto& row : matrix) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(c.to_json());
    mat.push_back(r);
  }
  nlohmann::json sols = nlohmann::json::array();
  for (size_t j = 0; j < solutions.size(); ++j) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [kappa, c] : solutions[j]) terms.push_back({{"mu", kappa}, {"qpoly", c.to_json()}});
    sols.push_back({{"target", window[j]}, {"element", terms}});
  }
  return {{"window", window},
          {"matrix", mat},
          {"diag_exponent", diag_exponent},
          {"diag_sign", diag_sign},
          {"determinant", determinant.to_json()},
          {"basis_certificate", sols}};
}

}  // namespace wexp
