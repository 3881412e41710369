#include "wexp/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "wexp/errors.hpp"

namespace wexp {

AffineWeylElement AffineWeylElement::make(const IVec& lambda, int v) {
  if (static_cast<int>(lambda.size()) > kMaxLatticeRank) throw ConfigError("lattice rank too large");
  AffineWeylElement w;
  w.n = static_cast<int>(lambda.size());
  std::copy(lambda.begin(), lambda.end(), w.lam.begin());
  w.v = v;
  return w;
}

Facet Facet::f0(int rank) {
  Facet f;
  for (int i = 1; i <= rank; ++i) f.reflections.push_back(i);
  return f;
}

bool Facet::contains(int j) const { return std::find(reflections.begin(), reflections.end(), j) != reflections.end(); }

AffineWeyl::AffineWeyl(RootDatum rd) : rd_(std::move(rd)) {
  const int r = rd_.rank(), n = rd_.lattice_rank();
  const int nc = rd_.num_components();
  simple_.resize(num_simple());
  simple_roots_aff_.resize(num_simple());
  highest_reflection_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const Root& th = rd_.roots()[rd_.highest_root(c)];
    IMat m = identity_mat(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m[a][b] -= th.coroot[a] * th.vec[b];
    int sv = rd_.weyl_index(m);
    if (sv < 0) throw InvariantViolation("highest root reflection not found in W_0");
    highest_reflection_[c] = sv;
    IVec mt = th.coroot;
    for (auto& x : mt) x = -x;
    int j = c == 0 ? 0 : r + c;
    simple_[j] = AffineWeylElement::make(mt, sv);
    simple_roots_aff_[j] = {rd_.neg_root(rd_.highest_root(c)), 1};
  }
  for (int i = 0; i < r; ++i) {
    simple_[i + 1] = AffineWeylElement::make(IVec(n, 0), rd_.weyl_simple(i));
    simple_roots_aff_[i + 1] = {rd_.simple_root_index(i), 0};
  }
}

std::vector<int> AffineWeyl::finite_simple_indices() const {
  std::vector<int> v;
  for (int i = 1; i <= rd_.rank(); ++i) v.push_back(i);
  return v;
}

std::vector<int> AffineWeyl::affine_simple_indices() const {
  std::vector<int> v = {0};
  for (int c = 1; c < rd_.num_components(); ++c) v.push_back(rd_.rank() + c);
  return v;
}

AffineRoot AffineWeyl::simple_affine_root(int j) const { return simple_roots_aff_.at(j); }

int AffineWeyl::coxeter_m(int j, int k) const {
  AffineWeylElement p = mul(simple_[j], simple_[k]);
  AffineWeylElement x = p;
  for (int m = 1; m <= 12; ++m) {
    if (x == identity()) return m;
    x = mul(x, p);
  }
  return 0;  // infinite order
}

AffineWeylElement AffineWeyl::identity() const { return AffineWeylElement::make(IVec(rd_.lattice_rank(), 0), 0); }

AffineWeylElement AffineWeyl::translation(const IVec& lam) const {
  if (static_cast<int>(lam.size()) != rd_.lattice_rank()) throw ConfigError("coweight has wrong dimension");
  return AffineWeylElement::make(lam, 0);
}

AffineWeylElement AffineWeyl::finite(int v) const { return AffineWeylElement::make(IVec(rd_.lattice_rank(), 0), v); }

AffineWeylElement AffineWeyl::mul(const AffineWeylElement& a, const AffineWeylElement& b) const {
  // (t_l v)(t_m u) = t_{l + v m} v u
  AffineWeylElement r;
  r.n = a.n;
  const IMat& M = rd_.weyl(a.v).matrix;
  for (int i = 0; i < a.n; ++i) {
    int s = a.lam[i];
    for (int k = 0; k < a.n; ++k) s += M[i][k] * b.lam[k];
    r.lam[i] = s;
  }
  r.v = rd_.weyl_mul(a.v, b.v);
  return r;
}

AffineWeylElement AffineWeyl::inverse(const AffineWeylElement& a) const {
  AffineWeylElement r;
  r.n = a.n;
  r.v = rd_.weyl_inv(a.v);
  const IMat& M = rd_.weyl(r.v).matrix;
  for (int i = 0; i < a.n; ++i) {
    int s = 0;
    for (int k = 0; k < a.n; ++k) s -= M[i][k] * a.lam[k];
    r.lam[i] = s;
  }
  return r;
}

AffineWeylElement AffineWeyl::mul_simple_right(const AffineWeylElement& w, int j) const { return mul(w, simple_[j]); }

AffineWeylElement AffineWeyl::mul_simple_left(int j, const AffineWeylElement& w) const { return mul(simple_[j], w); }

AffineRoot AffineWeyl::act(const AffineWeylElement& w, const AffineRoot& ar) const {
  // (t_l v)(alpha + n) = v alpha + <v alpha, l> + n
  int vr = rd_.weyl_act_root(w.v, ar.root);
  const IVec& vec = rd_.roots()[vr].vec;
  int p = 0;
  for (int i = 0; i < w.n; ++i) p += vec[i] * w.lam[i];
  return {vr, ar.level + p};
}

bool AffineWeyl::is_positive(const AffineRoot& ar) const {
  return ar.level >= 1 || (ar.level == 0 && ar.root < rd_.num_positive());
}

mpq_class AffineWeyl::barycenter_pairing(int root) const {
  // The barycenter b of a0 has <alpha_j, b> = 1 / ((r_c + 1) c_j), where c_j
  // is the coefficient of alpha_j in the highest root of its component and
  // r_c the rank of that component.
  const Root& rt = rd_.roots()[root];
  mpq_class s = 0;
  for (int c = 0; c < rd_.num_components(); ++c) {
    const Root& th = rd_.roots()[rd_.highest_root(c)];
    const int rc = static_cast<int>(rd_.components()[c].size());
    for (int j : rd_.components()[c]) {
      if (rt.simple[j] == 0) continue;
      s += mpq_class(rt.simple[j], (rc + 1) * th.simple[j]);
    }
  }
  s.canonicalize();
  return s;
}

int AffineWeyl::alcove_sign(const AffineRoot& ar) const {
  mpq_class v = barycenter_pairing(ar.root) + ar.level;
  return sgn(v);
}

int AffineWeyl::length(const AffineWeylElement& w) const {
  // Count positive affine roots beta = alpha + n with w^{-1} beta < 0, where
  // w^{-1}(alpha + n) = v^{-1} alpha + n - <alpha, lambda>.
  const int R = static_cast<int>(rd_.roots().size());
  const int vinv = rd_.weyl_inv(w.v);
  int count = 0;
  for (int k = 0; k < R; ++k) {
    const IVec& vec = rd_.roots()[k].vec;
    int p = 0;
    for (int i = 0; i < w.n; ++i) p += vec[i] * w.lam[i];
    int img = rd_.weyl_act_root(vinv, k);
    const int bound = std::abs(p) + 1;
    for (int n = -bound; n <= bound; ++n) {
      if (!is_positive({k, n})) continue;
      if (!is_positive({img, n - p})) ++count;
    }
  }
  return count;
}

bool AffineWeyl::right_descent(const AffineWeylElement& w, int j) const {
  return !is_positive(act(w, simple_roots_aff_[j]));
}

bool AffineWeyl::left_descent(const AffineWeylElement& w, int j) const {
  return !is_positive(act(inverse(w), simple_roots_aff_[j]));
}

ReducedWord AffineWeyl::reduced_word(const AffineWeylElement& w) const {
  ReducedWord rw;
  AffineWeylElement x = w;
  std::vector<int> stripped;
  for (;;) {
    int d = -1;
    for (int j = 0; j < num_simple(); ++j)
      if (right_descent(x, j)) {
        d = j;
        break;
      }
    if (d < 0) break;
    x = mul_simple_right(x, d);
    stripped.push_back(d);
  }
  rw.omega = x;
  rw.word.assign(stripped.rbegin(), stripped.rend());
  return rw;
}

AffineWeylElement AffineWeyl::from_word(const AffineWeylElement& omega, const std::vector<int>& word) const {
  AffineWeylElement x = omega;
  for (int j : word) x = mul_simple_right(x, j);
  return x;
}

bool AffineWeyl::bruhat_leq(const AffineWeylElement& x0, const AffineWeylElement& y0) const {
  // Lifting property: if ys < y then x <= y iff min(x, xs) <= ys.
  ReducedWord rx = reduced_word(x0), ry = reduced_word(y0);
  if (rx.omega != ry.omega) return false;
  if (rx.word.size() > ry.word.size()) return false;
  AffineWeylElement x = x0, y = y0;
  int lx = static_cast<int>(rx.word.size());
  for (auto it = ry.word.rbegin(); it != ry.word.rend(); ++it) {
    if (lx == 0) return true;
    int s = *it;
    if (right_descent(x, s)) {
      x = mul_simple_right(x, s);
      --lx;
    }
    y = mul_simple_right(y, s);
  }
  return x == y;
}

AffineWeylElement AffineWeyl::min_coset_rep(const AffineWeylElement& w, const Facet& f) const {
  AffineWeylElement x = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : f.reflections)
      if (right_descent(x, j)) {
        x = mul_simple_right(x, j);
        changed = true;
      }
  }
  return x;
}

bool AffineWeyl::is_right_minimal(const AffineWeylElement& w, const Facet& f) const {
  for (int j : f.reflections)
    if (right_descent(w, j)) return false;
  return true;
}

bool AffineWeyl::is_left_max(const AffineWeylElement& w) const {
  AffineWeylElement wi = inverse(w);
  for (int i = 0; i < rd_.rank(); ++i)
    if (is_positive(act(wi, {rd_.simple_root_index(i), 0}))) return false;
  return true;
}

bool AffineWeyl::is_left_max_bruteforce(const AffineWeylElement& w) const {
  const int lw = length(w);
  for (int u = 0; u < rd_.weyl_order(); ++u)
    if (length(mul(finite(u), w)) > lw) return false;
  return true;
}

bool AffineWeyl::zero_W_membership(const AffineWeylElement& w, const Facet& f) const {
  if (!is_right_minimal(w, f)) throw Error("element " + element_str(w) + " is not minimal in its right coset");
  return is_left_max(w);
}

ExpLabel AffineWeyl::orbit_projection(const ExpLabel& w, const Facet& f) const {
  AffineWeylElement m = min_coset_rep(w.el, f);
  if (w.tag == Tag::Coset) return {Tag::Coset, m};
  return {is_left_max(m) ? Tag::Zero : Tag::Coset, m};
}

ExpLabel AffineWeyl::canonical_lift(const ExpLabel& w, const Facet& f) const {
  if (!is_right_minimal(w.el, f)) throw Error("label element is not a minimal coset representative");
  if (w.tag == Tag::Zero && !is_left_max(w.el)) throw Error("zero-tagged label is not left-maximal");
  return w;
}

void AffineWeyl::validate_facet(const Facet& f) const {
  std::set<int> seen;
  for (int j : f.reflections) {
    if (j < 0 || j >= num_simple()) throw ConfigError("facet reflection index " + std::to_string(j) + " out of range");
    if (!seen.insert(j).second) throw ConfigError("facet lists a reflection twice");
  }
  for (int c = 0; c < rd_.num_components(); ++c) {
    int aff = c == 0 ? 0 : rd_.rank() + c;
    if (!seen.count(aff)) continue;
    bool all = true;
    for (int i : rd_.components()[c])
      if (!seen.count(i + 1)) all = false;
    if (all) throw ConfigError("facet generates an infinite parahoric Weyl group");
  }
}

std::vector<AffineWeylElement> AffineWeyl::omega_elements(int radius) const {
  std::vector<AffineWeylElement> out = {identity()};
  const int n = rd_.lattice_rank();
  IVec lam(n, -radius);
  for (;;) {
    AffineWeylElement tau = omega_part(translation(lam));
    if (std::find(out.begin(), out.end(), tau) == out.end()) out.push_back(tau);
    int i = 0;
    while (i < n && lam[i] == radius) lam[i++] = -radius;
    if (i == n) break;
    ++lam[i];
  }
  return out;
}

std::vector<AffineWeylElement> AffineWeyl::enumerate_elements(int bound, int omega_radius) const {
  struct Item {
    int len, omega;
    std::vector<int> word;
    AffineWeylElement el;
  };
  std::vector<AffineWeylElement> base = {identity()};
  std::vector<std::vector<int>> words = {{}};
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen = {identity()};
  std::vector<size_t> layer = {0};
  for (int len = 1; len <= bound; ++len) {
    std::vector<size_t> next;
    for (size_t idx : layer)
      for (int j = 0; j < num_simple(); ++j) {
        if (right_descent(base[idx], j)) continue;
        AffineWeylElement x = mul_simple_right(base[idx], j);
        if (!seen.insert(x).second) continue;
        base.push_back(x);
        words.push_back({});
        next.push_back(base.size() - 1);
      }
    layer = std::move(next);
  }
  auto omegas = omega_elements(omega_radius);
  std::vector<Item> items;
  for (size_t i = 0; i < base.size(); ++i) {
    ReducedWord rw = reduced_word(base[i]);
    for (size_t t = 0; t < omegas.size(); ++t)
      items.push_back({static_cast<int>(rw.word.size()), static_cast<int>(t), rw.word, mul(omegas[t], base[i])});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.len != b.len) return a.len < b.len;
    if (a.omega != b.omega) return a.omega < b.omega;
    return a.word < b.word;
  });
  std::vector<AffineWeylElement> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back(it.el);
  return out;
}

std::vector<ExpLabel> AffineWeyl::enumerate_exp_labels(const Facet& f, int length_bound, int omega_radius) const {
  validate_facet(f);
  std::vector<ExpLabel> out;
  for (const auto& w : enumerate_elements(length_bound, omega_radius)) {
    if (!is_right_minimal(w, f)) continue;
    out.push_back({Tag::Coset, w});
    if (is_left_max(w)) out.push_back({Tag::Zero, w});
  }
  return out;
}

nlohmann::json AffineWeyl::element_json(const AffineWeylElement& w) const {
  IVec word = rd_.weyl(w.v).word;
  for (auto& x : word) ++x;
  return {{"lambda", w.lambda()}, {"v_word", word}};
}

AffineWeylElement AffineWeyl::element_from_json(const nlohmann::json& j) const {
  IVec lam = j.at("lambda").get<IVec>();
  if (static_cast<int>(lam.size()) != rd_.lattice_rank()) throw ConfigError("element lambda has wrong dimension");
  int v = 0;
  for (int i : j.at("v_word").get<IVec>()) {
    if (i < 1 || i > rd_.rank()) throw ConfigError("v_word index out of range");
    v = rd_.weyl_mul(v, rd_.weyl_simple(i - 1));
  }
  return AffineWeylElement::make(lam, v);
}

nlohmann::json AffineWeyl::label_json(const ExpLabel& l) const {
  nlohmann::json j = element_json(l.el);
  j["tag"] = l.tag == Tag::Zero ? "zero" : "coset";
  return j;
}

ExpLabel AffineWeyl::label_from_json(const nlohmann::json& j) const {
  ExpLabel l;
  l.el = element_from_json(j);
  std::string t = j.value("tag", "coset");
  if (t == "zero")
    l.tag = Tag::Zero;
  else if (t == "coset")
    l.tag = Tag::Coset;
  else
    throw ConfigError("label tag must be 'coset' or 'zero'");
  return l;
}

std::string AffineWeyl::element_str(const AffineWeylElement& w) const {
  std::string s = "t" + ivec_str(w.lambda());
  for (int i : rd_.weyl(w.v).word) s += "s" + std::to_string(i + 1);
  return s;
}

std::string AffineWeyl::label_str(const ExpLabel& l) const {
  return std::string(l.tag == Tag::Zero ? "zero:" : "coset:") + element_str(l.el);
}

}  // namespace wexp
