#include "wexp/fq_oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wexp/errors.hpp"
#include "wexp/spherical.hpp"

namespace wexp {

namespace {

int max_abs(const std::vector<int>& v) {
  int m = 0;
  for (int x : v) m = std::max(m, std::abs(x));
  return m;
}

// Additive basis 1, p, p^2, ... of F_q over F_p in the integer encoding.
std::vector<int> additive_basis(const FiniteField& F) {
  std::vector<int> out;
  int e = 1;
  for (int k = 0; k < F.k(); ++k, e *= F.p()) out.push_back(e);
  return out;
}

}  // namespace

bool is_twisted(GroupSpec spec) { return spec != GroupSpec::IwahoriUntwisted && spec != GroupSpec::UExpUntwisted; }

std::string group_spec_name(GroupSpec spec) {
  switch (spec) {
    case GroupSpec::IwahoriTwisted: return "iwahori-twisted";
    case GroupSpec::UExpTwisted: return "uexp-twisted";
    case GroupSpec::URtimesGmTwisted: return "u-gm-twisted";
    case GroupSpec::IwahoriUntwisted: return "iwahori";
    case GroupSpec::UExpUntwisted: return "uexp";
  }
  return "";
}

GroupSpec parse_group_spec(const std::string& name) {
  for (GroupSpec g : {GroupSpec::IwahoriTwisted, GroupSpec::UExpTwisted, GroupSpec::URtimesGmTwisted,
                      GroupSpec::IwahoriUntwisted, GroupSpec::UExpUntwisted})
    if (group_spec_name(g) == name) return g;
  throw ConfigError("unknown group spec '" + name + "'");
}

FqOracle::FqOracle(const RootDatum& rd, int q, int radius, int prec)
    : rd_(rd), F_(q), radius_(radius), prec_(prec), model_(rd_, F_, prec_), em_(rd_) {
  if (radius < 1) throw ConfigError("oracle radius must be positive");
  if (prec < 2 * radius) throw ConfigError("truncation depth too small for the oracle radius");
}

int FqOracle::default_radius(const RootDatum& rd, const IVec& bound) {
  FiniteField F(2);
  LatticeModel m(rd, F, 8);
  return max_abs(m.exps(bound)) + 2;
}

int FqOracle::default_prec(const RootDatum& rd, const IVec& bound) {
  // 2 max <alpha, bound + rho_hat> + 2, computed with doubled coordinates.
  int mx = 0;
  IVec b2 = bound;
  for (size_t i = 0; i < b2.size(); ++i) b2[i] = 2 * b2[i] + rd.two_rho_hat()[i];
  for (const auto& r : rd.roots()) mx = std::max(mx, dot(r.vec, b2));
  const int spec_depth = mx + 2;  // 2 * (mx / 2) + 2
  return std::max(spec_depth, 3 * default_radius(rd, bound) + 4);
}

std::unique_ptr<FqOracle> FqOracle::for_bound(const RootDatum& rd, int q, const IVec& bound, int extra_depth) {
  return std::make_unique<FqOracle>(rd, q, default_radius(rd, bound), default_prec(rd, bound) + extra_depth);
}

std::vector<UnipotentGen> FqOracle::generators(GroupSpec spec) const {
  const bool twisted = is_twisted(spec);
  const bool exp = spec == GroupSpec::UExpTwisted || spec == GroupSpec::UExpUntwisted;
  const std::vector<int> basis = additive_basis(F_);
  std::vector<UnipotentGen> out;
  for (size_t r = 0; r < rd_.roots().size(); ++r) {
    const Root& rt = rd_.roots()[r];
    const int nmin = rt.positive ? 0 : 1;
    const bool simple = rd_.is_simple_root(static_cast<int>(r));
    for (int n = nmin;; ++n) {
      const int m = twisted ? n - rt.height : n;
      if (m >= 2 * radius_) break;
      if (exp && simple && n == 0) continue;
      for (int a : basis) {
        UnipotentGen g;
        g.factors.push_back({static_cast<int>(r), m, a});
        g.psi_trace = simple && n == 0 && twisted ? F_.trace(a) : 0;
        out.push_back(g);
      }
    }
  }
  if (exp) {
    // Kernel of the sum of the simple coordinates at untwisted level 0.
    const int lv = twisted ? -1 : 0;
    const int r0 = rd_.simple_root_index(0);
    for (int i = 1; i < rd_.rank(); ++i) {
      const int ri = rd_.simple_root_index(i);
      for (int a : basis) {
        UnipotentGen g;
        g.factors.push_back({r0, lv, a});
        g.factors.push_back({ri, lv, F_.neg(a)});
        out.push_back(g);
      }
    }
  }
  return out;
}

GrPoint FqOracle::apply(const UnipotentGen& g, const GrPoint& p) const {
  GrPoint x = p;
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) x = model_.act_root(x, it->root, it->a, it->level);
  return x;
}

GrPoint FqOracle::apply_gm(int gamma, const GrPoint& p) const { return model_.act_diag(p, model_.gm_diag(gamma)); }

std::vector<GrPoint> FqOracle::orbit(const GrPoint& start, const std::vector<UnipotentGen>& gens, bool with_gm,
                                     size_t limit) const {
  std::vector<GrPoint> out = {start};
  std::unordered_map<std::string, size_t> seen = {{start.key(), 0}};
  const int gamma = F_.primitive();
  for (size_t head = 0; head < out.size(); ++head) {
    auto visit = [&](GrPoint y) {
      std::string k = y.key();
      if (seen.emplace(std::move(k), out.size()).second) {
        if (out.size() >= limit) throw WindowTooLarge("orbit exceeds " + std::to_string(limit) + " points");
        out.push_back(std::move(y));
      }
    };
    const GrPoint cur = out[head];
    for (const auto& g : gens) visit(apply(g, cur));
    if (with_gm && F_.q() > 2) visit(apply_gm(gamma, cur));
  }
  return out;
}

std::vector<IVec> FqOracle::dominant_below(const IVec& bound) const {
  int B = 0;
  for (int x : bound) B = std::max(B, std::abs(x));
  std::vector<IVec> out;
  for (const IVec& nu : dominant_window(rd_, B + 1))
    if (rd_.dominance_leq(nu, bound)) out.push_back(nu);
  return out;
}

const std::vector<GrPoint>& FqOracle::spherical_orbit(const IVec& mu) const {
  auto it = sph_cache_.find(mu);
  if (it != sph_cache_.end()) return it->second;
  std::set<IVec> wmu;
  for (int u = 0; u < rd_.weyl_order(); ++u) wmu.insert(rd_.weyl_act_coweight(u, mu));
  const auto gens = generators(GroupSpec::IwahoriUntwisted);
  std::vector<GrPoint> out;
  for (const IVec& lam : wmu)
    for (auto& p : orbit(model_.torus_point(lam), gens, false)) out.push_back(std::move(p));
  return sph_cache_.emplace(mu, out).first->second;
}

std::vector<GrPoint> FqOracle::enumerate_gr_window(const IVec& bound, size_t max_points) const {
  if (!rd_.is_dominant(bound)) throw ConfigError("window bound must be dominant");
  const AffineWeyl W(rd_);
  const Facet f0 = Facet::f0(rd_.rank());
  mpz_class estimate = 0;
  const std::vector<IVec> nus = dominant_below(bound);
  for (const IVec& nu : nus)
    for (const auto& x : iwahori_orbits_in_spherical(W, nu)) {
      mpz_class c;
      mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(F_.q()), static_cast<unsigned long>(W.length(x)));
      estimate += c;
    }
  if (estimate > max_points) throw WindowTooLarge("window of " + ivec_str(bound) + " has " + estimate.get_str() + " points");
  std::vector<GrPoint> out;
  for (const IVec& nu : nus)
    for (auto& p : spherical_orbit(nu)) out.push_back(p);
  (void)f0;
  return out;
}

std::map<IVec, size_t> FqOracle::iwahori_cell_counts(const IVec& bound) const {
  std::map<IVec, size_t> out;
  const auto gens = generators(GroupSpec::IwahoriUntwisted);
  for (const IVec& nu : dominant_below(bound)) {
    std::set<IVec> wnu;
    for (int u = 0; u < rd_.weyl_order(); ++u) wnu.insert(rd_.weyl_act_coweight(u, nu));
    for (const IVec& lam : wnu) out[lam] = orbit(model_.torus_point(lam), gens, false).size();
  }
  return out;
}

GrPoint FqOracle::closed_basepoint(const IVec& nu) const { return model_.torus_point(nu); }

GrPoint FqOracle::open_basepoint(const IVec& nu) const {
  return model_.act_root(model_.torus_point(nu), rd_.simple_root_index(0), 1, -1);
}

const std::vector<GrPoint>& FqOracle::closed_orbit(const IVec& nu) const {
  auto it = closed_cache_.find(nu);
  if (it != closed_cache_.end()) return it->second;
  auto pts = orbit(closed_basepoint(nu), generators(GroupSpec::UExpTwisted), true);
  return closed_cache_.emplace(nu, std::move(pts)).first->second;
}

namespace {

bool is_torus_point(const GrPoint& p) {
  const int n = static_cast<int>(p.a.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!p.b[i + n * j].is_zero()) return false;
  return true;
}

}  // namespace

OrbitPartition FqOracle::partition_points(const std::vector<GrPoint>& pts, GroupSpec spec) const {
  OrbitPartition part;
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i].key(), i);
  const GroupSpec coarse = is_twisted(spec) ? GroupSpec::IwahoriTwisted : GroupSpec::IwahoriUntwisted;
  const auto coarse_gens = generators(coarse);
  const auto fine_gens = generators(spec);
  const bool fine_gm = spec != GroupSpec::IwahoriTwisted && spec != GroupSpec::IwahoriUntwisted;
  const AffineWeyl& Wp = em_.ext_weyl();
  const AffineWeyl W(rd_);
  const Facet f0 = Facet::f0(rd_.rank());
  std::vector<bool> done(pts.size(), false);
  for (size_t s = 0; s < pts.size(); ++s) {
    if (done[s]) continue;
    const auto X = orbit(pts[s], coarse_gens, false);
    IVec nu;
    bool found = false;
    for (const auto& y : X) {
      auto it = index.find(y.key());
      if (it == index.end()) throw SupportEscapesWindow("orbit of " + model_.point_str(pts[s]) + " leaves the point set");
      if (is_torus_point(y)) {
        nu = model_.iwasawa(y);
        found = true;
      }
    }
    if (!found) throw InvariantViolation("Iwahori orbit without a torus fixed point");
    ExpLabel base;
    if (!is_twisted(spec)) base = {Tag::Coset, W.min_coset_rep(W.translation(nu), f0)};
    else base = {Tag::Coset, Wp.min_coset_rep(Wp.translation(em_.shifted(nu)), f0)};
    // Refine X into orbits of the finer group, starting from nu(t).
    std::vector<GrPoint> rest = X;
    std::sort(rest.begin(), rest.end(), [&](const GrPoint& a, const GrPoint& b) {
      return is_torus_point(a) > is_torus_point(b);
    });
    std::unordered_map<std::string, bool> assigned;
    for (const auto& y : rest) {
      if (assigned.count(y.key())) continue;
      Orbit o;
      o.coweight = nu;
      o.closed = is_torus_point(y);
      o.label = base;
      if (!o.closed) o.label.tag = Tag::Zero;
      o.points = spec == coarse ? X : orbit(y, fine_gens, fine_gm);
      for (const auto& z : o.points) {
        auto it = index.find(z.key());
        if (it == index.end()) throw SupportEscapesWindow("fine orbit leaves the point set");
        assigned[z.key()] = true;
        done[it->second] = true;
        part.orbit_of[z.key()] = static_cast<int>(part.orbits.size());
      }
      part.orbits.push_back(std::move(o));
      if (spec == coarse) break;
    }
  }
  return part;
}

OrbitPartition FqOracle::orbit_partition(const std::vector<IVec>& coweights, GroupSpec spec) const {
  const GroupSpec coarse = is_twisted(spec) ? GroupSpec::IwahoriTwisted : GroupSpec::IwahoriUntwisted;
  const auto gens = generators(coarse);
  std::vector<GrPoint> pts;
  std::set<std::string> seen;
  for (const IVec& nu : coweights)
    for (auto& y : orbit(model_.torus_point(nu), gens, false))
      if (seen.insert(y.key()).second) pts.push_back(std::move(y));
  return partition_points(pts, spec);
}

FqFunction FqOracle::hecke_operator(const FqFunction& f, const IVec& mu, const std::vector<GrPoint>& window) const {
  if (!rd_.is_dominant(mu)) throw ConfigError("Hecke operator index must be dominant");
  const auto& S = spherical_orbit(mu);
  FqFunction out;
  mpz_class hits = 0;
  for (const auto& x : window) {
    mpz_class s = 0;
    for (const auto& L : S) {
      auto it = f.find(model_.right_translate(x, L).key());
      if (it == f.end()) continue;
      s += it->second;
      ++hits;
    }
    if (s != 0) out[x.key()] = s;
  }
  const mpz_class expect = mpz_class(static_cast<unsigned long>(f.size())) * static_cast<unsigned long>(S.size());
  if (hits != expect)
    throw SupportEscapesWindow("image of the Hecke operator for " + ivec_str(mu) + " leaves the window");
  return out;
}

mpz_class FqOracle::gather_count(const IVec& lam, const IVec& mu, const GrPoint& p) const {
  long c = 0;
  for (const auto& y : closed_orbit(lam))
    if (model_.relative_position(p, y) == mu) ++c;
  return c;
}

std::map<IVec, mpz_class> FqOracle::structure_constants(const IVec& lam, const IVec& mu) const {
  IVec top(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) top[i] = lam[i] + mu[i];
  int B = 0;
  for (int x : top) B = std::max(B, std::abs(x));
  const IVec mu_star = dual_coweight(rd_, mu);
  std::map<IVec, mpz_class> out;
  for (const IVec& nu : dominant_window(rd_, B + 1)) {
    mpz_class c = gather_count(lam, mu_star, closed_basepoint(nu)) - gather_count(lam, mu_star, open_basepoint(nu));
    if (c != 0) out[nu] = c;
  }
  return out;
}

IVec dual_coweight(const RootDatum& rd, const IVec& mu) {
  IVec out = rd.weyl_act_coweight(rd.longest(), mu);
  for (int& x : out) x = -x;
  return out;
}

std::map<IVec, QPoly> interpolate_structure_constants(const RootDatum& rd, const IVec& lam, const IVec& mu,
                                                      const std::vector<int>& q_list, int extra_depth) {
  const int deg = rd.pair_two_rho(mu);
  if (static_cast<int>(q_list.size()) <= deg)
    throw ConfigError("interpolation needs more than " + std::to_string(deg) + " values of q");
  IVec top(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) top[i] = lam[i] + mu[i];
  int B = 0;
  for (int x : top) B = std::max(B, std::abs(x));
  IVec bound = top;
  std::map<IVec, std::vector<std::pair<long, mpz_class>>> samples;
  std::set<IVec> keys;
  std::vector<std::map<IVec, mpz_class>> per_q;
  for (int q : q_list) {
    auto o = FqOracle::for_bound(rd, q, rd.dominant_rep(bound), extra_depth);
    per_q.push_back(o->structure_constants(lam, mu));
    for (const auto& [nu, c] : per_q.back()) keys.insert(nu);
  }
  std::map<IVec, QPoly> out;
  for (const IVec& nu : keys) {
    std::vector<std::pair<long, mpz_class>> s;
    for (size_t k = 0; k < q_list.size(); ++k) {
      auto it = per_q[k].find(nu);
      s.push_back({q_list[k], it == per_q[k].end() ? mpz_class(0) : it->second});
    }
    QPoly p = qpoly_interpolate(s, deg);
    if (!p.is_zero()) out[nu] = p;
  }
  (void)B;
  return out;
}

}  // namespace wexp
