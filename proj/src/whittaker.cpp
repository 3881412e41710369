#include "wexp/whittaker.hpp"

#include <algorithm>
#include <set>

#include "wexp/errors.hpp"
#include "wexp/spherical.hpp"

namespace wexp {

namespace {

IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

int max_abs(const IVec& v) {
  int m = 0;
  for (int x : v) m = std::max(m, std::abs(x));
  return m;
}

IVec componentwise_max(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

nlohmann::json matrix_json(const CycMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, row] : m) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& [nu, c] : row)
      if (!c.is_zero()) cs.push_back({{"nu", nu}, {"value", c.str()}});
    rows.push_back({{"kappa", k}, {"coeffs", cs}});
  }
  return rows;
}

CycNum entry(const CycMatrix& m, const IVec& r, const IVec& c, const CycNum& zero) {
  auto it = m.find(r);
  if (it == m.end()) return zero;
  auto jt = it->second.find(c);
  return jt == it->second.end() ? zero : jt->second;
}

// (A B)[r][c] over the given summation range.
CycNum product_entry(const CycMatrix& a, const CycMatrix& b, const IVec& r, const IVec& c,
                     const std::vector<IVec>& range, const CycNum& zero) {
  CycNum s = zero;
  for (const IVec& k : range) {
    CycNum x = entry(a, r, k, zero);
    if (x.is_zero()) continue;
    CycNum y = entry(b, k, c, zero);
    if (!y.is_zero()) s += x * y;
  }
  return s;
}

}  // namespace

WhittakerChain::WhittakerChain(const RootDatum& rd, int q, const IVec& bound, const std::vector<IVec>& mus,
                               int extra_depth)
    : bound_(bound), mus_(mus) {
  if (!rd.is_dominant(bound)) throw ConfigError("Whittaker window bound must be dominant");
  IVec top = add(bound, bound);
  for (const IVec& mu : mus) {
    if (!rd.is_dominant(mu)) throw ConfigError("Hecke index " + ivec_str(mu) + " is not dominant");
    top = componentwise_max(top, add(add(bound, mu), add(mu, IVec(mu.size(), 1))));
  }
  top = componentwise_max(top, IVec(bound.size(), 4));
  o_ = FqOracle::for_bound(rd, q, rd.dominant_rep(top), extra_depth);
  gens_ = o_->generators(GroupSpec::IwahoriTwisted);
}

CycNum WhittakerChain::from_counts(const std::vector<mpz_class>& by_trace) const {
  CycNum s = zero();
  for (int k = 0; k < F().p(); ++k)
    if (by_trace[k] != 0) s += CycNum::zeta_pow(F().p(), F().q(), k).mul_int(by_trace[k]);
  return s;
}

const std::vector<GrPoint>& WhittakerChain::sph(const IVec& mu) const {
  return o_->spherical_orbit(dual_coweight(o_->rd(), mu));
}

CycNum WhittakerChain::whittaker_value(const IVec& lam, const GrPoint& p) const {
  const LatticeModel& m = o_->model();
  if (m.iwasawa(p) != lam) return zero();
  if (!o_->rd().is_dominant(lam)) throw InvariantViolation("no Whittaker function on the cell of " + ivec_str(lam));
  return CycNum::psi(F(), m.whittaker_coordinate(p));
}

const BabyOrbit& WhittakerChain::baby_orbit(const IVec& nu) const {
  auto it = baby_cache_.find(nu);
  if (it != baby_cache_.end()) return it->second;
  BabyOrbit b;
  b.nu = nu;
  const int p = F().p();
  GrPoint start = o_->model().torus_point(nu);
  b.tau.emplace(start.key(), 0);
  b.points.push_back(std::move(start));
  for (size_t head = 0; head < b.points.size(); ++head) {
    const GrPoint cur = b.points[head];
    const int t0 = b.tau.at(cur.key());
    for (const auto& g : gens_) {
      GrPoint y = o_->apply(g, cur);
      const int t = (t0 + g.psi_trace) % p;
      std::string k = y.key();
      auto [jt, fresh] = b.tau.emplace(std::move(k), t);
      if (fresh) {
        if (b.points.size() >= 2000000) throw WindowTooLarge("twisted orbit of " + ivec_str(nu) + " is too large");
        b.points.push_back(std::move(y));
      } else if (jt->second != t) {
        b.conflict = true;
      }
    }
  }
  return baby_cache_.emplace(nu, std::move(b)).first->second;
}

CycNum WhittakerChain::baby_value(const IVec& kappa, const GrPoint& p) const {
  const BabyOrbit& b = baby_orbit(kappa);
  if (b.conflict) return zero();
  auto it = b.tau.find(p.key());
  if (it == b.tau.end()) return zero();
  return CycNum::zeta_pow(F().p(), F().q(), it->second);
}

CycNum WhittakerChain::average(const IVec& lam, const IVec& nu) const {
  const BabyOrbit& b = baby_orbit(nu);
  if (b.conflict) return zero();
  int kq = 0;
  for (size_t n = b.points.size(); n > 1; n /= static_cast<size_t>(F().q())) {
    if (n % static_cast<size_t>(F().q()) != 0) throw InvariantViolation("twisted orbit size is not a power of q");
    ++kq;
  }
  CycNum s = zero();
  for (const auto& y : b.points) {
    CycNum w = whittaker_value(lam, y);
    if (w.is_zero()) continue;
    s += w * CycNum::zeta_pow(F().p(), F().q(), -b.tau.at(y.key()));
  }
  return s.div_q_pow(kq);
}

CycNum WhittakerChain::literal_average(const IVec& lam, const IVec& nu) const {
  if (o_->rd().name() != "SL2") throw ConfigError("literal averaging is implemented for SL2 only");
  const LatticeModel& m = o_->model();
  const LaurentRing& R = m.ring();
  const FiniteField& F = this->F();
  const GrPoint x = m.torus_point(nu);
  int rad = 0;
  for (int v : m.exps(nu)) rad = std::max(rad, std::abs(v));
  const int D = 2 * rad + 1;
  // g = [[a, b t^-1], [c t, d]] with a, d in 1 + tO, b in O, c in tO, ad - bc = 1,
  // modulo t^D. Free coordinates: a_1..a_{D-1}, b_0..b_{D-1}, c_1..c_{D-1}.
  const int nfree = 3 * D - 2;
  std::vector<int> digits(nfree, 0);
  CycNum total = zero();
  auto series = [&](int from, int len, int off) {
    std::vector<int> c(len, 0);
    for (int i = 0; i < len; ++i) c[i] = digits[off + i];
    Laurent r;
    for (int i = 0; i < len; ++i)
      if (c[i]) r = R.add(r, R.monomial(c[i], from + i));
    return r;
  };
  for (;;) {
    Laurent a = R.add(R.monomial(1, 0), series(1, D - 1, 0));
    Laurent b = series(0, D, D - 1);
    Laurent c = series(1, D - 1, 2 * D - 1);
    Laurent d = R.low_part(R.mul(R.add(R.monomial(1, 0), R.mul(b, c)), R.inv_unit(a)), D);
    LMat g = {a, R.shift(c, 1), R.shift(b, -1), d};
    const GrPoint y = m.act_matrix(g, x);
    CycNum w = whittaker_value(lam, y);
    if (!w.is_zero()) total += w * CycNum::psi(F, F.neg(digits[D - 1]));
    int i = 0;
    while (i < nfree && digits[i] == F.q() - 1) digits[i++] = 0;
    if (i == nfree) break;
    ++digits[i];
  }
  return total.div_q_pow(nfree);
}

CycNum WhittakerChain::whittaker_hecke(const IVec& lam, const IVec& mu, const IVec& nu) const {
  const LatticeModel& m = o_->model();
  if (!o_->rd().is_dominant(lam)) throw InvariantViolation("no Whittaker function on the cell of " + ivec_str(lam));
  const GrPoint x = m.torus_point(nu);
  std::vector<mpz_class> by_trace(F().p(), 0);
  for (const auto& L : sph(mu)) {
    const GrPoint y = m.right_translate(x, L);
    if (m.iwasawa(y) == lam) ++by_trace[F().trace(m.whittaker_coordinate(y))];
  }
  return from_counts(by_trace);
}

CycNum WhittakerChain::baby_hecke(const IVec& kappa, const IVec& mu, const IVec& nu) const {
  const BabyOrbit& b = baby_orbit(kappa);
  if (b.conflict) return zero();
  const GrPoint x = o_->model().torus_point(nu);
  std::vector<mpz_class> by_trace(F().p(), 0);
  for (const auto& L : sph(mu)) {
    auto it = b.tau.find(o_->model().right_translate(x, L).key());
    if (it != b.tau.end()) ++by_trace[it->second];
  }
  return from_counts(by_trace);
}

mpz_class WhittakerChain::gm_class(const IVec& kappa, const IVec& nu) const {
  auto h = [&](const GrPoint& y) {
    CycNum s = zero();
    for (int g = 1; g < F().q(); ++g) {
      CycNum v = baby_value(kappa, o_->apply_gm(g, y));
      if (!v.is_zero()) s += v;
    }
    mpz_class r;
    if (!s.is_integer(&r)) throw InvariantViolation("G_m average is not integral at " + o_->model().point_str(y));
    return r;
  };
  if (kappa == nu) {
    const OrbitPartition part = o_->orbit_partition({nu}, GroupSpec::UExpTwisted);
    for (const auto& orb : part.orbits) {
      const mpz_class v0 = h(orb.points.front());
      for (const auto& y : orb.points)
        if (h(y) != v0)
          throw InvariantViolation("G_m average of the baby function of " + ivec_str(kappa) +
                                   " is not constant on an exponential orbit");
    }
  }
  return h(o_->closed_basepoint(nu)) - h(o_->open_basepoint(nu));
}

LemmaRow WhittakerChain::lemma(const IVec& lam) const {
  const RootDatum& rd = o_->rd();
  const LatticeModel& m = o_->model();
  LemmaRow r;
  r.lambda = lam;
  r.dominant = rd.is_dominant(lam);
  const GrPoint x = m.torus_point(lam);
  r.stabilizer_in_kernel = true;
  for (int i = 0; i < rd.rank(); ++i)
    for (int a = 1; a < F().q(); ++a)
      if (F().trace(a) != 0 && m.act_root(x, rd.simple_root_index(i), a, -1) == x) r.stabilizer_in_kernel = false;
  const BabyOrbit& b = baby_orbit(lam);
  r.baby_exists = !b.conflict;
  r.orbit_in_u_cell = true;
  for (const auto& y : b.points)
    if (m.iwasawa(y) != lam) {
      r.orbit_in_u_cell = false;
      break;
    }
  return r;
}

ChainReport WhittakerChain::run() const {
  const RootDatum& rd = o_->rd();
  ChainReport rep;
  rep.q = F().q();
  rep.window = o_->dominant_below(bound_);
  std::set<IVec> range(rep.window.begin(), rep.window.end());
  for (const IVec& mu : mus_)
    for (const IVec& nu : o_->dominant_below(add(bound_, mu))) range.insert(nu);
  rep.range.assign(range.begin(), range.end());
  const CycNum z = zero();
  const CycNum one(F().p(), F().q(), 1);
  auto fail = [&](const std::string& check, const std::string& what) {
    rep.checks[check] = false;
    rep.failures.push_back(check + ": " + what);
  };
  auto pass = [&](const std::string& check) { rep.checks.emplace(check, true); };

  // Lemma equivalences on a box of coweights.
  {
    const std::string c = "whittaker_lemma";
    pass(c);
    std::set<IVec> box;
    for (const IVec& nu : dominant_window(rd, 3))
      for (int u = 0; u < rd.weyl_order(); ++u) {
        IVec lam = rd.weyl_act_coweight(u, nu);
        if (max_abs(lam) <= 3) box.insert(lam);
      }
    for (const IVec& lam : box) {
      const LemmaRow r = lemma(lam);
      if (r.dominant != r.stabilizer_in_kernel || r.dominant != r.baby_exists)
        fail(c, "equivalence fails at " + ivec_str(lam));
      if (r.dominant && !r.orbit_in_u_cell) fail(c, "twisted orbit of " + ivec_str(lam) + " leaves its U(F) cell");
    }
    // Whittaker space on the window: one function per supporting cell.
    size_t dim = 0;
    for (const IVec& nu : rep.window) {
      std::set<IVec> cells;
      for (int u = 0; u < rd.weyl_order(); ++u) cells.insert(rd.weyl_act_coweight(u, nu));
      for (const IVec& lam : cells)
        if (lemma(lam).stabilizer_in_kernel) ++dim;
    }
    if (dim != rep.window.size()) fail("whittaker_dimension", std::to_string(dim) + " supporting cells");
    else pass("whittaker_dimension");
  }

  // Averaging matrices on the range.
  for (const IVec& lam : rep.range)
    for (const IVec& nu : rep.range) {
      CycNum v = average(lam, nu);
      if (!v.is_zero()) rep.av_matrix[lam][nu] = v;
      mpz_class g = gm_class(lam, nu);
      if (g != 0) rep.gm_matrix[lam][nu] = one.mul_int(g);
    }
  pass("av_basepoint");
  for (const IVec& lam : rep.range)
    if (entry(rep.av_matrix, lam, lam, z) != one) fail("av_basepoint", "av(W)(t^lambda) != 1 at " + ivec_str(lam));
  auto triangular = [&](const CycMatrix& m, const std::string& name, bool unit_q_power) {
    pass(name);
    bool lower = true, upper = true;
    for (const auto& [r, row] : m)
      for (const auto& [c, v] : row) {
        if (v.is_zero() || r == c) continue;
        if (!rd.dominance_leq(c, r)) lower = false;
        if (!rd.dominance_leq(r, c)) upper = false;
      }
    if (!lower && !upper) fail(name, "matrix is not triangular in the dominance order");
    for (const IVec& k : rep.range) {
      CycNum d = entry(m, k, k, z);
      mpz_class iv;
      bool unit = false;
      if (d.is_integer(&iv)) {
        mpz_class a = abs(iv);
        while (a > 1 && a % F().q() == 0) a /= F().q();
        unit = a == 1 && (unit_q_power || iv == 1);
      }
      if (!unit) fail(name, "diagonal entry at " + ivec_str(k) + " is not a unit: " + d.str());
    }
  };
  triangular(rep.av_matrix, "av_bijective", false);
  triangular(rep.gm_matrix, "gm_bijective", true);
  pass("gm_scalar_q");
  for (const IVec& k : rep.range)
    for (const IVec& nu : rep.range) {
      CycNum expect = k == nu ? one.mul_int(F().q()) : z;
      if (entry(rep.gm_matrix, k, nu, z) != expect) fail("gm_scalar_q", "entry " + ivec_str(k) + "," + ivec_str(nu));
    }
  if (rd.name() == "SL2") {
    pass("av_literal_sum");
    for (const IVec& lam : rep.window)
      for (const IVec& nu : rep.window)
        if (literal_average(lam, nu) != entry(rep.av_matrix, lam, nu, z))
          fail("av_literal_sum", "mismatch at " + ivec_str(lam) + "," + ivec_str(nu));
  }

  // Hecke actions.
  const ExpModel& em = o_->exp_model();
  for (const IVec& mu : mus_) {
    const std::string tag = "[" + ivec_str(mu) + "]";
    auto& AW = rep.whittaker_action[mu];
    auto& AB = rep.baby_action[mu];
    auto& AE = rep.exp_action[mu];
    CycMatrix AG;
    for (const IVec& k : rep.range) {
      const IVec top = add(k, mu);
      for (const IVec& nu : dominant_window(rd, max_abs(top) + 1)) {
        CycNum w = whittaker_hecke(k, mu, nu);
        if (!w.is_zero()) AW[k][nu] = w;
        CycNum b = baby_hecke(k, mu, nu);
        if (!b.is_zero()) AB[k][nu] = b;
      }
      for (const auto& [nu, c] : o_->structure_constants(k, mu)) AE[k][nu] = one.mul_int(c);
      for (const auto& [nu, c] : em.basis_action(k, mu)) {
        mpz_class v = c.specialize(F().q());
        if (v != 0) AG[k][nu] = one.mul_int(v);
      }
    }
    std::set<IVec> cols_set(rep.range.begin(), rep.range.end());
    for (const auto* M : {&AW, &AB, &AE, &AG})
      for (const auto& [k, row] : *M)
        for (const auto& [nu, v] : row) cols_set.insert(nu);
    const std::vector<IVec> cols(cols_set.begin(), cols_set.end());
    // Rows in the window, where every product entry is fully known.
    const std::string eq_av = "av_equivariant" + tag, eq_gm = "gm_equivariant" + tag;
    const std::string eq_exp = "exp_matches_generic" + tag, eq_tr = "transported_equals_generic" + tag;
    pass(eq_av);
    pass(eq_gm);
    pass(eq_exp);
    pass(eq_tr);
    CycMatrix VG;
    for (const IVec& r : rep.range)
      for (const IVec& c : rep.range) {
        CycNum v = product_entry(rep.av_matrix, rep.gm_matrix, r, c, rep.range, z);
        if (!v.is_zero()) VG[r][c] = v;
      }
    for (const IVec& r : rep.window)
      for (const IVec& c : cols) {
        if (product_entry(AW, rep.av_matrix, r, c, rep.range, z) != product_entry(rep.av_matrix, AB, r, c, rep.range, z))
          fail(eq_av, "entry " + ivec_str(r) + "," + ivec_str(c));
        if (product_entry(AB, rep.gm_matrix, r, c, rep.range, z) != product_entry(rep.gm_matrix, AE, r, c, rep.range, z))
          fail(eq_gm, "entry " + ivec_str(r) + "," + ivec_str(c));
        if (product_entry(AW, VG, r, c, rep.range, z) != product_entry(VG, AG, r, c, rep.range, z))
          fail(eq_tr, "entry " + ivec_str(r) + "," + ivec_str(c));
      }
    for (const IVec& r : rep.range)
      for (const IVec& c : cols)
        if (entry(AE, r, c, z) != entry(AG, r, c, z)) fail(eq_exp, "entry " + ivec_str(r) + "," + ivec_str(c));
  }
  return rep;
}

nlohmann::json ChainReport::to_json() const {
  nlohmann::json j;
  j["q"] = q;
  j["window"] = window;
  j["range"] = range;
  j["av_matrix"] = matrix_json(av_matrix);
  j["gm_matrix"] = matrix_json(gm_matrix);
  nlohmann::json acts = nlohmann::json::array();
  for (const auto& [mu, m] : whittaker_action)
    acts.push_back({{"mu", mu},
                    {"whittaker", matrix_json(m)},
                    {"baby", matrix_json(baby_action.at(mu))},
                    {"exp", matrix_json(exp_action.at(mu))}});
  j["actions"] = acts;
  j["checks"] = checks;
  j["failures"] = failures;
  j["ok"] = ok();
  return j;
}

}  // namespace wexp
