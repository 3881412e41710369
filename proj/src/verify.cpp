#include "wexp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "wexp/errors.hpp"
#include "wexp/exp_module.hpp"
#include "wexp/flag_oracle.hpp"
#include "wexp/fq_oracle.hpp"
#include "wexp/hecke.hpp"
#include "wexp/spherical.hpp"
#include "wexp/strata.hpp"
#include "wexp/whittaker.hpp"

namespace wexp {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok && failures.size() < 200) failures.push_back(what);
  else if (!ok && failures.size() == 200) failures.push_back("further failures omitted");
}

nlohmann::json SuiteResult::to_json() const {
  return {{"criterion", criterion}, {"name", name},       {"pass", pass()},        {"skipped", skipped},
          {"checks", checks},       {"failures", failures}, {"seconds", seconds}, {"limit", limit},
          {"details", details}};
}

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kAllPresets = {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "G2"};

std::vector<std::string> pick_groups(const VerifyConfig& cfg, const std::vector<std::string>& defaults,
                                     const std::vector<std::string>& supported = kAllPresets) {
  if (cfg.groups.empty()) return defaults;
  std::vector<std::string> out;
  for (const auto& g : cfg.groups)
    if (std::find(supported.begin(), supported.end(), g) != supported.end()) out.push_back(g);
  return out;
}

std::vector<int> pick_q(const VerifyConfig& cfg, const std::vector<int>& defaults) {
  return cfg.q_list.empty() ? defaults : cfg.q_list;
}

int pick_bound(const VerifyConfig& cfg, int def) { return cfg.bound > 0 ? cfg.bound : def; }

// Runs body, converting exceptions into failures, and records the time.
SuiteResult run_suite(int criterion, const std::string& name, double limit, const VerifyConfig& cfg,
                      const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.criterion = criterion;
  r.name = name;
  r.limit = cfg.enforce_limits ? limit : 0;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string ctx(const std::string& g, const std::string& what) { return g + ": " + what; }

std::vector<IVec> weyl_orbit(const RootDatum& rd, const IVec& nu) {
  std::set<IVec> s;
  for (int u = 0; u < rd.weyl_order(); ++u) s.insert(rd.weyl_act_coweight(u, nu));
  return {s.begin(), s.end()};
}

// Dominant coweight above every element of the window, for oracle sizing.
IVec window_top(const std::vector<IVec>& win) {
  IVec top(win.front().size(), 0);
  for (const IVec& v : win)
    for (size_t i = 0; i < v.size(); ++i) top[i] = std::max(top[i], std::abs(v[i]));
  return top;
}

// Random element tau x with l(x) <= max_len.
AffineWeylElement random_element(const AffineWeyl& W, const std::vector<AffineWeylElement>& omegas, int max_len,
                                 std::mt19937_64& rng) {
  AffineWeylElement w = omegas[rng() % omegas.size()];
  const int target = static_cast<int>(rng() % (max_len + 1));
  for (int tries = 0; W.length(w) < target && tries < 8 * max_len; ++tries) {
    const int s = static_cast<int>(rng() % W.num_simple());
    if (!W.right_descent(w, s)) w = W.mul_simple_right(w, s);
  }
  return w;
}

HeckeElement random_hecke(const AffineWeyl& W, const std::vector<AffineWeylElement>& omegas, int max_len,
                          std::mt19937_64& rng) {
  HeckeElement x;
  const int terms = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < terms; ++i) {
    const QPoly c = QPoly(1 + static_cast<long>(rng() % 3)) * QPoly::q_pow(static_cast<int>(rng() % 2));
    hecke_add_to(x, random_element(W, omegas, max_len, rng), c);
  }
  return x;
}

HeckeElement apply_word(const HeckeAlgebra& H, const std::vector<int>& word, HeckeElement x, Side side) {
  for (int s : word) x = H.t_simple_mul(s, x, side);
  return x;
}

}  // namespace

SuiteResult suite_weyl(const VerifyConfig& cfg) {
  return run_suite(1, "weyl combinatorics", 10, cfg, [&](SuiteResult& r) {
    for (const auto& g : pick_groups(cfg, {"SL2", "PGL2", "SL3", "Sp4"})) {
      const RootDatum rd = RootDatum::preset(g);
      const AffineWeyl W(rd);
      const Facet f0 = Facet::f0(rd.rank());
      const auto els = W.enumerate_elements(6, 1);
      long zero_w = 0;
      for (const auto& w : els) {
        r.check(W.is_left_max(w) == W.is_left_max_bruteforce(w), ctx(g, "left-max criteria differ at " + W.element_str(w)));
        if (!W.is_right_minimal(w, f0)) continue;
        const bool strict_translation = w == W.translation(w.lambda()) && rd.is_strictly_dominant(w.lambda());
        const bool member = W.zero_W_membership(w, f0);
        zero_w += member;
        r.check(member == strict_translation, ctx(g, "0W membership of " + W.element_str(w)));
      }
      for (const IVec& lam : dominant_window(rd, 3)) {
        const AffineWeylElement t = W.translation(lam);
        r.check(W.length(t) == rd.pair_two_rho(lam), ctx(g, "l(t_lambda) at " + ivec_str(lam)));
        if (rd.is_strictly_dominant(lam))
          r.check(W.is_right_minimal(t, f0) && W.zero_W_membership(t, f0), ctx(g, "t_lambda not in 0W at " + ivec_str(lam)));
      }
      r.details[g] = {{"elements", els.size()}, {"zero_W", zero_w}};
    }
  });
}

SuiteResult suite_hecke(const VerifyConfig& cfg) {
  return run_suite(2, "hecke and spherical algebra", 60, cfg, [&](SuiteResult& r) {
    std::mt19937_64 rng(cfg.seed);
    for (const auto& g : pick_groups(cfg, kAllPresets)) {
      const RootDatum rd = RootDatum::preset(g);
      const AffineWeyl W(rd);
      const HeckeAlgebra H(W);
      const auto omegas = W.omega_elements(1);
      const int n = W.num_simple();
      const QPoly q = QPoly::q();
      long total_length = 0;
      for (int t = 0; t < cfg.hecke_triples; ++t) {
        const HeckeElement a = random_hecke(W, omegas, 8, rng), b = random_hecke(W, omegas, 8, rng),
                           c = random_hecke(W, omegas, 8, rng);
        for (const auto* x : {&a, &b, &c})
          for (const auto& [w, coef] : *x) total_length += W.length(w);
        r.check(hecke_equal(H.mul(H.mul(a, b), c), H.mul(a, H.mul(b, c))), ctx(g, "associativity, triple " + std::to_string(t)));
        const int s = static_cast<int>(rng() % n);
        for (Side side : {Side::Left, Side::Right}) {
          HeckeElement lhs = apply_word(H, {s, s}, a, side);
          HeckeElement rhs = apply_word(H, {s}, a, side);
          for (auto& [w, coef] : rhs) coef *= q - QPoly(1);
          hecke_add_to(rhs, a, q);
          r.check(hecke_equal(lhs, rhs), ctx(g, "quadratic relation at s" + std::to_string(s)));
        }
        int j = static_cast<int>(rng() % n), k = static_cast<int>(rng() % n);
        if (j == k) k = (k + 1) % n;
        const int m = W.coxeter_m(j, k);
        if (m == 0) continue;
        std::vector<int> w1, w2;
        for (int i = 0; i < m; ++i) {
          w1.push_back(i % 2 ? k : j);
          w2.push_back(i % 2 ? j : k);
        }
        for (Side side : {Side::Left, Side::Right})
          r.check(hecke_equal(apply_word(H, w1, b, side), apply_word(H, w2, b, side)),
                  ctx(g, "braid relation s" + std::to_string(j) + " s" + std::to_string(k)));
      }
      r.details[g] = {{"triples", cfg.hecke_triples}, {"total_length", total_length}};
    }
    const int bound = pick_bound(cfg, 2);
    for (const auto& g : pick_groups(cfg, {"SL2", "SL3", "Sp4"})) {
      const RootDatum rd = RootDatum::preset(g);
      const AffineWeyl W(rd);
      const SphericalAlgebra S(W);
      const auto win = dominant_window(rd, bound);
      long products = 0;
      for (size_t i = 0; i < win.size(); ++i)
        for (size_t j = i; j < win.size(); ++j) {
          const std::string at = ivec_str(win[i]) + " * " + ivec_str(win[j]);
          try {
            const SphericalElement ab = S.mul(S.basis(win[i]), S.basis(win[j]));
            const SphericalElement ba = S.mul(S.basis(win[j]), S.basis(win[i]));
            r.check(ab == ba, ctx(g, "spherical commutativity at " + at));
            ++products;
          } catch (const NormalizationFailure& e) {
            r.check(false, ctx(g, "spherical division at " + at + ": " + e.what()));
          }
        }
      r.details[g]["spherical_products"] = products;
    }
  });
}

SuiteResult suite_cell_table(const VerifyConfig& cfg) {
  return run_suite(3, "cell table and line partition", 30, cfg, [&](SuiteResult& r) {
    const QPoly q = QPoly::q(), one(1), zero;
    const auto groups = pick_groups(cfg, kAllPresets);
    if (std::find(groups.begin(), groups.end(), "SL2") != groups.end()) {
      const RootDatum rd = RootDatum::preset("SL2");
      const AffineWeyl W(rd);
      const ExpModule M(W);
      const ExpLabel w0{Tag::Coset, W.finite(rd.longest())}, z{Tag::Zero, W.finite(rd.longest())},
          e{Tag::Coset, W.identity()};
      const std::vector<ExpLabel> targets = {w0, z, e};
      const std::vector<std::pair<ExpLabel, std::vector<QPoly>>> table = {
          {w0, {zero, q - one, one}}, {z, {one, q - QPoly(2), one}}, {e, {one, q - one, zero}}};
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [w, expect] : table) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t i = 0; i < targets.size(); ++i) {
          const QPoly c = M.key_lemma_class(targets[i], w, 1);
          row.push_back(c.str());
          r.check(c == expect[i], "SL2 table row " + W.label_str(w) + " target " + W.label_str(targets[i]) + ": " + c.str());
        }
        rows.push_back(row);
      }
      r.details["sl2_table"] = rows;
      const FlagCheckReport fr = check_line_classes(rd, 3, {2, 3, 4, 5});
      r.check(fr.mismatches == 0 && fr.failures.empty(), "SL2 flag variety line counts disagree with the module");
      r.details["sl2_flag_count"] = fr.to_json();
    }
    for (const auto& g : groups) {
      const RootDatum rd = RootDatum::preset(g);
      const AffineWeyl W(rd);
      const ExpModule M(W);
      long cases = 0;
      for (const ExpLabel& w : W.enumerate_exp_labels(Facet::a0(), 5, 1))
        for (int s = 0; s < W.num_simple(); ++s) {
          QPoly sum;
          for (const auto& [t, c] : M.line_decomposition(w, s)) sum += c;
          r.check(sum == q, ctx(g, "line classes of " + W.label_str(w) + " at s" + std::to_string(s) + " sum to " + sum.str()));
          ++cases;
        }
      r.details[g] = {{"cases", cases}};
    }
  });
}

SuiteResult suite_fiber(const VerifyConfig& cfg) {
  return run_suite(4, "fiber classes", 0, cfg, [&](SuiteResult& r) {
    const QPoly q = QPoly::q(), one(1);
    const auto groups = pick_groups(cfg, {"SL2"});
    if (std::find(groups.begin(), groups.end(), "SL2") != groups.end()) {
      const RootDatum rd = RootDatum::preset("SL2");
      const AffineWeyl W(rd);
      const ExpModule M(W);
      const Facet a0 = Facet::a0();
      const ExpLabel w0{Tag::Coset, W.finite(rd.longest())}, z{Tag::Zero, W.finite(rd.longest())},
          e{Tag::Coset, W.identity()};
      const std::vector<FiberStep> word = {FiberStep::simple(1)};
      const std::vector<std::pair<ExpLabel, QPoly>> expect = {{e, q - one}, {w0, q - one}, {z, q - QPoly(2)}};
      QPoly euler;
      nlohmann::json table = nlohmann::json::object();
      for (const auto& [t, c] : expect) {
        const QPoly f = M.fiber_class(z, word, t);
        table[W.label_str(t)] = f.str();
        r.check(f == c, "fiber over " + W.label_str(t) + ": " + f.str());
        euler += f * orbit_shape(W, t, a0).class_in_q();
      }
      r.check(euler == (q - one) * q, "Euler conservation: " + euler.str());
      r.details["punctured_gm"] = {{"fibers", table}, {"euler", euler.str()}};
    }
    // Total space conservation for short words from every short label.
    for (const auto& g : groups) {
      const RootDatum rd = RootDatum::preset(g);
      const AffineWeyl W(rd);
      const ExpModule M(W);
      const Facet a0 = Facet::a0();
      long cases = 0;
      for (const ExpLabel& v : W.enumerate_exp_labels(a0, 3, 1))
        for (int s1 = 0; s1 < W.num_simple(); ++s1)
          for (int s2 = -1; s2 < W.num_simple(); ++s2) {
            std::vector<FiberStep> word = {FiberStep::simple(s1)};
            if (s2 >= 0) word.push_back(FiberStep::simple(s2));
            QPoly total;
            for (const auto& [t, c] : M.convolve({{v, QPoly(1)}}, word)) total += c * orbit_shape(W, t, a0).class_in_q();
            const QPoly expect = orbit_shape(W, v, a0).class_in_q() * QPoly::q_pow(static_cast<int>(word.size()));
            r.check(total == expect, ctx(g, "Euler conservation from " + W.label_str(v)));
            ++cases;
          }
      r.details[g] = {{"euler_cases", cases}};
    }
  });
}

SuiteResult suite_dimension(const VerifyConfig& cfg) {
  return run_suite(5, "dimension bound", 300, cfg, [&](SuiteResult& r) {
    const int bound = pick_bound(cfg, 2);
    for (const auto& g : pick_groups(cfg, {"SL2", "PGL2", "SL3"})) {
      const RootDatum rd = RootDatum::preset(g);
      const ExpModel M(rd);
      const auto win = dominant_window(rd, bound);
      long nonzero = 0;
      for (const IVec& lam : win)
        for (const IVec& mu : win) {
          if (lam == mu) {
            const QPoly c = M.closed_fiber_class(mu, mu);
            r.check(c == QPoly(1), ctx(g, "fiber over the top point of " + ivec_str(mu) + " is " + c.str()));
            continue;
          }
          nonzero += !M.closed_fiber_class(lam, mu).is_zero();
          r.check(M.dimension_bound_check(lam, mu), ctx(g, "fiber degree at lambda " + ivec_str(lam) + ", mu " + ivec_str(mu) +
                                                            ": " + M.closed_fiber_class(lam, mu).str()));
        }
      r.details[g] = {{"window", win.size()}, {"nonzero_fibers", nonzero}};
    }
  });
}

SuiteResult suite_oracle(const VerifyConfig& cfg) {
  return run_suite(6, "oracle against generic module", 600, cfg, [&](SuiteResult& r) {
    const int bound = pick_bound(cfg, 2);
    const std::vector<int> qs = pick_q(cfg, {2, 3, 4, 5});
    std::vector<int> interp = qs;
    for (int q : {2, 3, 4, 5, 7})
      if (std::find(interp.begin(), interp.end(), q) == interp.end()) interp.push_back(q);
    std::sort(interp.begin(), interp.end());
    for (const auto& g : pick_groups(cfg, {"SL2", "PGL2"}, {"SL2", "PGL2", "GL2"})) {
      const RootDatum rd = RootDatum::preset(g);
      const AffineWeyl W(rd);
      const auto win = dominant_window(rd, bound);
      IVec top = window_top(win);
      IVec sized = top;
      for (auto& x : sized) x *= 2;
      const ExpModel M(rd);
      std::map<std::pair<IVec, IVec>, std::map<IVec, std::vector<std::pair<long, mpz_class>>>> samples;
      long compared = 0;
      for (int q : interp) {
        const bool specialize = std::find(qs.begin(), qs.end(), q) != qs.end();
        const auto o = FqOracle::for_bound(rd, q, sized);
        for (const IVec& lam : win)
          for (const IVec& mu : win) {
            const auto counts = o->structure_constants(lam, mu);
            const ExpModVector gen = M.basis_action(lam, mu);
            std::set<IVec> keys;
            for (const auto& [nu, c] : counts) keys.insert(nu);
            for (const auto& [nu, c] : gen) keys.insert(nu);
            for (const IVec& nu : keys) {
              auto ci = counts.find(nu);
              const mpz_class counted = ci == counts.end() ? mpz_class(0) : ci->second;
              samples[{lam, mu}][nu].push_back({q, counted});
              if (!specialize) continue;
              auto gi = gen.find(nu);
              const mpz_class expect = gi == gen.end() ? mpz_class(0) : gi->second.specialize(q);
              r.check(counted == expect, ctx(g, "q=" + std::to_string(q) + " c(" + ivec_str(lam) + "," + ivec_str(mu) + "," +
                                                    ivec_str(nu) + ") counted " + counted.get_str() + ", generic " + expect.get_str()));
              ++compared;
            }
          }
        if (!specialize) continue;
        // Window enumeration against cell classes.
        for (const IVec& nu : win) {
          const auto pts = o->enumerate_gr_window(nu);
          mpz_class expect = 0;
          const auto cells = o->iwahori_cell_counts(nu);
          for (const IVec& kappa : o->dominant_below(nu))
            for (const auto& x : iwahori_orbits_in_spherical(W, kappa)) {
              const mpz_class size = QPoly::q_pow(W.length(x)).specialize(q);
              expect += size;
              auto it = cells.find(x.lambda());
              r.check(it != cells.end() && mpz_class(static_cast<unsigned long>(it->second)) == size,
                      ctx(g, "Iwahori cell " + ivec_str(x.lambda()) + " size at q=" + std::to_string(q)));
            }
          r.check(mpz_class(static_cast<unsigned long>(pts.size())) == expect,
                  ctx(g, "window " + ivec_str(nu) + " has " + std::to_string(pts.size()) + " points at q=" + std::to_string(q)));
        }
        // Twisted orbit partitions.
        std::vector<IVec> coweights;
        for (const IVec& nu : win)
          for (const IVec& x : weyl_orbit(rd, nu)) coweights.push_back(x);
        const AffineWeyl& Wp = M.ext_weyl();
        const Facet f0 = Facet::f0(rd.rank());
        const OrbitPartition exp_part = o->orbit_partition(coweights, GroupSpec::UExpTwisted);
        long zero_tagged = 0;
        size_t total = 0;
        for (const Orbit& orb : exp_part.orbits) {
          const mpz_class cls = orbit_shape(Wp, orb.label, f0).class_in_q().specialize(q);
          r.check(mpz_class(static_cast<unsigned long>(orb.points.size())) == cls,
                  ctx(g, "orbit " + Wp.label_str(orb.label) + " has " + std::to_string(orb.points.size()) + " points at q=" +
                             std::to_string(q)));
          zero_tagged += orb.label.tag == Tag::Zero;
          total += orb.points.size();
        }
        r.check(total == exp_part.orbit_of.size(), ctx(g, "exponential orbits do not cover the twisted window"));
        r.check(zero_tagged == static_cast<long>(win.size()), ctx(g, "zero-tagged orbit count " + std::to_string(zero_tagged)));
        const OrbitPartition gm_part = o->orbit_partition(coweights, GroupSpec::URtimesGmTwisted);
        const OrbitPartition iw_part = o->orbit_partition(coweights, GroupSpec::IwahoriTwisted);
        std::set<std::set<std::string>> a, b;
        for (const auto& orb : gm_part.orbits) {
          std::set<std::string> s;
          for (const auto& p : orb.points) s.insert(p.key());
          a.insert(std::move(s));
        }
        for (const auto& orb : iw_part.orbits) {
          std::set<std::string> s;
          for (const auto& p : orb.points) s.insert(p.key());
          b.insert(std::move(s));
        }
        r.check(a == b, ctx(g, "U x Gm orbits differ from Iwahori orbits at q=" + std::to_string(q)));
      }
      long interpolated = 0;
      for (const auto& [key, by_nu] : samples) {
        const ExpModVector gen = M.basis_action(key.first, key.second);
        const int deg = rd.pair_two_rho(key.second);
        for (const auto& [nu, pts] : by_nu) {
          const std::string at = "c(" + ivec_str(key.first) + "," + ivec_str(key.second) + "," + ivec_str(nu) + ")";
          try {
            const QPoly p = qpoly_interpolate(pts, deg);
            auto gi = gen.find(nu);
            const QPoly expect = gi == gen.end() ? QPoly() : gi->second;
            r.check(p == expect, ctx(g, "interpolated " + at + " = " + p.str() + ", generic " + expect.str()));
          } catch (const InterpolationError& e) {
            r.check(false, ctx(g, "interpolation of " + at + ": " + e.what()));
          }
          ++interpolated;
        }
      }
      r.details[g] = {{"window", win.size()}, {"compared", compared}, {"interpolated", interpolated},
                      {"interpolation_q", interp}};
    }
  });
}

SuiteResult suite_rank_one(const VerifyConfig& cfg) {
  return run_suite(7, "rank one", 300, cfg, [&](SuiteResult& r) {
    const int bound = pick_bound(cfg, 2);
    for (const auto& g : pick_groups(cfg, {"SL2", "PGL2", "SL3"})) {
      const RootDatum rd = RootDatum::preset(g);
      const ExpModel M(rd);
      try {
        const RankOneReport rep = M.verify_rank_one(dominant_window(rd, bound));
        r.check(true, g);
        r.details[g] = {{"window", rep.window.size()}, {"determinant", rep.determinant.str()},
                        {"diag_exponent", rep.diag_exponent}, {"diag_sign", rep.diag_sign}};
      } catch (const RankOneViolated& e) {
        r.check(false, ctx(g, e.what()));
      } catch (const WindowTooSmall& e) {
        r.check(false, ctx(g, e.what()));
      }
    }
  });
}

SuiteResult suite_whittaker(const VerifyConfig& cfg) {
  return run_suite(8, "whittaker chain", 300, cfg, [&](SuiteResult& r) {
    const auto groups = pick_groups(cfg, {"SL2"}, {"SL2"});
    if (groups.empty()) {
      r.skipped = true;
      return;
    }
    const RootDatum rd = RootDatum::preset("SL2");
    for (int q : pick_q(cfg, {3, 5})) {
      const WhittakerChain chain(rd, q, {1}, {{0}, {1}, {2}});
      const ChainReport rep = chain.run();
      for (const auto& [name, ok] : rep.checks) r.check(ok, "q=" + std::to_string(q) + " " + name);
      for (const auto& f : rep.failures) r.failures.push_back("q=" + std::to_string(q) + " " + f);
      r.details["q" + std::to_string(q)] = {{"checks", rep.checks}};
    }
  });
}

SuiteResult suite_truncation(const VerifyConfig& cfg) {
  return run_suite(9, "truncation depth", 0, cfg, [&](SuiteResult& r) {
    const int bound = pick_bound(cfg, 2);
    const std::vector<int> qs = pick_q(cfg, {2, 3});
    auto dump = [&](const RootDatum& rd, int q, int extra) {
      const auto win = dominant_window(rd, bound);
      IVec sized = window_top(win);
      for (auto& x : sized) x *= 2;
      const auto o = FqOracle::for_bound(rd, q, sized, extra);
      nlohmann::json j;
      for (const IVec& lam : win)
        for (const IVec& mu : win) {
          nlohmann::json row = nlohmann::json::object();
          for (const auto& [nu, c] : o->structure_constants(lam, mu)) row[ivec_str(nu)] = c.get_str();
          j["structure"][ivec_str(lam) + ivec_str(mu)] = row;
        }
      for (const IVec& nu : win) {
        nlohmann::json keys = nlohmann::json::array();
        for (const auto& p : o->enumerate_gr_window(nu)) keys.push_back(p.key());
        j["window"][ivec_str(nu)] = keys;
      }
      std::vector<IVec> coweights;
      for (const IVec& nu : win)
        for (const IVec& x : weyl_orbit(rd, nu)) coweights.push_back(x);
      for (GroupSpec spec : {GroupSpec::IwahoriTwisted, GroupSpec::UExpTwisted, GroupSpec::URtimesGmTwisted}) {
        nlohmann::json orbits = nlohmann::json::array();
        for (const Orbit& orb : o->orbit_partition(coweights, spec).orbits) {
          std::vector<std::string> keys;
          for (const auto& p : orb.points) keys.push_back(p.key());
          std::sort(keys.begin(), keys.end());
          orbits.push_back({{"label", o->exp_model().ext_weyl().label_str(orb.label)}, {"points", keys}});
        }
        j["partition"][group_spec_name(spec)] = orbits;
      }
      return j;
    };
    for (const auto& g : pick_groups(cfg, {"SL2", "PGL2"}, {"SL2", "PGL2", "GL2"}))
      for (int q : qs) {
        const RootDatum rd = RootDatum::preset(g);
        r.check(dump(rd, q, 0) == dump(rd, q, 2), ctx(g, "oracle output changes with depth at q=" + std::to_string(q)));
      }
    const auto wg = pick_groups(cfg, {"SL2"}, {"SL2"});
    if (!wg.empty()) {
      const RootDatum rd = RootDatum::preset("SL2");
      for (int q : {3}) {
        const nlohmann::json a = WhittakerChain(rd, q, {1}, {{1}}, 0).run().to_json();
        const nlohmann::json b = WhittakerChain(rd, q, {1}, {{1}}, 2).run().to_json();
        r.check(a == b, "SL2: Whittaker chain changes with depth at q=" + std::to_string(q));
      }
    }
  });
}

const std::vector<std::pair<int, SuiteFn>>& all_suites() {
  static const std::vector<std::pair<int, SuiteFn>> suites = {
      {1, suite_weyl},      {2, suite_hecke},  {3, suite_cell_table}, {4, suite_fiber},     {5, suite_dimension},
      {6, suite_oracle},    {7, suite_rank_one}, {8, suite_whittaker}, {9, suite_truncation}};
  return suites;
}

std::vector<SuiteResult> run_suites(const VerifyConfig& cfg, const std::set<int>& which,
                                    const std::function<void(const SuiteResult&)>& report) {
  std::vector<SuiteResult> out;
  for (const auto& [id, fn] : all_suites()) {
    if (!which.empty() && !which.count(id)) continue;
    out.push_back(fn(cfg));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace wexp
