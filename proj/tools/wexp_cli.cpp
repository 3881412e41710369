#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wexp/errors.hpp"
#include "wexp/exp_module.hpp"
#include "wexp/finite_field.hpp"
#include "wexp/fq_oracle.hpp"
#include "wexp/hecke.hpp"
#include "wexp/serialize.hpp"
#include "wexp/spherical.hpp"
#include "wexp/strata.hpp"
#include "wexp/verify.hpp"

using namespace wexp;

namespace {

struct Common {
  std::string group = "SL2";
  std::string format = "json";
  std::string out;
  uint64_t seed = 1;
  std::string case_table;  // empty: the built-in table
};

CaseTable load_table(const Common& c) {
  return c.case_table.empty() ? CaseTable::builtin() : CaseTable::load_file(c.case_table);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ConfigError("cannot write " + c.out);
  f << text;
}

void emit_json(const Common& c, const nlohmann::json& j) { emit(c, j.dump(2) + "\n"); }

std::vector<int> parse_q_list(const std::string& s) {
  std::vector<int> qs = parse_int_list(s);
  for (int q : qs)
    if (!FiniteField::is_supported(q)) throw ConfigError("q = " + std::to_string(q) + " is not a supported prime power <= 49");
  return qs;
}

void check_format(const Common& c) {
  if (c.format != "json" && c.format != "tsv") throw ConfigError("output format must be json or tsv");
}

// "a,b;c,d" or "a,b c,d" into coweights.
std::vector<IVec> parse_ivec_list(const std::string& s) {
  std::vector<IVec> out;
  std::string cur;
  for (char ch : s + ";") {
    if (ch == ';' || ch == ' ') {
      if (!cur.empty()) out.push_back(parse_ivec(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return out;
}

// A Hecke element as JSON (inline or @file) or an element spec for T_w.
HeckeElement parse_hecke(const AffineWeyl& W, const HeckeAlgebra& H, const std::string& s) {
  if (!s.empty() && s[0] == '@') {
    std::ifstream f(s.substr(1));
    if (!f) throw ConfigError("cannot read " + s.substr(1));
    return H.from_json(nlohmann::json::parse(f));
  }
  if (!s.empty() && (s[0] == '[' || s[0] == '{')) return H.from_json(nlohmann::json::parse(s));
  return H.basis(parse_element(W, s));
}

int cmd_weyl(const Common& c, const std::string& facet_s, int bound, const std::string& list) {
  const RootDatum rd = RootDatum::load(c.group);
  const AffineWeyl W(rd);
  const Facet f = parse_facet(W, facet_s);
  if (bound < 0) throw ConfigError("bound must be nonnegative");
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream tsv;
  if (list == "0W") {
    // Members of 0W_f whose translation part lies in the coordinate box.
    int max_len = 0;
    for (const IVec& lam : dominant_window(rd, bound)) max_len = std::max(max_len, W.length(W.translation(lam)));
    tsv << "element\tlambda\tlength\n";
    for (const auto& w : W.enumerate_elements(max_len, 1)) {
      const IVec lam = w.lambda();
      if (std::any_of(lam.begin(), lam.end(), [&](int x) { return std::abs(x) > bound; })) continue;
      if (!W.is_right_minimal(w, f) || !W.zero_W_membership(w, f)) continue;
      rows.push_back({{"element", W.element_json(w)}, {"str", W.element_str(w)}, {"length", W.length(w)},
                      {"translation", w == W.translation(lam)}, {"strictly_dominant", rd.is_strictly_dominant(lam)}});
      tsv << W.element_str(w) << '\t' << ivec_csv(lam) << '\t' << W.length(w) << '\n';
    }
  } else if (list == "elements" || list == "lengths" || list == "words") {
    tsv << "element\tlength\tword\tleft_max\tright_minimal\n";
    for (const auto& w : W.enumerate_elements(bound, 1)) {
      const ReducedWord rw = W.reduced_word(w);
      rows.push_back({{"element", W.element_json(w)}, {"str", W.element_str(w)}, {"length", W.length(w)},
                      {"omega", W.element_str(rw.omega)}, {"word", rw.word}, {"left_max", W.is_left_max(w)},
                      {"right_minimal", W.is_right_minimal(w, f)}});
      tsv << W.element_str(w) << '\t' << W.length(w) << '\t' << ivec_csv(rw.word) << '\t' << W.is_left_max(w) << '\t'
          << W.is_right_minimal(w, f) << '\n';
    }
  } else {
    throw ConfigError("--list must be 0W, elements, lengths or words");
  }
  if (c.format == "tsv") emit(c, tsv.str());
  else emit_json(c, {{"group", rd.name()}, {"facet", f.reflections}, {"bound", bound}, {"list", list}, {"rows", rows}});
  return 0;
}

int cmd_hecke(const Common& c, const std::string& a_s, const std::string& b_s, long q_spec) {
  const RootDatum rd = RootDatum::load(c.group);
  const AffineWeyl W(rd);
  const HeckeAlgebra H(W);
  const HeckeElement p = H.mul(parse_hecke(W, H, a_s), parse_hecke(W, H, b_s));
  if (c.format == "tsv") {
    std::ostringstream os;
    os << "element\tqpoly\n";
    for (const auto& w : sorted_support(W, p)) os << W.element_str(w) << '\t' << p.at(w).str() << '\n';
    emit(c, os.str());
    return 0;
  }
  nlohmann::json j = {{"group", rd.name()}, {"product", H.to_json(p)}};
  if (q_spec > 0) {
    nlohmann::json sp = nlohmann::json::array();
    for (const auto& [w, v] : H.specialize(p, q_spec)) sp.push_back({{"element", W.element_str(w)}, {"value", v.get_str()}});
    j["specialized"] = {{"q", q_spec}, {"values", sp}};
  }
  emit_json(c, j);
  return 0;
}

int cmd_spherical(const Common& c, const std::string& lam_s, const std::string& mu_s) {
  const RootDatum rd = RootDatum::load(c.group);
  const AffineWeyl W(rd);
  const SphericalAlgebra S(W);
  const IVec lam = parse_ivec(lam_s), mu = parse_ivec(mu_s);
  for (const IVec* v : {&lam, &mu})
    if (static_cast<int>(v->size()) != rd.lattice_rank() || !rd.is_dominant(*v))
      throw ConfigError("spherical index " + ivec_str(*v) + " is not a dominant coweight");
  const SphericalElement p = S.mul(S.basis(lam), S.basis(mu));
  if (c.format == "tsv") {
    std::ostringstream os;
    os << "nu\tqpoly\n";
    for (const auto& [nu, cf] : p) os << ivec_csv(nu) << '\t' << cf.str() << '\n';
    emit(c, os.str());
  } else {
    emit_json(c, {{"group", rd.name()}, {"lambda", lam}, {"mu", mu}, {"product", S.to_json(p)}});
  }
  return 0;
}

int cmd_expmod(const Common& c, int bound, const std::string& mus_s, bool rank_one) {
  const RootDatum rd = RootDatum::load(c.group);
  const CaseTable table = load_table(c);
  const ExpModel M(rd, table);
  if (bound < 0) throw ConfigError("bound must be nonnegative");
  const auto win = dominant_window(rd, bound);
  std::vector<IVec> mus = mus_s.empty() ? win : parse_ivec_list(mus_s);
  for (const IVec& mu : mus)
    if (static_cast<int>(mu.size()) != rd.lattice_rank() || !rd.is_dominant(mu))
      throw ConfigError("mu = " + ivec_str(mu) + " is not a dominant coweight");
  if (c.format == "tsv") {
    std::string out;
    for (const IVec& mu : mus) out += action_matrix_tsv(M, mu, win);
    emit(c, out);
    return 0;
  }
  nlohmann::json mats = nlohmann::json::array();
  for (const IVec& mu : mus) mats.push_back(action_matrix_json(M, mu, win));
  nlohmann::json j = {{"group", rd.name()}, {"window", win}, {"actions", mats}};
  if (rank_one) j["rank_one"] = M.verify_rank_one(win).to_json();
  emit_json(c, j);
  return 0;
}

int cmd_fiber(const Common& c, const std::string& source, const std::string& word_s, const std::string& targets_s) {
  const RootDatum rd = RootDatum::load(c.group);
  const AffineWeyl W(rd);
  const CaseTable table = load_table(c);
  const ExpModule M(W, table);
  const Facet a0 = Facet::a0();
  const ExpLabel v0 = parse_label(W, source);
  M.validate_label(v0);
  std::vector<FiberStep> word;
  for (int s : parse_word(W, word_s)) word.push_back(FiberStep::simple(s));
  const BigExpVector conv = M.convolve({{v0, QPoly(1)}}, word);
  std::vector<ExpLabel> targets;
  if (targets_s == "all") {
    for (const auto& [t, cf] : conv) targets.push_back(t);
    std::sort(targets.begin(), targets.end(), [&](const ExpLabel& x, const ExpLabel& y) {
      const int lx = W.length(x.el), ly = W.length(y.el);
      if (lx != ly) return lx < ly;
      return W.label_str(x) < W.label_str(y);
    });
  } else {
    std::stringstream ss(targets_s);
    std::string item;
    while (std::getline(ss, item, ';')) targets.push_back(parse_label(W, item));
  }
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream tsv;
  tsv << "target\tclass\n";
  QPoly euler;
  for (const ExpLabel& t : targets) {
    const QPoly f = M.fiber_class(v0, word, t);
    euler += f * orbit_shape(W, t, a0).class_in_q();
    rows.push_back({{"target", W.label_json(t)}, {"str", W.label_str(t)}, {"class", f.to_json()}, {"class_str", f.str()}});
    tsv << W.label_str(t) << '\t' << f.str() << '\n';
  }
  const QPoly total = orbit_shape(W, v0, a0).class_in_q() * QPoly::q_pow(static_cast<int>(word.size()));
  if (c.format == "tsv") {
    emit(c, tsv.str());
  } else {
    nlohmann::json j = {{"group", rd.name()}, {"source", W.label_str(v0)}, {"word", parse_word(W, word_s)},
                        {"fibers", rows}, {"euler", euler.str()}};
    if (targets_s == "all") j["total_space"] = total.str();
    emit_json(c, j);
  }
  if (targets_s == "all" && euler != total)
    throw InvariantViolation("fiber classes sum to " + euler.str() + ", total space class is " + total.str());
  return 0;
}

int cmd_oracle(const Common& c, int q, int bound, const std::string& what, const std::string& spec_s,
               const std::string& lam_s, const std::string& mu_s) {
  const RootDatum rd = RootDatum::load(c.group);
  if (!FiniteField::is_supported(q)) throw ConfigError("q must be a supported prime power <= 49");
  if (!LatticeModel::supports(rd.name())) throw ConfigError("no finite field model for group " + rd.name());
  if (bound < 0) throw ConfigError("bound must be nonnegative");
  const auto win = dominant_window(rd, bound);
  IVec top(rd.lattice_rank(), 0);
  for (const IVec& v : win)
    for (size_t i = 0; i < v.size(); ++i) top[i] = std::max(top[i], std::abs(v[i]));
  if (what == "window") {
    const auto o = FqOracle::for_bound(rd, q, top);
    // Union of the windows, in canonical order.
    std::set<std::string> seen;
    std::vector<GrPoint> uniq;
    for (const IVec& nu : win)
      for (auto& p : o->enumerate_gr_window(nu))
        if (seen.insert(p.key()).second) uniq.push_back(std::move(p));
    emit(c, gr_points_jsonl(o->model(), uniq));
    return 0;
  }
  if (what == "partition") {
    const auto o = FqOracle::for_bound(rd, q, top);
    const GroupSpec spec = parse_group_spec(spec_s);
    OrbitPartition part;
    if (is_twisted(spec)) {
      std::vector<IVec> coweights;
      for (const IVec& nu : win) {
        std::set<IVec> orb;
        for (int u = 0; u < rd.weyl_order(); ++u) orb.insert(rd.weyl_act_coweight(u, nu));
        coweights.insert(coweights.end(), orb.begin(), orb.end());
      }
      part = o->orbit_partition(coweights, spec);
    } else {
      std::set<std::string> seen;
      std::vector<GrPoint> pts;
      for (const IVec& nu : win)
        for (auto& p : o->enumerate_gr_window(nu))
          if (seen.insert(p.key()).second) pts.push_back(std::move(p));
      part = o->partition_points(pts, spec);
    }
    const AffineWeyl W(rd);
    const AffineWeyl& Wl = is_twisted(spec) ? o->exp_model().ext_weyl() : W;
    const Facet f0 = Facet::f0(rd.rank());
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream tsv;
    tsv << "label\tcoweight\tclosed\tsize\tshape_class\n";
    for (const Orbit& orb : part.orbits) {
      const mpz_class cls = orbit_shape(Wl, orb.label, f0).class_in_q().specialize(q);
      rows.push_back({{"label", Wl.label_str(orb.label)}, {"coweight", orb.coweight}, {"closed", orb.closed},
                      {"size", orb.points.size()}, {"shape_class", cls.get_str()}});
      tsv << Wl.label_str(orb.label) << '\t' << ivec_csv(orb.coweight) << '\t' << orb.closed << '\t'
          << orb.points.size() << '\t' << cls.get_str() << '\n';
      if (mpz_class(static_cast<unsigned long>(orb.points.size())) != cls)
        throw InvariantViolation("orbit " + Wl.label_str(orb.label) + " has " + std::to_string(orb.points.size()) +
                                 " points, its shape class is " + cls.get_str());
    }
    if (c.format == "tsv") emit(c, tsv.str());
    else emit_json(c, {{"group", rd.name()}, {"q", q}, {"spec", group_spec_name(spec)}, {"orbits", rows}});
    return 0;
  }
  if (what == "structure") {
    const IVec lam = parse_ivec(lam_s), mu = parse_ivec(mu_s);
    IVec sized = rd.dominant_rep([&] {
      IVec s(lam.size());
      for (size_t i = 0; i < lam.size(); ++i) s[i] = lam[i] + mu[i];
      return s;
    }());
    const auto o = FqOracle::for_bound(rd, q, sized);
    const auto sc = o->structure_constants(lam, mu);
    const ExpModVector gen = o->exp_model().basis_action(lam, mu);
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream tsv;
    tsv << "nu\tcounted\tgeneric\n";
    std::set<IVec> keys;
    for (const auto& [nu, v] : sc) keys.insert(nu);
    for (const auto& [nu, v] : gen) keys.insert(nu);
    bool agree = true;
    for (const IVec& nu : keys) {
      const mpz_class counted = sc.count(nu) ? sc.at(nu) : mpz_class(0);
      const mpz_class expect = gen.count(nu) ? gen.at(nu).specialize(q) : mpz_class(0);
      agree = agree && counted == expect;
      rows.push_back({{"nu", nu}, {"counted", counted.get_str()}, {"generic", expect.get_str()}});
      tsv << ivec_csv(nu) << '\t' << counted.get_str() << '\t' << expect.get_str() << '\n';
    }
    if (c.format == "tsv") emit(c, tsv.str());
    else emit_json(c, {{"group", rd.name()}, {"q", q}, {"lambda", lam}, {"mu", mu}, {"constants", rows}, {"agree", agree}});
    if (!agree) throw InvariantViolation("oracle counts differ from the generic module");
    return 0;
  }
  throw ConfigError("--what must be window, partition or structure");
}

int cmd_verify(const Common& c, const std::vector<std::string>& groups, int bound, const std::string& q_s,
               const std::string& criteria_s, bool no_limits) {
  VerifyConfig cfg;
  for (const auto& g : groups) {
    std::stringstream ss(g);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.groups.push_back(RootDatum::load(item).name());
  }
  if (bound < 0) throw ConfigError("bound must be nonnegative");
  cfg.bound = bound;
  cfg.q_list = parse_q_list(q_s);
  cfg.seed = c.seed;
  cfg.enforce_limits = !no_limits;
  std::set<int> which;
  for (int k : parse_int_list(criteria_s)) {
    if (k < 1 || k > 9) throw ConfigError("criteria are numbered 1 to 9");
    which.insert(k);
  }
  const auto results = run_suites(cfg, which, [](const SuiteResult& r) {
    std::cerr << (r.pass() ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << " (" << r.checks << " checks)\n";
  });
  nlohmann::json rep = nlohmann::json::array();
  bool ok = true;
  long passed = 0;
  for (const auto& r : results) {
    rep.push_back(r.to_json());
    ok = ok && r.pass();
    if (r.failures.empty()) passed += r.checks;
  }
  emit_json(c, {{"pass", ok}, {"passed_checks", passed}, {"suites", rep}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential module and Hecke algebra computations"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s) {
    s->add_option("--group", c.group, "preset name or root datum JSON file");
    s->add_option("--output", c.format, "json or tsv");
    s->add_option("--out", c.out, "output file (default stdout)");
    s->add_option("--seed", c.seed, "seed for randomized checks");
  };

  std::string facet = "f0", list = "elements";
  int weyl_bound = 3;
  auto* weyl = app.add_subcommand("weyl", "lengths, reduced words and 0W tables");
  common(weyl);
  weyl->add_option("--facet", facet, "a0, f0 or simple reflection indices");
  weyl->add_option("--bound", weyl_bound, "length bound, or coordinate bound for 0W");
  weyl->add_option("--list", list, "elements, words, lengths or 0W");

  std::string ha, hb;
  long hq = 0;
  auto* hecke = app.add_subcommand("hecke", "products in the Iwahori-Hecke algebra");
  common(hecke);
  hecke->add_option("--a", ha, "element (e.g. t(1)s1, s0s1) or Hecke element JSON or @file")->required();
  hecke->add_option("--b", hb, "second factor")->required();
  hecke->add_option("--q", hq, "also specialize at q");

  std::string slam, smu;
  auto* sph = app.add_subcommand("spherical", "products 1_lambda * 1_mu in the spherical Hecke algebra");
  common(sph);
  sph->add_option("--lambda", slam, "dominant coweight")->required();
  sph->add_option("--mu", smu, "dominant coweight")->required();

  int ebound = 2;
  std::string emus;
  bool rank_one = false;
  auto* expmod = app.add_subcommand("expmod", "action matrices of the exponential module");
  common(expmod);
  expmod->add_option("--bound", ebound, "window: dominant coweights with coordinates <= bound");
  expmod->add_option("--mu", emus, "coweights separated by ';' (default: the window)");
  expmod->add_flag("--rank-one", rank_one, "include the rank one certificate");
  expmod->add_option("--case-table", c.case_table, "case table JSON file (default: built in)");

  std::string source, word, targets = "all";
  auto* fiber = app.add_subcommand("fiber", "fiber classes of convolutions of exponential orbits");
  common(fiber);
  fiber->add_option("--source", source, "label: z, e, w0, coset:<element>, zero:<element>")->required();
  fiber->add_option("--word", word, "simple reflections: s, s1s0 or 1,0")->required();
  fiber->add_option("--targets", targets, "all, or labels separated by ';'");
  fiber->add_option("--case-table", c.case_table, "case table JSON file (default: built in)");

  int oq = 3, obound = 1;
  std::string what = "window", ospec = "uexp-twisted", olam, omu;
  auto* oracle = app.add_subcommand("oracle", "finite field enumerations");
  common(oracle);
  oracle->add_option("--q", oq, "field size");
  oracle->add_option("--bound", obound, "window coordinate bound");
  oracle->add_option("--what", what, "window, partition or structure");
  oracle->add_option("--spec", ospec, "iwahori-twisted, uexp-twisted, u-gm-twisted, iwahori or uexp");
  oracle->add_option("--lambda", olam, "structure constants: lambda");
  oracle->add_option("--mu", omu, "structure constants: mu");

  std::vector<std::string> vgroups;
  int vbound = 0;
  std::string vq, vcrit;
  bool no_limits = false;
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--group", vgroups, "presets (repeatable or comma separated; default: per suite)");
  verify->add_option("--bound", vbound, "coordinate bound of the windows");
  verify->add_option("--q", vq, "comma separated field sizes");
  verify->add_option("--criteria", vcrit, "comma separated criteria (default: all)");
  verify->add_option("--out", c.out, "report file (default stdout)");
  verify->add_option("--seed", c.seed, "seed for randomized checks");
  verify->add_flag("--no-time-limits", no_limits, "do not fail suites on their time limits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    check_format(c);
    if (*weyl) return cmd_weyl(c, facet, weyl_bound, list);
    if (*hecke) return cmd_hecke(c, ha, hb, hq);
    if (*sph) return cmd_spherical(c, slam, smu);
    if (*expmod) return cmd_expmod(c, ebound, emus, rank_one);
    if (*fiber) return cmd_fiber(c, source, word, targets);
    if (*oracle) return cmd_oracle(c, oq, obound, what, ospec, olam, omu);
    if (*verify) return cmd_verify(c, vgroups, vbound, vq, vcrit, no_limits);
  } catch (const ConfigError& e) {
    std::cerr << nlohmann::json{{"error", "config"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << nlohmann::json{{"error", "invariant_violation"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << nlohmann::json{{"error", "config"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "runtime"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
