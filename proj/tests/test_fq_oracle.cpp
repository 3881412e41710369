#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/fq_oracle.hpp"
#include "wexp/serialize.hpp"

using namespace wexp;

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<GrPoint> window_union(const FqOracle& O, const RootDatum& rd, int bound) {
  std::set<std::string> seen;
  std::vector<GrPoint> out;
  for (const IVec& nu : dominant_window(rd, bound))
    for (auto& p : O.enumerate_gr_window(nu))
      if (seen.insert(p.key()).second) out.push_back(std::move(p));
  return out;
}

FqFunction indicator(const GrPoint& p) { return {{p.key(), 1}}; }

std::vector<size_t> orbit_sizes(const OrbitPartition& P) {
  std::vector<size_t> out;
  for (const auto& o : P.orbits) out.push_back(o.points.size());
  return out;
}
}  // namespace

TEST_CASE("window sizes") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  const auto O = FqOracle::for_bound(sl2, 3, {2});
  CHECK(O->enumerate_gr_window({0}).size() == 1);
  CHECK(O->enumerate_gr_window({1}).size() == 13);
  CHECK(O->enumerate_gr_window({2}).size() == 121);
  CHECK(O->iwahori_cell_counts({1}) == std::map<IVec, size_t>{{{-1}, 3}, {{0}, 1}, {{1}, 9}});
  CHECK_THROWS_AS(O->enumerate_gr_window({2}, 50), WindowTooLarge);

  const RootDatum pgl2 = RootDatum::preset("PGL2");
  for (int q : {2, 3, 5}) {
    const auto P = FqOracle::for_bound(pgl2, q, {2});
    // Gr^{<= omega} is P^1 in the odd component; Gr^{<= 2 omega} is the
    // even one.
    CHECK(P->enumerate_gr_window({1}).size() == static_cast<size_t>(q + 1));
    CHECK(P->enumerate_gr_window({2}).size() == static_cast<size_t>(q * q + q + 1));
    CHECK(P->dominant_below({1}) == std::vector<IVec>{{1}});
  }
}

TEST_CASE("window counts match the Iwahori orbit decomposition") {
  for (const auto& name : {"SL2", "PGL2", "GL2"}) {
    const RootDatum rd = RootDatum::preset(name);
    const AffineWeyl W(rd);
    for (int q : {2, 3}) {
      const auto O = FqOracle::for_bound(rd, q, IVec(rd.lattice_rank(), 2));
      for (const IVec& mu : dominant_window(rd, 2)) {
        if (mu.size() == 2 && (mu[0] > 1 || mu[1] < -1)) continue;
        long expect = 0;
        for (const auto& x : iwahori_orbits_in_spherical(W, mu)) {
          long p = 1;
          for (int k = 0; k < W.length(x); ++k) p *= q;
          expect += p;
        }
        CAPTURE(name);
        CAPTURE(ivec_str(mu));
        CHECK(static_cast<long>(O->spherical_orbit(mu).size()) == expect);
      }
    }
  }
}

TEST_CASE("frozen windows") {
  struct Row {
    const char* name;
    int bound;
    const char* file;
  };
  for (const Row& r : {Row{"SL2", 1, "sl2_q3_window_1.jsonl"}, Row{"PGL2", 2, "pgl2_q3_window_2.jsonl"}}) {
    const RootDatum rd = RootDatum::preset(r.name);
    const auto O = FqOracle::for_bound(rd, 3, IVec(1, r.bound));
    const std::string got = gr_points_jsonl(O->model(), window_union(*O, rd, r.bound));
    CHECK(got == read_file(std::string(WEXP_SOURCE_DIR "/tests/fixtures/") + r.file));
  }
}

TEST_CASE("partitions of the SL2 window") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  const auto O = FqOracle::for_bound(sl2, 3, {1});
  const auto win = O->enumerate_gr_window({1});
  const auto I = O->partition_points(win, GroupSpec::IwahoriUntwisted);
  CHECK(orbit_sizes(I) == std::vector<size_t>{1, 3, 9});
  const auto U = O->partition_points(win, GroupSpec::UExpUntwisted);
  CHECK(orbit_sizes(U) == std::vector<size_t>{1, 3, 3, 6});
  CHECK(U.orbits[2].label.tag == Tag::Coset);
  CHECK(U.orbits[3].label.tag == Tag::Zero);
  CHECK(U.orbits[2].label.el == U.orbits[3].label.el);

  // Twisted orbits through nu(t): the Iwahori orbit has q^{<2rho, nu + rho_hat>}
  // points and splits as closed q^{d-1} + open (q-1) q^{d-1}.
  for (int q : {2, 3, 4}) {
    const auto Oq = FqOracle::for_bound(sl2, q, {2});
    const auto nus = Oq->dominant_below({2});
    const auto tw = Oq->orbit_partition(nus, GroupSpec::IwahoriTwisted);
    const auto ue = Oq->orbit_partition(nus, GroupSpec::UExpTwisted);
    const auto gm = Oq->orbit_partition(nus, GroupSpec::URtimesGmTwisted);
    REQUIRE(tw.orbits.size() == nus.size());
    REQUIRE(ue.orbits.size() == 2 * nus.size());
    CHECK(orbit_sizes(gm) == orbit_sizes(tw));
    for (size_t i = 0; i < nus.size(); ++i) {
      const int d = twisted_orbit_dims(sl2, nus[i]).iwahori_dim;
      size_t qd = 1;
      for (int k = 0; k < d - 1; ++k) qd *= static_cast<size_t>(q);
      CHECK(tw.orbits[i].points.size() == qd * static_cast<size_t>(q));
      CHECK(ue.orbits[2 * i].closed);
      CHECK(ue.orbits[2 * i].points.size() == qd);
      CHECK(ue.orbits[2 * i + 1].points.size() == qd * static_cast<size_t>(q - 1));
      CHECK(ue.orbits[2 * i].label == Oq->exp_model().closed_label(nus[i]));
      CHECK(ue.orbits[2 * i + 1].label == Oq->exp_model().open_label(nus[i]));
      CHECK(Oq->closed_orbit(nus[i]).size() == qd);
    }
  }
}

TEST_CASE("generators and the character") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  const auto O = FqOracle::for_bound(sl2, 5, {1});
  const GrPoint b = O->closed_basepoint({0});
  for (const auto& g : O->generators(GroupSpec::UExpTwisted)) {
    // Generators stabilizing the closed basepoint carry trivial character.
    if (O->apply(g, b) == b) CHECK(g.psi_trace % 5 == 0);
  }
  CHECK(parse_group_spec(group_spec_name(GroupSpec::URtimesGmTwisted)) == GroupSpec::URtimesGmTwisted);
  CHECK(is_twisted(GroupSpec::UExpTwisted));
  CHECK_FALSE(is_twisted(GroupSpec::UExpUntwisted));
  CHECK_THROWS_AS(parse_group_spec("borel"), ConfigError);
}

TEST_CASE("Hecke operators on the window") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  for (int q : {2, 3}) {
    const auto O = FqOracle::for_bound(sl2, q, {3});
    const auto win = O->enumerate_gr_window({3});
    const GrPoint base = O->model().torus_point({0});
    const FqFunction f = indicator(base);
    CHECK(O->hecke_operator(f, {0}, win) == f);
    const FqFunction g = O->hecke_operator(f, {1}, win);
    mpz_class total = 0;
    for (const auto& [k, v] : g) {
      CHECK(v == 1);
      total += v;
    }
    CHECK(total == q * q + q);
    const FqFunction ab = O->hecke_operator(O->hecke_operator(f, {1}, win), {2}, win);
    const FqFunction ba = O->hecke_operator(O->hecke_operator(f, {2}, win), {1}, win);
    auto clean = [](FqFunction h) {
      for (auto it = h.begin(); it != h.end();) it = it->second == 0 ? h.erase(it) : std::next(it);
      return h;
    };
    CHECK(clean(ab) == clean(ba));
    CHECK_THROWS_AS(O->hecke_operator(O->hecke_operator(f, {2}, win), {2}, win), SupportEscapesWindow);
  }
}

TEST_CASE("structure constants match the generic module") {
  for (const auto& name : {"SL2", "PGL2"}) {
    const RootDatum rd = RootDatum::preset(name);
    const ExpModel M(rd);
    for (int q : {2, 3, 5})
      for (const IVec& lam : std::vector<IVec>{{0}, {1}})
        for (const IVec& mu : std::vector<IVec>{{0}, {1}, {2}}) {
          const auto O = FqOracle::for_bound(rd, q, {lam[0] + mu[0]});
          std::map<IVec, mpz_class> expect;
          for (const auto& [nu, c] : M.basis_action(lam, mu)) {
            const mpz_class v = c.specialize(q);
            if (v != 0) expect[nu] = v;
          }
          auto got = O->structure_constants(lam, mu);
          for (auto it = got.begin(); it != got.end();) it = it->second == 0 ? got.erase(it) : std::next(it);
          CAPTURE(name);
          CAPTURE(q);
          CAPTURE(ivec_str(lam));
          CAPTURE(ivec_str(mu));
          CHECK(got == expect);
        }
  }
}

TEST_CASE("interpolated structure constants") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  const ExpModel M(sl2);
  const auto id = interpolate_structure_constants(sl2, {0}, {0}, {2, 3, 5});
  CHECK(id.at({0}) == QPoly(1));
  const auto c = interpolate_structure_constants(sl2, {1}, {1}, {2, 3, 5});
  for (const auto& [nu, p] : M.basis_action({1}, {1})) CHECK(c.at(nu) == p);
  CHECK(dual_coweight(sl2, {1}) == IVec{1});
  CHECK(dual_coweight(RootDatum::preset("SL3"), {1, 0}) == IVec{0, 1});
}

TEST_CASE("unsupported configurations") {
  CHECK_THROWS_AS(FqOracle::for_bound(RootDatum::preset("Sp4"), 2, {1, 1}), ConfigError);
  CHECK_THROWS_AS(FqOracle::for_bound(RootDatum::preset("SL2"), 6, {1}), ConfigError);
}
