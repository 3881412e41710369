#include <algorithm>
#include <set>

#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/root_datum.hpp"

using namespace wexp;

namespace {
const std::vector<std::string> kPresets = {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "G2"};
}

TEST_CASE("preset shapes") {
  struct Row {
    const char* name;
    int rank, lattice, pos, weyl;
  };
  for (const Row& r : {Row{"SL2", 1, 1, 1, 2}, Row{"PGL2", 1, 1, 1, 2}, Row{"GL2", 1, 2, 1, 2}, Row{"SL3", 2, 2, 3, 6},
                       Row{"PGL3", 2, 2, 3, 6}, Row{"Sp4", 2, 2, 4, 8}, Row{"G2", 2, 2, 6, 12}}) {
    const RootDatum rd = RootDatum::preset(r.name);
    CAPTURE(r.name);
    CHECK(rd.rank() == r.rank);
    CHECK(rd.lattice_rank() == r.lattice);
    CHECK(rd.num_positive() == r.pos);
    CHECK(rd.weyl_order() == r.weyl);
    CHECK(rd.weyl(rd.longest()).length == r.pos);
    CHECK(static_cast<int>(rd.weyl(rd.longest()).word.size()) == r.pos);
  }
}

TEST_CASE("SL3 positive roots") {
  const RootDatum rd = RootDatum::preset("SL3");
  std::set<IVec> simple;
  for (int i = 0; i < rd.num_positive(); ++i) simple.insert(rd.roots()[i].simple);
  CHECK(simple == std::set<IVec>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(rd.positive_roots().size() == 3);
}

TEST_CASE("two rho on simple coroots and rho hat on simple roots") {
  for (const auto& name : kPresets) {
    const RootDatum rd = RootDatum::preset(name);
    CAPTURE(name);
    for (int i = 0; i < rd.rank(); ++i) {
      CHECK(dot(rd.two_rho(), rd.simple_coroots()[i]) == 2);
      CHECK(dot(rd.simple_roots()[i], rd.two_rho_hat()) == 2);
    }
    for (const Root& a : rd.roots()) CHECK(dot(a.vec, rd.two_rho_hat()) == 2 * a.height);
  }
}

TEST_CASE("rho hat integrality") {
  CHECK(RootDatum::preset("PGL2").rho_hat_integral());
  CHECK(RootDatum::preset("PGL2").rho_hat() == IVec{1});
  CHECK_FALSE(RootDatum::preset("SL2").rho_hat_integral());
  CHECK(RootDatum::preset("PGL3").rho_hat_integral());
  CHECK_THROWS(RootDatum::preset("SL2").rho_hat());
}

TEST_CASE("finite Weyl group") {
  for (const auto& name : kPresets) {
    const RootDatum rd = RootDatum::preset(name);
    std::set<std::string> mats;
    for (int u = 0; u < rd.weyl_order(); ++u) {
      const auto& w = rd.weyl(u);
      IMat m = identity_mat(rd.lattice_rank());
      for (int i : w.word) m = mat_mul(m, rd.weyl(rd.weyl_simple(i)).matrix);
      CHECK(m == w.matrix);
      mats.insert(imat_key(w.matrix));
      CHECK(rd.weyl_mul(u, rd.weyl_inv(u)) == 0);
    }
    CHECK(static_cast<int>(mats.size()) == rd.weyl_order());
    for (const IVec& lam : std::vector<IVec>{IVec(rd.lattice_rank(), 1), IVec(rd.lattice_rank(), -2)})
      CHECK(rd.is_dominant(rd.dominant_rep(lam)));
  }
}

TEST_CASE("json round trip and custom data") {
  for (const auto& name : kPresets) {
    const RootDatum rd = RootDatum::preset(name);
    const RootDatum back = RootDatum::from_json(rd.to_json());
    CHECK(back.cartan() == rd.cartan());
    CHECK(back.weyl_order() == rd.weyl_order());
    CHECK(back.num_positive() == rd.num_positive());
  }
  nlohmann::json b2 = {{"name", "SO5"}, {"cartan", {{2, -2}, {-1, 2}}}, {"simple_roots", {{1, -1}, {0, 1}}},
                       {"simple_coroots", {{1, -1}, {0, 2}}}};
  CHECK(RootDatum::from_json(b2).weyl_order() == 8);
}

TEST_CASE("invalid root data") {
  nlohmann::json affine = {{"name", "A1x"}, {"cartan", {{2, -2}, {-2, 2}}}, {"simple_roots", {{2, -2}, {-2, 2}}},
                           {"simple_coroots", {{1, 0}, {0, 1}}}};
  CHECK_THROWS_AS(RootDatum::from_json(affine), ConfigError);
  nlohmann::json mismatch = {{"name", "bad"}, {"cartan", {{2}}}, {"simple_roots", {{2}}}, {"simple_coroots", {{2}}}};
  CHECK_THROWS_AS(RootDatum::from_json(mismatch), ConfigError);
  nlohmann::json torus = {{"name", "T"}, {"cartan", nlohmann::json::array()}, {"simple_roots", nlohmann::json::array()},
                          {"simple_coroots", nlohmann::json::array()}};
  CHECK_THROWS_AS(RootDatum::from_json(torus), ConfigError);
  CHECK_THROWS_AS(RootDatum::from_json({{"name", "x"}}), ConfigError);
  CHECK_THROWS_AS(RootDatum::preset("E8"), ConfigError);
  CHECK_THROWS_AS(RootDatum::load("/nonexistent/file.json"), ConfigError);
}
