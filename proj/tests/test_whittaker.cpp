#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/whittaker.hpp"

using namespace wexp;

TEST_CASE("Whittaker support lemma") {
  for (const auto& name : {"SL2", "PGL2"})
    for (int q : {3, 5}) {
      const WhittakerChain C(RootDatum::preset(name), q, {1}, {{0}, {1}});
      for (int l = -3; l <= 3; ++l) {
        const LemmaRow r = C.lemma({l});
        CAPTURE(name);
        CAPTURE(q);
        CAPTURE(l);
        CHECK(r.dominant == (l >= 0));
        CHECK(r.stabilizer_in_kernel == r.dominant);
        CHECK(r.baby_exists == r.dominant);
        if (r.dominant) CHECK(r.orbit_in_u_cell);
      }
    }
}

TEST_CASE("Whittaker character on root groups") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  for (int q : {3, 4, 5}) {
    const WhittakerChain C(sl2, q, {1}, {{0}});
    const LatticeModel& L = C.oracle().model();
    const FiniteField& F = C.oracle().field();
    const GrPoint base = L.torus_point({0});
    for (int a = 0; a < q; ++a) {
      const GrPoint p = L.act_root(base, sl2.simple_root_index(0), a, -1);
      CHECK(C.whittaker_value({0}, p) == CycNum::psi(F, a));
    }
    // Points outside U(F) K carry no value.
    CHECK(C.whittaker_value({0}, L.torus_point({1})) == C.zero());
  }
}

TEST_CASE("averaging preserves basepoints") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  const WhittakerChain C(sl2, 3, {1}, {{0}, {1}});
  const CycNum one(3, 3, 1);
  for (const IVec& lam : std::vector<IVec>{{0}, {1}}) {
    CHECK(C.average(lam, lam) == one);
    CHECK(C.literal_average(lam, lam) == one);
    for (const IVec& nu : std::vector<IVec>{{0}, {1}}) CHECK(C.literal_average(lam, nu) == C.average(lam, nu));
    CHECK(C.whittaker_value(lam, C.oracle().model().torus_point(lam)) == one);
  }
  const WhittakerChain P(RootDatum::preset("PGL2"), 3, {1}, {{0}});
  CHECK_THROWS_AS(P.literal_average({0}, {0}), ConfigError);
}

TEST_CASE("Whittaker chain at q = 3") {
  const WhittakerChain C(RootDatum::preset("SL2"), 3, {1}, {{0}, {1}});
  const ChainReport rep = C.run();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok());
  CHECK_FALSE(rep.checks.empty());
  for (const auto& [name, ok] : rep.checks) {
    CAPTURE(name);
    CHECK(ok);
  }
  // Gm averaging on the split orbit of nu gives q on the closed part.
  for (const IVec& nu : std::vector<IVec>{{0}, {1}}) CHECK(C.gm_class(nu, nu) == 3);
}
