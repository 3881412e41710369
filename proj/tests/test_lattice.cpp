#include <random>

#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/fq_oracle.hpp"
#include "wexp/lattice.hpp"

using namespace wexp;

namespace {
const std::vector<std::string> kGroups = {"SL2", "PGL2", "GL2", "SL3"};

std::vector<IVec> small_coweights(const RootDatum& rd) {
  std::vector<IVec> out;
  const int n = rd.lattice_rank();
  IVec lam(n, -2);
  for (;;) {
    out.push_back(lam);
    int i = 0;
    while (i < n && lam[i] == 2) lam[i++] = -2;
    if (i == n) break;
    ++lam[i];
  }
  return out;
}

GrPoint random_k_move(const LatticeModel& L, GrPoint p, std::mt19937& rng, int steps) {
  const int R = static_cast<int>(L.rd().roots().size());
  for (int k = 0; k < steps; ++k) {
    const int r = static_cast<int>(rng() % R);
    const int level = L.rd().roots()[r].positive ? static_cast<int>(rng() % 3) : 1 + static_cast<int>(rng() % 2);
    p = L.act_root(p, r, static_cast<int>(rng() % L.field().q()), level);
  }
  return p;
}
}  // namespace

TEST_CASE("torus points") {
  for (const auto& name : kGroups) {
    const RootDatum rd = RootDatum::preset(name);
    const FiniteField F(3);
    const LatticeModel L(rd, F, 16);
    const GrPoint base = L.torus_point(IVec(rd.lattice_rank(), 0));
    for (const IVec& lam : small_coweights(rd)) {
      const GrPoint t = L.torus_point(lam);
      CAPTURE(name);
      CAPTURE(ivec_str(lam));
      CHECK(L.iwasawa(t) == lam);
      CHECK(L.coords(L.exps(lam)) == lam);
      CHECK(L.relative_position(base, t) == rd.dominant_rep(lam));
      CHECK(L.relative_position(t, base) == rd.dominant_rep(dual_coweight(rd, lam)));
    }
  }
}

TEST_CASE("relative position is K invariant") {
  std::mt19937 rng(21);
  for (const auto& name : kGroups) {
    const RootDatum rd = RootDatum::preset(name);
    for (int qq : {2, 3, 4}) {
      const FiniteField F(qq);
      const LatticeModel L(rd, F, 16);
      const GrPoint base = L.torus_point(IVec(rd.lattice_rank(), 0));
      const auto lams = small_coweights(rd);
      for (int k = 0; k < 40; ++k) {
        const IVec& lam = lams[rng() % lams.size()];
        const IVec& mu = lams[rng() % lams.size()];
        const GrPoint x = L.torus_point(lam), y = L.torus_point(mu);
        const IVec rel = L.relative_position(x, y);
        // Moving both points by the same element of K.
        const int R = static_cast<int>(rd.roots().size());
        const int r = static_cast<int>(rng() % R);
        const int a = static_cast<int>(rng() % qq);
        const int level = rd.roots()[r].positive ? 0 : 1;
        CHECK(L.relative_position(L.act_root(x, r, a, level), L.act_root(y, r, a, level)) == rel);
        CHECK(L.relative_position(base, random_k_move(L, x, rng, 4)) == rd.dominant_rep(lam));
        CHECK(rd.is_dominant(rel));
      }
    }
  }
}

TEST_CASE("normal forms are canonical") {
  const RootDatum rd = RootDatum::preset("SL2");
  const FiniteField F(5);
  const LatticeModel L(rd, F, 16);
  const GrPoint base = L.torus_point({0});
  CHECK(L.act_root(base, 0, 3, 0) == base);
  CHECK(L.act_root(base, 1, 3, 1) == base);
  CHECK_FALSE(L.act_root(base, 0, 3, -1) == base);
  const GrPoint p = L.act_root(base, 0, 2, -1);
  CHECK(L.act_root(L.act_root(p, 0, 3, -1), 0, 2, -1) == L.act_root(p, 0, 0, 0));
  CHECK(L.hnf({{L.ring().monomial(1, 0), Laurent{}}, {L.ring().monomial(1, 0), L.ring().monomial(1, 0)}}) == base);
  CHECK(L.point_str(base).size() > 0);
}

TEST_CASE("Whittaker coordinate and scaling") {
  for (const auto& name : kGroups) {
    const RootDatum rd = RootDatum::preset(name);
    const FiniteField F(5);
    const LatticeModel L(rd, F, 16);
    const GrPoint base = L.torus_point(IVec(rd.lattice_rank(), 0));
    CHECK(L.whittaker_coordinate(base) == 0);
    for (int i = 0; i < rd.rank(); ++i)
      for (int a = 0; a < 5; ++a) {
        const GrPoint p = L.act_root(base, rd.simple_root_index(i), a, -1);
        CHECK(L.whittaker_coordinate(p) == a);
        CHECK(L.whittaker_coordinate(L.act_diag(p, L.gm_diag(2))) == F.mul(2, a));
      }
  }
}

TEST_CASE("unsupported groups") {
  CHECK_FALSE(LatticeModel::supports("Sp4"));
  const RootDatum rd = RootDatum::preset("G2");
  const FiniteField F(2);
  CHECK_THROWS_AS(LatticeModel(rd, F, 8), ConfigError);
}
