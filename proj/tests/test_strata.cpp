#include <set>

#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/strata.hpp"

using namespace wexp;

namespace {
const QPoly q = QPoly::from_terms({{1, 1}});

QPoly qpow(int k) { return QPoly::from_terms({{k, 1}}); }

QPoly poincare(const RootDatum& rd) {
  QPoly p;
  for (const auto& w : rd.finite_weyl_elements()) p += qpow(w.length);
  return p;
}
}  // namespace

TEST_CASE("cell shapes") {
  CHECK((CellShape{2, 1, 1}.class_in_q() == q * q * (q - QPoly(1)) * (q - QPoly(2))));
  CHECK(CellShape{2, 1, 1}.dimension() == 4);
  CHECK(CellShape::from_json(CellShape{3, 0, 2}.to_json()) == CellShape{3, 0, 2});

  const AffineWeyl W(RootDatum::preset("SL2"));
  const auto w0 = W.finite(W.rd().longest());
  CHECK(orbit_shape(W, {Tag::Zero, w0}, Facet::a0()) == CellShape{0, 1, 0});
  CHECK(orbit_shape(W, {Tag::Coset, W.identity()}, Facet::a0()) == CellShape{0, 0, 0});
  const AffineWeyl W3(RootDatum::preset("SL3"));
  CHECK(orbit_shape(W3, {Tag::Coset, W3.finite(W3.rd().longest())}, Facet::a0()) == CellShape{2, 0, 0});
}

TEST_CASE("shapes partition Iwahori cells") {
  for (const auto& name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    const RootDatum rd = RootDatum::preset(name);
    const AffineWeyl W(rd);
    for (const Facet& f : {Facet::a0(), Facet::f0(rd.rank())})
      for (const auto& l : W.enumerate_exp_labels(f, 5, 1)) {
        const int len = label_length(W, l, f);
        const CellShape sh = orbit_shape(W, l, f);
        if (l.tag == Tag::Zero) {
          CHECK(sh.dimension() == len);
          CHECK((sh.class_in_q() + orbit_shape(W, {Tag::Coset, l.el}, f).class_in_q()) == qpow(len));
        } else if (W.is_left_max(l.el)) {
          CHECK(sh.dimension() == len - 1);
        } else {
          CHECK(sh.class_in_q() == qpow(len));
        }
      }
  }
}

TEST_CASE("twisted orbit dimensions") {
  const auto p0 = twisted_orbit_dims(RootDatum::preset("PGL2"), {0});
  CHECK(p0.iwahori_dim == 1);
  CHECK(p0.exp_closed_dim == 0);
  const auto s1 = twisted_orbit_dims(RootDatum::preset("SL2"), {1});
  CHECK(s1.iwahori_dim == 3);
  CHECK(s1.exp_closed_dim == 2);
  for (const auto& name : {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "G2"}) {
    const RootDatum rd = RootDatum::preset(name);
    const auto d = twisted_orbit_dims(rd, IVec(rd.lattice_rank(), 0));
    const int two_rho_rho_hat = dot(rd.two_rho(), rd.two_rho_hat()) / 2;
    CHECK(d.iwahori_dim == two_rho_rho_hat);
    CHECK(d.exp_closed_dim == two_rho_rho_hat - 1);
  }
  CHECK_THROWS_AS(twisted_orbit_dims(RootDatum::preset("SL2"), {-1}), Error);
}

TEST_CASE("finite closure strata") {
  struct Row {
    const char* name;
    size_t count;
  };
  for (const Row& r : {Row{"SL2", 1}, Row{"PGL2", 1}, Row{"SL3", 4}, Row{"Sp4", 6}, Row{"G2", 10}}) {
    const RootDatum rd = RootDatum::preset(r.name);
    const AffineWeyl W(rd);
    const auto strata = finite_closure_strata(W);
    CAPTURE(r.name);
    CHECK(strata.size() == r.count);
    CHECK(strata.front() == ExpLabel{Tag::Coset, W.finite(rd.longest())});
    for (size_t i = 1; i < strata.size(); ++i) {
      CHECK(strata[i].tag == Tag::Coset);
      CHECK(W.length(strata[i].el) <= rd.num_positive() - 2);
    }
  }
}

TEST_CASE("Iwahori orbits in spherical orbits") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  CHECK(iwahori_orbits_in_spherical(W, {0}) == std::vector<AffineWeylElement>{W.identity()});
  const auto o = iwahori_orbits_in_spherical(W, {1});
  REQUIRE(o.size() == 2);
  CHECK(W.length(o[0]) == 1);
  CHECK(W.length(o[1]) == 2);

  // Sum of q^l over the orbits times P_W0 equals the Poincare series of the
  // double coset, enumerated directly.
  for (const auto& name : {"SL2", "PGL2", "SL3", "Sp4", "G2"}) {
    const RootDatum rd = RootDatum::preset(name);
    const AffineWeyl Wn(rd);
    for (const IVec& mu : std::vector<IVec>{IVec(rd.lattice_rank(), 0), rd.dominant_rep(IVec(rd.lattice_rank(), 1)),
                                            rd.dominant_rep(rd.simple_coroots()[0])}) {
      CAPTURE(name);
      CAPTURE(ivec_str(mu));
      QPoly orbits;
      for (const auto& x : iwahori_orbits_in_spherical(Wn, mu)) {
        CHECK(Wn.is_right_minimal(x, Facet::f0(rd.rank())));
        orbits += qpow(Wn.length(x));
      }
      std::set<AffineWeylElement> dc;
      for (int u = 0; u < rd.weyl_order(); ++u)
        for (int v = 0; v < rd.weyl_order(); ++v)
          dc.insert(Wn.mul(Wn.mul(Wn.finite(u), Wn.translation(mu)), Wn.finite(v)));
      QPoly direct;
      for (const auto& w : dc) direct += qpow(Wn.length(w));
      CHECK(orbits * poincare(rd) == direct);
    }
  }
}
