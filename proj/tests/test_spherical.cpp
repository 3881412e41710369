#include <algorithm>
#include <memory>

#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/fq_oracle.hpp"
#include "wexp/spherical.hpp"

using namespace wexp;

namespace {
const QPoly q = QPoly::from_terms({{1, 1}});

// c_{lam mu}^nu(q) = #{y in Gr^lam : inv(y, t^nu) = mu}, counted by brute
// force. Only used for self-dual data (SL2, PGL2), where the orientation of
// the relative position does not matter.
std::map<IVec, mpz_class> counted_constants(const FqOracle& O, const IVec& lam, const IVec& mu, const IVec& top) {
  std::map<IVec, mpz_class> out;
  const LatticeModel& L = O.model();
  for (const IVec& nu : O.dominant_below(top)) {
    const GrPoint t = L.torus_point(nu);
    long n = 0;
    for (const GrPoint& y : O.spherical_orbit(lam)) n += L.relative_position(y, t) == mu;
    if (n) out[nu] = n;
  }
  return out;
}
}  // namespace

TEST_CASE("Poincare polynomials") {
  CHECK(SphericalAlgebra(AffineWeyl(RootDatum::preset("SL2"))).poincare_poly() == QPoly(1) + q);
  const AffineWeyl W3(RootDatum::preset("SL3"));
  CHECK(SphericalAlgebra(W3).poincare_poly() == QPoly(1) + QPoly(2) * q + QPoly(2) * q * q + q * q * q);
  const AffineWeyl W4(RootDatum::preset("Sp4"));
  CHECK(SphericalAlgebra(W4).poincare_poly() == (QPoly(1) + q) * (QPoly(1) + q) * (QPoly(1) + q * q));
}

TEST_CASE("double coset lifts") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const SphericalAlgebra S(W);
  const HeckeElement l0 = S.double_coset_lift({0});
  CHECK(l0.size() == 2);
  CHECK(l0.count(W.identity()));
  CHECK(l0.count(W.simple_reflection(1)));
  // |W0 t_mu W0| = |W0| |W0 mu|
  CHECK(S.double_coset_lift({1}).size() == 4);
  // |K t^mu K / I| = sum of q^l(w) over the double coset = |Gr^mu| |G/B|
  for (int qq : {2, 3}) {
    const auto O = FqOracle::for_bound(W.rd(), qq, {2});
    for (const IVec& mu : std::vector<IVec>{{0}, {1}, {2}}) {
      mpz_class total = 0;
      for (const auto& [w, c] : S.double_coset_lift(mu)) {
        CHECK(c == QPoly(1));
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), qq, static_cast<unsigned long>(W.length(w)));
        total += p;
      }
      CHECK(total == mpz_class(O->spherical_orbit(mu).size() * (qq + 1)));
    }
  }
}

TEST_CASE("unit and commutativity") {
  for (const auto& name : {"SL2", "SL3", "Sp4"}) {
    const AffineWeyl W(RootDatum::preset(name));
    const SphericalAlgebra S(W);
    const auto dom = dominant_window(W.rd(), name == std::string("SL2") ? 2 : 1);
    for (const IVec& mu : dom) {
      CHECK(S.mul(S.unit(), S.basis(mu)) == S.basis(mu));
      CHECK(S.from_hecke(S.lift(S.basis(mu))) == S.basis(mu));
      for (const IVec& lam : dom) CHECK(S.mul(S.basis(lam), S.basis(mu)) == S.mul(S.basis(mu), S.basis(lam)));
    }
  }
}

TEST_CASE("SL2 square of the minimal generator") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const SphericalAlgebra S(W);
  const SphericalElement expect = {{{2}, QPoly(1)}, {{1}, q - QPoly(1)}, {{0}, q * q + q}};
  CHECK(S.mul(S.basis({1}), S.basis({1})) == expect);
  CHECK(S.from_json(S.to_json(expect)) == expect);
}

TEST_CASE("structure constants against brute-force counts") {
  for (const auto& name : {"SL2", "PGL2"}) {
    const RootDatum rd = RootDatum::preset(name);
    const AffineWeyl W(rd);
    const SphericalAlgebra S(W);
    const auto dom = dominant_window(rd, 2);
    for (const IVec& lam : dom)
      for (const IVec& mu : dom) {
        IVec top(lam.size());
        for (size_t i = 0; i < lam.size(); ++i) top[i] = lam[i] + mu[i];
        const SphericalElement prod = S.mul(S.basis(lam), S.basis(mu));
        std::map<IVec, std::vector<std::pair<long, mpz_class>>> samples;
        for (int qq : {2, 3, 5}) {
          const auto O = FqOracle::for_bound(rd, qq, top);
          const auto counted = counted_constants(*O, lam, mu, top);
          CHECK(counted == S.specialize(prod, qq));
          for (const IVec& nu : O->dominant_below(top)) {
            auto it = counted.find(nu);
            samples[nu].push_back({qq, it == counted.end() ? mpz_class(0) : it->second});
          }
        }
        // c_{lam mu}^nu has degree at most min(<2rho, lam>, <2rho, mu>).
        const int deg = std::min(rd.pair_two_rho(lam), rd.pair_two_rho(mu));
        if (deg > 2) continue;
        for (const auto& [nu, smp] : samples) {
          auto it = prod.find(nu);
          CHECK(qpoly_interpolate(smp, deg) == (it == prod.end() ? QPoly() : it->second));
        }
      }
  }
}

TEST_CASE("division failures are reported") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const SphericalAlgebra S(W);
  CHECK_THROWS_AS(S.from_hecke(S.hecke().basis(W.simple_reflection(1))), NormalizationFailure);
  CHECK_THROWS(S.basis({-1}));
}
