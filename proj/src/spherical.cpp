#include "wexp/spherical.hpp"

#include <algorithm>
#include <set>

#include "wexp/errors.hpp"

namespace wexp {

HeckeElement SphericalAlgebra::double_coset_lift(const IVec& mu) const {
  const RootDatum& rd = W_.rd();
  if (!rd.is_dominant(mu)) throw Error("double coset lift needs a dominant coweight, got " + ivec_str(mu));
  std::set<IVec> orbit;
  for (int u = 0; u < rd.weyl_order(); ++u) orbit.insert(rd.weyl_act_coweight(u, mu));
  // W0 t_mu W0 = { t_lambda v : lambda in W0 mu, v in W0 }
  HeckeElement out;
  for (const IVec& lam : orbit)
    for (int v = 0; v < rd.weyl_order(); ++v) out.emplace(AffineWeylElement::make(lam, v), QPoly(1));
  return out;
}

HeckeElement SphericalAlgebra::lift(const SphericalElement& a) const {
  HeckeElement out;
  for (const auto& [mu, c] : a) hecke_add_to(out, double_coset_lift(mu), c);
  return out;
}

QPoly SphericalAlgebra::poincare_poly() const {
  QPoly p;
  for (const auto& w : W_.rd().finite_weyl_elements()) p += QPoly::q_pow(w.length);
  return p;
}

SphericalElement SphericalAlgebra::unit() const { return basis(IVec(W_.rd().lattice_rank(), 0)); }

SphericalElement SphericalAlgebra::basis(const IVec& mu) const {
  if (!W_.rd().is_dominant(mu)) throw Error("spherical basis index must be dominant");
  return {{mu, QPoly(1)}};
}

SphericalElement SphericalAlgebra::from_hecke(const HeckeElement& x) const {
  const RootDatum& rd = W_.rd();
  std::map<IVec, std::vector<const QPoly*>> groups;
  for (const auto& [w, c] : x) groups[rd.dominant_rep(w.lambda())].push_back(&c);
  SphericalElement out;
  for (const auto& [nu, cs] : groups) {
    std::set<IVec> orbit;
    for (int u = 0; u < rd.weyl_order(); ++u) orbit.insert(rd.weyl_act_coweight(u, nu));
    const size_t expect = orbit.size() * static_cast<size_t>(rd.weyl_order());
    if (cs.size() != expect)
      throw NormalizationFailure("element is not constant on the double coset of " + ivec_str(nu) + ": " +
                                 std::to_string(cs.size()) + " of " + std::to_string(expect) + " terms present");
    for (const QPoly* c : cs)
      if (*c != *cs[0])
        throw NormalizationFailure("coefficients differ within the double coset of " + ivec_str(nu));
    out[nu] = *cs[0];
  }
  return out;
}

SphericalElement SphericalAlgebra::mul(const SphericalElement& a, const SphericalElement& b) const {
  HeckeElement prod = H_.mul(lift(a), lift(b));
  const QPoly P = poincare_poly();
  HeckeElement quot;
  for (const auto& [w, c] : prod) {
    try {
      quot.emplace(w, qpoly_exact_div(c, P));
    } catch (const DivisionNotExact& e) {
      throw NormalizationFailure(std::string("product of double coset lifts not divisible by the Poincare polynomial: ") + e.what());
    }
  }
  SphericalElement out = from_hecke(quot);
  const bool nonneg_inputs = [&] {
    for (const auto* s : {&a, &b})
      for (const auto& [mu, c] : *s)
        if (!c.nonnegative_from_two()) return false;
    return true;
  }();
  if (nonneg_inputs)
    for (const auto& [nu, c] : out)
      if (!c.nonnegative_from_two())
        throw NormalizationFailure("structure constant at " + ivec_str(nu) + " is not a nonnegative count: " + c.str());
  return out;
}

std::map<IVec, mpz_class> SphericalAlgebra::specialize(const SphericalElement& a, long q) const {
  std::map<IVec, mpz_class> out;
  for (const auto& [mu, c] : a) {
    mpz_class v = c.specialize(q);
    if (v != 0) out[mu] = v;
  }
  return out;
}

nlohmann::json SphericalAlgebra::to_json(const SphericalElement& a) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mu, c] : a) arr.push_back({{"mu", mu}, {"qpoly", c.to_json()}});
  return arr;
}

SphericalElement SphericalAlgebra::from_json(const nlohmann::json& j) const {
  SphericalElement out;
  for (const auto& e : j) {
    IVec mu = e.at("mu").get<IVec>();
    if (!W_.rd().is_dominant(mu)) throw ConfigError("spherical index " + ivec_str(mu) + " is not dominant");
    out[mu] += QPoly::from_json(e.at("qpoly"));
  }
  return out;
}

std::vector<IVec> dominant_window(const RootDatum& rd, int bound) {
  std::vector<IVec> out;
  const int n = rd.lattice_rank();
  IVec lam(n, -bound);
  for (;;) {
    if (rd.is_dominant(lam)) out.push_back(lam);
    int i = 0;
    while (i < n && lam[i] == bound) lam[i++] = -bound;
    if (i == n) break;
    ++lam[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wexp
