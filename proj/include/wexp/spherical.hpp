#pragma once

#include <map>
#include <vector>

#include "wexp/hecke.hpp"

namespace wexp {

// Coefficients on the basis 1_mu, mu dominant.
using SphericalElement = std::map<IVec, QPoly>;

class SphericalAlgebra {
 public:
  explicit SphericalAlgebra(const AffineWeyl& W) : W_(W), H_(W) {}
  const AffineWeyl& weyl() const { return W_; }
  const HeckeAlgebra& hecke() const { return H_; }

  // Sum of T_w over the double coset W0 t_mu W0.
  HeckeElement double_coset_lift(const IVec& mu) const;
  HeckeElement lift(const SphericalElement& a) const;
  QPoly poincare_poly() const;
  SphericalElement unit() const;
  SphericalElement basis(const IVec& mu) const;
  // lift(a) lift(b) / P, re-expressed in the 1_mu basis. Throws
  // NormalizationFailure if the division is not exact or the quotient is not
  // a combination of double coset sums with counting coefficients
  // (nonnegative_from_two).
  SphericalElement mul(const SphericalElement& a, const SphericalElement& b) const;
  // The inverse of lift on its image; throws NormalizationFailure otherwise.
  SphericalElement from_hecke(const HeckeElement& x) const;

  std::map<IVec, mpz_class> specialize(const SphericalElement& a, long q) const;
  nlohmann::json to_json(const SphericalElement& a) const;
  SphericalElement from_json(const nlohmann::json& j) const;

 private:
  const AffineWeyl& W_;
  HeckeAlgebra H_;
};

// Dominant coweights with all coordinates in [-bound, bound].
std::vector<IVec> dominant_window(const RootDatum& rd, int bound);

}  // namespace wexp
