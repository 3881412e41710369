#pragma once

#include <vector>

#include "wexp/affine_weyl.hpp"
#include "wexp/qpoly.hpp"

namespace wexp {

// A^a x Gm^b x (Gm minus a point)^c.
struct CellShape {
  int a = 0, b = 0, c = 0;
  QPoly class_in_q() const;
  int dimension() const { return a + b + c; }
  nlohmann::json to_json() const { return {{"a", a}, {"b", b}, {"c", c}}; }
  static CellShape from_json(const nlohmann::json& j);
  friend bool operator==(const CellShape& x, const CellShape& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

// Length of the label's element as an element of W/W_f.
int label_length(const AffineWeyl& W, const ExpLabel& w, const Facet& f);
CellShape orbit_shape(const AffineWeyl& W, const ExpLabel& w, const Facet& f);

struct TwistedDims {
  int iwahori_dim = 0;
  int exp_closed_dim = 0;
};
// Dimensions of the rho_hat-twisted Iwahori orbit through mu and of its
// closed exponential orbit.
TwistedDims twisted_orbit_dims(const RootDatum& rd, const IVec& mu);

// Strata of the closure of the closed exponential orbit of w0 in G/B: that
// orbit (coset-tagged w0) and the Bruhat cells of codimension >= 2.
std::vector<ExpLabel> finite_closure_strata(const AffineWeyl& W);

// Right-W0-minimal representatives of the Iwahori orbits in Gr^mu,
// sorted by length then reduced word.
std::vector<AffineWeylElement> iwahori_orbits_in_spherical(const AffineWeyl& W, const IVec& mu);

}  // namespace wexp
