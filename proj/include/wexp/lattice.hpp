#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wexp/laurent.hpp"
#include "wexp/root_datum.hpp"

namespace wexp {

// n x n matrix over F_q((t)), column-major: m[i + n * j].
using LMat = std::vector<Laurent>;

// A lattice g O^n in Hermite normal form: upper triangular basis with
// diagonal t^{a_i} and entry (i, j), i < j, reduced to exponents < a_i.
// For homothety models the last diagonal exponent is normalized to 0.
struct GrPoint {
  std::vector<int> a;
  LMat b;
  std::string key() const;
  friend bool operator==(const GrPoint& x, const GrPoint& y) { return x.a == y.a && x.b == y.b; }
};

struct GrPointHash {
  size_t operator()(const GrPoint& p) const { return std::hash<std::string>{}(p.key()); }
};

// Points of Gr for SL2, PGL2 (GL2 lattices modulo homothety), GL2 and SL3
// through their standard representations on lattices.
class LatticeModel {
 public:
  LatticeModel(const RootDatum& rd, const FiniteField& F, int prec);
  static bool supports(const std::string& preset);

  const RootDatum& rd() const { return rd_; }
  const LaurentRing& ring() const { return R_; }
  const FiniteField& field() const { return R_.field(); }
  int dim() const { return n_; }
  bool homothety() const { return homothety_; }

  // Diagonal exponents of the cocharacter lam, and back.
  std::vector<int> exps(const IVec& lam) const;
  IVec coords(const std::vector<int>& e) const;
  // Matrix entry (i, j) carrying the root group of root r.
  std::pair<int, int> root_entry(int r) const { return root_entry_[r]; }

  GrPoint hnf(std::vector<std::vector<Laurent>> cols) const;
  GrPoint torus_point(const IVec& lam) const;
  LMat basis_matrix(const GrPoint& p) const;
  // x_r(a t^level) p.
  GrPoint act_root(const GrPoint& p, int r, int a, int level) const;
  // diag(d_0, ..., d_{n-1}) p with d_i in F_q^x.
  GrPoint act_diag(const GrPoint& p, const std::vector<int>& d) const;
  GrPoint act_matrix(const LMat& g, const GrPoint& p) const;
  // The point h_p g O^n where g O^n = p2 (right translation by a coset).
  GrPoint right_translate(const GrPoint& p, const GrPoint& p2) const;
  // Dominant coweight of the double coset K h_p^{-1} h_{p2} K.
  IVec relative_position(const GrPoint& p, const GrPoint& p2) const;
  // Coweight of the torus part in p = u t^kappa K with u upper unipotent.
  IVec iwasawa(const GrPoint& p) const { return coords(p.a); }
  // Sum over simple roots of the t^{-1} coefficient of u, as a field element.
  int whittaker_coordinate(const GrPoint& p) const;
  // Cocharacter scaling every simple root group by gamma.
  std::vector<int> gm_diag(int gamma) const;

  LMat mat_mul(const LMat& x, const LMat& y) const;
  LMat upper_inverse(const GrPoint& p) const;
  std::string point_str(const GrPoint& p) const;

 private:
  const RootDatum& rd_;
  LaurentRing R_;
  std::string kind_;
  int n_ = 2;
  bool homothety_ = false;
  std::vector<std::pair<int, int>> root_entry_;
};

}  // namespace wexp
