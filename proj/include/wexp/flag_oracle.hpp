#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wexp/exp_module.hpp"
#include "wexp/lattice.hpp"

namespace wexp {

// A point g I of the affine flag variety of SL_n: the lattice chain
// g L_0 > g L_1 > ... > g L_{n-1} with L_k = O^{n-k} + (tO)^k, and the
// representative g.
struct FlagPoint {
  std::vector<GrPoint> chain;
  LMat g;
  std::string key() const;
};

// One exponential orbit on the Iwahori cell of w.
struct FlagOrbit {
  ExpLabel label;
  std::vector<FlagPoint> points;
};

// Line classes of one (w, s): point counts per target orbit.
struct LineCount {
  ExpLabel w;
  int s = 0;
  std::map<std::string, long> counts;  // target label string -> number of points
  std::map<std::string, ExpLabel> targets;
};

// Brute-force affine flag variety of SL2 or SL3 over F_q, short elements only.
class FlagOracle {
 public:
  FlagOracle(const RootDatum& rd, int q, int max_length);
  static bool supports(const std::string& preset) { return preset == "SL2" || preset == "SL3"; }

  const AffineWeyl& weyl() const { return W_; }
  int q() const { return F_.q(); }

  FlagPoint act(const LMat& u, const FlagPoint& x) const;
  FlagPoint base() const;
  // Affine root group element x_beta(c) and the lift x_b(1) x_{-b}(-1) x_b(1).
  LMat root_element(const AffineRoot& beta, int c) const;
  LMat simple_lift(int s) const;
  FlagPoint schubert_point(const AffineWeylElement& w) const;

  // Exponential orbits on the Iwahori cell of w: the closed one through the
  // Schubert point first, then the open one if the cell splits.
  const std::vector<FlagOrbit>& cell_orbits(const AffineWeylElement& w) const;
  size_t cell_size(const AffineWeylElement& w) const;
  // Counts of points g x_s(c) s I, c in F_q, per target orbit, for x = g I.
  LineCount line_counts(const ExpLabel& w, int s, const FlagPoint& x) const;
  // line_counts over every point of the orbit of w; throws InvariantViolation
  // if the counts depend on the point.
  LineCount line_counts(const ExpLabel& w, int s) const;

 private:
  std::vector<FlagPoint> bfs(const FlagPoint& start, const std::vector<LMat>& gens, bool with_gm,
                             const std::unordered_map<std::string, int>* within = nullptr) const;

  RootDatum rd_;
  AffineWeyl W_;
  FiniteField F_;
  int max_length_;
  LatticeModel model_;
  std::vector<GrPoint> std_chain_;
  std::vector<LMat> iwahori_gens_, exp_gens_;
  LMat gm_;
  mutable std::map<AffineWeylElement, std::vector<FlagOrbit>> cells_;
  mutable std::map<AffineWeylElement, std::unordered_map<std::string, int>> cell_index_;
};

// Interpolated line classes for every exponential label with l(w) <= bound
// and every simple s, compared against the key lemma classes of the module.
struct FlagCheckReport {
  long cases = 0;
  long mismatches = 0;
  std::map<std::string, long> case_counts;  // key lemma case -> number of (w, s)
  std::vector<std::string> failures;
  nlohmann::json to_json() const;
};
FlagCheckReport check_line_classes(const RootDatum& rd, int length_bound, const std::vector<int>& q_list);

}  // namespace wexp
