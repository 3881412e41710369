#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wexp/cycnum.hpp"
#include "wexp/fq_oracle.hpp"

namespace wexp {

// Orbit of the twisted pro-unipotent Iwahori through nu(t), with the trace
// of the Psi argument that carries nu(t) to each point.
struct BabyOrbit {
  IVec nu;
  std::vector<GrPoint> points;
  std::unordered_map<std::string, int> tau;  // point key -> trace mod p
  bool conflict = false;                     // Psi is nontrivial on the stabilizer
};

// Rows kappa, columns nu.
using CycMatrix = std::map<IVec, std::map<IVec, CycNum>>;

struct LemmaRow {
  IVec lambda;
  bool dominant = false;
  bool stabilizer_in_kernel = false;  // no fixing U root element with nontrivial Psi_U
  bool baby_exists = false;           // Psi is trivial on the twisted stabilizer
  bool orbit_in_u_cell = false;       // every orbit point lies in U(F) lambda(t) K
};

struct ChainReport {
  int q = 0;
  std::vector<IVec> window, range;
  std::map<IVec, CycMatrix> whittaker_action, baby_action, exp_action;
  CycMatrix av_matrix, gm_matrix;
  std::map<std::string, bool> checks;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Whittaker functions, baby Whittaker functions and the exponential module
// over F_q, compared through the averaging maps.
class WhittakerChain {
 public:
  WhittakerChain(const RootDatum& rd, int q, const IVec& bound, const std::vector<IVec>& mus, int extra_depth = 0);

  const FqOracle& oracle() const { return *o_; }
  CycNum zero() const { return CycNum(F().p(), F().q(), 0); }

  // W_lam at p: Psi_U(u) if p = u lam(t) K, else 0.
  CycNum whittaker_value(const IVec& lam, const GrPoint& p) const;
  const BabyOrbit& baby_orbit(const IVec& nu) const;
  // Value at p of the baby function through kappa(t), 0 if none exists.
  CycNum baby_value(const IVec& kappa, const GrPoint& p) const;

  // av(W_lam)(nu(t)) as an average over the twisted orbit of nu(t).
  CycNum average(const IVec& lam, const IVec& nu) const;
  // The same average summed over all elements of the twisted pro-unipotent
  // Iwahori of SL2 modulo a congruence subgroup acting trivially.
  CycNum literal_average(const IVec& lam, const IVec& nu) const;

  // (f * 1_mu)(nu(t)) for f = W_lam and f = the baby function of kappa.
  CycNum whittaker_hecke(const IVec& lam, const IVec& mu, const IVec& nu) const;
  CycNum baby_hecke(const IVec& kappa, const IVec& mu, const IVec& nu) const;
  // Class of the G_m-average of the baby function of kappa on the split
  // orbit of nu: value at the closed basepoint minus value at the open one.
  // Throws InvariantViolation if the average is not U^exp-invariant.
  mpz_class gm_class(const IVec& kappa, const IVec& nu) const;

  LemmaRow lemma(const IVec& lam) const;
  ChainReport run() const;

 private:
  const FiniteField& F() const { return o_->field(); }
  CycNum from_counts(const std::vector<mpz_class>& by_trace) const;
  const std::vector<GrPoint>& sph(const IVec& mu) const;

  std::unique_ptr<FqOracle> o_;
  IVec bound_;
  std::vector<IVec> mus_;
  std::vector<UnipotentGen> gens_;
  mutable std::map<IVec, BabyOrbit> baby_cache_;
};

}  // namespace wexp
