#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wexp/exp_module.hpp"
#include "wexp/lattice.hpp"

namespace wexp {

// x_{r1}(a1 t^{m1}) x_{r2}(a2 t^{m2}) ..., applied right to left.
struct UnipotentGen {
  struct Factor {
    int root;
    int level;
    int a;
  };
  std::vector<Factor> factors;
  int psi_trace = 0;  // trace of the Psi argument; the character value is zeta_p^psi_trace
};

enum class GroupSpec { IwahoriTwisted, UExpTwisted, URtimesGmTwisted, IwahoriUntwisted, UExpUntwisted };
bool is_twisted(GroupSpec spec);
std::string group_spec_name(GroupSpec spec);
GroupSpec parse_group_spec(const std::string& name);

struct Orbit {
  std::vector<GrPoint> points;
  ExpLabel label;        // over f0 of the extended datum
  IVec coweight;         // nu: the twisted Iwahori orbit through nu(t)
  bool closed = false;   // contains nu(t)
};

struct OrbitPartition {
  std::vector<Orbit> orbits;
  std::unordered_map<std::string, int> orbit_of;  // point key -> orbit index
};

using FqFunction = std::unordered_map<std::string, mpz_class>;

// Brute-force model of Gr over F_q for SL2, PGL2, GL2 (and SL3 for small
// windows). prec is the t-adic truncation depth.
class FqOracle {
 public:
  FqOracle(const RootDatum& rd, int q, int radius, int prec);
  // Oracle sized for coweights up to bound: radius and truncation depth.
  static std::unique_ptr<FqOracle> for_bound(const RootDatum& rd, int q, const IVec& bound, int extra_depth = 0);
  static int default_prec(const RootDatum& rd, const IVec& bound);
  static int default_radius(const RootDatum& rd, const IVec& bound);

  const RootDatum& rd() const { return rd_; }
  const FiniteField& field() const { return F_; }
  const LatticeModel& model() const { return model_; }
  const ExpModel& exp_model() const { return em_; }
  int q() const { return F_.q(); }
  int radius() const { return radius_; }
  int prec() const { return prec_; }

  std::vector<UnipotentGen> generators(GroupSpec spec) const;
  GrPoint apply(const UnipotentGen& g, const GrPoint& p) const;
  GrPoint apply_gm(int gamma, const GrPoint& p) const;
  // Orbit of start under the generated group, in BFS order; with_gm adds
  // the cocharacter scaling simple root groups.
  std::vector<GrPoint> orbit(const GrPoint& start, const std::vector<UnipotentGen>& gens, bool with_gm,
                             size_t limit = 2000000) const;

  // Dominant coweights nu <= bound.
  std::vector<IVec> dominant_below(const IVec& bound) const;
  // All points of Gr^{<= bound}, in canonical order.
  std::vector<GrPoint> enumerate_gr_window(const IVec& bound, size_t max_points = 1000000) const;
  // Points of the K-orbit of t^mu.
  const std::vector<GrPoint>& spherical_orbit(const IVec& mu) const;
  // Points of Gr^{<= bound} counted per Iwahori cell, keyed by lambda.
  std::map<IVec, size_t> iwahori_cell_counts(const IVec& bound) const;

  // Twisted orbits through nu(t) for the given coweights.
  OrbitPartition orbit_partition(const std::vector<IVec>& coweights, GroupSpec spec) const;
  // Refines the points into orbits of the spec group; fails if an orbit
  // leaves the point set.
  OrbitPartition partition_points(const std::vector<GrPoint>& pts, GroupSpec spec) const;

  GrPoint closed_basepoint(const IVec& nu) const;
  GrPoint open_basepoint(const IVec& nu) const;
  // Closed twisted exponential orbit of nu.
  const std::vector<GrPoint>& closed_orbit(const IVec& nu) const;

  // (f * 1_mu)(x) = sum_{g in K t^mu K / K} f(x g) on the window points.
  // Throws SupportEscapesWindow if the image of supp f leaves the window.
  FqFunction hecke_operator(const FqFunction& f, const IVec& mu, const std::vector<GrPoint>& window) const;
  // Number of points p' in the closed orbit of lam with inv(p, p') = mu.
  mpz_class gather_count(const IVec& lam, const IVec& mu, const GrPoint& p) const;
  // Structure constants c_{lam mu}^nu = g(closed_nu) - g(open_nu) of the
  // standard convolution with 1_mu. Right translation by K t^mu K is
  // convolution with 1_{mu*}, so the gather counts use inv = mu*.
  std::map<IVec, mpz_class> structure_constants(const IVec& lam, const IVec& mu) const;

 private:
  RootDatum rd_;
  FiniteField F_;
  int radius_, prec_;
  LatticeModel model_;
  ExpModel em_;
  mutable std::map<IVec, std::vector<GrPoint>> closed_cache_, sph_cache_;
};

// mu* = -w0 mu.
IVec dual_coweight(const RootDatum& rd, const IVec& mu);

// Interpolates oracle structure constants over q_list into polynomials with
// degree at most <2 rho, mu>.
std::map<IVec, QPoly> interpolate_structure_constants(const RootDatum& rd, const IVec& lam, const IVec& mu,
                                                      const std::vector<int>& q_list, int extra_depth = 0);

}  // namespace wexp
