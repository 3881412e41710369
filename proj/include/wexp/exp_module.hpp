#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wexp/affine_weyl.hpp"
#include "wexp/case_table.hpp"
#include "wexp/qpoly.hpp"
#include "wexp/spherical.hpp"
#include "wexp/strata.hpp"

namespace wexp {

// Classes sum_w c_w [b_w] of unshifted !-extensions of exponential orbits.
using BigExpVector = std::unordered_map<ExpLabel, QPoly, ExpLabelHash>;
// Coefficients on the classes m_nu of closed twisted exponential orbits on
// Gr, nu dominant for the original root datum.
using ExpModVector = std::map<IVec, QPoly>;

void exp_add_to(BigExpVector& acc, const ExpLabel& w, const QPoly& c);
void exp_add_to(ExpModVector& acc, const IVec& nu, const QPoly& c);
bool exp_equal(const BigExpVector& a, const BigExpVector& b);

// One step of a convolution word: a simple reflection or a length-zero element.
struct FiberStep {
  bool is_omega = false;
  int s = -1;
  AffineWeylElement tau;
  static FiberStep simple(int s) { return {false, s, {}}; }
  static FiberStep omega(const AffineWeylElement& t) { return {true, -1, t}; }
};
std::vector<FiberStep> steps_of(const AffineWeyl& W, const AffineWeylElement& x);

// The module of exponential orbit classes on the full affine flag variety,
// with the T_s action assembled from the case table. Caches are not
// synchronized; use one instance per thread.
class ExpModule {
 public:
  explicit ExpModule(const AffineWeyl& W, const CaseTable& table = CaseTable::builtin());
  const AffineWeyl& weyl() const { return W_; }
  const CaseTable& table() const { return table_; }

  void validate_label(const ExpLabel& w) const;
  std::string key_lemma_case(const ExpLabel& w, int s) const;
  // Class of the line {I' : wI -s- I'} intersected with the orbit of target.
  QPoly key_lemma_class(const ExpLabel& target, const ExpLabel& w, int s) const;
  // All nonzero classes of that line, as a vector over labels.
  BigExpVector line_decomposition(const ExpLabel& w, int s) const;
  // b_w * T_s = sum_t key_lemma_class(w, t, s) b_t.
  BigExpVector basis_action(const ExpLabel& w, int s) const;
  BigExpVector ts_action(const BigExpVector& v, int s) const;
  // b_w * T_tau = b_{w tau}.
  BigExpVector omega_action(const BigExpVector& v, const AffineWeylElement& tau) const;
  BigExpVector convolve(const BigExpVector& v, const std::vector<FiberStep>& word) const;
  QPoly fiber_class(const ExpLabel& v0, const std::vector<FiberStep>& word, const ExpLabel& target) const;

 private:
  struct Key {
    ExpLabel w;
    int s;
    friend bool operator==(const Key& a, const Key& b) { return a.s == b.s && a.w == b.w; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return ExpLabelHash{}(k.w) * 31 + static_cast<size_t>(k.s); }
  };
  using Row = std::vector<std::pair<ExpLabel, QPoly>>;
  const Row& line_row(const ExpLabel& w, int s) const;
  const Row& action_row(const ExpLabel& w, int s) const;

  const AffineWeyl& W_;
  const CaseTable& table_;
  mutable std::unordered_map<Key, Row, KeyHash> line_cache_, action_cache_;
};

struct RankOneReport {
  std::vector<IVec> window;
  // matrix[i][j]: coefficient of m_{window[i]} in m_0 * 1_{window[j]}.
  std::vector<std::vector<QPoly>> matrix;
  std::vector<int> diag_exponent;
  std::vector<int> diag_sign;
  QPoly determinant;
  // Solved A_mu (Laurent coefficients) with m_0 * A_mu = m_mu.
  std::vector<SphericalElement> solutions;
  nlohmann::json to_json() const;
};

// The generic exponential module on Gr. Computations run in the datum G'
// whose cocharacter lattice is X_*(T) + Z rho_hat, where the twisted orbit
// labelled nu becomes the untwisted orbit of t_{nu + rho_hat}.
class ExpModel {
 public:
  explicit ExpModel(const RootDatum& G, const CaseTable& table = CaseTable::builtin());
  ExpModel(const ExpModel&) = delete;
  ExpModel& operator=(const ExpModel&) = delete;
  const RootDatum& group() const { return G_; }
  const RootDatum& extended() const { return Wp_.rd(); }
  const AffineWeyl& ext_weyl() const { return Wp_; }
  const ExpModule& big() const { return E_; }

  // G' coordinates of x, given in doubled G coordinates (2x).
  IVec ext_coords_doubled(const IVec& x2) const;
  IVec ext_coords(const IVec& x) const;
  IVec shifted(const IVec& nu) const;
  std::optional<IVec> unshift(const IVec& lam_ext) const;
  ExpLabel closed_label(const IVec& nu) const;
  ExpLabel open_label(const IVec& nu) const;

  // Pullback to the full flags of the closed orbit indicator of nu.
  BigExpVector lift_closed(const IVec& nu) const;
  // Left-W0-minimal elements of W0 t_mu W0 in W'.
  std::vector<AffineWeylElement> spherical_coset_reps(const IVec& mu) const;
  // F * sum_{x} T_x over spherical_coset_reps(mu).
  BigExpVector lifted_action(const BigExpVector& F, const IVec& mu) const;
  // Pushforward to f0 labels with orbit class ratios.
  BigExpVector push_to_f0(const BigExpVector& v) const;
  // Push to f0 (if v is over a0) and impose the quotient relations.
  ExpModVector quotient_to_exp(const BigExpVector& v, const Facet& f) const;

  ExpModVector basis_action(const IVec& lam, const IVec& mu) const;
  ExpModVector spherical_action(const ExpModVector& v, const IVec& mu) const;
  // The lifted classes are constant along the fibers of Fl -> Gr and the
  // finite Hecke sum acts on them by P(q).
  bool k_invariance_check(const IVec& nu) const;

  // Class of the fiber over t^{lam + rho_hat} of the convolution of the
  // closed orbit of 0 with Gr^mu.
  QPoly closed_fiber_class(const IVec& lam, const IVec& mu) const;
  bool dimension_bound_check(const IVec& lam, const IVec& mu) const;
  RankOneReport verify_rank_one(const std::vector<IVec>& window) const;

  nlohmann::json to_json(const ExpModVector& v) const;

 private:
  RootDatum G_;
  AffineWeyl Wp_;
  ExpModule E_;
  IMat basis2_;  // columns: basis of X_*(T') in doubled G coordinates
  mutable std::map<std::pair<IVec, IVec>, ExpModVector> action_cache_;
};

}  // namespace wexp
