#pragma once

#include <gmpxx.h>

#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace wexp {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;

int dot(const IVec& a, const IVec& b);
IVec mat_vec(const IMat& m, const IVec& v);
IMat mat_mul(const IMat& a, const IMat& b);
IMat identity_mat(int n);

struct FiniteWeylElement {
  IVec word;       // reduced word in 0-based simple reflection indices
  IMat matrix;     // action on X_*(T)
  IMat dual;       // action on X^*(T)
  int length = 0;
};

// A root of the finite root system, stored with its coroot.
struct Root {
  IVec vec;       // X^*(T) coordinates
  IVec coroot;    // X_*(T) coordinates
  IVec simple;    // coefficients in the simple roots
  int height = 0;
  bool positive = true;
  int component = 0;
};

class RootDatum {
 public:
  // Presets: SL2, PGL2, GL2, SL3, PGL3, Sp4, G2.
  static RootDatum preset(const std::string& name);
  static RootDatum from_json(const nlohmann::json& j);
  // Resolves a preset name or a path to a JSON description.
  static RootDatum load(const std::string& spec);
  RootDatum(std::string name, IMat cartan, IMat simple_roots, IMat simple_coroots);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(simple_roots_.size()); }
  int lattice_rank() const { return n_; }
  const IMat& cartan() const { return cartan_; }
  const IMat& simple_roots() const { return simple_roots_; }
  const IMat& simple_coroots() const { return simple_coroots_; }
  nlohmann::json to_json() const;

  // All roots; indices [0, |Phi+|) are the positive ones.
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return num_pos_; }
  int root_index(const IVec& vec) const;
  // Index of the negative of root r.
  int neg_root(int r) const { return neg_[r]; }
  int simple_root_index(int i) const { return simple_idx_[i]; }
  bool is_simple_root(int r) const { return simple_of_[r] >= 0; }
  std::vector<IVec> positive_roots() const;

  IVec two_rho() const;           // in X^*(T)
  // 2 * rho_hat, the sum of positive coroots, in X_*(T). rho_hat itself may be
  // half-integral; pairing <alpha, rho_hat> = ht(alpha) always.
  const IVec& two_rho_hat() const { return two_rho_hat_; }
  bool rho_hat_integral() const;
  IVec rho_hat() const;           // requires rho_hat_integral()

  // Irreducible components of the Dynkin diagram and their highest roots.
  int num_components() const { return static_cast<int>(components_.size()); }
  const std::vector<IVec>& components() const { return components_; }
  int highest_root(int comp) const { return highest_[comp]; }

  // Finite Weyl group.
  int weyl_order() const { return static_cast<int>(weyl_.size()); }
  const std::vector<FiniteWeylElement>& finite_weyl_elements() const { return weyl_; }
  const FiniteWeylElement& weyl(int v) const { return weyl_[v]; }
  int weyl_mul(int a, int b) const { return mul_[a * weyl_order() + b]; }
  int weyl_inv(int a) const { return inv_[a]; }
  int weyl_simple(int i) const { return simple_w_[i]; }
  int longest() const { return longest_; }
  int weyl_index(const IMat& matrix) const;
  // v applied to root r.
  int weyl_act_root(int v, int r) const { return act_root_[v * static_cast<int>(roots_.size()) + r]; }
  IVec weyl_act_coweight(int v, const IVec& x) const { return mat_vec(weyl_[v].matrix, x); }

  bool is_dominant(const IVec& lam) const;
  bool is_strictly_dominant(const IVec& lam) const;
  // Unique dominant element of the W_0-orbit.
  IVec dominant_rep(const IVec& lam) const;
  // mu - lam is a nonnegative integer combination of simple coroots.
  bool dominance_leq(const IVec& lam, const IVec& mu) const;
  // Coefficients of x in the simple coroots when x lies in their rational
  // span; returns false otherwise.
  bool coroot_coords(const IVec& x, std::vector<mpq_class>* out) const;
  // <2 rho, lam>.
  int pair_two_rho(const IVec& lam) const;

 private:
  void validate() const;
  void build();

  std::string name_;
  int n_ = 0;
  IMat cartan_, simple_roots_, simple_coroots_;
  std::vector<Root> roots_;
  int num_pos_ = 0;
  std::vector<int> neg_, simple_idx_, simple_of_;
  IVec two_rho_hat_;
  std::vector<IVec> components_;
  std::vector<int> highest_;
  std::vector<FiniteWeylElement> weyl_;
  std::vector<int> mul_, inv_, simple_w_, act_root_;
  int longest_ = 0;
  std::unordered_map<std::string, int> weyl_lookup_;
  std::unordered_map<std::string, int> root_lookup_;
};

std::string ivec_key(const IVec& v);
std::string imat_key(const IMat& m);
std::string ivec_str(const IVec& v);

}  // namespace wexp
