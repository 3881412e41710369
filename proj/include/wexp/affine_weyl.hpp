#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wexp/root_datum.hpp"

namespace wexp {

constexpr int kMaxLatticeRank = 8;

// w = t_lambda v, with v an index into the finite Weyl group.
struct AffineWeylElement {
  std::array<int, kMaxLatticeRank> lam{};
  int n = 0;
  int v = 0;

  IVec lambda() const { return IVec(lam.begin(), lam.begin() + n); }
  static AffineWeylElement make(const IVec& lambda, int v);
  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.v == b.v && a.n == b.n && a.lam == b.lam;
  }
  friend bool operator!=(const AffineWeylElement& a, const AffineWeylElement& b) { return !(a == b); }
  friend bool operator<(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.lam != b.lam) return a.lam < b.lam;
    return a.v < b.v;
  }
};

struct AffineWeylElementHash {
  size_t operator()(const AffineWeylElement& w) const {
    uint64_t h = static_cast<uint64_t>(w.v) * 0x9E3779B97F4A7C15ULL;
    for (int i = 0; i < w.n; ++i) h = (h ^ static_cast<uint64_t>(static_cast<uint32_t>(w.lam[i]))) * 0x100000001B3ULL + 0x7F4A7C15;
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

// alpha + level, alpha an index into RootDatum::roots().
struct AffineRoot {
  int root = 0;
  int level = 0;
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) { return a.root == b.root && a.level == b.level; }
};

// Standard facet in the closure of the base alcove, given by the simple
// reflections fixing it. a0: none. f0: all finite simple reflections.
struct Facet {
  std::vector<int> reflections;
  static Facet a0() { return {}; }
  static Facet f0(int rank);
  bool contains(int j) const;
  friend bool operator==(const Facet& a, const Facet& b) { return a.reflections == b.reflections; }
};

enum class Tag : uint8_t { Coset = 0, Zero = 1 };

struct ExpLabel {
  Tag tag = Tag::Coset;
  AffineWeylElement el;
  friend bool operator==(const ExpLabel& a, const ExpLabel& b) { return a.tag == b.tag && a.el == b.el; }
  friend bool operator!=(const ExpLabel& a, const ExpLabel& b) { return !(a == b); }
};

struct ExpLabelHash {
  size_t operator()(const ExpLabel& l) const {
    return AffineWeylElementHash{}(l.el) * 2 + static_cast<size_t>(l.tag);
  }
};

struct ReducedWord {
  AffineWeylElement omega;  // length-zero part
  std::vector<int> word;    // simple reflection indices
};

// The extended affine Weyl group of a root datum. Simple reflection indices:
// 0 is the affine reflection of the first Dynkin component, 1..r are the
// finite simple reflections, r+1.. are affine reflections of further
// components. The alcove a0 is {0 < <alpha, x> < 1 : alpha > 0}.
class AffineWeyl {
 public:
  explicit AffineWeyl(RootDatum rd);

  const RootDatum& rd() const { return rd_; }
  int num_simple() const { return rd_.rank() + rd_.num_components(); }
  bool is_finite_simple(int j) const { return j >= 1 && j <= rd_.rank(); }
  std::vector<int> finite_simple_indices() const;
  std::vector<int> affine_simple_indices() const;
  AffineRoot simple_affine_root(int j) const;
  // Coxeter order m_{jk} of s_j s_k (j != k).
  int coxeter_m(int j, int k) const;

  AffineWeylElement identity() const;
  AffineWeylElement translation(const IVec& lam) const;
  AffineWeylElement finite(int v) const;
  AffineWeylElement simple_reflection(int j) const { return simple_[j]; }
  AffineWeylElement mul(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& a) const;
  AffineWeylElement mul_simple_right(const AffineWeylElement& w, int j) const;
  AffineWeylElement mul_simple_left(int j, const AffineWeylElement& w) const;

  AffineRoot act(const AffineWeylElement& w, const AffineRoot& ar) const;
  bool is_positive(const AffineRoot& ar) const;
  // Sign of the affine function alpha + n at the rational barycenter of a0;
  // independent check of is_positive.
  int alcove_sign(const AffineRoot& ar) const;
  // <alpha, x> at the barycenter of a0 as an exact rational.
  mpq_class barycenter_pairing(int root) const;

  int length(const AffineWeylElement& w) const;
  bool right_descent(const AffineWeylElement& w, int j) const;
  bool left_descent(const AffineWeylElement& w, int j) const;
  ReducedWord reduced_word(const AffineWeylElement& w) const;
  AffineWeylElement from_word(const AffineWeylElement& omega, const std::vector<int>& word) const;
  AffineWeylElement omega_part(const AffineWeylElement& w) const { return reduced_word(w).omega; }
  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const;

  // Minimal representative of w W_f.
  AffineWeylElement min_coset_rep(const AffineWeylElement& w, const Facet& f) const;
  bool is_right_minimal(const AffineWeylElement& w, const Facet& f) const;
  // Maximal in W_0 w, via w^{-1} alpha < 0 for all finite simple alpha.
  bool is_left_max(const AffineWeylElement& w) const;
  // Same property by comparing lengths over the whole coset W_0 w.
  bool is_left_max_bruteforce(const AffineWeylElement& w) const;
  bool zero_W_membership(const AffineWeylElement& w, const Facet& f) const;

  ExpLabel orbit_projection(const ExpLabel& w, const Facet& f) const;
  ExpLabel canonical_lift(const ExpLabel& w, const Facet& f) const;

  // Length-zero elements tau = omega_part(t_lambda) for lambda in the box
  // [-radius, radius]^n, deduplicated, identity first.
  std::vector<AffineWeylElement> omega_elements(int radius = 1) const;
  // All elements tau x with tau from omega_elements(radius), l(x) <= bound.
  std::vector<AffineWeylElement> enumerate_elements(int bound, int omega_radius = 1) const;
  std::vector<ExpLabel> enumerate_exp_labels(const Facet& f, int length_bound, int omega_radius = 1) const;

  void validate_facet(const Facet& f) const;
  // Serialization of elements: {"lambda": [...], "v_word": [1-based]}.
  nlohmann::json element_json(const AffineWeylElement& w) const;
  AffineWeylElement element_from_json(const nlohmann::json& j) const;
  nlohmann::json label_json(const ExpLabel& l) const;
  ExpLabel label_from_json(const nlohmann::json& j) const;
  std::string element_str(const AffineWeylElement& w) const;
  std::string label_str(const ExpLabel& l) const;

 private:
  RootDatum rd_;
  std::vector<AffineWeylElement> simple_;
  std::vector<AffineRoot> simple_roots_aff_;
  std::vector<int> highest_reflection_;  // W_0 index of s_theta per component
};

}  // namespace wexp
