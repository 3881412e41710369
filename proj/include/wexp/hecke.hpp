#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "wexp/affine_weyl.hpp"
#include "wexp/qpoly.hpp"

namespace wexp {

using HeckeElement = std::unordered_map<AffineWeylElement, QPoly, AffineWeylElementHash>;
using IntHeckeElement = std::map<AffineWeylElement, mpz_class>;

enum class Side { Left, Right };

void hecke_add_to(HeckeElement& acc, const AffineWeylElement& w, const QPoly& c);
void hecke_add_to(HeckeElement& acc, const HeckeElement& x, const QPoly& scale = QPoly(1));
bool hecke_equal(const HeckeElement& a, const HeckeElement& b);

// Generic Iwahori-Hecke algebra of the extended affine Weyl group over Z[q],
// normalized by T_s^2 = (q - 1) T_s + q.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const AffineWeyl& W) : W_(W) {}
  const AffineWeyl& weyl() const { return W_; }

  HeckeElement basis(const AffineWeylElement& w) const { return {{w, QPoly(1)}}; }
  HeckeElement t_simple_mul(int s, const HeckeElement& x, Side side) const;
  // x T_tau (right) or T_tau x (left) for tau of length zero.
  HeckeElement omega_mul(const AffineWeylElement& tau, const HeckeElement& x, Side side) const;
  // a T_y built from an explicit reduced decomposition tau s_1 ... s_r of y.
  HeckeElement mul_by_word(const HeckeElement& a, const AffineWeylElement& tau, const std::vector<int>& word) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;

  IntHeckeElement specialize(const HeckeElement& a, long q) const;

  nlohmann::json to_json(const HeckeElement& a) const;
  HeckeElement from_json(const nlohmann::json& j) const;

 private:
  const AffineWeyl& W_;
};

// Deterministic ordering of the support (length, reduced word, element).
std::vector<AffineWeylElement> sorted_support(const AffineWeyl& W, const HeckeElement& a);

}  // namespace wexp
