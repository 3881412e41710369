#include <random>

#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/hecke.hpp"

using namespace wexp;

namespace {
const QPoly q = QPoly::from_terms({{1, 1}});

// Reduced word stripping the largest right descent first, as opposed to the
// smallest one used by AffineWeyl::reduced_word.
ReducedWord reduced_word_largest(const AffineWeyl& W, AffineWeylElement x) {
  std::vector<int> stripped;
  for (;;) {
    int d = -1;
    for (int j = W.num_simple() - 1; j >= 0; --j)
      if (W.right_descent(x, j)) {
        d = j;
        break;
      }
    if (d < 0) break;
    x = W.mul_simple_right(x, d);
    stripped.push_back(d);
  }
  return {x, std::vector<int>(stripped.rbegin(), stripped.rend())};
}

AffineWeylElement random_element(const AffineWeyl& W, std::mt19937& rng, int len) {
  const auto om = W.omega_elements(1);
  AffineWeylElement x = om[rng() % om.size()];
  for (int i = 0; i < len; ++i) x = W.mul_simple_right(x, static_cast<int>(rng() % W.num_simple()));
  return x;
}
}  // namespace

TEST_CASE("quadratic relation and ascents") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const HeckeAlgebra H(W);
  const auto s = W.simple_reflection(1), s0 = W.simple_reflection(0);
  HeckeElement expect;
  hecke_add_to(expect, s, q - QPoly(1));
  hecke_add_to(expect, W.identity(), q);
  CHECK(hecke_equal(H.mul(H.basis(s), H.basis(s)), expect));
  CHECK(hecke_equal(H.mul(H.basis(s), H.basis(W.identity())), H.basis(s)));
  const auto sts = W.mul(W.mul(s0, s), s0);
  CHECK(W.length(sts) == 3);
  CHECK(hecke_equal(H.mul(H.mul(H.basis(s0), H.basis(s)), H.basis(s0)), H.basis(sts)));
  CHECK(hecke_equal(H.t_simple_mul(1, H.basis(s), Side::Left), expect));
  CHECK(hecke_equal(H.t_simple_mul(1, H.basis(s), Side::Right), expect));
}

TEST_CASE("specialization") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const HeckeAlgebra H(W);
  const auto s = W.simple_reflection(1);
  const HeckeElement ss = H.mul(H.basis(s), H.basis(s));
  CHECK(H.specialize(ss, 3) == IntHeckeElement{{W.identity(), 3}, {s, 2}});
  CHECK(H.specialize(ss, 1) == IntHeckeElement{{W.identity(), 1}});
  CHECK(H.specialize(ss, 0) == IntHeckeElement{{s, -1}});
}

TEST_CASE("unit, word independence and the group algebra at q = 1") {
  std::mt19937 rng(3);
  for (const auto& name : {"Sp4", "SL3", "PGL2", "G2"}) {
    const AffineWeyl W(RootDatum::preset(name));
    const HeckeAlgebra H(W);
    for (int k = 0; k < 50; ++k) {
      const auto x = random_element(W, rng, static_cast<int>(rng() % 7));
      const auto y = random_element(W, rng, static_cast<int>(rng() % 7));
      const HeckeElement tx = H.basis(x);
      const ReducedWord r1 = W.reduced_word(y), r2 = reduced_word_largest(W, y);
      CHECK(r1.omega == r2.omega);
      CHECK(r1.word.size() == r2.word.size());
      const HeckeElement p = H.mul_by_word(tx, r1.omega, r1.word);
      CHECK(hecke_equal(p, H.mul_by_word(tx, r2.omega, r2.word)));
      CHECK(hecke_equal(p, H.mul(tx, H.basis(y))));
      CHECK(hecke_equal(H.mul(H.basis(W.identity()), tx), tx));
      CHECK(H.specialize(p, 1) == IntHeckeElement{{W.mul(x, y), 1}});
    }
  }
}

TEST_CASE("support size by length") {
  // Products of length-additive pairs are single basis elements.
  const AffineWeyl W(RootDatum::preset("SL3"));
  const HeckeAlgebra H(W);
  for (const auto& y : W.enumerate_elements(3, 0))
    for (int s = 0; s < W.num_simple(); ++s) {
      const auto ys = W.mul_simple_right(y, s);
      const HeckeElement p = H.t_simple_mul(s, H.basis(y), Side::Right);
      if (W.length(ys) > W.length(y))
        CHECK(hecke_equal(p, H.basis(ys)));
      else
        CHECK(p.size() == 2);
    }
}

TEST_CASE("json round trip") {
  const AffineWeyl W(RootDatum::preset("Sp4"));
  const HeckeAlgebra H(W);
  std::mt19937 rng(9);
  HeckeElement a;
  for (int k = 0; k < 10; ++k) hecke_add_to(a, random_element(W, rng, 5), q * q - QPoly(k));
  CHECK(hecke_equal(H.from_json(H.to_json(a)), a));
  const auto sup = sorted_support(W, a);
  for (size_t i = 1; i < sup.size(); ++i) CHECK(W.length(sup[i - 1]) <= W.length(sup[i]));
}
