#include <random>
#include <set>

#include "doctest.h"
#include "wexp/affine_weyl.hpp"
#include "wexp/errors.hpp"
#include "wexp/serialize.hpp"

using namespace wexp;

namespace {

// Inversion count using the sign of the affine function at the alcove
// barycenter instead of the positivity predicate.
int length_by_alcove(const AffineWeyl& W, const AffineWeylElement& w) {
  const RootDatum& rd = W.rd();
  const AffineWeylElement wi = W.inverse(w);
  int bound = 1;
  for (const Root& a : rd.roots()) bound = std::max(bound, std::abs(dot(a.vec, w.lambda())) + 2);
  int count = 0;
  for (int r = 0; r < static_cast<int>(rd.roots().size()); ++r)
    for (int n = -bound; n <= bound; ++n) {
      if (W.alcove_sign({r, n}) <= 0) continue;
      if (W.alcove_sign(W.act(wi, {r, n})) < 0) ++count;
    }
  return count;
}

AffineWeylElement random_element(const AffineWeyl& W, std::mt19937& rng, int len) {
  const auto om = W.omega_elements(1);
  AffineWeylElement x = om[rng() % om.size()];
  for (int i = 0; i < len; ++i) x = W.mul_simple_right(x, static_cast<int>(rng() % W.num_simple()));
  return x;
}

const std::vector<std::string> kPresets = {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "G2"};

}  // namespace

TEST_CASE("affine root action examples") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const AffineRoot a = W.act(W.translation({1}), {0, 0});
  CHECK(a.root == 0);
  CHECK(a.level == 2);
  CHECK(W.act(W.identity(), {0, 5}) == AffineRoot{0, 5});

  const RootDatum sl3 = RootDatum::preset("SL3");
  const AffineWeyl W3(sl3);
  const AffineWeylElement w = W3.mul(W3.translation({1, 0}), W3.simple_reflection(1));
  const AffineRoot b = W3.act(w, {sl3.root_index({-1, 2}), 0});
  CHECK(sl3.roots()[b.root].vec == IVec{1, 1});
  CHECK(b.level == 1);
}

TEST_CASE("length examples") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  CHECK(W.length(W.translation({1})) == 2);
  CHECK(W.length(W.identity()) == 0);
  for (const auto& name : kPresets) {
    const AffineWeyl Wn(RootDatum::preset(name));
    CHECK(Wn.length(Wn.finite(Wn.rd().longest())) == Wn.rd().num_positive());
  }
  const AffineWeyl P(RootDatum::preset("PGL2"));
  CHECK(P.length(P.translation({1})) == 1);
  CHECK(P.length(P.translation({2})) == 2);
  CHECK(P.omega_elements(1).size() == 2);
  CHECK(P.length(P.omega_elements(1)[1]) == 0);
}

TEST_CASE("length agrees with the alcove inversion count") {
  std::mt19937 rng(7);
  for (const auto& name : kPresets) {
    const AffineWeyl W(RootDatum::preset(name));
    for (int k = 0; k < 120; ++k) {
      const AffineWeylElement w = random_element(W, rng, static_cast<int>(rng() % 9));
      CAPTURE(W.element_str(w));
      CHECK(W.length(w) == length_by_alcove(W, w));
    }
  }
}

TEST_CASE("group axioms, action and length parity") {
  std::mt19937 rng(11);
  for (const auto& name : kPresets) {
    const AffineWeyl W(RootDatum::preset(name));
    const auto om = W.omega_elements(1);
    for (int k = 0; k < 60; ++k) {
      const auto x = random_element(W, rng, 5), y = random_element(W, rng, 5), z = random_element(W, rng, 3);
      CHECK(W.mul(W.mul(x, y), z) == W.mul(x, W.mul(y, z)));
      CHECK(W.mul(x, W.inverse(x)) == W.identity());
      const AffineRoot r{static_cast<int>(rng() % W.rd().roots().size()), static_cast<int>(rng() % 5) - 2};
      CHECK(W.act(W.mul(x, y), r) == W.act(x, W.act(y, r)));
      const int lx = W.length(x);
      for (int s = 0; s < W.num_simple(); ++s) {
        const int d = W.length(W.mul_simple_right(x, s)) - lx;
        CHECK((d == 1 || d == -1));
        CHECK((d == -1) == W.right_descent(x, s));
      }
      for (const auto& tau : om) {
        CHECK(W.length(W.mul(tau, x)) == lx);
        CHECK(W.length(W.mul(x, tau)) == lx);
      }
      const ReducedWord rw = W.reduced_word(x);
      CHECK(static_cast<int>(rw.word.size()) == lx);
      CHECK(W.from_word(rw.omega, rw.word) == x);
      CHECK(W.length(rw.omega) == 0);
    }
  }
}

TEST_CASE("length of dominant translations") {
  for (const auto& name : kPresets) {
    const RootDatum rd = RootDatum::preset(name);
    const AffineWeyl W(rd);
    const int n = rd.lattice_rank();
    IVec lam(n, -3);
    for (;;) {
      if (rd.is_dominant(lam)) {
        CAPTURE(name);
        CAPTURE(ivec_str(lam));
        CHECK(W.length(W.translation(lam)) == rd.pair_two_rho(lam));
      }
      int i = 0;
      while (i < n && lam[i] == 3) lam[i++] = -3;
      if (i == n) break;
      ++lam[i];
    }
  }
}

TEST_CASE("reduced words") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const ReducedWord rw = W.reduced_word(W.translation({1}));
  CHECK(rw.omega == W.identity());
  CHECK(rw.word.size() == 2);
  CHECK(W.from_word(W.identity(), rw.word) == W.translation({1}));
  CHECK(W.reduced_word(W.identity()).word.empty());
  const AffineWeyl P(RootDatum::preset("PGL2"));
  const ReducedWord rp = P.reduced_word(P.translation({1}));
  CHECK(rp.word.size() == 1);
  CHECK(rp.omega != P.identity());
}

TEST_CASE("Bruhat order") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const auto t = W.translation({1});
  CHECK(W.bruhat_leq(W.simple_reflection(1), t));
  CHECK(W.bruhat_leq(W.identity(), t));
  CHECK_FALSE(W.bruhat_leq(t, W.simple_reflection(1)));
  const AffineWeyl P(RootDatum::preset("PGL2"));
  CHECK_FALSE(P.bruhat_leq(P.identity(), P.translation({1})));

  // Partial order refining length, and subwords of a reduced word lie below.
  const AffineWeyl W3(RootDatum::preset("SL3"));
  const auto els = W3.enumerate_elements(3, 0);
  for (const auto& x : els)
    for (const auto& y : els) {
      const bool le = W3.bruhat_leq(x, y);
      if (le) CHECK(W3.length(x) <= W3.length(y));
      if (le && W3.bruhat_leq(y, x)) CHECK(x == y);
    }
  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto y = random_element(W3, rng, 6);
    const ReducedWord rw = W3.reduced_word(y);
    std::vector<int> sub;
    for (int s : rw.word)
      if (rng() % 2) sub.push_back(s);
    CHECK(W3.bruhat_leq(W3.from_word(rw.omega, sub), y));
    for (size_t i = 0; i < rw.word.size(); ++i) {
      std::vector<int> drop = rw.word;
      drop.erase(drop.begin() + static_cast<long>(i));
      const auto x = W3.from_word(rw.omega, drop);
      if (W3.length(x) + 1 == W3.length(y)) CHECK(W3.bruhat_leq(x, y));
    }
  }
}

TEST_CASE("left maximality criteria agree") {
  for (const auto& name : {"SL2", "SL3", "Sp4"}) {
    const AffineWeyl W(RootDatum::preset(name));
    for (const auto& w : W.enumerate_elements(6, 1)) CHECK(W.is_left_max(w) == W.is_left_max_bruteforce(w));
  }
}

TEST_CASE("coset representatives and zero-W membership") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const Facet f0 = Facet::f0(1);
  for (int k = 0; k <= 3; ++k) {
    const auto t = W.translation({k});
    CHECK(W.min_coset_rep(W.mul(t, W.simple_reflection(1)), f0) == t);
    CHECK(W.zero_W_membership(t, f0) == (k > 0));
  }
  CHECK(W.is_left_max(W.finite(W.rd().longest())));
  CHECK(W.zero_W_membership(W.finite(W.rd().longest()), Facet::a0()));
  CHECK_THROWS_AS(W.zero_W_membership(W.simple_reflection(1), f0), Error);

  for (const auto& name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    const RootDatum rd = RootDatum::preset(name);
    const AffineWeyl Wn(rd);
    const Facet f = Facet::f0(rd.rank());
    for (const auto& w : Wn.enumerate_elements(6, 1)) {
      if (!Wn.is_right_minimal(w, f)) continue;
      const bool closed = w.v == 0 && rd.is_strictly_dominant(w.lambda());
      CHECK(Wn.zero_W_membership(w, f) == closed);
    }
  }
}

TEST_CASE("projection and lift") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const Facet f0 = Facet::f0(1);
  const ExpLabel e{Tag::Coset, W.identity()};
  CHECK(W.orbit_projection(e, f0) == e);
  CHECK(W.orbit_projection({Tag::Zero, W.finite(W.rd().longest())}, f0) == e);
  const ExpLabel zt{Tag::Zero, W.translation({1})};
  CHECK(W.orbit_projection(zt, f0) == zt);
  CHECK(W.canonical_lift(zt, f0) == zt);
  const ExpLabel cs{Tag::Coset, W.simple_reflection(1)};
  CHECK(W.canonical_lift(cs, Facet::a0()) == cs);

  for (const auto& name : {"SL2", "SL3", "Sp4"}) {
    const RootDatum rd = RootDatum::preset(name);
    const AffineWeyl Wn(rd);
    for (const Facet& f : {Facet::f0(rd.rank()), Facet::a0(), Facet{{0}}})
      for (const auto& l : Wn.enumerate_exp_labels(f, 6, 0)) CHECK(Wn.orbit_projection(Wn.canonical_lift(l, f), f) == l);
  }
}

TEST_CASE("label enumeration") {
  const AffineWeyl W(RootDatum::preset("SL2"));
  const Facet f0 = Facet::f0(1);
  const auto labels = W.enumerate_exp_labels(f0, 2, 0);
  std::set<std::string> got;
  for (const auto& l : labels) got.insert(W.label_str(l));
  CHECK(got == std::set<std::string>{"coset:t(0)", "coset:t(-1)s1", "coset:t(1)", "zero:t(1)"});
  for (const auto& l : W.enumerate_exp_labels(f0, 0, 1)) CHECK(l.tag == Tag::Coset);

  const AffineWeyl W3(RootDatum::preset("SL3"));
  int zeros = 0, expected = 0;
  for (const auto& l : W3.enumerate_exp_labels(Facet::a0(), 3, 0)) zeros += l.tag == Tag::Zero;
  for (const auto& w : W3.enumerate_elements(3, 0)) expected += W3.is_left_max_bruteforce(w);
  CHECK(zeros == expected);
  CHECK(zeros > 0);
  CHECK_THROWS_AS(W3.enumerate_exp_labels(Facet{{0, 1, 2}}, 2, 0), ConfigError);
}

TEST_CASE("element and label serialization") {
  for (const auto& name : kPresets) {
    const AffineWeyl W(RootDatum::preset(name));
    for (const auto& l : W.enumerate_exp_labels(Facet::a0(), 3, 1)) {
      CHECK(W.label_from_json(W.label_json(l)) == l);
      CHECK(parse_label(W, W.label_str(l)) == l);
      CHECK(parse_element(W, W.element_str(l.el)) == l.el);
    }
  }
  const AffineWeyl W(RootDatum::preset("SL2"));
  CHECK(parse_element(W, "e") == W.identity());
  CHECK(parse_element(W, "w0") == W.simple_reflection(1));
  CHECK(parse_element(W, "s1s0") == W.mul(W.simple_reflection(1), W.simple_reflection(0)));
  CHECK(parse_label(W, "z") == ExpLabel{Tag::Zero, W.simple_reflection(1)});
  CHECK(parse_word(W, "s") == std::vector<int>{1});
  CHECK(parse_word(W, "1,0") == std::vector<int>{1, 0});
  CHECK_THROWS_AS(parse_word(W, "s5"), ConfigError);
  CHECK_THROWS_AS(parse_element(W, "t(1,2)"), ConfigError);
  CHECK_THROWS_AS(W.label_from_json({{"lambda", {0}}, {"v_word", nlohmann::json::array()}, {"tag", "open"}}), ConfigError);
}
