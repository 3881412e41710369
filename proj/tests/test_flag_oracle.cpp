#include "doctest.h"
#include "wexp/errors.hpp"
#include "wexp/flag_oracle.hpp"

using namespace wexp;

TEST_CASE("SL2 affine flag cells") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  const AffineWeyl W(sl2);
  for (int q : {2, 3, 4}) {
    const FlagOracle O(sl2, q, 3);
    for (const auto& w : W.enumerate_elements(3, 0)) {
      const int l = W.length(w);
      size_t ql = 1;
      for (int k = 0; k < l; ++k) ql *= static_cast<size_t>(q);
      CHECK(O.cell_size(w) == ql);
      const auto& orbits = O.cell_orbits(w);
      CHECK(orbits.size() == (W.is_left_max(w) ? 2u : 1u));
      if (orbits.size() == 2) {
        CHECK(orbits[0].points.size() == ql / static_cast<size_t>(q));
        CHECK(orbits[1].label == ExpLabel{Tag::Zero, w});
      }
    }
    CHECK_THROWS_AS(O.cell_orbits(W.translation({2})), ConfigError);
  }
}

TEST_CASE("SL2 line counts") {
  const RootDatum sl2 = RootDatum::preset("SL2");
  const AffineWeyl W(sl2);
  const FlagOracle O(sl2, 5, 2);
  const ExpLabel z{Tag::Zero, W.simple_reflection(1)};
  const LineCount lc = O.line_counts(z, 1);
  CHECK(lc.counts.at(W.label_str({Tag::Coset, W.simple_reflection(1)})) == 1);
  CHECK(lc.counts.at(W.label_str(z)) == 3);
  CHECK(lc.counts.at(W.label_str({Tag::Coset, W.identity()})) == 1);

  const FlagCheckReport rep = check_line_classes(sl2, 3, {2, 3, 4, 5});
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.mismatches == 0);
  CHECK(rep.cases > 0);
}

TEST_CASE("SL3 line counts") {
  const RootDatum sl3 = RootDatum::preset("SL3");
  const AffineWeyl W(sl3);
  const FlagCheckReport rep = check_line_classes(sl3, 2, {2, 3, 4});
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.mismatches == 0);
  CHECK(rep.cases == static_cast<long>(W.enumerate_exp_labels(Facet::a0(), 2, 0).size()) * W.num_simple());
}

TEST_CASE("flag oracle configuration") {
  CHECK_FALSE(FlagOracle::supports("Sp4"));
  CHECK_THROWS_AS(FlagOracle(RootDatum::preset("PGL2"), 3, 2), ConfigError);
  CHECK_THROWS_AS(check_line_classes(RootDatum::preset("SL2"), 2, {2, 3}), ConfigError);
}
