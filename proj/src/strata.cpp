#include "wexp/strata.hpp"

#include <algorithm>
#include <set>

#include "wexp/errors.hpp"

namespace wexp {

QPoly CellShape::class_in_q() const {
  QPoly r = QPoly::q_pow(a);
  for (int i = 0; i < b; ++i) r *= QPoly::q() - QPoly(1);
  for (int i = 0; i < c; ++i) r *= QPoly::q() - QPoly(2);
  return r;
}

CellShape CellShape::from_json(const nlohmann::json& j) {
  CellShape s{j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>()};
  if (s.a < 0 || s.b < 0 || s.c < 0) throw ConfigError("cell shape exponents must be nonnegative");
  return s;
}

int label_length(const AffineWeyl& W, const ExpLabel& w, const Facet& f) {
  return W.length(W.min_coset_rep(w.el, f));
}

CellShape orbit_shape(const AffineWeyl& W, const ExpLabel& w, const Facet& f) {
  const AffineWeylElement m = W.min_coset_rep(w.el, f);
  const int l = W.length(m);
  const bool lmax = W.is_left_max(m);
  if (w.tag == Tag::Zero) {
    if (!lmax) throw Error("zero-tagged label " + W.label_str(w) + " is not left-maximal");
    return {l - 1, 1, 0};
  }
  if (lmax) return {l - 1, 0, 0};
  return {l, 0, 0};
}

TwistedDims twisted_orbit_dims(const RootDatum& rd, const IVec& mu) {
  if (!rd.is_dominant(mu)) throw Error("twisted orbit dimensions need a dominant coweight, got " + ivec_str(mu));
  int ht_sum = 0;
  for (int k = 0; k < rd.num_positive(); ++k) ht_sum += rd.roots()[k].height;
  const int d = rd.pair_two_rho(mu) + ht_sum;
  return {d, d - 1};
}

std::vector<ExpLabel> finite_closure_strata(const AffineWeyl& W) {
  const RootDatum& rd = W.rd();
  const int lw0 = rd.weyl(rd.longest()).length;
  std::vector<ExpLabel> out = {{Tag::Coset, W.finite(rd.longest())}};
  for (int v = 0; v < rd.weyl_order(); ++v)
    if (rd.weyl(v).length <= lw0 - 2) out.push_back({Tag::Coset, W.finite(v)});
  return out;
}

std::vector<AffineWeylElement> iwahori_orbits_in_spherical(const AffineWeyl& W, const IVec& mu) {
  const RootDatum& rd = W.rd();
  if (!rd.is_dominant(mu)) throw Error("spherical orbit needs a dominant coweight, got " + ivec_str(mu));
  std::set<IVec> orbit;
  for (int u = 0; u < rd.weyl_order(); ++u) orbit.insert(rd.weyl_act_coweight(u, mu));
  const Facet f0 = Facet::f0(rd.rank());
  std::vector<std::pair<std::pair<int, std::vector<int>>, AffineWeylElement>> items;
  for (const IVec& lam : orbit) {
    AffineWeylElement x = W.min_coset_rep(W.translation(lam), f0);
    ReducedWord rw = W.reduced_word(x);
    items.push_back({{static_cast<int>(rw.word.size()), rw.word}, x});
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AffineWeylElement> out;
  for (auto& it : items) out.push_back(it.second);
  return out;
}

}  // namespace wexp
