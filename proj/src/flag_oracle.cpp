#include "wexp/flag_oracle.hpp"

#include <algorithm>
#include <set>

#include "wexp/errors.hpp"

namespace wexp {

std::string FlagPoint::key() const {
  std::string s;
  for (const auto& p : chain) {
    s += p.key();
    s.push_back('|');
  }
  return s;
}

FlagOracle::FlagOracle(const RootDatum& rd, int q, int max_length)
    : rd_(rd), W_(rd_), F_(q), max_length_(max_length), model_(rd_, F_, 3 * (max_length + 3) + 4) {
  if (!supports(rd.name())) throw ConfigError("no flag oracle for group " + rd.name());
  if (max_length < 0) throw ConfigError("flag oracle length bound must be nonnegative");
  const int n = model_.dim();
  const LaurentRing& R = model_.ring();
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<Laurent>> cols(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i) cols[i][i] = R.monomial(1, i >= n - k ? 1 : 0);
    std_chain_.push_back(model_.hnf(std::move(cols)));
  }
  const int depth = 2 * (max_length + 3);
  std::vector<int> basis;
  for (int k = 0, e = 1; k < F_.k(); ++k, e *= F_.p()) basis.push_back(e);
  for (size_t r = 0; r < rd_.roots().size(); ++r) {
    const bool pos = rd_.roots()[r].positive;
    for (int lv = pos ? 0 : 1; lv < depth; ++lv)
      for (int a : basis) {
        LMat u = root_element({static_cast<int>(r), lv}, a);
        iwahori_gens_.push_back(u);
        if (!(lv == 0 && rd_.is_simple_root(static_cast<int>(r)))) exp_gens_.push_back(u);
      }
  }
  for (int i = 1; i < rd_.rank(); ++i)
    for (int a : basis)
      exp_gens_.push_back(model_.mat_mul(root_element({rd_.simple_root_index(0), 0}, a),
                                         root_element({rd_.simple_root_index(i), 0}, F_.neg(a))));
  const std::vector<int> d = model_.gm_diag(F_.primitive());
  gm_.assign(n * n, Laurent{});
  for (int i = 0; i < n; ++i) gm_[i + n * i] = R.monomial(d[i], 0);
}

LMat FlagOracle::root_element(const AffineRoot& beta, int c) const {
  const int n = model_.dim();
  const LaurentRing& R = model_.ring();
  LMat u(n * n);
  for (int i = 0; i < n; ++i) u[i + n * i] = R.monomial(1, 0);
  const auto [i, j] = model_.root_entry(beta.root);
  u[i + n * j] = R.monomial(c, beta.level);
  return u;
}

LMat FlagOracle::simple_lift(int s) const {
  const AffineRoot b = W_.simple_affine_root(s);
  const AffineRoot nb{rd_.neg_root(b.root), -b.level};
  const LMat x = root_element(b, 1);
  return model_.mat_mul(model_.mat_mul(x, root_element(nb, F_.neg(1))), x);
}

FlagPoint FlagOracle::act(const LMat& u, const FlagPoint& x) const {
  FlagPoint y;
  y.g = model_.mat_mul(u, x.g);
  for (const auto& L : std_chain_) y.chain.push_back(model_.act_matrix(y.g, L));
  return y;
}

FlagPoint FlagOracle::base() const {
  const int n = model_.dim();
  LMat id(n * n);
  for (int i = 0; i < n; ++i) id[i + n * i] = model_.ring().monomial(1, 0);
  FlagPoint x;
  x.g = id;
  x.chain = std_chain_;
  return x;
}

FlagPoint FlagOracle::schubert_point(const AffineWeylElement& w) const {
  const ReducedWord rw = W_.reduced_word(w);
  if (rw.omega != W_.identity()) throw ConfigError("flag oracle needs elements of the affine Weyl group");
  FlagPoint x = base();
  LMat g = x.g;
  for (int s : rw.word) g = model_.mat_mul(g, simple_lift(s));
  return act(g, x);
}

std::vector<FlagPoint> FlagOracle::bfs(const FlagPoint& start, const std::vector<LMat>& gens, bool with_gm,
                                       const std::unordered_map<std::string, int>* within) const {
  std::vector<FlagPoint> out = {start};
  std::unordered_map<std::string, size_t> seen = {{start.key(), 0}};
  for (size_t head = 0; head < out.size(); ++head) {
    auto visit = [&](FlagPoint y) {
      std::string k = y.key();
      if (within && !within->count(k)) throw InvariantViolation("exponential orbit leaves its Iwahori cell");
      if (seen.emplace(std::move(k), out.size()).second) out.push_back(std::move(y));
    };
    const FlagPoint cur = out[head];
    for (const auto& u : gens) visit(act(u, cur));
    if (with_gm && F_.q() > 2) visit(act(gm_, cur));
  }
  return out;
}

const std::vector<FlagOrbit>& FlagOracle::cell_orbits(const AffineWeylElement& w) const {
  auto it = cells_.find(w);
  if (it != cells_.end()) return it->second;
  if (W_.length(w) > max_length_) throw ConfigError("element is longer than the flag oracle bound");
  const FlagPoint x = schubert_point(w);
  const std::vector<FlagPoint> cell = bfs(x, iwahori_gens_, false);
  std::unordered_map<std::string, int> index;
  for (const auto& p : cell) index.emplace(p.key(), -1);
  std::vector<FlagOrbit> orbits;
  FlagOrbit closed;
  closed.label = {Tag::Coset, w};
  closed.points = bfs(x, exp_gens_, true, &index);
  for (const auto& p : closed.points) index[p.key()] = 0;
  orbits.push_back(std::move(closed));
  for (const auto& p : cell) {
    if (index.at(p.key()) >= 0) continue;
    if (orbits.size() > 1) throw InvariantViolation("Iwahori cell splits into more than two exponential orbits");
    FlagOrbit open;
    open.label = {Tag::Zero, w};
    open.points = bfs(p, exp_gens_, true, &index);
    for (const auto& y : open.points) index[y.key()] = 1;
    orbits.push_back(std::move(open));
  }
  cell_index_.emplace(w, std::move(index));
  return cells_.emplace(w, std::move(orbits)).first->second;
}

size_t FlagOracle::cell_size(const AffineWeylElement& w) const {
  size_t n = 0;
  for (const auto& o : cell_orbits(w)) n += o.points.size();
  return n;
}

LineCount FlagOracle::line_counts(const ExpLabel& w, int s, const FlagPoint& x) const {
  LineCount lc;
  lc.w = w;
  lc.s = s;
  const AffineWeylElement ws = W_.mul_simple_right(w.el, s);
  const LMat lift = simple_lift(s);
  const AffineRoot b = W_.simple_affine_root(s);
  for (int c = 0; c < F_.q(); ++c) {
    const LMat h = model_.mat_mul(model_.mat_mul(x.g, root_element(b, c)), lift);
    FlagPoint y = base();
    y = act(h, y);
    const std::string k = y.key();
    bool found = false;
    for (const AffineWeylElement& v : {w.el, ws}) {
      cell_orbits(v);
      const auto& idx = cell_index_.at(v);
      auto it = idx.find(k);
      if (it == idx.end()) continue;
      const ExpLabel& t = cells_.at(v)[it->second].label;
      const std::string ts = W_.label_str(t);
      ++lc.counts[ts];
      lc.targets.emplace(ts, t);
      found = true;
      break;
    }
    if (!found) throw InvariantViolation("line point outside the cells of w and ws");
  }
  return lc;
}

LineCount FlagOracle::line_counts(const ExpLabel& w, int s) const {
  const auto& orbits = cell_orbits(w.el);
  const FlagOrbit* src = nullptr;
  for (const auto& o : orbits)
    if (o.label == w) src = &o;
  if (!src) throw ConfigError("label " + W_.label_str(w) + " has no orbit in the flag oracle");
  LineCount first = line_counts(w, s, src->points.front());
  for (const auto& x : src->points) {
    LineCount lc = line_counts(w, s, x);
    if (lc.counts != first.counts)
      throw InvariantViolation("line classes of " + W_.label_str(w) + " depend on the point");
  }
  // Every orbit of the two cells is a potential target.
  for (const AffineWeylElement& v : {w.el, W_.mul_simple_right(w.el, s)})
    for (const auto& o : cell_orbits(v)) first.targets.emplace(W_.label_str(o.label), o.label);
  return first;
}

nlohmann::json FlagCheckReport::to_json() const {
  return {{"cases", cases}, {"mismatches", mismatches}, {"case_counts", case_counts}, {"failures", failures}};
}

FlagCheckReport check_line_classes(const RootDatum& rd, int length_bound, const std::vector<int>& q_list) {
  if (q_list.size() < 3) throw ConfigError("line class interpolation needs at least three values of q");
  FlagCheckReport rep;
  const AffineWeyl W(rd);
  const ExpModule M(W);
  const std::vector<ExpLabel> labels = W.enumerate_exp_labels(Facet::a0(), length_bound, 0);
  std::vector<std::unique_ptr<FlagOracle>> oracles;
  for (int q : q_list) oracles.push_back(std::make_unique<FlagOracle>(rd, q, length_bound + 1));
  for (const ExpLabel& w : labels)
    for (int s = 0; s < W.num_simple(); ++s) {
      std::map<std::string, std::vector<std::pair<long, mpz_class>>> samples;
      std::map<std::string, ExpLabel> targets;
      for (size_t k = 0; k < q_list.size(); ++k) {
        const LineCount lc = oracles[k]->line_counts(w, s);
        for (const auto& [ts, t] : lc.targets) targets.emplace(ts, t);
        for (const auto& [ts, t] : lc.targets) {
          auto it = lc.counts.find(ts);
          samples[ts].push_back({q_list[k], it == lc.counts.end() ? mpz_class(0) : mpz_class(it->second)});
        }
      }
      ++rep.cases;
      ++rep.case_counts[M.key_lemma_case(w, s)];
      bool bad = false;
      for (const auto& [ts, t] : targets) {
        QPoly counted;
        try {
          counted = qpoly_interpolate(samples[ts], 1);
        } catch (const InterpolationError& e) {
          rep.failures.push_back(W.label_str(w) + " s" + std::to_string(s) + " -> " + ts + ": " + e.what());
          bad = true;
          continue;
        }
        const QPoly klc = M.key_lemma_class(t, w, s);
        if (counted != klc) {
          rep.failures.push_back(W.label_str(w) + " s" + std::to_string(s) + " -> " + ts + ": counted " +
                                 counted.str() + ", module " + klc.str());
          bad = true;
        }
      }
      if (bad) ++rep.mismatches;
    }
  return rep;
}

}  // namespace wexp
