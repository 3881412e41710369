#include "wexp/hecke.hpp"

#include <algorithm>

#include "wexp/errors.hpp"

namespace wexp {

void hecke_add_to(HeckeElement& acc, const AffineWeylElement& w, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

void hecke_add_to(HeckeElement& acc, const HeckeElement& x, const QPoly& scale) {
  for (const auto& [w, c] : x) hecke_add_to(acc, w, c * scale);
}

bool hecke_equal(const HeckeElement& a, const HeckeElement& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [w, c] : a) {
    auto it = b.find(w);
    if (it == b.end() || it->second != c) return false;
  }
  return true;
}

HeckeElement HeckeAlgebra::t_simple_mul(int s, const HeckeElement& x, Side side) const {
  const QPoly qm1 = QPoly::q() - QPoly(1);
  const QPoly q = QPoly::q();
  HeckeElement out;
  out.reserve(x.size() * 2);
  for (const auto& [w, c] : x) {
    const bool down = side == Side::Right ? W_.right_descent(w, s) : W_.left_descent(w, s);
    const AffineWeylElement ws = side == Side::Right ? W_.mul_simple_right(w, s) : W_.mul_simple_left(s, w);
    if (!down) {
      hecke_add_to(out, ws, c);
    } else {
      hecke_add_to(out, w, c * qm1);
      hecke_add_to(out, ws, c * q);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::omega_mul(const AffineWeylElement& tau, const HeckeElement& x, Side side) const {
  if (W_.length(tau) != 0) throw Error("omega_mul needs a length-zero element");
  HeckeElement out;
  out.reserve(x.size());
  for (const auto& [w, c] : x) out.emplace(side == Side::Right ? W_.mul(w, tau) : W_.mul(tau, w), c);
  return out;
}

HeckeElement HeckeAlgebra::mul_by_word(const HeckeElement& a, const AffineWeylElement& tau,
                                       const std::vector<int>& word) const {
  HeckeElement x = tau == W_.identity() ? a : omega_mul(tau, a, Side::Right);
  for (int s : word) x = t_simple_mul(s, x, Side::Right);
  return x;
}

namespace {

// Reduced words of b's support share prefixes; a T_prefix is computed once
// per trie node.
struct WordTrie {
  std::map<int, WordTrie> kids;
  QPoly coeff;  // coefficient of the element ending here
  bool terminal = false;
};

void trie_walk(const HeckeAlgebra& H, const WordTrie& node, const HeckeElement& x, HeckeElement& out) {
  if (node.terminal) hecke_add_to(out, x, node.coeff);
  for (const auto& [s, kid] : node.kids) trie_walk(H, kid, H.t_simple_mul(s, x, Side::Right), out);
}

}  // namespace

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  std::vector<std::pair<AffineWeylElement, WordTrie>> groups;
  for (const auto& [y, c] : b) {
    ReducedWord rw = W_.reduced_word(y);
    auto g = std::find_if(groups.begin(), groups.end(), [&](const auto& p) { return p.first == rw.omega; });
    if (g == groups.end()) {
      groups.push_back({rw.omega, WordTrie{}});
      g = groups.end() - 1;
    }
    WordTrie* node = &g->second;
    for (int s : rw.word) node = &node->kids[s];
    node->terminal = true;
    node->coeff = c;
  }
  HeckeElement out;
  for (const auto& [tau, trie] : groups) {
    HeckeElement start = tau == W_.identity() ? a : omega_mul(tau, a, Side::Right);
    trie_walk(*this, trie, start, out);
  }
  return out;
}

IntHeckeElement HeckeAlgebra::specialize(const HeckeElement& a, long q) const {
  IntHeckeElement out;
  for (const auto& [w, c] : a) {
    mpz_class v = c.specialize(q);
    if (v != 0) out[w] = v;
  }
  return out;
}

std::vector<AffineWeylElement> sorted_support(const AffineWeyl& W, const HeckeElement& a) {
  std::vector<std::pair<std::pair<int, std::vector<int>>, AffineWeylElement>> items;
  for (const auto& [w, c] : a) {
    ReducedWord rw = W.reduced_word(w);
    items.push_back({{static_cast<int>(rw.word.size()), rw.word}, w});
  }
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  std::vector<AffineWeylElement> out;
  for (auto& it : items) out.push_back(it.second);
  return out;
}

nlohmann::json HeckeAlgebra::to_json(const HeckeElement& a) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : sorted_support(W_, a)) arr.push_back({{"element", W_.element_json(w)}, {"qpoly", a.at(w).to_json()}});
  return arr;
}

HeckeElement HeckeAlgebra::from_json(const nlohmann::json& j) const {
  HeckeElement out;
  for (const auto& e : j) hecke_add_to(out, W_.element_from_json(e.at("element")), QPoly::from_json(e.at("qpoly")));
  return out;
}

}  // namespace wexp
