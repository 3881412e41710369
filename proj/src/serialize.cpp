#include "wexp/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wexp/errors.hpp"

namespace wexp {

nlohmann::json action_matrix_json(const ExpModel& M, const IVec& mu, const std::vector<IVec>& lambdas) {
  nlohmann::json rows = nlohmann::json::array();
  for (const IVec& lam : lambdas) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [nu, c] : M.basis_action(lam, mu)) coeffs.push_back({{"nu", nu}, {"qpoly", c.to_json()}});
    rows.push_back({{"lambda", lam}, {"coeffs", coeffs}});
  }
  return {{"mu", mu}, {"rows", rows}};
}

std::string action_matrix_tsv(const ExpModel& M, const IVec& mu, const std::vector<IVec>& lambdas) {
  std::ostringstream os;
  os << "mu\tlambda\tnu\tqpoly\n";
  for (const IVec& lam : lambdas)
    for (const auto& [nu, c] : M.basis_action(lam, mu))
      os << ivec_csv(mu) << '\t' << ivec_csv(lam) << '\t' << ivec_csv(nu) << '\t' << c.str() << '\n';
  return os.str();
}

nlohmann::json gr_point_json(const LatticeModel& L, const GrPoint& p) {
  const int n = L.dim();
  nlohmann::json basis = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) {
      const Laurent& x = p.b[i + n * j];
      nlohmann::json terms = nlohmann::json::array();
      for (size_t k = 0; k < x.c.size(); ++k)
        if (x.c[k] != 0) terms.push_back({x.low + static_cast<int>(k), x.c[k]});
      row.push_back(terms);
    }
    basis.push_back(row);
  }
  return {{"diag", p.a}, {"basis", basis}, {"coweight", L.coords(p.a)}};
}

std::string gr_points_jsonl(const LatticeModel& L, const std::vector<GrPoint>& pts) {
  std::string out;
  for (const auto& p : pts) {
    out += gr_point_json(L, p).dump();
    out.push_back('\n');
  }
  return out;
}

std::string int_matrix_tsv(const std::vector<IVec>& rows, const std::vector<IVec>& cols,
                           const std::vector<std::vector<mpz_class>>& m) {
  std::ostringstream os;
  os << "row";
  for (const IVec& c : cols) os << '\t' << ivec_csv(c);
  os << '\n';
  for (size_t i = 0; i < rows.size(); ++i) {
    os << ivec_csv(rows[i]);
    for (size_t j = 0; j < cols.size(); ++j) os << '\t' << m[i][j].get_str();
    os << '\n';
  }
  return os.str();
}

std::string ivec_csv(const IVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(v[i]);
  }
  return s;
}

IVec parse_ivec(const std::string& s) {
  IVec out;
  std::string t;
  for (char c : s)
    if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') t.push_back(c);
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad integer vector '" + s + "'");
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  if (s.empty()) return {};
  return parse_ivec(s);
}

namespace {

// Parses "s<k>s<k>..." into indices; false if s has another shape.
bool parse_s_word(const std::string& s, std::vector<int>* out) {
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 's') return false;
    size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) return false;
    out->push_back(std::stoi(s.substr(i + 1, j - i - 1)));
    i = j;
  }
  return true;
}

void check_simple(const AffineWeyl& W, int k, const std::string& s) {
  if (k < 0 || k >= W.num_simple())
    throw ConfigError("simple reflection s" + std::to_string(k) + " out of range in '" + s + "'");
}

}  // namespace

AffineWeylElement parse_element(const AffineWeyl& W, const std::string& s) {
  if (s == "e" || s == "1") return W.identity();
  if (s == "w0") return W.finite(W.rd().longest());
  AffineWeylElement w = W.identity();
  std::string rest = s;
  if (!rest.empty() && rest[0] == 't') {
    const size_t close = rest.find(')');
    if (rest.size() < 3 || rest[1] != '(' || close == std::string::npos)
      throw ConfigError("bad element '" + s + "'");
    const IVec lam = parse_ivec(rest.substr(2, close - 2));
    if (static_cast<int>(lam.size()) != W.rd().lattice_rank())
      throw ConfigError("translation part of '" + s + "' has the wrong rank");
    w = W.translation(lam);
    rest = rest.substr(close + 1);
  }
  std::vector<int> word;
  if (!parse_s_word(rest, &word)) throw ConfigError("bad element '" + s + "'");
  for (int k : word) {
    check_simple(W, k, s);
    w = W.mul_simple_right(w, k);
  }
  return w;
}

ExpLabel parse_label(const AffineWeyl& W, const std::string& s) {
  if (s == "z") return {Tag::Zero, W.finite(W.rd().longest())};
  if (s.rfind("coset:", 0) == 0) return {Tag::Coset, parse_element(W, s.substr(6))};
  if (s.rfind("zero:", 0) == 0) return {Tag::Zero, parse_element(W, s.substr(5))};
  return {Tag::Coset, parse_element(W, s)};
}

std::vector<int> parse_word(const AffineWeyl& W, const std::string& s) {
  std::vector<int> word;
  if (s == "s") {
    word = {1};
  } else if (!s.empty() && s[0] == 's') {
    if (!parse_s_word(s, &word)) throw ConfigError("bad word '" + s + "'");
  } else {
    word = parse_int_list(s);
  }
  for (int k : word) check_simple(W, k, s);
  return word;
}

Facet parse_facet(const AffineWeyl& W, const std::string& s) {
  if (s == "a0") return Facet::a0();
  if (s == "f0") return Facet::f0(W.rd().rank());
  Facet f;
  f.reflections = parse_int_list(s);
  std::sort(f.reflections.begin(), f.reflections.end());
  W.validate_facet(f);
  return f;
}

}  // namespace wexp
