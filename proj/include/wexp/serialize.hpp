#pragma once

#include <string>
#include <vector>

#include "wexp/exp_module.hpp"
#include "wexp/lattice.hpp"

namespace wexp {

// {"mu", "rows": [{"lambda", "coeffs": [{"nu", qpoly}]}]} for m_lambda * 1_mu.
nlohmann::json action_matrix_json(const ExpModel& M, const IVec& mu, const std::vector<IVec>& lambdas);
// lambda, nu, qpoly string per line, with a header.
std::string action_matrix_tsv(const ExpModel& M, const IVec& mu, const std::vector<IVec>& lambdas);

nlohmann::json gr_point_json(const LatticeModel& L, const GrPoint& p);
// One GrPoint normal form per line.
std::string gr_points_jsonl(const LatticeModel& L, const std::vector<GrPoint>& pts);

// Rows and columns of an integer matrix keyed by coweights, as TSV.
std::string int_matrix_tsv(const std::vector<IVec>& rows, const std::vector<IVec>& cols,
                           const std::vector<std::vector<mpz_class>>& m);

std::string ivec_csv(const IVec& v);
IVec parse_ivec(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);

// "e", "w0", a word "s0s1...", or the element_str form "t(1,0)s1s2".
AffineWeylElement parse_element(const AffineWeyl& W, const std::string& s);
// "z" (zero-tagged w0), "coset:<element>", "zero:<element>", or an element.
ExpLabel parse_label(const AffineWeyl& W, const std::string& s);
// "s" (the first finite simple reflection), "s1s0", or "1,0".
std::vector<int> parse_word(const AffineWeyl& W, const std::string& s);
// "a0", "f0", or a comma list of simple reflection indices.
Facet parse_facet(const AffineWeyl& W, const std::string& s);

}  // namespace wexp
