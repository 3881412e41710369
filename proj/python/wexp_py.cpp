#include <cstdlib>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wexp/errors.hpp"
#include "wexp/exp_module.hpp"
#include "wexp/fq_oracle.hpp"
#include "wexp/hecke.hpp"
#include "wexp/serialize.hpp"
#include "wexp/spherical.hpp"

namespace py = pybind11;
using namespace wexp;

namespace {

py::tuple to_tuple(const IVec& v) {
  py::tuple t(v.size());
  for (size_t i = 0; i < v.size(); ++i) t[i] = v[i];
  return t;
}

template <class M>
py::dict poly_dict(const M& m) {
  py::dict d;
  for (const auto& [k, c] : m) d[to_tuple(k)] = c.str();
  return d;
}

void check_dominant(const RootDatum& rd, const IVec& v) {
  if (static_cast<int>(v.size()) != rd.lattice_rank() || !rd.is_dominant(v))
    throw ConfigError(ivec_str(v) + " is not a dominant coweight");
}

}  // namespace

PYBIND11_MODULE(_wexp, m) {
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("root_datum", [](const std::string& group) { return RootDatum::load(group).to_json().dump(); },
        "root datum of a preset or JSON file, as JSON text");

  m.def("length", [](const std::string& group, const std::string& el) {
    const AffineWeyl W(RootDatum::load(group));
    return W.length(parse_element(W, el));
  });

  m.def("reduced_word", [](const std::string& group, const std::string& el) {
    const AffineWeyl W(RootDatum::load(group));
    const ReducedWord rw = W.reduced_word(parse_element(W, el));
    return py::make_tuple(W.element_str(rw.omega), rw.word);
  });

  m.def("hecke_mul", [](const std::string& group, const std::string& a, const std::string& b) {
    const AffineWeyl W(RootDatum::load(group));
    const HeckeAlgebra H(W);
    const HeckeElement p = H.mul(H.basis(parse_element(W, a)), H.basis(parse_element(W, b)));
    py::dict d;
    for (const auto& w : sorted_support(W, p)) d[py::str(W.element_str(w))] = p.at(w).str();
    return d;
  }, "product T_a T_b, keyed by element string");

  m.def("spherical_mul", [](const std::string& group, const IVec& lam, const IVec& mu) {
    const RootDatum rd = RootDatum::load(group);
    check_dominant(rd, lam);
    check_dominant(rd, mu);
    const AffineWeyl W(rd);
    const SphericalAlgebra S(W);
    return poly_dict(S.mul(S.basis(lam), S.basis(mu)));
  }, "product 1_lam * 1_mu, keyed by dominant coweight");

  m.def("exp_action", [](const std::string& group, const IVec& lam, const IVec& mu) {
    const RootDatum rd = RootDatum::load(group);
    check_dominant(rd, lam);
    check_dominant(rd, mu);
    const ExpModel M(rd);
    return poly_dict(M.basis_action(lam, mu));
  }, "m_lam * 1_mu in the exponential module");

  m.def("gr_window_size", [](const std::string& group, int q, const IVec& bound) {
    const RootDatum rd = RootDatum::load(group);
    return FqOracle::for_bound(rd, q, bound)->enumerate_gr_window(bound).size();
  }, "number of F_q points of the affine Grassmannian below bound");

  m.def("structure_constants", [](const std::string& group, int q, const IVec& lam, const IVec& mu) {
    const RootDatum rd = RootDatum::load(group);
    check_dominant(rd, lam);
    check_dominant(rd, mu);
    IVec sized(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) sized[i] = 2 * std::max(std::abs(lam[i]), std::abs(mu[i]));
    py::dict d;
    for (const auto& [nu, c] : FqOracle::for_bound(rd, q, sized)->structure_constants(lam, mu))
      d[to_tuple(nu)] = py::int_(py::str(c.get_str()));
    return d;
  }, "counted structure constants of m_lam * 1_mu over F_q");
}
