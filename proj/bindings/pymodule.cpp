#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superschur/duality.hpp"
#include "superschur/gamma_hom.hpp"
#include "superschur/json_io.hpp"

namespace py = pybind11;
using namespace superschur;

namespace {

Field field_of(unsigned p) { return Field::of_characteristic(p); }

SuperAlgebra named_algebra(const std::string& kind, std::size_t m,
                           std::size_t n, std::size_t d, unsigned p) {
  Field f = field_of(p);
  if (kind == "I") return schur_I(m, n, d, f);
  if (kind == "II") return schur_II(n, d, f);
  if (kind == "W") return sergeev(d, f);
  if (kind == "C") return clifford(d, f);
  throw std::invalid_argument("kind must be I, II, W or C");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Schur superalgebra constructions and verification suites";

  m.def("gamma_dimension", &gamma_dimension, py::arg("m"), py::arg("n"),
        py::arg("d"),
        "dim of the d-th divided power of a space of sdim (m, n)");
  m.def(
      "schur_dimension",
      [](const std::string& kind, std::size_t m, std::size_t n,
         std::size_t d) -> unsigned long long {
        if (kind == "I") return schur_I_dimension(m, n, d);
        if (kind == "II") return schur_II_dimension(n, d);
        throw std::invalid_argument("kind must be I or II");
      },
      py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("d"),
      "closed-form dimension of S(m|n,d) or Q(n,d)");

  m.def(
      "algebra_json",
      [](const std::string& kind, std::size_t m, std::size_t n, std::size_t d,
         unsigned p) { return to_json(named_algebra(kind, m, n, d, p)).dump(); },
      py::arg("kind"), py::arg("m") = 1, py::arg("n") = 1, py::arg("d") = 1,
      py::arg("p") = 0,
      "structure constants of S(m|n,d), Q(n,d), W(d) or C(d) as JSON");

  m.def(
      "verify_sergeev",
      [](std::size_t n, std::size_t d, unsigned p) {
        auto rep = double_centralizer(n, d, field_of(p));
        py::dict out;
        out["n"] = rep.n;
        out["d"] = rep.d;
        out["hypothesis_met"] = rep.hypothesis_met;
        out["wreath_dim"] = rep.wreath_dim;
        out["image_rank"] = rep.image_rank;
        out["injective"] = rep.injective;
        out["schur_dim"] = rep.schur_dim;
        out["bicommutant_dim"] = rep.bicommutant_dim;
        out["image_equals_bicommutant"] = rep.image_equals_bicommutant;
        out["passed"] = rep.passed();
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("p") = 0,
      "double centralizer report for W(d) and Q(n,d) on tensor space");

  m.def(
      "verify_surjectivity",
      [](const std::string& kind, std::size_t m, std::size_t n, std::size_t d,
         unsigned p) {
        Field f = field_of(p);
        SurjectivityReport rep;
        if (kind == "I") {
          ModuleAction v = trivial_module(SuperSpace::boxed(f, 1, 1));
          ModuleAction mid = trivial_module(SuperSpace::boxed(f, m, n));
          rep = surjectivity_report(v, mid, v, d);
        } else if (kind == "II") {
          ModuleAction v = u1_module(1, Side::right, f);
          ModuleAction mid = u1_module(n, Side::right, f);
          rep = surjectivity_report(v, mid, v, d);
        } else {
          throw std::invalid_argument("kind must be I or II");
        }
        py::dict out;
        out["rank"] = rep.rank;
        out["target_dim"] = rep.target_dim;
        out["surjective"] = rep.surjective;
        return out;
      },
      py::arg("kind"), py::arg("m") = 1, py::arg("n") = 1, py::arg("d") = 1,
      py::arg("p") = 0,
      "rank of composition through P = k^{m|n} or U(1)^n vs target dim");

  m.def(
      "verify_pairing",
      [](std::size_t m, std::size_t n, std::size_t d, unsigned p) {
        auto rep = gamma_sym_pairing(SuperSpace::boxed(field_of(p), m, n), d);
        return rep.well_defined && rep.perfect;
      },
      py::arg("m"), py::arg("n"), py::arg("d"), py::arg("p") = 0,
      "perfectness of the pairing between Gamma^d M and S^d(M^dual)");

  m.def(
      "verify_cosalg",
      [](const std::string& base, std::size_t d, unsigned p) {
        Field f = field_of(p);
        SuperAlgebra b = base == "k+k" ? split_pair_algebra(f)
                         : base == "k" ? ground_field_algebra(f)
                                       : clifford(1, f);
        return cosalg_duality_check(b, d).passed();
      },
      py::arg("base") = "C(1)", py::arg("d") = 2, py::arg("p") = 0,
      "S^d(B^dual)^dual vs Gamma^d(B^-) as superalgebras");

  m.def(
      "verify_double_dual",
      [](const std::string& base, unsigned p) {
        Field f = field_of(p);
        SuperAlgebra b = base == "W(2)" ? sergeev(2, f) : clifford(1, f);
        return double_dual_algebra_check(b).matches_minus_twist;
      },
      py::arg("base") = "C(1)", py::arg("p") = 0,
      "(B^dual)^dual matches the minus twist of B");

  m.def(
      "classify_json",
      [](const std::string& kind, std::size_t d, unsigned p) {
        json list = json::array();
        if (kind == "I") {
          for (const auto& [lambda, mu] : labels_type_I(d, p))
            list.push_back(json{{"lambda", lambda}, {"mu", mu}});
        } else if (kind == "II") {
          for (const auto& lambda : labels_type_II(d, p))
            list.push_back(json(lambda));
        } else {
          throw std::invalid_argument("kind must be I or II");
        }
        return json{{"count", list.size()}, {"labels", list}}.dump();
      },
      py::arg("kind"), py::arg("d"), py::arg("p"),
      "simple-object labels of degree d as JSON");

  m.def(
      "weight_decomposition_json",
      [](std::size_t n, std::size_t d, unsigned p) {
        return to_json(weight_decomposition(n, d, field_of(p))).dump();
      },
      py::arg("n"), py::arg("d"), py::arg("p") = 0,
      "weight-space dimensions of (U(1)^n)^{(x)d}");
}
