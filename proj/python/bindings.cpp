// Python bindings for the main library operations. Matrices cross the
// boundary as nested lists of complex numbers; Hermitian validation happens
// on the way in.

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opsysdual/band.hpp"
#include "opsysdual/completion.hpp"
#include "opsysdual/extremal.hpp"
#include "opsysdual/structure.hpp"

namespace py = pybind11;

namespace {

using osd::Complex;
using PyMatrix = std::vector<std::vector<Complex>>;

osd::ComplexMatrix to_complex_matrix(const PyMatrix& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw osd::InvalidInput("matrix must be nonempty");
  osd::ComplexMatrix m(n, static_cast<int>(rows[0].size()));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) {
      throw osd::ShapeMismatch("matrix rows have mixed lengths");
    }
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

osd::HermitianMatrix to_hermitian(const PyMatrix& rows) {
  return osd::HermitianMatrix(to_complex_matrix(rows));
}

PyMatrix from_complex_matrix(const osd::ComplexMatrix& m) {
  PyMatrix rows(m.rows(), std::vector<Complex>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

PyMatrix from_hermitian(const osd::HermitianMatrix& a) {
  return from_complex_matrix(a.to_complex());
}

std::vector<osd::HermitianMatrix> to_hermitian_list(
    const std::vector<PyMatrix>& mats) {
  std::vector<osd::HermitianMatrix> out;
  out.reserve(mats.size());
  for (const PyMatrix& m : mats) out.push_back(to_hermitian(m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Duals of graph operator systems for chordal tolerance relations";

  // Most derived exceptions must be registered last to be matched first.
  py::register_exception<osd::Error>(m, "Error");
  py::register_exception<osd::InvalidInput>(m, "InvalidInputError",
                                            PyExc_ValueError);
  py::register_exception<osd::NotChordal>(m, "NotChordalError");
  py::register_exception<osd::NotPartiallyPositive>(
      m, "NotPartiallyPositiveError");
  py::register_exception<osd::NotInCone>(m, "NotInConeError");
  py::register_exception<osd::ZeroElement>(m, "ZeroElementError");
  py::register_exception<osd::NumericalError>(m, "NumericalError");

  py::class_<osd::ToleranceRelation>(m, "ToleranceRelation")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
           py::arg("n"), py::arg("edges"))
      .def_static("complete", &osd::ToleranceRelation::complete, py::arg("n"))
      .def_static("edgeless", &osd::ToleranceRelation::edgeless, py::arg("n"))
      .def_property_readonly("n", &osd::ToleranceRelation::vertex_count)
      .def_property_readonly("edges", &osd::ToleranceRelation::edges)
      .def("related", &osd::ToleranceRelation::related)
      .def("adjacent", &osd::ToleranceRelation::adjacent)
      .def("neighbors", &osd::ToleranceRelation::neighbors)
      .def("__eq__",
           [](const osd::ToleranceRelation& a, const osd::ToleranceRelation& b) {
             return a == b;
           })
      .def("__repr__", [](const osd::ToleranceRelation& r) {
        return "ToleranceRelation(n=" + std::to_string(r.vertex_count()) +
               ", edges=" + std::to_string(r.edge_count()) + ")";
      });

  py::class_<osd::PartialHermitianMatrix>(m, "PartialHermitianMatrix")
      .def(py::init([](const osd::ToleranceRelation& r, const PyMatrix& v) {
             return osd::PartialHermitianMatrix(r, to_hermitian(v));
           }),
           py::arg("pattern"), py::arg("values"))
      .def_property_readonly("pattern", &osd::PartialHermitianMatrix::pattern)
      .def_property_readonly("values",
                             [](const osd::PartialHermitianMatrix& x) {
                               return from_hermitian(x.values());
                             })
      .def_property_readonly("dim", &osd::PartialHermitianMatrix::dim);

  py::class_<osd::ExtremalityReport>(m, "ExtremalityReport")
      .def_readonly("is_extremal", &osd::ExtremalityReport::is_extremal)
      .def_readonly("clique_ranks", &osd::ExtremalityReport::clique_ranks)
      .def_readonly("support", &osd::ExtremalityReport::support)
      .def_readonly("support_connected",
                    &osd::ExtremalityReport::support_connected)
      .def_readonly("face_dimension", &osd::ExtremalityReport::face_dimension)
      .def_readonly("marginal", &osd::ExtremalityReport::marginal);

  py::class_<osd::EnvelopeDescriptor>(m, "EnvelopeDescriptor")
      .def_readonly("block_sizes", &osd::EnvelopeDescriptor::block_sizes)
      .def_readonly("labels", &osd::EnvelopeDescriptor::labels)
      .def("algebra_dim", &osd::EnvelopeDescriptor::algebra_dim);

  py::class_<osd::SpanResult>(m, "SpanResult")
      .def_readonly("reached", &osd::SpanResult::reached)
      .def_readonly("propagation", &osd::SpanResult::propagation)
      .def_readonly("dims", &osd::SpanResult::dims);

  py::class_<osd::DykstraResult>(m, "DykstraResult")
      .def_readonly("feasible", &osd::DykstraResult::feasible)
      .def_readonly("residual", &osd::DykstraResult::residual)
      .def_readonly("iterations", &osd::DykstraResult::iterations)
      .def_property_readonly("completion", [](const osd::DykstraResult& r) {
        return from_hermitian(r.completion);
      });

  // graph
  m.def("mcs_order",
        [](const osd::ToleranceRelation& r) { return osd::mcs_order(r).order; });
  m.def("verify_peo",
        [](const osd::ToleranceRelation& r, const std::vector<int>& order) {
          return osd::verify_peo(r, osd::EliminationOrder{order});
        });
  m.def("is_chordal", &osd::is_chordal);
  m.def("maximal_cliques", &osd::maximal_cliques);
  m.def("connected_components", &osd::connected_components);
  m.def("diameter", [](const osd::ToleranceRelation& r) {
    return osd::diameter(r);  // None when disconnected
  });
  m.def("is_equivalence", &osd::is_equivalence);
  m.def("ampliate", &osd::ampliate, py::arg("r"), py::arg("m"));

  // linalg
  m.def("eig_hermitian", [](const PyMatrix& a) {
    osd::EigDecomposition eig = osd::eig_hermitian(to_hermitian(a));
    return py::make_tuple(eig.eigenvalues,
                          from_complex_matrix(eig.eigenvectors));
  });
  m.def("is_psd",
        [](const PyMatrix& a, double tol) {
          return osd::is_psd(to_hermitian(a), tol);
        },
        py::arg("a"), py::arg("tol") = osd::kDefaultPsdTol);
  m.def("numerical_rank",
        [](const PyMatrix& a, double tol) {
          return osd::numerical_rank(to_hermitian(a), tol);
        },
        py::arg("a"), py::arg("tol") = osd::kDefaultRankTol);

  // opsys
  m.def("project_to_pattern",
        [](const PyMatrix& a, const osd::ToleranceRelation& r) {
          return osd::project_to_pattern(to_hermitian(a), r);
        });
  m.def("clique_block_map", [](const osd::PartialHermitianMatrix& x) {
    osd::CliqueBlocks cb = osd::clique_block_map(x);
    std::vector<PyMatrix> blocks;
    for (const auto& b : cb.blocks) blocks.push_back(from_hermitian(b));
    return py::make_tuple(cb.cliques, blocks);
  });
  m.def("is_partially_positive", &osd::is_partially_positive, py::arg("x"),
        py::arg("tol") = osd::kDefaultPsdTol);
  m.def("dual_cone_member", &osd::dual_cone_member, py::arg("x"),
        py::arg("tol") = osd::kDefaultPsdTol);
  m.def("ampliated_member",
        [](const std::vector<std::vector<osd::PartialHermitianMatrix>>& blocks,
           int m_, double tol) { return osd::ampliated_member(blocks, m_, tol); },
        py::arg("blocks"), py::arg("m"),
        py::arg("tol") = osd::kDefaultPsdTol);

  // completion
  m.def("chordal_complete",
        [](const osd::PartialHermitianMatrix& x, double tol) {
          return from_hermitian(osd::chordal_complete(x, tol));
        },
        py::arg("x"), py::arg("tol") = osd::kDefaultPsdTol);
  m.def("dykstra_complete", &osd::dykstra_complete, py::arg("x"),
        py::arg("max_iter") = osd::kDefaultDykstraMaxIter,
        py::arg("tol") = osd::kDefaultDykstraTol);

  // structure
  m.def("envelope_of_primal", &osd::envelope_of_primal);
  m.def("envelope_of_dual", &osd::envelope_of_dual);
  m.def("propagation_primal", &osd::propagation_primal);
  m.def("propagation_dual", &osd::propagation_dual);
  m.def("span_propagation",
        [](const std::vector<PyMatrix>& generators, int ambient_dim) {
          return osd::span_propagation(to_hermitian_list(generators),
                                       ambient_dim);
        },
        py::arg("generators"), py::arg("ambient_dim"));
  m.def("pattern_space_basis", [](const osd::ToleranceRelation& r) {
    std::vector<PyMatrix> out;
    for (const auto& b : osd::pattern_space_basis(r)) {
      out.push_back(from_hermitian(b));
    }
    return out;
  });
  m.def("dual_span_generators", [](const osd::ToleranceRelation& r) {
    std::vector<PyMatrix> out;
    for (const auto& b : osd::dual_span_generators(r)) {
      out.push_back(from_hermitian(b));
    }
    return out;
  });

  // extremal
  m.def("certify_extremal", &osd::certify_extremal, py::arg("x"),
        py::arg("tol") = osd::kDefaultRankTol);
  m.def("face_dimension", &osd::face_dimension, py::arg("x"),
        py::arg("tol") = osd::kDefaultRankTol);
  m.def("extremal_from_vector", &osd::extremal_from_vector, py::arg("v"),
        py::arg("r"));
  m.def("recover_generating_vector", &osd::recover_generating_vector,
        py::arg("x"), py::arg("tol") = osd::kDefaultRankTol);

  // band
  m.def("band_relation", &osd::band_relation, py::arg("n"), py::arg("b"));
  m.def("band_vector_extremal", &osd::band_vector_extremal, py::arg("v"),
        py::arg("b"), py::arg("tol") = osd::kDefaultRankTol);
}
