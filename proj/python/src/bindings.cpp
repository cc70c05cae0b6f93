#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jordan/cli.hpp"
#include "jordan/error.hpp"
#include "jordan/imagealg.hpp"
#include "jordan/jordan_plane.hpp"
#include "jordan/linalg.hpp"
#include "jordan/poly_parse.hpp"
#include "jordan/reps.hpp"
#include "jordan/rewrite.hpp"
#include "jordan/strata.hpp"

namespace py = pybind11;
using namespace jordan;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints, Fractions and
// "p/q" strings are accepted on input.
py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

Rational from_python(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  return Rational::parse(py::str(h).cast<std::string>());
}

py::list matrix_to_python(const QMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_fraction(m(i, j)));
    rows.append(row);
  }
  return rows;
}

QMatrix matrix_from_python(const py::sequence& rows) {
  const std::size_t n = rows.size();
  const std::size_t cols = n ? py::len(rows[0]) : 0;
  QMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    const py::sequence row = rows[i];
    if (row.size() != cols) throw SizeMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = from_python(row[j]);
  }
  return m;
}

std::vector<Rational> rationals_from_python(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const auto& h : seq) out.push_back(from_python(h));
  return out;
}

std::optional<Partition> partition_from_python(const std::optional<std::vector<std::size_t>>& parts) {
  if (!parts) return std::nullopt;
  return Partition(*parts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the Jordan plane Q<x,y>/(xy - yx - y^2)";

  // JordanError(ValueError); the message starts with the typed error name,
  // e.g. "ParseError: expected 'x' or 'y' at offset 2 in 'x^'".
  static PyObject* jordan_error =
      PyErr_NewException("jordan_lab._core.JordanError", PyExc_ValueError, nullptr);
  m.add_object("JordanError", py::handle(jordan_error));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(jordan_error, (std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  m.def("normal_form", [](const std::string& f) { return normal_form(parse_ncpoly(f)).str(); },
        "Normal form on the basis y^k x^m, as polynomial text.");
  m.def("multiply",
        [](const std::string& f, const std::string& g) {
          return multiply(normal_form(parse_ncpoly(f)), normal_form(parse_ncpoly(g))).str();
        });
  m.def("hilbert_dim", &hilbert_dim);
  m.def("gs_series_coefficients", &gs_series_coefficients, py::arg("gens"), py::arg("rels"), py::arg("up_to"));
  m.def("jordan_overlaps", [] {
    std::vector<std::string> out;
    for (const auto& o : overlaps(RewriteSystem::jordan())) out.push_back(o.word.str());
    return out;
  });
  m.def("alpha_coeff", [](std::size_t k, std::size_t n) { return to_fraction(alpha_coeff(k, n)); });

  py::class_<RepPair>(m, "RepPair")
      .def(py::init([](const py::sequence& x, const py::sequence& y, std::optional<std::vector<std::size_t>> parts) {
             return RepPair::make(matrix_from_python(x), matrix_from_python(y), partition_from_python(parts));
           }),
           py::arg("X"), py::arg("Y"), py::arg("partition") = std::nullopt)
      .def_property_readonly("n", &RepPair::n)
      .def_property_readonly("X", [](const RepPair& r) { return matrix_to_python(r.X()); })
      .def_property_readonly("Y", [](const RepPair& r) { return matrix_to_python(r.Y()); })
      .def_property_readonly("partition",
                             [](const RepPair& r) -> std::optional<std::vector<std::size_t>> {
                               if (!r.partition()) return std::nullopt;
                               return r.partition()->parts();
                             })
      .def_property_readonly("y_nilpotency_index", &RepPair::y_nilpotency_index)
      .def("__eq__", [](const RepPair& a, const RepPair& b) { return a == b; })
      .def("__repr__", [](const RepPair& r) { return "<RepPair n=" + std::to_string(r.n()) + ">"; });

  m.def("epsilon_rep", &epsilon_rep, py::arg("n"));
  m.def("canonical_pair",
        [](const py::handle& lambda, const py::handle& mu, std::size_t n) {
          return canonical_pair(from_python(lambda), from_python(mu), n);
        },
        py::arg("lam"), py::arg("mu"), py::arg("n"));
  m.def("base_point", [](const std::vector<std::size_t>& parts) {
    const Partition p(parts);
    return RepPair::make(x_zero(p), jordan_matrix(p), p);
  });
  m.def("x_zero", [](std::size_t n) { return matrix_to_python(x_zero(n)); });
  m.def("relation_residual", [](const py::sequence& x, const py::sequence& y) {
    return matrix_to_python(relation_residual(matrix_from_python(x), matrix_from_python(y)));
  });
  m.def("conjugate", [](const RepPair& r, const py::sequence& c) { return conjugate(r, matrix_from_python(c)); });
  m.def("eval", [](const std::string& f, const RepPair& r) { return matrix_to_python(eval(parse_ncpoly(f), r)); },
        py::arg("poly"), py::arg("rep"));
  m.def("fiber_dim", [](const std::vector<std::size_t>& parts) { return fiber_basis(Partition(parts)).basis.size(); });
  m.def("extract_params", [](const RepPair& r) {
    const CanonicalParams p = extract_params(r);
    return py::make_tuple(to_fraction(p.lambda), to_fraction(p.mu));
  });
  m.def("faithful_witness",
        [](const std::string& f, std::size_t max_n) -> py::object {
          const FaithfulResult r = faithful_witness(parse_ncpoly(f), max_n);
          if (r.status == FaithfulResult::Status::Witness) return py::int_(r.n);
          return py::str(r.status == FaithfulResult::Status::InIdeal ? "in-ideal" : "not-found");
        },
        py::arg("poly"), py::arg("max_n"));

  m.def("image_dim", [](const RepPair& r) { return image_algebra(r).dim; });
  m.def("dim_bound", &dim_bound);
  m.def("discover_relations", [](const RepPair& r, std::size_t d) {
    std::vector<std::string> out;
    for (const auto& f : discover_relations(r, d)) out.push_back(f.str());
    return out;
  });
  m.def("quiver", [](const RepPair& r) {
    const QuiverData q = quiver(image_algebra(r));
    py::list vertices;
    for (const auto& v : q.vertices) vertices.append(to_fraction(v));
    py::dict d;
    d["vertices"] = vertices;
    d["arrows"] = q.arrows;
    return d;
  });
  m.def("ideal_codim", [](const RepPair& r, const std::vector<std::string>& gens) {
    std::vector<NcPoly> polys;
    for (const auto& g : gens) polys.push_back(parse_ncpoly(g));
    return ideal_codim(image_algebra(r), polys);
  });

  m.def("census",
        [](std::size_t n, unsigned threads) {
          py::list rows;
          for (const auto& s : census(n, threads)) {
            py::dict d;
            d["partition"] = s.partition.parts();
            d["fiber_dim"] = s.fiber_dim;
            d["base_dim"] = s.base_dim;
            d["stratum_dim"] = s.stratum_dim;
            d["image_dim_bound"] = s.image_dim_bound;
            d["tame"] = to_string(s.tame_label);
            rows.append(d);
          }
          return rows;
        },
        py::arg("n"), py::arg("threads") = 1);
  m.def("decompose", [](const RepPair& r) {
    const Decomposition d = decompose(r);
    py::list out;
    for (std::size_t i = 0; i < d.summands.size(); ++i)
      out.append(py::make_tuple(to_fraction(d.eigenvalues[i]), d.summands[i]));
    return out;
  });
  m.def("single_eigenvalue_test", &single_eigenvalue_test);
  m.def("jacobian_rank", [](std::size_t n, const py::sequence& c, const py::sequence& x) {
    const auto cc = rationals_from_python(c);
    const auto xc = rationals_from_python(x);
    return jacobian_rank(n, cc, xc);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
