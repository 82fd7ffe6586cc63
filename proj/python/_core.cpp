#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cellkit/cli.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/linalg.hpp"
#include "cellkit/qh.hpp"
#include "cellkit/schur.hpp"
#include "cellkit/spec_file.hpp"
#include "cellkit/temperley_lieb.hpp"

#include <sstream>

namespace py = pybind11;
using namespace cellkit;

namespace {

// Integers come back as Python ints, fractions as fractions.Fraction.
py::object to_py(const Scalar& s) {
  py::object num = py::int_(py::str(s.numerator().get_str()));
  if (s.denominator() == 1) return num;
  return py::module_::import("fractions").attr("Fraction")(num, py::int_(py::str(s.denominator().get_str())));
}

py::list to_py(const Matrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

Matrix integer_matrix(const std::vector<std::vector<long>>& rows) {
  return Matrix::from_rows(RingSpec::integers(), rows);
}

// An algebra together with its cell datum, as produced by the families.
struct Cellular {
  Algebra algebra;
  CellDatum datum;
};

Cellular tl(int n, long delta) {
  TLData t = tl_algebra(RingSpec::integers(), n, delta);
  return {t.algebra, t.datum};
}

Cellular schur(int n, int d, std::int64_t limit) {
  CellularPresentation p = codeterminant_cell_datum(schur_algebra(RingSpec::integers(), n, d, limit));
  return {p.algebra, p.datum};
}

py::dict report(const QHReport& r) {
  py::dict out;
  out["ring"] = r.ring.to_string();
  out["labels"] = r.labels;
  out["gram_nonzero"] = r.gram_nonzero;
  out["layer_nonzero"] = r.layer_nonzero;
  out["n_simples"] = r.n_simples;
  out["cartan_det"] = r.cartan_det ? to_py(*r.cartan_det) : py::none();
  py::list bad;
  for (const auto& p : r.bad_primes) bad.append(py::int_(py::str(p.get_str())));
  out["bad_primes"] = bad;
  out["notes"] = r.notes;
  out["quasi_hereditary"] = r.verdict;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cellular-algebra analysis";

  static py::exception<Error> error(m, "CellkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<Cellular>(m, "CellularAlgebra")
      .def_property_readonly("dim", [](const Cellular& c) { return c.algebra.dim(); })
      .def_property_readonly("ring", [](const Cellular& c) { return c.algebra.ring().to_string(); })
      .def_property_readonly("basis", [](const Cellular& c) { return c.algebra.labels(); })
      .def_property_readonly("cell_labels", [](const Cellular& c) { return c.datum.labels; })
      .def_property_readonly("tableaux", [](const Cellular& c) { return c.datum.tableaux; })
      .def("product", [](const Cellular& c, std::size_t i, std::size_t j) {
        if (i >= c.algebra.dim() || j >= c.algebra.dim()) throw py::index_error("basis index out of range");
        py::list terms;
        for (const auto& t : c.algebra.product(i, j)) terms.append(py::make_tuple(t.index, to_py(t.coeff)));
        return terms;
      })
      .def("validate", [](const Cellular& c) {
        return validate_algebra(c.algebra).ok() && validate_cell_datum(c.algebra, c.datum).ok();
      })
      .def("gram", [](const Cellular& c, const std::string& lambda, const std::string& ring) {
        const RingSpec r = RingSpec::parse(ring);
        const Algebra a = r == c.algebra.ring() ? c.algebra : base_change(c.algebra, r);
        return to_py(gram_matrix(a, c.datum, c.datum.find_label(lambda)).gram);
      }, py::arg("label"), py::arg("ring") = "Z")
      .def("qh_check", [](const Cellular& c, const std::string& ring) {
        return report(qh_check_ring(c.algebra, c.datum, RingSpec::parse(ring)));
      }, py::arg("ring"))
      .def("bad_primes", [](const Cellular& c) {
        py::list out;
        for (const auto& p : bad_primes_over_Z(c.algebra, c.datum).bad_primes) out.append(py::int_(py::str(p.get_str())));
        return out;
      })
      .def("simple_dims", [](const Cellular& c, const std::string& field) {
        FieldAnalysis fa(c.algebra, c.datum, RingSpec::parse(field));
        py::dict out;
        for (const auto& s : fa.simples()) out[py::str(c.datum.labels[s.lambda])] = s.module.rank;
        return out;
      }, py::arg("field"))
      .def("decomposition_matrix", [](const Cellular& c, const std::string& field) {
        return to_py(decomposition_matrix(c.algebra, c.datum, RingSpec::parse(field)).matrix);
      }, py::arg("field"))
      .def("cartan_matrix", [](const Cellular& c, const std::string& field) {
        Cartan k = cartan_matrix(c.algebra, c.datum, RingSpec::parse(field));
        return py::make_tuple(to_py(k.matrix), to_py(k.determinant));
      }, py::arg("field"))
      .def("export", [](const Cellular& c) { return export_spec(c.algebra, &c.datum); });

  m.def("temperley_lieb", &tl, py::arg("n"), py::arg("delta"));
  m.def("schur", &schur, py::arg("n"), py::arg("d"), py::arg("limit") = kDefaultSchurLimit);
  m.def("load_spec", [](const std::string& text) {
    SpecFile f = load_spec(text);
    if (!f.datum) throw Error(ErrorCode::InvalidArgument, "the spec file carries no cell datum");
    return Cellular{f.algebra, *f.datum};
  });

  m.def("gldim_schur", [](const std::string& ring, int n, int d) -> py::object {
    auto g = gldim_schur(RingSpec::parse(ring), n, d).gldim_exact;
    return g ? py::object(py::int_(*g)) : py::object(py::none());
  });
  m.def("findim_schur_mod_m", &findim_schur_mod_m);
  m.def("alpha_p", &alpha_p);

  m.def("smith_normal_form", [](const std::vector<std::vector<long>>& rows) {
    SmithForm f = smith_normal_form(integer_matrix(rows));
    return py::make_tuple(to_py(f.U), to_py(f.S), to_py(f.V));
  });
  m.def("determinant", [](const std::vector<std::vector<long>>& rows) { return to_py(determinant(integer_matrix(rows))); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
