#include "walkmat/dgs.hpp"
#include "walkmat/identities.hpp"
#include "walkmat/int_poly.hpp"
#include "walkmat/spectral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace walkmat;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::int_& v) {
    return Int(py::str(v).cast<std::string>());
}

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::list int_list(const std::vector<Int>& v) {
    py::list out;
    for (const Int& x : v) out.append(to_py(x));
    return out;
}

std::vector<Int> int_vector(const py::sequence& seq) {
    std::vector<Int> out;
    out.reserve(py::len(seq));
    for (auto item : seq) out.push_back(from_py(py::cast<py::int_>(item)));
    return out;
}

py::list matrix_rows(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact toolkit for walk matrices, rooted products with paths, and "
              "Chebyshev resultant identities";

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
        .def("to_graph6", &graph6_encode)
        .def_property_readonly("n", &Graph::order)
        .def("adjacent", &Graph::adjacent)
        .def("add_edge", &Graph::add_edge)
        .def("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("adjacency", [](const Graph& g) { return matrix_rows(g.adjacency_matrix()); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6='" + graph6_encode(g) + "')";
        });

    m.def("path_graph", &path_graph, py::arg("m"));
    m.def("complement", &complement);
    m.def("rooted_product_path", &rooted_product_path, py::arg("g"), py::arg("m"));

    m.def("walk_matrix", [](const Graph& g) { return matrix_rows(walk_matrix(g)); });
    m.def("walk_det", [](const Graph& g) { return to_py(walk_det(g)); });
    m.def("a0", [](const Graph& g) { return to_py(a0(g)); });
    m.def("charpoly", [](const Graph& g) {
        return int_list(charpoly(g.adjacency_matrix()).coeffs());
    }, "Ascending coefficients of det(xI - A)");

    m.def("chebyshev_u", [](std::size_t n) { return int_list(chebyshev_u(n).coeffs()); });
    m.def("chebyshev_s", [](std::size_t n) { return int_list(chebyshev_s(n).coeffs()); });
    m.def("s_sum", [](std::size_t mm) { return int_list(s_sum(mm).coeffs()); });
    m.def("resultant", [](const py::sequence& f, const py::sequence& g) {
        return to_py(resultant(IntPoly(int_vector(f)), IntPoly(int_vector(g))));
    }, "Resultant of two polynomials given as ascending coefficient lists");

    m.def("verify_main_theorem", [](const Graph& g, std::size_t mm) {
        return json_to_py(verify_main_theorem(g, mm).to_json());
    });
    m.def("verify_schwenk", [](const Graph& g, std::size_t mm) {
        return json_to_py(verify_schwenk(g, mm).to_json());
    });
    m.def("verify_dilcher_stolarsky", [](std::size_t mm) {
        return json_to_py(verify_dilcher_stolarsky(mm).to_json());
    });
    m.def("verify_newres", [](std::size_t mm) {
        return json_to_py(verify_newres(mm).to_json());
    });
    m.def("verify_res1", [](std::size_t mm) {
        return json_to_py(verify_res1(mm).to_json());
    });
    m.def("verify_res2", [](std::size_t mm) {
        return json_to_py(verify_res2(mm).to_json());
    });
    m.def("verify_divisibility", [](const Graph& g) {
        return json_to_py(verify_divisibility(g).to_json());
    });
    m.def("verify_constant_term_preservation", [](const Graph& g, std::size_t mm) {
        return json_to_py(verify_constant_term_preservation(g, mm).to_json());
    });

    m.def("fstar_check", [](const Graph& g) { return json_to_py(fstar_check(g).to_json()); });
    m.def("wang_condition", [](const Graph& g, std::uint64_t budget) {
        return to_string(wang_condition(g, budget));
    }, py::arg("g"), py::arg("factor_budget") = 1'000'000);
    m.def("grow_family", [](const Graph& g, const std::vector<std::size_t>& depths,
                            std::size_t max_vertices) {
        return json_to_py(grow_family(g, depths, max_vertices).to_json());
    }, py::arg("g"), py::arg("depths"), py::arg("max_vertices") = 200);
    m.def("scan_corpus", [](const std::vector<std::string>& lines, unsigned workers) {
        py::list out;
        for (const ScanEntry& e : scan_corpus(lines, workers))
            out.append(json_to_py(e.to_json()));
        return out;
    }, py::arg("lines"), py::arg("workers") = 1);

    m.def("spectral_report", [](const Graph& g, std::size_t mm, double tol) {
        const SpectralReport r = verify_eigenvector_lemma(g, mm, tol);
        py::dict d;
        d["max_eigen_residual"] = r.max_eigen_residual;
        d["max_emn_residual"] = r.max_emn_residual;
        d["max_spectrum_diff"] = r.max_spectrum_diff;
        d["min_mu_gap"] = r.min_mu_gap;
        d["min_s_m1_abs"] = r.min_s_m1_abs;
        d["pass"] = r.pass;
        return d;
    }, py::arg("g"), py::arg("m"), py::arg("tol") = 1e-8);
    m.def("walkdet_eigen_report", [](const Graph& g, double tol) {
        const WalkdetEigenReport r = verify_walkdet_eigen_formula(g, tol);
        py::dict d;
        d["exact"] = to_py(r.exact);
        d["approx"] = r.approx;
        d["error"] = r.error;
        d["pass"] = r.pass;
        return d;
    }, py::arg("g"), py::arg("tol") = 1e-6);

    m.attr("__version__") = "0.1.0";
}
