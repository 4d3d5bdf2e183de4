// Python bindings. Exact integers cross the boundary as Python ints (via
// decimal text); structured results come back as JSON text and are turned
// into dicts by the pure-Python wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permlab/closed_forms.hpp"
#include "permlab/error.hpp"
#include "permlab/report.hpp"

namespace py = pybind11;
using namespace permlab;

namespace {

BigInt to_big(const py::handle& obj) {
    if (!py::isinstance<py::int_>(obj)) throw py::type_error("matrix entries must be int");
    return parse_decimal(std::string(py::str(obj)));
}

py::int_ to_py(const BigInt& x) {
    const std::string s = to_decimal(x);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

ExactMatrix to_matrix(const py::sequence& rows) {
    const std::size_t n = py::len(rows);
    ExactMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = rows[i].cast<py::sequence>();
        if (py::len(row) != n) throw ParameterError("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = to_big(row[j]);
    }
    return a;
}

py::list from_matrix(const ExactMatrix& a) {
    py::list rows;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < a.dim(); ++j) row.append(to_py(a(i, j)));
        rows.append(row);
    }
    return rows;
}

// A graph is a spec string ("c5", "k2,3", "g6:Bw") or an (n, edges) pair.
Graph to_graph(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_graph_spec(obj.cast<std::string>());
    auto t = obj.cast<py::tuple>();
    if (t.size() != 2) throw ParameterError("graph must be a spec string or (n, edges)");
    return Graph(t[0].cast<std::size_t>(), t[1].cast<std::vector<std::pair<Vertex, Vertex>>>());
}

PermanentOptions perm_options(unsigned jobs, std::optional<std::size_t> max_n) {
    PermanentOptions o;
    o.jobs = jobs;
    if (max_n) o.max_n = *max_n;
    return o;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_permlab, m) {
    m.doc() = "exact permanents of graph Laplacians";

    static py::exception<Error> base(m, "PermlabError", PyExc_ValueError);
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    static py::exception<InputClassError> input_class(m, "InputClassError", base.ptr());
    static py::exception<SizeLimitError> size_limit(m, "SizeLimitError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(parse.ptr(), e.what());
        } catch (const InputClassError& e) {
            PyErr_SetString(input_class.ptr(), e.what());
        } catch (const SizeLimitError& e) {
            PyErr_SetString(size_limit.ptr(), e.what());
        } catch (const Error& e) {
            PyErr_SetString(base.ptr(), e.what());
        }
    });

    m.def(
        "permanent",
        [](const py::sequence& rows, unsigned jobs, std::optional<std::size_t> max_n, bool naive) {
            auto a = to_matrix(rows);
            BigInt p;
            {
                py::gil_scoped_release release;
                p = naive ? permanent_naive(a) : permanent(a, perm_options(jobs, max_n));
            }
            return to_py(p);
        },
        py::arg("rows"), py::arg("jobs") = 1, py::arg("max_n") = py::none(), py::arg("naive") = false);

    m.def("laplacian", [](const py::object& g) { return from_matrix(laplacian(to_graph(g))); });
    m.def("hadamard", [](const py::sequence& a, const py::sequence& b) {
        return from_matrix(hadamard(to_matrix(a), to_matrix(b)));
    });
    m.def("graph_edges", [](const py::object& g) {
        auto gr = to_graph(g);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : gr.edges()) edges.emplace_back(e.u, e.v);
        return py::make_tuple(gr.order(), edges);
    });
    m.def("to_graph6", [](const py::object& g) { return to_graph6(to_graph(g)); });
    m.def("from_graph6", [](const std::string& s) {
        auto gr = from_graph6(s);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : gr.edges()) edges.emplace_back(e.u, e.v);
        return py::make_tuple(gr.order(), edges);
    });

    m.def(
        "verify_graph_json",
        [](const py::object& g, unsigned jobs) { return dump(to_json(verify_graph(to_graph(g), perm_options(jobs, {})))); },
        py::arg("graph"), py::arg("jobs") = 1);
    m.def(
        "verify_matrix_json",
        [](const py::sequence& rows, unsigned jobs) {
            return dump(to_json(chollet_check(to_matrix(rows), perm_options(jobs, {}), Method::ryser, "matrix")));
        },
        py::arg("rows"), py::arg("jobs") = 1);

    m.def("coalesce", [](const py::object& g1, Vertex v1, const py::object& g2, Vertex v2) {
        auto c = coalesce(to_graph(g1), v1, to_graph(g2), v2).graph;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : c.edges()) edges.emplace_back(e.u, e.v);
        return py::make_tuple(c.order(), edges);
    });
    m.def("coalescence_identity_json", [](const py::object& g1, Vertex v1, const py::object& g2, Vertex v2) {
        return dump(to_json(verify_coalescence_identity(to_graph(g1), v1, to_graph(g2), v2)));
    });
    m.def("hadamard_coalescence_identity_json", [](const py::object& g1, Vertex v1, const py::object& g2, Vertex v2) {
        return dump(to_json(verify_hadamard_coalescence_identity(to_graph(g1), v1, to_graph(g2), v2)));
    });
    m.def("diag_multilinearity_json", [](const py::sequence& rows, std::size_t i, const py::int_& alpha) {
        return dump(to_json(verify_diag_multilinearity(to_matrix(rows), i, to_big(alpha))));
    });
    m.def("sign_property_json",
          [](const py::sequence& rows) { return dump(to_json(verify_sign_property(to_matrix(rows)))); });
    m.def("lieb_bound_json", [](const py::sequence& rows, std::size_t i) {
        return dump(to_json(verify_lieb_bound(to_matrix(rows), i)));
    });

    m.def("cycle_series", [](std::size_t n) {
        auto s = cycle_series(n);
        py::list matchings;
        for (const auto& x : s.matchings) matchings.append(to_py(x));
        py::dict d;
        d["n"] = n;
        d["U"] = to_py(s.U);
        d["V"] = to_py(s.V);
        d["F"] = to_py(s.F);
        d["matchings"] = matchings;
        return d;
    });
    m.def("odd_cycle_gap", [](std::size_t n) { return to_py(odd_cycle_gap(n)); });
    m.def("clique_form", [](std::size_t n, std::size_t s) {
        auto f = clique_form(n, s);
        py::dict d;
        d["P"] = to_py(f.P);
        d["Q"] = to_py(f.Q);
        d["per_M"] = to_py(f.per_M);
        d["per_MM"] = to_py(f.per_MM);
        return d;
    });
    m.def("clique_scalar_holds", [](std::size_t n, std::size_t mm) { return clique_scalar_holds(n, mm).holds; });

    m.def("structural_zero", [](const py::sequence& rows) -> py::object {
        auto w = structural_zero(to_matrix(rows));
        if (!w) return py::none();
        return py::make_tuple(w->rows, w->cols);
    });

    m.def(
        "run_campaign_json",
        [](const std::string& config_text, unsigned jobs) {
            auto c = parse_campaign_config(config_text);
            CampaignReport r;
            {
                py::gil_scoped_release release;
                r = run_campaign(c, {.jobs = jobs, .permanent = {}});
            }
            return dump(to_json(r));
        },
        py::arg("config_text"), py::arg("jobs") = 1);

    m.def("table_json", [](const std::string& which, std::size_t max_n, std::size_t ryser_max_n) {
        Table t;
        if (which == "cycles")
            t = cycle_table(max_n, ryser_max_n);
        else if (which == "cliques")
            t = clique_table(max_n, ryser_max_n);
        else if (which == "scalar")
            t = scalar_table(max_n);
        else
            throw ParameterError("unknown table '" + which + "'");
        return dump(render_json(t));
    });
}
