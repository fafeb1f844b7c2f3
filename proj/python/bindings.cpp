#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dwigner/algorithm.hpp"
#include "dwigner/fidelity.hpp"
#include "dwigner/generators.hpp"
#include "dwigner/io.hpp"
#include "dwigner/kernel.hpp"
#include "dwigner/states.hpp"
#include "dwigner/two_qubit.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using rows = std::vector<std::vector<dwig::complex>>;
using grid = std::vector<std::vector<double>>;

dwig::cmatrix to_matrix(const rows& r) {
    const std::size_t n = r.size();
    dwig::cmatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i].size() != n)
            throw dwig::dimension_error("row " + std::to_string(i) + " has " + std::to_string(r[i].size()) +
                                        " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = r[i][j];
    }
    return m;
}

rows from_matrix(const dwig::cmatrix& m) {
    rows r(m.dim(), std::vector<dwig::complex>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r[i][j] = m(i, j);
    return r;
}

grid from_grid(const dwig::wigner_grid& w) {
    grid g(w.dim, std::vector<double>(w.dim));
    for (int mu = 0; mu < w.dim; ++mu)
        for (int nu = 0; nu < w.dim; ++nu) g[mu][nu] = w(mu, nu);
    return g;
}

// Keyed by (mu1, nu1, mu2, nu2).
py::dict from_pair(const dwig::pair_grid& w) {
    py::dict d;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int n2 = 0; n2 < 2; ++n2) d[py::make_tuple(m1, n1, m2, n2)] = w(m1, n1, m2, n2);
    return d;
}

dwig::density_matrix density(const rows& r) { return dwig::validate_density(to_matrix(r)); }

}  // namespace

PYBIND11_MODULE(_dwigner, m) {
    m.doc() = "Discrete Wigner functions for qubits, qubit pairs and ququarts.";

    auto base = py::register_exception<dwig::error>(m, "Error");
    py::register_exception<dwig::dimension_error>(m, "DimensionError", base.ptr());
    py::register_exception<dwig::domain_error>(m, "DomainError", base.ptr());
    py::register_exception<dwig::parse_error>(m, "ParseError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const dwig::validation_error& e) {
            std::string msg = e.what();
            for (const auto& issue : e.issues()) msg += "\n  " + issue;
            PyErr_SetString(PyExc_ValueError, msg.c_str());
        }
    });

    m.def("validate", [](const rows& r) {
        auto c = dwig::check_density(to_matrix(r), dwig::default_tolerance());
        return py::dict("ok"_a = c.ok(), "hermiticity"_a = c.hermiticity, "trace_error"_a = c.trace_error,
                        "eigenvalues"_a = c.eigenvalues, "issues"_a = c.issues);
    });
    m.def("purity", [](const rows& r) { return dwig::purity(density(r)); });

    m.def("wigner_su2", [](const rows& r) { return from_grid(dwig::wigner_su2(density(r))); });
    m.def("wigner_su4", [](const rows& r) { return from_grid(dwig::wigner_su4(density(r))); });
    m.def("wigner_kernel", [](const rows& r) {
        auto rho = density(r);
        return from_grid(dwig::wigner_function(rho, dwig::kernel(static_cast<int>(rho.dim()))));
    });
    m.def("wigner_pair", [](const rows& r) { return from_pair(dwig::wigner_pair_from_matrix(density(r))); });
    m.def("delta_pair", [](const rows& r) { return from_pair(dwig::delta_pair(dwig::fano_extract(density(r)))); });

    m.def("bell", [](const std::string& name) { return from_matrix(dwig::bell(dwig::parse_bell(name)).matrix()); });
    m.def("werner", [](double f) { return from_matrix(dwig::werner(f).matrix()); }, "F"_a);
    m.def("munro", [](double g) { return from_matrix(dwig::munro(g).to_matrix()); }, "gamma"_a);
    m.def("peres_horodecki", [](double x) { return from_matrix(dwig::peres_horodecki(x).to_matrix()); }, "x"_a);
    m.def(
        "gisin",
        [](double a2_minus_b2, double ab, double x) {
            return from_matrix(dwig::gisin_combo(a2_minus_b2, ab, x).to_matrix());
        },
        "a2_minus_b2"_a, "ab"_a, "x"_a);

    m.def("xstate_delta", [](const rows& r) {
        return from_grid(dwig::xstate_delta(dwig::xstate_from_matrix(to_matrix(r))));
    });
    m.def("xstate_marginals", [](const rows& r) {
        auto mp = dwig::xstate_marginals(dwig::xstate_from_matrix(to_matrix(r)));
        return py::make_tuple(std::vector<double>(mp.q.begin(), mp.q.end()),
                              std::vector<double>(mp.r.begin(), mp.r.end()));
    });

    m.def(
        "super_fidelity",
        [](const rows& a, const rows& b, const std::string& via) {
            if (via == "direct") return dwig::super_fidelity(density(a), density(b));
            if (via == "grid") return dwig::super_fidelity_from_grids(density(a), density(b));
            throw dwig::domain_error("via must be 'direct' or 'grid', got '" + via + "'");
        },
        "a"_a, "b"_a, "via"_a = "direct");

    m.def(
        "run_parity_algorithm",
        [](int pulse, double noise) {
            auto t = dwig::run_parity_algorithm(pulse, noise);
            py::list steps;
            for (const auto& s : t.steps)
                steps.append(py::dict("label"_a = s.label,
                                      "state"_a = std::vector<dwig::complex>(s.state.begin(), s.state.end()),
                                      "wigner"_a = from_grid(s.wigner)));
            return py::dict("outcome"_a = t.outcome, "probability"_a = t.outcome_probability, "parity"_a = t.parity,
                            "probabilities"_a = std::vector<double>(t.probabilities.begin(), t.probabilities.end()),
                            "steps"_a = steps);
        },
        "pulse"_a, "noise"_a = 0.0);

    m.def("parse_matrix", [](const std::string& text) { return from_matrix(dwig::parse_matrix(text)); });
    m.def("serialize_matrix", [](const rows& r) { return dwig::serialize_matrix(to_matrix(r)); });
}
