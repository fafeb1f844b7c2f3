// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <unistd.h>

#include "cell_tables.hpp"
#include "cli.hpp"
#include "dwigner/algorithm.hpp"
#include "dwigner/fidelity.hpp"
#include "dwigner/generators.hpp"
#include "dwigner/io.hpp"
#include "dwigner/states.hpp"
#include "support.hpp"
#include "table_expr.hpp"

using namespace dwig;
using testing::cx;

namespace {

struct outcome {
    bool pass;
    std::string detail;
};

struct worst_tracker {
    double worst = 0;
    void see(double d) { worst = std::max(worst, std::isnan(d) ? INFINITY : d); }
    bool within(double tol) const { return worst <= tol; }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

double max_abs(const wigner_grid& g) {
    double m = 0;
    for (double v : g.values) m = std::max(m, std::abs(v));
    return m;
}

bool values_in(const pair_grid& g, std::initializer_list<double> allowed, double tol) {
    for (double v : g.values) {
        bool hit = false;
        for (double a : allowed) hit |= std::abs(v - a) <= tol;
        if (!hit) return false;
    }
    return true;
}

// Distinct values present, each matched to one expected value.
bool values_are(const pair_grid& g, std::initializer_list<double> expected, double tol) {
    std::set<double> seen;
    for (double v : g.values) {
        bool hit = false;
        for (double e : expected)
            if (std::abs(v - e) <= tol) {
                seen.insert(e);
                hit = true;
            }
        if (!hit) return false;
    }
    return seen.size() == expected.size();
}

outcome qubit_table() {
    testing::rng g(101);
    worst_tracker w;
    for (int rep = 0; rep < 100; ++rep) {
        density_matrix rho = validate_density(testing::random_density(2, g));
        auto p = bloch_vector(rho, generators(2));
        testing::env e = testing::element_env(rho.matrix());
        e["Px"] = p[0];
        e["Py"] = p[1];
        e["Pz"] = p[2];
        wigner_grid su2 = wigner_su2(rho);
        for (const auto& c : testing::qubit_cells) {
            w.see(std::abs(su2(c.mu, c.nu) - 0.5 * testing::eval(c.polarization, e)));
            w.see(std::abs(su2(c.mu, c.nu) - testing::eval(c.elements, e)));
        }
    }
    return {w.within(1e-12), "100 qubit states, 4 rows x 2 forms, worst " + sci(w.worst) + " (tol 1e-12)"};
}

outcome pair_tables() {
    testing::rng g(102);
    worst_tracker w;
    for (int rep = 0; rep < 100; ++rep) {
        cmatrix rho = testing::random_density(4, g);
        fano f = fano_extract(rho);
        pair_grid fano_form = wigner_pair(f);
        pair_grid element_form = wigner_pair_from_matrix(rho);
        testing::env fe = testing::fano_env(testing::fano_oracle(rho));
        testing::env ee = testing::element_env(rho);
        for (const auto& c : testing::pair_fano_cells) {
            w.see(std::abs(4 * fano_form(c.mu1, c.nu1, c.mu2, c.nu2) - testing::eval(c.expr, fe)));
            cmatrix k = testing::naive_kron(kernel(2)(c.mu1, c.nu1), kernel(2)(c.mu2, c.nu2));
            w.see(std::abs(fano_form(c.mu1, c.nu1, c.mu2, c.nu2) - testing::naive_trace_adjoint(k, rho).real()));
        }
        for (const auto& c : testing::pair_element_cells) {
            w.see(std::abs(element_form(c.mu1, c.nu1, c.mu2, c.nu2) - testing::eval(c.expr, ee)));
            cmatrix k = testing::naive_kron(kernel(2)(c.mu1, c.nu1), kernel(2)(c.mu2, c.nu2));
            w.see(std::abs(element_form(c.mu1, c.nu1, c.mu2, c.nu2) - testing::naive_trace_adjoint(k, rho).real()));
        }
    }
    return {w.within(1e-12), "100 two-qubit states, 2 x 16 rows vs both forms and the tensor kernel, worst " +
                                 sci(w.worst) + " (tol 1e-12)"};
}

outcome su4_table() {
    testing::rng g(103);
    worst_tracker table, trace;
    for (int rep = 0; rep < 100; ++rep) {
        cmatrix rho = testing::random_density(4, g);
        testing::env e = testing::element_env(rho);
        wigner_grid w = wigner_su4(rho);
        complex_grid k = transform(rho, kernel(4));
        for (const auto& c : testing::su4_cells) {
            table.see(std::abs(w(c.mu, c.nu) - testing::eval(c.expr, e)));
            trace.see(std::abs(cx(w(c.mu, c.nu)) - k(c.mu, c.nu)));
        }
    }
    worst_tracker surd;
    const double a = std::sqrt((2 + std::sqrt(2.0)) / 2), b = std::sqrt((2 - std::sqrt(2.0)) / 2);
    surd.see(std::abs(trig_coefficient(1, 0) / 2 - a));
    surd.see(std::abs(trig_coefficient(1, 2) / 2 + b));
    surd.see(std::abs(trig_coefficient(3, 0) / 2 + b));
    surd.see(std::abs(trig_coefficient(3, 1) / 2 - a));
    const bool pass = table.within(1e-12) && trace.within(1e-12) && surd.within(1e-12);
    return {pass, "100 ququart states: closed form vs table worst " + sci(table.worst) + ", vs kernel trace worst " +
                      sci(trace.worst) + ", surds worst " + sci(surd.worst) + " (tol 1e-12)"};
}

outcome xstate_table() {
    testing::rng g(104);
    worst_tracker w;
    for (int rep = 0; rep < 100; ++rep) {
        xstate x = testing::random_xstate(g);
        const auto e = testing::element_env(x.to_matrix());
        const wigner_grid wx = xstate_wigner_su4(x);
        const wigner_grid general = wigner_su4(x.to_matrix());
        const marginal_pair m = xstate_marginals(x);
        const wigner_grid d = xstate_delta(x);
        for (const auto& c : testing::xstate_cells) {
            w.see(std::abs(wx(c.mu, c.nu) - testing::eval(c.w, e)));
            w.see(std::abs(general(c.mu, c.nu) - testing::eval(c.w, e)));
            w.see(std::abs(m.q[c.mu] * m.r[c.nu] - testing::eval(c.qr, e)));
            w.see(std::abs(d(c.mu, c.nu) - testing::eval(c.delta, e)));
            w.see(std::abs(d(c.mu, c.nu) - (general(c.mu, c.nu) - m.q[c.mu] * m.r[c.nu])));
        }
    }
    return {w.within(1e-12), "100 X-states, 3 columns x 16 cells, worst " + sci(w.worst) + " (tol 1e-12)"};
}

outcome algebra() {
    std::string detail;
    bool pass = true;
    for (int n : {2, 4}) {
        const generator_set gs = generators(n);
        const algebra_report r = verify_algebra(gs, n == 2 ? 0 : 200, 7, 1e-10);
        for (const auto& law : r.laws) {
            const bool basic = law.name == "hermitian" || law.name == "traceless" || law.name == "orthonormal";
            const double tol = basic ? 1e-14 : 1e-10;
            if (law.worst > tol) {
                pass = false;
                detail += " SU(" + std::to_string(n) + ") " + law.name + " " + sci(law.worst) + ";";
            }
        }
    }
    worst_tracker table;
    const generator_set s = generators(4);
    for (int i = 1; i <= 15; ++i) table.see(testing::max_diff(schwinger_expression(i), s[i - 1]));
    pass = pass && table.within(1e-12);
    return {pass, "rules (i)-(iii) within 1e-14, (iv)-(ix) within 1e-10 for SU(2) exhaustive and SU(4) with 200 "
                  "quartic samples;" +
                      detail + " Schwinger table worst " + sci(table.worst) + " (tol 1e-12)"};
}

outcome bell_values() {
    bool pass = true;
    for (auto k : {bell_kind::psi_plus, bell_kind::psi_minus, bell_kind::phi_plus, bell_kind::phi_minus}) {
        const fano f = bell_fano(k);
        pass &= values_are(bell_wigner_pair_grid(k), {0.5, -0.5}, 1e-12);
        pass &= values_are(wigner_pair(f), {0.5, -0.5}, 1e-12);
        pass &= values_are(delta_pair(f), {-0.75, 0.25}, 1e-12);
        const wigner_grid w = bell_wigner_su4(k);
        const auto [lo, hi] = std::minmax_element(w.values.begin(), w.values.end());
        const bool psi = k == bell_kind::psi_plus || k == bell_kind::psi_minus;
        pass &= std::abs(*hi - (psi ? 1.153 : 0.771)) <= 5e-4;
        pass &= std::abs(*lo - (psi ? -0.271 : -0.653)) <= 5e-4;
    }
    const wigner_grid psi = bell_wigner_su4(bell_kind::psi_plus), phi = bell_wigner_su4(bell_kind::phi_plus);
    return {pass, "pair values +-1/2 and correlations {-3/4, 1/4} (tol 1e-12); extremes " +
                      format_double(*std::max_element(psi.values.begin(), psi.values.end())) + " / " +
                      format_double(*std::min_element(psi.values.begin(), psi.values.end())) + " and " +
                      format_double(*std::max_element(phi.values.begin(), phi.values.end())) + " / " +
                      format_double(*std::min_element(phi.values.begin(), phi.values.end())) + " (tol 5e-4)"};
}

outcome werner_family() {
    bool pass = true;
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        pass &= values_in(werner_wigner_pair(f), {1.0 / 6 + f / 3, 0.5 - f}, 1e-12);
        pass &= values_in(wigner_pair(fano_extract(werner(f))), {1.0 / 6 + f / 3, 0.5 - f}, 1e-12);
        pass &= std::abs(purity(werner(f)) - (1 - 2 * f + 4 * f * f) / 3) <= 1e-12;
    }
    auto delta = [](double f) { return delta_pair(fano_extract(werner(f))); };
    pass &= values_are(delta(1), {-0.75, 0.25}, 1e-12);
    pass &= values_are(delta(0.5), {-0.25, 1.0 / 12}, 1e-12);
    pass &= values_are(delta(0.25), {0.0}, 1e-12);
    pass &= values_are(delta(0), {-1.0 / 12, 0.25}, 1e-12);
    return {pass, "pair values, purity and correlation cases for F in {0, 1/4, 1/2, 3/4, 1} (tol 1e-12)"};
}

outcome munro_values() {
    struct row {
        double gamma;
        int mu;
        double value;
    };
    const row rows[] = {{0.5, 1, 0.26}, {0.5, 2, 0.33}, {0.75, 1, 0.42}, {0.75, 2, 0.49}, {1.0, 1, 0.65}};
    bool pass = true;
    std::string got;
    for (const auto& r : rows) {
        const wigner_grid d = xstate_delta(munro(r.gamma));
        pass &= std::abs(d(r.mu, 0) - r.value) <= 5e-3;
        pass &= std::abs(d(r.mu, 2) + r.value) <= 5e-3;
        char buf[16];
        std::snprintf(buf, sizeof buf, " %.4f", d(r.mu, 0));
        got += buf;
    }
    return {pass, "values" + got + " with negated partners at nu=2 (tol 5e-3)"};
}

outcome hierarchy() {
    const double ph = max_abs(xstate_delta(peres_horodecki(1)));
    const double gi = max_abs(xstate_delta(gisin_combo(std::sqrt(2.0) / 4, 0.5, 1)));
    const double phi = max_abs(xstate_delta(xstate_from_matrix(bell(bell_kind::phi_plus).matrix())));
    const bool pass = ph < gi && gi < phi && std::abs(ph - 0.46) <= 5e-3 && std::abs(gi - 0.60) <= 5e-3 &&
                      std::abs(phi - 0.65) <= 5e-3;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.4f < %.4f < %.4f (tol 5e-3)", ph, gi, phi);
    return {pass, buf};
}

outcome algorithm() {
    const algorithm_trace two = run_parity_algorithm(2), six = run_parity_algorithm(6);
    bool pass = two.outcome == 1 && std::abs(two.outcome_probability - 1) <= 1e-12 && two.parity == "positive";
    pass &= six.outcome == 3 && std::abs(six.outcome_probability - 1) <= 1e-12 && six.parity == "negative";
    const cmatrix f = fourier4();
    cmatrix p = cmatrix::identity(4);
    for (int i = 0; i < 4; ++i) p = testing::naive_mul(p, f);
    pass &= testing::max_diff(p, cmatrix::identity(4)) <= 1e-12;
    const std::vector<cx> psi1{0.5, cx(0, 0.5), -0.5, cx(0, -0.5)};
    const auto moved = dwig::apply(permutation_pulse(2), psi1);
    double d = 0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(moved[i] - cx(0, -1) * psi1[i]));
    pass &= d <= 1e-12;
    return {pass, "pulse 2 -> level 1 p=" + format_double(two.outcome_probability) + ", pulse 6 -> level 3 p=" +
                      format_double(six.outcome_probability) + ", F^4 = I, U2 psi1 = -i psi1 (tol 1e-12)"};
}

outcome structural() {
    testing::rng g(111);
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= 5; ++n) {
        const mapping_kernel& k = kernel(n);
        worst_tracker orth, comp, trip, norm, pur;
        cmatrix sum(n);
        for (int m = 0; m < n; ++m)
            for (int v = 0; v < n; ++v) {
                sum += k(m, v);
                for (int m2 = 0; m2 < n; ++m2)
                    for (int v2 = 0; v2 < n; ++v2)
                        orth.see(std::abs(testing::naive_trace_adjoint(k(m, v), k(m2, v2)) -
                                          cx(m == m2 && v == v2 ? n : 0.0)));
            }
        comp.see(testing::max_diff(sum * cx(1.0 / n), cmatrix::identity(n)));
        int rejected = 0;
        for (int rep = 0; rep < 100; ++rep) {
            density_matrix rho = validate_density(testing::random_density(n, g));
            try {
                wigner_grid w = wigner_function(rho, k);
                trip.see(testing::max_diff(reconstruct(w, k), rho.matrix()));
                norm.see(std::abs(grid_normalization(w) - 1));
                pur.see(std::abs(overlap_from_grids(w, w) - purity(rho)));
            } catch (const validation_error&) {
                ++rejected;
            }
        }
        const bool ok = orth.within(1e-12) && comp.within(1e-12) && rejected == 0 && trip.within(1e-12) &&
                        norm.within(1e-12) && pur.within(1e-12);
        pass &= ok;
        detail += " N=" + std::to_string(n) + ": kernel " + sci(std::max(orth.worst, comp.worst));
        if (rejected) detail += ", " + std::to_string(rejected) + "/100 grids not real";
        if (rejected < 100)
            detail += ", round trip " + sci(trip.worst) + ", norm " + sci(norm.worst) + ", purity " + sci(pur.worst);
        detail += ";";
    }
    worst_tracker shift;
    for (int n : {2, 4})
        for (int m = 0; m < n; ++m)
            for (int v = 0; v < n; ++v) {
                shift.see(testing::max_diff(kernel_point(n, m, v, -n, 0), kernel(n)(m, v)));
                shift.see(testing::max_diff(kernel_point(n, m, v, 3, -7), kernel(n)(m, v)));
            }
    pass &= shift.within(1e-12);
    return {pass, detail.substr(1) + " window shift " + sci(shift.worst) + " (tol 1e-12)"};
}

outcome fidelity() {
    testing::rng g(112);
    worst_tracker self, sym, paths;
    for (int rep = 0; rep < 50; ++rep) {
        for (int n : {2, 4}) {
            const auto a = validate_density(testing::random_density(n, g, n));
            const auto b = validate_density(testing::random_density(n, g, n));
            self.see(std::abs(super_fidelity(a, a) - 1));
            sym.see(std::abs(super_fidelity(a, b) - super_fidelity(b, a)));
            paths.see(std::abs(super_fidelity(a, b) - super_fidelity_from_grids(a, b)));
        }
    }
    const bool pass = self.within(1e-12) && sym.within(1e-12) && paths.within(1e-12);
    return {pass, "50 random pairs each of dim 2 and 4: F(r,r)-1 " + sci(self.worst) + ", asymmetry " +
                      sci(sym.worst) + ", direct vs grid " + sci(paths.worst) + " (tol 1e-12)"};
}

std::pair<int, std::string> cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str()};
}

outcome io() {
    testing::rng g(113);
    bool pass = true;
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + rep % 3;
        cmatrix m = testing::random_matrix(n, g);
        const cmatrix back = parse_matrix(serialize_matrix(m));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) pass &= back(i, j) == m(i, j);
        const wigner_grid w = wigner_su4(testing::random_density(4, g));
        const pair_grid p = wigner_pair_from_matrix(testing::random_density(4, g));
        for (auto fmt : {grid_format::csv, grid_format::json, grid_format::gnuplot}) {
            pass &= std::get<wigner_grid>(parse_grid(emit_grid(w, fmt), fmt)).values == w.values;
            pass &= std::get<pair_grid>(parse_grid(emit_grid(p, fmt), fmt)).values == p.values;
        }
    }
    const bool round_trips = pass;

    const std::string dir = std::filesystem::temp_directory_path() / ("dwigner_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& text) {
        std::ofstream(dir + "/" + name) << text;
        return dir + "/" + name;
    };
    const std::string half = put("half.json", R"({"dim":2,"re":[[0.5,0],[0,0.5]]})");
    const std::string flat = put("flat.json", R"({"dim":4,"re":[[0.25,0,0,0],[0,0.25,0,0],[0,0,0.25,0],[0,0,0,0.25]]})");
    const std::string diag = put("diag.json", R"({"dim":4,"re":[[0.5,0,0,0],[0,0.25,0,0],[0,0,0.25,0],[0,0,0,0]]})");
    const std::string singlet = put("singlet.json", serialize_matrix(werner(1).matrix()));

    struct golden {
        std::vector<std::string> args;
        std::string out;
    };
    const golden cases[] = {
        {{"wigner", "--input", half, "--rep", "su2"}, "mu,nu,w\n0,0,0.5\n0,1,0.5\n1,0,0.5\n1,1,0.5\n"},
        {{"state", "--name", "bell:phi+"},
         "{\"dim\": 4, \"re\": [[0.5, 0, 0, 0.5], [0, 0, 0, 0], [0, 0, 0, 0], [0.5, 0, 0, 0.5]], "
         "\"im\": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]}\n"},
        {{"delta", "--input", singlet, "--format", "json"},
         "{\"dim\": 2, \"pair\": true, \"rows\": [[0, 0, 0, 0, -0.75], [0, 0, 0, 1, 0.25], [0, 0, 1, 0, 0.25], "
         "[0, 0, 1, 1, 0.25], [0, 1, 0, 0, 0.25], [0, 1, 0, 1, -0.75], [0, 1, 1, 0, 0.25], [0, 1, 1, 1, 0.25], "
         "[1, 0, 0, 0, 0.25], [1, 0, 0, 1, 0.25], [1, 0, 1, 0, -0.75], [1, 0, 1, 1, 0.25], [1, 1, 0, 0, 0.25], "
         "[1, 1, 0, 1, 0.25], [1, 1, 1, 0, 0.25], [1, 1, 1, 1, -0.75]]}\n"},
        {{"marginals", "--input", diag}, "k,q,r\n0,1,0.5\n1,0.5,0.5\n2,0.5,0.5\n3,0,0.5\n"},
        {{"algorithm", "--pulse", "6"}, "level 3, parity negative, p=1.000\nprobabilities: 0 0 0 1\n"},
        {{"fidelity", "--a", flat, "--b", flat}, "1\n"},
        {{"validate", "--input", flat},
         "dim 4\nhermiticity 0\ntrace_error 0\neigenvalues 0.25 0.25 0.25 0.25\ntr_rho2 0.25\ntr_rho3 0.0625\n"
         "tr_rho4 0.015625\ninequalities pass pass pass\nvalid\n"},
    };
    int matched = 0;
    for (const auto& c : cases) {
        auto [code, out] = cli_run(c.args);
        if (code == 0 && out == c.out) ++matched;
    }
    std::filesystem::remove_all(dir);
    pass &= matched == static_cast<int>(std::size(cases));
    return {pass, std::string("matrix and grid round trips ") + (round_trips ? "bit-exact" : "NOT exact") + ", CLI golden " +
                      std::to_string(matched) + "/" + std::to_string(std::size(cases)) + " subcommands"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<outcome()>> criteria[] = {
        {"qubit table", qubit_table},
        {"two-qubit tables", pair_tables},
        {"four-level table", su4_table},
        {"X-state table", xstate_table},
        {"generator algebra", algebra},
        {"Bell values", bell_values},
        {"Werner family", werner_family},
        {"Munro correlations", munro_values},
        {"correlation hierarchy", hierarchy},
        {"parity algorithm", algorithm},
        {"structural properties", structural},
        {"super-fidelity", fidelity},
        {"text formats and CLI", io},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    std::printf("%d of %d criteria pass\n", index - failed, index);
    return failed ? 1 : 0;
}
