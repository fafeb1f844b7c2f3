#include "dwigner/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace dwig {

namespace {

constexpr complex I{0.0, 1.0};

cmatrix transition(int n, int a, int b) {
    cmatrix m(n);
    m(a, b) = 1.0;
    return m;
}

// P_ab + P_ba and -i(P_ab - P_ba)
cmatrix sym(int n, int a, int b) { return transition(n, a, b) + transition(n, b, a); }
cmatrix asym(int n, int a, int b) { return -I * (transition(n, a, b) - transition(n, b, a)); }

void require_su4_index(int i) {
    if (i < 1 || i > 15) throw domain_error("generator index must be in 1..15, got " + std::to_string(i));
}

}  // namespace

generator_set generators(int n) {
    generator_set gs{n, {}};
    if (n == 2) {
        gs.gens = {sym(2, 0, 1), asym(2, 0, 1), cmatrix::diagonal({1.0, -1.0})};
        return gs;
    }
    if (n != 4) throw domain_error("generators: only n = 2 and n = 4 are supported, got " + std::to_string(n));
    const double r3 = 1.0 / std::sqrt(3.0), r6 = 1.0 / std::sqrt(6.0);
    gs.gens = {
        sym(4, 0, 1),
        asym(4, 0, 1),
        cmatrix::diagonal({1.0, -1.0, 0.0, 0.0}),
        sym(4, 0, 2),
        asym(4, 0, 2),
        sym(4, 1, 2),
        asym(4, 1, 2),
        cmatrix::diagonal({r3, r3, -2.0 * r3, 0.0}),
        sym(4, 0, 3),
        asym(4, 0, 3),
        sym(4, 1, 3),
        asym(4, 1, 3),
        sym(4, 2, 3),
        asym(4, 2, 3),
        cmatrix::diagonal({r6, r6, r6, -3.0 * r6}),
    };
    return gs;
}

cmatrix schwinger_expression(int i) {
    require_su4_index(i);
    const schwinger_pair sp = build_schwinger_pair(4);
    const cmatrix& U = sp.u;
    const cmatrix& V = sp.v;
    const cmatrix U2 = U * U, U3 = U2 * U, V2 = V * V, V3 = V2 * V;
    const cmatrix UV = U * V, U2V = U2 * V, U3V = U3 * V;
    const cmatrix UV3 = U * V3, U2V3 = U2 * V3, U3V3 = U3 * V3;
    const cmatrix UV2 = U * V2, U2V2 = U2 * V2, U3V2 = U3 * V2;

    switch (i) {
        case 1: return 0.25 * (V + V3 + UV + U2V + U3V - I * UV3 - U2V3 + I * U3V3);
        case 2: return (-I / 4.0) * (V - V3 + UV + U2V + U3V + I * UV3 + U2V3 - I * U3V3);
        case 3: return 0.25 * ((1.0 + I) * U + 2.0 * U2 + (1.0 - I) * U3);
        case 4: return 0.5 * (V2 + U2V2);
        case 5: return (-I / 2.0) * (UV2 + U3V2);
        case 6: return 0.25 * (V + V3 - I * UV - U2V + I * U3V - UV3 + U2V3 - U3V3);
        case 7: return (-I / 4.0) * (V - V3 - I * UV - U2V + I * U3V + UV3 - U2V3 + U3V3);
        case 8: return (1.0 / (4.0 * std::sqrt(3.0))) * ((3.0 - I) * U - 2.0 * U2 + (3.0 + I) * U3);
        case 9: return 0.25 * (V + V3 + I * UV - U2V - I * U3V + UV3 + U2V3 + U3V3);
        case 10: return (I / 4.0) * (V - V3 + I * UV - U2V - I * U3V - UV3 - U2V3 - U3V3);
        case 11: return 0.5 * (V2 - U2V2);
        case 12: return -0.5 * (UV2 - U3V2);
        case 13: return 0.25 * (V + V3 - UV + U2V - U3V + I * UV3 - U2V3 - I * U3V3);
        case 14: return (-I / 4.0) * (V - V3 - UV + U2V - U3V - I * UV3 + U2V3 + I * U3V3);
        default: return (-I / std::sqrt(6.0)) * (U + I * U2 - U3);
    }
}

structure_constants compute_structure_constants(const generator_set& gs) {
    const int m = static_cast<int>(gs.size());
    structure_constants sc{gs.dim, m, std::vector<double>(m * m * m), std::vector<double>(m * m * m)};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const cmatrix c = commutator(gs[i], gs[j]);
            const cmatrix a = anticommutator(gs[i], gs[j]);
            for (int k = 0; k < m; ++k) {
                sc.f[(i * m + j) * m + k] = ((-I / 4.0) * (c * gs[k]).trace()).real();
                sc.d[(i * m + j) * m + k] = (0.25 * (a * gs[k]).trace()).real();
            }
        }
    }
    return sc;
}

bool algebra_report::all() const {
    return std::all_of(laws.begin(), laws.end(), [](const law_check& l) { return l.ok; });
}

const law_check& algebra_report::operator[](const std::string& name) const {
    for (const auto& l : laws)
        if (l.name == name) return l;
    throw domain_error("algebra_report: no law named " + name);
}

algebra_report verify_algebra(const generator_set& gs, int quartic_samples, std::uint64_t seed, double tol) {
    const int m = static_cast<int>(gs.size());
    const int n = gs.dim;
    const structure_constants sc = compute_structure_constants(gs);
    const cmatrix id = cmatrix::identity(n);
    double herm = 0, trace = 0, ortho = 0, comm = 0, anti = 0, jac = 0, jac2 = 0, cubic = 0, quartic = 0;

    for (int i = 0; i < m; ++i) {
        herm = std::max(herm, hermiticity_error(gs[i]));
        trace = std::max(trace, std::abs(gs[i].trace()));
        for (int j = 0; j < m; ++j) {
            const double want = i == j ? 2.0 : 0.0;
            ortho = std::max(ortho, std::abs((gs[i] * gs[j]).trace() - want));

            cmatrix rc = commutator(gs[i], gs[j]);
            cmatrix ra = anticommutator(gs[i], gs[j]) - (i == j ? 4.0 / n : 0.0) * id;
            for (int k = 0; k < m; ++k) {
                rc -= complex(0.0, 2.0 * sc.F(i, j, k)) * gs[k];
                ra -= complex(2.0 * sc.D(i, j, k)) * gs[k];
            }
            comm = std::max(comm, max_abs(rc));
            anti = std::max(anti, max_abs(ra));
        }
    }

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const cmatrix& a = gs[i];
                const cmatrix& b = gs[j];
                const cmatrix& c = gs[k];
                jac = std::max(jac, max_abs(commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                                            commutator(c, commutator(a, b))));
                jac2 = std::max(jac2, max_abs(commutator(a, anticommutator(b, c)) +
                                              commutator(b, anticommutator(c, a)) +
                                              commutator(c, anticommutator(a, b))));
                cubic = std::max(cubic, std::abs((a * b * c).trace() - 2.0 * sc.J(i, j, k)));
            }

    auto quartic_at = [&](int i, int j, int k, int l) {
        complex want = (i == j && k == l) ? complex(4.0 / n) : complex(0.0);
        for (int p = 0; p < m; ++p) want += 2.0 * sc.J(i, j, p) * sc.J(p, k, l);
        return std::abs((gs[i] * gs[j] * gs[k] * gs[l]).trace() - want);
    };
    if (quartic_samples <= 0) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) quartic = std::max(quartic, quartic_at(i, j, k, l));
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, m - 1);
        for (int s = 0; s < quartic_samples; ++s) {
            const int i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
            quartic = std::max(quartic, quartic_at(i, j, k, l));
        }
        // Diagonal pairs carry the delta term; always include them.
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) quartic = std::max(quartic, quartic_at(i, i, k, k));
    }

    algebra_report r;
    auto add = [&](const char* name, double worst) { r.laws.push_back({name, worst <= tol, worst}); };
    add("hermitian", herm);
    add("traceless", trace);
    add("orthonormal", ortho);
    add("commutator", comm);
    add("anticommutator", anti);
    add("jacobi", jac);
    add("jacobi_mixed", jac2);
    add("cubic_trace", cubic);
    add("quartic_trace", quartic);
    return r;
}

std::vector<double> bloch_vector(const cmatrix& rho, const generator_set& gs) {
    if (static_cast<int>(rho.dim()) != gs.dim)
        throw dimension_error("bloch_vector: matrix dimension " + std::to_string(rho.dim()) + " vs generators " +
                              std::to_string(gs.dim));
    std::vector<double> g(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) g[i] = (gs[i] * rho).trace().real();
    return g;
}

std::vector<double> bloch_vector(const density_matrix& rho, const generator_set& gs) {
    return bloch_vector(rho.matrix(), gs);
}

cmatrix from_bloch(const std::vector<double>& g, const generator_set& gs) {
    if (g.size() != gs.size())
        throw dimension_error("from_bloch: " + std::to_string(g.size()) + " components vs " +
                              std::to_string(gs.size()) + " generators");
    cmatrix r = cmatrix::identity(gs.dim) * complex(1.0 / gs.dim);
    for (std::size_t i = 0; i < g.size(); ++i) r += complex(0.5 * g[i]) * gs[i];
    return r;
}

double trig_coefficient(int k, int mu) {
    const double x = mu - 0.5 * k;
    return std::sin(x * std::numbers::pi) / std::sin(x * std::numbers::pi / 4.0);
}

double generator_representative(int n, int i, int mu, int nu) {
    if (n == 2) {
        if (i < 1 || i > 3) throw domain_error("generator index must be in 1..3, got " + std::to_string(i));
        if (mu < 0 || mu > 1 || nu < 0 || nu > 1)
            throw domain_error("phase-space point out of range for n = 2");
        const double sx = (nu % 2) ? -1.0 : 1.0;
        const double sz = (mu % 2) ? -1.0 : 1.0;
        if (i == 1) return sx;
        if (i == 2) return -sx * sz;
        return sz;
    }
    if (n != 4) throw domain_error("generator_representative: only n = 2 and n = 4 are supported");
    require_su4_index(i);
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw domain_error("phase-space point out of range for n = 4");

    const double pi = std::numbers::pi;
    const double c2 = std::cos(nu * pi / 2.0), s2 = std::sin(nu * pi / 2.0);
    const double c1 = std::cos(nu * pi), s1 = std::sin(nu * pi);
    const double sgn = (nu % 2) ? -1.0 : 1.0;
    switch (i) {
        case 1: return 0.5 * c2 * trig_coefficient(1, mu);
        case 2: return 0.5 * s2 * trig_coefficient(1, mu);
        case 3: return delta4(mu, 0) - delta4(mu, 1);
        case 4: return 2.0 * c1 * delta4(mu, 1);
        case 5: return 2.0 * s1 * delta4(mu, 1);
        case 6: return 0.5 * c2 * trig_coefficient(3, mu);
        case 7: return 0.5 * s2 * trig_coefficient(3, mu);
        case 8: return (delta4(mu, 0) + delta4(mu, 1) - 2.0 * delta4(mu, 2)) / std::sqrt(3.0);
        case 9: return 0.5 * sgn * c2 * trig_coefficient(3, mu);
        case 10: return 0.5 * sgn * s2 * trig_coefficient(3, mu);
        case 11: return 2.0 * c1 * delta4(mu, 2);
        case 12: return 2.0 * s1 * delta4(mu, 2);
        case 13: return 0.5 * c2 * trig_coefficient(5, mu);
        case 14: return 0.5 * s2 * trig_coefficient(5, mu);
        default: return (delta4(mu, 0) + delta4(mu, 1) + delta4(mu, 2) - 3.0 * delta4(mu, 3)) / std::sqrt(6.0);
    }
}

wigner_grid wigner_su2(const std::array<double, 3>& p) {
    const double len2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    if (len2 > 1.0 + 1e-10)
        throw domain_error("wigner_su2: polarization length squared " + std::to_string(len2) + " exceeds 1");
    wigner_grid w{2, std::vector<double>(4)};
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) {
            const double sx = (nu % 2) ? -1.0 : 1.0;
            const double sz = (mu % 2) ? -1.0 : 1.0;
            w(mu, nu) = 0.5 * (1.0 + sx * p[0] - sx * sz * p[1] + sz * p[2]);
        }
    return w;
}

wigner_grid wigner_su2(const density_matrix& rho) {
    if (rho.dim() != 2) throw dimension_error("wigner_su2: expected dimension 2, got " + std::to_string(rho.dim()));
    const auto g = bloch_vector(rho, generators(2));
    return wigner_su2({g[0], g[1], g[2]});
}

wigner_grid wigner_su4(const cmatrix& r) {
    if (r.dim() != 4) throw dimension_error("wigner_su4: expected dimension 4, got " + std::to_string(r.dim()));
    const double pi = std::numbers::pi;
    const double p11 = r(0, 0).real(), p22 = r(1, 1).real(), p33 = r(2, 2).real(), p44 = r(3, 3).real();
    auto coherence = [&](int a, int b, double c, double s) { return c * r(a, b).real() - s * r(a, b).imag(); };

    wigner_grid w{4, std::vector<double>(16)};
    for (int mu = 0; mu < 4; ++mu) {
        const int d0 = delta4(mu, 0), d1 = delta4(mu, 1), d2 = delta4(mu, 2), d3 = delta4(mu, 3);
        const double k1 = trig_coefficient(1, mu), k3 = trig_coefficient(3, mu), k5 = trig_coefficient(5, mu);
        for (int nu = 0; nu < 4; ++nu) {
            const double c2 = std::cos(nu * pi / 2.0), s2 = std::sin(nu * pi / 2.0);
            const double c1 = std::cos(nu * pi), s1 = std::sin(nu * pi);
            const double sgn = (nu % 2) ? -1.0 : 1.0;
            double v = 0.25;
            v += 0.25 * (3 * d0 - d1 - d2 - d3) * p11;
            v -= 0.25 * (d0 - 3 * d1 + d2 + d3) * p22;
            v -= 0.25 * (d0 + d1 - 3 * d2 + d3) * p33;
            v -= 0.25 * (d0 + d1 + d2 - 3 * d3) * p44;
            v += 0.5 * k1 * coherence(0, 1, c2, s2);
            v += 2.0 * d1 * coherence(0, 2, c1, s1);
            v += 0.5 * k3 * sgn * coherence(0, 3, c2, s2);
            v += 0.5 * k3 * coherence(1, 2, c2, s2);
            v += 2.0 * d2 * coherence(1, 3, c1, s1);
            v += 0.5 * k5 * coherence(2, 3, c2, s2);
            w(mu, nu) = v;
        }
    }
    return w;
}

wigner_grid wigner_su4_from_bloch(const std::vector<double>& g) {
    if (g.size() != 15) throw dimension_error("wigner_su4_from_bloch: expected 15 components");
    wigner_grid w{4, std::vector<double>(16)};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double v = 0.25;
            for (int i = 1; i <= 15; ++i) v += 0.5 * g[i - 1] * generator_representative(4, i, mu, nu);
            w(mu, nu) = v;
        }
    return w;
}

}  // namespace dwig
