#include "dwigner/states.hpp"

#include <cmath>
#include <numbers>

#include "dwigner/generators.hpp"
#include "numfmt.hpp"

namespace dwig {

using detail::shortest;

namespace {

double sgn(int e) { return (e % 2) ? -1.0 : 1.0; }

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw domain_error(std::string(what) + " must lie in [0, 1], got " + shortest(v));
}

const double kA = std::sqrt((2.0 + std::sqrt(2.0)) / 2.0);
const double kB = std::sqrt((2.0 - std::sqrt(2.0)) / 2.0);

}  // namespace

bell_kind parse_bell(std::string_view name) {
    if (name == "psi+") return bell_kind::psi_plus;
    if (name == "psi-") return bell_kind::psi_minus;
    if (name == "phi+") return bell_kind::phi_plus;
    if (name == "phi-") return bell_kind::phi_minus;
    throw domain_error("unknown Bell state '" + std::string(name) + "' (expected psi+, psi-, phi+, phi-)");
}

std::string to_string(bell_kind k) {
    switch (k) {
        case bell_kind::psi_plus: return "psi+";
        case bell_kind::psi_minus: return "psi-";
        case bell_kind::phi_plus: return "phi+";
        default: return "phi-";
    }
}

namespace {

bool is_psi(bell_kind k) { return k == bell_kind::psi_plus || k == bell_kind::psi_minus; }
double bell_sign(bell_kind k) { return (k == bell_kind::psi_plus || k == bell_kind::phi_plus) ? 1.0 : -1.0; }

}  // namespace

fano bell_fano(bell_kind k) {
    const double s = bell_sign(k);
    fano f;
    if (is_psi(k)) {
        f.c[0][0] = s;
        f.c[1][1] = s;
        f.c[2][2] = -1.0;
    } else {
        f.c[0][0] = s;
        f.c[1][1] = -s;
        f.c[2][2] = 1.0;
    }
    return f;
}

density_matrix bell(bell_kind k) {
    const double s = bell_sign(k);
    const int a = is_psi(k) ? 1 : 0, b = 3 - a;
    cmatrix m(4);
    m(a, a) = m(b, b) = 0.5;
    m(a, b) = m(b, a) = 0.5 * s;
    return validate_density(m);
}

double bell_wigner_pair(bell_kind k, int mu1, int nu1, int mu2, int nu2) {
    const double sm = sgn(mu1 + mu2), sn = sgn(nu1 + nu2), s = bell_sign(k);
    if (is_psi(k)) return 0.25 * (1.0 - sm + s * sn * (1.0 + sm));
    return 0.25 * (1.0 + sm + s * sn * (1.0 - sm));
}

pair_grid bell_wigner_pair_grid(bell_kind k) {
    pair_grid w;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int n2 = 0; n2 < 2; ++n2) w(m1, n1, m2, n2) = bell_wigner_pair(k, m1, n1, m2, n2);
    return w;
}

wigner_grid bell_wigner_su4(bell_kind k) {
    const double s = bell_sign(k);
    wigner_grid w{4, std::vector<double>(16)};
    for (int mu = 0; mu < 4; ++mu) {
        const double d = delta4(mu, 0) - delta4(mu, 1) - delta4(mu, 2) + delta4(mu, 3);
        const double k3 = trig_coefficient(3, mu);
        for (int nu = 0; nu < 4; ++nu) {
            const double c = std::cos(nu * std::numbers::pi / 2.0);
            if (is_psi(k))
                w(mu, nu) = 0.25 - 0.25 * d + s * 0.25 * k3 * c;
            else
                w(mu, nu) = 0.25 + 0.25 * d + s * 0.25 * k3 * sgn(nu) * c;
        }
    }
    return w;
}

density_matrix werner(double f) {
    require_unit_interval(f, "werner: F");
    fano c;
    const double k = (1.0 - 4.0 * f) / 3.0;
    c.c[0][0] = c.c[1][1] = c.c[2][2] = k;
    return validate_density(fano_matrix(c), 1e-10);
}

pair_grid werner_wigner_pair(double f) {
    require_unit_interval(f, "werner: F");
    const double k = (1.0 - 4.0 * f) / 3.0;
    pair_grid w;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int n2 = 0; n2 < 2; ++n2)
                    w(m1, n1, m2, n2) = 0.25 * (1.0 + k * (sgn(m1 + m2) + sgn(m1 + n1 + m2 + n2) + sgn(n1 + n2)));
    return w;
}

wigner_grid werner_wigner_su4(double f) {
    require_unit_interval(f, "werner: F");
    wigner_grid w{4, std::vector<double>(16)};
    for (int mu = 0; mu < 4; ++mu) {
        const double d = delta4(mu, 0) - delta4(mu, 1) - delta4(mu, 2) + delta4(mu, 3);
        for (int nu = 0; nu < 4; ++nu)
            w(mu, nu) = 0.25 + (1.0 - 4.0 * f) / 12.0 *
                                   (d + trig_coefficient(3, mu) * std::cos(nu * std::numbers::pi / 2.0));
    }
    return w;
}

cmatrix xstate::to_matrix() const {
    cmatrix m(4);
    m(0, 0) = rho11;
    m(1, 1) = rho22;
    m(2, 2) = rho33;
    m(3, 3) = rho44;
    m(0, 3) = rho14;
    m(3, 0) = std::conj(rho14);
    m(1, 2) = rho23;
    m(2, 1) = std::conj(rho23);
    return m;
}

std::vector<std::string> xstate_violations(const xstate& x, double tol) {
    std::vector<std::string> out;
    const double p[4] = {x.rho11, x.rho22, x.rho33, x.rho44};
    for (int i = 0; i < 4; ++i)
        if (p[i] < -tol) out.push_back("population rho" + std::to_string(i + 1) + std::to_string(i + 1) + " = " +
                                       shortest(p[i]) + " is negative");
    const double sum = p[0] + p[1] + p[2] + p[3];
    if (std::abs(sum - 1.0) > tol) out.push_back("populations sum to " + shortest(sum) + ", not 1");
    const double b14 = std::norm(x.rho14) - x.rho11 * x.rho44;
    if (b14 > tol) out.push_back("|rho14|^2 exceeds rho11 rho44 by " + shortest(b14));
    const double b23 = std::norm(x.rho23) - x.rho22 * x.rho33;
    if (b23 > tol) out.push_back("|rho23|^2 exceeds rho22 rho33 by " + shortest(b23));
    return out;
}

xstate xstate_from_matrix(const cmatrix& m, double tol) {
    if (m.dim() != 4) throw dimension_error("xstate_from_matrix: expected dimension 4, got " + std::to_string(m.dim()));
    std::vector<std::string> issues;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool on_x = (i == j) || (i + j == 3);
            if (!on_x && std::abs(m(i, j)) > tol)
                issues.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                                 shortest(std::abs(m(i, j))) + " lies off the X pattern");
        }
    if (!issues.empty()) throw validation_error("matrix is not an X-state", issues);
    xstate x;
    x.rho11 = m(0, 0).real();
    x.rho22 = m(1, 1).real();
    x.rho33 = m(2, 2).real();
    x.rho44 = m(3, 3).real();
    x.rho14 = m(0, 3);
    x.rho23 = m(1, 2);
    return x;
}

pair_grid xstate_wigner_pair(const xstate& x) {
    pair_grid w;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2) {
            const double s1 = sgn(m1), s2 = sgn(m2), s12 = sgn(m1 + m2);
            const double g11 = (s1 + s2 + s12) * x.rho11;
            const double g22 = (s1 - s2 - s12) * x.rho22;
            const double g33 = (-s1 + s2 - s12) * x.rho33;
            const double g44 = (-s1 - s2 + s12) * x.rho44;
            const double g14 = (1 - s12) * x.rho14.real() + (s1 + s2) * x.rho14.imag();
            const double g23 = (1 + s12) * x.rho23.real() + (s1 - s2) * x.rho23.imag();
            for (int n1 = 0; n1 < 2; ++n1)
                for (int n2 = 0; n2 < 2; ++n2)
                    w(m1, n1, m2, n2) = 0.25 * (1.0 + g11 + g22 + g33 + g44 + 2.0 * sgn(n1 + n2) * (g14 + g23));
        }
    return w;
}

wigner_grid xstate_wigner_su4(const xstate& x) {
    wigner_grid w{4, std::vector<double>(16)};
    for (int mu = 0; mu < 4; ++mu) {
        const int d0 = delta4(mu, 0), d1 = delta4(mu, 1), d2 = delta4(mu, 2), d3 = delta4(mu, 3);
        const double k3 = trig_coefficient(3, mu);
        for (int nu = 0; nu < 4; ++nu) {
            const double c = std::cos(nu * std::numbers::pi / 2.0), s = std::sin(nu * std::numbers::pi / 2.0);
            double v = 0.25;
            v += 0.25 * (3 * d0 - d1 - d2 - d3) * x.rho11;
            v -= 0.25 * (d0 - 3 * d1 + d2 + d3) * x.rho22;
            v -= 0.25 * (d0 + d1 - 3 * d2 + d3) * x.rho33;
            v -= 0.25 * (d0 + d1 + d2 - 3 * d3) * x.rho44;
            v += 0.5 * k3 *
                 (c * (x.rho23.real() + sgn(nu) * x.rho14.real()) - s * (x.rho23.imag() + sgn(nu) * x.rho14.imag()));
            w(mu, nu) = v;
        }
    }
    return w;
}

wigner_grid xstate_reduced_wigner(const xstate& x, int which) {
    if (which != 1 && which != 2) throw domain_error("qubit selector must be 1 or 2, got " + std::to_string(which));
    const double p = which == 1 ? x.rho11 + x.rho22 - x.rho33 - x.rho44 : x.rho11 - x.rho22 + x.rho33 - x.rho44;
    wigner_grid w{2, std::vector<double>(4)};
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) w(mu, nu) = 0.5 * (1.0 + sgn(mu) * p);
    return w;
}

marginal_pair xstate_marginals(const xstate& x) {
    marginal_pair m;
    const double pre = std::sqrt(2.0 - std::sqrt(2.0)) / 2.0;
    for (int k = 0; k < 4; ++k) {
        const int d0 = delta4(k, 0), d1 = delta4(k, 1), d2 = delta4(k, 2), d3 = delta4(k, 3);
        m.q[k] = 0.5 * (1.0 + (3 * d0 - d1 - d2 - d3) * x.rho11 - (d0 - 3 * d1 + d2 + d3) * x.rho22 -
                        (d0 + d1 - 3 * d2 + d3) * x.rho33 - (d0 + d1 + d2 - 3 * d3) * x.rho44);
        const double c = std::cos(k * std::numbers::pi / 2.0), s = std::sin(k * std::numbers::pi / 2.0);
        m.r[k] = 0.5 + pre * sgn(k) *
                           (c * (x.rho14.real() + sgn(k) * x.rho23.real()) -
                            s * (x.rho14.imag() + sgn(k) * x.rho23.imag()));
    }
    return m;
}

wigner_grid xstate_delta(const xstate& x) {
    const double r2 = std::sqrt(2.0);
    const double h[4] = {
        -kB * (1.0 + r2 * x.rho11),
        kA * (1.0 - (2.0 - r2) * x.rho22),
        kA * (1.0 - (2.0 - r2) * x.rho33),
        -kB * (1.0 + r2 * x.rho44),
    };
    const double re = (x.rho14 + x.rho23).real();
    const double im = (x.rho14 - x.rho23).imag();
    wigner_grid w{4, std::vector<double>(16)};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const double side = nu < 2 ? 1.0 : -1.0;
            w(mu, nu) = side * h[mu] * (nu % 2 ? im : re);
        }
    return w;
}

double munro_g(double gamma) {
    require_unit_interval(gamma, "munro: gamma");
    return gamma >= 2.0 / 3.0 ? gamma / 2.0 : 1.0 / 3.0;
}

xstate munro(double gamma) {
    const double g = munro_g(gamma);
    xstate x;
    x.rho11 = x.rho44 = g;
    x.rho22 = 1.0 - 2.0 * g;
    x.rho14 = gamma / 2.0;
    return x;
}

wigner_grid munro_wigner(double gamma) {
    const double g = munro_g(gamma);
    wigner_grid w{4, std::vector<double>(16)};
    for (int mu = 0; mu < 4; ++mu) {
        const int d0 = delta4(mu, 0), d1 = delta4(mu, 1), d2 = delta4(mu, 2), d3 = delta4(mu, 3);
        for (int nu = 0; nu < 4; ++nu)
            w(mu, nu) = 0.25 - 0.25 * (d0 - 3 * d1 + d2 + d3) + (d0 - 2 * d1 + d3) * g +
                        gamma / 4.0 * trig_coefficient(3, mu) * sgn(nu) * std::cos(nu * std::numbers::pi / 2.0);
    }
    return w;
}

xstate peres_horodecki(double x) {
    require_unit_interval(x, "peres_horodecki: x");
    xstate s;
    s.rho11 = 1.0 - x;
    s.rho22 = s.rho33 = x / 2.0;
    s.rho23 = -x / 2.0;
    return s;
}

xstate gisin_combo(double a2_minus_b2, double ab, double x) {
    require_unit_interval(x, "gisin: x");
    xstate s;
    s.rho11 = s.rho44 = 0.5 * (1.0 - x);
    s.rho22 = (a2_minus_b2 + 0.5) * x;
    s.rho33 = -(a2_minus_b2 - 0.5) * x;
    s.rho23 = -ab * x;
    std::vector<std::string> issues;
    if (s.rho22 < 0.0) issues.push_back("population rho22 = " + shortest(s.rho22) + " is negative");
    if (s.rho33 < 0.0) issues.push_back("population rho33 = " + shortest(s.rho33) + " is negative");
    if (!issues.empty()) throw validation_error("gisin: parameters give negative populations", issues);
    return s;
}

xstate gisin(double a, double b, double x) {
    if (!(a > b && b >= 0.0))
        throw domain_error("gisin: requires a > b >= 0, got a = " + shortest(a) + ", b = " + shortest(b));
    return gisin_combo(a * a - b * b, a * b, x);
}

}  // namespace dwig
