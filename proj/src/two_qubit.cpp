#include "dwigner/two_qubit.hpp"

#include <cmath>

#include "numfmt.hpp"

namespace dwig {

namespace {

constexpr complex I{0.0, 1.0};

const cmatrix& pauli(int i) {
    static const std::array<cmatrix, 4> p = {
        cmatrix::identity(2),
        cmatrix(2, {0.0, 1.0, 1.0, 0.0}),
        cmatrix(2, {0.0, -I, I, 0.0}),
        cmatrix(2, {1.0, 0.0, 0.0, -1.0}),
    };
    return p[i];
}

double sgn(int e) { return (e % 2) ? -1.0 : 1.0; }

void require_dim4(const cmatrix& m, const char* who) {
    if (m.dim() != 4)
        throw dimension_error(std::string(who) + ": expected dimension 4, got " + std::to_string(m.dim()));
}

void require_qubit(int which) {
    if (which != 1 && which != 2) throw domain_error("qubit selector must be 1 or 2, got " + std::to_string(which));
}

}  // namespace

cmatrix fano_matrix(const fano& f) {
    cmatrix r = cmatrix::identity(4);
    for (int i = 0; i < 3; ++i) {
        r += complex(f.a[i]) * kron(pauli(i + 1), pauli(0));
        r += complex(f.b[i]) * kron(pauli(0), pauli(i + 1));
        for (int j = 0; j < 3; ++j) r += complex(f.c[i][j]) * kron(pauli(i + 1), pauli(j + 1));
    }
    r *= 0.25;
    return r;
}

fano_composition fano_compose_any(const fano& f, double tol) {
    fano_composition out{fano_matrix(f), {}};
    out.check = check_density(out.matrix, tol);
    return out;
}

density_matrix fano_compose(const fano& f, double tol) {
    fano_composition c = fano_compose_any(f, tol);
    if (!c.physical()) throw validation_error("fano coefficients lie outside the state space", c.check.issues);
    return validate_density(c.matrix, tol);
}

fano fano_extract(const cmatrix& rho) {
    require_dim4(rho, "fano_extract");
    fano f;
    for (int i = 0; i < 3; ++i) {
        f.a[i] = (rho * kron(pauli(i + 1), pauli(0))).trace().real();
        f.b[i] = (rho * kron(pauli(0), pauli(i + 1))).trace().real();
        for (int j = 0; j < 3; ++j) f.c[i][j] = (rho * kron(pauli(i + 1), pauli(j + 1))).trace().real();
    }
    return f;
}

cmatrix reduced(const fano& f, int which) {
    require_qubit(which);
    const auto& v = which == 1 ? f.a : f.b;
    cmatrix r = pauli(0);
    for (int i = 0; i < 3; ++i) r += complex(v[i]) * pauli(i + 1);
    r *= 0.5;
    return r;
}

pair_grid wigner_pair(const fano& f) {
    const auto& a = f.a;
    const auto& b = f.b;
    const auto& c = f.c;
    enum { x, y, z };
    pair_grid w;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int n2 = 0; n2 < 2; ++n2) {
                    double v = 1.0;
                    v += sgn(n1) * a[x] + sgn(m1 + n1 + 1) * a[y] + sgn(m1) * a[z];
                    v += sgn(n2) * b[x] + sgn(m2 + n2 + 1) * b[y] + sgn(m2) * b[z];
                    v += sgn(n1 + n2) * c[x][x] + sgn(n1 + m2 + n2 + 1) * c[x][y] + sgn(n1 + m2) * c[x][z];
                    v += sgn(m1 + n1 + n2 + 1) * c[y][x] + sgn(m1 + n1 + m2 + n2) * c[y][y] +
                         sgn(m1 + n1 + m2 + 1) * c[y][z];
                    v += sgn(m1 + n2) * c[z][x] + sgn(m1 + m2 + n2 + 1) * c[z][y] + sgn(m1 + m2) * c[z][z];
                    w(m1, n1, m2, n2) = 0.25 * v;
                }
    return w;
}

pair_grid wigner_pair_from_matrix(const cmatrix& r) {
    require_dim4(r, "wigner_pair_from_matrix");
    auto re = [&](int i, int j) { return r(i - 1, j - 1).real(); };
    auto im = [&](int i, int j) { return r(i - 1, j - 1).imag(); };
    pair_grid w;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2) {
            const double s1 = sgn(m1), s2 = sgn(m2), s12 = sgn(m1 + m2);
            const double g11 = (s1 + s2 + s12) * re(1, 1);
            const double g22 = (s1 - s2 - s12) * re(2, 2);
            const double g33 = (-s1 + s2 - s12) * re(3, 3);
            const double g44 = (-s1 - s2 + s12) * re(4, 4);
            const double g12 = (1 + s1) * (re(1, 2) + s2 * im(1, 2));
            const double g13 = (1 + s2) * (re(1, 3) + s1 * im(1, 3));
            const double g14 = (1 - s12) * re(1, 4) + (s1 + s2) * im(1, 4);
            const double g23 = (1 + s12) * re(2, 3) + (s1 - s2) * im(2, 3);
            const double g24 = (1 - s2) * (re(2, 4) + s1 * im(2, 4));
            const double g34 = (1 - s1) * (re(3, 4) + s2 * im(3, 4));
            for (int n1 = 0; n1 < 2; ++n1)
                for (int n2 = 0; n2 < 2; ++n2) {
                    double v = 1.0 + g11 + g22 + g33 + g44;
                    v += 2.0 * sgn(n1) * (g13 + g24);
                    v += 2.0 * sgn(n2) * (g12 + g34);
                    v += 2.0 * sgn(n1 + n2) * (g14 + g23);
                    w(m1, n1, m2, n2) = 0.25 * v;
                }
        }
    return w;
}

pair_grid wigner_pair_kernel(const cmatrix& rho) {
    require_dim4(rho, "wigner_pair_kernel");
    const mapping_kernel& k = kernel(2);
    pair_grid w;
    double residue = 0.0;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int n2 = 0; n2 < 2; ++n2) {
                    const complex z = trace_adjoint_product(kron(k(m1, n1), k(m2, n2)), rho);
                    residue = std::max(residue, std::abs(z.imag()));
                    w(m1, n1, m2, n2) = z.real();
                }
    if (residue > imag_residue_limit)
        throw validation_error("wigner_pair_kernel: grid is not real",
                               {"max |Im W| = " + detail::shortest(residue)});
    return w;
}

double pair_normalization(const pair_grid& w) {
    double s = 0.0;
    for (double v : w.values) s += v;
    return s / 4.0;
}

double pair_overlap(const pair_grid& a, const pair_grid& b) {
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += a.values[i] * b.values[i];
    return s / 4.0;
}

wigner_grid reduced_wigner(const fano& f, int which) {
    require_qubit(which);
    const auto& v = which == 1 ? f.a : f.b;
    wigner_grid w{2, std::vector<double>(4)};
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu)
            w(mu, nu) = 0.5 * (1.0 + sgn(nu) * v[0] + sgn(mu + nu + 1) * v[1] + sgn(mu) * v[2]);
    return w;
}

pair_grid delta_pair(const fano& f) {
    const pair_grid w = wigner_pair(f);
    const wigner_grid r1 = reduced_wigner(f, 1), r2 = reduced_wigner(f, 2);
    pair_grid d;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int n2 = 0; n2 < 2; ++n2) d(m1, n1, m2, n2) = w(m1, n1, m2, n2) - r1(m1, n1) * r2(m2, n2);
    return d;
}

std::array<double, 15> su4_coefficients(const fano& f) {
    const auto& a = f.a;
    const auto& b = f.b;
    const auto& c = f.c;
    enum { x, y, z };
    const double r3 = 1.0 / std::sqrt(3.0), r6 = 2.0 / std::sqrt(6.0);
    return {
        b[x] + c[z][x],
        b[y] + c[z][y],
        b[z] + c[z][z],
        a[x] + c[x][z],
        a[y] + c[y][z],
        c[x][x] + c[y][y],
        -c[x][y] + c[y][x],
        r3 * (2.0 * a[z] - b[z] + c[z][z]),
        c[x][x] - c[y][y],
        c[x][y] + c[y][x],
        a[x] - c[x][z],
        a[y] - c[y][z],
        b[x] - c[z][x],
        b[y] - c[z][y],
        r6 * (a[z] + b[z] - c[z][z]),
    };
}

int pair_index_map(int i, int j) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1))
        throw domain_error("pair_index_map: bits must be 0 or 1, got (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
    return 2 * i + j;
}

}  // namespace dwig
