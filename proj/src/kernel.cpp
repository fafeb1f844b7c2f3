#include "dwigner/kernel.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "numfmt.hpp"

namespace dwig {

namespace {

void require_dim(int n) {
    if (n < 2) throw domain_error("dimension must be at least 2, got " + std::to_string(n));
}

}  // namespace

long long floor_div(long long a, long long n) {
    long long q = a / n;
    if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
    return q;
}

int wrap(long long a, int n) { return static_cast<int>(a - floor_div(a, n) * n); }

schwinger_pair build_schwinger_pair(int n) {
    require_dim(n);
    schwinger_pair p{n, cmatrix(n), cmatrix(n)};
    for (int s = 0; s < n; ++s) {
        p.u(s, s) = std::polar(1.0, 2.0 * std::numbers::pi * s / n);
        p.v(wrap(s - 1, n), s) = 1.0;
    }
    return p;
}

cmatrix symmetrized_basis(int eta, int xi, int n) {
    require_dim(n);
    // U^eta V^xi is a phased permutation: column s maps to row s - xi with phase w^{eta (s - xi)}.
    cmatrix m(n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    // exp(i pi eta xi / N), reduced mod 2N.
    const complex half = std::polar(1.0, std::numbers::pi * wrap(static_cast<long long>(eta) * xi, 2 * n) / n);
    for (int s = 0; s < n; ++s) {
        const int r = wrap(static_cast<long long>(s) - xi, n);
        const complex ph = std::polar(1.0, 2.0 * std::numbers::pi * wrap(static_cast<long long>(eta) * r, n) / n);
        m(r, s) = norm * half * ph;
    }
    return m;
}

long long phase_phi(long long eta, long long xi, long long n) {
    const long long ie = floor_div(eta, n), ix = floor_div(xi, n);
    return n * ie * ix - eta * ix - xi * ie;
}

cmatrix kernel_point(int n, int mu, int nu, int eta0, int xi0) {
    require_dim(n);
    cmatrix g(n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int eta = eta0; eta < eta0 + n; ++eta) {
        for (int xi = xi0; xi < xi0 + n; ++xi) {
            // w^{-(mu eta + nu xi)} w^{N Phi / 2} = exp(i pi [N Phi - 2(mu eta + nu xi)] / N)
            const long long e = static_cast<long long>(n) * phase_phi(eta, xi, n) -
                                2LL * (static_cast<long long>(mu) * eta + static_cast<long long>(nu) * xi);
            const complex c = norm * std::polar(1.0, std::numbers::pi * wrap(e, 2 * n) / n);
            g += c * symmetrized_basis(eta, xi, n);
        }
    }
    return g;
}

mapping_kernel::mapping_kernel(int n) : n_(n) {
    require_dim(n);
    g_.reserve(static_cast<std::size_t>(n) * n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) g_.push_back(kernel_point(n, mu, nu));
}

const mapping_kernel& kernel(int n) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<const mapping_kernel>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<const mapping_kernel>(n)).first;
    return *it->second;
}

complex_grid transform(const cmatrix& op, const mapping_kernel& k) {
    const int n = k.dim();
    if (static_cast<int>(op.dim()) != n)
        throw dimension_error("transform: operator dimension " + std::to_string(op.dim()) + " vs kernel " +
                              std::to_string(n));
    complex_grid out{n, std::vector<complex>(static_cast<std::size_t>(n) * n)};
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) out.values[mu * n + nu] = trace_adjoint_product(k(mu, nu), op);
    return out;
}

double max_imag(const complex_grid& g) {
    double m = 0.0;
    for (const auto& z : g.values) m = std::max(m, std::abs(z.imag()));
    return m;
}

wigner_grid real_part(const complex_grid& g) {
    wigner_grid w{g.dim, std::vector<double>(g.values.size())};
    for (std::size_t i = 0; i < g.values.size(); ++i) w.values[i] = g.values[i].real();
    return w;
}

wigner_grid wigner_function(const density_matrix& rho, const mapping_kernel& k) {
    const complex_grid c = transform(rho.matrix(), k);
    const double residue = max_imag(c);
    if (residue > imag_residue_limit)
        throw validation_error("wigner_function: grid is not real",
                               {"max |Im W| = " + detail::shortest(residue) + " exceeds " +
                                detail::shortest(imag_residue_limit)});
    return real_part(c);
}

namespace {

template <class Grid>
cmatrix reconstruct_impl(const Grid& w, const mapping_kernel& k) {
    const int n = k.dim();
    if (w.dim != n)
        throw dimension_error("reconstruct: grid dimension " + std::to_string(w.dim) + " vs kernel " +
                              std::to_string(n));
    cmatrix r(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) r += complex(w.values[mu * n + nu]) * k(mu, nu);
    r *= 1.0 / n;
    return r;
}

}  // namespace

cmatrix reconstruct(const wigner_grid& w, const mapping_kernel& k) { return reconstruct_impl(w, k); }
cmatrix reconstruct(const complex_grid& w, const mapping_kernel& k) { return reconstruct_impl(w, k); }

double overlap_from_grids(const wigner_grid& a, const wigner_grid& b) {
    if (a.dim != b.dim || a.values.size() != b.values.size())
        throw dimension_error("overlap_from_grids: dimension " + std::to_string(a.dim) + " vs " +
                              std::to_string(b.dim));
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return s / a.dim;
}

double grid_normalization(const wigner_grid& w) {
    double s = 0.0;
    for (double x : w.values) s += x;
    return s / w.dim;
}

}  // namespace dwig
