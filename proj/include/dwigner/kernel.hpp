#pragma once

#include <vector>

#include "dwigner/matrix.hpp"

namespace dwig {

// Clock U = diag(w^0 .. w^{N-1}) and cyclic lowering V|u_s> = |u_{s-1 mod N}>.
struct schwinger_pair {
    int dim = 0;
    cmatrix u;
    cmatrix v;
};

schwinger_pair build_schwinger_pair(int n);

// N^{-1/2} exp(i pi eta xi / N) U^eta V^xi; eta and xi may be any integers.
cmatrix symmetrized_basis(int eta, int xi, int n);

long long floor_div(long long a, long long n);
int wrap(long long a, int n);

// N I_eta I_xi - eta I_xi - xi I_eta with I_e = floor(e / N).
long long phase_phi(long long eta, long long xi, long long n);

// One kernel point from its defining double sum, with eta running over
// [eta0, eta0 + n) and xi over [xi0, xi0 + n).
cmatrix kernel_point(int n, int mu, int nu, int eta0 = 0, int xi0 = 0);

class mapping_kernel {
public:
    explicit mapping_kernel(int n);

    int dim() const { return n_; }
    // Indices are taken mod N.
    const cmatrix& operator()(int mu, int nu) const { return g_[wrap(mu, n_) * n_ + wrap(nu, n_)]; }

private:
    int n_;
    std::vector<cmatrix> g_;
};

// Shared immutable kernel, built once per dimension.
const mapping_kernel& kernel(int n);

struct wigner_grid {
    int dim = 0;
    std::vector<double> values;  // row-major in (mu, nu)

    double operator()(int mu, int nu) const { return values[mu * dim + nu]; }
    double& operator()(int mu, int nu) { return values[mu * dim + nu]; }
};

struct complex_grid {
    int dim = 0;
    std::vector<complex> values;

    complex operator()(int mu, int nu) const { return values[mu * dim + nu]; }
};

// O(mu, nu) = Tr[G^dag(mu, nu) O] for any operator.
complex_grid transform(const cmatrix& op, const mapping_kernel& k);

// Imaginary parts up to this bound are dropped; anything larger is an error.
inline constexpr double imag_residue_limit = 1e-8;

double max_imag(const complex_grid& g);
wigner_grid real_part(const complex_grid& g);

// W(mu, nu) = Tr[G^dag(mu, nu) rho].
wigner_grid wigner_function(const density_matrix& rho, const mapping_kernel& k);

// (1/N) sum W G
cmatrix reconstruct(const wigner_grid& w, const mapping_kernel& k);
cmatrix reconstruct(const complex_grid& w, const mapping_kernel& k);

// (1/N) sum W_a W_b
double overlap_from_grids(const wigner_grid& a, const wigner_grid& b);
// (1/N) sum W
double grid_normalization(const wigner_grid& w);

}  // namespace dwig
