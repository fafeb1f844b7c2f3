#pragma once

#include <array>

#include "dwigner/kernel.hpp"
#include "dwigner/matrix.hpp"

namespace dwig {

// rho = (1/4)[I + a.sigma x I + I x b.sigma + sum c_ij sigma_i x sigma_j], qubit 1 on the left.
struct fano {
    std::array<double, 3> a{};
    std::array<double, 3> b{};
    std::array<std::array<double, 3>, 3> c{};
};

// Hermitian, unit trace; positivity not checked.
cmatrix fano_matrix(const fano& f);

// Composition that keeps non-positive results for inspection.
struct fano_composition {
    cmatrix matrix;
    density_check check;

    bool physical() const { return check.ok(); }
};

fano_composition fano_compose_any(const fano& f, double tol = default_tolerance());
density_matrix fano_compose(const fano& f, double tol = default_tolerance());

fano fano_extract(const cmatrix& rho4);
inline fano fano_extract(const density_matrix& rho4) { return fano_extract(rho4.matrix()); }

// Reduced state of qubit `which` (1 or 2).
cmatrix reduced(const fano& f, int which);

// Values on {0,1}^4, index ((mu1*2 + nu1)*2 + mu2)*2 + nu2.
struct pair_grid {
    std::array<double, 16> values{};

    static int index(int mu1, int nu1, int mu2, int nu2) { return ((mu1 * 2 + nu1) * 2 + mu2) * 2 + nu2; }
    double operator()(int mu1, int nu1, int mu2, int nu2) const { return values[index(mu1, nu1, mu2, nu2)]; }
    double& operator()(int mu1, int nu1, int mu2, int nu2) { return values[index(mu1, nu1, mu2, nu2)]; }
};

// Sign expansion in the Fano coefficients.
pair_grid wigner_pair(const fano& f);
// Gamma-function form in the computational-basis matrix elements.
pair_grid wigner_pair_from_matrix(const cmatrix& rho4);
inline pair_grid wigner_pair_from_matrix(const density_matrix& rho4) { return wigner_pair_from_matrix(rho4.matrix()); }
// Tr[(G(mu1,nu1) x G(mu2,nu2))^dag rho]; throws if the residue is not real.
pair_grid wigner_pair_kernel(const cmatrix& rho4);

double pair_normalization(const pair_grid& w);
// (1/4) sum W_a W_b
double pair_overlap(const pair_grid& a, const pair_grid& b);

wigner_grid reduced_wigner(const fano& f, int which);

// W - W_R1 W_R2
pair_grid delta_pair(const fano& f);

// Coordinates in the 15-generator basis: rho = (1/4)(I + sum C_i g_i).
std::array<double, 15> su4_coefficients(const fano& f);

// Ququart level of |i j>.
int pair_index_map(int i, int j);

}  // namespace dwig
