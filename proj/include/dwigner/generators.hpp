#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dwigner/kernel.hpp"
#include "dwigner/matrix.hpp"

namespace dwig {

struct generator_set {
    int dim = 0;
    std::vector<cmatrix> gens;  // g_1 .. g_{N^2-1} stored at 0 .. N^2-2

    std::size_t size() const { return gens.size(); }
    const cmatrix& operator[](std::size_t i) const { return gens[i]; }
};

// Pauli set for n = 2, the fixed 15-element set for n = 4.
generator_set generators(int n);

// g_i (1-based) written as a polynomial in the N = 4 Schwinger pair.
cmatrix schwinger_expression(int i);

// Dense F_ijk and D_ijk, 0-based.
struct structure_constants {
    int dim = 0;
    int m = 0;
    std::vector<double> f;
    std::vector<double> d;

    double F(int i, int j, int k) const { return f[(i * m + j) * m + k]; }
    double D(int i, int j, int k) const { return d[(i * m + j) * m + k]; }
    complex J(int i, int j, int k) const { return {D(i, j, k), F(i, j, k)}; }
};

structure_constants compute_structure_constants(const generator_set& gs);

struct law_check {
    std::string name;
    bool ok = false;
    double worst = 0.0;
};

struct algebra_report {
    std::vector<law_check> laws;

    bool all() const;
    const law_check& operator[](const std::string& name) const;
};

// Rules (i)-(ix). quartic_samples <= 0 checks every index quadruple.
algebra_report verify_algebra(const generator_set& gs, int quartic_samples = 200, std::uint64_t seed = 7,
                              double tol = 1e-10);

std::vector<double> bloch_vector(const density_matrix& rho, const generator_set& gs);
std::vector<double> bloch_vector(const cmatrix& rho, const generator_set& gs);
// I/N + (1/2) sum g_i G_i
cmatrix from_bloch(const std::vector<double>& g, const generator_set& gs);

// delta^[4]_{mu,k}
inline int delta4(int mu, int k) { return wrap(mu - k, 4) == 0 ? 1 : 0; }

// sin[(mu - k/2) pi] / sin[(mu - k/2) pi / 4] for odd k.
double trig_coefficient(int k, int mu);

// Closed-form phase-space representative (g_i)(mu, nu), i 1-based.
double generator_representative(int n, int i, int mu, int nu);

wigner_grid wigner_su2(const std::array<double, 3>& p);
wigner_grid wigner_su2(const density_matrix& rho);

// Closed form in the matrix elements of a dim-4 operator.
wigner_grid wigner_su4(const cmatrix& rho);
inline wigner_grid wigner_su4(const density_matrix& rho) { return wigner_su4(rho.matrix()); }

// 1/4 + (1/2) sum <g_i> (g_i)(mu, nu)
wigner_grid wigner_su4_from_bloch(const std::vector<double>& g);

}  // namespace dwig
