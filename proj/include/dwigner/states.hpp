#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dwigner/kernel.hpp"
#include "dwigner/matrix.hpp"
#include "dwigner/two_qubit.hpp"

namespace dwig {

enum class bell_kind { psi_plus, psi_minus, phi_plus, phi_minus };

// Accepts psi+, psi-, phi+, phi-.
bell_kind parse_bell(std::string_view name);
std::string to_string(bell_kind k);

fano bell_fano(bell_kind k);
density_matrix bell(bell_kind k);
double bell_wigner_pair(bell_kind k, int mu1, int nu1, int mu2, int nu2);
pair_grid bell_wigner_pair_grid(bell_kind k);
wigner_grid bell_wigner_su4(bell_kind k);

// Singlet weight F in [0, 1].
density_matrix werner(double f);
pair_grid werner_wigner_pair(double f);
wigner_grid werner_wigner_su4(double f);

// Two-qubit state supported on the diagonal and antidiagonal.
struct xstate {
    double rho11 = 0.0;
    double rho22 = 0.0;
    double rho33 = 0.0;
    double rho44 = 0.0;
    complex rho14 = 0.0;
    complex rho23 = 0.0;

    cmatrix to_matrix() const;
};

// Every violated population or block-positivity condition, empty when valid.
std::vector<std::string> xstate_violations(const xstate& x, double tol = default_tolerance());
// Reads the six X entries; rejects matrices with weight off the X pattern.
xstate xstate_from_matrix(const cmatrix& m, double tol = default_tolerance());

// The evaluators below are plain formulas and accept unvalidated inputs.
pair_grid xstate_wigner_pair(const xstate& x);
wigner_grid xstate_wigner_su4(const xstate& x);
wigner_grid xstate_reduced_wigner(const xstate& x, int which);

struct marginal_pair {
    std::array<double, 4> q{};  // Q(mu)
    std::array<double, 4> r{};  // R(nu)
};

marginal_pair xstate_marginals(const xstate& x);
// W - Q R in closed form, cell by cell.
wigner_grid xstate_delta(const xstate& x);

double munro_g(double gamma);
xstate munro(double gamma);
wigner_grid munro_wigner(double gamma);

xstate peres_horodecki(double x);

// Only the combinations a^2 - b^2 and ab enter; populations must be nonnegative.
xstate gisin(double a, double b, double x);
xstate gisin_combo(double a2_minus_b2, double ab, double x);

}  // namespace dwig
