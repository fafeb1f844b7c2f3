#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dwigner/error.hpp"

namespace dwig {

using complex = std::complex<double>;

// Dense square complex matrix, row-major.
class cmatrix {
public:
    cmatrix() = default;
    explicit cmatrix(std::size_t n);
    cmatrix(std::size_t n, std::initializer_list<complex> row_major);
    cmatrix(std::size_t n, std::vector<complex> row_major);

    static cmatrix identity(std::size_t n);
    static cmatrix diagonal(const std::vector<complex>& d);

    std::size_t dim() const { return n_; }
    complex& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    const std::vector<complex>& data() const { return a_; }

    cmatrix adjoint() const;
    cmatrix transpose() const;
    complex trace() const;
    bool finite() const;

    cmatrix& operator+=(const cmatrix& b);
    cmatrix& operator-=(const cmatrix& b);
    cmatrix& operator*=(complex s);

private:
    std::size_t n_ = 0;
    std::vector<complex> a_;
};

cmatrix operator+(cmatrix a, const cmatrix& b);
cmatrix operator-(cmatrix a, const cmatrix& b);
cmatrix operator*(const cmatrix& a, const cmatrix& b);
cmatrix operator*(complex s, cmatrix a);
cmatrix operator*(cmatrix a, complex s);

// Tr[A^dag B]
complex trace_adjoint_product(const cmatrix& a, const cmatrix& b);
cmatrix kron(const cmatrix& a, const cmatrix& b);
cmatrix power(const cmatrix& a, int k);
cmatrix commutator(const cmatrix& a, const cmatrix& b);
cmatrix anticommutator(const cmatrix& a, const cmatrix& b);
cmatrix outer(const std::vector<complex>& ket, const std::vector<complex>& bra);
std::vector<complex> apply(const cmatrix& a, const std::vector<complex>& v);

double max_abs(const cmatrix& a);
double max_abs_diff(const cmatrix& a, const cmatrix& b);
double hermiticity_error(const cmatrix& a);

// Ascending eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const cmatrix& a, double herm_tol = 1e-10);

// Validation tolerance; DWIGNER_TOLERANCE overrides the built-in 1e-10.
double default_tolerance();

struct density_check {
    double hermiticity = 0.0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
    std::vector<double> eigenvalues;
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
};

density_check check_density(const cmatrix& m, double tol);

class density_matrix {
public:
    const cmatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.dim(); }
    double tolerance() const { return tol_; }

private:
    density_matrix(cmatrix m, double tol) : m_(std::move(m)), tol_(tol) {}
    friend density_matrix validate_density(const cmatrix& m, double tol);

    cmatrix m_;
    double tol_ = 1e-10;
};

density_matrix validate_density(const cmatrix& m, double tol);
inline density_matrix validate_density(const cmatrix& m) { return validate_density(m, default_tolerance()); }

// |psi><psi| for a normalized amplitude vector.
density_matrix pure_state(const std::vector<complex>& amplitudes);

double purity(const density_matrix& rho);

struct positivity_report {
    double trace_sq = 0.0;
    double trace_cube = 0.0;
    double trace_fourth = 0.0;
    bool ineq1 = false;
    bool ineq2 = false;
    bool ineq3 = false;

    bool all() const { return ineq1 && ineq2 && ineq3; }
};

positivity_report positivity_inequalities(const cmatrix& rho4);
inline positivity_report positivity_inequalities(const density_matrix& rho4) {
    return positivity_inequalities(rho4.matrix());
}

}  // namespace dwig
