#include "dwigner/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "numfmt.hpp"

namespace dwig {

using detail::shortest;

namespace {

void require_same(const cmatrix& a, const cmatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw dimension_error(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                              std::to_string(b.dim()));
    }
}

}  // namespace

cmatrix::cmatrix(std::size_t n) : n_(n), a_(n * n) {}

cmatrix::cmatrix(std::size_t n, std::initializer_list<complex> row_major) : n_(n), a_(row_major) {
    if (a_.size() != n * n) throw dimension_error("cmatrix: expected " + std::to_string(n * n) + " entries");
}

cmatrix::cmatrix(std::size_t n, std::vector<complex> row_major) : n_(n), a_(std::move(row_major)) {
    if (a_.size() != n * n) throw dimension_error("cmatrix: expected " + std::to_string(n * n) + " entries");
}

cmatrix cmatrix::identity(std::size_t n) {
    cmatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

cmatrix cmatrix::diagonal(const std::vector<complex>& d) {
    cmatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

cmatrix cmatrix::adjoint() const {
    cmatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cmatrix cmatrix::transpose() const {
    cmatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

complex cmatrix::trace() const {
    complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool cmatrix::finite() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

cmatrix& cmatrix::operator+=(const cmatrix& b) {
    require_same(*this, b, "add");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
}

cmatrix& cmatrix::operator-=(const cmatrix& b) {
    require_same(*this, b, "subtract");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
    return *this;
}

cmatrix& cmatrix::operator*=(complex s) {
    for (auto& z : a_) z *= s;
    return *this;
}

cmatrix operator+(cmatrix a, const cmatrix& b) { return a += b; }
cmatrix operator-(cmatrix a, const cmatrix& b) { return a -= b; }
cmatrix operator*(complex s, cmatrix a) { return a *= s; }
cmatrix operator*(cmatrix a, complex s) { return a *= s; }

cmatrix operator*(const cmatrix& a, const cmatrix& b) {
    require_same(a, b, "multiply");
    const std::size_t n = a.dim();
    cmatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const complex aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

complex trace_adjoint_product(const cmatrix& a, const cmatrix& b) {
    require_same(a, b, "trace_adjoint_product");
    complex t = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) t += std::conj(a.data()[i]) * b.data()[i];
    return t;
}

cmatrix kron(const cmatrix& a, const cmatrix& b) {
    const std::size_t n = a.dim(), m = b.dim();
    cmatrix r(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) r(i * m + k, j * m + l) = a(i, j) * b(k, l);
    return r;
}

cmatrix power(const cmatrix& a, int k) {
    if (k < 0) throw domain_error("power: negative exponent " + std::to_string(k));
    cmatrix r = cmatrix::identity(a.dim());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

cmatrix commutator(const cmatrix& a, const cmatrix& b) { return a * b - b * a; }
cmatrix anticommutator(const cmatrix& a, const cmatrix& b) { return a * b + b * a; }

cmatrix outer(const std::vector<complex>& ket, const std::vector<complex>& bra) {
    if (ket.size() != bra.size()) throw dimension_error("outer: length mismatch");
    cmatrix r(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < bra.size(); ++j) r(i, j) = ket[i] * std::conj(bra[j]);
    return r;
}

std::vector<complex> apply(const cmatrix& a, const std::vector<complex>& v) {
    if (a.dim() != v.size())
        throw dimension_error("apply: matrix " + std::to_string(a.dim()) + " vs vector " + std::to_string(v.size()));
    std::vector<complex> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

double max_abs(const cmatrix& a) {
    double m = 0.0;
    for (const auto& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const cmatrix& a, const cmatrix& b) {
    require_same(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

double hermiticity_error(const cmatrix& a) { return max_abs_diff(a, a.adjoint()); }

std::vector<double> hermitian_eigenvalues(const cmatrix& a, double herm_tol) {
    const double asym = hermiticity_error(a);
    if (asym > herm_tol)
        throw validation_error("hermitian_eigenvalues: input is not Hermitian",
                               {"max |a - a^dag| = " + shortest(asym)});
    const std::size_t n = a.dim();
    cmatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i).real();

    double scale = std::max(max_abs(m), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(m(p, q));
        if (std::sqrt(off) <= 1e-17 * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(m(p, q));
                if (r <= 1e-300) continue;
                const complex ph = m(p, q) / r;  // e^{i phi}
                const double theta = (m(q, q).real() - m(p, p).real()) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const complex phc = std::conj(ph);
                for (std::size_t k = 0; k < n; ++k) {
                    const complex kp = m(k, p), kq = m(k, q);
                    m(k, p) = c * kp - s * phc * kq;
                    m(k, q) = s * kp + c * phc * kq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const complex pk = m(p, k), qk = m(q, k);
                    m(p, k) = c * pk - s * ph * qk;
                    m(q, k) = s * pk + c * ph * qk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double default_tolerance() {
    const char* env = std::getenv("DWIGNER_TOLERANCE");
    if (env == nullptr) return 1e-10;
    double v = 0.0;
    const char* end = env + std::strlen(env);
    auto res = std::from_chars(env, end, v);
    if (res.ec != std::errc{} || res.ptr != end || !(v > 0.0) || !std::isfinite(v)) return 1e-10;
    return v;
}

density_check check_density(const cmatrix& m, double tol) {
    density_check out;
    if (m.dim() == 0) {
        out.issues.push_back("dimension: empty matrix");
        return out;
    }
    if (!m.finite()) {
        out.issues.push_back("entries: non-finite value present");
        return out;
    }
    out.hermiticity = hermiticity_error(m);
    if (out.hermiticity > tol)
        out.issues.push_back("hermiticity: max |rho - rho^dag| = " + shortest(out.hermiticity) + " exceeds " +
                             shortest(tol));
    out.trace_error = std::abs(m.trace() - 1.0);
    if (out.trace_error > tol)
        out.issues.push_back("trace: |Tr rho - 1| = " + shortest(out.trace_error) + " exceeds " + shortest(tol));
    cmatrix h = 0.5 * (m + m.adjoint());
    out.eigenvalues = hermitian_eigenvalues(h, std::numeric_limits<double>::infinity());
    out.min_eigenvalue = out.eigenvalues.front();
    if (out.min_eigenvalue < -tol)
        out.issues.push_back("positivity: eigenvalue " + shortest(out.min_eigenvalue) + " below -" + shortest(tol));
    return out;
}

density_matrix validate_density(const cmatrix& m, double tol) {
    density_check c = check_density(m, tol);
    if (!c.ok()) throw validation_error("invalid density matrix", c.issues);
    return density_matrix(m, tol);
}

density_matrix pure_state(const std::vector<complex>& amplitudes) {
    double norm = 0.0;
    for (const auto& z : amplitudes) norm += std::norm(z);
    if (std::abs(norm - 1.0) > 1e-12)
        throw validation_error("pure_state: amplitudes not normalized", {"sum |a|^2 = " + shortest(norm)});
    return validate_density(outer(amplitudes, amplitudes), 1e-10);
}

double purity(const density_matrix& rho) {
    return trace_adjoint_product(rho.matrix(), rho.matrix()).real();
}

positivity_report positivity_inequalities(const cmatrix& rho) {
    if (rho.dim() != 4)
        throw dimension_error("positivity_inequalities: expected dimension 4, got " + std::to_string(rho.dim()));
    const cmatrix r2 = rho * rho;
    const cmatrix r3 = r2 * rho;
    positivity_report out;
    out.trace_sq = r2.trace().real();
    out.trace_cube = r3.trace().real();
    out.trace_fourth = (r2 * r2).trace().real();
    constexpr double slack = 1e-10;
    const double p2 = out.trace_sq, p3 = out.trace_cube, p4 = out.trace_fourth;
    out.ineq1 = p2 <= 1.0 + slack;
    out.ineq2 = p3 >= 1.5 * p2 - 0.5 - slack;
    out.ineq3 = p4 <= 1.0 / 6.0 - p2 + 0.5 * p2 * p2 + (4.0 / 3.0) * p3 + slack;
    return out;
}

}  // namespace dwig
