#include "dwigner/algorithm.hpp"

#include <algorithm>
#include <cmath>

#include "dwigner/generators.hpp"
#include "numfmt.hpp"

namespace dwig {

namespace {

constexpr complex I{0.0, 1.0};

state4 apply4(const cmatrix& m, const state4& s) {
    const auto v = dwig::apply(m, std::vector<complex>(s.begin(), s.end()));
    return {v[0], v[1], v[2], v[3]};
}

cmatrix projector(const state4& s) {
    const std::vector<complex> v(s.begin(), s.end());
    return outer(v, v);
}

}  // namespace

cmatrix fourier4() {
    return 0.5 * cmatrix(4, {1.0, 1.0, 1.0, 1.0,
                             1.0, I, -1.0, -I,
                             1.0, -1.0, 1.0, -1.0,
                             1.0, -I, -1.0, I});
}

cmatrix permutation_pulse(int k) {
    if (k == 2)
        return cmatrix(4, {0.0, 0.0, 0.0, 1.0,
                           1.0, 0.0, 0.0, 0.0,
                           0.0, 1.0, 0.0, 0.0,
                           0.0, 0.0, 1.0, 0.0});
    if (k == 6)
        return cmatrix(4, {0.0, 0.0, 1.0, 0.0,
                           0.0, 1.0, 0.0, 0.0,
                           1.0, 0.0, 0.0, 0.0,
                           0.0, 0.0, 0.0, 1.0});
    throw domain_error("permutation_pulse: only pulses 2 and 6 are defined, got " + std::to_string(k));
}

std::array<double, 4> measure_probabilities(const state4& s) {
    std::array<double, 4> p{};
    double total = 0.0;
    for (int i = 0; i < 4; ++i) total += p[i] = std::norm(s[i]);
    if (std::abs(total - 1.0) > 1e-12)
        throw validation_error("measure_probabilities: state is not normalized",
                               {"sum |a|^2 = " + detail::shortest(total)});
    return p;
}

algorithm_trace run_parity_algorithm(int k, double noise) {
    if (!(noise >= 0.0 && noise <= 1.0))
        throw domain_error("noise must lie in [0, 1], got " + detail::shortest(noise));
    const cmatrix f = fourier4();
    const cmatrix u = permutation_pulse(k);

    algorithm_trace t;
    t.pulse = k;
    t.noise = noise;
    const cmatrix mixed = cmatrix::identity(4) * complex(0.25);
    auto record = [&](const char* label, const state4& s) {
        cmatrix rho = projector(s) * complex(1.0 - noise) + mixed * complex(noise);
        wigner_grid w = wigner_su4(rho);
        t.steps.push_back({label, s, std::move(rho), std::move(w)});
    };

    state4 s{0.0, 1.0, 0.0, 0.0};
    record("step0_initial", s);
    s = apply4(f, s);
    record("step1_fourier", s);
    s = apply4(u, s);
    record("step2_pulse", s);
    s = apply4(f.adjoint(), s);
    record("step3_inverse_fourier", s);

    t.probabilities = measure_probabilities(s);
    for (int i = 0; i < 4; ++i) t.probabilities[i] = (1.0 - noise) * t.probabilities[i] + noise / 4.0;
    t.outcome = static_cast<int>(std::max_element(t.probabilities.begin(), t.probabilities.end()) -
                                 t.probabilities.begin());
    t.outcome_probability = t.probabilities[t.outcome];
    t.parity = t.outcome == 1 ? "positive" : (t.outcome == 3 ? "negative" : "undetermined");
    return t;
}

}  // namespace dwig
