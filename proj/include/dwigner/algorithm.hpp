#pragma once

#include <array>
#include <string>
#include <vector>

#include "dwigner/kernel.hpp"
#include "dwigner/matrix.hpp"

namespace dwig {

using state4 = std::array<complex, 4>;

cmatrix fourier4();
// The two cyclic-permutation pulses, labelled 2 and 6.
cmatrix permutation_pulse(int k);

std::array<double, 4> measure_probabilities(const state4& s);

struct algorithm_step {
    std::string label;
    state4 state;
    cmatrix rho;  // after the optional depolarizing mix
    wigner_grid wigner;
};

struct algorithm_trace {
    int pulse = 0;
    double noise = 0.0;
    std::vector<algorithm_step> steps;
    std::array<double, 4> probabilities{};
    int outcome = 0;
    double outcome_probability = 0.0;
    std::string parity;
};

// |1> -> F|1> -> U_k F|1> -> F^dag U_k F|1>, then a measurement in the level basis.
// noise mixes each snapshot as (1 - eps) rho + eps I/4.
algorithm_trace run_parity_algorithm(int k, double noise = 0.0);

}  // namespace dwig
