#pragma once

#include "dwigner/matrix.hpp"

namespace dwig {

// Tr[rho sigma] + sqrt(1 - Tr rho^2) sqrt(1 - Tr sigma^2)
double super_fidelity(const density_matrix& a, const density_matrix& b);

// Same quantity with every trace taken as a phase-space overlap: the N = 2
// kernel grid for qubits, the tensor-product pair grid for dimension 4.
double super_fidelity_from_grids(const density_matrix& a, const density_matrix& b);

}  // namespace dwig
