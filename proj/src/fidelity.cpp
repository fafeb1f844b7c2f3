#include "dwigner/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dwigner/error.hpp"
#include "dwigner/kernel.hpp"
#include "dwigner/two_qubit.hpp"

namespace dwig {

namespace {

double combine(double overlap, double pa, double pb) {
    return overlap + std::sqrt(std::max(0.0, 1 - pa) * std::max(0.0, 1 - pb));
}

std::string mismatch(const density_matrix& a, const density_matrix& b) {
    return "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ";
}

}  // namespace

double super_fidelity(const density_matrix& a, const density_matrix& b) {
    if (a.dim() != b.dim()) throw dimension_error("super_fidelity: " + mismatch(a, b));
    double overlap = trace_adjoint_product(a.matrix(), b.matrix()).real();
    return combine(overlap, purity(a), purity(b));
}

double super_fidelity_from_grids(const density_matrix& a, const density_matrix& b) {
    if (a.dim() != b.dim()) throw dimension_error("super_fidelity_from_grids: " + mismatch(a, b));
    if (a.dim() == 4) {
        pair_grid wa = wigner_pair_kernel(a.matrix());
        pair_grid wb = wigner_pair_kernel(b.matrix());
        return combine(pair_overlap(wa, wb), pair_overlap(wa, wa), pair_overlap(wb, wb));
    }
    const mapping_kernel& k = kernel(a.dim());
    wigner_grid wa = wigner_function(a, k);
    wigner_grid wb = wigner_function(b, k);
    return combine(overlap_from_grids(wa, wb), overlap_from_grids(wa, wa), overlap_from_grids(wb, wb));
}

}  // namespace dwig
