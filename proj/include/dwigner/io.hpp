#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "dwigner/kernel.hpp"
#include "dwigner/matrix.hpp"
#include "dwigner/two_qubit.hpp"

namespace dwig {

// Shortest text that parses back to the same double.
std::string format_double(double x);

// {"dim": N, "re": [[...]], "im": [[...]]}; "im" may be omitted for real matrices.
cmatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const cmatrix& m);

enum class grid_format { csv, json, gnuplot };
grid_format parse_grid_format(std::string_view tag);

std::string emit_grid(const wigner_grid& w, grid_format fmt);
std::string emit_grid(const pair_grid& w, grid_format fmt);

using any_grid = std::variant<wigner_grid, pair_grid>;
any_grid parse_grid(std::string_view text, grid_format fmt);

}  // namespace dwig
