#pragma once

#include <optional>
#include <vector>

#include "weylkit/intmatrix.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

// Searches for w with w.v = 0 for every eq row and w.v > 0 for every pos row.
// Exact Fourier-Motzkin over Q; returns the witness or nullopt (infeasible).
// All rows must share one length.
std::optional<std::vector<Rat>> strict_feasible(
    const std::vector<std::vector<Int>>& eq_rows,
    const std::vector<std::vector<Int>>& pos_rows);

}  // namespace weylkit
