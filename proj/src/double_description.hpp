#pragma once

#include "tropix/linalg.hpp"

namespace tropix::detail {

/// Extreme rays (primitive integer, lexicographically sorted) of the cone
/// {x : row·x <= 0 for every row}. The cone must be pointed: rank(rows) == dim.
/// Rows are inserted in the given order (Motzkin double description with the
/// combinatorial adjacency test).
std::vector<Vec> extreme_rays(const Matrix& rows, std::size_t dim);

} // namespace tropix::detail
