#pragma once

#include <vector>

#include "imverma/scalar.hpp"

namespace imverma {

/// Basis of { x : A x = 0 } over the exact fraction field, by Gauss-Jordan
/// elimination. Kernel vectors use the standard free-column construction and
/// are returned in free-column order; entries are exact Scalars.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows,
                                           int ncols);

}  // namespace imverma
