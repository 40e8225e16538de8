#pragma once

#include <optional>
#include <vector>

#include "ocpoly/rational.hpp"

namespace ocpoly {

using Matrix = std::vector<std::vector<Rational>>;

int rank(Matrix rows);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Rank of the differences p_i - p_0; -1 for an empty list.
int affine_rank(const std::vector<const Point*>& points);

}  // namespace ocpoly
