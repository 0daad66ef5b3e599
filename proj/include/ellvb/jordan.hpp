#pragma once

#include <vector>

#include "ellvb/laurent_matrix.hpp"

namespace ellvb {

/// Jordan block sizes, sorted descending.
using Partition = std::vector<int>;

/// Rank by singular-value thresholding: sigma > tol * max(1, sigma_max).
int numeric_rank(const ConstMatrix& m, double tol = 1e-9);

/// Jordan partition of N at eigenvalue lambda, where N - lambda I is
/// nilpotent. Uses r_k = rank((N - lambda I)^k) and the block counts
/// c_j = r_{j-1} - 2 r_j + r_{j+1}. Throws NotNilpotent otherwise.
Partition jordan_type_unipotent(const ConstMatrix& n, Complex lambda);

struct EigenBlock {
  Complex eigenvalue;
  Partition partition;
};

/// Jordan structure of an upper-triangular constant matrix. Eigenvalues are
/// read off the diagonal and clustered at relative tolerance 1e-8.
/// Throws ShapeError if the matrix is not upper triangular.
std::vector<EigenBlock> jordan_structure_triangular(const ConstMatrix& m);

}  // namespace ellvb
