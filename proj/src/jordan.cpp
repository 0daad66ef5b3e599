#include "ellvb/jordan.hpp"

#include <algorithm>
#include <cmath>

#include "ellvb/errors.hpp"

namespace ellvb {

int numeric_rank(const ConstMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ConstMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

namespace {

// dims[k] = dim ker(N^k) for k = 0..kmax. Built one step at a time:
// ker N^k = { x : (I - Q Q^*) N x = 0 } with Q an orthonormal basis of
// ker N^{k-1}, so every SVD sees a matrix of the same scale as N and no
// power of N is ever formed.
std::vector<int> kernel_dims(const ConstMatrix& nil, int kmax, double tol) {
  const int n = static_cast<int>(nil.rows());
  const double cut = tol * std::max(1.0, nil.norm());
  std::vector<int> dims{0};
  ConstMatrix basis(n, 0);
  for (int k = 1; k <= kmax; ++k) {
    const ConstMatrix proj =
        ConstMatrix::Identity(n, n) - basis * basis.adjoint();
    Eigen::JacobiSVD<ConstMatrix> svd(proj * nil, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cut) ++rank;
    basis = svd.matrixV().rightCols(n - rank);
    dims.push_back(n - rank);
  }
  return dims;
}

Partition partition_from_kernels(const std::vector<int>& dims, int mult) {
  // Blocks of size >= j number dims[j] - dims[j-1]; the rank sequence
  // r_k = n - dims[k] gives c_j = r_{j-1} - 2 r_j + r_{j+1}.
  Partition out;
  for (int j = 1; j <= mult; ++j) {
    const int blocks = 2 * dims[j] - dims[j - 1] - dims[j + 1];
    for (int b = 0; b < blocks; ++b) out.push_back(j);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

Partition jordan_type_unipotent(const ConstMatrix& n, Complex lambda) {
  if (n.rows() != n.cols()) throw ShapeError("matrix must be square");
  const int dim = static_cast<int>(n.rows());
  const ConstMatrix shifted = n - lambda * ConstMatrix::Identity(dim, dim);
  const auto dims = kernel_dims(shifted, dim + 1, 1e-9);
  if (dims[dim] != dim)
    throw NotNilpotent("N - lambda I is not nilpotent to tolerance");
  return partition_from_kernels(dims, dim);
}

std::vector<EigenBlock> jordan_structure_triangular(const ConstMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("matrix must be square");
  const int n = static_cast<int>(m.rows());
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(m(i, j)) > 1e-12 * scale)
        throw ShapeError("Jordan structure requires an upper-triangular matrix");

  std::vector<EigenBlock> out;
  std::vector<int> mult;
  for (int i = 0; i < n; ++i) {
    const Complex d = m(i, i);
    auto it = std::find_if(out.begin(), out.end(), [&](const EigenBlock& b) {
      return std::abs(b.eigenvalue - d) <= 1e-8 * std::max(1.0, std::abs(d));
    });
    if (it == out.end()) {
      out.push_back({d, {}});
      mult.push_back(1);
    } else {
      ++mult[it - out.begin()];
    }
  }
  for (size_t c = 0; c < out.size(); ++c) {
    const ConstMatrix shifted = m - out[c].eigenvalue * ConstMatrix::Identity(n, n);
    out[c].partition =
        partition_from_kernels(kernel_dims(shifted, mult[c] + 1, 1e-9), mult[c]);
  }
  return out;
}

}  // namespace ellvb
