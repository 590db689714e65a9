#pragma once

#include <vector>

namespace sendov {

using Matrix = std::vector<std::vector<double>>;  // row-major, rectangular

/// One-sided Jacobi SVD of a small dense matrix A (rows x cols).
/// singular_values are sorted descending (cols of them); right_vectors[k]
/// is the matching right singular vector, so A * v_k has norm sigma_k.
/// Deterministic: fixed cyclic sweep order, no pivoting.
struct SvdResult {
    std::vector<double> singular_values;
    std::vector<std::vector<double>> right_vectors;
};

SvdResult jacobi_svd(const Matrix& a);

Matrix transpose(const Matrix& a);

}  // namespace sendov
