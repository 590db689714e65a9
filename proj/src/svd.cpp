#include "sendov/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sendov {

Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix t(a[0].size(), std::vector<double>(a.size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

SvdResult jacobi_svd(const Matrix& a) {
    if (a.empty() || a[0].empty()) throw std::invalid_argument("jacobi_svd: empty matrix");
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("jacobi_svd: ragged matrix");

    // Column-major working copy; V accumulates the right rotations.
    std::vector<std::vector<double>> col(cols, std::vector<double>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) col[j][i] = a[i][j];
    std::vector<std::vector<double>> v(cols, std::vector<double>(cols, 0.0));
    for (std::size_t j = 0; j < cols; ++j) v[j][j] = 1.0;

    const double tol = 1e-15;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const double app = std::inner_product(col[p].begin(), col[p].end(),
                                                      col[p].begin(), 0.0);
                const double aqq = std::inner_product(col[q].begin(), col[q].end(),
                                                      col[q].begin(), 0.0);
                const double apq = std::inner_product(col[p].begin(), col[p].end(),
                                                      col[q].begin(), 0.0);
                if (std::abs(apq) <= tol * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, zeta) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < rows; ++i) {
                    const double xp = col[p][i];
                    const double xq = col[q][i];
                    col[p][i] = c * xp - s * xq;
                    col[q][i] = s * xp + c * xq;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    const double vp = v[p][i];
                    const double vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norms(cols);
    for (std::size_t j = 0; j < cols; ++j)
        norms[j] = std::sqrt(
            std::inner_product(col[j].begin(), col[j].end(), col[j].begin(), 0.0));
    std::stable_sort(order.begin(), order.end(),
                     [&norms](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

    SvdResult out;
    out.singular_values.reserve(cols);
    out.right_vectors.reserve(cols);
    for (std::size_t j : order) {
        out.singular_values.push_back(norms[j]);
        out.right_vectors.push_back(v[j]);
    }
    return out;
}

}  // namespace sendov
