#include "roots/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace roots {

Matrix make_matrix(std::size_t rows, std::size_t cols) {
    return Matrix(rows, Vec(cols, Rational(0)));
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0)
                continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

std::size_t matrix_rank(Matrix m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t row = rank + 1; row < rows; ++row) {
            if (m[row][col] == 0)
                continue;
            const Rational factor = m[row][col] / m[rank][col];
            for (std::size_t k = col; k < cols; ++k)
                m[row][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::optional<Vec> solve_linear(Matrix a, Vec b) {
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_linear: size mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

std::optional<Matrix> invert(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix result = make_matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        Vec e(n, Rational(0));
        e[col] = 1;
        auto x = solve_linear(m, e);
        if (!x)
            return std::nullopt;
        for (std::size_t row = 0; row < n; ++row)
            result[row][col] = (*x)[row];
    }
    return result;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    Matrix result = make_matrix(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        assert(a[i].size() == inner);
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                result[i][j] += a[i][k] * b[k][j];
        }
    }
    return result;
}

Matrix transpose(const Matrix& m) {
    if (m.empty())
        return {};
    Matrix result = make_matrix(m[0].size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            result[j][i] = m[i][j];
    return result;
}

}  // namespace roots
