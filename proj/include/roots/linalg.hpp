#pragma once

#include "roots/rational.hpp"

#include <optional>
#include <vector>

namespace roots {

// Small dense exact linear algebra over the rationals. Everything here is
// plain Gaussian elimination with exact pivoting; dimensions in this library
// never exceed a dozen, so asymptotics are irrelevant and exactness is not.
using Matrix = std::vector<Vec>;

Matrix make_matrix(std::size_t rows, std::size_t cols);

Rational determinant(Matrix m);

std::size_t matrix_rank(Matrix m);

// Solves a*x = b for square a; empty result if a is singular.
std::optional<Vec> solve_linear(Matrix a, Vec b);

// Inverse of a square nonsingular matrix; empty if singular.
std::optional<Matrix> invert(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

}  // namespace roots
