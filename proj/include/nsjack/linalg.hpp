#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace nsjack {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly by Gaussian elimination.  A may have more rows
/// than columns; the system must have full column rank and be consistent.
inline std::vector<Rational> solve_linear(RationalMatrix A, std::vector<Rational> b)
{
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    if (b.size() != rows)
        throw DimensionError("solve_linear: right-hand side length mismatch");
    std::size_t r = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0)
            ++p;
        if (p == rows)
            throw SingularBasisError("singular system (column " + std::to_string(c) + ")");
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0)
                continue;
            Rational f = A[i][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j)
                A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            throw ArithmeticError("solve_linear: inconsistent system");
    std::vector<Rational> x(cols);
    for (std::size_t c = 0; c < cols; ++c)
        x[c] = b[pivot_row[c]] / A[pivot_row[c]][c];
    return x;
}

} // namespace nsjack
