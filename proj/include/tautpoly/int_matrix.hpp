#pragma once

#include "tautpoly/laurent.hpp"

#include <vector>

namespace tautpoly {

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Int>(cols, 0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[i][j]; }
    const Int& at(int i, int j) const { return a_[i][j]; }

    static IntMatrix identity(int n);
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // determinant by fraction-free elimination (used for unimodularity checks)
    Int det() const;

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<Int>> a_;
};

// S = U * A * V with U, V unimodular, S diagonal with d_1 | d_2 | ...,
// nonnegative diagonal, zero rows/columns last.
struct SnfResult {
    IntMatrix S, U, V;
    int rank = 0;  // number of nonzero diagonal entries
};

// Deterministic: pivot of smallest nonzero absolute value, scanning rows then
// columns, lowest index on ties.
SnfResult smith_normal_form(const IntMatrix& A);

}  // namespace tautpoly
