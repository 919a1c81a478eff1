#pragma once

#include "tautpoly/laurent.hpp"

#include <vector>

namespace tautpoly {

// Matrix over Z[u_1^-1..u_r^-1]; all entries share one rank.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int rows, int cols, int rank)
        : rows_(rows), cols_(cols), rank_(rank), a_(rows, std::vector<LaurentPoly>(cols, LaurentPoly(rank))) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int rank() const { return rank_; }
    LaurentPoly& at(int i, int j) { return a_[i][j]; }
    const LaurentPoly& at(int i, int j) const { return a_[i][j]; }

    LaurentMatrix drop_column(int j) const;
    LaurentMatrix select_columns(const std::vector<int>& cols) const;

private:
    int rows_ = 0, cols_ = 0, rank_ = 0;
    std::vector<std::vector<LaurentPoly>> a_;
};

// Number of threads used by the parallel kernels (determinant row updates,
// maximal-minor batches, census scans). 1 = serial. Defaults to the OpenMP
// runtime default.
void set_threads(int n);
int get_threads();

// Exact determinant: fraction-free Bareiss elimination with exact division,
// cofactor expansion below 4x4. Sign and monomial are preserved.
LaurentPoly laurent_det(const LaurentMatrix& M);

// Normalized gcd of the n+1 maximal minors of an n x (n+1) matrix.
LaurentPoly maximal_minors_gcd(const LaurentMatrix& M);

// Serial reference used by the tests and the benchmark; computes the same
// value as maximal_minors_gcd on one thread regardless of set_threads().
LaurentPoly maximal_minors_gcd_serial(const LaurentMatrix& M);

}  // namespace tautpoly
