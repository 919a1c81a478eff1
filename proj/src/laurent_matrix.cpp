#include "tautpoly/laurent_matrix.hpp"

#include <omp.h>

#include <atomic>
#include <stdexcept>

namespace tautpoly {

LaurentMatrix LaurentMatrix::drop_column(int j) const {
    LaurentMatrix r(rows_, cols_ - 1, rank_);
    for (int i = 0; i < rows_; ++i) {
        int c = 0;
        for (int k = 0; k < cols_; ++k) {
            if (k == j) continue;
            r.at(i, c++) = a_[i][k];
        }
    }
    return r;
}

LaurentMatrix LaurentMatrix::select_columns(const std::vector<int>& cols) const {
    LaurentMatrix r(rows_, (int)cols.size(), rank_);
    for (int i = 0; i < rows_; ++i)
        for (int c = 0; c < (int)cols.size(); ++c) r.at(i, c) = a_[i][cols[c]];
    return r;
}

namespace {
int g_threads = 0;  // 0 = runtime default
}

void set_threads(int n) { g_threads = n > 0 ? n : 0; }

int get_threads() {
    if (g_threads > 0) return g_threads;
    return omp_get_max_threads();
}

namespace {

LaurentPoly det_bareiss(const LaurentMatrix& M) {
    const int n = M.rows();
    LaurentMatrix A = M;
    LaurentPoly prev(M.rank(), 1);
    int sign = 1;
    const int nthreads = get_threads();
    for (int k = 0; k + 1 < n; ++k) {
        // pivot: fewest terms, lowest row index
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (A.at(i, k).is_zero()) continue;
            if (piv < 0 || A.at(i, k).term_count() < A.at(piv, k).term_count()) piv = i;
        }
        if (piv < 0) return LaurentPoly(M.rank());
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(k, j));
            sign = -sign;
        }
        std::atomic<bool> bad{false};
#pragma omp parallel for collapse(2) schedule(dynamic) num_threads(nthreads) if (nthreads > 1 && n - k > 3)
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                auto q = lp_divexact(num, prev);
                if (!q)
                    bad = true;
                else
                    A.at(i, j) = std::move(*q);
            }
        }
        if (bad) throw std::logic_error("laurent_det: inexact division");
        for (int i = k + 1; i < n; ++i) A.at(i, k) = LaurentPoly(M.rank());
        prev = A.at(k, k);
    }
    LaurentPoly d = A.at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

}  // namespace

LaurentPoly laurent_det(const LaurentMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("laurent_det: not square");
    const int n = M.rows();
    if (n == 0) return LaurentPoly(M.rank(), 1);
    if (n < 4) {
        std::vector<int> cols(n);
        for (int i = 0; i < n; ++i) cols[i] = i;
        // reuse the cofactor routine top-down: rows are consumed from the top
        struct Rec {
            const LaurentMatrix& m;
            LaurentPoly run(int row, std::vector<int> cols) {
                if (cols.size() == 1) return m.at(row, cols[0]);
                LaurentPoly acc(m.rank());
                for (int c = 0; c < (int)cols.size(); ++c) {
                    const LaurentPoly& e = m.at(row, cols[c]);
                    if (e.is_zero()) continue;
                    std::vector<int> rest;
                    for (int j = 0; j < (int)cols.size(); ++j)
                        if (j != c) rest.push_back(cols[j]);
                    LaurentPoly sub = run(row + 1, rest);
                    if (c % 2 == 0)
                        acc += e * sub;
                    else
                        acc -= e * sub;
                }
                return acc;
            }
        } rec{M};
        return rec.run(0, cols);
    }
    return det_bareiss(M);
}

namespace {

LaurentPoly minors_gcd_impl(const LaurentMatrix& M, int nthreads) {
    if (M.cols() != M.rows() + 1) throw std::invalid_argument("maximal_minors_gcd: need n x (n+1)");
    const int k = M.cols();
    std::vector<LaurentPoly> minors(k, LaurentPoly(M.rank()));
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (nthreads > 1)
    for (int j = 0; j < k; ++j) minors[j] = laurent_det(M.drop_column(j));
    LaurentPoly g(M.rank());
    for (const auto& m : minors) {
        g = lp_gcd(g, m);
        if (!g.is_zero() && lp_normalize(g) == LaurentPoly(M.rank(), 1)) break;
    }
    return lp_normalize(g);
}

}  // namespace

LaurentPoly maximal_minors_gcd(const LaurentMatrix& M) { return minors_gcd_impl(M, get_threads()); }

LaurentPoly maximal_minors_gcd_serial(const LaurentMatrix& M) { return minors_gcd_impl(M, 1); }

}  // namespace tautpoly
