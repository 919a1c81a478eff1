#include "tautpoly/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tautpoly {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (a_[i][k] == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a_[i][k] * o.at(k, j);
        }
    return r;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix::det: not square");
    const int n = rows_;
    if (n == 0) return 1;
    auto a = a_;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << a_[i][j].get_str();
        os << "]";
    }
    return os.str();
}

SnfResult smith_normal_form(const IntMatrix& A) {
    const int m = A.rows(), n = A.cols();
    IntMatrix S = A;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < n; ++k) std::swap(S.at(i, k), S.at(j, k));
        for (int k = 0; k < m; ++k) std::swap(U.at(i, k), U.at(j, k));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < m; ++k) std::swap(S.at(k, i), S.at(k, j));
        for (int k = 0; k < n; ++k) std::swap(V.at(k, i), V.at(k, j));
    };
    auto addmul_row = [&](int dst, int src, const Int& c) {
        for (int k = 0; k < n; ++k) S.at(dst, k) += c * S.at(src, k);
        for (int k = 0; k < m; ++k) U.at(dst, k) += c * U.at(src, k);
    };
    auto addmul_col = [&](int dst, int src, const Int& c) {
        for (int k = 0; k < m; ++k) S.at(k, dst) += c * S.at(k, src);
        for (int k = 0; k < n; ++k) V.at(k, dst) += c * V.at(k, src);
    };
    auto negate_row = [&](int i) {
        for (int k = 0; k < n; ++k) S.at(i, k) = -S.at(i, k);
        for (int k = 0; k < m; ++k) U.at(i, k) = -U.at(i, k);
    };

    int k = 0;
    const int kmax = std::min(m, n);
    while (k < kmax) {
        for (;;) {
            // smallest nonzero |entry|, rows then columns, lowest index on ties
            int pi = -1, pj = -1;
            for (int i = k; i < m; ++i)
                for (int j = k; j < n; ++j) {
                    if (S.at(i, j) == 0) continue;
                    if (pi < 0 ||
                        mpz_cmpabs(S.at(i, j).get_mpz_t(), S.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto finished;
            swap_rows(k, pi);
            swap_cols(k, pj);
            bool clean = true;
            for (int i = k + 1; i < m; ++i) {
                if (S.at(i, k) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(i, k).get_mpz_t(), S.at(k, k).get_mpz_t());
                addmul_row(i, k, -q);
                if (S.at(i, k) != 0) clean = false;  // residue becomes the next pivot
            }
            for (int j = k + 1; j < n; ++j) {
                if (S.at(k, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(k, j).get_mpz_t(), S.at(k, k).get_mpz_t());
                addmul_col(j, k, -q);
                if (S.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block by the pivot
            int bi = -1;
            for (int i = k + 1; i < m && bi < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (!mpz_divisible_p(S.at(i, j).get_mpz_t(), S.at(k, k).get_mpz_t())) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            addmul_row(k, bi, 1);
        }
        if (S.at(k, k) < 0) negate_row(k);
        ++k;
    }
finished:;
    SnfResult r;
    r.S = std::move(S);
    r.U = std::move(U);
    r.V = std::move(V);
    r.rank = k;
    return r;
}

}  // namespace tautpoly
