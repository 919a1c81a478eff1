#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tautpoly {

using Int = mpz_class;

// Exponent vector of a Laurent monomial; length = rank of the ambient group.
using ExpVec = std::vector<int>;

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
ExpVec exp_neg(const ExpVec& a);

// Multivariate Laurent polynomial over the integers.
// Invariant: no zero coefficients are stored; all keys have length `rank`.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int rank) : rank_(rank) {}
    LaurentPoly(int rank, const Int& constant);

    static LaurentPoly monomial(int rank, const ExpVec& e, const Int& c = 1);
    // Single-variable convenience: c * u_var^k.
    static LaurentPoly var_pow(int rank, int var, int k, const Int& c = 1);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Int>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiply by the single term c * u^e.
    LaurentPoly mul_term(const ExpVec& e, const Int& c) const;

    // Componentwise minimal exponent over all terms (zero poly -> all zero).
    ExpVec min_exponents() const;
    ExpVec max_exponents() const;

    // Unit classes are represented by: minimal exponent 0 in every variable and
    // positive coefficient on the lexicographically greatest monomial.
    friend LaurentPoly lp_normalize(const LaurentPoly& p);

    // True if this is +-(single monomial with coefficient 1).
    bool is_unit() const;

    std::string to_string() const;
    // Machine form: one line per term, "<coeff> <e_1> ... <e_r>".
    std::string to_pair_string() const;

private:
    int rank_ = 0;
    std::map<ExpVec, Int> terms_;
};

LaurentPoly lp_normalize(const LaurentPoly& p);

// gcd in Z[u_1^-1..u_r^-1], normalized; gcd(p, 0) = lp_normalize(p).
LaurentPoly lp_gcd(const LaurentPoly& p, const LaurentPoly& q);

// Exact division in the Laurent ring; nullopt when q does not divide p.
std::optional<LaurentPoly> lp_divexact(const LaurentPoly& p, const LaurentPoly& q);

bool lp_divides(const LaurentPoly& d, const LaurentPoly& p);

// Ring homomorphism induced by the exponent map v -> v^T M, where M is an
// r x r' integer matrix given in row-major order (rows = source variables).
LaurentPoly lp_substitute(const LaurentPoly& p, const std::vector<std::vector<int>>& M);

// Exponent inversion u_i -> u_i^-1.
LaurentPoly lp_invert_vars(const LaurentPoly& p);

// True iff p and q agree after normalization.
bool lp_unit_equal(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace tautpoly
