#include "tautpoly/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tautpoly {

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec exp_neg(const ExpVec& a) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

LaurentPoly::LaurentPoly(int rank, const Int& constant) : rank_(rank) {
    if (constant != 0) terms_[ExpVec(rank, 0)] = constant;
}

LaurentPoly LaurentPoly::monomial(int rank, const ExpVec& e, const Int& c) {
    assert((int)e.size() == rank);
    LaurentPoly p(rank);
    if (c != 0) p.terms_[e] = c;
    return p;
}

LaurentPoly LaurentPoly::var_pow(int rank, int var, int k, const Int& c) {
    ExpVec e(rank, 0);
    e.at(var) = k;
    return monomial(rank, e, c);
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
    assert((int)e.size() == rank_);
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    assert(rank_ == o.rank_ || is_zero() || o.is_zero());
    if (terms_.empty()) rank_ = o.rank_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return rank_ == o.rank_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::mul_term(const ExpVec& e, const Int& c) const {
    LaurentPoly r(rank_);
    if (c == 0) return r;
    for (const auto& [e1, c1] : terms_) r.terms_.emplace(exp_add(e1, e), c1 * c);
    return r;
}

ExpVec LaurentPoly::min_exponents() const {
    ExpVec m(rank_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

ExpVec LaurentPoly::max_exponents() const {
    ExpVec m(rank_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly lp_normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly r(p.rank_);
    ExpVec shift = exp_neg(p.min_exponents());
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(exp_add(e, shift), c);
    // sign: positive coefficient on the lexicographically greatest monomial
    if (r.terms_.rbegin()->second < 0) {
        for (auto& [e, c] : r.terms_) c = -c;
    }
    return r;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

bool lp_unit_equal(const LaurentPoly& p, const LaurentPoly& q) {
    return lp_normalize(p) == lp_normalize(q);
}

// ---------------------------------------------------------------------------
// exact division and gcd
//
// Both work on "cleared" polynomials (minimal exponent 0 in every variable),
// where Laurent divisibility and ordinary polynomial divisibility coincide.
// ---------------------------------------------------------------------------

namespace {

// quotient of cleared ordinary polynomials, or nullopt
std::optional<LaurentPoly> div_cleared(const LaurentPoly& p, const LaurentPoly& q) {
    const int rank = q.rank();
    LaurentPoly rem = p;
    LaurentPoly quo(rank);
    const auto& qlead = *q.terms().rbegin();  // lex-greatest term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        ExpVec e = exp_sub(rlead.first, qlead.first);
        for (int x : e)
            if (x < 0) return std::nullopt;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rlead.second.get_mpz_t(),
                    qlead.second.get_mpz_t());
        if (r != 0) return std::nullopt;
        quo.add_term(e, c);
        rem -= q.mul_term(e, c);
    }
    return quo;
}

Int int_content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int degree_in(const LaurentPoly& p, int var) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[var]);
    return d;
}

// coefficient of x_var^k, with the var exponent zeroed out
LaurentPoly coeff_of(const LaurentPoly& p, int var, int k) {
    LaurentPoly r(p.rank());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == k) {
            ExpVec e2 = e;
            e2[var] = 0;
            r.add_term(e2, c);
        }
    }
    return r;
}

LaurentPoly shift_var(const LaurentPoly& p, int var, int k) {
    LaurentPoly r(p.rank());
    for (const auto& [e, c] : p.terms()) {
        ExpVec e2 = e;
        e2[var] += k;
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly gcd_cleared(LaurentPoly a, LaurentPoly b);

// content of p viewed as a polynomial in x_var over Z[the other variables]
LaurentPoly poly_content(const LaurentPoly& p, int var) {
    LaurentPoly g(p.rank());
    for (int k = 0; k <= degree_in(p, var); ++k) {
        LaurentPoly c = coeff_of(p, var, k);
        if (c.is_zero()) continue;
        g = gcd_cleared(g, c);
        if (g.terms().size() == 1 && g.terms().begin()->second == 1) {
            bool trivial = true;
            for (int x : g.terms().begin()->first)
                if (x != 0) trivial = false;
            if (trivial) break;
        }
    }
    return g;
}

// pseudo-remainder of a by b in the variable var (deg a >= deg b > 0)
LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b, int var) {
    const int da = degree_in(a, var);
    const int db = degree_in(b, var);
    LaurentPoly lb = coeff_of(b, var, db);
    LaurentPoly r = a;
    int e = da - db + 1;
    while (!r.is_zero() && degree_in(r, var) >= db) {
        const int dr = degree_in(r, var);
        LaurentPoly lr = coeff_of(r, var, dr);
        r = r * lb - shift_var(lr * b, var, dr - db);
        --e;
    }
    for (; e > 0; --e) r = r * lb;
    return r;
}

// gcd of cleared ordinary polynomials (primitive polynomial remainder sequence)
LaurentPoly gcd_cleared(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return lp_normalize(b);
    if (b.is_zero()) return lp_normalize(a);
    const int rank = a.rank();
    // main variable: highest index where either has positive degree
    int var = -1;
    for (int v = rank - 1; v >= 0; --v) {
        if (degree_in(a, v) > 0 || degree_in(b, v) > 0) {
            var = v;
            break;
        }
    }
    if (var < 0) {
        Int g;
        mpz_gcd(g.get_mpz_t(), int_content(a).get_mpz_t(), int_content(b).get_mpz_t());
        return LaurentPoly(rank, g);
    }
    LaurentPoly ca = poly_content(a, var);
    LaurentPoly cb = poly_content(b, var);
    LaurentPoly pa = *div_cleared(a, ca);
    LaurentPoly pb = *div_cleared(b, cb);
    LaurentPoly cg = gcd_cleared(ca, cb);
    if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        LaurentPoly r = pseudo_rem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = *div_cleared(r, poly_content(r, var));
        }
    }
    return lp_normalize(cg * pa);
}

}  // namespace

std::optional<LaurentPoly> lp_divexact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) {
        if (p.is_zero()) return LaurentPoly(p.rank());
        return std::nullopt;
    }
    if (p.is_zero()) return LaurentPoly(q.rank());
    if (p.rank() != q.rank()) throw std::invalid_argument("lp_divexact: rank mismatch");
    ExpVec mp = p.min_exponents();
    ExpVec mq = q.min_exponents();
    LaurentPoly pc = p.mul_term(exp_neg(mp), 1);
    LaurentPoly qc = q.mul_term(exp_neg(mq), 1);
    auto quo = div_cleared(pc, qc);
    if (!quo) return std::nullopt;
    return quo->mul_term(exp_sub(mp, mq), 1);
}

bool lp_divides(const LaurentPoly& d, const LaurentPoly& p) {
    return lp_divexact(p, d).has_value();
}

LaurentPoly lp_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (!p.is_zero() && !q.is_zero() && p.rank() != q.rank())
        throw std::invalid_argument("lp_gcd: rank mismatch");
    if (p.is_zero()) return lp_normalize(q);
    if (q.is_zero()) return lp_normalize(p);
    LaurentPoly pc = p.mul_term(exp_neg(p.min_exponents()), 1);
    LaurentPoly qc = q.mul_term(exp_neg(q.min_exponents()), 1);
    return gcd_cleared(pc, qc);
}

LaurentPoly lp_substitute(const LaurentPoly& p, const std::vector<std::vector<int>>& M) {
    if ((int)M.size() != p.rank() && !p.is_zero())
        throw std::invalid_argument("lp_substitute: dimension mismatch");
    const int out_rank = M.empty() ? 0 : (int)M[0].size();
    for (const auto& row : M)
        if ((int)row.size() != out_rank) throw std::invalid_argument("lp_substitute: ragged matrix");
    LaurentPoly r(out_rank);
    for (const auto& [e, c] : p.terms()) {
        ExpVec img(out_rank, 0);
        for (int i = 0; i < (int)e.size(); ++i)
            for (int j = 0; j < out_rank; ++j) img[j] += e[i] * M[i][j];
        r.add_term(img, c);
    }
    return r;
}

LaurentPoly lp_invert_vars(const LaurentPoly& p) {
    LaurentPoly r(p.rank());
    for (const auto& [e, c] : p.terms()) r.add_term(exp_neg(e), c);
    return r;
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

namespace {

std::string var_name(int rank, int i) {
    if (rank == 1) return "u";
    return "u" + std::to_string(i + 1);
}

std::string monomial_string(int rank, const ExpVec& e) {
    std::string s;
    for (int i = 0; i < rank; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(rank, i);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending lexicographic order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Int& c = it->second;
        const bool neg = c < 0;
        Int ac = abs(c);
        std::string mono = monomial_string(rank_, it->first);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mono.empty()) {
            out += ac.get_str();
        } else {
            if (ac != 1) out += ac.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

std::string LaurentPoly::to_pair_string() const {
    std::ostringstream os;
    os << "rank " << rank_ << " terms " << terms_.size() << "\n";
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        os << it->second.get_str();
        for (int x : it->first) os << " " << x;
        os << "\n";
    }
    return os.str();
}

}  // namespace tautpoly
