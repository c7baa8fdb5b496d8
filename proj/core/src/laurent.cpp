#include "uqp/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace uqp {

void LaurentPoly::set(long e, const BigRat& c) {
    if (c == 0) coeffs_.erase(e);
    else coeffs_[e] = c;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentPoly::lowest_exp() const {
    if (is_zero()) throw std::logic_error("lowest_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::highest_exp() const {
    if (is_zero()) throw std::logic_error("highest_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

BigRat LaurentPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? BigRat(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) coeffs_[e] = c;
        else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) coeffs_[e] = -c;
        else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) r.coeffs_[e] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigRat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k + e] = c;
    return r;
}

LaurentPoly LaurentPoly::inverted_q() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

namespace {

// Dense ordinary-polynomial view: v[i] is the coefficient of q^i after
// shifting the lowest exponent to 0.
std::vector<BigRat> dense_of(const LaurentPoly& p, long& shift) {
    shift = p.lowest_exp();
    std::vector<BigRat> v(static_cast<std::size_t>(p.highest_exp() - shift) + 1, BigRat(0));
    for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e - shift)] = c;
    return v;
}

LaurentPoly of_dense(const std::vector<BigRat>& v, long shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p += LaurentPoly::monomial(shift + static_cast<long>(i), v[i]);
    return p;
}

std::size_t dense_deg(const std::vector<BigRat>& v) {
    std::size_t d = v.size();
    while (d > 0 && v[d - 1] == 0) --d;
    return d; // number of meaningful entries; degree + 1, 0 for the zero poly
}

// Euclidean remainder sequence step: a -= (lead(a)/lead(b)) q^(da-db) * b.
// Returns quotient through `quot` if requested.
void dense_divmod(std::vector<BigRat> a, const std::vector<BigRat>& b,
                  std::vector<BigRat>* quot, std::vector<BigRat>* rem) {
    std::size_t db = dense_deg(b);
    if (db == 0) throw std::domain_error("polynomial division by zero");
    std::size_t da = dense_deg(a);
    std::vector<BigRat> q(da >= db ? da - db + 1 : 1, BigRat(0));
    while ((da = dense_deg(a)) >= db && da > 0) {
        BigRat f = a[da - 1] / b[db - 1];
        std::size_t off = da - db;
        q[off] = f;
        for (std::size_t i = 0; i < db; ++i) a[off + i] -= f * b[i];
        a[da - 1] = 0; // kill rounding-free leading term exactly
    }
    if (quot) *quot = std::move(q);
    if (rem) *rem = std::move(a);
}

} // namespace

bool LaurentPoly::try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) { quot = LaurentPoly(); return true; }
    long sa, sb;
    auto da = dense_of(a, sa);
    auto db = dense_of(b, sb);
    std::vector<BigRat> q, r;
    dense_divmod(da, db, &q, &r);
    if (dense_deg(r) != 0) return false;
    quot = of_dense(q, sa - sb);
    return true;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q;
    if (!try_divide(a, b, q)) throw std::logic_error("non-exact polynomial division");
    return q;
}

BigRat LaurentPoly::content_signed() const {
    if (is_zero()) return BigRat(0);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : coeffs_) {
        (void)e;
        BigInt n = c.get_num(), d = c.get_den();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    BigRat c = make_rat(num_gcd, den_lcm);
    if (leading_coeff() < 0) c = -c;
    return c;
}

LaurentPoly LaurentPoly::primitive_part() const {
    if (is_zero()) return LaurentPoly();
    return scaled(BigRat(1) / content_signed());
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return b.shifted(-b.lowest_exp()).primitive_part();
    if (b.is_zero()) return a.shifted(-a.lowest_exp()).primitive_part();
    long sa, sb;
    auto da = dense_of(a, sa);
    auto db = dense_of(b, sb);
    // plain Euclid over Q on the shifted ordinary polynomials
    while (dense_deg(db) != 0) {
        std::vector<BigRat> r;
        dense_divmod(da, db, nullptr, &r);
        da = std::move(db);
        db = std::move(r);
    }
    LaurentPoly g = of_dense(da, 0);
    g = g.shifted(-g.lowest_exp());
    return g.primitive_part();
}

LaurentPoly LaurentPoly::lcm(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    LaurentPoly g = gcd(a, b);
    LaurentPoly l = div_exact(a * b, g);
    l = l.shifted(-l.lowest_exp());
    return l.primitive_part();
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const long e = it->first;
        BigRat c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << rat_str(c);
        } else {
            if (c != 1) os << rat_str(c) << "*";
            if (e == 1) os << "q";
            else os << "q^" << e;
        }
    }
    return os.str();
}

LaurentPoly q_int(long n, long d) {
    if (n < 0) throw std::invalid_argument("q_int: n must be non-negative");
    if (d == 0) throw std::invalid_argument("q_int: d must be nonzero");
    LaurentPoly r;
    for (long j = 0; j < n; ++j) r += LaurentPoly::q_power(d * (n - 1 - 2 * j));
    return r;
}

LaurentPoly q_factorial(long n, long d) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be non-negative");
    if (d == 0) throw std::invalid_argument("q_factorial: d must be nonzero");
    LaurentPoly r(1);
    for (long m = 1; m <= n; ++m) r *= q_int(m, d);
    return r;
}

LaurentPoly q_binom(long n, long k, long d) {
    if (k < 0 || k > n) throw std::invalid_argument("q_binom: k out of range");
    if (d == 0) throw std::invalid_argument("q_binom: d must be nonzero");
    return LaurentPoly::div_exact(q_factorial(n, d), q_factorial(k, d) * q_factorial(n - k, d));
}

} // namespace uqp
