#ifndef UQP_LAURENT_HPP
#define UQP_LAURENT_HPP

#include <map>
#include <string>

#include "uqp/rational.hpp"

namespace uqp {

/// Sparse Laurent polynomial in the single indeterminate q over the rationals.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
/// q is never specialized to a number: genericity is modeled by staying in
/// the polynomial ring / its fraction field throughout.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) coeffs_[0] = BigRat(c); }
    LaurentPoly(const BigRat& c) { if (c != 0) coeffs_[0] = c; }

    static LaurentPoly q_power(long e) { return monomial(e, BigRat(1)); }
    static LaurentPoly monomial(long e, const BigRat& c) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return coeffs_.size(); }
    // require !is_zero()
    long lowest_exp() const;
    long highest_exp() const;
    BigRat coeff(long e) const;
    BigRat leading_coeff() const { return coeff(highest_exp()); }
    const std::map<long, BigRat>& terms() const { return coeffs_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly operator-() const;
    LaurentPoly scaled(const BigRat& c) const;
    LaurentPoly shifted(long e) const;  // multiply by q^e

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    // map comparison, used as an arbitrary total order for containers
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ < b.coeffs_;
    }

    /// Substitution q -> q^-1 (negates every exponent).
    LaurentPoly inverted_q() const;

    /// Exact division; throws std::logic_error if the division is not exact.
    static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);
    static bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot);

    /// Canonical gcd: lowest exponent 0, integer coprime coefficients,
    /// positive leading coefficient. gcd(0,0) = 0.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
    static LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b);

    /// Signed content: the rational c with this == c * primitive_part(),
    /// where the primitive part has coprime integer coefficients and
    /// positive leading coefficient. Zero polynomial has content 0.
    BigRat content_signed() const;
    LaurentPoly primitive_part() const;

    /// Canonical text: terms by decreasing exponent, e.g. "q^2 + 1 + q^-2".
    std::string str() const;

private:
    std::map<long, BigRat> coeffs_;
    void set(long e, const BigRat& c);
};

/// Balanced quantum integer [n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}.
LaurentPoly q_int(long n, long d);
/// [n]! in the balanced convention.
LaurentPoly q_factorial(long n, long d);
/// Balanced Gaussian binomial [n over k]_{q^d}, computed by exact division.
LaurentPoly q_binom(long n, long k, long d);

} // namespace uqp

#endif
