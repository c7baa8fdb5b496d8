#ifndef UQP_RATFUNC_HPP
#define UQP_RATFUNC_HPP

#include <string>

#include "uqp/laurent.hpp"

namespace uqp {

/// Element of the rational function field Q(q), stored as a canonical
/// numerator/denominator pair of Laurent polynomials.
///
/// Canonical form: the pair is gcd-free, the denominator is an ordinary
/// polynomial with lowest exponent 0, coprime integer coefficients and
/// positive leading coefficient. Equality is decided structurally.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const BigRat& c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc q_power(long e) { return RatFunc(LaurentPoly::q_power(e)); }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    /// The underlying Laurent polynomial; throws if the denominator is nontrivial.
    const LaurentPoly& as_laurent() const;
    /// True when the value is c*q^e for a single rational c.
    bool is_monomial() const { return den_.is_one() && num_.term_count() == 1; }

    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

} // namespace uqp

#endif
