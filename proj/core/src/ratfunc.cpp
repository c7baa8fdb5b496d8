#include "uqp/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace uqp {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    long sn = num_.lowest_exp(), sd = den_.lowest_exp();
    LaurentPoly n0 = num_.shifted(-sn), d0 = den_.shifted(-sd);
    LaurentPoly g = LaurentPoly::gcd(n0, d0);
    if (!g.is_one()) {
        n0 = LaurentPoly::div_exact(n0, g);
        d0 = LaurentPoly::div_exact(d0, g);
    }
    BigRat c = d0.content_signed();
    d0 = d0.scaled(BigRat(1) / c);
    n0 = n0.scaled(BigRat(1) / c);
    num_ = n0.shifted(sn - sd);
    den_ = d0;
}

const LaurentPoly& RatFunc::as_laurent() const {
    if (!den_.is_one()) throw std::logic_error("RatFunc with nontrivial denominator is not a Laurent polynomial");
    return num_;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(q)");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(q)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    if (num_.term_count() == 1 && num_.leading_coeff() > 0) os << num_.str();
    else os << "(" << num_.str() << ")";
    os << "/(" << den_.str() << ")";
    return os.str();
}

} // namespace uqp
