#ifndef UQP_RATIONAL_HPP
#define UQP_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace uqp {

using BigInt = mpz_class;
// Always kept canonical: lowest terms, denominator > 0.
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat make_rat(long num, long den = 1) {
    return make_rat(BigInt(num), BigInt(den));
}

inline std::string rat_str(const BigRat& r) { return r.get_str(); }

} // namespace uqp

#endif
