#ifndef UQP_TENSOR_HPP
#define UQP_TENSOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uqp/braiding.hpp"
#include "uqp/ratfunc.hpp"

namespace uqp {

/// Word in the letters {0,...,n-1}; basis element of the tensor algebra.
using Word = std::vector<int>;

std::vector<int> multidegree(const Word& w, int n);
/// All words with the given letter counts, in lexicographic order.
std::vector<Word> words_of_multidegree(const std::vector<int>& mu);

/// Homogeneous element of T(V): sparse combination of words of one length.
class TensorElement {
public:
    TensorElement() = default;
    explicit TensorElement(int degree) : degree_(degree) {}
    static TensorElement single(const Word& w, RatFunc c = RatFunc(1));

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(const Word& w) const;

    void add(const Word& w, const RatFunc& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { a += b; return a; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { a -= b; return a; }
    TensorElement scaled(const RatFunc& c) const;
    /// Concatenation product of T(V).
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string str() const; // e.g. "x1*x1*x2 - (q^2 + q^-2)*x1*x2*x1 + x2*x1*x1"

private:
    int degree_ = 0;
    std::map<Word, RatFunc> terms_;
};

/// Sparse element of T(V) (x) T(V).
using TensorSquare = std::map<std::pair<Word, Word>, RatFunc>;

/// Braided coproduct by q-shuffle expansion: for each subset S of positions,
/// the left tensor factor collects the letters at S and the braiding factor is
/// the product of q_{w_a, w_p} over pairs a not in S, p in S with a < p.
TensorSquare braided_coproduct(const TensorElement& t, const BraidingMatrix& b);

/// Product on T(V) (x) T(V) twisted by the braiding:
/// (x (x) y)(u (x) v) = q-factor * xu' (x) y'v with c~(y (x) u) = u' (x) y'.
/// Used as an independent oracle for the coproduct's multiplicativity.
TensorSquare twisted_product(const TensorSquare& a, const TensorSquare& b,
                             const BraidingMatrix& braiding);

/// True iff Delta(t) = t (x) 1 + 1 (x) t; t must be homogeneous of degree >= 1.
bool is_primitive(const TensorElement& t, const BraidingMatrix& b);

} // namespace uqp

#endif
