#include "uqp/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uqp {

std::vector<int> multidegree(const Word& w, int n) {
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    for (int l : w) {
        if (l < 0 || l >= n) throw std::invalid_argument("letter out of range");
        ++mu[static_cast<std::size_t>(l)];
    }
    return mu;
}

std::vector<Word> words_of_multidegree(const std::vector<int>& mu) {
    Word sorted;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) throw std::invalid_argument("negative multidegree");
        sorted.insert(sorted.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i));
    }
    std::vector<Word> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

TensorElement TensorElement::single(const Word& w, RatFunc c) {
    TensorElement t(static_cast<int>(w.size()));
    t.add(w, c);
    return t;
}

RatFunc TensorElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatFunc(0) : it->second;
}

void TensorElement::add(const Word& w, const RatFunc& c) {
    if (static_cast<int>(w.size()) != degree_)
        throw std::invalid_argument("word length differs from element degree");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) terms_[w] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o.scaled(RatFunc(-1)); return *this; }
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TensorElement TensorElement::scaled(const RatFunc& c) const {
    TensorElement t(degree_);
    if (c.is_zero()) return t;
    for (const auto& [w, k] : terms_) t.terms_[w] = k * c;
    return t;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement t(a.degree() + b.degree());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            t.add(w, ca * cb);
        }
    return t;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        RatFunc k = c;
        bool neg = k.is_monomial() && k.numerator().leading_coeff() < 0;
        if (neg) k = -k;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string coeff_txt;
        if (k.is_one()) coeff_txt = "";
        else if (k.is_monomial()) coeff_txt = k.str();
        else coeff_txt = "(" + k.str() + ")";
        if (w.empty()) {
            os << (coeff_txt.empty() ? "1" : coeff_txt);
            continue;
        }
        if (!coeff_txt.empty()) os << coeff_txt << "*";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << "*";
            os << "x" << w[i] + 1;
        }
    }
    return os.str();
}

TensorSquare braided_coproduct(const TensorElement& t, const BraidingMatrix& b) {
    TensorSquare out;
    auto add = [&out](const Word& l, const Word& r, const RatFunc& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(l, r);
        auto it = out.find(key);
        if (it == out.end()) out[key] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [w, c] : t.terms()) {
        const std::size_t m = w.size();
        for (std::size_t mask = 0; mask < (1u << m); ++mask) {
            Word left, right;
            RatFunc factor(1);
            for (std::size_t p = 0; p < m; ++p) {
                if (mask & (1u << p)) {
                    // letter at p joins the left factor and moves past every
                    // earlier letter that stays on the right
                    for (std::size_t a = 0; a < p; ++a)
                        if (!(mask & (1u << a)))
                            factor *= b.entry(w[a], w[p]);
                    left.push_back(w[p]);
                } else {
                    right.push_back(w[p]);
                }
            }
            add(left, right, c * factor);
        }
    }
    return out;
}

TensorSquare twisted_product(const TensorSquare& a, const TensorSquare& b,
                             const BraidingMatrix& braiding) {
    TensorSquare out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            const Word& x = pa.first;
            const Word& y = pa.second;
            const Word& u = pb.first;
            const Word& v = pb.second;
            // c~(y (x) u) = q-factor * u (x) y for a diagonal braiding
            RatFunc factor(1);
            for (int ly : y)
                for (int lu : u) factor *= braiding.entry(ly, lu);
            Word l = x;
            l.insert(l.end(), u.begin(), u.end());
            Word r = y;
            r.insert(r.end(), v.begin(), v.end());
            RatFunc c = ca * cb * factor;
            if (c.is_zero()) continue;
            auto key = std::make_pair(l, r);
            auto it = out.find(key);
            if (it == out.end()) out[key] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

bool is_primitive(const TensorElement& t, const BraidingMatrix& b) {
    if (t.degree() < 1) throw std::invalid_argument("primitivity needs degree >= 1");
    TensorSquare delta = braided_coproduct(t, b);
    for (const auto& [w, c] : t.terms()) {
        for (const auto& key : {std::make_pair(w, Word{}), std::make_pair(Word{}, w)}) {
            auto it = delta.find(key);
            if (it == delta.end()) return false;
            it->second -= c;
            if (it->second.is_zero()) delta.erase(it);
        }
    }
    return delta.empty();
}

} // namespace uqp
