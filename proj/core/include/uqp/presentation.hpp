#ifndef UQP_PRESENTATION_HPP
#define UQP_PRESENTATION_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqp/ratfunc.hpp"

namespace uqp {

/// One occurrence of a generator inside a free word; sign -1 is an inverse
/// letter and is only legal for localized generators.
struct SignedLetter {
    int gen = 0;
    int sign = 1;
    friend bool operator==(const SignedLetter& a, const SignedLetter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
    friend auto operator<=>(const SignedLetter& a, const SignedLetter& b) = default;
};

using FreeWord = std::vector<SignedLetter>;

/// Exponent vector aligned with the generator order; entries of localized
/// generators may be negative.
using PbwMonomial = std::vector<long>;

struct RuleKey {
    int hi = 0, hi_sign = 1, lo = 0, lo_sign = 1;
    friend auto operator<=>(const RuleKey&, const RuleKey&) = default;
};

/// One rewrite rule g_hi * g_lo -> sum of coefficient * normal monomial.
using RuleRhs = std::vector<std::pair<RatFunc, PbwMonomial>>;

/// Ordered-generator presentation with q-commutation rules (possibly with
/// tails), an N-grading and optionally an N^2-grading, and localization flags.
///
/// The generator order is the PBW order: normal monomials are the products
/// g_0^{a_0} g_1^{a_1} ... in increasing generator order. Rules always rewrite
/// a bigger-generator-left adjacent pair into that order.
class Presentation {
public:
    std::string name;
    std::vector<std::string> gens;
    std::vector<long> degree;
    std::vector<std::array<long, 2>> mdeg; // empty when no N^2-grading is declared
    std::vector<char> localized;
    std::map<RuleKey, RuleRhs> rules;

    int arity() const { return static_cast<int>(gens.size()); }
    int index(const std::string& g) const; // throws on unknown generator

    /// Validates the rule table (one rule per unordered pair, homogeneity,
    /// leading terms) and derives the signed variants of pure-scalar rules
    /// for localized generators. Must be called once before use.
    void finalize();

    const RuleRhs* find_rule(const RuleKey& k) const;
    bool finalized() const { return finalized_; }

    long monomial_degree(const PbwMonomial& m) const;
    PbwMonomial unit_monomial() const { return PbwMonomial(gens.size(), 0); }
    FreeWord monomial_word(const PbwMonomial& m) const;

private:
    bool finalized_ = false;
};

/// Element in normal form: sparse combination of PBW monomials tied to a
/// presentation. The presentation must outlive its elements.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const Presentation& p) : pres_(&p) {}

    static AlgebraElement zero(const Presentation& p) { return AlgebraElement(p); }
    static AlgebraElement one(const Presentation& p);
    static AlgebraElement generator(const Presentation& p, int g);
    static AlgebraElement generator(const Presentation& p, const std::string& g);
    static AlgebraElement scalar(const Presentation& p, const RatFunc& c);
    /// Normal form of a single free word with coefficient.
    static AlgebraElement from_word(const Presentation& p, const FreeWord& w,
                                    const RatFunc& c = RatFunc(1));
    static AlgebraElement from_monomial(const Presentation& p, const PbwMonomial& m,
                                        const RatFunc& c = RatFunc(1));

    const Presentation& presentation() const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<PbwMonomial, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(const PbwMonomial& m) const;

    void add(const PbwMonomial& m, const RatFunc& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { a += b; return a; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { a -= b; return a; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement scaled(const RatFunc& c) const;
    AlgebraElement pow(long k) const; // k >= 0, or any k for single localized monomials

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    /// Canonical text: terms sorted by ascending monomial exponent vector,
    /// e.g. "q^-2*e1*e2 - q^-2*e3".
    std::string str() const;

private:
    const Presentation* pres_ = nullptr;
    std::map<PbwMonomial, RatFunc> terms_;
};

/// [a, b]_v = a*b - v*b*a.
AlgebraElement q_bracket(const AlgebraElement& a, const AlgebraElement& b, const RatFunc& v);

/// a commutes with every generator.
bool is_central(const AlgebraElement& a);

struct QNormalityEntry {
    std::string gen;
    RatFunc lambda;
    bool ok = false;
    AlgebraElement residual; // a*g - lambda*g*a when not ok
};
struct QNormalityReport {
    bool ok = true;
    std::vector<QNormalityEntry> entries;
    const QNormalityEntry* failure() const;
};
/// Per generator g, the scalar lambda_g with a*g = lambda_g * g*a, when one exists.
QNormalityReport q_normality(const AlgebraElement& a);

struct OverlapFailure {
    FreeWord word;
    AlgebraElement left_first;
    AlgebraElement right_first;
};
/// Diamond check: every 3-letter word carrying two overlapping redexes reduces
/// to the same normal form both ways. Failures are data, not errors.
std::vector<OverlapFailure> confluence_check(const Presentation& p);

/// Per-degree count of PBW monomials by lattice-point enumeration.
/// Rejects localized presentations.
std::vector<unsigned long long> hilbert_count(const Presentation& p, int max_degree);

} // namespace uqp

#endif
