#include "uqp/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "uqp/errors.hpp"

namespace uqp {

namespace {
constexpr unsigned long long kStepGuard = 10'000'000ULL;
}

int Presentation::index(const std::string& g) const {
    for (int i = 0; i < arity(); ++i)
        if (gens[static_cast<std::size_t>(i)] == g) return i;
    throw std::invalid_argument("unknown generator '" + g + "' in presentation " + name);
}

long Presentation::monomial_degree(const PbwMonomial& m) const {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * degree[i];
    return d;
}

FreeWord Presentation::monomial_word(const PbwMonomial& m) const {
    FreeWord w;
    for (int g = 0; g < arity(); ++g) {
        long e = m[static_cast<std::size_t>(g)];
        int sign = e >= 0 ? 1 : -1;
        for (long k = 0; k < (e >= 0 ? e : -e); ++k) w.push_back(SignedLetter{g, sign});
    }
    return w;
}

const RuleRhs* Presentation::find_rule(const RuleKey& k) const {
    auto it = rules.find(k);
    return it == rules.end() ? nullptr : &it->second;
}

void Presentation::finalize() {
    const int n = arity();
    if (n == 0) throw std::invalid_argument("presentation without generators");
    if (static_cast<int>(degree.size()) != n)
        throw std::invalid_argument("degree vector length mismatch");
    if (!mdeg.empty() && static_cast<int>(mdeg.size()) != n)
        throw std::invalid_argument("multidegree vector length mismatch");
    if (localized.empty()) localized.assign(static_cast<std::size_t>(n), 0);
    if (static_cast<int>(localized.size()) != n)
        throw std::invalid_argument("localization flags length mismatch");

    for (int hi = 0; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (!rules.count(RuleKey{hi, 1, lo, 1}))
                throw std::invalid_argument("missing rule for pair (" + gens[static_cast<std::size_t>(hi)] +
                                            ", " + gens[static_cast<std::size_t>(lo)] + ")");

    // derive signed variants of pure-scalar rules between localized generators
    std::map<RuleKey, RuleRhs> derived;
    for (const auto& [key, rhs] : rules) {
        if (key.hi_sign != 1 || key.lo_sign != 1) continue;
        const bool scalar_rule = rhs.size() == 1;
        if (!scalar_rule) continue;
        const auto& [c, mono] = rhs.front();
        PbwMonomial expect(static_cast<std::size_t>(n), 0);
        expect[static_cast<std::size_t>(key.hi)] = 1;
        expect[static_cast<std::size_t>(key.lo)] = 1;
        if (mono != expect) continue;
        auto variant = [&](int hs, int ls, const RatFunc& coeff) {
            PbwMonomial m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(key.hi)] = hs;
            m[static_cast<std::size_t>(key.lo)] = ls;
            RuleKey k{key.hi, hs, key.lo, ls};
            if (!rules.count(k)) derived[k] = RuleRhs{{coeff, m}};
        };
        RatFunc cinv = c.inverse();
        if (localized[static_cast<std::size_t>(key.lo)]) variant(1, -1, cinv);
        if (localized[static_cast<std::size_t>(key.hi)]) variant(-1, 1, cinv);
        if (localized[static_cast<std::size_t>(key.lo)] && localized[static_cast<std::size_t>(key.hi)])
            variant(-1, -1, c);
    }
    rules.merge(derived);

    // homogeneity and leading-term validation
    for (const auto& [key, rhs] : rules) {
        long lhs_deg = key.hi_sign * degree[static_cast<std::size_t>(key.hi)] +
                       key.lo_sign * degree[static_cast<std::size_t>(key.lo)];
        std::array<long, 2> lhs_mdeg{0, 0};
        if (!mdeg.empty())
            for (int k = 0; k < 2; ++k)
                lhs_mdeg[static_cast<std::size_t>(k)] =
                    key.hi_sign * mdeg[static_cast<std::size_t>(key.hi)][static_cast<std::size_t>(k)] +
                    key.lo_sign * mdeg[static_cast<std::size_t>(key.lo)][static_cast<std::size_t>(k)];
        bool found_leading = false;
        for (const auto& [c, mono] : rhs) {
            if (c.is_zero()) throw std::invalid_argument("zero coefficient in rule");
            if (monomial_degree(mono) != lhs_deg)
                throw std::invalid_argument("rule not degree-homogeneous in " + name);
            if (!mdeg.empty()) {
                std::array<long, 2> md{0, 0};
                for (std::size_t i = 0; i < mono.size(); ++i)
                    for (int k = 0; k < 2; ++k)
                        md[static_cast<std::size_t>(k)] += mono[i] * mdeg[i][static_cast<std::size_t>(k)];
                if (md != lhs_mdeg)
                    throw std::invalid_argument("rule not multidegree-homogeneous in " + name);
            }
            for (std::size_t i = 0; i < mono.size(); ++i)
                if (mono[i] < 0 && !localized[i])
                    throw std::invalid_argument("negative exponent of non-localized generator in rule");
            PbwMonomial lead(static_cast<std::size_t>(n), 0);
            lead[static_cast<std::size_t>(key.hi)] = key.hi_sign;
            lead[static_cast<std::size_t>(key.lo)] = key.lo_sign;
            if (mono == lead) {
                if (!c.is_monomial())
                    throw std::invalid_argument("leading coefficient of a rule must be a monomial scalar");
                found_leading = true;
            }
        }
        if (!found_leading)
            throw std::invalid_argument("rule for (" + gens[static_cast<std::size_t>(key.hi)] + ", " +
                                        gens[static_cast<std::size_t>(key.lo)] +
                                        ") lacks its leading term g_lo*g_hi");
    }
    finalized_ = true;
}

namespace {

bool reducible_pair(const SignedLetter& x, const SignedLetter& y) {
    if (x.gen > y.gen) return true;
    if (x.gen == y.gen && x.sign != y.sign) return true; // cancellation
    return false;
}

// worklist keyed descending so the lexicographically largest pending word is
// processed first
struct WordDesc {
    bool operator()(const FreeWord& a, const FreeWord& b) const { return b < a; }
};

class Normalizer {
public:
    explicit Normalizer(const Presentation& p) : p_(p) {
        if (!p.finalized()) throw std::logic_error("presentation not finalized");
    }

    void push(FreeWord w, RatFunc c) {
        if (c.is_zero()) return;
        auto it = pending_.find(w);
        if (it == pending_.end()) pending_.emplace(std::move(w), std::move(c));
        else {
            it->second += c;
            if (it->second.is_zero()) pending_.erase(it);
        }
    }

    AlgebraElement run() {
        AlgebraElement out(p_);
        unsigned long long steps = 0;
        while (!pending_.empty()) {
            auto node = pending_.extract(pending_.begin());
            FreeWord w = std::move(node.key());
            RatFunc c = std::move(node.mapped());
            if (c.is_zero()) continue;
            std::size_t pos = w.size();
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (reducible_pair(w[i], w[i + 1])) { pos = i; break; }
            if (pos == w.size()) {
                out.add(monomial_of(w), c);
                continue;
            }
            if (++steps > kStepGuard)
                throw ResourceError("rewriting step guard exceeded; presentation is not terminating");
            const SignedLetter x = w[pos], y = w[pos + 1];
            if (x.gen == y.gen) { // cancellation x * x^-1
                FreeWord nw;
                nw.reserve(w.size() - 2);
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
                nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
                push(std::move(nw), std::move(c));
                continue;
            }
            const RuleRhs* rhs = p_.find_rule(RuleKey{x.gen, x.sign, y.gen, y.sign});
            if (!rhs)
                throw std::logic_error("no rewrite rule for signed pair in presentation " + p_.name);
            for (const auto& [rc, mono] : *rhs) {
                FreeWord nw;
                FreeWord mid = p_.monomial_word(mono);
                nw.reserve(w.size() - 2 + mid.size());
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
                push(std::move(nw), c * rc);
            }
        }
        return out;
    }

private:
    PbwMonomial monomial_of(const FreeWord& w) const {
        PbwMonomial m(p_.gens.size(), 0);
        for (const auto& l : w) m[static_cast<std::size_t>(l.gen)] += l.sign;
        return m;
    }

    const Presentation& p_;
    std::map<FreeWord, RatFunc, WordDesc> pending_;
};

} // namespace

AlgebraElement AlgebraElement::one(const Presentation& p) {
    AlgebraElement e(p);
    e.add(p.unit_monomial(), RatFunc(1));
    return e;
}

AlgebraElement AlgebraElement::scalar(const Presentation& p, const RatFunc& c) {
    AlgebraElement e(p);
    e.add(p.unit_monomial(), c);
    return e;
}

AlgebraElement AlgebraElement::generator(const Presentation& p, int g) {
    if (g < 0 || g >= p.arity()) throw std::invalid_argument("generator index out of range");
    AlgebraElement e(p);
    PbwMonomial m = p.unit_monomial();
    m[static_cast<std::size_t>(g)] = 1;
    e.add(m, RatFunc(1));
    return e;
}

AlgebraElement AlgebraElement::generator(const Presentation& p, const std::string& g) {
    return generator(p, p.index(g));
}

AlgebraElement AlgebraElement::from_word(const Presentation& p, const FreeWord& w, const RatFunc& c) {
    for (const auto& l : w) {
        if (l.gen < 0 || l.gen >= p.arity()) throw std::invalid_argument("letter out of range");
        if (l.sign == -1 && !p.localized[static_cast<std::size_t>(l.gen)])
            throw std::invalid_argument("negative power of non-localized generator " +
                                        p.gens[static_cast<std::size_t>(l.gen)]);
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    }
    Normalizer nz(p);
    nz.push(w, c);
    return nz.run();
}

AlgebraElement AlgebraElement::from_monomial(const Presentation& p, const PbwMonomial& m, const RatFunc& c) {
    if (m.size() != p.gens.size()) throw std::invalid_argument("monomial arity mismatch");
    AlgebraElement e(p);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < 0 && !p.localized[i])
            throw std::invalid_argument("negative exponent of non-localized generator");
    e.add(m, c);
    return e;
}

const Presentation& AlgebraElement::presentation() const {
    if (!pres_) throw std::logic_error("element without presentation");
    return *pres_;
}

RatFunc AlgebraElement::coeff(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc(0) : it->second;
}

void AlgebraElement::add(const PbwMonomial& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_[m] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (o.is_zero()) return *this;
    if (!pres_) pres_ = o.pres_;
    if (pres_ != o.pres_) throw std::invalid_argument("presentation mismatch");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (o.is_zero()) return *this;
    if (!pres_) pres_ = o.pres_;
    if (pres_ != o.pres_) throw std::invalid_argument("presentation mismatch");
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    const Presentation& p = a.presentation();
    if (&p != &b.presentation()) throw std::invalid_argument("presentation mismatch");
    Normalizer nz(p);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            FreeWord w = p.monomial_word(ma);
            FreeWord wb = p.monomial_word(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            nz.push(std::move(w), ca * cb);
        }
    return nz.run();
}

AlgebraElement AlgebraElement::scaled(const RatFunc& c) const {
    AlgebraElement e;
    e.pres_ = pres_;
    if (c.is_zero()) return e;
    for (const auto& [m, k] : terms_) e.terms_[m] = k * c;
    return e;
}

AlgebraElement AlgebraElement::pow(long k) const {
    const Presentation& p = presentation();
    if (k < 0) {
        if (terms_.size() != 1) throw std::invalid_argument("negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0 && !p.localized[i])
                throw std::invalid_argument("negative power of non-localized generator");
        if (!c.is_monomial()) throw std::invalid_argument("negative power needs a monomial coefficient");
        AlgebraElement acc = one(p);
        // invert the monomial: commutation scalars are handled by rewriting
        PbwMonomial inv = m;
        for (auto& e : inv) e = -e;
        AlgebraElement mono_inv = from_word(p, p.monomial_word(inv), c.inverse());
        // (c g)^-1 differs from c^-1 g^-1 by the q-commutation of the inverse
        // letters among themselves; normalize (this * candidate) to fix it
        AlgebraElement unit = *this * mono_inv;
        if (unit.terms_.size() != 1 || unit.terms_.begin()->first != p.unit_monomial())
            throw std::logic_error("monomial inverse failed");
        mono_inv = mono_inv.scaled(unit.terms_.begin()->second.inverse());
        for (long i = 0; i < -k; ++i) acc = acc * mono_inv;
        return acc;
    }
    AlgebraElement acc = one(p);
    AlgebraElement base = *this;
    long e = k;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    const Presentation& p = presentation();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        RatFunc k = c;
        bool neg = k.is_monomial() && k.numerator().leading_coeff() < 0;
        if (neg) k = -k;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string coeff_txt;
        if (k.is_one()) coeff_txt = "";
        else if (k.is_monomial()) coeff_txt = k.str();
        else if (k.is_laurent()) coeff_txt = "(" + k.str() + ")";
        else coeff_txt = k.str();
        bool unit_mono = true;
        for (long e : m)
            if (e != 0) unit_mono = false;
        if (unit_mono) {
            os << (coeff_txt.empty() ? "1" : coeff_txt);
            continue;
        }
        bool first_factor = true;
        if (!coeff_txt.empty()) {
            os << coeff_txt;
            first_factor = false;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_factor) os << "*";
            first_factor = false;
            os << p.gens[i];
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

AlgebraElement q_bracket(const AlgebraElement& a, const AlgebraElement& b, const RatFunc& v) {
    return a * b - (b * a).scaled(v);
}

bool is_central(const AlgebraElement& a) {
    const Presentation& p = a.presentation();
    for (int g = 0; g < p.arity(); ++g) {
        AlgebraElement x = AlgebraElement::generator(p, g);
        if (!(a * x == x * a)) return false;
    }
    return true;
}

const QNormalityEntry* QNormalityReport::failure() const {
    for (const auto& e : entries)
        if (!e.ok) return &e;
    return nullptr;
}

QNormalityReport q_normality(const AlgebraElement& a) {
    const Presentation& p = a.presentation();
    QNormalityReport rep;
    for (int g = 0; g < p.arity(); ++g) {
        AlgebraElement x = AlgebraElement::generator(p, g);
        AlgebraElement ag = a * x;
        AlgebraElement ga = x * a;
        QNormalityEntry entry;
        entry.gen = p.gens[static_cast<std::size_t>(g)];
        if (ga.is_zero()) {
            entry.lambda = RatFunc(1);
            entry.ok = ag.is_zero();
            entry.residual = ag;
        } else {
            // match on the lexicographically largest monomial of g*a
            const auto& [m, c] = *ga.terms().rbegin();
            entry.lambda = ag.coeff(m) / c;
            entry.residual = ag - ga.scaled(entry.lambda);
            entry.ok = entry.residual.is_zero();
        }
        if (!entry.ok) rep.ok = false;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

std::vector<OverlapFailure> confluence_check(const Presentation& p) {
    if (!p.finalized()) throw std::logic_error("presentation not finalized");
    std::vector<SignedLetter> alphabet;
    for (int g = 0; g < p.arity(); ++g) {
        alphabet.push_back(SignedLetter{g, 1});
        if (p.localized[static_cast<std::size_t>(g)]) alphabet.push_back(SignedLetter{g, -1});
    }
    auto reduce_pair_then_rest = [&](const FreeWord& w, std::size_t pos) {
        // apply the redex at (pos, pos+1) once, then fully normalize
        Normalizer nz(p);
        const SignedLetter x = w[pos], y = w[pos + 1];
        if (x.gen == y.gen) {
            FreeWord nw;
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
            nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
            nz.push(std::move(nw), RatFunc(1));
        } else {
            const RuleRhs* rhs = p.find_rule(RuleKey{x.gen, x.sign, y.gen, y.sign});
            if (!rhs) throw std::logic_error("no rule for reducible pair");
            for (const auto& [c, mono] : *rhs) {
                FreeWord nw;
                FreeWord mid = p.monomial_word(mono);
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
                nz.push(std::move(nw), c);
            }
        }
        return nz.run();
    };

    std::vector<OverlapFailure> failures;
    for (const auto& x : alphabet)
        for (const auto& y : alphabet)
            for (const auto& z : alphabet) {
                if (!reducible_pair(x, y) || !reducible_pair(y, z)) continue;
                FreeWord w{x, y, z};
                AlgebraElement left = reduce_pair_then_rest(w, 0);
                AlgebraElement right = reduce_pair_then_rest(w, 1);
                if (!(left == right)) failures.push_back(OverlapFailure{w, left, right});
            }
    return failures;
}

std::vector<unsigned long long> hilbert_count(const Presentation& p, int max_degree) {
    for (char l : p.localized)
        if (l) throw std::invalid_argument("hilbert_count rejects localized presentations");
    if (max_degree < 0) throw std::invalid_argument("negative degree");
    std::vector<unsigned long long> counts(static_cast<std::size_t>(max_degree) + 1, 0);
    counts[0] = 1;
    for (int g = 0; g < p.arity(); ++g) {
        long d = p.degree[static_cast<std::size_t>(g)];
        if (d <= 0) throw std::invalid_argument("hilbert_count needs positive generator degrees");
        for (long m = d; m <= max_degree; ++m)
            counts[static_cast<std::size_t>(m)] += counts[static_cast<std::size_t>(m - d)];
    }
    return counts;
}

} // namespace uqp
