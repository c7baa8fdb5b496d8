#include "uqp/symmetrizer.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "uqp/errors.hpp"

namespace uqp {

std::pair<LaurentPoly, Word> matsumoto_apply_raw(const std::vector<int>& reduced_word,
                                                 const Word& w, const BraidingMatrix& b) {
    LaurentPoly coeff(1);
    Word cur = w;
    // rho(s(sigma)) = rho(sigma_{i1}) o ... o rho(sigma_{ik}): rightmost factor acts first
    for (auto it = reduced_word.rbegin(); it != reduced_word.rend(); ++it) {
        const int i = *it;
        if (i < 0 || i + 1 >= static_cast<int>(cur.size()))
            throw std::invalid_argument("transposition index out of range for word");
        const int a = cur[static_cast<std::size_t>(i)];
        const int c = cur[static_cast<std::size_t>(i) + 1];
        coeff *= b.laurent_entry(a, c);
        std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(i) + 1]);
    }
    return {coeff, cur};
}

TensorElement matsumoto_apply(const Perm& sigma, const Word& w, const BraidingMatrix& b) {
    if (sigma.size() != static_cast<int>(w.size()))
        throw std::invalid_argument("permutation degree differs from word length");
    auto [c, out] = matsumoto_apply_raw(sigma.canonical_reduced_word(), w, b);
    return TensorElement::single(out, RatFunc(c));
}

namespace {

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == parts - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (parts > 0) rec(rec, 0, total);
    return out;
}

void check_degree(int m, const NicholsLimits& limits) {
    if (m < 0) throw std::invalid_argument("negative tensor degree");
    if (m > limits.max_degree)
        throw ResourceError("tensor degree " + std::to_string(m) + " exceeds the configured bound " +
                            std::to_string(limits.max_degree));
}

// braiding with single-monomial Laurent entries: track (exponent, coefficient)
// pairs instead of full polynomials in the assembly loop
struct MonomialBraiding {
    bool usable = false;
    bool unit_coeffs = true;
    std::vector<std::vector<long>> exp;
    std::vector<std::vector<BigRat>> coeff;

    static MonomialBraiding of(const BraidingMatrix& b) {
        MonomialBraiding mb;
        const int n = b.size();
        mb.exp.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
        mb.coeff.assign(static_cast<std::size_t>(n), std::vector<BigRat>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const RatFunc& e = b.entry(i, j);
                if (!e.is_monomial()) return mb; // usable stays false
                const auto& t = *e.numerator().terms().begin();
                mb.exp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.first;
                mb.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.second;
                if (t.second != 1) mb.unit_coeffs = false;
            }
        mb.usable = true;
        return mb;
    }
};

} // namespace

namespace {

SymmetrizerBlock block_skeleton(int m, const std::vector<int>& mu, const BraidingMatrix& b,
                                const NicholsLimits& limits) {
    check_degree(m, limits);
    int total = 0;
    for (int v : mu) total += v;
    if (total != m || static_cast<int>(mu.size()) != b.size())
        throw std::invalid_argument("multidegree does not match degree and rank");
    SymmetrizerBlock blk;
    blk.degree = m;
    blk.mdeg = mu;
    blk.words = words_of_multidegree(mu);
    blk.matrix.assign(blk.words.size(), std::vector<LaurentPoly>(blk.words.size()));
    return blk;
}

} // namespace

SymmetrizerBlock symmetrizer_block_direct(int m, const std::vector<int>& mu,
                                          const BraidingMatrix& b, const NicholsLimits& limits) {
    SymmetrizerBlock blk = block_skeleton(m, mu, b, limits);
    const std::size_t dim = blk.words.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i) index[blk.words[i]] = i;

    std::vector<std::vector<int>> reduced;
    for (const Perm& s : Perm::all(m)) reduced.push_back(s.canonical_reduced_word());

    for (std::size_t col = 0; col < dim; ++col) {
        for (const auto& rw : reduced) {
            auto [c, out] = matsumoto_apply_raw(rw, blk.words[col], b);
            auto it = index.find(out);
            if (it == index.end()) throw std::logic_error("symmetrizer left the multidegree block");
            blk.matrix[it->second][col] += c;
        }
    }
    return blk;
}

SymmetrizerBlock symmetrizer_block(int m, const std::vector<int>& mu, const BraidingMatrix& b,
                                   const NicholsLimits& limits) {
    SymmetrizerBlock blk = block_skeleton(m, mu, b, limits);
    const std::size_t dim = blk.words.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i) index[blk.words[i]] = i;

    // S_m factored through the minimal coset representatives of S_m / S_{m-1}:
    // S_m = U_m o (S_{m-1} (x) id) with U_j = sum over target positions of the
    // operator moving the j-th tensor factor left; stages run j = 2..m
    const MonomialBraiding mb = MonomialBraiding::of(b);
    for (std::size_t col = 0; col < dim; ++col) {
        std::map<Word, LaurentPoly> dict;
        dict[blk.words[col]] = LaurentPoly(1);
        for (int j = 2; j <= m; ++j) {
            std::map<Word, LaurentPoly> next;
            auto accumulate = [&next](const Word& w, const LaurentPoly& c) {
                auto it = next.find(w);
                if (it == next.end()) next[w] = c;
                else {
                    it->second += c;
                    if (it->second.is_zero()) next.erase(it);
                }
            };
            for (const auto& [w, coeff] : dict) {
                accumulate(w, coeff); // target position j: untouched
                const int moved = w[static_cast<std::size_t>(j - 1)];
                if (mb.usable) {
                    long e = 0;
                    BigRat c(1);
                    for (int t = j - 2; t >= 0; --t) {
                        const int passed = w[static_cast<std::size_t>(t)];
                        e += mb.exp[static_cast<std::size_t>(passed)][static_cast<std::size_t>(moved)];
                        if (!mb.unit_coeffs)
                            c *= mb.coeff[static_cast<std::size_t>(passed)][static_cast<std::size_t>(moved)];
                        Word nw = w;
                        nw.erase(nw.begin() + (j - 1));
                        nw.insert(nw.begin() + t, moved);
                        accumulate(nw, coeff.shifted(e).scaled(c));
                    }
                } else {
                    LaurentPoly factor(1);
                    for (int t = j - 2; t >= 0; --t) {
                        const int passed = w[static_cast<std::size_t>(t)];
                        factor *= b.laurent_entry(passed, moved);
                        Word nw = w;
                        nw.erase(nw.begin() + (j - 1));
                        nw.insert(nw.begin() + t, moved);
                        accumulate(nw, coeff * factor);
                    }
                }
            }
            dict = std::move(next);
        }
        for (const auto& [w, c] : dict) {
            auto it = index.find(w);
            if (it == index.end()) throw std::logic_error("symmetrizer left the multidegree block");
            blk.matrix[it->second][col] += c;
        }
    }
    return blk;
}

namespace {

template <typename F>
auto map_blocks(const std::vector<std::vector<int>>& mus, bool parallel, F&& f) {
    using R = decltype(f(mus[0]));
    std::vector<R> out(mus.size());
    if (parallel && mus.size() > 1) {
        std::vector<std::future<R>> futs;
        futs.reserve(mus.size());
        for (const auto& mu : mus)
            futs.push_back(std::async(std::launch::async, [&f, mu] { return f(mu); }));
        for (std::size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < mus.size(); ++i) out[i] = f(mus[i]);
    }
    return out;
}

using KernelTable = std::map<std::vector<int>, std::vector<TensorElement>>;

struct BlockOutcome {
    std::size_t rank = 0;
    std::vector<TensorElement> kernel; // exact basis of Ker on this block
    std::vector<TensorElement> fresh;  // relations not in the lower-degree ideal
};

// blocks at most this wide are eliminated symbolically outright
constexpr std::size_t kSymbolicBlockLimit = 12;

struct ModAttempt {
    std::uint64_t q0, p;
};
constexpr ModAttempt kModAttempts[] = {{5, 2147483647ULL}, {7, 2147483629ULL}, {11, 2147483563ULL}};

// every degree-m element of the two-sided ideal generated by the lower-degree
// kernels, enumerated as word * kernel-element * word
template <typename F>
void for_each_ideal_candidate(const KernelTable& lower, const std::vector<int>& mu, int n,
                              F&& emit) {
    int m = 0;
    for (int x : mu) m += x;
    for (const auto& [nu, elems] : lower) {
        if (elems.empty()) continue;
        int mprime = 0;
        for (int x : nu) mprime += x;
        if (mprime >= m) continue;
        std::vector<int> rest(static_cast<std::size_t>(n));
        bool feasible = true;
        for (int i = 0; i < n; ++i) {
            rest[static_cast<std::size_t>(i)] =
                mu[static_cast<std::size_t>(i)] - nu[static_cast<std::size_t>(i)];
            if (rest[static_cast<std::size_t>(i)] < 0) feasible = false;
        }
        if (!feasible) continue;
        for (int left_len = 0; left_len <= m - mprime; ++left_len) {
            for (const auto& lmu : compositions(left_len, n)) {
                std::vector<int> rmu(static_cast<std::size_t>(n));
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    rmu[static_cast<std::size_t>(i)] =
                        rest[static_cast<std::size_t>(i)] - lmu[static_cast<std::size_t>(i)];
                    if (rmu[static_cast<std::size_t>(i)] < 0) ok = false;
                }
                if (!ok) continue;
                for (const Word& u : words_of_multidegree(lmu))
                    for (const Word& v : words_of_multidegree(rmu))
                        for (const auto& r : elems) {
                            if (!emit(TensorElement::single(u) * r * TensorElement::single(v)))
                                return;
                        }
            }
        }
    }
}

std::vector<LaurentPoly> coords_laurent(const TensorElement& t,
                                        const std::map<Word, std::size_t>& index,
                                        std::size_t dim) {
    std::vector<LaurentPoly> v(dim);
    LaurentPoly den(1);
    for (const auto& [w, c] : t.terms()) den = LaurentPoly::lcm(den, c.denominator());
    for (const auto& [w, c] : t.terms())
        v[index.at(w)] = (RatFunc(den) * c).as_laurent();
    return v;
}

// exact elimination; candidates feed the span of the lower-degree ideal and
// the complement of that span inside the kernel is reported as new relations
BlockOutcome analyze_block_symbolic(const SymmetrizerBlock& blk, const KernelTable& lower, int n) {
    const std::size_t dim = blk.words.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i) index[blk.words[i]] = i;

    BlockOutcome out;
    auto kr = laurent_rank_kernel(blk.matrix);
    out.rank = kr.rank;
    for (const auto& kv : kr.kernel) {
        TensorElement t(blk.degree);
        for (std::size_t i = 0; i < dim; ++i)
            if (!kv[i].is_zero()) t.add(blk.words[i], RatFunc(kv[i]));
        out.kernel.push_back(std::move(t));
    }
    if (out.kernel.empty()) return out;

    RowSpan span(dim);
    auto rat_coords = [&](const TensorElement& t) {
        std::vector<RatFunc> v(dim, RatFunc(0));
        for (const auto& [w, c] : t.terms()) v[index.at(w)] = c;
        return v;
    };
    for_each_ideal_candidate(lower, blk.mdeg, n, [&](const TensorElement& cand) {
        span.insert(rat_coords(cand));
        return true;
    });
    for (const auto& k : out.kernel) {
        auto residue = span.reduce(rat_coords(k));
        bool zero = true;
        for (const auto& e : residue)
            if (!e.is_zero()) { zero = false; break; }
        if (zero) continue;
        span.insert(residue);
        TensorElement rel(blk.degree);
        for (std::size_t i = 0; i < dim; ++i)
            if (!residue[i].is_zero()) rel.add(blk.words[i], residue[i]);
        RatFunc lead = rel.terms().begin()->second;
        out.fresh.push_back(rel.scaled(lead.inverse()));
    }
    return out;
}

// certified squeeze: specialized rank (lower bound for the symbolic rank)
// plus exact ideal-candidate kernel vectors, independent after the same
// specialization (upper bound); equality of the counts makes both exact
bool analyze_block_hybrid(const SymmetrizerBlock& blk, const KernelTable& lower, int n,
                          BlockOutcome& out) {
    const std::size_t dim = blk.words.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i) index[blk.words[i]] = i;

    for (const auto& attempt : kModAttempts) {
        try {
            const std::uint64_t p = attempt.p;
            // specialize the block once
            auto spec = reduce_matrix_mod(blk.matrix, attempt.q0, p);
            const std::size_t r = rank_mod_reduced(spec, p);
            if (r == dim) {
                out = BlockOutcome{dim, {}, {}};
                return true;
            }
            const std::size_t target = dim - r;
            ModSpan span(dim, attempt.q0, p);
            std::vector<TensorElement> kept;
            for_each_ideal_candidate(lower, blk.mdeg, n, [&](const TensorElement& cand) {
                auto reduced = span.reduce_vector(coords_laurent(cand, index, dim));
                // an exact kernel member must specialize into the kernel
                for (std::size_t i = 0; i < dim; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < dim; ++j)
                        if (spec[i][j] != 0 && reduced[j] != 0)
                            acc = (acc + static_cast<std::uint64_t>(
                                             (static_cast<unsigned __int128>(spec[i][j]) *
                                              reduced[j]) %
                                             p)) %
                                  p;
                    if (acc != 0)
                        throw std::logic_error("ideal candidate escaped the symmetrizer kernel");
                }
                if (span.insert_reduced(std::move(reduced))) kept.push_back(cand);
                return span.dim() < target;
            });
            if (span.dim() == target) {
                out = BlockOutcome{r, std::move(kept), {}};
                return true;
            }
        } catch (const ModEvalError&) {
            // unlucky prime, try the next one
        }
    }
    return false;
}

BlockOutcome analyze_block(const SymmetrizerBlock& blk, const KernelTable& lower, int n) {
    if (blk.words.size() > kSymbolicBlockLimit) {
        BlockOutcome out;
        if (analyze_block_hybrid(blk, lower, n, out)) return out;
    }
    return analyze_block_symbolic(blk, lower, n);
}

struct SweepResult {
    std::vector<std::size_t> dims;                       // per degree 0..max
    std::vector<std::vector<Relation>> fresh_per_degree; // per degree 0..max
};

SweepResult sweep(const BraidingMatrix& b, int max_degree, const NicholsLimits& limits) {
    check_degree(max_degree, limits);
    const int n = b.size();
    SweepResult res;
    res.dims.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    res.fresh_per_degree.assign(static_cast<std::size_t>(max_degree) + 1, {});
    if (max_degree >= 0) res.dims[0] = 1;
    if (max_degree >= 1) res.dims[1] = static_cast<std::size_t>(n);

    KernelTable kernels;
    for (int m = 2; m <= max_degree; ++m) {
        auto mus = compositions(m, n);
        auto outcomes = map_blocks(mus, limits.parallel, [&](const std::vector<int>& mu) {
            SymmetrizerBlock blk = symmetrizer_block(m, mu, b, limits);
            return analyze_block(blk, kernels, n);
        });
        std::size_t dim_m = 0;
        for (std::size_t bi = 0; bi < mus.size(); ++bi) {
            dim_m += outcomes[bi].rank;
            kernels[mus[bi]] = outcomes[bi].kernel;
            for (auto& rel : outcomes[bi].fresh)
                res.fresh_per_degree[static_cast<std::size_t>(m)].push_back(
                    Relation{m, mus[bi], std::move(rel)});
        }
        res.dims[static_cast<std::size_t>(m)] = dim_m;
    }
    return res;
}

} // namespace

std::size_t nichols_dimension(int m, const BraidingMatrix& b, const NicholsLimits& limits) {
    return sweep(b, m, limits).dims[static_cast<std::size_t>(m)];
}

std::vector<std::size_t> nichols_dimension_table(int max_degree, const BraidingMatrix& b,
                                                 const NicholsLimits& limits) {
    return sweep(b, max_degree, limits).dims;
}

std::vector<Relation> RelationBasis::at(int degree) const {
    std::vector<Relation> out;
    for (const auto& r : relations)
        if (r.degree == degree) out.push_back(r);
    return out;
}

RelationBasis minimal_relations(const BraidingMatrix& b, int max_degree,
                                const NicholsLimits& limits) {
    SweepResult res = sweep(b, max_degree, limits);
    RelationBasis basis;
    for (auto& per_degree : res.fresh_per_degree)
        for (auto& rel : per_degree) basis.relations.push_back(std::move(rel));
    return basis;
}

} // namespace uqp
