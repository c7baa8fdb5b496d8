#include "uqp/braiding.hpp"

#include <stdexcept>

namespace uqp {

BraidingMatrix::BraidingMatrix(RatMatrix entries) : n_(static_cast<int>(entries.size())), q_(std::move(entries)) {
    for (const auto& row : q_) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("braiding matrix must be square");
        for (const auto& e : row)
            if (e.is_zero()) throw std::invalid_argument("braiding matrix entries must be nonzero");
    }
    if (n_ == 0) throw std::invalid_argument("braiding matrix must be nonempty");
}

const RatFunc& BraidingMatrix::entry(int i, int j) const {
    return q_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

const LaurentPoly& BraidingMatrix::laurent_entry(int i, int j) const {
    return entry(i, j).as_laurent();
}

BraidingMatrix braiding_from_cartan(const CartanData& cd) {
    cd.validate();
    RatMatrix q(static_cast<std::size_t>(cd.rank), std::vector<RatFunc>(static_cast<std::size_t>(cd.rank)));
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j)
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                RatFunc::q_power(static_cast<long>(cd.d[static_cast<std::size_t>(i)]) * cd.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return BraidingMatrix(std::move(q));
}

std::vector<Perm> autdiagr(const BraidingMatrix& b) {
    std::vector<Perm> out;
    for (const Perm& s : Perm::all(b.size())) {
        bool ok = true;
        for (int i = 0; ok && i < b.size(); ++i)
            for (int j = 0; ok && j < b.size(); ++j)
                if (!(b.entry(i, j) == b.entry(s(i), s(j)))) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

LemmaConditions lemma_conditions(const BraidingMatrix& b) {
    const int n = b.size();
    LemmaConditions c{true, true, true};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool row_diff = false, col_diff = false;
            for (int h = 0; h < n; ++h) {
                if (!(b.entry(i, h) == b.entry(j, h))) row_diff = true;
                if (!(b.entry(h, i) == b.entry(h, j))) col_diff = true;
            }
            if (!row_diff) c.rows_separated = false;
            if (!col_diff) c.cols_separated = false;
            if (b.entry(i, i) == b.entry(i, j) && b.entry(i, j) == b.entry(j, i) &&
                b.entry(j, i) == b.entry(j, j))
                c.no_constant_block = false;
        }
    return c;
}

RatMatrix MonomialMap::to_matrix() const {
    const int n = sigma.size();
    RatMatrix m(static_cast<std::size_t>(n), std::vector<RatFunc>(static_cast<std::size_t>(n), RatFunc(0)));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(sigma(i))][static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    return m;
}

bool glvc_member(const RatMatrix& g, const BraidingMatrix& b) {
    const int n = b.size();
    if (static_cast<int>(g.size()) != n)
        throw std::invalid_argument("glvc_member: size mismatch");
    if (rat_det(g).is_zero())
        throw std::invalid_argument("glvc_member: singular map rejected");
    // g(x_i) = sum_s g[s][i] x_s
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    const RatFunc& lrj = g[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                    const RatFunc& lsi = g[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
                    if (lrj.is_zero() || lsi.is_zero()) continue;
                    if (!(b.entry(i, j) == b.entry(s, r))) return false;
                }
    return true;
}

std::string GroupDescription::structure() const {
    if (!decided) return "undecided";
    return "(k^x)^" + std::to_string(torus_rank) + " x| diagram group of order " +
           std::to_string(diagram_group.size());
}

GroupDescription glvc_structure(const BraidingMatrix& b) {
    GroupDescription g;
    if (!lemma_conditions(b).any()) return g;
    g.decided = true;
    g.torus_rank = b.size();
    g.diagram_group = autdiagr(b);
    return g;
}

GroupDescription hopf_aut_bosonization(const CartanData& cd) {
    cd.validate();
    BraidingMatrix b = braiding_from_cartan(cd);
    std::vector<Perm> group = autdiagr(b);
    // psi(eps_i) = eps_{sigma(i)} must satisfy chi_i = chi_{sigma(i)} o psi,
    // i.e. d_i a_ij = d_{sigma(i)} a_{sigma(i) sigma(j)} on exponents.
    for (const Perm& s : group)
        for (int i = 0; i < cd.rank; ++i)
            for (int j = 0; j < cd.rank; ++j) {
                long lhs = static_cast<long>(cd.d[static_cast<std::size_t>(i)]) * cd.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                long rhs = static_cast<long>(cd.d[static_cast<std::size_t>(s(i))]) * cd.a[static_cast<std::size_t>(s(i))][static_cast<std::size_t>(s(j))];
                if (lhs != rhs)
                    throw std::logic_error("character condition failed for a diagram automorphism");
            }
    GroupDescription g;
    g.decided = true;
    g.torus_rank = cd.rank;
    g.diagram_group = std::move(group);
    return g;
}

} // namespace uqp
