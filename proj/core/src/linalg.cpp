#include "uqp/linalg.hpp"

#include <stdexcept>

namespace uqp {

KernelResult laurent_rank_kernel(LaurentMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    LaurentPoly prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const LaurentPoly p = m[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const LaurentPoly f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                LaurentPoly t = p * m[i][j] - f * m[r][j];
                m[i][j] = t.is_zero() ? LaurentPoly() : LaurentPoly::div_exact(t, prev);
            }
        }
        prev = p;
        pivots.emplace_back(r, col);
        ++r;
    }

    KernelResult res;
    res.rank = pivots.size();

    std::vector<char> is_pivot_col(cols, 0);
    for (auto& [pr, pc] : pivots) {
        (void)pr;
        is_pivot_col[pc] = 1;
    }

    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<RatFunc> x(cols, RatFunc(0));
        x[f] = RatFunc(1);
        for (std::size_t k = pivots.size(); k-- > 0;) {
            auto [pr, pc] = pivots[k];
            RatFunc acc(0);
            // row pr is zero left of pc; only pivot columns > pc and column f
            // can hold nonzero solution entries
            if (f > pc) acc += RatFunc(m[pr][f]);
            for (std::size_t t = k + 1; t < pivots.size(); ++t) {
                auto [qr, qc] = pivots[t];
                (void)qr;
                if (!m[pr][qc].is_zero() && !x[qc].is_zero())
                    acc += RatFunc(m[pr][qc]) * x[qc];
            }
            x[pc] = -(acc / RatFunc(m[pr][pc]));
        }
        // clear denominators, then divide by the gcd of the entries
        LaurentPoly den(1);
        for (const auto& e : x)
            if (!e.is_zero()) den = LaurentPoly::lcm(den, e.denominator());
        std::vector<LaurentPoly> v(cols);
        LaurentPoly g;
        for (std::size_t j = 0; j < cols; ++j) {
            if (x[j].is_zero()) continue;
            RatFunc scaled = x[j] * RatFunc(den);
            v[j] = scaled.as_laurent();
            g = LaurentPoly::gcd(g, v[j]);
        }
        if (!g.is_zero() && !g.is_one())
            for (auto& e : v)
                if (!e.is_zero()) e = LaurentPoly::div_exact(e, g);
        res.kernel.push_back(std::move(v));
    }
    return res;
}

RatFunc rat_det(RatMatrix m) {
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    RatFunc det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) return RatFunc(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        RatFunc inv = m[col][col].inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            RatFunc f = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mod_mul(acc, base, p);
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw ModEvalError("division by zero mod p");
    return mod_pow(a, p - 2, p); // p prime
}

std::uint64_t rat_mod(const BigRat& c, std::uint64_t p) {
    BigInt num = c.get_num(), den = c.get_den();
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
    if (d == 0) throw ModEvalError("coefficient denominator vanishes mod p");
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
    return mod_mul(n, mod_inv(d, p), p);
}

} // namespace

std::uint64_t laurent_eval_mod(const LaurentPoly& f, std::uint64_t q0, std::uint64_t p) {
    std::uint64_t acc = 0;
    std::uint64_t q0inv = 0;
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t power;
        if (e >= 0)
            power = mod_pow(q0, static_cast<std::uint64_t>(e), p);
        else {
            if (q0inv == 0) q0inv = mod_inv(q0, p);
            power = mod_pow(q0inv, static_cast<std::uint64_t>(-e), p);
        }
        acc = (acc + mod_mul(rat_mod(c, p), power, p)) % p;
    }
    return acc;
}

std::vector<std::vector<std::uint64_t>> reduce_matrix_mod(const LaurentMatrix& m,
                                                          std::uint64_t q0, std::uint64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    // shared power table over the exponent range of the whole matrix
    long lo = 0, hi = 0;
    for (const auto& row : m)
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            lo = std::min(lo, e.lowest_exp());
            hi = std::max(hi, e.highest_exp());
        }
    std::vector<std::uint64_t> powers(static_cast<std::size_t>(hi - lo) + 1);
    std::uint64_t base = lo >= 0 ? mod_pow(q0, static_cast<std::uint64_t>(lo), p)
                                 : mod_pow(mod_inv(q0, p), static_cast<std::uint64_t>(-lo), p);
    for (long e = lo; e <= hi; ++e) {
        powers[static_cast<std::size_t>(e - lo)] = base;
        base = mod_mul(base, q0 % p, p);
    }
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (m[i][j].is_zero()) continue;
            std::uint64_t acc = 0;
            for (const auto& [e, c] : m[i][j].terms())
                acc = (acc + mod_mul(rat_mod(c, p), powers[static_cast<std::size_t>(e - lo)], p)) % p;
            a[i][j] = acc;
        }
    return a;
}

std::size_t rank_mod_reduced(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::uint64_t inv = mod_inv(a[r][col], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            std::uint64_t f = mod_mul(a[i][col], inv, p);
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = (a[i][j] + p - mod_mul(f, a[r][j], p)) % p;
        }
        ++r;
    }
    return r;
}

std::size_t rank_mod(const LaurentMatrix& m, std::uint64_t q0, std::uint64_t p) {
    return rank_mod_reduced(reduce_matrix_mod(m, q0, p), p);
}

std::vector<std::uint64_t> ModSpan::reduce_vector(const std::vector<LaurentPoly>& v) const {
    if (v.size() != width_) throw std::invalid_argument("ModSpan: width mismatch");
    std::vector<std::uint64_t> out(width_, 0);
    for (std::size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) out[j] = laurent_eval_mod(v[j], q0_, p_);
    return out;
}

bool ModSpan::insert(const std::vector<LaurentPoly>& v) { return insert_reduced(reduce_vector(v)); }

bool ModSpan::insert_reduced(std::vector<std::uint64_t> v) {
    if (v.size() != width_) throw std::invalid_argument("ModSpan: width mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint64_t c = v[lead_[k]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < width_; ++j)
            v[j] = (v[j] + p_ - mod_mul(c, rows_[k][j], p_)) % p_;
    }
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (v[j] != 0) { lead = j; break; }
    if (lead == width_) return false;
    std::uint64_t inv = mod_inv(v[lead], p_);
    for (auto& e : v) e = mod_mul(e, inv, p_);
    // keep the stored basis reduced so later reductions terminate cleanly
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint64_t c = rows_[k][lead];
        if (c == 0) continue;
        for (std::size_t j = 0; j < width_; ++j)
            rows_[k][j] = (rows_[k][j] + p_ - mod_mul(c, v[j], p_)) % p_;
    }
    std::size_t pos = 0;
    while (pos < lead_.size() && lead_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    lead_.insert(lead_.begin() + static_cast<long>(pos), lead);
    return true;
}

std::vector<RatFunc> RowSpan::reduce(std::vector<RatFunc> v) const {
    if (v.size() != width_) throw std::invalid_argument("RowSpan: width mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const RatFunc& c = v[lead_[k]];
        if (c.is_zero()) continue;
        RatFunc f = c; // rows are normalized with leading entry 1
        for (std::size_t j = 0; j < width_; ++j)
            if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
    return v;
}

bool RowSpan::insert(std::vector<RatFunc> v) {
    v = reduce(std::move(v));
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) { lead = j; break; }
    if (lead == width_) return false;
    RatFunc inv = v[lead].inverse();
    for (auto& e : v) if (!e.is_zero()) e *= inv;
    // keep the basis reduced
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k][lead].is_zero()) continue;
        RatFunc f = rows_[k][lead];
        for (std::size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) rows_[k][j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < lead_.size() && lead_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    lead_.insert(lead_.begin() + pos, lead);
    return true;
}

} // namespace uqp
