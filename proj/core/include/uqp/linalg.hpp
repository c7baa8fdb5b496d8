#ifndef UQP_LINALG_HPP
#define UQP_LINALG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "uqp/laurent.hpp"
#include "uqp/ratfunc.hpp"

namespace uqp {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;
using RatMatrix = std::vector<std::vector<RatFunc>>;

struct KernelResult {
    std::size_t rank = 0;
    // Right kernel basis; vectors have content-normalized LaurentPoly entries.
    std::vector<std::vector<LaurentPoly>> kernel;
};

/// Rank and right-kernel basis of a LaurentPoly matrix over Q(q).
/// The elimination is fraction-free (one-step Bareiss: every division is an
/// exact polynomial division by the previous pivot); back substitution for
/// the kernel runs over Q(q) on the small triangular system and clears
/// denominators afterwards.
KernelResult laurent_rank_kernel(LaurentMatrix m);

/// Exact determinant over Q(q) by Gaussian elimination.
RatFunc rat_det(RatMatrix m);

/// Thrown when a rational coefficient cannot be reduced mod p (denominator
/// divisible by p); callers retry with another prime.
struct ModEvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// f(q0) mod p; p must be prime, q0 not divisible by p.
std::uint64_t laurent_eval_mod(const LaurentPoly& f, std::uint64_t q0, std::uint64_t p);

/// Exact rank of the matrix reduced at q = q0 over F_p. A nonzero specialized
/// minor is a nonzero minor over Q(q), so this is a certified lower bound for
/// the symbolic rank.
std::size_t rank_mod(const LaurentMatrix& m, std::uint64_t q0, std::uint64_t p);

std::vector<std::vector<std::uint64_t>> reduce_matrix_mod(const LaurentMatrix& m,
                                                          std::uint64_t q0, std::uint64_t p);
std::size_t rank_mod_reduced(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p);

/// Incrementally maintained independent set of specialized vectors over F_p.
/// Full specialized column rank certifies independence over Q(q).
class ModSpan {
public:
    ModSpan(std::size_t width, std::uint64_t q0, std::uint64_t p)
        : width_(width), q0_(q0), p_(p) {}
    std::size_t dim() const { return rows_.size(); }
    std::uint64_t prime() const { return p_; }
    std::vector<std::uint64_t> reduce_vector(const std::vector<LaurentPoly>& v) const;
    /// Inserts the specialization of v if it enlarges the span.
    bool insert(const std::vector<LaurentPoly>& v);
    bool insert_reduced(std::vector<std::uint64_t> v);

private:
    std::size_t width_;
    std::uint64_t q0_, p_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> lead_;
};

/// Reduced row basis maintained incrementally over Q(q); used for span
/// membership and complement extraction.
class RowSpan {
public:
    explicit RowSpan(std::size_t width) : width_(width) {}
    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    /// Reduce v against the span; returns the residual (zero iff v is in the span).
    std::vector<RatFunc> reduce(std::vector<RatFunc> v) const;
    /// Insert v if independent; returns true when the dimension grew.
    bool insert(std::vector<RatFunc> v);

private:
    std::size_t width_;
    std::vector<std::vector<RatFunc>> rows_; // echelon: rows_[k] has leading 1 at lead_[k]
    std::vector<std::size_t> lead_;
};

} // namespace uqp

#endif
