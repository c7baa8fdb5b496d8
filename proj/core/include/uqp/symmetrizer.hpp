#ifndef UQP_SYMMETRIZER_HPP
#define UQP_SYMMETRIZER_HPP

#include <cstddef>
#include <vector>

#include "uqp/linalg.hpp"
#include "uqp/perm.hpp"
#include "uqp/tensor.hpp"

namespace uqp {

struct NicholsLimits {
    int max_degree = 8;      // hard bound on tensor degree
    bool parallel = false;   // compute independent blocks concurrently
};

/// Image of the Matsumoto section applied to a basis word:
/// rho_m(s(sigma))(w) = coefficient * (permuted word). The coefficient is a
/// product of braiding entries, hence a Laurent monomial for Cartan braidings.
/// Independent of the chosen reduced word of sigma.
std::pair<LaurentPoly, Word> matsumoto_apply_raw(const std::vector<int>& reduced_word,
                                                 const Word& w, const BraidingMatrix& b);
TensorElement matsumoto_apply(const Perm& sigma, const Word& w, const BraidingMatrix& b);

/// Matrix of the quantum symmetrizer S_m on the span of the words of one
/// multidegree (diagonal braidings preserve multidegree). Entry (row, col) is
/// the coefficient of words[row] in S_m(words[col]).
struct SymmetrizerBlock {
    int degree = 0;
    std::vector<int> mdeg;
    std::vector<Word> words; // lexicographic order
    LaurentMatrix matrix;
};

SymmetrizerBlock symmetrizer_block(int m, const std::vector<int>& mu, const BraidingMatrix& b,
                                   const NicholsLimits& limits = {});

/// Reference assembly summing all m! Matsumoto images directly; the
/// production assembly factors the sum through the minimal coset
/// representatives of S_m / S_{m-1} and is tested against this one.
SymmetrizerBlock symmetrizer_block_direct(int m, const std::vector<int>& mu,
                                          const BraidingMatrix& b,
                                          const NicholsLimits& limits = {});

/// Graded dimension of the Nichols algebra: sum of block ranks over the
/// multidegrees of total degree m.
///
/// Ranks are exact. Small blocks are eliminated symbolically (fraction-free
/// Bareiss over the Laurent ring). For large blocks the rank is certified by
/// a two-sided squeeze: a nonzero specialized minor mod p bounds the rank
/// from below, and exact kernel vectors (products of lower-degree kernel
/// elements by basis words, independent after specialization) bound it from
/// above; when the two meet the rank is exact, otherwise the block falls
/// back to the symbolic elimination.
std::size_t nichols_dimension(int m, const BraidingMatrix& b, const NicholsLimits& limits = {});

/// Dimensions for all degrees 0..max_degree in one sweep (shares the
/// lower-degree kernel computations across degrees).
std::vector<std::size_t> nichols_dimension_table(int max_degree, const BraidingMatrix& b,
                                                 const NicholsLimits& limits = {});

struct Relation {
    int degree = 0;
    std::vector<int> mdeg;
    TensorElement element; // normalized: lexicographically least word has coefficient 1
};

struct RelationBasis {
    std::vector<Relation> relations;
    std::vector<Relation> at(int degree) const;
};

/// Minimal defining relations of the Nichols algebra up to max_degree:
/// per degree and multidegree, a basis of a complement of the part of the
/// ideal generated by the lower-degree kernels inside Ker S_m.
RelationBasis minimal_relations(const BraidingMatrix& b, int max_degree,
                                const NicholsLimits& limits = {});

} // namespace uqp

#endif
