#ifndef UQP_BRAIDING_HPP
#define UQP_BRAIDING_HPP

#include <string>
#include <vector>

#include "uqp/cartan.hpp"
#include "uqp/linalg.hpp"
#include "uqp/perm.hpp"
#include "uqp/ratfunc.hpp"

namespace uqp {

/// Diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i, stored as the matrix
/// (q_ij) of nonzero scalars.
class BraidingMatrix {
public:
    explicit BraidingMatrix(RatMatrix entries);
    int size() const { return n_; }
    const RatFunc& entry(int i, int j) const; // 0-based
    /// Entry as a Laurent polynomial; the braidings built from Cartan data
    /// are always Laurent monomials.
    const LaurentPoly& laurent_entry(int i, int j) const;

    friend bool operator==(const BraidingMatrix& a, const BraidingMatrix& b) {
        return a.q_ == b.q_;
    }

private:
    int n_;
    RatMatrix q_;
};

/// q_ij = q^{d_i a_ij}.
BraidingMatrix braiding_from_cartan(const CartanData& cd);

/// All permutations sigma with q_ij = q_{sigma(i) sigma(j)}; brute force over S_n.
std::vector<Perm> autdiagr(const BraidingMatrix& b);

/// The three sufficient conditions under which GL(V,c) is torus x| Autdiagr:
/// (i) rows pairwise distinct, (ii) columns pairwise distinct, (iii) no pair
/// i != j whose 2x2 block is constant.
struct LemmaConditions {
    bool rows_separated = false;
    bool cols_separated = false;
    bool no_constant_block = false;
    bool any() const { return rows_separated || cols_separated || no_constant_block; }
};
LemmaConditions lemma_conditions(const BraidingMatrix& b);

/// Monomial linear map g(x_i) = lambda_i x_{sigma(i)}.
struct MonomialMap {
    Perm sigma;
    std::vector<RatFunc> lambda;
    RatMatrix to_matrix() const;
};

/// True iff g (x) g commutes with the braiding, i.e.
/// q_ij lam_{r,j} lam_{s,i} = q_sr lam_{r,j} lam_{s,i} for all i,j,r,s.
/// g must be invertible (exact determinant check); singular g is rejected.
bool glvc_member(const RatMatrix& g, const BraidingMatrix& b);

struct GroupDescription {
    bool decided = false;
    int torus_rank = 0;
    std::vector<Perm> diagram_group;
    std::string structure() const;
};

/// Torus x| Autdiagr when at least one lemma condition holds; undecided otherwise.
GroupDescription glvc_structure(const BraidingMatrix& b);

/// The Hopf-automorphism group of the bosonization: for every diagram
/// automorphism sigma the induced lattice map psi(eps_i) = eps_{sigma(i)} must
/// preserve the character exponents chi_i(K_j) = q^{d_i a_ij}. The exponent
/// identity holds for every diagram automorphism, so a violation raises
/// std::logic_error.
GroupDescription hopf_aut_bosonization(const CartanData& cd);

} // namespace uqp

#endif
