#ifndef UQP_PERM_HPP
#define UQP_PERM_HPP

#include <string>
#include <vector>

namespace uqp {

/// Permutation of {0,...,m-1} in one-line notation.
/// Length means Coxeter length = inversion count; reduced words are over the
/// adjacent transpositions tau_i = (i, i+1), 0-based.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line);
    static Perm identity(int m);
    static Perm transposition(int m, int i); // tau_i
    static std::vector<Perm> all(int m);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& one_line() const { return map_; }

    Perm compose(const Perm& other) const; // (this*other)(i) = this(other(i))
    Perm inverse() const;
    bool is_identity() const;

    int length() const; // inversion count

    /// Canonical reduced word built from the leftmost-descent (selection sort)
    /// decomposition.
    std::vector<int> canonical_reduced_word() const;
    /// Every reduced word; exponential in general, intended for small m.
    std::vector<std::vector<int>> all_reduced_words() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.map_ == b.map_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.map_ < b.map_; }

    std::string str() const; // one-line, 1-based, e.g. "(2 1)"

private:
    std::vector<int> map_;
};

} // namespace uqp

#endif
