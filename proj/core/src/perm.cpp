#include "uqp/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uqp {

Perm::Perm(std::vector<int> one_line) : map_(std::move(one_line)) {
    std::vector<char> seen(map_.size(), 0);
    for (int v : map_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Perm Perm::identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

Perm Perm::transposition(int m, int i) {
    if (i < 0 || i + 1 >= m) throw std::invalid_argument("transposition index out of range");
    Perm p = identity(m);
    std::swap(p.map_[static_cast<std::size_t>(i)], p.map_[static_cast<std::size_t>(i) + 1]);
    return p;
}

std::vector<Perm> Perm::all(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Perm Perm::compose(const Perm& other) const {
    if (size() != other.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(map_.size());
    for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(i)] = (*this)(other(i));
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(map_.size());
    for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
    return Perm(std::move(v));
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

std::vector<int> Perm::canonical_reduced_word() const {
    // Repeatedly straighten the leftmost descent of sigma * tau_i; collecting
    // the used i's right-to-left yields a reduced word of sigma.
    std::vector<int> v = map_;
    std::vector<int> used;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                used.push_back(static_cast<int>(i));
                progress = true;
                break;
            }
        }
    }
    std::reverse(used.begin(), used.end());
    if (static_cast<int>(used.size()) != length())
        throw std::logic_error("reduced word length mismatch");
    return used;
}

std::vector<std::vector<int>> Perm::all_reduced_words() const {
    if (length() == 0) return {{}};
    std::vector<std::vector<int>> out;
    // sigma = sigma' * tau_i for every right descent i, with l(sigma') = l(sigma)-1
    for (int i = 0; i + 1 < size(); ++i) {
        if ((*this)(i) > (*this)(i + 1)) {
            Perm shorter = compose(Perm::transposition(size(), i));
            for (auto w : shorter.all_reduced_words()) {
                w.push_back(i);
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < size(); ++i) {
        if (i) os << " ";
        os << (*this)(i) + 1;
    }
    os << ")";
    return os.str();
}

} // namespace uqp
