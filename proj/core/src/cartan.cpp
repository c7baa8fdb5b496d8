#include "uqp/cartan.hpp"

#include <stdexcept>
#include <string>

namespace uqp {

void CartanData::validate() const {
    if (rank <= 0) throw std::invalid_argument("Cartan data: rank must be positive");
    if (static_cast<int>(a.size()) != rank)
        throw std::invalid_argument("Cartan data: matrix row count differs from rank");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != rank)
            throw std::invalid_argument("Cartan data: matrix is not square of the given rank");
    if (static_cast<int>(d.size()) != rank)
        throw std::invalid_argument("Cartan data: symmetrizer length differs from rank");
    for (int i = 0; i < rank; ++i) {
        if (d[i] <= 0)
            throw std::invalid_argument("Cartan data: symmetrizers d_i must be positive (violated at i=" + std::to_string(i + 1) + ")");
        if (a[i][i] != 2)
            throw std::invalid_argument("Cartan data: a_ii = 2 violated at i=" + std::to_string(i + 1));
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0)
                throw std::invalid_argument("Cartan data: a_ij <= 0 for i != j violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("Cartan data: a_ij = 0 iff a_ji = 0 violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            if (static_cast<long>(d[i]) * a[i][j] != static_cast<long>(d[j]) * a[j][i])
                throw std::invalid_argument("Cartan data: symmetrizability d_i a_ij = d_j a_ji violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
}

CartanData CartanData::a1() { return CartanData{1, {{2}}, {1}}; }
CartanData CartanData::a2() { return CartanData{2, {{2, -1}, {-1, 2}}, {1, 1}}; }
CartanData CartanData::b2() { return CartanData{2, {{2, -1}, {-2, 2}}, {2, 1}}; }
CartanData CartanData::g2() { return CartanData{2, {{2, -1}, {-3, 2}}, {3, 1}}; }

} // namespace uqp
