// master_eq.hpp — stationary recurrence for the alpha = -inf degree
// distribution, over q_{k,l} = fraction of nodes with k leaf neighbors and
// l non-leaf neighbors.
#pragma once

#include <cstddef>
#include <vector>

namespace growthlab {

struct QGrid {
    std::size_t kmax = 0;
    std::size_t lmax = 0;
    std::vector<double> q;  // (kmax+1) x (lmax+1), row-major in k

    double at(std::size_t k, std::size_t l) const { return q[k * (lmax + 1) + l]; }
    double& at(std::size_t k, std::size_t l) { return q[k * (lmax + 1) + l]; }

    // 0 for any index outside the grid (including l == 0 boundary cells,
    // which are stored but always 0).
    double value(std::size_t k, std::size_t l) const {
        return (k <= kmax && l <= lmax) ? at(k, l) : 0.0;
    }
};

inline constexpr std::size_t kQGridDefault = 400;

// Solves (2k+1) q_{k,l} = (k-1) q_{k-1,l} + (k+1) q_{k+1,l-1}
//                         + (1/2) [k=0][l=1] + (1/2) [k=1][l=1]
// by forward substitution, l ascending then k ascending; out-of-range terms
// contribute 0 and q_{k,0} = 0. Requires kmax >= 1, lmax >= 1.
QGrid solve_q(std::size_t kmax, std::size_t lmax);

// p_x = sum over k+l = x of q_{k,l}, x = 1..xmax (entry 0 of the result is 0).
// Throws std::invalid_argument when xmax exceeds what the grid supports
// (xmax must be <= kmax and <= lmax so every diagonal is complete).
std::vector<double> degree_distribution(const QGrid& grid, std::size_t xmax);

// 1 - sum of all grid entries: the probability mass beyond the truncation.
double truncation_mass(const QGrid& grid);

}  // namespace growthlab
