#include "growthlab/master_eq.hpp"

#include <stdexcept>

namespace growthlab {

QGrid solve_q(std::size_t kmax, std::size_t lmax) {
    if (kmax < 1 || lmax < 1) {
        throw std::invalid_argument("solve_q: bounds must be >= 1");
    }
    QGrid g;
    g.kmax = kmax;
    g.lmax = lmax;
    g.q.assign((kmax + 1) * (lmax + 1), 0.0);

    // Forward substitution: the (k+1, l-1) term lies in the previous l-layer
    // and the (k-1, l) term below k in the current one, so l-ascending /
    // k-ascending sweeps never read an unset cell. q_{k,0} = 0 throughout.
    for (std::size_t l = 1; l <= lmax; ++l) {
        for (std::size_t k = 0; k <= kmax; ++k) {
            double rhs = 0.0;
            if (k >= 2) rhs += static_cast<double>(k - 1) * g.at(k - 1, l);
            rhs += static_cast<double>(k + 1) * g.value(k + 1, l - 1);
            if (l == 1 && (k == 0 || k == 1)) rhs += 0.5;
            g.at(k, l) = rhs / static_cast<double>(2 * k + 1);
        }
    }
    return g;
}

std::vector<double> degree_distribution(const QGrid& grid, std::size_t xmax) {
    if (xmax > grid.kmax || xmax > grid.lmax) {
        throw std::invalid_argument(
            "degree_distribution: grid truncation leaves diagonals incomplete");
    }
    std::vector<double> p(xmax + 1, 0.0);
    for (std::size_t x = 1; x <= xmax; ++x) {
        for (std::size_t k = 0; k <= x; ++k) p[x] += grid.at(k, x - k);
    }
    return p;
}

double truncation_mass(const QGrid& grid) {
    double total = 0.0;
    for (double v : grid.q) total += v;
    return 1.0 - total;
}

}  // namespace growthlab
