// predictions.hpp — closed-form asymptotic values for the CR/QPA phase
// diagram, used as ground truth by the acceptance tests and reporting.
// Points with no closed form return nullopt rather than a guess.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "growthlab/model.hpp"

namespace growthlab {

// Asymptotic leaf fraction of the CR model:
//   alpha = -inf            -> r
//   alpha = 0,  r in (0,1)  -> (1 - sqrt(1-r)) / r
//   alpha = 1,  any r       -> 2/3
//   alpha = +inf, r in (0,1)-> 1 - r + r^2
std::optional<double> leaf_fraction_closed(double alpha, double r);

// Exponent beta with d_max = Theta(N^beta) for the CR model, where stated:
//   r = 1, alpha in (1,inf) -> alpha / (2 alpha - 1)
//   r = 1, alpha = +inf     -> 1/2
//   alpha = 1, any r        -> 1/2
//   r = 1, alpha = -inf     -> 1        (star)
//   r = 1, alpha = 0        -> 1
//   r = 0, alpha in (1,inf] -> 1        (condensation / star)
//   r in (0,1), alpha = +inf-> 1        (stable king gains at linear rate)
std::optional<double> dmax_exponent_closed(double alpha, double r);

// (alpha - 1) / (2 alpha - 1) for alpha > 1; 1/2 at alpha = +inf.
// Throws std::domain_error for alpha <= 1.
double second_layer_exponent_closed(double alpha);

// Q_k = (1-r) r^(k-1): degree distribution of the king's neighbors at
// alpha = +inf, r in (0,1). Throws std::domain_error outside that domain.
double king_neighbor_degree_dist(double r, std::uint32_t k);

// Upper bound 12/19 on the asymptotic QPA(alpha=1) leaf fraction.
double qba_leaf_upper_bound();

struct Prediction {
    std::string quantity;
    ModelFamily family;
    double alpha;
    double r;
    double value;
    std::string source;
};

// All available closed forms over the (alpha, r) grid; unavailable points
// are omitted.
std::vector<Prediction> prediction_table(std::span<const double> alphas,
                                         std::span<const double> rs);

}  // namespace growthlab
