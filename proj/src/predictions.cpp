#include "growthlab/predictions.hpp"

#include <cmath>
#include <stdexcept>

namespace growthlab {

std::optional<double> leaf_fraction_closed(double alpha, double r) {
    if (std::isinf(alpha) && alpha < 0) return r;
    if (alpha == 0.0 && r > 0.0 && r < 1.0) return (1.0 - std::sqrt(1.0 - r)) / r;
    if (alpha == 1.0) return 2.0 / 3.0;
    if (std::isinf(alpha) && alpha > 0 && r > 0.0 && r < 1.0) return 1.0 - r + r * r;
    return std::nullopt;
}

std::optional<double> dmax_exponent_closed(double alpha, double r) {
    if (alpha == 1.0) return 0.5;
    if (r == 1.0) {
        if (std::isinf(alpha) && alpha > 0) return 0.5;
        if (alpha > 1.0) return alpha / (2.0 * alpha - 1.0);
        if (std::isinf(alpha) && alpha < 0) return 1.0;  // star
        if (alpha == 0.0) return 1.0;                    // random friend tree
        return std::nullopt;
    }
    if (r == 0.0) {
        if (alpha > 1.0) return 1.0;  // condensation; star at alpha = +inf
        return std::nullopt;
    }
    if (std::isinf(alpha) && alpha > 0) return 1.0;  // stable king, linear rate
    return std::nullopt;
}

double second_layer_exponent_closed(double alpha) {
    if (!(alpha > 1.0)) {
        throw std::domain_error("second_layer_exponent_closed: requires alpha > 1");
    }
    if (std::isinf(alpha)) return 0.5;
    return (alpha - 1.0) / (2.0 * alpha - 1.0);
}

double king_neighbor_degree_dist(double r, std::uint32_t k) {
    if (!(r > 0.0 && r < 1.0) || k < 1) {
        throw std::domain_error("king_neighbor_degree_dist: r in (0,1), k >= 1");
    }
    return (1.0 - r) * std::pow(r, static_cast<double>(k - 1));
}

double qba_leaf_upper_bound() { return 12.0 / 19.0; }

std::vector<Prediction> prediction_table(std::span<const double> alphas,
                                         std::span<const double> rs) {
    std::vector<Prediction> out;
    for (double a : alphas) {
        for (double r : rs) {
            if (auto v = leaf_fraction_closed(a, r)) {
                out.push_back({"leaf_fraction", ModelFamily::CR, a, r, *v,
                               "limit of the leaf fraction"});
            }
            if (auto v = dmax_exponent_closed(a, r)) {
                out.push_back({"dmax_exponent", ModelFamily::CR, a, r, *v,
                               "d_max ~ N^beta"});
            }
            if (a > 1.0 && r == 1.0) {
                out.push_back({"second_layer_exponent", ModelFamily::CR, a, r,
                               second_layer_exponent_closed(a),
                               "second-layer degree ~ N^beta2"});
            }
        }
    }
    out.push_back({"qba_leaf_upper_bound", ModelFamily::QPA, 1.0, 0.0,
                   qba_leaf_upper_bound(), "limsup of the QPA(1) leaf fraction"});
    return out;
}

}  // namespace growthlab
