#include "growthlab/exact_weights.hpp"

#include <cmath>
#include <stdexcept>

namespace growthlab {

double dpow(double base, double exponent) {
    if (exponent == 0.0) return 1.0;
    if (exponent == 1.0) return base;
    return std::pow(base, exponent);
}

namespace {

void check_node(const GrowingTree& tree, NodeId i) {
    if (i >= tree.n()) throw std::out_of_range("node id out of range");
}

// Unnormalized target weights d_i^alpha; for |alpha| > 30 shifted in log
// space by the extreme log-weight (the shift cancels on normalization).
// Infinite alpha yields the limit rule: the indicator of the argmax/argmin
// degree class.
std::vector<double> target_weights(const GrowingTree& tree, double alpha) {
    const std::size_t n = tree.n();
    std::vector<double> t(n);
    if (std::isinf(alpha)) {
        const auto& idx = tree.degree_index();
        const std::uint32_t d = alpha > 0 ? idx.max_degree() : idx.min_degree();
        for (NodeId i = 0; i < n; ++i) t[i] = tree.degree(i) == d ? 1.0 : 0.0;
        return t;
    }
    if (std::abs(alpha) <= 30.0) {
        for (NodeId i = 0; i < n; ++i) t[i] = dpow(tree.degree(i), alpha);
        return t;
    }
    const auto& idx = tree.degree_index();
    const std::uint32_t extreme = alpha > 0 ? idx.max_degree() : idx.min_degree();
    const double shift = alpha * std::log(static_cast<double>(extreme));
    for (NodeId i = 0; i < n; ++i) {
        t[i] = std::exp(alpha * std::log(static_cast<double>(tree.degree(i))) - shift);
    }
    return t;
}

}  // namespace

double qpa_weight(const GrowingTree& tree, NodeId i, double alpha) {
    check_node(tree, i);
    double w = dpow(tree.degree(i), alpha) / (tree.degree(i) + 1.0);
    for (NodeId j : tree.neighbors(i)) {
        w += dpow(tree.degree(j), alpha) / (tree.degree(j) + 1.0);
    }
    return w;
}

double cr_weight(const GrowingTree& tree, NodeId i, double alpha, double r) {
    check_node(tree, i);
    const double da = dpow(tree.degree(i), alpha);
    double s = 0.0;
    for (NodeId j : tree.neighbors(i)) s += dpow(tree.degree(j), alpha - 1.0);
    return da + r * (s - da);
}

NodeWeightVector qpa_weights(const GrowingTree& tree, double alpha) {
    NodeWeightVector out;
    out.w.resize(tree.n());
    for (NodeId i = 0; i < tree.n(); ++i) {
        out.w[i] = qpa_weight(tree, i, alpha);
        out.total += out.w[i];
    }
    return out;
}

NodeWeightVector cr_weights(const GrowingTree& tree, double alpha, double r) {
    NodeWeightVector out;
    out.w.resize(tree.n());
    for (NodeId i = 0; i < tree.n(); ++i) {
        out.w[i] = cr_weight(tree, i, alpha, r);
        out.total += out.w[i];
    }
    return out;
}

double total_weight(const GrowingTree& tree, double alpha) {
    double m = 0.0;
    for (NodeId i = 0; i < tree.n(); ++i) m += dpow(tree.degree(i), alpha);
    return m;
}

std::vector<double> attachment_distribution(const GrowingTree& tree,
                                            const ModelParams& params) {
    const std::size_t n = tree.n();
    const std::vector<double> t = target_weights(tree, params.alpha);
    std::vector<double> p(n, 0.0);

    if (params.family == ModelFamily::QPA) {
        // target i contributes t_i/(d_i+1) to every node of its closed
        // neighborhood
        for (NodeId i = 0; i < n; ++i) {
            const double share = t[i] / (tree.degree(i) + 1.0);
            p[i] += share;
            for (NodeId j : tree.neighbors(i)) p[j] += share;
        }
    } else {
        // p_x = t_x + r*(sum over neighbors i of t_i/d_i  -  t_x); the
        // rearrangement keeps the alpha = 1 result independent of r exactly
        for (NodeId i = 0; i < n; ++i) {
            const double share = t[i] / tree.degree(i);
            for (NodeId j : tree.neighbors(i)) p[j] += share;
        }
        for (NodeId i = 0; i < n; ++i) p[i] = t[i] + params.r * (p[i] - t[i]);
    }

    double total = 0.0;
    for (double v : p) total += v;
    for (double& v : p) v /= total;
    return p;
}

double eta(const GrowingTree& tree, NodeId i, double alpha) {
    check_node(tree, i);
    double s = 0.0;
    for (NodeId j : tree.neighbors(i)) s += dpow(tree.degree(j), alpha - 1.0);
    return s / tree.degree(i);
}

double gamma_alpha(const GrowingTree& tree, double alpha) {
    double s = 0.0;
    for (NodeId i = 1; i < tree.n(); ++i) {
        const NodeId j = tree.parent(i);
        s += dpow(static_cast<double>(tree.degree(i)) * tree.degree(j), alpha - 1.0);
    }
    return 2.0 * alpha * s;
}

}  // namespace growthlab
