// test_util.hpp — shared helpers for the unit suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "growthlab/model.hpp"
#include "growthlab/rng.hpp"
#include "growthlab/tree.hpp"

namespace testutil {

// Uniform-attachment random tree with n nodes.
inline growthlab::GrowingTree random_tree(growthlab::GrowthRng& rng, std::size_t n) {
    growthlab::GrowingTree tree;
    while (tree.n() < n) {
        tree.add_leaf(static_cast<growthlab::NodeId>(rng.next_below(tree.n())));
    }
    return tree;
}

// 0-1-2-...-(n-1)
inline growthlab::GrowingTree path_tree(std::size_t n) {
    growthlab::GrowingTree tree;
    while (tree.n() < n) tree.add_leaf(static_cast<growthlab::NodeId>(tree.n() - 1));
    return tree;
}

// node 0 is the center
inline growthlab::GrowingTree star_tree(std::size_t n) {
    growthlab::GrowingTree tree;
    while (tree.n() < n) tree.add_leaf(0);
    return tree;
}

// Degree classes rebuilt from scratch, for auditing the incremental index.
inline std::map<std::uint32_t, std::vector<growthlab::NodeId>> rebuild_classes(
    const growthlab::GrowingTree& tree) {
    std::map<std::uint32_t, std::vector<growthlab::NodeId>> classes;
    for (growthlab::NodeId i = 0; i < tree.n(); ++i) {
        classes[tree.degree(i)].push_back(i);
    }
    return classes;
}

// Independent brute-force enumeration of the two-stage attachment rule:
// plain d^alpha normalization (|alpha| <= 30 or infinite), then the family's
// redirect kernel. Kept free of any library evaluation shortcuts on purpose.
inline std::vector<double> brute_attachment(const growthlab::GrowingTree& tree,
                                            const growthlab::ModelParams& params) {
    using growthlab::NodeId;
    const std::size_t n = tree.n();
    std::vector<double> target(n, 0.0);
    if (std::isinf(params.alpha)) {
        std::uint32_t extreme = tree.degree(0);
        for (NodeId i = 1; i < n; ++i) {
            extreme = params.alpha > 0 ? std::max(extreme, tree.degree(i))
                                       : std::min(extreme, tree.degree(i));
        }
        std::size_t hits = 0;
        for (NodeId i = 0; i < n; ++i) hits += tree.degree(i) == extreme;
        for (NodeId i = 0; i < n; ++i) {
            if (tree.degree(i) == extreme) target[i] = 1.0 / static_cast<double>(hits);
        }
    } else {
        double total = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            target[i] = std::pow(static_cast<double>(tree.degree(i)), params.alpha);
            total += target[i];
        }
        for (double& v : target) v /= total;
    }
    std::vector<double> p(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
        const double d = tree.degree(i);
        const double stay = params.family == growthlab::ModelFamily::QPA
                                ? 1.0 / (d + 1.0)
                                : 1.0 - params.r;
        p[i] += target[i] * stay;
        for (NodeId j : tree.neighbors(i)) p[j] += target[i] * (1.0 - stay) / d;
    }
    return p;
}

}  // namespace testutil
