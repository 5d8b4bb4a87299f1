// exact_weights.hpp — exact node weights and attachment distributions.
//
// These are the closed-form counterparts of the stochastic kernels in
// growth.hpp and serve as the oracle the samplers are validated against.
#pragma once

#include <vector>

#include "growthlab/model.hpp"
#include "growthlab/tree.hpp"

namespace growthlab {

// base^e with exact fast paths for e == 0 and e == 1, so integer-valued
// identities (e.g. the alpha = 1 weight reduction) hold in floating point.
double dpow(double base, double exponent);

struct NodeWeightVector {
    std::vector<double> w;
    double total = 0.0;
};

// QPA weight of node i: d_i^a/(d_i+1) + sum over neighbors j of d_j^a/(d_j+1).
double qpa_weight(const GrowingTree& tree, NodeId i, double alpha);

// CR weight of node i: (1-r) d_i^a + r sum over neighbors j of d_j^(a-1),
// evaluated as d_i^a + r*(sum - d_i^a) so that alpha = 1 gives exactly d_i.
double cr_weight(const GrowingTree& tree, NodeId i, double alpha, double r);

NodeWeightVector qpa_weights(const GrowingTree& tree, double alpha);
NodeWeightVector cr_weights(const GrowingTree& tree, double alpha, double r);

// Total graph weight sum_i d_i^alpha (identical for QPA and CR).
double total_weight(const GrowingTree& tree, double alpha);

// Exact per-node attachment probability, by enumerating (target, redirect
// outcome) pairs. Infinite alpha uses the limit rule: targets uniform over
// the argmax/argmin degree class, then the family's redirect.
std::vector<double> attachment_distribution(const GrowingTree& tree,
                                            const ModelParams& params);

// Balance ratio eta_i = sum over neighbors j of d_j^(alpha-1), divided by d_i.
double eta(const GrowingTree& tree, NodeId i, double alpha);

// 2*alpha * sum over edges (i,j) of (d_i d_j)^(alpha-1).
double gamma_alpha(const GrowingTree& tree, double alpha);

}  // namespace growthlab
