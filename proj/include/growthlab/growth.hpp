// growth.hpp — stochastic attachment kernels and the run driver.
//
// Rng draw order per growth step is fixed and must not be reordered:
//   1. target degree class (finite alpha only; +/-inf take the extreme class)
//   2. member within the class
//   3. redirect coin
//   4. neighbor index (drawn only when the coin redirects)
// Identical (params, seed, n_target) therefore reproduce identical trees.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "growthlab/model.hpp"
#include "growthlab/observables.hpp"
#include "growthlab/rng.hpp"
#include "growthlab/tree.hpp"

namespace growthlab {

// Node i with probability d_i^alpha / sum_j d_j^alpha; for alpha = +inf
// (resp. -inf) a uniform member of the maximum- (minimum-) degree class.
NodeId sample_target(const GrowingTree& tree, double alpha, GrowthRng& rng);

// Target with probability 1/(d_target + 1), otherwise a uniform neighbor;
// together a uniform member of the closed neighborhood of the target.
NodeId redirect_qpa(const GrowingTree& tree, NodeId target, GrowthRng& rng);

// Target with probability 1 - r, otherwise a uniform neighbor.
NodeId redirect_cr(const GrowingTree& tree, NodeId target, double r,
                   GrowthRng& rng);

struct AttachChoice {
    NodeId target;
    NodeId attached;
    bool redirected;
};

// One draw of the two-stage rule without mutating the tree.
AttachChoice sample_attachment(const GrowingTree& tree,
                               const ModelParams& params, GrowthRng& rng);

AttachEvent grow_step(GrowingTree& tree, const ModelParams& params,
                      GrowthRng& rng);

// Geometric snapshot grid 10^2, 10^2.5, ... capped at and including n_target.
std::vector<std::size_t> default_snapshots(std::size_t n_target);

// Grows tree to n_target nodes, recording a RunSummary at each snapshot size
// (strictly increasing, each in [tree.n(), n_target]). Lead changes of the
// unique maximum-degree node are tracked across all steps.
std::vector<RunSummary> grow_to(GrowingTree& tree, const ModelParams& params,
                                std::size_t n_target, GrowthRng& rng,
                                std::span<const std::size_t> snapshots);

}  // namespace growthlab
