#include "growthlab/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "growthlab/exact_weights.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/master_eq.hpp"
#include "growthlab/observables.hpp"
#include "growthlab/rng.hpp"
#include "growthlab/tree.hpp"

namespace growthlab {

namespace {

GrowingTree random_tree(GrowthRng& rng, std::size_t n) {
    GrowingTree tree;
    while (tree.n() < n) tree.add_leaf(static_cast<NodeId>(rng.next_below(tree.n())));
    return tree;
}

// Independent enumeration of the two-stage rule: target probabilities by
// direct normalization, then the family's redirect kernel. Deliberately
// avoids attachment_distribution's evaluation order.
std::vector<double> brute_force_distribution(const GrowingTree& tree,
                                             const ModelParams& params) {
    const std::size_t n = tree.n();
    std::vector<double> target(n, 0.0);
    if (std::isinf(params.alpha)) {
        std::uint32_t extreme = tree.degree(0);
        for (NodeId i = 1; i < n; ++i) {
            const std::uint32_t d = tree.degree(i);
            extreme = params.alpha > 0 ? std::max(extreme, d) : std::min(extreme, d);
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
        const double stay = params.family == ModelFamily::QPA
                                ? 1.0 / (d + 1.0)
                                : 1.0 - params.r;
        p[i] += target[i] * stay;
        for (NodeId j : tree.neighbors(i)) p[j] += target[i] * (1.0 - stay) / d;
    }
    return p;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

CheckResult check_process_weight_equivalence(std::uint64_t seed) {
    GrowthRng rng(seed);
    const double inf = std::numeric_limits<double>::infinity();
    const double alphas[] = {-inf, -2.0, 0.0, 0.5, 1.0, 2.0, inf};
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto tree = random_tree(rng, 2 + rng.next_below(11));
        for (double alpha : alphas) {
            std::vector<ModelParams> models = {{ModelFamily::QPA, alpha, 0.0},
                                               {ModelFamily::CR, alpha, 0.0},
                                               {ModelFamily::CR, alpha, 0.3},
                                               {ModelFamily::CR, alpha, 1.0}};
            for (const auto& params : models) {
                const auto dist = attachment_distribution(tree, params);
                worst = std::max(worst, max_abs_diff(dist, brute_force_distribution(tree, params)));
                if (!std::isinf(alpha)) {
                    // normalized weight formulas must match the enumeration
                    const NodeWeightVector wv =
                        params.family == ModelFamily::QPA
                            ? qpa_weights(tree, alpha)
                            : cr_weights(tree, alpha, params.r);
                    std::vector<double> norm(wv.w);
                    for (double& v : norm) v /= wv.total;
                    worst = std::max(worst, max_abs_diff(dist, norm));
                }
            }
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max per-node deviation %.3e", worst);
    return {"process_weight_equivalence", worst <= 1e-12, detail};
}

CheckResult check_alpha1_identity(std::uint64_t seed) {
    GrowthRng rng(seed);
    bool pass = true;
    double worst = 0.0;
    for (int t = 0; t < 100 && pass; ++t) {
        const auto tree = random_tree(rng, 2 + rng.next_below(30));
        for (double r : {0.0, 0.3, 0.5, 0.7, 1.0}) {
            for (NodeId i = 0; i < tree.n(); ++i) {
                if (cr_weight(tree, i, 1.0, r) != static_cast<double>(tree.degree(i))) {
                    pass = false;
                }
            }
        }
        const auto ba = attachment_distribution(tree, {ModelFamily::CR, 1.0, 0.0});
        const auto redirected = attachment_distribution(tree, {ModelFamily::CR, 1.0, 0.7});
        worst = std::max(worst, max_abs_diff(ba, redirected));
    }
    pass = pass && worst <= 1e-15;
    char detail[96];
    std::snprintf(detail, sizeof(detail),
                  "weight identity exact, r=0 vs r=0.7 deviation %.3e", worst);
    return {"alpha1_degree_identity", pass, detail};
}

CheckResult check_master_equation() {
    const QGrid g = solve_q(120, 120);
    bool pass = g.at(0, 1) == 0.5 && g.at(1, 1) == 0.5 / 3.0;
    double worst = 0.0;
    for (std::size_t l = 1; l <= g.lmax; ++l) {
        for (std::size_t k = 0; k <= g.kmax; ++k) {
            double rhs = k >= 1 ? static_cast<double>(k - 1) * g.value(k - 1, l) : 0.0;
            rhs += static_cast<double>(k + 1) * g.value(k + 1, l - 1);
            if (l == 1 && k <= 1) rhs += 0.5;
            const double residual =
                std::abs(static_cast<double>(2 * k + 1) * g.at(k, l) - rhs);
            worst = std::max(worst, residual);
            if (g.at(k, l) < 0.0) pass = false;
        }
    }
    pass = pass && worst <= 1e-14;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max residual %.3e", worst);
    return {"master_equation_residuals", pass, detail};
}

CheckResult check_sampler_matches_enumeration(std::uint64_t seed) {
    GrowthRng rng(seed);
    const double inf = std::numeric_limits<double>::infinity();
    const ModelParams models[] = {{ModelFamily::QPA, 1.0, 0.0},
                                  {ModelFamily::QPA, -inf, 0.0},
                                  {ModelFamily::CR, 1.0, 0.7},
                                  {ModelFamily::CR, -2.0, 0.3},
                                  {ModelFamily::CR, inf, 1.0}};
    const std::size_t trials = 200000;
    bool pass = true;
    double worst_sigmas = 0.0;
    for (int t = 0; t < 2; ++t) {
        const auto tree = random_tree(rng, 6 + rng.next_below(6));
        for (const auto& params : models) {
            std::vector<std::uint64_t> hits(tree.n(), 0);
            for (std::size_t s = 0; s < trials; ++s) {
                ++hits[sample_attachment(tree, params, rng).attached];
            }
            const auto exact = attachment_distribution(tree, params);
            for (NodeId i = 0; i < tree.n(); ++i) {
                const double freq =
                    static_cast<double>(hits[i]) / static_cast<double>(trials);
                if (exact[i] == 0.0) {
                    pass &= freq == 0.0;
                    continue;
                }
                const double sigma = std::sqrt(exact[i] * (1.0 - exact[i]) /
                                               static_cast<double>(trials));
                worst_sigmas = std::max(worst_sigmas, std::abs(freq - exact[i]) / sigma);
            }
        }
    }
    pass = pass && worst_sigmas <= 4.0;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "worst deviation %.2f sigma (limit 4)",
                  worst_sigmas);
    return {"sampler_matches_enumeration", pass, detail};
}

CheckResult check_diameter_oracle(std::uint64_t seed) {
    GrowthRng rng(seed);
    bool pass = true;
    for (int t = 0; t < 60 && pass; ++t) {
        const auto tree = random_tree(rng, 2 + rng.next_below(199));
        // all-pairs BFS eccentricity
        int best = 0;
        for (NodeId s = 0; s < tree.n(); ++s) {
            std::vector<int> dist(tree.n(), -1);
            std::vector<NodeId> queue{s};
            dist[s] = 0;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                for (NodeId v : tree.neighbors(queue[h])) {
                    if (dist[v] < 0) {
                        dist[v] = dist[queue[h]] + 1;
                        best = std::max(best, dist[v]);
                        queue.push_back(v);
                    }
                }
            }
        }
        if (diameter(tree) != best) pass = false;
    }
    return {"diameter_double_sweep", pass,
            pass ? "matches all-pairs BFS" : "double sweep disagrees with all-pairs BFS"};
}

}  // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed) {
    std::vector<CheckResult> results;
    results.push_back(check_process_weight_equivalence(GrowthRng::derive_seed(seed, 0)));
    results.push_back(check_alpha1_identity(GrowthRng::derive_seed(seed, 1)));
    results.push_back(check_master_equation());
    results.push_back(check_sampler_matches_enumeration(GrowthRng::derive_seed(seed, 2)));
    results.push_back(check_diameter_oracle(GrowthRng::derive_seed(seed, 3)));
    return results;
}

}  // namespace growthlab
