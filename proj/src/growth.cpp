#include "growthlab/growth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "growthlab/exact_weights.hpp"

namespace growthlab {

namespace {

// d^alpha memoized per alpha; degrees recur heavily, so steady-state target
// sampling does no pow/exp at all. Valid only on the |alpha| <= 30 fast path
// (no overflow for d <= 1e7 there).
struct DegreePowCache {
    double alpha = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> val;  // val[d] = d^alpha

    double get(std::uint32_t d, double a) {
        if (a != alpha) {
            alpha = a;
            val.assign(1, 0.0);
        }
        while (val.size() <= d) {
            val.push_back(dpow(static_cast<double>(val.size()), a));
        }
        return val[d];
    }
};

thread_local DegreePowCache pow_cache;
thread_local std::vector<std::pair<double, std::uint32_t>> class_cdf;  // (cum weight, degree)

}  // namespace

NodeId sample_target(const GrowingTree& tree, double alpha, GrowthRng& rng) {
    const auto& idx = tree.degree_index();
    if (std::isinf(alpha)) {
        const std::uint32_t d = alpha > 0 ? idx.max_degree() : idx.min_degree();
        const auto members = idx.bucket(d);
        return members[rng.next_below(members.size())];
    }

    // class weights c_d = n_d * d^alpha over occupied degrees; for
    // |alpha| > 30 computed as exp(alpha ln d - m) with the extreme
    // log-weight m subtracted to avoid overflow/underflow
    class_cdf.clear();
    double cum = 0.0;
    if (std::abs(alpha) <= 30.0) {
        for (const auto& [d, members] : idx.classes()) {
            cum += static_cast<double>(members.size()) * pow_cache.get(d, alpha);
            class_cdf.emplace_back(cum, d);
        }
    } else {
        const std::uint32_t extreme = alpha > 0 ? idx.max_degree() : idx.min_degree();
        const double shift = alpha * std::log(static_cast<double>(extreme));
        for (const auto& [d, members] : idx.classes()) {
            cum += static_cast<double>(members.size()) *
                   std::exp(alpha * std::log(static_cast<double>(d)) - shift);
            class_cdf.emplace_back(cum, d);
        }
    }

    const double u = rng.next_real() * cum;
    std::size_t lo = 0, hi = class_cdf.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (class_cdf[mid].first > u) hi = mid; else lo = mid + 1;
    }
    const auto members = idx.bucket(class_cdf[lo].second);
    return members[rng.next_below(members.size())];
}

NodeId redirect_qpa(const GrowingTree& tree, NodeId target, GrowthRng& rng) {
    if (target >= tree.n()) throw std::out_of_range("redirect_qpa: invalid target");
    const double d = tree.degree(target);
    if (rng.next_real() < d / (d + 1.0)) {
        const auto nb = tree.neighbors(target);
        return nb[rng.next_below(nb.size())];
    }
    return target;
}

NodeId redirect_cr(const GrowingTree& tree, NodeId target, double r,
                   GrowthRng& rng) {
    if (target >= tree.n()) throw std::out_of_range("redirect_cr: invalid target");
    if (rng.next_real() < r) {
        const auto nb = tree.neighbors(target);
        return nb[rng.next_below(nb.size())];
    }
    return target;
}

AttachChoice sample_attachment(const GrowingTree& tree,
                               const ModelParams& params, GrowthRng& rng) {
    const NodeId target = sample_target(tree, params.alpha, rng);
    const NodeId attached = params.family == ModelFamily::QPA
                                ? redirect_qpa(tree, target, rng)
                                : redirect_cr(tree, target, params.r, rng);
    return {target, attached, attached != target};
}

AttachEvent grow_step(GrowingTree& tree, const ModelParams& params,
                      GrowthRng& rng) {
    const AttachChoice c = sample_attachment(tree, params, rng);
    const NodeId id = tree.add_leaf(c.attached);
    return {id, c.target, c.attached, c.redirected};
}

std::vector<std::size_t> default_snapshots(std::size_t n_target) {
    std::vector<std::size_t> out;
    for (int k = 4;; ++k) {  // 10^(k/2) from 10^2 upward
        const auto s = static_cast<std::size_t>(std::llround(std::pow(10.0, k / 2.0)));
        if (s >= n_target) break;
        if (s >= 2) out.push_back(s);
    }
    if (out.empty() || out.back() != n_target) out.push_back(n_target);
    return out;
}

namespace {

// A lead change is counted only between consecutive steps at which the
// maximum-degree node is unique.
class KingTracker {
public:
    explicit KingTracker(const GrowingTree& tree) { observe(tree); }

    void observe(const GrowingTree& tree) {
        const auto& idx = tree.degree_index();
        const auto members = idx.bucket(idx.max_degree());
        if (members.size() != 1) return;
        const NodeId king = members[0];
        if (last_unique_ != kNoParent && last_unique_ != king) ++lead_changes_;
        last_unique_ = king;
    }

    std::uint64_t lead_changes() const { return lead_changes_; }

private:
    NodeId last_unique_ = kNoParent;
    std::uint64_t lead_changes_ = 0;
};

}  // namespace

std::vector<RunSummary> grow_to(GrowingTree& tree, const ModelParams& params,
                                std::size_t n_target, GrowthRng& rng,
                                std::span<const std::size_t> snapshots) {
    if (n_target < tree.n()) {
        throw std::invalid_argument("grow_to: n_target below current size");
    }
    for (std::size_t s = 0; s < snapshots.size(); ++s) {
        const bool sorted = s == 0 || snapshots[s] > snapshots[s - 1];
        if (!sorted || snapshots[s] < tree.n() || snapshots[s] > n_target) {
            throw std::invalid_argument("grow_to: bad snapshot schedule");
        }
    }

    tree.reserve(n_target);
    std::vector<RunSummary> out;
    out.reserve(snapshots.size());
    KingTracker king(tree);
    std::size_t si = 0;
    for (;;) {
        while (si < snapshots.size() && tree.n() == snapshots[si]) {
            out.push_back(summarize(tree, params.alpha, king.lead_changes()));
            ++si;
        }
        if (tree.n() >= n_target) break;
        grow_step(tree, params, rng);
        king.observe(tree);
    }
    return out;
}

}  // namespace growthlab
