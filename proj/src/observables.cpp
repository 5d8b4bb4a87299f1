#include "growthlab/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "growthlab/exact_weights.hpp"

namespace growthlab {

DegreeHistogram degree_histogram(const GrowingTree& tree) {
    DegreeHistogram h;
    h.n = tree.n();
    std::uint32_t dmax = 0;
    for (NodeId i = 0; i < tree.n(); ++i) dmax = std::max(dmax, tree.degree(i));
    h.counts.assign(dmax + 1, 0);
    for (NodeId i = 0; i < tree.n(); ++i) ++h.counts[tree.degree(i)];
    return h;
}

double leaf_fraction(const GrowingTree& tree) {
    return static_cast<double>(tree.degree_index().count(1)) /
           static_cast<double>(tree.n());
}

namespace {

// BFS from src; returns (farthest node, its distance).
std::pair<NodeId, int> farthest_node(const GrowingTree& tree, NodeId src) {
    std::vector<int> dist(tree.n(), -1);
    std::vector<NodeId> queue;
    queue.reserve(tree.n());
    queue.push_back(src);
    dist[src] = 0;
    NodeId best = src;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        for (NodeId v : tree.neighbors(u)) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            if (dist[v] > dist[best]) best = v;
            queue.push_back(v);
        }
    }
    return {best, dist[best]};
}

}  // namespace

int diameter(const GrowingTree& tree) {
    const auto [a, ignored] = farthest_node(tree, 0);
    return farthest_node(tree, a).second;
}

ExtremeDegrees extreme_degrees(const GrowingTree& tree) {
    ExtremeDegrees e{0, 0, 0};
    for (NodeId i = 0; i < tree.n(); ++i) {
        const std::uint32_t d = tree.degree(i);
        if (d > e.d1) {
            e.d2 = e.d1;
            e.d1 = d;
            e.argmax_id = i;
        } else if (d > e.d2) {
            e.d2 = d;
        }
    }
    return e;
}

std::optional<double> eta_dispersion(const GrowingTree& tree, double alpha,
                                     std::uint32_t dmin) {
    std::vector<double> values;
    for (NodeId i = 0; i < tree.n(); ++i) {
        if (tree.degree(i) >= dmin) values.push_back(eta(tree, i, alpha));
    }
    if (values.size() < 2) return std::nullopt;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return std::sqrt(var) / mean;
}

std::optional<WeibullFit> weibull_tail_fit(const DegreeHistogram& hist,
                                           std::uint32_t d_lo) {
    const std::uint32_t dmax = hist.max_degree();
    if (d_lo < 1 || d_lo > dmax || hist.n == 0) return std::nullopt;

    // above[d] = number of nodes with degree strictly greater than d
    std::vector<std::uint64_t> above(dmax + 1, 0);
    for (std::uint32_t d = dmax; d-- > 0;) above[d] = above[d + 1] + hist.count(d + 1);

    std::uint32_t d_hi = 0;
    for (std::uint32_t d = dmax; d >= 1; --d) {
        if (above[d] >= 10) { d_hi = d; break; }
    }
    if (d_hi < d_lo) return std::nullopt;

    std::vector<double> xs, ys;
    const double n = static_cast<double>(hist.n);
    for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
        if (hist.count(d) == 0) continue;  // points at occupied degrees only
        const double ccdf = static_cast<double>(above[d]) / n;
        if (ccdf <= 0.0 || ccdf >= 1.0) continue;
        xs.push_back(std::log(static_cast<double>(d)));
        ys.push_back(std::log(-std::log(ccdf)));
    }
    if (xs.size() < 5) return std::nullopt;

    const auto m = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) { sx += xs[i]; sy += ys[i]; }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) return std::nullopt;
    const double k = sxy / sxx;
    const double intercept = my - k * mx;
    if (!(k > 0.0)) return std::nullopt;

    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + k * xs[i]);
        ss_res += r * r;
    }
    WeibullFit fit;
    fit.shape = k;
    fit.scale = std::exp(-intercept / k);
    fit.d_lo = d_lo;
    fit.d_hi = d_hi;
    fit.rms_residual = std::sqrt(ss_res / m);
    return fit;
}

SlopeFit scaling_exponent(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        throw std::invalid_argument("scaling_exponent: need at least 3 points");
    }
    std::vector<double> xs, ys;
    for (const auto& [size, value] : points) {
        if (size <= 0.0 || value <= 0.0) {
            throw std::domain_error("scaling_exponent: nonpositive input");
        }
        xs.push_back(std::log(size));
        ys.push_back(std::log(value));
    }
    const auto m = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) { sx += xs[i]; sy += ys[i]; }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - my - slope * (xs[i] - mx);
        ss_res += r * r;
    }
    const double se = std::sqrt(ss_res / (m - 2.0) / sxx);
    return {slope, se};
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    double sp = 0, sq = 0;
    for (double v : p) sp += v;
    for (double v : q) sq += v;
    if (std::abs(sp - 1.0) > 1e-6 || std::abs(sq - 1.0) > 1e-6) {
        throw std::invalid_argument("tv_distance: inputs must sum to 1");
    }
    const std::size_t m = std::max(p.size(), q.size());
    double tv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double pi = i < p.size() ? p[i] : 0.0;
        const double qi = i < q.size() ? q[i] : 0.0;
        tv += std::abs(pi - qi);
    }
    return 0.5 * tv;
}

RunSummary summarize(const GrowingTree& tree, double alpha,
                     std::uint64_t lead_changes, std::uint32_t eta_dmin) {
    RunSummary s;
    s.n = tree.n();
    s.leaf_fraction = leaf_fraction(tree);
    const ExtremeDegrees e = extreme_degrees(tree);
    s.d1 = e.d1;
    s.d2 = e.d2;
    s.argmax_id = e.argmax_id;
    s.diameter = diameter(tree);
    s.lead_changes = lead_changes;
    if (std::isfinite(alpha)) s.eta_cv = eta_dispersion(tree, alpha, eta_dmin);
    s.histogram = degree_histogram(tree);
    return s;
}

}  // namespace growthlab
