// observables.hpp — measured quantities of a grown tree.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "growthlab/tree.hpp"

namespace growthlab {

struct DegreeHistogram {
    std::vector<std::uint64_t> counts;  // counts[d] = nodes of degree d; counts[0] == 0
    std::uint64_t n = 0;

    std::uint32_t max_degree() const {
        return counts.empty() ? 0 : static_cast<std::uint32_t>(counts.size() - 1);
    }
    std::uint64_t count(std::uint32_t d) const {
        return d < counts.size() ? counts[d] : 0;
    }
};

struct ExtremeDegrees {
    std::uint32_t d1;    // largest degree
    std::uint32_t d2;    // second-largest degree (multiset: equals d1 on ties)
    NodeId argmax_id;    // lowest id among maximum-degree nodes
};

struct WeibullFit {
    double shape;         // k
    double scale;         // lambda
    std::uint32_t d_lo;   // fit window
    std::uint32_t d_hi;
    double rms_residual;  // in ln(-ln CCDF) vs ln d coordinates
};

struct SlopeFit {
    double slope;
    double std_error;
};

// Observables of one tree at one snapshot size.
struct RunSummary {
    std::uint64_t n = 0;
    double leaf_fraction = 0.0;
    std::uint32_t d1 = 0;
    std::uint32_t d2 = 0;
    NodeId argmax_id = 0;
    int diameter = 0;
    std::uint64_t lead_changes = 0;
    std::optional<double> eta_cv;  // absent for infinite alpha or < 2 qualifying nodes
    DegreeHistogram histogram;
};

inline constexpr std::uint32_t kEtaDminDefault = 5;

DegreeHistogram degree_histogram(const GrowingTree& tree);
double leaf_fraction(const GrowingTree& tree);

// Exact tree diameter via the double BFS sweep.
int diameter(const GrowingTree& tree);

ExtremeDegrees extreme_degrees(const GrowingTree& tree);

// Coefficient of variation (population stddev / mean) of eta_i over nodes
// with degree >= dmin; nullopt with fewer than 2 qualifying nodes.
std::optional<double> eta_dispersion(const GrowingTree& tree, double alpha,
                                     std::uint32_t dmin);

// Least-squares fit of ln(-ln CCDF(d)) against ln d over [d_lo, d_hi], where
// d_hi is the largest degree with >= 10 nodes of strictly larger degree.
// Slope = shape k, intercept = -k ln(lambda). nullopt when the window holds
// fewer than 5 distinct degree values with CCDF in (0,1).
std::optional<WeibullFit> weibull_tail_fit(const DegreeHistogram& hist,
                                           std::uint32_t d_lo);

// OLS slope of ln(value) vs ln(size) with its standard error.
// Throws std::invalid_argument for < 3 points, std::domain_error for
// nonpositive coordinates.
SlopeFit scaling_exponent(std::span<const std::pair<double, double>> points);

// Total variation distance (1/2) sum |p_x - q_x| over the union of supports
// (index = value; the shorter vector is zero-padded). Each input must sum to
// 1 within 1e-6 or std::invalid_argument is thrown.
double tv_distance(std::span<const double> p, std::span<const double> q);

RunSummary summarize(const GrowingTree& tree, double alpha,
                     std::uint64_t lead_changes,
                     std::uint32_t eta_dmin = kEtaDminDefault);

}  // namespace growthlab
