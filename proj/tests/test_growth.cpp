#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "growthlab/exact_weights.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/observables.hpp"
#include "test_util.hpp"

using namespace growthlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Empirical per-node frequencies of sample_attachment over `trials` draws.
std::vector<double> empirical_attachment(const GrowingTree& tree,
                                         const ModelParams& params,
                                         std::size_t trials, GrowthRng& rng) {
    std::vector<std::uint64_t> hits(tree.n(), 0);
    for (std::size_t t = 0; t < trials; ++t) {
        ++hits[sample_attachment(tree, params, rng).attached];
    }
    std::vector<double> freq(tree.n());
    for (std::size_t i = 0; i < tree.n(); ++i) {
        freq[i] = static_cast<double>(hits[i]) / static_cast<double>(trials);
    }
    return freq;
}

// |freq - p| <= 4 sigma per node; nodes with p = 0 must never be hit.
void check_within_4_sigma(const std::vector<double>& freq,
                          const std::vector<double>& p, std::size_t trials) {
    REQUIRE(freq.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            CHECK(freq[i] == 0.0);
            continue;
        }
        const double sigma = std::sqrt(p[i] * (1.0 - p[i]) / static_cast<double>(trials));
        CHECK(std::abs(freq[i] - p[i]) <= 4.0 * sigma + 1e-12);
    }
}

}  // namespace

TEST_CASE("rng determinism and draw ranges") {
    GrowthRng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    GrowthRng c(42), d(43);
    bool all_equal = true;
    for (int i = 0; i < 64; ++i) all_equal &= c.next_u64() == d.next_u64();
    CHECK_FALSE(all_equal);

    GrowthRng r(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.next_real();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(r.next_below(10) < 10);
        CHECK(r.next_below(1) == 0);
    }
    CHECK(GrowthRng::derive_seed(1, 0) != GrowthRng::derive_seed(1, 1));
    CHECK(GrowthRng::derive_seed(1, 0) != GrowthRng::derive_seed(2, 0));
}

TEST_CASE("sample_target extremes") {
    const auto star = testutil::star_tree(4);
    GrowthRng rng(1);
    for (int i = 0; i < 200; ++i) CHECK(sample_target(star, kInf, rng) == 0);
    // at -inf only the leaves qualify
    for (int i = 0; i < 200; ++i) CHECK(sample_target(star, -kInf, rng) != 0);
}

TEST_CASE("sample_target matches the target law on the path of 3") {
    const auto path = testutil::path_tree(3);
    GrowthRng rng(0xABCDULL);
    const std::size_t trials = 200000;

    for (double alpha : {0.0, 1.0}) {
        std::vector<std::uint64_t> hits(3, 0);
        for (std::size_t t = 0; t < trials; ++t) ++hits[sample_target(path, alpha, rng)];
        std::vector<double> expected =
            alpha == 0.0 ? std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}
                         : std::vector<double>{0.25, 0.5, 0.25};
        for (int i = 0; i < 3; ++i) {
            const double freq = static_cast<double>(hits[i]) / trials;
            const double sigma = std::sqrt(expected[i] * (1 - expected[i]) / trials);
            CHECK(std::abs(freq - expected[i]) <= 4.0 * sigma);
        }
    }
}

TEST_CASE("redirect kernels: deterministic cases") {
    const auto path = testutil::path_tree(3);
    GrowthRng rng(3);
    for (int i = 0; i < 100; ++i) {
        CHECK(redirect_cr(path, 1, 0.0, rng) == 1);   // r=0: never redirected
        CHECK(redirect_cr(path, 0, 1.0, rng) == 1);   // r=1 at a leaf: its neighbor
    }
    CHECK_THROWS_AS(redirect_cr(path, 9, 0.5, rng), std::out_of_range);
    CHECK_THROWS_AS(redirect_qpa(path, 9, rng), std::out_of_range);
}

TEST_CASE("QPA closed-neighborhood uniformity") {
    // conditioned on the target, every member of the closed neighborhood is
    // returned with probability 1/(d+1)
    GrowthRng treegen(0x77AAULL);
    const auto tree = testutil::random_tree(treegen, 9);
    GrowthRng rng(0x1234ULL);
    const std::size_t trials = 400000;
    for (NodeId target = 0; target < tree.n(); ++target) {
        std::vector<std::uint64_t> hits(tree.n(), 0);
        for (std::size_t t = 0; t < trials; ++t) ++hits[redirect_qpa(tree, target, rng)];
        const double p = 1.0 / (tree.degree(target) + 1.0);
        const double sigma = std::sqrt(p * (1 - p) / trials);
        CHECK(std::abs(static_cast<double>(hits[target]) / trials - p) <= 4 * sigma);
        for (NodeId j : tree.neighbors(target)) {
            CHECK(std::abs(static_cast<double>(hits[j]) / trials - p) <= 4 * sigma);
        }
    }
}

TEST_CASE("process/weight equivalence: empirical vs exact on small trees") {
    GrowthRng treegen(0x88BBULL);
    const std::size_t trials = 1000000;
    const GrowingTree trees[] = {testutil::path_tree(5), testutil::star_tree(6),
                                 testutil::random_tree(treegen, 12)};
    const ModelParams models[] = {{ModelFamily::QPA, 1.0, 0.0},
                                  {ModelFamily::QPA, -2.0, 0.0},
                                  {ModelFamily::CR, 0.5, 0.3},
                                  {ModelFamily::CR, kInf, 0.5},
                                  {ModelFamily::CR, -kInf, 1.0}};
    std::uint64_t stream = 0;
    for (const auto& tree : trees) {
        for (const auto& params : models) {
            GrowthRng rng(GrowthRng::derive_seed(0xEE2025ULL, stream++));
            const auto freq = empirical_attachment(tree, params, trials, rng);
            const auto exact = attachment_distribution(tree, params);
            check_within_4_sigma(freq, exact, trials);
        }
    }
}

TEST_CASE("large |alpha| uses the log-space path and still matches the law") {
    GrowthRng treegen(0x99CCULL);
    const auto tree = testutil::random_tree(treegen, 10);
    const std::size_t trials = 400000;
    for (double alpha : {35.0, -35.0}) {
        GrowthRng rng(GrowthRng::derive_seed(0xAB35ULL, alpha > 0));
        const ModelParams params{ModelFamily::CR, alpha, 0.3};
        const auto freq = empirical_attachment(tree, params, trials, rng);
        const auto exact = attachment_distribution(tree, params);
        const auto brute = testutil::brute_attachment(tree, params);
        for (std::size_t i = 0; i < exact.size(); ++i) {
            CHECK(exact[i] == doctest::Approx(brute[i]).epsilon(1e-10));
        }
        check_within_4_sigma(freq, exact, trials);
    }
}

TEST_CASE("grow_step draws from the exact attachment law and appends a leaf") {
    const auto base = testutil::path_tree(3);
    // marginal attachment of QPA(1) on the path of 3 is (7/24, 5/12, 7/24)
    GrowthRng rng(0x9052ULL);
    const std::size_t trials = 300000;
    std::vector<std::uint64_t> hits(3, 0);
    for (std::size_t t = 0; t < trials; ++t) {
        GrowingTree tree = base;
        GrowthRng step_rng(rng.next_u64());
        const AttachEvent ev = grow_step(tree, {ModelFamily::QPA, 1.0, 0.0}, step_rng);
        CHECK(tree.n() == 4);
        CHECK(ev.new_node == 3);
        CHECK(ev.attached < 3);
        CHECK(ev.redirected == (ev.attached != ev.target));
        ++hits[ev.attached];
    }
    const double expected[] = {7.0 / 24, 5.0 / 12, 7.0 / 24};
    for (int i = 0; i < 3; ++i) {
        const double freq = static_cast<double>(hits[i]) / trials;
        const double sigma = std::sqrt(expected[i] * (1 - expected[i]) / trials);
        CHECK(std::abs(freq - expected[i]) <= 4 * sigma);
    }
}

TEST_CASE("determinism: same seed, same parent array") {
    const ModelParams params{ModelFamily::CR, 1.5, 0.4};
    GrowingTree a, b;
    GrowthRng ra(0xD00DULL), rb(0xD00DULL);
    const std::vector<std::size_t> snaps{2000};
    grow_to(a, params, 2000, ra, snaps);
    grow_to(b, params, 2000, rb, snaps);
    CHECK(a.parents() == b.parents());

    GrowingTree c;
    GrowthRng rc(GrowthRng::derive_seed(0xD00DULL, 1));
    grow_to(c, params, 2000, rc, snaps);
    CHECK(c.parents() != a.parents());
}

TEST_CASE("QPA(-inf) and CR(-inf, 1/2) agree exactly") {
    // identical attachment distributions on any tree...
    GrowthRng treegen(0x31337ULL);
    for (int t = 0; t < 50; ++t) {
        const auto tree = testutil::random_tree(treegen, 2 + treegen.next_below(20));
        const auto pq = attachment_distribution(tree, {ModelFamily::QPA, -kInf, 0.0});
        const auto pc = attachment_distribution(tree, {ModelFamily::CR, -kInf, 0.5});
        REQUIRE(pq.size() == pc.size());
        for (std::size_t i = 0; i < pq.size(); ++i) CHECK(pq[i] == pc[i]);
    }
    // ...and identical rng stream discipline, hence identical grown trees
    GrowingTree tq, tc;
    GrowthRng rq(0xFEED5ULL), rcr(0xFEED5ULL);
    grow_to(tq, {ModelFamily::QPA, -kInf, 0.0}, 3000, rq, std::vector<std::size_t>{3000});
    grow_to(tc, {ModelFamily::CR, -kInf, 0.5}, 3000, rcr, std::vector<std::size_t>{3000});
    CHECK(tq.parents() == tc.parents());
}

TEST_CASE("grow_to snapshot schedule and conservation") {
    GrowingTree tree;
    GrowthRng rng(5);
    const std::vector<std::size_t> snaps{10, 100, 500};
    const auto summaries = grow_to(tree, {ModelFamily::CR, 1.0, 0.0}, 500, rng, snaps);
    REQUIRE(summaries.size() == 3);
    CHECK(summaries[0].n == 10);
    CHECK(summaries[1].n == 100);
    CHECK(summaries[2].n == 500);
    CHECK(tree.n() == 500);
    std::uint64_t degree_sum = 0;
    for (NodeId i = 0; i < tree.n(); ++i) degree_sum += tree.degree(i);
    CHECK(degree_sum == 2 * (tree.n() - 1));

    GrowingTree t2;
    GrowthRng r2(5);
    CHECK_THROWS_AS(grow_to(t2, {ModelFamily::CR, 1.0, 0.0}, 100, r2,
                            std::vector<std::size_t>{200}),
                    std::invalid_argument);
    CHECK_THROWS_AS(grow_to(t2, {ModelFamily::CR, 1.0, 0.0}, 100, r2,
                            std::vector<std::size_t>{50, 50}),
                    std::invalid_argument);
}

TEST_CASE("BA leaf fraction approaches 2/3") {
    GrowingTree tree;
    GrowthRng rng(0xBA2024ULL);
    const auto summaries = grow_to(tree, {ModelFamily::CR, 1.0, 0.0}, 10000, rng,
                                   std::vector<std::size_t>{10000});
    CHECK(summaries[0].leaf_fraction == doctest::Approx(2.0 / 3.0).epsilon(0.03));
}

TEST_CASE("degenerate topologies: star and chain") {
    GrowingTree star;
    GrowthRng r1(99);
    const auto s = grow_to(star, {ModelFamily::CR, kInf, 0.0}, 100, r1,
                           std::vector<std::size_t>{100});
    CHECK(s[0].d1 == 99);
    CHECK(s[0].diameter == 2);

    GrowingTree chain;
    GrowthRng r2(99);
    const auto c = grow_to(chain, {ModelFamily::CR, -kInf, 0.0}, 100, r2,
                           std::vector<std::size_t>{100});
    CHECK(c[0].diameter == 99);
    CHECK(c[0].leaf_fraction == doctest::Approx(2.0 / 100.0));
}

TEST_CASE("default snapshot grid is geometric and ends at n_target") {
    const auto snaps = default_snapshots(100000);
    const std::vector<std::size_t> expected{100, 316, 1000, 3162, 10000, 31623, 100000};
    CHECK(snaps == expected);
    CHECK(default_snapshots(100) == std::vector<std::size_t>{100});
    CHECK(default_snapshots(150) == std::vector<std::size_t>{100, 150});
}

TEST_CASE("lead changes accumulate for the rich club") {
    GrowingTree tree;
    GrowthRng rng(0x1E3D5ULL);
    const auto s = grow_to(tree, {ModelFamily::CR, kInf, 1.0}, 20000, rng,
                           std::vector<std::size_t>{2000, 20000});
    CHECK(s[1].lead_changes >= s[0].lead_changes);
    CHECK(s[1].lead_changes > 0);
}
