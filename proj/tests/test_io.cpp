#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "growthlab/io.hpp"
#include "test_util.hpp"

using namespace growthlab;

TEST_CASE("parent array round-trips through CSV and binary") {
    GrowthRng rng(0x10ADULL);
    for (int t = 0; t < 20; ++t) {
        const auto tree = testutil::random_tree(rng, 2 + rng.next_below(500));

        std::stringstream csv;
        save_parents_csv(tree, csv);
        const auto from_csv = load_parents_csv(csv);
        CHECK(from_csv.parents() == tree.parents());

        std::stringstream bin(std::ios::in | std::ios::out | std::ios::binary);
        save_parents_binary(tree, bin);
        const auto from_bin = load_parents_binary(bin);
        CHECK(from_bin.parents() == tree.parents());
        CHECK(from_bin.n() == tree.n());
        for (NodeId i = 0; i < tree.n(); ++i) {
            CHECK(from_bin.degree(i) == tree.degree(i));
        }
    }
}

TEST_CASE("parent CSV layout") {
    const auto path = testutil::path_tree(4);
    std::stringstream out;
    save_parents_csv(path, out);
    CHECK(out.str() == "node,parent\n1,0\n2,1\n3,2\n");
}

TEST_CASE("binary form is 4 bytes per record, little endian") {
    const auto star = testutil::star_tree(4);
    std::stringstream out(std::ios::in | std::ios::out | std::ios::binary);
    save_parents_binary(star, out);
    const std::string bytes = out.str();
    REQUIRE(bytes.size() == 12);  // 3 records
    for (char c : bytes) CHECK(c == 0);  // every parent is node 0
}

TEST_CASE("malformed parent files are rejected") {
    std::stringstream no_header("1,0\n");
    CHECK_THROWS_AS(load_parents_csv(no_header), std::runtime_error);

    std::stringstream bad_first("node,parent\n1,1\n");
    CHECK_THROWS_AS(load_parents_csv(bad_first), std::runtime_error);

    std::stringstream not_older("node,parent\n1,0\n2,5\n");
    CHECK_THROWS_AS(load_parents_csv(not_older), std::runtime_error);

    std::stringstream gap("node,parent\n1,0\n3,0\n");
    CHECK_THROWS_AS(load_parents_csv(gap), std::runtime_error);

    std::stringstream empty("");
    CHECK_THROWS_AS(load_parents_csv(empty), std::runtime_error);

    std::stringstream partial(std::ios::in | std::ios::out | std::ios::binary);
    partial.write("\0\0\0\0\0\0", 6);  // 1.5 records
    CHECK_THROWS_AS(load_parents_binary(partial), std::runtime_error);
}

TEST_CASE("histogram CSV round-trip") {
    GrowthRng rng(0x6157ULL);
    const auto tree = testutil::random_tree(rng, 300);
    const auto hist = degree_histogram(tree);

    std::stringstream out;
    write_histogram_csv(hist, out);
    const std::string text = out.str();
    CHECK(text.rfind("degree,count\n", 0) == 0);

    std::stringstream in(text);
    const auto back = read_histogram_csv(in);
    CHECK(back.n == hist.n);
    for (std::uint32_t d = 1; d <= hist.max_degree(); ++d) {
        CHECK(back.count(d) == hist.count(d));
    }
}

TEST_CASE("summary JSON carries the documented fields") {
    const auto star = testutil::star_tree(12);
    const auto s = summarize(star, 2.0, 3);
    const ModelParams params{ModelFamily::CR,
                             std::numeric_limits<double>::infinity(), 0.5};
    const auto j = summary_json(s, params, 99, 4);
    CHECK(j["n"] == 12);
    CHECK(j["d1"] == 11);
    CHECK(j["d2"] == 1);
    CHECK(j["argmax_id"] == 0);
    CHECK(j["diameter"] == 2);
    CHECK(j["lead_changes"] == 3);
    CHECK(j["model"] == "cr");
    CHECK(j["alpha"] == "inf");
    CHECK(j["r"] == 0.5);
    CHECK(j["seed"] == 99);
    CHECK(j["replica"] == 4);
    CHECK(j["eta_cv"].is_null());
    CHECK(j["leaf_fraction"].get<double>() == doctest::Approx(11.0 / 12.0));

    const ModelParams finite{ModelFamily::QPA, 1.5, 0.0};
    const auto j2 = summary_json(s, finite, 1, 0);
    CHECK(j2["alpha"].get<double>() == 1.5);
    CHECK(j2["model"] == "qpa");
}

TEST_CASE("fmt9 and round9") {
    CHECK(fmt9(0.5) == "0.5");
    CHECK(fmt9(2.0 / 3.0) == "0.666666667");
    CHECK(round9(2.0 / 3.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(fmt9(12345.0) == "12345");
}

TEST_CASE("alpha parsing accepts tokens and numbers") {
    CHECK(*parse_alpha("inf") == std::numeric_limits<double>::infinity());
    CHECK(*parse_alpha("-inf") == -std::numeric_limits<double>::infinity());
    CHECK(*parse_alpha("+inf") == std::numeric_limits<double>::infinity());
    CHECK(*parse_alpha("2.5") == 2.5);
    CHECK(*parse_alpha("-3") == -3.0);
    CHECK_FALSE(parse_alpha("abc").has_value());
    CHECK_FALSE(parse_alpha("1.5x").has_value());
    CHECK_FALSE(parse_alpha("nan").has_value());
    CHECK_FALSE(parse_alpha("").has_value());
    CHECK(format_alpha(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_alpha(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_alpha(0.5) == "0.5");
}
