#include "catch_amalgamated.hpp"
#include "zeeman/cloud.hpp"
#include "zeeman/io.hpp"

using namespace zeeman;

TEST_CASE("sprinkle is deterministic in the seed") {
    const auto a = sprinkle(default_box<Rational>(4), 16, 0, Rational(1, 4));
    const auto b = sprinkle(default_box<Rational>(4), 16, 0, Rational(1, 4));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.events[i].coords == b.events[i].coords);
        CHECK(a.events[i].id == b.events[i].id);
    }
    const auto c = sprinkle(default_box<Rational>(4), 16, 1, Rational(1, 4));
    bool some_difference = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        some_difference = some_difference || a.events[i].coords != c.events[i].coords;
    CHECK(some_difference);
}

TEST_CASE("sprinkle respects box, ids and N=1") {
    const auto box = default_box<Rational>(2);
    const auto cloud = sprinkle(box, 25, 3, Rational(1, 4));
    REQUIRE(cloud.size() == 25);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        CHECK(cloud.events[i].id == static_cast<int>(i));
        for (std::size_t k = 0; k < 2; ++k) {
            CHECK(cloud.events[i].coords[k] >= box.lo[k]);
            CHECK(cloud.events[i].coords[k] <= box.hi[k]);
        }
    }
    const auto single = sprinkle(default_box<Rational>(4), 1, 0);
    CHECK(single.size() == 1);
    CHECK_THROWS_AS(sprinkle(default_box<Rational>(4), 0, 0), std::invalid_argument);
}

TEST_CASE("null pair fraction produces exact null pairs") {
    for (std::size_t n : {16u, 64u}) {
        for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
            const auto cloud = sprinkle(default_box<Rational>(4), n, seed, Rational(1, 4));
            std::size_t null_pairs = 0, pairs = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    ++pairs;
                    if (is_null(classify_pair(cloud.events[i], cloud.events[j]))) ++null_pairs;
                }
            // At least 5% of unordered pairs exactly on a light cone.
            CHECK(null_pairs * 20 >= pairs);
        }
    }
}

TEST_CASE("all events are pairwise distinct") {
    const auto cloud = sprinkle(default_box<Rational>(4), 64, 7, Rational(1, 4));
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = i + 1; j < cloud.size(); ++j)
            CHECK(cloud.events[i].coords != cloud.events[j].coords);
}

TEST_CASE("cloud JSON round trip is exact") {
    const auto cloud = sprinkle(default_box<Rational>(4), 16, 5, Rational(1, 4));
    const json j = cloud_to_json(cloud);
    const auto back = cloud_from_json<Rational>(j);
    REQUIRE(back.size() == cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i)
        CHECK(back.events[i].coords == cloud.events[i].coords);
    CHECK(cloud_to_json(back) == j);
}

TEST_CASE("float sprinkle mirrors the exact stream") {
    const auto exact = sprinkle(default_box<Rational>(2), 8, 9);
    const auto fl = sprinkle(default_box<double>(2), 8, 9);
    REQUIRE(exact.size() == fl.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
        for (std::size_t k = 0; k < 2; ++k) {
            const double from_exact = exact.events[i].coords[k].convert_to<double>();
            CHECK(fl.events[i].coords[k] == Catch::Approx(from_exact).margin(1e-12));
        }
}
