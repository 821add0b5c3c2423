#include "catch_amalgamated.hpp"
#include "zeeman/families.hpp"
#include "zeeman/transform.hpp"

using namespace zeeman;

namespace {

Event<Rational> ev(std::initializer_list<long> cs, int id = -1) {
    Vec<Rational> v;
    for (long c : cs) v.push_back(Rational(c));
    Event<Rational> e(std::move(v));
    e.id = id;
    return e;
}

PointCloud<Rational> three_point_cloud() {
    PointCloud<Rational> cloud;
    cloud.box = default_box<Rational>(4);
    cloud.box.hi[0] = Rational(2);
    cloud.events = {ev({1, 0, 0, 0}, 0), ev({0, 1, 0, 0}, 1), ev({1, 1, 0, 0}, 2)};
    return cloud;
}

std::vector<int> ids(const Bitset& bits, const PointCloud<Rational>& cloud) {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.test(i)) out.push_back(cloud.events[i].id);
    return out;
}

}  // namespace

TEST_CASE("relates canonical cases") {
    const auto o = ev({0, 0, 0, 0});
    CHECK(relates(RelationKind::Chron, o, ev({2, 1, 0, 0})));
    CHECK_FALSE(relates(RelationKind::Chron, o, o));
    CHECK(relates(RelationKind::Causal, o, o));
    CHECK(relates(RelationKind::Horismos, o, o));
    CHECK(relates(RelationKind::Horismos, o, ev({1, 1, 0, 0})));
    CHECK_FALSE(relates(RelationKind::Horismos, o, ev({-1, 1, 0, 0})));
    CHECK(relates(RelationKind::HorismosIrr, o, ev({-1, 1, 0, 0})));
    CHECK_FALSE(relates(RelationKind::HorismosIrr, o, o));
    CHECK(relates(RelationKind::ChronEq, o, ev({1, 0, 0, 0})));
    CHECK(relates(RelationKind::ChronEq, o, ev({-1, 1, 0, 0})));
    CHECK_FALSE(relates(RelationKind::ChronEq, o, ev({0, 1, 0, 0})));
}

TEST_CASE("space order needs a frame and follows the partition") {
    const auto o = ev({0, 0, 0, 0});
    const auto frame = default_frame<Rational>(4);
    CHECK(relates(RelationKind::SpaceOrder, o, ev({0, 2, 0, 0}), &frame));
    CHECK_FALSE(relates(RelationKind::SpaceOrder, o, ev({0, -2, 0, 0}), &frame));
    // Light-cone membership counts regardless of side or orientation.
    CHECK(relates(RelationKind::SpaceOrder, o, ev({1, 1, 0, 0}), &frame));
    CHECK(relates(RelationKind::SpaceOrder, o, ev({-1, 1, 0, 0}), &frame));
    CHECK_THROWS_AS(relates(RelationKind::SpaceOrder, o, ev({0, 2, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(relates(RelationKind::Chron, o, ev({1, 0, 0, 0}), &frame),
                    std::invalid_argument);
}

TEST_CASE("future sets on the three-point cloud") {
    const auto cloud = three_point_cloud();
    const auto o = ev({0, 0, 0, 0});
    const auto frame = default_frame<Rational>(4);

    CHECK(ids(future_set(RelationKind::Chron, o, cloud), cloud) == std::vector<int>{0});
    CHECK(ids(future_set(RelationKind::SpaceOrder, o, cloud, &frame), cloud) ==
          std::vector<int>{1, 2});
    CHECK(ids(future_set(RelationKind::ChronEq, o, cloud), cloud) == std::vector<int>{0, 2});
}

TEST_CASE("past sets mirror future sets") {
    PointCloud<Rational> cloud;
    cloud.box = default_box<Rational>(4);
    cloud.events = {ev({-1, 0, 0, 0}, 0)};
    const auto o = ev({0, 0, 0, 0});
    CHECK(ids(past_set(RelationKind::Chron, o, cloud), cloud) == std::vector<int>{0});

    PointCloud<Rational> left;
    left.box = default_box<Rational>(4);
    left.events = {ev({0, -1, 0, 0}, 0)};
    const auto frame = default_frame<Rational>(4);
    CHECK(ids(past_set(RelationKind::SpaceOrder, o, left, &frame), left) ==
          std::vector<int>{0});

    PointCloud<Rational> self;
    self.box = default_box<Rational>(4);
    self.events = {ev({0, 0, 0, 0}, 0)};
    CHECK(ids(past_set(RelationKind::Horismos, o, self), self) == std::vector<int>{0});
}

TEST_CASE("order-theoretic laws on a seeded cloud") {
    const auto cloud = sprinkle(default_box<Rational>(4), 20, 2, Rational(1, 4));
    const auto n = cloud.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& a = cloud.events[i];
            const auto& b = cloud.events[j];
            if (relates(RelationKind::Chron, a, b))
                CHECK(relates(RelationKind::Causal, a, b));
            CHECK_FALSE((relates(RelationKind::Chron, a, b) &&
                         relates(RelationKind::HorismosIrr, a, b)));
            for (std::size_t k = 0; k < n; ++k) {
                const auto& c = cloud.events[k];
                if (relates(RelationKind::Chron, a, b) && relates(RelationKind::Chron, b, c))
                    CHECK(relates(RelationKind::Chron, a, c));
                if (relates(RelationKind::Causal, a, b) && relates(RelationKind::Causal, b, c))
                    CHECK(relates(RelationKind::Causal, a, c));
            }
        }
}

TEST_CASE("symmetric part of the space order is frame independent") {
    const auto cloud = sprinkle(default_box<Rational>(4), 16, 4, Rational(1, 4));
    Vec<Rational> u2{Rational(0), Rational(1), Rational(0)};
    const auto f1 = default_frame<Rational>(4);
    const auto f2 = make_global_frame(u2);
    for (const auto& x : cloud.events) {
        const Bitset s1 = future_set(RelationKind::SpaceOrder, x, cloud, &f1) |
                          past_set(RelationKind::SpaceOrder, x, cloud, &f1);
        const Bitset s2 = future_set(RelationKind::SpaceOrder, x, cloud, &f2) |
                          past_set(RelationKind::SpaceOrder, x, cloud, &f2);
        CHECK(s1 == s2);
        // And it equals (spacelike or null) minus the point itself.
        Bitset expect(cloud.size());
        for (std::size_t j = 0; j < cloud.size(); ++j) {
            const ConeClass c = classify_pair(x, cloud.events[j]);
            if (c == ConeClass::Spacelike || is_null(c)) expect.set(j);
        }
        CHECK(s1 == expect);
    }
}

TEST_CASE("relations invariant under transported group elements") {
    const auto cloud = sprinkle(default_box<Rational>(4), 12, 6, Rational(1, 4));
    const auto frame = default_frame<Rational>(4);
    for (std::uint64_t seed : {1ull, 9ull}) {
        const auto g = random_transform(seed, 4);
        const auto moved_frame = transport_frame(g, frame);
        for (const auto& a : cloud.events)
            for (const auto& b : cloud.events) {
                const auto ga = apply_transform(g, a);
                const auto gb = apply_transform(g, b);
                for (RelationKind k : {RelationKind::Chron, RelationKind::Causal,
                                       RelationKind::Horismos, RelationKind::HorismosIrr,
                                       RelationKind::ChronEq})
                    CHECK(relates(k, a, b) == relates(k, ga, gb));
                CHECK(relates(RelationKind::SpaceOrder, a, b, &frame) ==
                      relates(RelationKind::SpaceOrder, ga, gb, &moved_frame));
            }
    }
}

TEST_CASE("order intersection identity at predicate level") {
    const auto cloud = sprinkle(default_box<Rational>(4), 16, 0, Rational(1, 4));
    const auto frame = default_frame<Rational>(4);
    for (const auto& x : cloud.events)
        for (const auto& y : cloud.events) {
            if (x.id == y.id) continue;
            const bool eq1_sym = relates(RelationKind::SpaceOrder, x, y, &frame) ||
                                 in_past_of(RelationKind::SpaceOrder, x, y, &frame);
            const bool eq2_sym = relates(RelationKind::ChronEq, x, y) ||
                                 in_past_of(RelationKind::ChronEq, x, y);
            CHECK((eq1_sym && eq2_sym) == relates(RelationKind::HorismosIrr, x, y));
        }
}
