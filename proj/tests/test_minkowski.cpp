#include "catch_amalgamated.hpp"
#include "zeeman/cloud.hpp"
#include "zeeman/frame.hpp"
#include "zeeman/transform.hpp"

using namespace zeeman;

namespace {

Event<Rational> ev(std::initializer_list<long> cs) {
    Vec<Rational> v;
    for (long c : cs) v.push_back(Rational(c));
    return Event<Rational>(std::move(v));
}

Vec<Rational> rvec(std::initializer_list<long> cs) {
    Vec<Rational> v;
    for (long c : cs) v.push_back(Rational(c));
    return v;
}

}  // namespace

TEST_CASE("quadratic form on canonical vectors") {
    CHECK(quadratic_form(rvec({1, 0, 0, 0})) == Rational(1));
    CHECK(quadratic_form(rvec({1, 1, 0, 0})) == Rational(0));
    CHECK(quadratic_form(rvec({3, 1, 2, 2})) == Rational(0));
    CHECK(quadratic_form(rvec({0, 1, 0, 0})) == Rational(-1));
    CHECK(quadratic_form(Vec<double>{1.0, 0.5, 0.0, 0.0}) == 0.75);
}

TEST_CASE("classify_pair canonical cases") {
    const auto o = ev({0, 0, 0, 0});
    CHECK(classify_pair(o, ev({1, 0, 0, 0})) == ConeClass::TimelikeFuture);
    CHECK(classify_pair(o, ev({0, 1, 0, 0})) == ConeClass::Spacelike);
    CHECK(classify_pair(o, o) == ConeClass::Equal);
    CHECK(classify_pair(o, ev({1, 1, 0, 0})) == ConeClass::NullFuture);
    CHECK(classify_pair(o, ev({-1, 1, 0, 0})) == ConeClass::NullPast);
    CHECK(classify_pair(o, ev({-1, 0, 0, 0})) == ConeClass::TimelikePast);
}

TEST_CASE("classify_pair float null band") {
    const Event<double> x({0.0, 0.0, 0.0, 0.0});
    const Event<double> y({-2.0, 1.0, 1.0, 1.41421356});
    CHECK(classify_pair(x, y, 1e-9) == ConeClass::NullPast);
    // Without the tolerance band the rounded coordinate is strictly inside.
    CHECK(classify_pair(x, y, 0.0) == ConeClass::TimelikePast);
}

TEST_CASE("classify trichotomy and duality on a seeded cloud") {
    const auto cloud = sprinkle(default_box<Rational>(4), 24, 5, Rational(1, 4));
    for (const auto& a : cloud.events)
        for (const auto& b : cloud.events) {
            const ConeClass ab = classify_pair(a, b);
            const ConeClass ba = classify_pair(b, a);
            switch (ab) {
                case ConeClass::Equal: CHECK(ba == ConeClass::Equal); break;
                case ConeClass::TimelikeFuture: CHECK(ba == ConeClass::TimelikePast); break;
                case ConeClass::TimelikePast: CHECK(ba == ConeClass::TimelikeFuture); break;
                case ConeClass::NullFuture: CHECK(ba == ConeClass::NullPast); break;
                case ConeClass::NullPast: CHECK(ba == ConeClass::NullFuture); break;
                case ConeClass::Spacelike: CHECK(ba == ConeClass::Spacelike); break;
            }
        }
}

TEST_CASE("euclidean ball membership") {
    const auto o = ev({0, 0, 0, 0});
    CHECK(euclidean_ball_contains(o, Rational(1), o));
    CHECK_FALSE(euclidean_ball_contains(o, Rational(1), ev({1, 0, 0, 0})));
    CHECK(euclidean_ball_contains(o, Rational(2), ev({1, 1, 1, 0})));
    CHECK_THROWS_AS(euclidean_ball_contains(o, Rational(0), o), std::invalid_argument);
}

TEST_CASE("partition side with the default frame") {
    const auto frame = default_frame<Rational>(4);
    const auto o = ev({0, 0, 0, 0});
    CHECK(partition_side(frame, o, ev({0, 1, 0, 0})) == Side::Positive);
    CHECK(partition_side(frame, o, ev({0, -1, 0, 0})) == Side::Negative);
    // On the hyperplane: resolved by the e2 tie-break.
    CHECK(partition_side(frame, o, ev({0, 0, 1, 0})) == Side::Positive);
    CHECK(partition_side(frame, o, ev({0, 0, -1, 2})) == Side::Negative);
    CHECK_THROWS_AS(partition_side(frame, o, ev({1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("global frame strictness: positive iff reversed negative") {
    const auto frame = default_frame<Rational>(4);
    const auto cloud = sprinkle(default_box<Rational>(4), 24, 3, Rational(1, 4));
    for (const auto& a : cloud.events)
        for (const auto& b : cloud.events) {
            if (classify_pair(a, b) != ConeClass::Spacelike) continue;
            const Side ab = partition_side(frame, a, b);
            const Side ba = partition_side(frame, b, a);
            CHECK(((ab == Side::Positive) == (ba == Side::Negative)));
        }
}

TEST_CASE("rational boost v=3/5 maps (1,1,0,0) to (2,2,0,0)") {
    // p=2, q=1 parametrizes gamma = (p^2+q^2)/(2pq) = 5/4, v = 3/5.
    const auto L = boost_matrix<Rational>(4, 1, Rational(2), Rational(1));
    const auto g = make_transform<Rational>(L, Rational(1), rvec({0, 0, 0, 0}));
    const auto img = apply_transform(g, ev({1, 1, 0, 0}));
    CHECK(img.coords == rvec({2, 2, 0, 0}));
    CHECK(quadratic_form(img.coords) == Rational(0));
}

TEST_CASE("identity and dilatation transforms") {
    const auto id = identity_transform<Rational>(4);
    CHECK(apply_transform(id, ev({1, 2, 3, 4})).coords == rvec({1, 2, 3, 4}));
    auto dil = make_transform<Rational>(identity_matrix<Rational>(4), Rational(2),
                                        rvec({0, 0, 0, 0}));
    CHECK(apply_transform(dil, ev({1, 0, 0, 0})).coords == rvec({2, 0, 0, 0}));
}

TEST_CASE("random_transform is deterministic and Q-preserving") {
    for (std::uint64_t seed : {0ull, 7ull, 41ull}) {
        const auto g1 = random_transform(seed, 4);
        const auto g2 = random_transform(seed, 4);
        CHECK(g1.linear == g2.linear);
        CHECK(g1.scale == g2.scale);
        CHECK(g1.translation == g2.translation);
        // Q(L(ei) +/- L(ej)) == Q(ei +/- ej) for all basis pairs.
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Vec<Rational> vij(4, Rational(0));
                vij[i] += Rational(1);
                vij[j] += Rational(1);
                CHECK(quadratic_form(apply_linear(g1.linear, vij)) == quadratic_form(vij));
                Vec<Rational> wij(4, Rational(0));
                wij[i] += Rational(1);
                wij[j] -= Rational(1);
                CHECK(quadratic_form(apply_linear(g1.linear, wij)) == quadratic_form(wij));
            }
    }
}

TEST_CASE("random_transform is orthochronous") {
    const auto g = random_transform(7, 4);
    const auto a = apply_transform(g, ev({0, 0, 0, 0}));
    const auto b = apply_transform(g, ev({1, 0, 0, 0}));
    CHECK(classify_pair(a, b) == ConeClass::TimelikeFuture);
}

TEST_CASE("class invariance under random group elements") {
    const auto cloud = sprinkle(default_box<Rational>(4), 16, 1, Rational(1, 4));
    for (std::uint64_t seed : {2ull, 3ull}) {
        const auto g = random_transform(seed, 4);
        for (const auto& a : cloud.events)
            for (const auto& b : cloud.events)
                CHECK(classify_pair(apply_transform(g, a), apply_transform(g, b)) ==
                      classify_pair(a, b));
    }
}

TEST_CASE("time reflection fails transform validation") {
    const auto refl = time_reflection<Rational>(4);
    CHECK_THROWS_AS(validate_transform(refl), std::invalid_argument);
}
