#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zeeman/families.hpp"
#include "zeeman/io.hpp"
#include "zeeman/transform.hpp"

namespace zeeman {

constexpr std::size_t kMaxStoredCounterexamples = 8;

struct VerificationReport {
    std::string property_id;
    json config = json::object();
    std::size_t counterexample_count = 0;
    std::vector<json> counterexamples;

    bool pass() const { return counterexample_count == 0; }

    void fail(json detail) {
        ++counterexample_count;
        if (counterexamples.size() < kMaxStoredCounterexamples)
            counterexamples.push_back(std::move(detail));
    }

    void check(bool ok, const json& detail) {
        if (!ok) fail(detail);
    }

    void merge(const VerificationReport& other) {
        counterexample_count += other.counterexample_count;
        for (const auto& c : other.counterexamples)
            if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(c);
    }

    json to_json() const {
        return json{{"property", property_id},
                    {"pass", pass()},
                    {"counterexample_count", counterexample_count},
                    {"counterexamples", counterexamples},
                    {"config", config}};
    }
};

enum class V1Mutation { None, KeepLightConeInZ };

/// V1: ZT or ZS membership iff Z membership, for every
/// (center, radius, point) triple over the cloud.
template <class S>
inline VerificationReport verify_corollary_union(const PointCloud<S>& cloud,
                                                 const std::vector<S>& radii_sq,
                                                 V1Mutation mutation = V1Mutation::None) {
    VerificationReport rep;
    rep.property_id = "V1";
    const PairCache<S> cache = build_pair_cache(cloud, radii_sq);
    const std::size_t n = cloud.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const ConeClass c = cache.cls_at(x, y);
            const bool in_zt = nbhd_class_filter(TopologyKind::ZT, c);
            const bool in_zs = nbhd_class_filter(TopologyKind::ZS, c);
            const bool in_z = (mutation == V1Mutation::KeepLightConeInZ)
                                  ? true
                                  : nbhd_class_filter(TopologyKind::Z, c);
            for (std::size_t r = 0; r < cache.radii_sq.size(); ++r) {
                const bool ball = cache.in_ball(x, y, r);
                if ((ball && (in_zt || in_zs)) != (ball && in_z)) {
                    rep.fail(json{{"x", cloud.events[x].id},
                                  {"y", cloud.events[y].id},
                                  {"epsilon_sq", scalar_to_json(cache.radii_sq[r])},
                                  {"class", cone_class_name(c)}});
                    break;
                }
            }
        }
    }
    return rep;
}

/// V2: eq1-symmetric relatedness and eq2-symmetric
/// relatedness hold together exactly on the irreflexive horismos.
template <class S>
inline VerificationReport verify_order_intersection(const PointCloud<S>& cloud,
                                                    const std::vector<PartitionFrame<S>>& frames) {
    VerificationReport rep;
    rep.property_id = "V2";
    const std::size_t n = cloud.size();
    const PartitionFrame<S>* no_frame = nullptr;
    std::size_t null_pairs = 0, pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ++pairs;
            if (is_null(classify_pair(cloud.events[i], cloud.events[j], cloud.null_tol)))
                ++null_pairs;
        }
    rep.config["pairs"] = pairs;
    rep.config["null_pairs"] = null_pairs;
    if (pairs > 0 && null_pairs * 20 < pairs)
        rep.fail(json{{"detail", "fewer than 5% of pairs are null"},
                      {"null_pairs", null_pairs},
                      {"pairs", pairs}});

    for (std::size_t f = 0; f < frames.size(); ++f) {
        const PartitionFrame<S>* frame = &frames[f];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Event<S>& x = cloud.events[i];
                const Event<S>& y = cloud.events[j];
                const bool eq1 = in_future_of(RelationKind::SpaceOrder, x, y, frame, cloud.null_tol) ||
                                 in_past_of(RelationKind::SpaceOrder, x, y, frame, cloud.null_tol);
                const bool eq2 = in_future_of(RelationKind::ChronEq, x, y, no_frame, cloud.null_tol) ||
                                 in_past_of(RelationKind::ChronEq, x, y, no_frame, cloud.null_tol);
                const bool horismos =
                    relates(RelationKind::HorismosIrr, x, y, no_frame, cloud.null_tol);
                rep.check((eq1 && eq2) == horismos,
                          json{{"x", x.id}, {"y", y.id}, {"frame", f}});
            }
        }
    }
    return rep;
}

namespace detail {

template <class S>
inline Bitset time_cone_trace(const PointCloud<S>& cloud, std::size_t x) {
    Bitset bits(cloud.size());
    for (std::size_t y = 0; y < cloud.size(); ++y) {
        const ConeClass c = classify_pair(cloud.events[x], cloud.events[y], cloud.null_tol);
        if (c == ConeClass::Equal || is_timelike(c)) bits.set(y);
    }
    return bits;
}

template <class S>
inline Bitset space_cone_trace(const PointCloud<S>& cloud, std::size_t x) {
    Bitset bits(cloud.size());
    for (std::size_t y = 0; y < cloud.size(); ++y) {
        const ConeClass c = classify_pair(cloud.events[x], cloud.events[y], cloud.null_tol);
        if (c == ConeClass::Equal || c == ConeClass::Spacelike) bits.set(y);
    }
    return bits;
}

// Complement-intersection of the eq1 (or eq2) future/past sets of x.
template <class S>
inline Bitset complement_intersection(const PointCloud<S>& cloud, SubbasisOrder order,
                                      std::size_t x, const PartitionFrame<S>* frame,
                                      Eq12Mutation mutation = Eq12Mutation::None) {
    Bitset bits(cloud.size());
    for (std::size_t y = 0; y < cloud.size(); ++y) {
        const ConeClass c = classify_pair(cloud.events[x], cloud.events[y], cloud.null_tol);
        const bool fut = detail::subbasis_future<S>(order, c, cloud.events[x], cloud.events[y],
                                                    frame, cloud.null_tol, mutation, false);
        const bool past = detail::subbasis_future<S>(order, c, cloud.events[x], cloud.events[y],
                                                     frame, cloud.null_tol, mutation, true);
        if (!fut && !past) bits.set(y);
    }
    return bits;
}

}  // namespace detail

/// V3: the interval topology of the spacelike order does not depend on the
/// partition frame, and neither do the ZT intersection traces; also the
/// closed-form identity (X - S+(x)) & (X - S-(x)) = trace of T(x) + {x}.
template <class S>
inline VerificationReport verify_partition_invariance(const PointCloud<S>& cloud,
                                                      const std::vector<PartitionFrame<S>>& frames,
                                                      const std::vector<S>& radii_sq) {
    VerificationReport rep;
    rep.property_id = "V3";
    const PairCache<S> cache = build_pair_cache(cloud, radii_sq);
    const SetFamily balls = ball_family_cached(cloud, cache);

    std::vector<FiniteTopology> interval_topos, zt_topos;
    for (const PartitionFrame<S>& f : frames) {
        const SetFamily sub = interval_subbasis(cloud, SubbasisOrder::SpaceOrderEq1, &f);
        interval_topos.push_back(generate_topology(sub));
        zt_topos.push_back(generate_topology(merge_families(sub, balls)));
    }
    for (std::size_t a = 0; a < frames.size(); ++a) {
        for (std::size_t b = a + 1; b < frames.size(); ++b) {
            rep.check(compare_topologies(interval_topos[a], interval_topos[b]) == TopoOrder::Equal,
                      json{{"detail", "interval topologies differ"},
                           {"frame_a", a},
                           {"frame_b", b},
                           {"result", topo_order_name(
                                          compare_topologies(interval_topos[a], interval_topos[b]))}});
            rep.check(compare_topologies(zt_topos[a], zt_topos[b]) == TopoOrder::Equal,
                      json{{"detail", "ZT intersection traces differ"},
                           {"frame_a", a},
                           {"frame_b", b}});
        }
    }
    for (std::size_t f = 0; f < frames.size(); ++f) {
        for (std::size_t x = 0; x < cloud.size(); ++x) {
            const Bitset lhs = detail::complement_intersection(
                cloud, SubbasisOrder::SpaceOrderEq1, x, &frames[f]);
            rep.check(lhs == detail::time_cone_trace(cloud, x),
                      json{{"detail", "closed-form T(x)+{x} identity fails"},
                           {"frame", f},
                           {"x", cloud.events[x].id}});
        }
    }
    return rep;
}

/// V4: on the finite sample, the generated intersection
/// topology (interval subbasis with the ball family) equals the generated
/// Zeeman-trace topology, and the per-center basic-set identities hold.
/// Mutated eq1 / eq2 subbases (clause "or y -> x" dropped) are run as
/// controls; the report records whether each was caught.
template <class S>
inline VerificationReport verify_intersection_theorems(const PointCloud<S>& cloud,
                                                       const std::vector<PartitionFrame<S>>& frames,
                                                       const std::vector<S>& radii_sq) {
    VerificationReport rep;
    rep.property_id = "V4";
    const PairCache<S> cache = build_pair_cache(cloud, radii_sq);
    const SetFamily balls = ball_family_cached(cloud, cache);
    const SetFamily zt_traces = zeeman_trace_family_cached(cloud, TopologyKind::ZT, cache);
    const SetFamily zs_traces = zeeman_trace_family_cached(cloud, TopologyKind::ZS, cache);
    const PartitionFrame<S>* no_frame = nullptr;
    const FiniteTopology zt_topo = generate_topology(zt_traces);
    const FiniteTopology zs_topo = generate_topology(zs_traces);

    auto basic_identity_holds = [&](SubbasisOrder order, const PartitionFrame<S>* frame,
                                    Eq12Mutation mutation) {
        for (std::size_t x = 0; x < cloud.size(); ++x) {
            const Bitset cone = detail::complement_intersection(cloud, order, x, frame, mutation);
            const Bitset want = order == SubbasisOrder::SpaceOrderEq1
                                    ? detail::time_cone_trace(cloud, x)
                                    : detail::space_cone_trace(cloud, x);
            if (cone != want) return false;
        }
        return true;
    };

    // ZT identity, one pass per frame.
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const SetFamily sub = interval_subbasis(cloud, SubbasisOrder::SpaceOrderEq1, &frames[f]);
        rep.check(compare_topologies(generate_topology(merge_families(sub, balls)), zt_topo) ==
                      TopoOrder::Equal,
                  json{{"detail", "theorem-2 topology mismatch"}, {"frame", f}});
        rep.check(basic_identity_holds(SubbasisOrder::SpaceOrderEq1, &frames[f],
                                       Eq12Mutation::None),
                  json{{"detail", "theorem-2 basic-set identity fails"}, {"frame", f}});
    }
    // ZS identity (frame-free).
    {
        const SetFamily sub = interval_subbasis(cloud, SubbasisOrder::ChronEqEq2, no_frame);
        rep.check(compare_topologies(generate_topology(merge_families(sub, balls)), zs_topo) ==
                      TopoOrder::Equal,
                  json{{"detail", "theorem-3 topology mismatch"}});
        rep.check(basic_identity_holds(SubbasisOrder::ChronEqEq2, no_frame, Eq12Mutation::None),
                  json{{"detail", "theorem-3 basic-set identity fails"}});
    }

    // Mutation controls; detectable whenever the cloud has an exact null pair.
    const bool eq1_detected =
        !basic_identity_holds(SubbasisOrder::SpaceOrderEq1, &frames[0], Eq12Mutation::DropNull) ||
        compare_topologies(
            generate_topology(merge_families(
                interval_subbasis(cloud, SubbasisOrder::SpaceOrderEq1, &frames[0],
                                  Eq12Mutation::DropNull),
                balls)),
            zt_topo) != TopoOrder::Equal;
    const bool eq2_detected =
        !basic_identity_holds(SubbasisOrder::ChronEqEq2, no_frame, Eq12Mutation::DropNull) ||
        compare_topologies(
            generate_topology(merge_families(
                interval_subbasis(cloud, SubbasisOrder::ChronEqEq2, no_frame,
                                  Eq12Mutation::DropNull),
                balls)),
            zs_topo) != TopoOrder::Equal;
    rep.config["mutation_eq1_detected"] = eq1_detected;
    rep.config["mutation_eq2_detected"] = eq2_detected;
    return rep;
}

/// V5: every supplied element of the symmetry group G leaves
/// the cone classification and all frame-free relation matrices invariant,
/// and the SpaceOrder matrix invariant under the transported frame. The
/// time-reflection control must flip the Chron matrix to its transpose.
template <class S>
inline VerificationReport verify_symmetry(const PointCloud<S>& cloud,
                                          const std::vector<Transform<S>>& transforms) {
    VerificationReport rep;
    rep.property_id = "V5";
    const std::size_t n = cloud.size();
    const PartitionFrame<S> frame = default_frame<S>(cloud.dim());

    const std::vector<RelationKind> frame_free = {RelationKind::Chron, RelationKind::Causal,
                                                  RelationKind::Horismos, RelationKind::HorismosIrr,
                                                  RelationKind::ChronEq};
    std::vector<std::vector<Bitset>> before;
    for (RelationKind k : frame_free) before.push_back(relation_matrix(cloud, k));
    const std::vector<Bitset> before_space = relation_matrix(cloud, RelationKind::SpaceOrder, &frame);

    for (std::size_t t = 0; t < transforms.size(); ++t) {
        PointCloud<S> image = cloud;
        for (auto& e : image.events) e = apply_transform(transforms[t], e);
        for (std::size_t k = 0; k < frame_free.size(); ++k) {
            rep.check(relation_matrix(image, frame_free[k]) == before[k],
                      json{{"detail", "relation matrix not invariant"},
                           {"relation", relation_name(frame_free[k])},
                           {"transform", t}});
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (classify_pair(image.events[i], image.events[j], cloud.null_tol) !=
                    classify_pair(cloud.events[i], cloud.events[j], cloud.null_tol)) {
                    rep.fail(json{{"detail", "cone class not invariant"},
                                  {"transform", t},
                                  {"x", cloud.events[i].id},
                                  {"y", cloud.events[j].id}});
                    i = n;
                    break;
                }
        const PartitionFrame<S> moved = transport_frame(transforms[t], frame);
        rep.check(relation_matrix(image, RelationKind::SpaceOrder, &moved) == before_space,
                  json{{"detail", "space-order matrix not invariant under transported frame"},
                       {"transform", t}});
    }

    // Time-reflection control.
    {
        const Transform<S> reflect = time_reflection<S>(cloud.dim());
        PointCloud<S> image = cloud;
        for (auto& e : image.events) e = apply_transform(reflect, e);
        const std::vector<Bitset> chron = relation_matrix(image, RelationKind::Chron);
        std::vector<Bitset> transposed(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (before[0][i].test(j)) transposed[j].set(i);
        const bool flips = (chron == transposed);
        const bool asymmetric = (transposed != before[0]);
        rep.config["reflection_control_detected"] = flips && asymmetric;
        rep.check(flips, json{{"detail", "time reflection did not transpose the Chron matrix"}});
    }
    return rep;
}

/// V6: axis-trace and path-continuity expectations of the three topologies.
inline VerificationReport verify_axis_and_paths(const std::vector<std::size_t>& dims,
                                                int samples = 101, int axes_per_case = 10,
                                                std::uint64_t seed = 0) {
    VerificationReport rep;
    rep.property_id = "V6";
    using S = Rational;
    for (std::size_t d : dims) {
        for (int i = 0; i < axes_per_case; ++i) {
            const Transform<S> g = random_transform(seed + 7919 * i + 13 * d, d);
            Vec<S> e0(d, S(0)), e1(d, S(0)), en(d, S(0));
            e0[0] = S(1);
            e1[1] = S(1);
            en[0] = S(1);
            en[1] = S(1);
            const Vec<S> time_dir = apply_linear(g.linear, e0);
            const Vec<S> space_dir = apply_linear(g.linear, e1);
            const Vec<S> null_dir = apply_linear(g.linear, en);
            const Event<S> center(g.translation);
            const S eps = S(1) + S(i) / S(7);

            struct Case {
                TopologyKind kind;
                AxisKind axis;
                const Vec<S>* dir;
                bool want_singleton;
                bool want_interval;
            };
            const Case cases[] = {
                {TopologyKind::ZT, AxisKind::Time, &time_dir, false, true},
                {TopologyKind::ZT, AxisKind::Space, &space_dir, true, false},
                {TopologyKind::ZS, AxisKind::Time, &time_dir, true, false},
                {TopologyKind::ZS, AxisKind::Space, &space_dir, false, true},
                {TopologyKind::Z, AxisKind::Time, &time_dir, false, true},
                {TopologyKind::Z, AxisKind::Space, &space_dir, false, true},
                {TopologyKind::Z, AxisKind::Null, &null_dir, true, false},
            };
            for (const Case& c : cases) {
                const AxisTraceReport tr = axis_trace(c.kind, center, eps, c.axis, *c.dir, samples);
                rep.check(tr.trace_is_singleton == c.want_singleton &&
                              tr.trace_is_euclidean_interval == c.want_interval,
                          json{{"detail", "axis trace expectation failed"},
                               {"topology", topology_name(c.kind)},
                               {"axis", axis_name(c.axis)},
                               {"dim", d},
                               {"case", i}});
            }
        }
    }

    // Canonical polylines (d = 4 forms).
    {
        using E = Event<S>;
        auto ev = [](std::initializer_list<int> num, std::initializer_list<int> den) {
            Vec<S> v;
            auto itd = den.begin();
            for (int n : num) v.push_back(Rational(n, *itd++));
            return E(v);
        };
        const Polyline<S> feynman{{ev({0, 0, 0, 0}, {1, 1, 1, 1}), ev({1, 0, 0, 0}, {1, 1, 1, 1}),
                                   ev({0, 1, 0, 0}, {1, 2, 1, 1})}};
        const PathReport p1 = path_check(feynman, TopologyKind::ZT);
        rep.check(p1.continuous && p1.zigzag &&
                      p1.segment_classes ==
                          std::vector<ConeClass>{ConeClass::TimelikeFuture, ConeClass::TimelikePast},
                  json{{"detail", "Feynman zigzag case failed"}});

        const Polyline<S> null_edge{{ev({0, 0, 0, 0}, {1, 1, 1, 1}), ev({1, 1, 0, 0}, {1, 1, 1, 1})}};
        rep.check(!path_check(null_edge, TopologyKind::ZT).continuous,
                  json{{"detail", "null segment accepted by ZT"}});
        rep.check(!path_check(null_edge, TopologyKind::Z).continuous,
                  json{{"detail", "null segment accepted by Z"}});

        const Polyline<S> spacelike{{ev({0, 0, 0, 0}, {1, 1, 1, 1}), ev({0, 1, 0, 0}, {1, 1, 1, 1}),
                                     ev({0, 2, 1, 0}, {1, 1, 1, 1})}};
        rep.check(path_check(spacelike, TopologyKind::ZS).continuous,
                  json{{"detail", "spacelike polyline rejected by ZS"}});

        // 100-segment random timelike zigzag.
        std::mt19937_64 rng(seed + 99);
        Polyline<S> zig;
        Vec<S> cur(4, S(0));
        zig.vertices.emplace_back(cur);
        for (int i = 0; i < 100; ++i) {
            Vec<S> step(4, S(0));
            step[0] = (i % 2 == 0) ? S(1) : S(-1);
            step[1] = Rational(static_cast<long>(rng() % 5), 8);
            step[2] = Rational(static_cast<long>(rng() % 5), 8);
            cur = add(cur, step);
            zig.vertices.emplace_back(cur);
        }
        const PathReport pz = path_check(zig, TopologyKind::ZT);
        rep.check(pz.continuous && pz.zigzag,
                  json{{"detail", "random timelike zigzag not ZT-continuous"}});
    }
    return rep;
}

/// Per-event random frame: an independent spatial direction for every event.
template <class S>
inline PartitionFrame<S> random_per_event_frame(const PointCloud<S>& cloud, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::unordered_map<int, Vec<S>> dirs;
    const std::size_t d = cloud.dim();
    for (const auto& e : cloud.events) {
        Vec<S> dir(d - 1, S(0));
        while (is_zero(dir))
            for (auto& c : dir) c = S(static_cast<long>(rng() % 7)) - S(3);
        dirs[e.id] = dir;
    }
    return make_per_event_frame(dirs, d);
}

/// The frame set the default suite runs: u = e1, a second global frame
/// (u = e2, or u = -e1 when d = 2), and one per-event random frame.
template <class S>
inline std::vector<PartitionFrame<S>> suite_frames(const PointCloud<S>& cloud) {
    const std::size_t d = cloud.dim();
    std::vector<PartitionFrame<S>> frames;
    frames.push_back(default_frame<S>(d));
    Vec<S> u2(d - 1, S(0));
    if (d >= 3)
        u2[1] = S(1);
    else
        u2[0] = S(-1);
    frames.push_back(make_global_frame(u2));
    frames.push_back(random_per_event_frame(cloud, cloud.seed * 31 + 7));
    return frames;
}

struct SuiteConfig {
    std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<std::size_t> dims = {2, 4};
    std::vector<std::size_t> counts = {16, 64};
    Rational null_pair_fraction = Rational(1, 4);
    std::size_t transform_count = 20;
    int axis_samples = 101;
    int axes_per_case = 10;
    /// Which of V1..V6 to compute; disabled properties are skipped entirely
    /// and omitted from the suite output.
    std::array<bool, 6> enabled{true, true, true, true, true, true};

    json to_json() const {
        return json{{"seeds", seeds},
                    {"dims", dims},
                    {"counts", counts},
                    {"null_pair_fraction", format_rational(null_pair_fraction)},
                    {"transform_count", transform_count},
                    {"axis_samples", axis_samples},
                    {"axes_per_case", axes_per_case}};
    }
};

/// Runs V1-V6 over the seeded grid, merging per-cloud reports by property.
inline std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
    using S = Rational;
    std::vector<VerificationReport> reports(6);
    for (int i = 0; i < 6; ++i) {
        reports[i].property_id = "V" + std::to_string(i + 1);
        reports[i].config = cfg.to_json();
    }
    bool eq1_detected = false, eq2_detected = false, reflection_detected = false;

    for (std::size_t d : cfg.dims) {
        for (std::size_t n : cfg.counts) {
            for (std::uint64_t seed : cfg.seeds) {
                const PointCloud<S> cloud =
                    sprinkle(default_box<S>(d), n, seed, cfg.null_pair_fraction);
                const std::vector<S> radii = default_radii_sq(cloud);
                const std::vector<PartitionFrame<S>> frames = suite_frames(cloud);
                const json where{{"seed", seed}, {"dim", d}, {"count", n}};

                auto absorb = [&](VerificationReport& into, VerificationReport sub) {
                    for (auto& c : sub.counterexamples) c["cloud"] = where;
                    into.merge(sub);
                    if (sub.config.contains("mutation_eq1_detected"))
                        eq1_detected = eq1_detected || sub.config["mutation_eq1_detected"].get<bool>();
                    if (sub.config.contains("mutation_eq2_detected"))
                        eq2_detected = eq2_detected || sub.config["mutation_eq2_detected"].get<bool>();
                    if (sub.config.contains("reflection_control_detected"))
                        reflection_detected =
                            reflection_detected || sub.config["reflection_control_detected"].get<bool>();
                };

                if (cfg.enabled[0]) absorb(reports[0], verify_corollary_union(cloud, radii));
                if (cfg.enabled[1]) absorb(reports[1], verify_order_intersection(cloud, frames));
                if (cfg.enabled[2])
                    absorb(reports[2], verify_partition_invariance(cloud, frames, radii));
                if (cfg.enabled[3])
                    absorb(reports[3], verify_intersection_theorems(cloud, frames, radii));

                if (cfg.enabled[4]) {
                    std::vector<Transform<S>> gs;
                    for (std::size_t t = 0; t < cfg.transform_count; ++t)
                        gs.push_back(random_transform(seed * 1009 + t * 31 + d, d));
                    absorb(reports[4], verify_symmetry(cloud, gs));
                }
            }
        }
    }
    if (cfg.enabled[5])
        reports[5].merge(verify_axis_and_paths(cfg.dims, cfg.axis_samples, cfg.axes_per_case));

    if (cfg.enabled[3]) {
        reports[3].config["mutation_eq1_detected"] = eq1_detected;
        reports[3].config["mutation_eq2_detected"] = eq2_detected;
        if (!eq1_detected) reports[3].fail(json{{"detail", "eq1 mutation control never detected"}});
        if (!eq2_detected) reports[3].fail(json{{"detail", "eq2 mutation control never detected"}});
    }
    if (cfg.enabled[4]) {
        reports[4].config["reflection_control_detected"] = reflection_detected;
        if (!reflection_detected)
            reports[4].fail(json{{"detail", "time-reflection control never detected"}});
    }

    std::vector<VerificationReport> out;
    for (int i = 0; i < 6; ++i)
        if (cfg.enabled[i]) out.push_back(std::move(reports[i]));
    return out;
}

inline json suite_to_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
    return out;
}

}  // namespace zeeman
