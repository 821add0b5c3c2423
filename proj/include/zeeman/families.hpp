#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeeman/cloud.hpp"
#include "zeeman/neighborhoods.hpp"
#include "zeeman/relations.hpp"
#include "zeeman/set_family.hpp"

namespace zeeman {

/// Per-cloud cache of pairwise cone classes and squared distances, plus the
/// rank of each squared distance inside a sorted radii grid. Everything
/// downstream of the cache is integer work.
template <class S>
struct PairCache {
    std::size_t n = 0;
    std::vector<ConeClass> cls;      // n*n, row-major
    std::vector<S> dist_sq;          // n*n
    std::vector<S> radii_sq;         // sorted, unique
    std::vector<std::size_t> first_radius_covering;  // n*n: least r with dist_sq < radii_sq[r]

    ConeClass cls_at(std::size_t i, std::size_t j) const { return cls[i * n + j]; }
    bool in_ball(std::size_t center, std::size_t y, std::size_t radius_index) const {
        return first_radius_covering[center * n + y] <= radius_index;
    }
};

/// Default radii grid: every distinct pairwise squared distance, plus one
/// value strictly beyond the diameter so the whole-universe trace is present.
template <class S>
inline std::vector<S> default_radii_sq(const PointCloud<S>& cloud) {
    std::vector<S> out;
    const std::size_t n = cloud.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back(sq_distance(cloud.events[i].coords, cloud.events[j].coords));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) out.push_back(S(1));
    out.push_back(out.back() * S(4) + S(1));
    return out;
}

template <class S>
inline PairCache<S> build_pair_cache(const PointCloud<S>& cloud, std::vector<S> radii_sq) {
    if (radii_sq.empty()) throw std::invalid_argument("radii must be nonempty");
    for (const S& r : radii_sq)
        if (!(r > S(0))) throw std::invalid_argument("radii must be positive");
    std::sort(radii_sq.begin(), radii_sq.end());
    radii_sq.erase(std::unique(radii_sq.begin(), radii_sq.end()), radii_sq.end());
    if constexpr (!scalar_traits<S>::exact) {
        // Nudge float radii past the boundary so dist == radius is unambiguous.
        for (S& r : radii_sq) r *= S(1) + cloud.null_tol;
    }

    PairCache<S> cache;
    cache.n = cloud.size();
    cache.radii_sq = std::move(radii_sq);
    cache.cls.resize(cache.n * cache.n);
    cache.dist_sq.resize(cache.n * cache.n);
    cache.first_radius_covering.resize(cache.n * cache.n);
    for (std::size_t i = 0; i < cache.n; ++i) {
        for (std::size_t j = 0; j < cache.n; ++j) {
            const S d2 = sq_distance(cloud.events[i].coords, cloud.events[j].coords);
            cache.cls[i * cache.n + j] = classify_pair(cloud.events[i], cloud.events[j], cloud.null_tol);
            cache.dist_sq[i * cache.n + j] = d2;
            // dist_sq < radii_sq[r] iff r >= upper_bound index
            cache.first_radius_covering[i * cache.n + j] = static_cast<std::size_t>(
                std::upper_bound(cache.radii_sq.begin(), cache.radii_sq.end(), d2) -
                cache.radii_sq.begin());
        }
    }
    return cache;
}

template <class S>
inline std::vector<Bitset> relation_matrix(const PointCloud<S>& cloud, RelationKind kind,
                                           const PartitionFrame<S>* frame = nullptr) {
    const std::size_t n = cloud.size();
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (relates(kind, cloud.events[i], cloud.events[j], frame, cloud.null_tol))
                rows[i].set(j);
    return rows;
}

/// Trace of the future set of x on the cloud, as a bitset. x need not belong
/// to the cloud.
template <class S>
inline Bitset future_set(RelationKind kind, const Event<S>& x, const PointCloud<S>& cloud,
                         const PartitionFrame<S>* frame = nullptr) {
    Bitset bits(cloud.size());
    for (std::size_t j = 0; j < cloud.size(); ++j)
        if (in_future_of(kind, x, cloud.events[j], frame, cloud.null_tol)) bits.set(j);
    return bits;
}

template <class S>
inline Bitset past_set(RelationKind kind, const Event<S>& x, const PointCloud<S>& cloud,
                       const PartitionFrame<S>* frame = nullptr) {
    Bitset bits(cloud.size());
    for (std::size_t j = 0; j < cloud.size(); ++j)
        if (in_past_of(kind, x, cloud.events[j], frame, cloud.null_tol)) bits.set(j);
    return bits;
}

enum class SubbasisOrder { SpaceOrderEq1, ChronEqEq2, Chron, Causal };

inline std::string subbasis_order_name(SubbasisOrder o) {
    switch (o) {
        case SubbasisOrder::SpaceOrderEq1: return "eq1";
        case SubbasisOrder::ChronEqEq2: return "eq2";
        case SubbasisOrder::Chron: return "chron";
        case SubbasisOrder::Causal: return "causal";
    }
    throw std::logic_error("bad SubbasisOrder");
}

inline std::optional<SubbasisOrder> parse_subbasis_order(const std::string& name) {
    if (name == "eq1") return SubbasisOrder::SpaceOrderEq1;
    if (name == "eq2") return SubbasisOrder::ChronEqEq2;
    if (name == "chron") return SubbasisOrder::Chron;
    if (name == "causal") return SubbasisOrder::Causal;
    return std::nullopt;
}

/// Mutation hook for the verification controls: DropNull removes the
/// "or y -> x" clause from the eq1 / eq2 future and past sets.
enum class Eq12Mutation { None, DropNull };

namespace detail {

template <class S>
inline bool subbasis_future(SubbasisOrder order, ConeClass c, const Event<S>& x, const Event<S>& y,
                            const PartitionFrame<S>* frame, const S& tol, Eq12Mutation mutation,
                            bool past) {
    switch (order) {
        case SubbasisOrder::Chron:
            return past ? c == ConeClass::TimelikePast : c == ConeClass::TimelikeFuture;
        case SubbasisOrder::Causal:
            if (c == ConeClass::Equal) return true;
            return past ? (c == ConeClass::TimelikePast || c == ConeClass::NullPast)
                        : (c == ConeClass::TimelikeFuture || c == ConeClass::NullFuture);
        case SubbasisOrder::ChronEqEq2:
            if (mutation == Eq12Mutation::None && is_null(c)) return true;
            return past ? c == ConeClass::TimelikePast : c == ConeClass::TimelikeFuture;
        case SubbasisOrder::SpaceOrderEq1:
            if (mutation == Eq12Mutation::None && is_null(c)) return true;
            if (c != ConeClass::Spacelike) return false;
            return partition_side(*frame, x, y, tol) == (past ? Side::Negative : Side::Positive);
    }
    throw std::logic_error("bad SubbasisOrder");
}

}  // namespace detail

/// Interval-topology subbasis: complements of the future and past sets of
/// every cloud point, under the chosen order form.
template <class S>
inline SetFamily interval_subbasis(const PointCloud<S>& cloud, SubbasisOrder order,
                                   const PartitionFrame<S>* frame = nullptr,
                                   Eq12Mutation mutation = Eq12Mutation::None) {
    if (order == SubbasisOrder::SpaceOrderEq1 && frame == nullptr)
        throw std::invalid_argument("eq1 subbasis requires a partition frame");
    if (order != SubbasisOrder::SpaceOrderEq1 && frame != nullptr)
        throw std::invalid_argument("only the eq1 subbasis takes a partition frame");
    const std::size_t n = cloud.size();
    SetFamily fam;
    fam.universe_size = n;
    for (std::size_t i = 0; i < n; ++i) {
        Bitset no_future(n), no_past(n);
        for (std::size_t j = 0; j < n; ++j) {
            const ConeClass c = classify_pair(cloud.events[i], cloud.events[j], cloud.null_tol);
            if (!detail::subbasis_future<S>(order, c, cloud.events[i], cloud.events[j], frame,
                                            cloud.null_tol, mutation, false))
                no_future.set(j);
            if (!detail::subbasis_future<S>(order, c, cloud.events[i], cloud.events[j], frame,
                                            cloud.null_tol, mutation, true))
                no_past.set(j);
        }
        fam.members.push_back(std::move(no_future));
        fam.members.push_back(std::move(no_past));
    }
    fam.canonicalize();
    return fam;
}

/// Traces of open Euclidean balls centered at cloud points, one per
/// (center, radius) pair.
template <class S>
inline SetFamily ball_family_cached(const PointCloud<S>& cloud, const PairCache<S>& cache) {
    SetFamily fam;
    fam.universe_size = cloud.size();
    const std::size_t n = cloud.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t r = 0; r < cache.radii_sq.size(); ++r) {
            Bitset bits(n);
            for (std::size_t y = 0; y < n; ++y)
                if (cache.in_ball(x, y, r)) bits.set(y);
            fam.members.push_back(std::move(bits));
        }
    }
    fam.canonicalize();
    return fam;
}

template <class S>
inline SetFamily ball_family(const PointCloud<S>& cloud, const std::vector<S>& radii_sq) {
    return ball_family_cached(cloud, build_pair_cache(cloud, radii_sq));
}

/// Traces of Zeeman basic open sets on the cloud.
template <class S>
inline SetFamily zeeman_trace_family_cached(const PointCloud<S>& cloud, TopologyKind kind,
                                            const PairCache<S>& cache) {
    SetFamily fam;
    fam.universe_size = cloud.size();
    const std::size_t n = cloud.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t r = 0; r < cache.radii_sq.size(); ++r) {
            Bitset bits(n);
            for (std::size_t y = 0; y < n; ++y)
                if (cache.in_ball(x, y, r) && nbhd_class_filter(kind, cache.cls_at(x, y)))
                    bits.set(y);
            fam.members.push_back(std::move(bits));
        }
    }
    fam.canonicalize();
    return fam;
}

template <class S>
inline SetFamily zeeman_trace_family(const PointCloud<S>& cloud, TopologyKind kind,
                                     const std::vector<S>& radii_sq) {
    return zeeman_trace_family_cached(cloud, kind, build_pair_cache(cloud, radii_sq));
}

}  // namespace zeeman
