#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeeman/cone.hpp"

namespace zeeman {

enum class TopologyKind { Euclid, Z, ZT, ZS };

inline std::string topology_name(TopologyKind k) {
    switch (k) {
        case TopologyKind::Euclid: return "euclid";
        case TopologyKind::Z: return "z";
        case TopologyKind::ZT: return "zt";
        case TopologyKind::ZS: return "zs";
    }
    throw std::logic_error("bad TopologyKind");
}

inline std::optional<TopologyKind> parse_topology(const std::string& name) {
    if (name == "euclid") return TopologyKind::Euclid;
    if (name == "z") return TopologyKind::Z;
    if (name == "zt") return TopologyKind::ZT;
    if (name == "zs") return TopologyKind::ZS;
    return std::nullopt;
}

/// The class filter each topology applies inside the Euclidean ball. The
/// center itself is kept by every kind.
inline bool nbhd_class_filter(TopologyKind kind, ConeClass c) {
    switch (kind) {
        case TopologyKind::Euclid: return true;
        case TopologyKind::ZT: return c == ConeClass::Equal || is_timelike(c);
        case TopologyKind::ZS: return c == ConeClass::Equal || c == ConeClass::Spacelike;
        case TopologyKind::Z:
            return c == ConeClass::Equal || is_timelike(c) || c == ConeClass::Spacelike;
    }
    throw std::logic_error("bad TopologyKind");
}

/// Basic open set membership: Euclid is the ball; ZT adds the time-cone
/// filter, ZS the space-cone filter, Z drops only the light cone.
template <class S>
inline bool nbhd_contains(TopologyKind kind, const Event<S>& center, const S& epsilon,
                          const Event<S>& y, const S& null_tol = S(0)) {
    if (!euclidean_ball_contains(center, epsilon, y)) return false;
    return nbhd_class_filter(kind, classify_pair(center, y, null_tol));
}

enum class AxisKind { Time, Space, Null };

inline std::string axis_name(AxisKind k) {
    switch (k) {
        case AxisKind::Time: return "time";
        case AxisKind::Space: return "space";
        case AxisKind::Null: return "null";
    }
    throw std::logic_error("bad AxisKind");
}

inline std::optional<AxisKind> parse_axis(const std::string& name) {
    if (name == "time") return AxisKind::Time;
    if (name == "space") return AxisKind::Space;
    if (name == "null") return AxisKind::Null;
    return std::nullopt;
}

struct AxisTraceReport {
    bool trace_is_singleton = false;
    bool trace_is_euclidean_interval = false;
};

/// Samples the basic-set membership along the straight axis through `center`
/// with direction `dir`, at `samples` evenly spaced parameters in
/// [-epsilon, epsilon]. Singleton: no point other than the center is inside.
/// Euclidean interval: membership is one contiguous run with points on both
/// sides of the center.
template <class S>
inline AxisTraceReport axis_trace(TopologyKind kind, const Event<S>& center, const S& epsilon,
                                  AxisKind axis, const Vec<S>& dir, int samples,
                                  const S& null_tol = S(0)) {
    if (epsilon <= S(0)) throw std::invalid_argument("epsilon must be positive");
    if (samples < 3) throw std::invalid_argument("samples must be >= 3");
    const ConeClass dc = classify_delta(dir, null_tol);
    const bool ok = (axis == AxisKind::Time && is_timelike(dc)) ||
                    (axis == AxisKind::Space && dc == ConeClass::Spacelike) ||
                    (axis == AxisKind::Null && is_null(dc));
    if (!ok) throw std::invalid_argument("axis direction has the wrong causal type");

    std::vector<bool> member(samples);
    std::vector<bool> at_center(samples);
    for (int i = 0; i < samples; ++i) {
        const S t = -epsilon + (S(2) * epsilon * S(i)) / S(samples - 1);
        Event<S> y(add(center.coords, scaled(t, dir)));
        member[i] = nbhd_contains(kind, center, epsilon, y, null_tol);
        at_center[i] = (t == S(0));
    }

    AxisTraceReport rep;
    int first = -1, last = -1, count = 0;
    bool contiguous = true, neg = false, pos = false;
    for (int i = 0; i < samples; ++i) {
        if (!member[i]) continue;
        if (first < 0) first = i;
        last = i;
        ++count;
        if (!at_center[i]) {
            if (2 * i < samples - 1) neg = true;
            if (2 * i > samples - 1) pos = true;
        }
    }
    if (count > 0) contiguous = (last - first + 1 == count);
    rep.trace_is_singleton = !neg && !pos;
    rep.trace_is_euclidean_interval = contiguous && neg && pos;
    return rep;
}

template <class S>
struct Polyline {
    std::vector<Event<S>> vertices;
};

struct PathReport {
    bool continuous = false;
    std::vector<ConeClass> segment_classes;
    bool zigzag = false;
};

/// Segmentwise continuity classification of a polyline under the given
/// topology: ZT demands timelike segments, ZS spacelike ones, Z anything off
/// the light cone; Euclid accepts all. Zigzag flags consecutive timelike
/// segments of opposite time orientation.
template <class S>
inline PathReport path_check(const Polyline<S>& p, TopologyKind kind, const S& null_tol = S(0)) {
    if (p.vertices.size() < 2) throw std::invalid_argument("polyline needs at least 2 vertices");
    PathReport rep;
    rep.continuous = true;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const ConeClass c = classify_pair(p.vertices[i], p.vertices[i + 1], null_tol);
        if (c == ConeClass::Equal)
            throw std::invalid_argument("consecutive polyline vertices must be distinct");
        rep.segment_classes.push_back(c);
        bool ok = true;
        switch (kind) {
            case TopologyKind::Euclid: ok = true; break;
            case TopologyKind::ZT: ok = is_timelike(c); break;
            case TopologyKind::ZS: ok = (c == ConeClass::Spacelike); break;
            case TopologyKind::Z: ok = is_timelike(c) || c == ConeClass::Spacelike; break;
        }
        rep.continuous = rep.continuous && ok;
    }
    for (std::size_t i = 0; i + 1 < rep.segment_classes.size(); ++i) {
        const ConeClass a = rep.segment_classes[i], b = rep.segment_classes[i + 1];
        if ((a == ConeClass::TimelikeFuture && b == ConeClass::TimelikePast) ||
            (a == ConeClass::TimelikePast && b == ConeClass::TimelikeFuture))
            rep.zigzag = true;
    }
    return rep;
}

}  // namespace zeeman
