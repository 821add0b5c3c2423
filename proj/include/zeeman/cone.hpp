#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "zeeman/event.hpp"

namespace zeeman {

enum class ConeClass {
    Equal,
    TimelikeFuture,
    TimelikePast,
    NullFuture,
    NullPast,
    Spacelike,
};

inline std::string cone_class_name(ConeClass c) {
    switch (c) {
        case ConeClass::Equal: return "Equal";
        case ConeClass::TimelikeFuture: return "TimelikeFuture";
        case ConeClass::TimelikePast: return "TimelikePast";
        case ConeClass::NullFuture: return "NullFuture";
        case ConeClass::NullPast: return "NullPast";
        case ConeClass::Spacelike: return "Spacelike";
    }
    throw std::logic_error("bad ConeClass");
}

inline bool is_timelike(ConeClass c) {
    return c == ConeClass::TimelikeFuture || c == ConeClass::TimelikePast;
}

inline bool is_null(ConeClass c) {
    return c == ConeClass::NullFuture || c == ConeClass::NullPast;
}

/// Classify the displacement vector d. In exact mode (null_tol == 0) the sign
/// of Q(d) decides; otherwise |Q| <= null_tol * ||d||^2 counts as null.
template <class S>
inline ConeClass classify_delta(const Vec<S>& d, const S& null_tol = S(0)) {
    if (is_zero(d)) return ConeClass::Equal;
    const S q = quadratic_form(d);
    bool null_band;
    if (null_tol > S(0)) {
        null_band = scalar_abs(q) <= null_tol * euclidean_sq(d);
    } else {
        null_band = (q == S(0));
    }
    if (null_band) {
        // A nonzero vector in the null band with zero time component can only
        // arise in float mode with an oversized tolerance; it is spacelike.
        if (d[0] > S(0)) return ConeClass::NullFuture;
        if (d[0] < S(0)) return ConeClass::NullPast;
        return ConeClass::Spacelike;
    }
    if (q > S(0)) {
        return d[0] > S(0) ? ConeClass::TimelikeFuture : ConeClass::TimelikePast;
    }
    return ConeClass::Spacelike;
}

template <class S>
inline ConeClass classify_pair(const Event<S>& x, const Event<S>& y, const S& null_tol = S(0)) {
    return classify_delta(sub(y.coords, x.coords), null_tol);
}

/// Strict (open) Euclidean ball membership over all d coordinates.
template <class S>
inline bool euclidean_ball_contains(const Event<S>& x, const S& epsilon, const Event<S>& y) {
    if (epsilon <= S(0)) throw std::invalid_argument("epsilon must be positive");
    return sq_distance(x.coords, y.coords) < epsilon * epsilon;
}

}  // namespace zeeman
