#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "zeeman/cone.hpp"
#include "zeeman/frame.hpp"

namespace zeeman {

enum class RelationKind {
    Chron,        // <<
    Causal,       // reflexive causal order
    Horismos,     // reflexive, future-directed
    HorismosIrr,  // light-cone membership, either orientation, x != y
    ChronEq,      // << union irreflexive horismos
    SpaceOrder,   // spacelike order of the partition frame
};

inline std::string relation_name(RelationKind k) {
    switch (k) {
        case RelationKind::Chron: return "chron";
        case RelationKind::Causal: return "causal";
        case RelationKind::Horismos: return "horismos";
        case RelationKind::HorismosIrr: return "horismos-irr";
        case RelationKind::ChronEq: return "chron-eq";
        case RelationKind::SpaceOrder: return "space-order";
    }
    throw std::logic_error("bad RelationKind");
}

inline std::optional<RelationKind> parse_relation(const std::string& name) {
    if (name == "chron") return RelationKind::Chron;
    if (name == "causal") return RelationKind::Causal;
    if (name == "horismos") return RelationKind::Horismos;
    if (name == "horismos-irr") return RelationKind::HorismosIrr;
    if (name == "chron-eq") return RelationKind::ChronEq;
    if (name == "space-order") return RelationKind::SpaceOrder;
    return std::nullopt;
}

namespace detail {

template <class S>
inline void check_frame_arg(RelationKind kind, const PartitionFrame<S>* frame) {
    if (kind == RelationKind::SpaceOrder && frame == nullptr)
        throw std::invalid_argument("space-order requires a partition frame");
    if (kind != RelationKind::SpaceOrder && frame != nullptr)
        throw std::invalid_argument("only space-order takes a partition frame");
}

}  // namespace detail

/// x (kind) y.
template <class S>
inline bool relates(RelationKind kind, const Event<S>& x, const Event<S>& y,
                    const PartitionFrame<S>* frame = nullptr, const S& null_tol = S(0)) {
    detail::check_frame_arg(kind, frame);
    const ConeClass c = classify_pair(x, y, null_tol);
    switch (kind) {
        case RelationKind::Chron:
            return c == ConeClass::TimelikeFuture;
        case RelationKind::Causal:
            return c == ConeClass::TimelikeFuture || c == ConeClass::NullFuture ||
                   c == ConeClass::Equal;
        case RelationKind::Horismos:
            return c == ConeClass::NullFuture || c == ConeClass::Equal;
        case RelationKind::HorismosIrr:
            return is_null(c);
        case RelationKind::ChronEq:
            return c == ConeClass::TimelikeFuture || is_null(c);
        case RelationKind::SpaceOrder:
            if (is_null(c)) return true;
            if (c != ConeClass::Spacelike) return false;
            return partition_side(*frame, x, y, null_tol) == Side::Positive;
    }
    throw std::logic_error("bad RelationKind");
}

/// Membership of y in the future set of x for the given relation. For
/// SpaceOrder this is the S+ set of eq1 form (positive side or light cone,
/// x excluded); for ChronEq the C+ set (chronological future or light cone,
/// x excluded); otherwise the standard futures.
template <class S>
inline bool in_future_of(RelationKind kind, const Event<S>& x, const Event<S>& y,
                         const PartitionFrame<S>* frame = nullptr, const S& null_tol = S(0)) {
    return relates(kind, x, y, frame, null_tol);
}

/// Dual of in_future_of (negative side / pasts).
template <class S>
inline bool in_past_of(RelationKind kind, const Event<S>& x, const Event<S>& y,
                       const PartitionFrame<S>* frame = nullptr, const S& null_tol = S(0)) {
    detail::check_frame_arg(kind, frame);
    const ConeClass c = classify_pair(x, y, null_tol);
    switch (kind) {
        case RelationKind::Chron:
            return c == ConeClass::TimelikePast;
        case RelationKind::Causal:
            return c == ConeClass::TimelikePast || c == ConeClass::NullPast ||
                   c == ConeClass::Equal;
        case RelationKind::Horismos:
            return c == ConeClass::NullPast || c == ConeClass::Equal;
        case RelationKind::HorismosIrr:
            return is_null(c);
        case RelationKind::ChronEq:
            return c == ConeClass::TimelikePast || is_null(c);
        case RelationKind::SpaceOrder:
            if (is_null(c)) return true;
            if (c != ConeClass::Spacelike) return false;
            return partition_side(*frame, x, y, null_tol) == Side::Negative;
    }
    throw std::logic_error("bad RelationKind");
}

}  // namespace zeeman
