#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "zeeman/cone.hpp"
#include "zeeman/event.hpp"

namespace zeeman {

enum class Side { Positive, Negative };

inline std::string side_name(Side s) {
    return s == Side::Positive ? "Positive" : "Negative";
}

/// Hyperplane data splitting each space cone into S+ and S-.
///
/// basis holds d-1 spacelike vectors; basis[0] is the hyperplane normal and
/// the remaining ones resolve ties lexicographically. The common case has
/// zero time components; transported frames (images under a Lorentz map) may
/// not. An empty per_event map means Global scope; otherwise each event id is
/// resolved through its own basis.
template <class S>
struct PartitionFrame {
    std::vector<Vec<S>> basis;
    std::unordered_map<int, std::vector<Vec<S>>> per_event;

    bool global() const { return per_event.empty(); }

    const std::vector<Vec<S>>& basis_at(int id) const {
        if (global()) return basis;
        auto it = per_event.find(id);
        if (it == per_event.end())
            throw std::invalid_argument("per-event frame has no entry for event id");
        return it->second;
    }
};

namespace detail {

// Rank via Gaussian elimination; exact for rationals.
template <class S>
inline std::size_t matrix_rank(std::vector<Vec<S>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == S(0)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == S(0)) continue;
            S f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Completes a spacelike direction to a full tie-break basis by appending
/// spatial coordinate axes that keep the set independent.
template <class S>
inline std::vector<Vec<S>> complete_tiebreak_basis(const Vec<S>& direction) {
    const std::size_t d = direction.size();
    if (d < 2) throw std::invalid_argument("dimension must be >= 2");
    if (is_zero(direction)) throw std::invalid_argument("frame direction must be nonzero");
    if (quadratic_form(direction) >= S(0))
        throw std::invalid_argument("frame direction must be spacelike");
    std::vector<Vec<S>> basis{direction};
    for (std::size_t i = 1; i < d && basis.size() < d - 1; ++i) {
        Vec<S> e(d, S(0));
        e[i] = S(1);
        basis.push_back(e);
        if (detail::matrix_rank(basis) != basis.size()) basis.pop_back();
    }
    if (basis.size() != d - 1) throw std::logic_error("tie-break basis completion failed");
    return basis;
}

/// Global frame from a spatial direction of d-1 scalars (time component zero).
template <class S>
inline PartitionFrame<S> make_global_frame(const Vec<S>& spatial_dir) {
    Vec<S> full(spatial_dir.size() + 1, S(0));
    for (std::size_t i = 0; i < spatial_dir.size(); ++i) full[i + 1] = spatial_dir[i];
    PartitionFrame<S> f;
    f.basis = complete_tiebreak_basis(full);
    return f;
}

/// Global frame with u = e1, the default of the library.
template <class S>
inline PartitionFrame<S> default_frame(std::size_t d) {
    Vec<S> u(d - 1, S(0));
    u[0] = S(1);
    return make_global_frame(u);
}

template <class S>
inline PartitionFrame<S> make_per_event_frame(
    const std::unordered_map<int, Vec<S>>& spatial_dirs, std::size_t d) {
    PartitionFrame<S> f;
    f.basis = default_frame<S>(d).basis;
    for (const auto& [id, dir] : spatial_dirs) {
        Vec<S> full(d, S(0));
        if (dir.size() != d - 1) throw std::invalid_argument("frame direction has wrong dimension");
        for (std::size_t i = 0; i + 1 < d; ++i) full[i + 1] = dir[i];
        f.per_event[id] = complete_tiebreak_basis(full);
    }
    return f;
}

/// Side of the hyperplane split of the space cone of x that y falls on.
/// Requires y spacelike to x. Ties walk the tie-break basis; a spacelike
/// displacement cannot be Minkowski-orthogonal to the whole basis, so the
/// walk always terminates with a sign.
template <class S>
inline Side partition_side(const PartitionFrame<S>& frame, const Event<S>& x, const Event<S>& y,
                           const S& null_tol = S(0)) {
    if (classify_pair(x, y, null_tol) != ConeClass::Spacelike)
        throw std::invalid_argument("partition_side requires a spacelike pair");
    const Vec<S> delta = sub(y.coords, x.coords);
    for (const Vec<S>& b : frame.basis_at(x.id)) {
        // For b = (0, u) this is the spatial inner product <spatial(delta), u>.
        const S s = -minkowski_bilinear(delta, b);
        if (s > S(0)) return Side::Positive;
        if (s < S(0)) return Side::Negative;
    }
    throw std::logic_error("tie-break exhausted on a spacelike pair");
}

}  // namespace zeeman
