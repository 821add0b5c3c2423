#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "zeeman/event.hpp"
#include "zeeman/frame.hpp"

namespace zeeman {

template <class S>
using Matrix = std::vector<Vec<S>>;

template <class S>
inline Matrix<S> identity_matrix(std::size_t d) {
    Matrix<S> m(d, Vec<S>(d, S(0)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = S(1);
    return m;
}

template <class S>
inline Vec<S> apply_linear(const Matrix<S>& m, const Vec<S>& v) {
    if (m.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    Vec<S> out(v.size(), S(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

template <class S>
inline Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
    const std::size_t d = a.size();
    Matrix<S> out(d, Vec<S>(d, S(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// Element of the symmetry group G: proper orthochronous Lorentz map,
/// positive dilatation and a translation.
template <class S>
struct Transform {
    Matrix<S> linear;
    S scale = S(1);
    Vec<S> translation;
};

/// Checks that the linear part preserves the Minkowski bilinear form on all
/// basis pairs and maps the forward time axis forward. Tolerance 0 means
/// exact comparison.
template <class S>
inline void validate_transform(const Transform<S>& t, const S& tol = S(0)) {
    const std::size_t d = t.linear.size();
    if (d < 2 || t.translation.size() != d)
        throw std::invalid_argument("transform has inconsistent dimensions");
    if (t.scale <= S(0)) throw std::invalid_argument("dilatation scale must be positive");
    std::vector<Vec<S>> images(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec<S> e(d, S(0));
        e[i] = S(1);
        images[i] = apply_linear(t.linear, e);
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const S want = (i == j) ? (i == 0 ? S(1) : S(-1)) : S(0);
            const S got = minkowski_bilinear(images[i], images[j]);
            if (scalar_abs<S>(got - want) > tol)
                throw std::invalid_argument("linear part does not preserve the quadratic form");
        }
    }
    if (!(images[0][0] > S(0)))
        throw std::invalid_argument("linear part is not orthochronous");
}

template <class S>
inline Transform<S> make_transform(Matrix<S> linear, S scale, Vec<S> translation,
                                   const S& tol = S(0)) {
    Transform<S> t{std::move(linear), std::move(scale), std::move(translation)};
    validate_transform(t, tol);
    return t;
}

template <class S>
inline Transform<S> identity_transform(std::size_t d) {
    return Transform<S>{identity_matrix<S>(d), S(1), Vec<S>(d, S(0))};
}

template <class S>
inline Event<S> apply_transform(const Transform<S>& g, const Event<S>& x) {
    Vec<S> v = apply_linear(g.linear, x.coords);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.scale * v[i] + g.translation[i];
    return Event<S>(std::move(v), x.id);
}

/// Boost along spatial axis `axis` with rational velocity v = (p^2-q^2)/(p^2+q^2),
/// so gamma = (p^2+q^2)/(2pq) is rational too. Requires p > q > 0.
template <class S>
inline Matrix<S> boost_matrix(std::size_t d, std::size_t axis, const S& p, const S& q,
                              bool negate_velocity = false) {
    if (axis < 1 || axis >= d) throw std::invalid_argument("boost axis out of range");
    if (!(p > q && q > S(0))) throw std::invalid_argument("boost requires p > q > 0");
    const S p2 = p * p, q2 = q * q;
    const S gamma = (p2 + q2) / (S(2) * p * q);
    S gamma_v = (p2 - q2) / (S(2) * p * q);
    if (negate_velocity) gamma_v = -gamma_v;
    Matrix<S> m = identity_matrix<S>(d);
    m[0][0] = gamma;
    m[0][axis] = gamma_v;
    m[axis][0] = gamma_v;
    m[axis][axis] = gamma;
    return m;
}

/// Spatial rotation in the (i, j) plane with rational cosine/sine from the
/// Pythagorean parametrization c = (p^2-q^2)/(p^2+q^2), s = 2pq/(p^2+q^2).
template <class S>
inline Matrix<S> rotation_matrix(std::size_t d, std::size_t i, std::size_t j, const S& p,
                                 const S& q) {
    if (i < 1 || j < 1 || i >= d || j >= d || i == j)
        throw std::invalid_argument("rotation plane out of range");
    const S p2 = p * p, q2 = q * q;
    const S c = (p2 - q2) / (p2 + q2);
    const S s = (S(2) * p * q) / (p2 + q2);
    Matrix<S> m = identity_matrix<S>(d);
    m[i][i] = c;
    m[i][j] = -s;
    m[j][i] = s;
    m[j][j] = c;
    return m;
}

/// Time reflection; deliberately not in G (fails validate_transform).
template <class S>
inline Transform<S> time_reflection(std::size_t d) {
    Transform<S> t = identity_transform<S>(d);
    t.linear[0][0] = S(-1);
    return t;
}

/// Deterministic random element of G with all-rational entries.
inline Transform<Rational> random_transform(std::uint64_t seed, std::size_t d) {
    std::mt19937_64 rng(seed);
    auto small = [&](std::uint64_t lo, std::uint64_t hi) {
        return Rational(BigInt(lo + rng() % (hi - lo + 1)));
    };
    Matrix<Rational> linear = identity_matrix<Rational>(d);
    const std::size_t n_rot = (d >= 3) ? 2 + rng() % 2 : 0;
    for (std::size_t k = 0; k < n_rot; ++k) {
        std::size_t i = 1 + rng() % (d - 1);
        std::size_t j = 1 + rng() % (d - 1);
        if (i == j) continue;
        Rational q = small(1, 4);
        Rational p = q + small(1, 4);
        linear = matmul(rotation_matrix(d, i, j, p, q), linear);
    }
    const std::size_t n_boost = 1 + rng() % 2;
    for (std::size_t k = 0; k < n_boost; ++k) {
        std::size_t axis = 1 + rng() % (d - 1);
        Rational q = small(1, 3);
        Rational p = q + small(1, 3);
        linear = matmul(boost_matrix(d, axis, p, q, rng() % 2 == 0), linear);
    }
    Rational scale = small(1, 4) / small(1, 4);
    Vec<Rational> translation(d);
    for (std::size_t i = 0; i < d; ++i)
        translation[i] = small(0, 8) - Rational(4) + small(0, 16) / Rational(17);
    return make_transform(std::move(linear), std::move(scale), std::move(translation));
}

/// Pushes a partition frame forward through the linear part of g, so that
/// partition sides computed in the image cloud match the originals.
template <class S>
inline PartitionFrame<S> transport_frame(const Transform<S>& g, const PartitionFrame<S>& frame) {
    PartitionFrame<S> out;
    out.basis.reserve(frame.basis.size());
    for (const Vec<S>& b : frame.basis) out.basis.push_back(apply_linear(g.linear, b));
    for (const auto& [id, basis] : frame.per_event) {
        std::vector<Vec<S>> moved;
        moved.reserve(basis.size());
        for (const Vec<S>& b : basis) moved.push_back(apply_linear(g.linear, b));
        out.per_event[id] = std::move(moved);
    }
    return out;
}

}  // namespace zeeman
