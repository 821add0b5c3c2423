#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "zeeman/rational.hpp"

namespace zeeman {

template <class S>
using Vec = std::vector<S>;

/// A point of d-dimensional flat spacetime; coordinate 0 is time.
template <class S>
struct Event {
    Vec<S> coords;
    int id = -1;

    Event() = default;
    explicit Event(Vec<S> c, int event_id = -1) : coords(std::move(c)), id(event_id) {}

    std::size_t dim() const { return coords.size(); }
};

template <class S>
inline void check_dim(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch");
}

template <class S>
inline Vec<S> sub(const Vec<S>& a, const Vec<S>& b) {
    check_dim(a, b);
    Vec<S> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <class S>
inline Vec<S> add(const Vec<S>& a, const Vec<S>& b) {
    check_dim(a, b);
    Vec<S> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <class S>
inline Vec<S> scaled(const S& c, const Vec<S>& v) {
    Vec<S> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

/// Minkowski quadratic form with signature (+,-,...,-): v0^2 - sum of spatial squares.
template <class S>
inline S quadratic_form(const Vec<S>& v) {
    if (v.size() < 2) throw std::invalid_argument("dimension must be >= 2");
    S q = v[0] * v[0];
    for (std::size_t i = 1; i < v.size(); ++i) q -= v[i] * v[i];
    return q;
}

/// Minkowski bilinear form: a0*b0 - sum of spatial products.
template <class S>
inline S minkowski_bilinear(const Vec<S>& a, const Vec<S>& b) {
    check_dim(a, b);
    if (a.size() < 2) throw std::invalid_argument("dimension must be >= 2");
    S q = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) q -= a[i] * b[i];
    return q;
}

/// All-coordinate Euclidean squared norm.
template <class S>
inline S euclidean_sq(const Vec<S>& v) {
    S s(0);
    for (const S& c : v) s += c * c;
    return s;
}

template <class S>
inline S sq_distance(const Vec<S>& a, const Vec<S>& b) {
    check_dim(a, b);
    S s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        S d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

template <class S>
inline bool is_zero(const Vec<S>& v) {
    for (const S& c : v)
        if (c != S(0)) return false;
    return true;
}

}  // namespace zeeman
