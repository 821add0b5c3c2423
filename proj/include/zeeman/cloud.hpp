#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "zeeman/cone.hpp"
#include "zeeman/event.hpp"

namespace zeeman {

template <class S>
struct Box {
    Vec<S> lo, hi;
};

template <class S>
inline Box<S> default_box(std::size_t d) {
    return Box<S>{Vec<S>(d, S(-1)), Vec<S>(d, S(1))};
}

template <class S>
struct PointCloud {
    std::vector<Event<S>> events;
    Box<S> box;
    std::uint64_t seed = 0;
    S null_tol = S(0);

    std::size_t size() const { return events.size(); }
    std::size_t dim() const { return events.empty() ? 0 : events[0].dim(); }
};

namespace detail {

// Deterministic uniform scalar in [0, 1) on a 2^-20 grid; identical digit
// stream for both scalar types.
template <class S>
inline S random_unit(std::mt19937_64& rng) {
    const std::uint64_t r = rng() % (1u << 20);
    if constexpr (scalar_traits<S>::exact) {
        return Rational(BigInt(r), BigInt(1u << 20));
    } else {
        return static_cast<double>(r) / static_cast<double>(1u << 20);
    }
}

template <class S>
inline bool inside_box(const Box<S>& box, const Vec<S>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] < box.lo[i] || c[i] > box.hi[i]) return false;
    return true;
}

// A null direction (1, s) with |s| = 1; for d >= 3 the spatial part comes
// from a Pythagorean pair so it stays rational.
template <class S>
inline Vec<S> random_null_direction(std::mt19937_64& rng, std::size_t d) {
    Vec<S> dir(d, S(0));
    dir[0] = S(1);
    if (d == 2) {
        dir[1] = (rng() % 2 == 0) ? S(1) : S(-1);
        return dir;
    }
    std::size_t a = 1 + rng() % (d - 1);
    std::size_t b = 1 + rng() % (d - 1);
    while (b == a) b = 1 + rng() % (d - 1);
    const S q(1 + static_cast<long>(rng() % 4));
    const S p = q + S(1 + static_cast<long>(rng() % 4));
    dir[a] = (p * p - q * q) / (p * p + q * q);
    dir[b] = (S(2) * p * q) / (p * p + q * q);
    return dir;
}

}  // namespace detail

/// Seeded uniform sprinkle into the box. A null_pair_fraction share of the
/// points (the trailing ones) is re-placed exactly on the light cone of an
/// earlier point, chained along one shared null line so that exact null
/// pairs are plentiful.
template <class S>
inline PointCloud<S> sprinkle(const Box<S>& box, std::size_t count, std::uint64_t seed,
                              const S& null_pair_fraction = S(0), const S& null_tol = S(0)) {
    const std::size_t d = box.lo.size();
    if (d < 2 || box.hi.size() != d) throw std::invalid_argument("box dimension must be >= 2");
    for (std::size_t i = 0; i < d; ++i)
        if (!(box.lo[i] < box.hi[i])) throw std::invalid_argument("box is empty");
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (null_pair_fraction < S(0) || null_pair_fraction > S(1))
        throw std::invalid_argument("null_pair_fraction must be in [0, 1]");

    std::mt19937_64 rng(seed);
    PointCloud<S> cloud;
    cloud.box = box;
    cloud.seed = seed;
    cloud.null_tol = null_tol;
    cloud.events.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Vec<S> c(d);
        for (std::size_t j = 0; j < d; ++j)
            c[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * detail::random_unit<S>(rng);
        cloud.events.emplace_back(std::move(c), static_cast<int>(i));
    }

    std::size_t k = 0;
    {
        // floor(null_pair_fraction * count), computed exactly.
        S target = null_pair_fraction * S(static_cast<long>(count));
        while (S(static_cast<long>(k + 1)) <= target) ++k;
    }
    if (count < 2) k = 0;
    if (k > count - 1) k = count - 1;
    if (k == 0) return cloud;

    const std::size_t first = count - k;
    const Vec<S> dir = detail::random_null_direction<S>(rng, d);
    S span = box.hi[0] - box.lo[0];
    for (std::size_t j = 1; j < d; ++j)
        if (box.hi[j] - box.lo[j] < span) span = box.hi[j] - box.lo[j];

    std::size_t base = rng() % first;
    for (std::size_t i = first; i < count; ++i) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            S alpha = (S(2) * detail::random_unit<S>(rng) - S(1)) * span / S(4);
            for (int halve = 0; halve < attempt / 10; ++halve) alpha /= S(2);
            if (alpha == S(0)) continue;
            Vec<S> c = add(cloud.events[base].coords, scaled(alpha, dir));
            if (!detail::inside_box(box, c)) continue;
            bool duplicate = false;
            for (std::size_t j = 0; j < i && !duplicate; ++j)
                duplicate = (cloud.events[j].coords == c);
            if (duplicate) continue;
            cloud.events[i].coords = std::move(c);
            break;
        }
        base = i;  // chain: the next point rides the same null line
    }
    return cloud;
}

}  // namespace zeeman
