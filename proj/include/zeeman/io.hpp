#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "zeeman/cloud.hpp"
#include "zeeman/event.hpp"
#include "zeeman/neighborhoods.hpp"
#include "zeeman/set_family.hpp"

namespace zeeman {

using json = nlohmann::json;

template <class S>
inline json scalar_to_json(const S& v) {
    if constexpr (scalar_traits<S>::exact) {
        return format_rational(v);
    } else {
        return v;
    }
}

template <class S>
inline S scalar_from_json(const json& j) {
    if constexpr (scalar_traits<S>::exact) {
        if (j.is_string()) {
            auto r = parse_rational(j.get<std::string>());
            if (!r) throw std::invalid_argument("bad rational: " + j.get<std::string>());
            return *r;
        }
        if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
        if (j.is_number()) {
            // route decimals through the string parser so they stay exact
            auto r = parse_rational(j.dump());
            if (!r) throw std::invalid_argument("bad numeric literal");
            return *r;
        }
        throw std::invalid_argument("expected rational scalar");
    } else {
        if (j.is_string()) {
            auto r = parse_rational(j.get<std::string>());
            if (!r) throw std::invalid_argument("bad rational: " + j.get<std::string>());
            return r->template convert_to<double>();
        }
        return j.get<double>();
    }
}

template <class S>
inline json vec_to_json(const Vec<S>& v) {
    json arr = json::array();
    for (const S& c : v) arr.push_back(scalar_to_json(c));
    return arr;
}

template <class S>
inline Vec<S> vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected coordinate array");
    Vec<S> v;
    for (const auto& c : j) v.push_back(scalar_from_json<S>(c));
    return v;
}

template <class S>
inline json event_to_json(const Event<S>& e) {
    return json{{"coords", vec_to_json(e.coords)}, {"id", e.id}};
}

template <class S>
inline Event<S> event_from_json(const json& j) {
    Event<S> e;
    if (j.is_array()) {
        e.coords = vec_from_json<S>(j);
        return e;
    }
    e.coords = vec_from_json<S>(j.at("coords"));
    if (j.contains("id")) e.id = j.at("id").get<int>();
    return e;
}

template <class S>
inline json cloud_to_json(const PointCloud<S>& cloud) {
    json events = json::array();
    for (const auto& e : cloud.events) events.push_back(event_to_json(e));
    json j{{"mode", scalar_traits<S>::mode_name()},
           {"seed", cloud.seed},
           {"box", json{{"lo", vec_to_json(cloud.box.lo)}, {"hi", vec_to_json(cloud.box.hi)}}},
           {"events", std::move(events)}};
    if constexpr (!scalar_traits<S>::exact) j["tol"] = cloud.null_tol;
    return j;
}

template <class S>
inline PointCloud<S> cloud_from_json(const json& j) {
    PointCloud<S> cloud;
    if (j.contains("mode") && j.at("mode").get<std::string>() != scalar_traits<S>::mode_name())
        throw std::invalid_argument("cloud mode does not match requested numeric mode");
    if (j.contains("seed")) cloud.seed = j.at("seed").get<std::uint64_t>();
    if constexpr (!scalar_traits<S>::exact) {
        if (j.contains("tol")) cloud.null_tol = j.at("tol").get<double>();
    }
    if (j.contains("box")) {
        cloud.box.lo = vec_from_json<S>(j.at("box").at("lo"));
        cloud.box.hi = vec_from_json<S>(j.at("box").at("hi"));
    }
    int next_id = 0;
    for (const auto& je : j.at("events")) {
        Event<S> e = event_from_json<S>(je);
        if (e.id < 0) e.id = next_id;
        next_id = e.id + 1;
        cloud.events.push_back(std::move(e));
    }
    if (cloud.box.lo.empty() && !cloud.events.empty()) {
        cloud.box = default_box<S>(cloud.events[0].dim());
        for (const auto& e : cloud.events)
            for (std::size_t i = 0; i < e.dim(); ++i) {
                if (e.coords[i] < cloud.box.lo[i]) cloud.box.lo[i] = e.coords[i] - S(1);
                if (e.coords[i] > cloud.box.hi[i]) cloud.box.hi[i] = e.coords[i] + S(1);
            }
    }
    return cloud;
}

template <class S>
inline json polyline_to_json(const Polyline<S>& p) {
    json vertices = json::array();
    for (const auto& v : p.vertices) vertices.push_back(vec_to_json(v.coords));
    return json{{"vertices", std::move(vertices)}};
}

template <class S>
inline Polyline<S> polyline_from_json(const json& j) {
    Polyline<S> p;
    for (const auto& jv : j.at("vertices")) p.vertices.emplace_back(vec_from_json<S>(jv));
    return p;
}

/// SetFamily as sorted lists of sorted id lists.
inline json family_to_json(const SetFamily& fam) {
    json members = json::array();
    for (const Bitset& m : fam.members) {
        json ids = json::array();
        for (std::size_t p = m.find_first(); p != Bitset::npos; p = m.find_next(p)) ids.push_back(p);
        members.push_back(std::move(ids));
    }
    return json{{"universe_size", fam.universe_size}, {"members", std::move(members)}};
}

inline SetFamily family_from_json(const json& j) {
    SetFamily fam;
    fam.universe_size = j.at("universe_size").get<std::size_t>();
    for (const auto& jm : j.at("members")) {
        Bitset bits(fam.universe_size);
        for (const auto& id : jm) bits.set(id.get<std::size_t>());
        fam.members.push_back(std::move(bits));
    }
    fam.canonicalize();
    return fam;
}

inline json topology_to_json(const FiniteTopology& t) {
    json mins = json::array();
    for (const Bitset& m : t.min_open) {
        json ids = json::array();
        for (std::size_t p = m.find_first(); p != Bitset::npos; p = m.find_next(p)) ids.push_back(p);
        mins.push_back(std::move(ids));
    }
    return json{{"universe_size", t.universe_size}, {"min_open", std::move(mins)}};
}

inline FiniteTopology topology_from_json(const json& j) {
    FiniteTopology t;
    t.universe_size = j.at("universe_size").get<std::size_t>();
    for (const auto& jm : j.at("min_open")) {
        Bitset bits(t.universe_size);
        for (const auto& id : jm) bits.set(id.get<std::size_t>());
        t.min_open.push_back(std::move(bits));
    }
    return t;
}

inline std::string matrix_to_csv(const std::vector<Bitset>& rows) {
    std::ostringstream out;
    for (const Bitset& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << (row.test(j) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return json::parse(in);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << text;
}

}  // namespace zeeman
