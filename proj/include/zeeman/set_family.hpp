#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace zeeman {

using Bitset = boost::dynamic_bitset<>;

/// A deduplicated family of subsets of a fixed finite universe.
struct SetFamily {
    std::size_t universe_size = 0;
    std::vector<Bitset> members;  // canonical: sorted, unique

    void add(const Bitset& b) {
        if (b.size() != universe_size) throw std::invalid_argument("member has wrong universe");
        members.push_back(b);
    }

    void canonicalize() {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    bool operator==(const SetFamily& other) const = default;
};

/// A finite topology in canonical form: the minimal open set of each point.
struct FiniteTopology {
    std::size_t universe_size = 0;
    std::vector<Bitset> min_open;

    bool operator==(const FiniteTopology& other) const = default;
};

/// min_open(p) = intersection of all subbasic members containing p, with the
/// whole universe as default.
inline FiniteTopology generate_topology(const SetFamily& sub) {
    if (sub.universe_size == 0) throw std::invalid_argument("empty universe");
    const std::size_t n = sub.universe_size;
    FiniteTopology topo;
    topo.universe_size = n;
    Bitset full(n);
    full.set();
    topo.min_open.assign(n, full);
    for (const Bitset& m : sub.members)
        for (std::size_t p = m.find_first(); p != Bitset::npos; p = m.find_next(p))
            topo.min_open[p] &= m;
    return topo;
}

/// Specialization-preorder coherence: p in min_open(p), and q in min_open(p)
/// implies min_open(q) subset of min_open(p).
inline bool topology_coherent(const FiniteTopology& t) {
    for (std::size_t p = 0; p < t.universe_size; ++p) {
        if (!t.min_open[p].test(p)) return false;
        const Bitset& mp = t.min_open[p];
        for (std::size_t q = mp.find_first(); q != Bitset::npos; q = mp.find_next(q))
            if (!t.min_open[q].is_subset_of(mp)) return false;
    }
    return true;
}

inline SetFamily min_open_family(const FiniteTopology& t) {
    SetFamily fam;
    fam.universe_size = t.universe_size;
    fam.members = t.min_open;
    fam.canonicalize();
    return fam;
}

/// Closure of a family under pairwise intersection.
inline SetFamily intersection_closure(const SetFamily& fam) {
    std::set<Bitset> closed(fam.members.begin(), fam.members.end());
    std::vector<Bitset> fresh(fam.members.begin(), fam.members.end());
    while (!fresh.empty()) {
        std::vector<Bitset> next;
        for (const Bitset& a : fresh) {
            for (const Bitset& b : closed) {
                Bitset c = a & b;
                if (closed.insert(c).second) next.push_back(std::move(c));
            }
        }
        fresh = std::move(next);
    }
    SetFamily out;
    out.universe_size = fam.universe_size;
    out.members.assign(closed.begin(), closed.end());
    return out;
}

/// Reed intersection topology basis: {U & V} over the intersection-closed
/// bases of the two families.
inline SetFamily intersection_topology(const SetFamily& a, const SetFamily& b) {
    if (a.universe_size != b.universe_size) throw std::invalid_argument("universe mismatch");
    const SetFamily ca = intersection_closure(a);
    const SetFamily cb = intersection_closure(b);
    SetFamily out;
    out.universe_size = a.universe_size;
    for (const Bitset& u : ca.members)
        for (const Bitset& v : cb.members) out.members.push_back(u & v);
    out.canonicalize();
    return out;
}

inline SetFamily merge_families(const SetFamily& a, const SetFamily& b) {
    if (a.universe_size != b.universe_size) throw std::invalid_argument("universe mismatch");
    SetFamily out = a;
    for (const Bitset& m : b.members) out.members.push_back(m);
    out.canonicalize();
    return out;
}

enum class TopoOrder { Equal, AFiner, BFiner, Incomparable };

inline std::string topo_order_name(TopoOrder o) {
    switch (o) {
        case TopoOrder::Equal: return "Equal";
        case TopoOrder::AFiner: return "AFiner";
        case TopoOrder::BFiner: return "BFiner";
        case TopoOrder::Incomparable: return "Incomparable";
    }
    throw std::logic_error("bad TopoOrder");
}

inline TopoOrder compare_topologies(const FiniteTopology& a, const FiniteTopology& b) {
    if (a.universe_size != b.universe_size) throw std::invalid_argument("universe mismatch");
    bool a_finer = true, b_finer = true;
    for (std::size_t p = 0; p < a.universe_size; ++p) {
        a_finer = a_finer && a.min_open[p].is_subset_of(b.min_open[p]);
        b_finer = b_finer && b.min_open[p].is_subset_of(a.min_open[p]);
    }
    if (a_finer && b_finer) return TopoOrder::Equal;
    if (a_finer) return TopoOrder::AFiner;
    if (b_finer) return TopoOrder::BFiner;
    return TopoOrder::Incomparable;
}

}  // namespace zeeman
