// Command-line frontend for the Zeeman-topology library.
//
// Exit codes: 0 success / all properties pass, 1 property failure,
// 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zeeman/cloud.hpp"
#include "zeeman/families.hpp"
#include "zeeman/io.hpp"
#include "zeeman/neighborhoods.hpp"
#include "zeeman/relations.hpp"
#include "zeeman/set_family.hpp"
#include "zeeman/verify.hpp"

namespace {

using zeeman::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class S>
std::vector<S> parse_scalar_list(const std::string& csv) {
    std::vector<S> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto r = zeeman::parse_rational(tok);
        if (!r) throw UsageError("bad scalar: " + tok);
        if constexpr (zeeman::scalar_traits<S>::exact)
            out.push_back(*r);
        else
            out.push_back(r->convert_to<double>());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

template <class S>
zeeman::Event<S> parse_event(const std::string& csv, std::size_t dim) {
    auto v = parse_scalar_list<S>(csv);
    if (v.size() != dim) throw UsageError("expected " + std::to_string(dim) + " coordinates");
    return zeeman::Event<S>(std::move(v));
}

// Accepts either d-1 spatial components or d components with zero time part.
template <class S>
zeeman::PartitionFrame<S> parse_frame(const std::string& csv, std::size_t dim) {
    auto v = parse_scalar_list<S>(csv);
    if (v.size() == dim) {
        if (v[0] != S(0)) throw UsageError("frame direction must have zero time component");
        v.erase(v.begin());
    }
    if (v.size() != dim - 1) throw UsageError("frame direction has wrong dimension");
    return zeeman::make_global_frame(v);
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        zeeman::write_text_file(out_path, text);
}

struct Options {
    std::size_t dim = 4;
    std::string mode = "exact";
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::size_t count = 16;
    std::string x_csv, y_csv, center_csv, dir_csv, frame_csv, box_csv;
    std::string kind;
    std::string epsilon = "1";
    std::string radii = "auto";
    std::string null_fraction = "1/4";
    std::string in_path, out_path, a_path, b_path;
    std::string axis = "time";
    std::string order;
    std::string property = "all";
    int samples = 101;
};

template <class S>
S opt_scalar(const std::string& text) {
    auto r = zeeman::parse_rational(text);
    if (!r) throw UsageError("bad scalar: " + text);
    if constexpr (zeeman::scalar_traits<S>::exact)
        return *r;
    else
        return r->convert_to<double>();
}

template <class S>
S null_tol_of(const Options& opt) {
    if constexpr (zeeman::scalar_traits<S>::exact)
        return S(0);
    else
        return opt.tol;
}

template <class S>
std::vector<S> radii_sq_of(const Options& opt, const zeeman::PointCloud<S>& cloud) {
    if (opt.radii == "auto") return zeeman::default_radii_sq(cloud);
    std::vector<S> out;
    for (const S& r : parse_scalar_list<S>(opt.radii)) out.push_back(r * r);
    return out;
}

template <class S>
int cmd_classify(const Options& opt) {
    const auto x = parse_event<S>(opt.x_csv, opt.dim);
    const auto y = parse_event<S>(opt.y_csv, opt.dim);
    emit(json{{"class", zeeman::cone_class_name(zeeman::classify_pair(x, y, null_tol_of<S>(opt)))}},
         opt.out_path);
    return kExitOk;
}

template <class S>
int cmd_relate(const Options& opt) {
    const auto kind = zeeman::parse_relation(opt.kind);
    if (!kind) throw UsageError("unknown relation: " + opt.kind);
    const auto x = parse_event<S>(opt.x_csv, opt.dim);
    const auto y = parse_event<S>(opt.y_csv, opt.dim);
    std::optional<zeeman::PartitionFrame<S>> frame;
    if (!opt.frame_csv.empty()) frame = parse_frame<S>(opt.frame_csv, opt.dim);
    const bool rel = zeeman::relates(*kind, x, y, frame ? &*frame : nullptr, null_tol_of<S>(opt));
    emit(json{{"related", rel}}, opt.out_path);
    return kExitOk;
}

template <class S>
int cmd_nbhd(const Options& opt) {
    const auto kind = zeeman::parse_topology(opt.kind);
    if (!kind) throw UsageError("unknown topology: " + opt.kind);
    const auto center = parse_event<S>(opt.center_csv, opt.dim);
    const auto y = parse_event<S>(opt.y_csv, opt.dim);
    const bool inside = zeeman::nbhd_contains(*kind, center, opt_scalar<S>(opt.epsilon), y,
                                              null_tol_of<S>(opt));
    emit(json{{"contains", inside}}, opt.out_path);
    return kExitOk;
}

template <class S>
int cmd_axis_trace(const Options& opt) {
    const auto kind = zeeman::parse_topology(opt.kind);
    if (!kind) throw UsageError("unknown topology: " + opt.kind);
    const auto axis = zeeman::parse_axis(opt.axis);
    if (!axis) throw UsageError("unknown axis kind: " + opt.axis);
    const auto center = parse_event<S>(opt.center_csv, opt.dim);
    const auto dir = parse_scalar_list<S>(opt.dir_csv);
    if (dir.size() != opt.dim) throw UsageError("axis direction has wrong dimension");
    const auto rep = zeeman::axis_trace(*kind, center, opt_scalar<S>(opt.epsilon), *axis, dir,
                                        opt.samples, null_tol_of<S>(opt));
    emit(json{{"trace_is_singleton", rep.trace_is_singleton},
              {"trace_is_euclidean_interval", rep.trace_is_euclidean_interval}},
         opt.out_path);
    return kExitOk;
}

template <class S>
int cmd_path_check(const Options& opt) {
    const auto kind = zeeman::parse_topology(opt.kind);
    if (!kind) throw UsageError("unknown topology: " + opt.kind);
    const auto poly = zeeman::polyline_from_json<S>(zeeman::load_json_file(opt.in_path));
    const auto rep = zeeman::path_check(poly, *kind, null_tol_of<S>(opt));
    json classes = json::array();
    for (auto c : rep.segment_classes) classes.push_back(zeeman::cone_class_name(c));
    emit(json{{"continuous", rep.continuous},
              {"segment_classes", classes},
              {"zigzag", rep.zigzag}},
         opt.out_path);
    return kExitOk;
}

template <class S>
int cmd_sprinkle(const Options& opt) {
    zeeman::Box<S> box = zeeman::default_box<S>(opt.dim);
    if (!opt.box_csv.empty()) {
        const auto lohi = parse_scalar_list<S>(opt.box_csv);
        if (lohi.size() != 2 || !(lohi[0] < lohi[1])) throw UsageError("--box expects \"lo,hi\"");
        box.lo.assign(opt.dim, lohi[0]);
        box.hi.assign(opt.dim, lohi[1]);
    }
    const auto cloud = zeeman::sprinkle(box, opt.count, opt.seed,
                                        opt_scalar<S>(opt.null_fraction), null_tol_of<S>(opt));
    emit(zeeman::cloud_to_json(cloud), opt.out_path);
    return kExitOk;
}

template <class S>
int cmd_matrix(const Options& opt) {
    const auto kind = zeeman::parse_relation(opt.kind);
    if (!kind) throw UsageError("unknown relation: " + opt.kind);
    const auto cloud = zeeman::cloud_from_json<S>(zeeman::load_json_file(opt.in_path));
    std::optional<zeeman::PartitionFrame<S>> frame;
    if (!opt.frame_csv.empty()) frame = parse_frame<S>(opt.frame_csv, cloud.dim());
    const auto rows = zeeman::relation_matrix(cloud, *kind, frame ? &*frame : nullptr);
    const std::string csv = zeeman::matrix_to_csv(rows);
    if (opt.out_path.empty())
        std::cout << csv;
    else
        zeeman::write_text_file(opt.out_path, csv);
    return kExitOk;
}

template <class S>
int cmd_subbasis(const Options& opt) {
    const auto order = zeeman::parse_subbasis_order(opt.order);
    if (!order) throw UsageError("unknown order (want eq1|eq2|chron|causal): " + opt.order);
    const auto cloud = zeeman::cloud_from_json<S>(zeeman::load_json_file(opt.in_path));
    std::optional<zeeman::PartitionFrame<S>> frame;
    if (!opt.frame_csv.empty()) frame = parse_frame<S>(opt.frame_csv, cloud.dim());
    const auto fam = zeeman::interval_subbasis(cloud, *order, frame ? &*frame : nullptr);
    emit(zeeman::family_to_json(fam), opt.out_path);
    return kExitOk;
}

int cmd_topo_generate(const Options& opt) {
    const auto fam = zeeman::family_from_json(zeeman::load_json_file(opt.in_path));
    emit(zeeman::topology_to_json(zeeman::generate_topology(fam)), opt.out_path);
    return kExitOk;
}

int cmd_topo_intersect(const Options& opt) {
    const auto a = zeeman::family_from_json(zeeman::load_json_file(opt.a_path));
    const auto b = zeeman::family_from_json(zeeman::load_json_file(opt.b_path));
    emit(zeeman::family_to_json(zeeman::intersection_topology(a, b)), opt.out_path);
    return kExitOk;
}

int cmd_topo_compare(const Options& opt) {
    const auto a = zeeman::topology_from_json(zeeman::load_json_file(opt.a_path));
    const auto b = zeeman::topology_from_json(zeeman::load_json_file(opt.b_path));
    emit(json{{"result", zeeman::topo_order_name(zeeman::compare_topologies(a, b))}},
         opt.out_path);
    return kExitOk;
}

int cmd_verify(const Options& opt, bool seed_given, bool count_given, bool dim_given) {
    zeeman::SuiteConfig cfg;
    if (seed_given) cfg.seeds = {opt.seed};
    if (count_given) cfg.counts = {opt.count};
    if (dim_given) cfg.dims = {opt.dim};
    if (opt.property != "all") {
        cfg.enabled.fill(false);
        bool known = false;
        for (int i = 0; i < 6; ++i)
            if (opt.property == "V" + std::to_string(i + 1)) cfg.enabled[i] = known = true;
        if (!known) throw UsageError("unknown property: " + opt.property);
    }
    auto reports = zeeman::run_suite(cfg);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass();
    emit(zeeman::suite_to_json(reports), opt.out_path);
    return all_pass ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeeman spacetime topologies: causal geometry, order topologies and verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--dim", opt.dim, "spacetime dimension (>= 2)");
        sub->add_option("--mode", opt.mode, "numeric mode: exact|float")
            ->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--tol", opt.tol, "relative null band half-width (float mode)");
        sub->add_option("--out", opt.out_path, "write output to file instead of stdout");
    };

    auto* classify = app.add_subcommand("classify", "cone classification of an event pair");
    classify->add_option("--x", opt.x_csv)->required();
    classify->add_option("--y", opt.y_csv)->required();
    add_common(classify);

    auto* relate = app.add_subcommand("relate", "evaluate an order relation on an event pair");
    relate->add_option("--kind", opt.kind)->required();
    relate->add_option("--x", opt.x_csv)->required();
    relate->add_option("--y", opt.y_csv)->required();
    relate->add_option("--frame", opt.frame_csv, "spatial hyperplane normal");
    add_common(relate);

    auto* nbhd = app.add_subcommand("nbhd", "basic open set membership");
    nbhd->add_option("--kind", opt.kind)->required();
    nbhd->add_option("--center", opt.center_csv)->required();
    nbhd->add_option("--epsilon", opt.epsilon)->required();
    nbhd->add_option("--y", opt.y_csv)->required();
    add_common(nbhd);

    auto* trace = app.add_subcommand("axis-trace", "sampled induced topology on a straight axis");
    trace->add_option("--kind", opt.kind)->required();
    trace->add_option("--center", opt.center_csv)->required();
    trace->add_option("--epsilon", opt.epsilon)->required();
    trace->add_option("--axis", opt.axis, "time|space|null");
    trace->add_option("--dir", opt.dir_csv)->required();
    trace->add_option("--samples", opt.samples);
    add_common(trace);

    auto* path = app.add_subcommand("path-check", "polyline continuity classification");
    path->add_option("--kind", opt.kind)->required();
    path->add_option("--in", opt.in_path)->required();
    add_common(path);

    auto* spr = app.add_subcommand("sprinkle", "seeded random point cloud");
    spr->add_option("--count", opt.count);
    spr->add_option("--seed", opt.seed);
    spr->add_option("--null-fraction", opt.null_fraction);
    spr->add_option("--box", opt.box_csv, "\"lo,hi\" per-axis bounds");
    add_common(spr);

    auto* mat = app.add_subcommand("matrix", "relation matrix of a cloud, as CSV");
    mat->add_option("--kind", opt.kind)->required();
    mat->add_option("--in", opt.in_path)->required();
    mat->add_option("--frame", opt.frame_csv);
    add_common(mat);

    auto* sub = app.add_subcommand("subbasis", "interval-topology subbasis of a cloud");
    sub->add_option("--order", opt.order, "eq1|eq2|chron|causal")->required();
    sub->add_option("--in", opt.in_path)->required();
    sub->add_option("--frame", opt.frame_csv);
    add_common(sub);

    auto* gen = app.add_subcommand("topo-generate", "finite topology from a subbasis family");
    gen->add_option("--in", opt.in_path)->required();
    add_common(gen);

    auto* isect = app.add_subcommand("topo-intersect", "Reed intersection of two families");
    isect->add_option("--a", opt.a_path)->required();
    isect->add_option("--b", opt.b_path)->required();
    add_common(isect);

    auto* cmp = app.add_subcommand("topo-compare", "compare two finite topologies");
    cmp->add_option("--a", opt.a_path)->required();
    cmp->add_option("--b", opt.b_path)->required();
    add_common(cmp);

    auto* ver = app.add_subcommand("verify", "run the V1-V6 verification suite");
    auto* vprop = ver->add_option("--property", opt.property, "V1..V6 or all");
    auto* vseed = ver->add_option("--seed", opt.seed);
    auto* vcount = ver->add_option("--count", opt.count);
    auto* vdim = ver->add_option("--dim", opt.dim);
    ver->add_option("--out", opt.out_path);
    (void)vprop;

    CLI11_PARSE(app, argc, argv);

    try {
        const bool exact = (opt.mode == "exact");
        if (opt.dim < 2) throw UsageError("--dim must be >= 2");
        auto dispatch = [&](auto run_exact, auto run_float) {
            return exact ? run_exact() : run_float();
        };
        if (classify->parsed())
            return dispatch([&] { return cmd_classify<zeeman::Rational>(opt); },
                            [&] { return cmd_classify<double>(opt); });
        if (relate->parsed())
            return dispatch([&] { return cmd_relate<zeeman::Rational>(opt); },
                            [&] { return cmd_relate<double>(opt); });
        if (nbhd->parsed())
            return dispatch([&] { return cmd_nbhd<zeeman::Rational>(opt); },
                            [&] { return cmd_nbhd<double>(opt); });
        if (trace->parsed())
            return dispatch([&] { return cmd_axis_trace<zeeman::Rational>(opt); },
                            [&] { return cmd_axis_trace<double>(opt); });
        if (path->parsed())
            return dispatch([&] { return cmd_path_check<zeeman::Rational>(opt); },
                            [&] { return cmd_path_check<double>(opt); });
        if (spr->parsed())
            return dispatch([&] { return cmd_sprinkle<zeeman::Rational>(opt); },
                            [&] { return cmd_sprinkle<double>(opt); });
        if (mat->parsed())
            return dispatch([&] { return cmd_matrix<zeeman::Rational>(opt); },
                            [&] { return cmd_matrix<double>(opt); });
        if (sub->parsed())
            return dispatch([&] { return cmd_subbasis<zeeman::Rational>(opt); },
                            [&] { return cmd_subbasis<double>(opt); });
        if (gen->parsed()) return cmd_topo_generate(opt);
        if (isect->parsed()) return cmd_topo_intersect(opt);
        if (cmp->parsed()) return cmd_topo_compare(opt);
        if (ver->parsed())
            return cmd_verify(opt, vseed->count() > 0, vcount->count() > 0, vdim->count() > 0);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zeeman::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
