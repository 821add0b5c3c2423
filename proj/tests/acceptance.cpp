// Acceptance checks for the verification suite. Each criterion prints one
// PASS/FAIL line; the process exits nonzero if any criterion fails.
//
// argv[1]: path to the zeeman-cli binary (used by the determinism check).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "zeeman/verify.hpp"

using namespace zeeman;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& note = "") {
    std::cout << "criterion " << criterion << " (" << label << "): " << (ok ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

/// Runs the default grid with exactly one property enabled.
VerificationReport run_single(int property_index) {
    SuiteConfig cfg;
    cfg.enabled.fill(false);
    cfg.enabled[property_index] = true;
    auto reports = run_suite(cfg);
    return reports.front();
}

std::string counterexample_note(const VerificationReport& rep) {
    if (rep.pass()) return "";
    return std::to_string(rep.counterexample_count) + " counterexamples";
}

/// A 100-segment piecewise timelike path alternating time orientation.
Polyline<Rational> random_timelike_zigzag(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Polyline<Rational> p;
    Event<Rational> cur(Vec<Rational>{Rational(0), Rational(0), Rational(0), Rational(0)});
    p.vertices.push_back(cur);
    for (int s = 0; s < 100; ++s) {
        const Rational dt = (s % 2 == 0) ? Rational(1) : Rational(-1);
        Vec<Rational> step{dt, Rational(0), Rational(0), Rational(0)};
        // Spatial displacement strictly shorter than the time step.
        for (std::size_t k = 1; k < 4; ++k)
            step[k] = Rational(static_cast<long>(rng() % 1024)) / Rational(2048);
        cur = Event<Rational>(add(cur.coords, step));
        p.vertices.push_back(cur);
    }
    return p;
}

bool path_criterion() {
    // Timelike zigzag in float data.
    Polyline<double> zig;
    zig.vertices = {Event<double>({0, 0, 0, 0}), Event<double>({1, 0, 0, 0}),
                    Event<double>({0, 0.5, 0, 0})};
    const auto r1 = path_check(zig, TopologyKind::ZT);
    bool ok = r1.continuous && r1.zigzag;

    Polyline<Rational> null_seg;
    null_seg.vertices = {
        Event<Rational>(Vec<Rational>{Rational(0), Rational(0), Rational(0), Rational(0)}),
        Event<Rational>(Vec<Rational>{Rational(1), Rational(1), Rational(0), Rational(0)})};
    ok = ok && !path_check(null_seg, TopologyKind::ZT).continuous &&
         !path_check(null_seg, TopologyKind::Z).continuous;

    Polyline<Rational> space;
    space.vertices = {
        Event<Rational>(Vec<Rational>{Rational(0), Rational(0), Rational(0), Rational(0)}),
        Event<Rational>(Vec<Rational>{Rational(0), Rational(1), Rational(0), Rational(0)}),
        Event<Rational>(Vec<Rational>{Rational(0), Rational(2), Rational(1), Rational(0)})};
    ok = ok && path_check(space, TopologyKind::ZS).continuous;

    const auto rz = path_check(random_timelike_zigzag(2024), TopologyKind::ZT);
    ok = ok && rz.continuous && rz.zigzag;
    return ok;
}

bool run_cli_to_file(const std::string& cli, const std::string& args, const std::string& out) {
    const std::string cmd = cli + " " + args + " > " + out + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    // Property failures exit 1; only usage errors or crashes disqualify.
    return rc != -1 && WEXITSTATUS(rc) != 2;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-zeeman-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    {
        const auto start = std::chrono::steady_clock::now();
        const auto v1 = run_single(0);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char note[64];
        std::snprintf(note, sizeof note, "%.2fs", secs);
        report(1, "basic-set union identity, exact, < 10 s", v1.pass() && secs < 10.0, note);
    }

    {
        const auto v2 = run_single(1);
        report(2, "order intersection equals the irreflexive horismos", v2.pass(),
               counterexample_note(v2));
    }

    {
        const auto v4 = run_single(3);
        const bool muts = v4.config.value("mutation_eq1_detected", false) &&
                          v4.config.value("mutation_eq2_detected", false);
        report(3, "finite-sample intersection-topology identities with mutation controls",
               v4.pass() && muts, counterexample_note(v4));
    }

    {
        const auto v3 = run_single(2);
        report(4, "partition invariance of the order topology", v3.pass(),
               counterexample_note(v3));
    }

    {
        const auto v5 = run_single(4);
        const bool refl = v5.config.value("reflection_control_detected", false);
        report(5, "symmetry-group invariance with reflection control", v5.pass() && refl,
               counterexample_note(v5));
    }

    {
        const auto v6 = run_single(5);
        report(6, "axis-trace discreteness and interval structure", v6.pass(),
               counterexample_note(v6));
    }

    report(7, "path-checker canonical polylines and random zigzag", path_criterion());

    {
        const std::string args = "verify --property all --seed 0";
        const bool ran = run_cli_to_file(cli, args, "/tmp/acceptance_run_a.json") &&
                         run_cli_to_file(cli, args, "/tmp/acceptance_run_b.json");
        const std::string a = slurp("/tmp/acceptance_run_a.json");
        const std::string b = slurp("/tmp/acceptance_run_b.json");
        report(8, "byte-identical repeated verification output",
               ran && !a.empty() && a == b);
    }

    return failures == 0 ? 0 : 1;
}
