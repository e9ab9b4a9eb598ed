// Command-line front end: hexagon reports and meshes, curvature-rate reports
// for stored Weierstrass data, the full verification suite, and the seeded
// boundary-correspondence family runs.
//
// Exit codes: 0 success, 2 input/precondition error, 3 numeric failure,
// 4 bound violation.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "minsurf/verify.hpp"

using namespace minsurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitBound = 4;

double env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stod(v);
    } catch (...) {
        throw std::invalid_argument(std::string("bad value in env ") + name);
    }
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        throw std::invalid_argument(std::string("bad value in env ") + name);
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_text_file(out_path, content);
}

int cmd_hexagon_report(const std::string& out_path) {
    const CurvatureReport rep = hexagon_report();
    emit(out_path, to_json(rep).dump(2) + "\n");
    return kExitOk;
}

int cmd_hexagon_mesh(int n_radial, int n_angular, double r_max, const std::string& format,
                     const std::string& out_path) {
    const HexagonModel model = build_hexagon();
    const MeshArtifact mesh = hexagon_mesh(model, n_radial, n_angular, r_max);
    if (format == "obj")
        emit(out_path, obj_string(mesh));
    else if (format == "csv")
        emit(out_path, csv_string(mesh));
    else
        throw std::invalid_argument("format must be obj or csv");
    return kExitOk;
}

int cmd_kpp(const std::string& input, bool run_hall, const std::string& out_path) {
    const WeierstrassData data = weierstrass_from_json(load_json_file(input));
    ReportOptions opts;
    opts.run_hall = run_hall;
    opts.limit.spread_tol = env_double("MINSURF_LIMIT_SPREAD_TOL", opts.limit.spread_tol);
    CurvatureReport rep = make_report(data, opts);
    emit(out_path, to_json(rep).dump(2) + "\n");
    const bool bound_violated = std::abs(rep.rate_closed) >= general_rate_bound() ||
                                (rep.margin_flat && *rep.margin_flat < -1e-12) ||
                                (rep.hall.run && !rep.hall.ok) || !rep.schwarz.ok;
    return bound_violated ? kExitBound : kExitOk;
}

int cmd_verify(std::uint64_t seed, const std::string& out_path) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.rkc_instances = env_int("MINSURF_RKC_INSTANCES", opts.rkc_instances);
    opts.limit_spread_tol = env_double("MINSURF_LIMIT_SPREAD_TOL", opts.limit_spread_tol);
    opts.fd_third_tol = env_double("MINSURF_FD_THIRD_TOL", opts.fd_third_tol);

    const std::vector<CheckResult> results = run_verification(opts);
    json summary;
    summary["seed"] = seed;
    summary["checks"] = json::array();
    int failures = 0;
    bool bound_failure = false;
    for (const auto& r : results) {
        std::printf("%-36s %s  value %.3e  vs  %.3e  (%.2fs)%s%s\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.value, r.threshold, r.seconds, r.detail.empty() ? "" : "  ",
                    r.detail.c_str());
        summary["checks"].push_back({{"name", r.name},
                                     {"pass", r.pass},
                                     {"value", r.value},
                                     {"threshold", r.threshold},
                                     {"detail", r.detail}});
        if (!r.pass) {
            ++failures;
            if (r.name.find("bound") != std::string::npos || r.name.find("margin") != std::string::npos)
                bound_failure = true;
        }
    }
    summary["failures"] = failures;
    std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures, results.size());
    if (!out_path.empty()) save_json_file(out_path, summary);
    if (failures == 0) return kExitOk;
    return bound_failure ? kExitBound : kExitNumeric;
}

int cmd_rkc(const std::string& input, std::uint64_t seed, int count, const std::string& target_str,
            const std::string& out_path) {
    json out;
    out["reports"] = json::array();
    bool violated = false;
    auto add = [&](const BoundaryCorrespondence& bc) {
        CurvatureReport rep = family_report(bc);
        json jr = to_json(rep);
        jr["target"] = target_name(bc.target);
        jr["symmetry_order"] = bc.symmetry_order;
        out["reports"].push_back(jr);
        if (bc.target == Target::disk) {
            if (std::abs(rep.rate_closed) >= general_rate_bound() || (rep.hall.run && !rep.hall.ok) ||
                !rep.schwarz.ok)
                violated = true;
            if (rep.margin_flat && *rep.margin_flat <= 0.0) violated = true;
        }
    };
    if (!input.empty()) {
        add(correspondence_from_json(load_json_file(input)));
    } else {
        const Target target = (target_str == "hexagon") ? Target::hexagon : Target::disk;
        Rng rng(seed);
        for (int i = 0; i < count; ++i) {
            Rng sub = rng.fork(i);
            const int order = (i % 5 < 3) ? 6 : 2;
            add(random_family_instance(sub, order, target).bc);
        }
        out["seed"] = seed;
    }
    out["bound_violation"] = violated;
    emit(out_path, out.dump(2) + "\n");
    return violated ? kExitBound : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal graphs over the disk from Enneper-Weierstrass data: "
                 "curvature rates at zero-curvature centres, bound checks, and the "
                 "hexagon extremal"};
    app.require_subcommand(1);

    auto* rep = app.add_subcommand("hexagon-report", "curvature-rate report of the hexagon extremal");
    std::string rep_out;
    rep->add_option("--out", rep_out, "output path (default: stdout)");

    auto* mesh = app.add_subcommand("hexagon-mesh", "polar-grid mesh of the hexagon graph");
    int n_radial = 24, n_angular = 96;
    double r_max = 0.9;
    std::string format = "obj", mesh_out;
    mesh->add_option("--n-radial", n_radial, "radial subdivisions")->check(CLI::PositiveNumber);
    mesh->add_option("--n-angular", n_angular, "angular subdivisions")->check(CLI::PositiveNumber);
    mesh->add_option("--r-max", r_max, "outer parameter radius (< 1)");
    mesh->add_option("--format", format, "obj or csv");
    mesh->add_option("--out", mesh_out, "output path (default: stdout)");

    auto* kpp = app.add_subcommand("kpp", "curvature-rate report for stored Weierstrass data");
    std::string kpp_input, kpp_out;
    bool kpp_hall = false;
    kpp->add_option("--input", kpp_input, "WeierstrassData JSON file")->required();
    kpp->add_option("--out", kpp_out, "output path (default: stdout)");
    kpp->add_flag("--hall", kpp_hall, "also run Hall's bound (asserts a disk-onto-disk datum)");

    auto* verify = app.add_subcommand("verify", "run every module invariant suite");
    std::uint64_t seed = 7;
    std::string verify_out;
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--out", verify_out, "JSON summary path");

    auto* rkc = app.add_subcommand("rkc", "boundary-correspondence family reports");
    std::string rkc_input, rkc_out, rkc_target = "disk";
    std::uint64_t rkc_seed = 7;
    int rkc_count = 20;
    rkc->add_option("--input", rkc_input, "correspondence JSON file (otherwise a seeded batch)");
    rkc->add_option("--seed", rkc_seed, "seed for the batch");
    rkc->add_option("--count", rkc_count, "batch size")->check(CLI::PositiveNumber);
    rkc->add_option("--target", rkc_target, "disk or hexagon");
    rkc->add_option("--out", rkc_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
        if (rep->parsed()) return cmd_hexagon_report(rep_out);
        if (mesh->parsed()) return cmd_hexagon_mesh(n_radial, n_angular, r_max, format, mesh_out);
        if (kpp->parsed()) return cmd_kpp(kpp_input, kpp_hall, kpp_out);
        if (verify->parsed()) return cmd_verify(seed, verify_out);
        if (rkc->parsed()) return cmd_rkc(rkc_input, rkc_seed, rkc_count, rkc_target, rkc_out);
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const convergence_error& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "precondition violation: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
}
