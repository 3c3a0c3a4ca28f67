// Command-line surface over the labeling library.
//
// Exit codes: 0 ok, 1 invalid input, 2 verification failed, 3 construction
// infeasible, 4 guard/cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tvs/classify.hpp"
#include "tvs/enumerate.hpp"
#include "tvs/exact.hpp"
#include "tvs/forest.hpp"
#include "tvs/json_io.hpp"
#include "tvs/labeler.hpp"
#include "tvs/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitGuard = 4;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw tvs::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& output_path, const std::string& payload) {
    if (output_path.empty() || output_path == "-") {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(output_path);
    out << payload;
}

tvs::ForestFormat parse_format(const std::string& name) {
    if (name == "json") return tvs::ForestFormat::json;
    if (name == "edgelist") return tvs::ForestFormat::edgelist;
    throw tvs::ParseError("unknown format: " + name);
}

struct CommonOpts {
    std::string input;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("input", opts.input, "forest file, or - for stdin")->required();
    cmd->add_option("--format", opts.format, "json|edgelist")->default_val("json");
    cmd->add_option("--output", opts.output, "output path (default stdout)");
}

tvs::Forest load_forest(const CommonOpts& opts) {
    return tvs::parse_forest(read_file(opts.input), parse_format(opts.format));
}

int run_label(const CommonOpts& opts, const std::string& mode_flag, bool audit) {
    tvs::Forest f = load_forest(opts);
    tvs::Mode mode = tvs::mode_from_name(mode_flag);
    tvs::TotalWeighting tw = tvs::construct(f, mode);

    // A labeling is never reported without an internal verify pass.
    tvs::Certificate cert = tvs::verify(f, tw, tw.s);
    if (!cert.valid) {
        std::cerr << "self-verification failed\n" << tvs::certificate_to_json(cert) << "\n";
        return kExitVerifyFailed;
    }
    std::string payload = tvs::labeling_to_json(f, tw);
    if (audit) {
        auto [census, ct] = tvs::classify(f);
        (void)census;
        payload += "\n" + tvs::audit_to_json(tvs::audit_construction(f, tw, ct, tw.mode));
    }
    emit(opts.output, payload);
    return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& labeling_path) {
    tvs::Forest f = load_forest(opts);
    tvs::TotalWeighting tw = tvs::labeling_from_json(read_file(labeling_path), f);
    tvs::Certificate cert = tvs::verify(f, tw, tw.s);
    emit(opts.output, tvs::certificate_to_json(cert));
    return cert.valid ? kExitOk : kExitVerifyFailed;
}

int run_exact(const CommonOpts& opts, int cap, int guard) {
    tvs::Forest f = load_forest(opts);
    tvs::ExactResult res = tvs::exact_tvs(f, cap, guard);
    std::ostringstream head;
    head << res.s << "\n";
    emit(opts.output, head.str() + tvs::labeling_to_json(f, res.witness));
    return kExitOk;
}

int run_classify(const CommonOpts& opts) {
    tvs::Forest f = load_forest(opts);
    auto [census, ct] = tvs::classify(f);
    (void)census;
    emit(opts.output, tvs::class_table_to_json(ct));
    return kExitOk;
}

int run_bounds(const CommonOpts& opts) {
    tvs::Forest f = load_forest(opts);
    tvs::BoundsReport b = tvs::bounds(f);
    std::ostringstream out;
    out << "{";
    out << "\"lb_eq1\":" << b.lb_eq1 << ",\"ub_eq1\":" << b.ub_eq1;
    if (b.eq2_applicable) out << ",\"ub_eq2\":" << b.ub_eq2;
    if (b.lb_forest_applicable) out << ",\"lb_forest\":" << b.lb_forest;
    if (b.eq4_applicable) out << ",\"ub_tree_eq4\":" << b.ub_tree_eq4;
    out << "}";
    emit(opts.output, out.str());
    return kExitOk;
}

int run_dot(const CommonOpts& opts, const std::string& labeling_path) {
    tvs::Forest f = load_forest(opts);
    tvs::TotalWeighting tw = labeling_path.empty()
                                 ? tvs::construct(f)
                                 : tvs::labeling_from_json(read_file(labeling_path), f);
    emit(opts.output, tvs::to_dot(f, tw));
    return kExitOk;
}

struct GenOpts {
    std::uint64_t seed = 0;
    std::vector<int> components{1, 1};
    std::vector<int> sizes{2, 8};
    int n2 = 0;
    bool allow_k2 = false;
    std::string output;
};

int run_gen(const GenOpts& g) {
    tvs::GeneratorSpec spec;
    spec.seed = g.seed;
    spec.min_components = g.components[0];
    spec.max_components = g.components[1];
    spec.min_size = g.sizes[0];
    spec.max_size = g.sizes[1];
    spec.max_n2 = g.n2;
    spec.allow_isolated_edges = g.allow_k2;
    tvs::Forest f = tvs::random_forest(spec);
    emit(g.output, tvs::serialize_forest(f, tvs::ForestFormat::json));
    return kExitOk;
}

struct SweepOpts {
    int max_n = 8;
    int n2 = 0;
    bool oracle = false;
    int random = 0;
    std::uint64_t seed = 0;
};

int run_sweep(const SweepOpts& sw) {
    int bad = 0;
    auto row = [&](const std::string& name, const tvs::Forest& f) {
        auto [census, ct] = tvs::classify(f);
        (void)census;
        int s = tvs::strength_target(ct.n1);
        std::string status;
        try {
            tvs::TotalWeighting tw = tvs::construct(f);
            bool ok = tw.s == s && tvs::verify(f, tw, s).valid;
            status = ok ? "ok" : "VERIFY-FAIL";
            if (ok && sw.oracle) {
                int exact = tvs::exact_tvs(f, ct.n1 + 1).s;
                if (exact != s) status = "ORACLE-MISMATCH(" + std::to_string(exact) + ")";
            }
        } catch (const tvs::ConstructionError& e) {
            status = std::string("INFEASIBLE(") + e.phase + ")";
        }
        if (status != "ok") ++bad;
        std::printf("%-14s n=%-3d n1=%-3d s=%-3d %s\n", name.c_str(), f.vertex_count(), ct.n1,
                    s, status.c_str());
    };

    tvs::TreeConstraints c;
    c.max_n2 = sw.n2;
    int idx = 0;
    for (int n = 2; n <= sw.max_n; ++n)
        for (const tvs::Forest& t : tvs::enumerate_trees(n, c))
            row("tree-" + std::to_string(idx++), t);

    tvs::GeneratorSpec spec;
    spec.min_components = 2;
    spec.max_components = 5;
    spec.max_n2 = sw.n2;
    for (int i = 0; i < sw.random; ++i) {
        spec.seed = sw.seed + static_cast<std::uint64_t>(i);
        row("random-" + std::to_string(i), tvs::random_forest(spec));
    }
    std::printf("sweep: %d failures\n", bad);
    return bad == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irregular total weightings of forests"};
    app.require_subcommand(1);

    CommonOpts label_opts, verify_opts, exact_opts, classify_opts, bounds_opts, dot_opts;
    std::string label_mode = "auto";
    bool label_audit = false;
    std::string verify_labeling, dot_labeling;
    int exact_cap = 32, exact_guard = tvs::kDefaultSizeGuard;
    GenOpts gen_opts;
    SweepOpts sweep_opts;

    auto* label = app.add_subcommand("label", "construct an irregular weighting");
    add_common(label, label_opts);
    label->add_option("--mode", label_mode, "auto|t1|t2")->default_val("auto");
    label->add_flag("--audit", label_audit, "append construction audit report");

    auto* verify = app.add_subcommand("verify", "check a labeling file");
    add_common(verify, verify_opts);
    verify->add_option("--labeling", verify_labeling, "labeling json file")->required();

    auto* exact = app.add_subcommand("exact", "brute-force exact tvs");
    add_common(exact, exact_opts);
    exact->add_option("--cap", exact_cap, "largest s to try")->default_val(32);
    exact->add_option("--guard", exact_guard, "max vertex count")
        ->default_val(tvs::kDefaultSizeGuard);

    auto* classify_cmd = app.add_subcommand("classify", "degree class census");
    add_common(classify_cmd, classify_opts);

    auto* bounds_cmd = app.add_subcommand("bounds", "published bounds for the instance");
    add_common(bounds_cmd, bounds_opts);

    auto* gen = app.add_subcommand("gen", "seeded random forest");
    gen->add_option("--seed", gen_opts.seed)->default_val(0);
    gen->add_option("--components", gen_opts.components, "min max")->expected(2);
    gen->add_option("--sizes", gen_opts.sizes, "min max per component")->expected(2);
    gen->add_option("--n2", gen_opts.n2, "degree-2 budget (0 or 1)")->default_val(0);
    gen->add_flag("--allow-k2", gen_opts.allow_k2, "permit isolated edges");
    gen->add_option("--output", gen_opts.output);

    auto* sweep = app.add_subcommand("sweep", "theorem check over enumerated instances");
    sweep->add_option("--max-n", sweep_opts.max_n)->default_val(8);
    sweep->add_option("--n2", sweep_opts.n2, "degree-2 budget (0 or 1)")->default_val(0);
    sweep->add_flag("--oracle", sweep_opts.oracle, "cross-check with exact search");
    sweep->add_option("--random", sweep_opts.random, "additional seeded forests");
    sweep->add_option("--seed", sweep_opts.seed)->default_val(0);

    auto* dot = app.add_subcommand("dot", "DOT export with labels and totals");
    add_common(dot, dot_opts);
    dot->add_option("--labeling", dot_labeling, "labeling json (default: construct)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (label->parsed()) return run_label(label_opts, label_mode, label_audit);
        if (verify->parsed()) return run_verify(verify_opts, verify_labeling);
        if (exact->parsed()) return run_exact(exact_opts, exact_cap, exact_guard);
        if (classify_cmd->parsed()) return run_classify(classify_opts);
        if (bounds_cmd->parsed()) return run_bounds(bounds_opts);
        if (gen->parsed()) return run_gen(gen_opts);
        if (sweep->parsed()) return run_sweep(sweep_opts);
        if (dot->parsed()) return run_dot(dot_opts, dot_labeling);
    } catch (const tvs::ConstructionError& e) {
        std::cerr << "construction infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const tvs::GuardExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const tvs::ParseError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
