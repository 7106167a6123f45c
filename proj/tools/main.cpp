#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "persuasion/errors.hpp"
#include "persuasion/generate.hpp"
#include "persuasion/io.hpp"
#include "persuasion/reduction.hpp"
#include "persuasion/solvers.hpp"

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitViolation = 3;

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw persuasion::Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    if (!out) throw persuasion::Error("cannot write " + path);
    out << content;
}

}  // namespace

int main(int argc, char **argv) {
    using namespace persuasion;

    CLI::App app{"Exact persuasion / exact cover toolkit"};
    app.require_subcommand(1);

    std::string in_file, out_file, roles_file, engine = "brute";
    std::size_t cap = default_enumeration_cap();
    std::size_t workers = 1;
    bool strong = false, count_all = false;

    auto *solve_ppi = app.add_subcommand("solve-ppi", "Decide a persuasion instance");
    solve_ppi->add_option("file", in_file)->required();
    solve_ppi->add_flag("--strong", strong, "use the tau=1 polynomial decider");
    solve_ppi->add_option("--cap", cap, "enumeration cap on |F|");
    solve_ppi->add_option("--workers", workers, "worker threads for the sweep");

    auto *solve_eci = app.add_subcommand("solve-eci", "Decide an exact cover instance");
    solve_eci->add_option("file", in_file)->required();
    solve_eci->add_option("--engine", engine, "brute|dlx")
        ->check(CLI::IsMember({"brute", "dlx"}));
    solve_eci->add_flag("--count", count_all, "count all solutions");
    solve_eci->add_option("--cap", cap, "enumeration cap on k (brute engine)");

    auto *reduce_cmd = app.add_subcommand("reduce", "Map an ECI to a persuasion instance");
    reduce_cmd->add_option("file", in_file)->required();
    reduce_cmd->add_option("-o,--output", out_file)->required();
    reduce_cmd->add_option("--roles", roles_file, "role metadata sidecar (JSON)");

    auto *verify_cmd = app.add_subcommand("verify", "Check the reduction's lemmas on an ECI");
    verify_cmd->add_option("file", in_file)->required();
    verify_cmd->add_option("--cap", cap, "enumeration cap on k");
    verify_cmd->add_option("--workers", workers, "worker threads for the sweep");

    std::uint64_t seed = 0;
    std::size_t gmin_n = 1, gmax_n = 6, gmin_k = 1, gmax_k = 7;
    std::size_t gmin_w = 2, gmax_w = 8, gmin_e = 1, gmax_e = 4;
    bool planted = false, positive = false, common = false;
    std::string tau_text;

    auto *gen_eci_cmd = app.add_subcommand("gen-eci", "Emit a seeded random ECI");
    gen_eci_cmd->add_option("--seed", seed)->required();
    gen_eci_cmd->add_option("--min-n", gmin_n);
    gen_eci_cmd->add_option("--max-n", gmax_n);
    gen_eci_cmd->add_option("--min-k", gmin_k);
    gen_eci_cmd->add_option("--max-k", gmax_k);
    gen_eci_cmd->add_flag("--planted", planted, "plant a partition so the instance is solvable");
    gen_eci_cmd->add_option("-o,--output", out_file);

    auto *gen_ppi_cmd = app.add_subcommand("gen-ppi", "Emit a seeded random persuasion instance");
    gen_ppi_cmd->add_option("--seed", seed)->required();
    gen_ppi_cmd->add_option("--min-worlds", gmin_w);
    gen_ppi_cmd->add_option("--max-worlds", gmax_w);
    gen_ppi_cmd->add_option("--min-events", gmin_e);
    gen_ppi_cmd->add_option("--max-events", gmax_e);
    gen_ppi_cmd->add_flag("--positive", positive, "strictly positive probabilities");
    gen_ppi_cmd->add_flag("--common-world", common, "every event keeps world 0");
    gen_ppi_cmd->add_option("--tau", tau_text, "fixed threshold p/q");
    gen_ppi_cmd->add_option("-o,--output", out_file);

    std::uint64_t seed_begin = 0, seed_end = 0;
    auto *bench_cmd = app.add_subcommand(
        "bench", "Batch equivalence runs: reduce each seeded ECI and compare deciders");
    bench_cmd->add_option("--seed-begin", seed_begin)->required();
    bench_cmd->add_option("--seed-end", seed_end)->required();
    bench_cmd->add_option("--min-n", gmin_n);
    bench_cmd->add_option("--max-n", gmax_n);
    bench_cmd->add_option("--min-k", gmin_k);
    bench_cmd->add_option("--max-k", gmax_k);
    bench_cmd->add_option("--cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (solve_ppi->parsed()) {
            const PersuasionInstance inst = parse_ppi(slurp(in_file));
            PersuasionVerdict verdict;
            if (strong) {
                verdict = strong_persuasion_general(inst);
            } else {
                verdict = brute_force_persuasion(inst, cap, workers);
            }
            std::cout << render_persuasion_verdict(inst.space, verdict);
            return verdict.solvable ? kExitSolvable : kExitUnsolvable;
        }
        if (solve_eci->parsed()) {
            const ExactCoverInstance eci = parse_eci(slurp(in_file));
            const CoverVerdict verdict = engine == "dlx" ? exact_cover_dlx(eci, count_all)
                                                         : exact_cover_brute(eci, cap);
            std::cout << render_cover_verdict(eci, verdict);
            return verdict.solvable ? kExitSolvable : kExitUnsolvable;
        }
        if (reduce_cmd->parsed()) {
            const ExactCoverInstance eci = parse_eci(slurp(in_file));
            const ReductionArtifact art = reduce(eci);
            spill(out_file, render_ppi(art.instance));
            if (!roles_file.empty()) spill(roles_file, render_roles_json(art));
            std::cerr << "reduced " << in_file << ": |Omega|=" << art.instance.space.world_count()
                      << " tau=" << art.params.tau.str() << "\n";
            return kExitSolvable;
        }
        if (verify_cmd->parsed()) {
            const ExactCoverInstance eci = parse_eci(slurp(in_file));
            const VerificationReport report = verify_reduction(eci, cap, workers);
            std::cout << report.render();
            return report.all_passed() ? kExitSolvable : kExitViolation;
        }
        if (gen_eci_cmd->parsed()) {
            EciGenConfig cfg{seed, gmin_n, gmax_n, gmin_k, gmax_k, planted};
            const std::string text = render_eci(gen_eci(cfg));
            if (out_file.empty())
                std::cout << text;
            else
                spill(out_file, text);
            return kExitSolvable;
        }
        if (gen_ppi_cmd->parsed()) {
            PpiGenConfig cfg;
            cfg.seed = seed;
            cfg.min_worlds = gmin_w;
            cfg.max_worlds = gmax_w;
            cfg.min_events = gmin_e;
            cfg.max_events = gmax_e;
            cfg.strictly_positive = positive;
            cfg.common_world = common;
            if (!tau_text.empty()) cfg.threshold = Rational::parse(tau_text);
            const std::string text = render_ppi(gen_ppi(cfg));
            if (out_file.empty())
                std::cout << text;
            else
                spill(out_file, text);
            return kExitSolvable;
        }
        if (bench_cmd->parsed()) {
            if (seed_end < seed_begin) throw Error("empty seed range");
            std::size_t agree = 0, total = 0, solvable = 0;
            const auto t0 = std::chrono::steady_clock::now();
            for (std::uint64_t s = seed_begin; s <= seed_end; ++s) {
                EciGenConfig cfg{s, gmin_n, gmax_n, gmin_k, gmax_k, false};
                const ExactCoverInstance eci = gen_eci(cfg);
                const bool cover = exact_cover_brute(eci, cap).solvable;
                const bool ppi = brute_force_persuasion(reduce(eci).instance, cap).solvable;
                ++total;
                if (cover == ppi) ++agree;
                if (cover) ++solvable;
                std::cout << "seed=" << s << " n=" << eci.universe_size
                          << " k=" << eci.subset_count() << " cover=" << (cover ? 1 : 0)
                          << " persuasion=" << (ppi ? 1 : 0)
                          << (cover == ppi ? " agree" : " DISAGREE") << "\n";
            }
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            std::cout << "total=" << total << " solvable=" << solvable << " agree=" << agree
                      << " time_ms=" << ms << "\n";
            return agree == total ? kExitSolvable : kExitViolation;
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
