// witness -- command-line toolkit for witness sets in binary codes.
//
// Exit codes: 0 success / property holds, 1 property fails (verify,
// reproduce), 2 usage errors or malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wit/analysis.hpp"
#include "wit/bounds.hpp"
#include "wit/constructions.hpp"
#include "wit/core.hpp"
#include "wit/io.hpp"
#include "wit/reproduce.hpp"
#include "wit/solver.hpp"

namespace {

constexpr const char* kCacheEnvVar = "WITNESS_CACHE";

std::optional<std::string> cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return std::string(env);
    return std::nullopt;
}

void emit_code(const wit::Code& code, const std::string& out_path) {
    if (out_path.empty())
        wit::write_code_file(std::cout, code);
    else
        wit::write_code_file(std::filesystem::path(out_path), code);
}

void emit_blocks(const wit::SetFamily& family, const std::string& out_path) {
    if (out_path.empty())
        wit::write_block_file(std::cout, family);
    else
        wit::write_block_file(std::filesystem::path(out_path), family);
}

int run_verify(const std::string& code_path, int w, bool uniform) {
    wit::Code code = wit::read_code_file(code_path).code();
    if (uniform) {
        wit::CoordSet window = wit::min_uniform_witness(code, wit::SearchMode::Exact);
        if (window.size() <= w) {
            std::cout << "uniform witness " << window.str() << " size " << window.size() << "\n";
            return 0;
        }
        std::cout << "no uniform witness of size <= " << w << " (minimum is " << window.size()
                  << ")\n";
        return 1;
    }
    wit::WitnessAssignment check = wit::has_w_witness_property(code, w);
    if (!check.holds) {
        std::cout << "FAIL " << check.first_failure->str() << " has no witness of size <= " << w
                  << "\n";
        return 1;
    }
    for (const auto& [word, witness] : check.choice)
        std::cout << word.str() << " " << witness.str() << "\n";
    return 0;
}

int run_min_witness(const std::string& code_path, int word_index, bool greedy) {
    wit::CodeFileContents contents = wit::read_code_file(code_path);
    wit::Code code = contents.code();
    const wit::SearchMode mode = greedy ? wit::SearchMode::Greedy : wit::SearchMode::Exact;
    auto print_one = [&](const wit::Codeword& c) {
        wit::CoordSet witness = wit::min_witness(code, c, mode);
        std::cout << c.str() << " witness " << witness.str() << " size " << witness.size() << "\n";
    };
    if (word_index > 0) {
        if (static_cast<std::size_t>(word_index) > contents.words.size())
            throw std::invalid_argument("--word index exceeds the number of codewords");
        print_one(contents.words[static_cast<std::size_t>(word_index) - 1]);
    } else {
        for (const wit::Codeword& c : contents.words) print_one(c);
    }
    return 0;
}

int run_stats(const std::string& code_path, int w) {
    wit::Code code = wit::read_code_file(code_path).code();
    std::cout << wit::to_json(wit::mean_stats(code, w)).dump(2) << "\n";
    return 0;
}

int run_bounds(int n, int w, const std::string& cache_flag) {
    wit::ExactValueCache cache;
    if (auto path = cache_path(cache_flag)) cache = wit::load_cache(*path);
    std::cout << wit::to_json(wit::bounds_report(n, w, cache)).dump(2) << "\n";
    return 0;
}

int run_solve(int n, int w, std::optional<int> k, std::optional<double> time_limit,
              const std::string& cache_flag) {
    wit::SolveOptions options;
    options.limits.time_limit_seconds = time_limit;

    auto path = cache_path(cache_flag);
    wit::ExactValueCache cache;
    if (path) {
        cache = wit::load_cache(*path);
        options.cache = &cache;
    }

    wit::SolverResult result = k ? wit::f_cw_exact(n, w, *k, options) : wit::f_exact(n, w, options);
    std::cout << wit::to_json(result).dump(2) << "\n";

    if (path) {
        cache.insert(wit::CacheKey{n, w, k},
                     wit::CacheEntry{result.value,
                                     result.status == wit::SolveStatus::Exact
                                         ? wit::CacheStatus::Exact
                                         : wit::CacheStatus::LowerBound,
                                     result.strategy == wit::SolveStrategy::Enumeration
                                         ? "solver:enumeration"
                                         : "solver:branch-and-bound",
                                     std::string(wit::kToolVersion), wit::iso8601_now()});
        wit::save_cache(*path, cache);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"witness sets in binary codes: verification, minimum witnesses, bounds, "
                 "constructions and exact small-instance solving"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wit::kToolVersion));

    // verify
    auto* verify = app.add_subcommand("verify", "check the w-witness property of a code file");
    std::string verify_code;
    int verify_w = 0;
    bool verify_uniform = false;
    verify->add_option("--code", verify_code, "code file")->required();
    verify->add_option("--w", verify_w, "witness size")->required();
    verify->add_flag("--uniform", verify_uniform, "check one injective window instead");

    // min-witness
    auto* minw = app.add_subcommand("min-witness", "minimum witness per codeword");
    std::string minw_code;
    int minw_word = 0;
    bool minw_greedy = false;
    minw->add_option("--code", minw_code, "code file")->required();
    minw->add_option("--word", minw_word, "1-based index into the file's word list");
    minw->add_flag("--greedy", minw_greedy, "greedy instead of exact");

    // stats
    auto* stats = app.add_subcommand("stats", "witness/window count statistics and means");
    std::string stats_code;
    int stats_w = 0;
    stats->add_option("--code", stats_code, "code file")->required();
    stats->add_option("--w", stats_w, "window size")->required();

    // construct
    auto* construct = app.add_subcommand("construct", "generate a code or block family");
    construct->require_subcommand(1);
    std::string out_path;

    auto* c_sphere = construct->add_subcommand("sphere", "all weight-k words");
    int sp_n = 0, sp_k = 0;
    c_sphere->add_option("--n", sp_n)->required();
    c_sphere->add_option("--k", sp_k)->required();
    c_sphere->add_option("--out", out_path, "output file (default stdout)");

    auto* c_cube = construct->add_subcommand("cube", "all words supported inside a window");
    int cu_n = 0;
    std::vector<int> cu_window;
    c_cube->add_option("--n", cu_n)->required();
    c_cube->add_option("--window", cu_window, "window coordinates (e.g. --window 1 2 3)")
        ->required()
        ->expected(-1);
    c_cube->add_option("--out", out_path, "output file (default stdout)");

    auto* c_family = construct->add_subcommand("family", "words in exactly one block");
    std::string fam_blocks;
    c_family->add_option("--blocks", fam_blocks, "block family file")->required();
    c_family->add_option("--out", out_path, "output file (default stdout)");

    auto* c_s348 = construct->add_subcommand("steiner348", "the S(3,4,8) block family");
    c_s348->add_option("--out", out_path, "output file (default stdout)");

    auto* c_s5612 = construct->add_subcommand("steiner5612", "the S(5,6,12) block family");
    c_s5612->add_option("--out", out_path, "output file (default stdout)");

    auto* c_twopart = construct->add_subcommand("twopart", "cube + sphere-layer two-part code");
    int tp_n = 0, tp_w = 0, tp_t = 0;
    c_twopart->add_option("--n", tp_n)->required();
    c_twopart->add_option("--w", tp_w)->required();
    c_twopart->add_option("--t", tp_t)->required();
    c_twopart->add_option("--out", out_path, "output file (default stdout)");

    auto* c_cwsearch = construct->add_subcommand(
        "cwsearch", "search a constant-weight distance-d support family");
    int cw_n = 0, cw_d = 0, cw_w = 0, cw_effort = wit::kCwSearchDefaultEffort;
    std::uint64_t cw_seed = wit::kCwSearchDefaultSeed;
    c_cwsearch->add_option("--n", cw_n)->required();
    c_cwsearch->add_option("--d", cw_d)->required();
    c_cwsearch->add_option("--w", cw_w)->required();
    c_cwsearch->add_option("--effort", cw_effort, "number of restarts");
    c_cwsearch->add_option("--seed", cw_seed, "RNG seed (part of the result's provenance)");
    c_cwsearch->add_option("--out", out_path, "output file (default stdout)");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "lower/upper bound report for f(n,w)");
    int b_n = 0, b_w = 0;
    std::string b_cache;
    bounds_cmd->add_option("--n", b_n)->required();
    bounds_cmd->add_option("--w", b_w)->required();
    bounds_cmd->add_option("--cache", b_cache, "exact-value cache file (default $WITNESS_CACHE)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "exact f(n,w) or f(n,w,k)");
    int s_n = 0, s_w = 0;
    int s_k = -1;
    double s_time = 0.0;
    std::string s_cache;
    solve_cmd->add_option("--n", s_n)->required();
    solve_cmd->add_option("--w", s_w)->required();
    solve_cmd->add_option("--k", s_k, "restrict codewords to weight k");
    solve_cmd->add_option("--time-limit", s_time, "seconds; expiry returns a lower bound");
    solve_cmd->add_option("--cache", s_cache, "cache file to update (default $WITNESS_CACHE)");

    // reproduce
    app.add_subcommand("reproduce", "re-derive every headline value and print PASS/FAIL lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_code, verify_w, verify_uniform);
        if (minw->parsed()) return run_min_witness(minw_code, minw_word, minw_greedy);
        if (stats->parsed()) return run_stats(stats_code, stats_w);
        if (construct->parsed()) {
            if (c_sphere->parsed()) {
                emit_code(wit::sphere(sp_n, sp_k), out_path);
            } else if (c_cube->parsed()) {
                emit_code(wit::cube_on_window(cu_n, wit::CoordSet::from_members(cu_n, cu_window)),
                          out_path);
            } else if (c_family->parsed()) {
                emit_code(wit::from_family(wit::read_block_file(fam_blocks)), out_path);
            } else if (c_s348->parsed()) {
                emit_blocks(wit::steiner_3_4_8(), out_path);
            } else if (c_s5612->parsed()) {
                emit_blocks(wit::steiner_5_6_12(), out_path);
            } else if (c_twopart->parsed()) {
                if (!wit::two_part_t_in_stated_range(tp_n, tp_w, tp_t))
                    std::cerr << "warning: t=" << tp_t << " is outside the stated range 1 <= t <= "
                              << (tp_n - tp_w) / 2 << " (still valid while w - t >= 2w - n)\n";
                emit_code(wit::two_part_sphere(tp_n, tp_w, tp_t), out_path);
            } else if (c_cwsearch->parsed()) {
                wit::SetFamily family = wit::cw_code_search(cw_n, cw_d, cw_w, cw_effort, cw_seed);
                std::cerr << "# found " << family.size() << " blocks (lower bound on A(" << cw_n
                          << "," << cw_d << "," << cw_w << ")), seed " << cw_seed << ", effort "
                          << cw_effort << "\n";
                emit_blocks(family, out_path);
            }
            return 0;
        }
        if (bounds_cmd->parsed()) return run_bounds(b_n, b_w, b_cache);
        if (solve_cmd->parsed())
            return run_solve(s_n, s_w, s_k >= 0 ? std::optional<int>(s_k) : std::nullopt,
                             s_time > 0 ? std::optional<double>(s_time) : std::nullopt, s_cache);
        if (app.got_subcommand("reproduce")) {
            auto results = wit::repro::run_all(std::cout);
            return wit::repro::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
