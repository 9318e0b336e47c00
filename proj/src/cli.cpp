#include "dbcc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dbcc/serialize.hpp"

namespace dbcc::cli {

namespace {

struct SpaceArgs {
    std::string kind;
    int q = 2;
    int n = 0;
    int R = 0;

    SpaceDescriptor make() const {
        if (kind == "hamming")
            return SpaceDescriptor::hamming(q, n, R);
        return SpaceDescriptor::permutation(n, R);
    }
};

void add_space_options(CLI::App* cmd, SpaceArgs& args) {
    cmd->add_option("--space", args.kind, "Space kind: hamming or perm")
        ->required()
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, std::string>{{"hamming", "hamming"},
                                               {"perm", "permutation"},
                                               {"permutation", "permutation"}}));
    cmd->add_option("--q", args.q, "Alphabet size (hamming spaces)");
    cmd->add_option("--n", args.n, "Window length")->required();
    cmd->add_option("--R", args.R, "Covering radius")->required();
}

Limits limits_from_env() {
    Limits limits;
    if (const char* v = std::getenv("DBCC_MAX_CLASSES")) {
        const std::uint64_t cap = std::stoull(v);
        limits.max_perm_classes = cap;
        limits.max_hamming_classes = cap;
    }
    if (const char* v = std::getenv("DBCC_MAX_EXHAUSTIVE"))
        limits.max_exhaustive = std::stoull(v);
    if (const char* v = std::getenv("DBCC_MAX_SEARCH_NODES"))
        limits.max_search_nodes = std::stoull(v);
    return limits;
}

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
}

std::string read_code_text(const std::string& inline_code, const std::string& path) {
    if (!inline_code.empty())
        return inline_code;
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open code file: " + path);
    std::string text;
    std::getline(file, text);
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n' || text.back() == ' '))
        text.pop_back();
    return text;
}

std::string render_text_report(const CoverageReport& report) {
    std::ostringstream os;
    os << "covering: " << (report.is_covering ? "yes" : "no") << "\n"
       << "length: " << report.length << "\n"
       << "covered: " << report.covered_count << "/"
       << (report.covered_count + report.uncovered_total) << "\n";
    if (!report.uncovered.empty()) {
        os << "uncovered:";
        for (std::uint64_t rank : report.uncovered)
            os << " " << class_label(report.space, rank);
        if (report.uncovered_truncated)
            os << " ... (+" << report.uncovered_total - report.uncovered.size() << " more)";
        os << "\n";
    }
    return os.str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"De Bruijn covering codes: construct, verify, analyze, search"};
    app.require_subcommand(1);

    SpaceArgs space_args;
    int workers = 1;
    std::string format = "json";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        add_space_options(cmd, space_args);
        cmd->add_option("--workers", workers, "Worker thread cap");
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out_path, "Write primary output to a file");
    };

    // verify
    std::string code_inline, code_file;
    std::uint64_t max_uncovered = 65536;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Check that a string covers the space");
    add_common(verify_cmd);
    verify_cmd->add_option("--code", code_inline, "Inline code (digits or comma-separated)");
    verify_cmd->add_option("--code-file", code_file, "File holding the code text");
    verify_cmd->add_option("--max-uncovered", max_uncovered,
                           "Cap on uncovered ranks listed in the report");

    // construct
    double C = 4.0;
    std::optional<std::uint64_t> seed;
    int max_attempts = 16;
    double patch_slack = 2.0;
    bool real_payload = false;
    std::string code_out;
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "Randomized construction with patching");
    add_common(construct_cmd);
    construct_cmd->add_option("--C", C, "Length multiplier (length target C|Pi|ln n/K)");
    construct_cmd->add_option("--seed", seed, "64-bit seed (generated and printed if absent)");
    construct_cmd->add_option("--max-attempts", max_attempts, "Retry budget");
    construct_cmd->add_option("--patch-slack", patch_slack,
                              "Accept censuses up to slack*ceil(|Pi|/n)");
    construct_cmd->add_flag("--real-payload", real_payload,
                            "Permutation mode: sample i.i.d. reals instead of a permutation");
    construct_cmd->add_option("--code-out", code_out, "Also write the bare code text here");

    // bounds
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Exact and asymptotic length bounds");
    add_common(bounds_cmd);
    bounds_cmd->add_option("--C", C, "Length multiplier for the upper target");

    // overlap
    std::uint64_t samples = 0;
    bool exhaustive = false;
    std::optional<std::uint64_t> janson_m;
    CLI::App* overlap_cmd =
        app.add_subcommand("overlap", "Window-ball overlap statistics E(T_k)");
    add_common(overlap_cmd);
    overlap_cmd->add_option("--samples", samples, "Monte Carlo sample count");
    overlap_cmd->add_flag("--exhaustive", exhaustive, "Enumerate every string exactly");
    overlap_cmd->add_option("--seed", seed, "Sampling seed (generated and printed if absent)");
    overlap_cmd->add_option("--janson-M", janson_m,
                            "Also evaluate the probability bound for this string length");

    // search
    std::optional<std::uint64_t> m_max;
    std::optional<int> symbol_budget;
    bool no_rotation = false, no_relabel = false, no_prune = false;
    CLI::App* search_cmd =
        app.add_subcommand("search", "Exhaustive minimal covering length");
    add_common(search_cmd);
    search_cmd->add_option("--M-max", m_max, "Largest length to try (default 16/10)");
    search_cmd->add_option("--symbol-budget", symbol_budget,
                           "Permutation mode: restrict to this many distinct values");
    search_cmd->add_flag("--no-rotation-canon", no_rotation, "Disable rotation reduction");
    search_cmd->add_flag("--no-relabel-canon", no_relabel, "Disable relabeling reduction");
    search_cmd->add_flag("--no-coverage-prune", no_prune, "Disable coverage-bound pruning");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (format == "csv" && !*overlap_cmd)
            throw std::invalid_argument("csv format applies to the overlap command");
        const Limits limits = limits_from_env();
        const SpaceDescriptor space = space_args.make();

        if (*verify_cmd) {
            const std::string text = read_code_text(code_inline, code_file);
            if (text.empty())
                throw std::invalid_argument("verify needs --code or --code-file");
            const CyclicString code = parse_cyclic_string(text);
            VerifyOptions options;
            options.workers = workers;
            options.uncovered_limit = max_uncovered;
            options.limits = limits;
            const CoverageReport report = verify(code, space, options);
            if (format == "text")
                emit(render_text_report(report), out_path, out);
            else
                emit(to_json(report).dump(2) + "\n", out_path, out);
            return report.is_covering ? 0 : 1;
        }

        if (*construct_cmd) {
            if (!seed) {
                seed = fresh_seed();
                err << "seed: " << *seed << "\n";
            }
            ConstructOptions options;
            options.C = C;
            options.max_attempts = max_attempts;
            options.patch_slack = patch_slack;
            options.real_payload = real_payload;
            options.workers = workers;
            options.limits = limits;
            const ConstructionResult result = construct(space, *seed, options);
            if (!code_out.empty())
                emit(format_cyclic_string(result.code) + "\n", code_out, out);
            if (format == "text") {
                std::ostringstream os;
                os << "base length: " << result.base_length << "\n"
                   << "patched classes: " << result.patched_classes << "\n"
                   << "final length: " << result.code.length() << "\n"
                   << "length ratio: " << result.length_ratio << "\n"
                   << "attempts: " << result.attempts << "\n"
                   << "seed: " << result.seed << "\n"
                   << "code: " << format_cyclic_string(result.code) << "\n";
                emit(os.str(), out_path, out);
            } else {
                emit(to_json(result).dump(2) + "\n", out_path, out);
            }
            return 0;
        }

        if (*bounds_cmd) {
            const BoundsReport report = bounds(space, C);
            if (format == "text") {
                std::ostringstream os;
                os << "classes: " << report.class_count.str() << "\n"
                   << "ball size: " << report.ball_size.str() << "\n"
                   << "lower bound: " << report.lower.str() << "\n"
                   << "upper target: " << report.upper_target << "\n";
                emit(os.str(), out_path, out);
            } else {
                emit(to_json(report).dump(2) + "\n", out_path, out);
            }
            return 0;
        }

        if (*overlap_cmd) {
            if (exhaustive && samples > 0)
                throw std::invalid_argument("choose either --exhaustive or --samples");
            if (!exhaustive && samples == 0)
                throw std::invalid_argument("overlap needs --exhaustive or --samples N");
            if (!exhaustive && !seed) {
                seed = fresh_seed();
                err << "seed: " << *seed << "\n";
            }
            const OverlapStats stats =
                exhaustive ? hypothesis_ratio_exhaustive(space, workers, limits)
                           : hypothesis_ratio(space, samples, *seed, workers, limits);
            if (format == "csv") {
                std::string csv = overlap_csv_header();
                append_overlap_csv(csv, stats);
                emit(csv, out_path, out);
            } else if (format == "text") {
                std::ostringstream os;
                for (const auto& e : stats.per_k)
                    os << "E(T_" << e.k << ") = " << e.estimate << " (se " << e.std_error
                       << ", samples " << e.samples << ")\n";
                os << "sum = " << stats.sum << ", K = " << stats.ball_size
                   << ", ratio = " << stats.ratio << "\n";
                emit(os.str(), out_path, out);
            } else {
                nlohmann::json j = to_json(stats, seed.value_or(0), !exhaustive);
                if (janson_m) {
                    const JansonInputs inputs =
                        exhaustive
                            ? janson_inputs_exhaustive(space, *janson_m, workers, limits)
                            : janson_inputs_estimate(space, *janson_m, samples, *seed,
                                                     workers, limits);
                    j["janson"] = to_json(inputs);
                    j["janson"]["M"] = *janson_m;
                }
                emit(j.dump(2) + "\n", out_path, out);
            }
            return 0;
        }

        if (*search_cmd) {
            SearchOptions options;
            options.M_max = m_max;
            options.symbol_budget = symbol_budget;
            options.rotation_canonical = !no_rotation;
            options.relabel_canonical = !no_relabel;
            options.coverage_prune = !no_prune;
            options.workers = workers;
            options.limits = limits;
            const SearchResult result = optimal_length(space, options);
            if (format == "text") {
                std::ostringstream os;
                if (result.found)
                    os << "optimal length: " << result.M_opt << "\n"
                       << "witness: " << format_cyclic_string(*result.witness) << "\n";
                else
                    os << "no covering string of length <= " << result.M_max << "\n";
                os << "nodes explored: " << result.nodes_explored << "\n";
                emit(os.str(), out_path, out);
            } else {
                emit(to_json(result).dump(2) + "\n", out_path, out);
            }
            return 0;
        }

        err << "error: no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace dbcc::cli
