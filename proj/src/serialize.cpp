#include "dbcc/serialize.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace dbcc {

namespace {

nlohmann::json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
        return v.convert_to<std::uint64_t>();
    return v.str();
}

nlohmann::json double_to_json(double v) {
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

} // namespace

nlohmann::json to_json(const SpaceDescriptor& space) {
    nlohmann::json j{{"kind", space.is_hamming() ? "hamming" : "permutation"},
                     {"n", space.n},
                     {"R", space.R}};
    if (space.is_hamming())
        j["q"] = space.q;
    return j;
}

nlohmann::json to_json(const CoverageReport& report) {
    return nlohmann::json{{"space", to_json(report.space)},
                          {"length", report.length},
                          {"covered_count", report.covered_count},
                          {"uncovered_total", report.uncovered_total},
                          {"uncovered", report.uncovered},
                          {"uncovered_truncated", report.uncovered_truncated},
                          {"is_covering", report.is_covering}};
}

nlohmann::json to_json(const ConstructionResult& result) {
    return nlohmann::json{{"space", to_json(result.space)},
                          {"C", result.C},
                          {"seed", result.seed},
                          {"attempts", result.attempts},
                          {"base_length", result.base_length},
                          {"patched_classes", result.patched_classes},
                          {"final_length", result.code.length()},
                          {"length_ratio", double_to_json(result.length_ratio)},
                          {"code", format_cyclic_string(result.code)},
                          {"report", to_json(result.report)}};
}

nlohmann::json to_json(const BoundsReport& report) {
    return nlohmann::json{{"space", to_json(report.space)},
                          {"C", report.C},
                          {"class_count", big_to_json(report.class_count)},
                          {"ball_size", big_to_json(report.ball_size)},
                          {"lower", big_to_json(report.lower)},
                          {"upper_target", double_to_json(report.upper_target)},
                          {"asymptotic_lower", double_to_json(report.asymptotic_lower)},
                          {"asymptotic_upper", double_to_json(report.asymptotic_upper)}};
}

nlohmann::json to_json(const OverlapStats& stats, std::uint64_t seed, bool sampled) {
    nlohmann::json per_k = nlohmann::json::array();
    for (const auto& e : stats.per_k)
        per_k.push_back(nlohmann::json{{"k", e.k},
                                       {"estimate", e.estimate},
                                       {"std_error", e.std_error},
                                       {"samples", e.samples}});
    nlohmann::json j{{"space", to_json(stats.space)},
                     {"mode", sampled ? "sample" : "exhaustive"},
                     {"per_k", per_k},
                     {"sum", stats.sum},
                     {"ball_size", stats.ball_size},
                     {"ratio", stats.ratio}};
    if (sampled)
        j["seed"] = seed;
    return j;
}

nlohmann::json to_json(const JansonInputs& inputs) {
    return nlohmann::json{{"mu", inputs.mu},
                          {"Delta", inputs.Delta},
                          {"delta", inputs.delta},
                          {"bound", janson_bound(inputs)}};
}

nlohmann::json to_json(const SearchResult& result) {
    nlohmann::json j{{"space", to_json(result.space)},
                     {"M_max", result.M_max},
                     {"found", result.found},
                     {"nodes_explored", result.nodes_explored}};
    j["M_opt"] = result.found ? nlohmann::json(result.M_opt) : nlohmann::json(nullptr);
    j["witness"] = result.witness ? nlohmann::json(format_cyclic_string(*result.witness))
                                  : nlohmann::json(nullptr);
    j["symbol_budget"] =
        result.symbol_budget ? nlohmann::json(*result.symbol_budget) : nlohmann::json(nullptr);
    return j;
}

std::string overlap_csv_header() {
    return "kind,q,n,R,k,estimate,std_error,samples,mode\n";
}

void append_overlap_csv(std::string& out, const OverlapStats& stats) {
    const SpaceDescriptor& s = stats.space;
    for (const auto& e : stats.per_k) {
        out += s.is_hamming() ? "hamming" : "permutation";
        out += ',';
        out += std::to_string(s.is_hamming() ? s.q : 0);
        out += ',';
        out += std::to_string(s.n);
        out += ',';
        out += std::to_string(s.R);
        out += ',';
        out += std::to_string(e.k);
        out += ',';
        out += format_double(e.estimate);
        out += ',';
        out += format_double(e.std_error);
        out += ',';
        out += std::to_string(e.samples);
        out += ',';
        out += e.exhaustive ? "exhaustive" : "sample";
        out += '\n';
    }
}

} // namespace dbcc
