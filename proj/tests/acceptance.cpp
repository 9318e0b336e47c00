// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. argv[1] must point at the dbcc CLI binary (used by the
// determinism criterion).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "dbcc/analysis.hpp"
#include "dbcc/construct.hpp"
#include "dbcc/coverage.hpp"
#include "dbcc/rng.hpp"
#include "dbcc/search.hpp"

using namespace dbcc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds) {
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_process(const std::string& command, int& exit_code) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return output;
    }
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    exit_code = pclose(pipe);
    return output;
}

// 1. The six-symbol example string is a radius-1 covering code for the
//    order types on four symbols.
void criterion_example_string() {
    const auto start = Clock::now();
    const CyclicString s(std::vector<std::int64_t>{1, 3, 4, 5, 2, 6});
    const auto verdict = verify(s, SpaceDescriptor::permutation(4, 1));
    const double secs = elapsed(start);
    report(1, verdict.is_covering && secs < 1.0,
           "verify(134526, permutations n=4, R=1) is covering in under 1 s", secs);
}

// 2. Exact ball sizes equal brute-force enumeration across the desk-scale
//    grid of spaces.
void criterion_ball_oracle() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    Rng rng(12345);

    auto check_space = [&](const SpaceDescriptor& space) {
        const std::uint64_t expected = ball_size_u64(space);
        const std::uint64_t classes = space.class_count_checked();
        // brute force #1: filter the whole space by distance
        std::uint64_t filter_count = 0;
        for (std::uint64_t y = 0; y < classes; ++y)
            if (class_distance(space, 0, y) <= space.R)
                ++filter_count;
        // brute force #2: the enumerator, at a random center
        const std::uint64_t center = rng.bounded(classes);
        const std::uint64_t enumerated = ball_enumerate(space, center).size();
        if (filter_count != expected || enumerated != expected) {
            ok = false;
            if (detail.empty())
                detail = " first mismatch: kind=" +
                         std::string(space.is_hamming() ? "hamming" : "perm") +
                         " n=" + std::to_string(space.n) + " R=" + std::to_string(space.R);
        }
    };

    for (int n = 2; n <= 7; ++n)
        for (int R = 0; R <= n - 1; ++R)
            check_space(SpaceDescriptor::permutation(n, R));
    for (int q : {2, 3})
        for (int n = 1; n <= 10; ++n)
            for (int R = 0; R <= 3; ++R)
                check_space(SpaceDescriptor::hamming(q, n, R));

    const double secs = elapsed(start);
    report(2, ok && secs < 60.0,
           "exact ball sizes match brute force (perm n<=7, hamming q=2,3 n<=10 R<=3)" + detail,
           secs);
}

// 3. The radius-1 permutation ball size is 1 + n(n-1)/2 exactly, and close
//    to n^2/2 once n is large.
void criterion_stirling() {
    const auto start = Clock::now();
    bool ok = true;
    for (int n = 2; n <= 200; ++n) {
        const BigInt exact = ball_size_exact(SpaceDescriptor::permutation(n, 1));
        if (exact != 1 + BigInt(n) * (n - 1) / 2)
            ok = false;
        if (n >= 40) {
            const double ratio =
                exact.convert_to<double>() / (static_cast<double>(n) * n / 2.0);
            if (ratio < 0.95 || ratio > 1.05)
                ok = false;
        }
    }
    report(3, ok, "radius-1 permutation ball size is 1 + n(n-1)/2 for n <= 200, near n^2/2",
           elapsed(start));
}

// 4. Counting lower bound: exhaustive optima on the 2-bit spaces, and no
//    produced code is ever shorter than ceil(|Pi|/K).
void criterion_lower_bound() {
    const auto start = Clock::now();
    bool ok = true;

    const auto r0 = optimal_length(SpaceDescriptor::hamming(2, 2, 0));
    ok = ok && r0.found && r0.M_opt == 4;
    const auto r1 = optimal_length(SpaceDescriptor::hamming(2, 2, 1));
    ok = ok && r1.found && r1.M_opt == 2;

    auto lower_of = [](const SpaceDescriptor& space) {
        return ceil_div(space.class_count(), ball_size_exact(space));
    };
    ok = ok && BigInt(r0.M_opt) >= lower_of(SpaceDescriptor::hamming(2, 2, 0));
    ok = ok && BigInt(r1.M_opt) >= lower_of(SpaceDescriptor::hamming(2, 2, 1));

    for (const auto& space :
         {SpaceDescriptor::permutation(4, 1), SpaceDescriptor::hamming(2, 5, 1)}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            const auto built = construct(space, seed);
            ok = ok && built.report.is_covering &&
                 BigInt(built.code.length()) >= lower_of(space);
        }
        const auto searched = optimal_length(space);
        if (searched.found)
            ok = ok && BigInt(searched.M_opt) >= lower_of(space);
    }

    const double secs = elapsed(start);
    report(4, ok && secs < 10.0,
           "every produced code meets ceil(|Pi|/K); M_opt = 4 and 2 on the 2-bit spaces",
           secs);
}

// 5. Randomized construction across the desk-scale quartet: 20 seeds each,
//    always covering, median patch census within |Pi|/n, length within the
//    audit threshold.
void criterion_construction() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;

    const std::vector<SpaceDescriptor> quartet{
        SpaceDescriptor::permutation(5, 1), SpaceDescriptor::permutation(6, 1),
        SpaceDescriptor::hamming(2, 8, 1), SpaceDescriptor::hamming(2, 10, 2)};

    for (const auto& space : quartet) {
        const double classes = space.class_count().convert_to<double>();
        const double K = static_cast<double>(ball_size_u64(space));
        const double audit_limit = 10.0 * 4.0 * classes * std::log(space.n) / K;
        std::vector<double> patched;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto result = construct(space, seed);
            if (!result.report.is_covering)
                ok = false;
            if (static_cast<double>(result.code.length()) > audit_limit)
                ok = false;
            patched.push_back(static_cast<double>(result.patched_classes));
        }
        std::sort(patched.begin(), patched.end());
        const double median = (patched[9] + patched[10]) / 2.0;
        if (median > classes / space.n) {
            ok = false;
            detail += " median patch census too large at n=" + std::to_string(space.n);
        }
    }

    const double secs = elapsed(start);
    report(5, ok && secs < 600.0,
           "20-seed construction sweep: covering, median patching within |Pi|/n, "
           "length within 10*C*|Pi|*ln(n)/K" +
               detail,
           secs);
}

// 6. Overlap hypothesis: exhaustive ratios finite and decreasing in n;
//    Monte Carlo agrees within four standard errors.
void criterion_overlap() {
    const auto start = Clock::now();
    bool ok = true;

    auto family_decreasing = [&](auto make_space) {
        double prev = std::numeric_limits<double>::infinity();
        for (int n : {3, 4, 5}) {
            const SpaceDescriptor space = make_space(n);
            const auto stats = hypothesis_ratio_exhaustive(space);
            if (!std::isfinite(stats.ratio) || stats.ratio >= prev)
                ok = false;
            prev = stats.ratio;

            for (const auto& exact : stats.per_k) {
                const auto mc = overlap_expectation(space, exact.k, 20000, 97);
                if (mc.std_error == 0.0) {
                    if (mc.estimate != exact.estimate)
                        ok = false;
                } else if (std::abs(mc.estimate - exact.estimate) > 4 * mc.std_error) {
                    ok = false;
                }
            }
        }
    };
    family_decreasing([](int n) { return SpaceDescriptor::permutation(n, 1); });
    family_decreasing([](int n) { return SpaceDescriptor::hamming(2, n, 1); });

    report(6, ok,
           "exhaustive hypothesis ratios decrease in n; Monte Carlo within 4 standard errors",
           elapsed(start));
}

// 7. The probability-bound evaluator: frozen arithmetic examples and
//    monotonicity on random inputs.
void criterion_janson() {
    const auto start = Clock::now();
    bool ok = true;

    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };
    ok = ok && janson_bound({0, 0, 0}) == 1.0;
    ok = ok && close(janson_bound({8, 1, 0.1}), std::exp(-4.0));
    ok = ok && close(janson_bound({10, 100, 1}), std::exp(-0.125));

    Rng rng(2718);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        const double mu = rng.real01() * 20;
        const double Delta = rng.real01() * 50;
        const double delta = rng.real01() * 5;
        const double base = janson_bound({mu, Delta, delta});
        const double bump = 0.1 + rng.real01();
        if (janson_bound({mu + bump, Delta, delta}) > base + 1e-15)
            ok = false;
        if (janson_bound({mu, Delta + bump, delta}) < base - 1e-15)
            ok = false;
        if (janson_bound({mu, Delta, delta + bump}) < base - 1e-15)
            ok = false;
    }

    report(7, ok, "probability bound reproduces the arithmetic examples and is monotone",
           elapsed(start));
}

// 8. Seeded CLI runs are byte-identical across worker counts.
void criterion_determinism(const std::string& cli) {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;

    const std::vector<std::string> commands{
        " construct --space perm --n 5 --R 1 --seed 7",
        " construct --space hamming --q 2 --n 8 --R 1 --seed 9",
        " overlap --space hamming --q 2 --n 4 --R 1 --samples 20000 --seed 3",
        " verify --space perm --n 4 --R 1 --code 1,3,4,5,2,6",
        " search --space hamming --q 2 --n 3 --R 1",
    };
    for (const auto& cmd : commands) {
        int code1 = 0, code8 = 0;
        const std::string out1 = run_process(cli + cmd + " --workers 1 2>/dev/null", code1);
        const std::string out8 = run_process(cli + cmd + " --workers 8 2>/dev/null", code8);
        if (out1.empty() || out1 != out8 || code1 != code8) {
            ok = false;
            if (detail.empty())
                detail = " first mismatch:" + cmd;
        }
    }

    report(8, ok,
           "seeded CLI output is byte-identical with --workers 1 and --workers 8" + detail,
           elapsed(start));
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: dbcc_acceptance <path-to-dbcc-cli>\n");
        return 64;
    }

    criterion_example_string();
    criterion_ball_oracle();
    criterion_stirling();
    criterion_lower_bound();
    criterion_construction();
    criterion_overlap();
    criterion_janson();
    criterion_determinism(argv[1]);

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures;
}
