#include "dbcc/search.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "dbcc/parallel.hpp"

namespace dbcc {

namespace {

struct BranchResult {
    std::optional<std::vector<std::int64_t>> witness; // lex-min within the branch
    std::uint64_t nodes = 0;
};

// Candidate symbols for the next position given the assigned prefix, in
// ascending order. Encodes the canonicality rules:
//   - Hamming relabel canonical: next symbol <= max used so far + 1;
//   - permutation (no budget): each value of {1..M} used once, and a
//     rotation-minimal permutation string must start with 1;
//   - budgeted permutation mode: any of {1..budget} (leaf checks handle
//     rotation and compaction).
std::vector<std::int64_t> candidate_values(const SpaceDescriptor& space, std::uint64_t M,
                                           const SearchOptions& options,
                                           std::span<const std::int64_t> prefix) {
    std::vector<std::int64_t> vals;
    if (space.is_hamming()) {
        std::int64_t hi = space.q - 1;
        if (options.relabel_canonical) {
            std::int64_t max_used = -1;
            for (std::int64_t v : prefix)
                max_used = std::max(max_used, v);
            hi = std::min<std::int64_t>(hi, max_used + 1);
        }
        for (std::int64_t v = 0; v <= hi; ++v)
            vals.push_back(v);
    } else if (options.symbol_budget) {
        for (std::int64_t v = 1; v <= *options.symbol_budget; ++v)
            vals.push_back(v);
    } else {
        for (std::int64_t v = 1; v <= static_cast<std::int64_t>(M); ++v) {
            if (prefix.empty() && options.rotation_canonical && v != 1)
                break;
            if (std::find(prefix.begin(), prefix.end(), v) == prefix.end())
                vals.push_back(v);
        }
    }
    return vals;
}

// Depth-first enumeration of candidate strings of one fixed length M,
// marking window balls incrementally and undoing on backtrack. Invariant on
// entering depth d: exactly the windows fitting inside positions [0, d)
// without wrapping are marked. Each branch (fixed prefix) runs its own
// engine, so branches are independent and the merged result cannot depend
// on worker scheduling.
class SearchEngine {
public:
    SearchEngine(const SpaceDescriptor& space, std::uint64_t M, std::uint64_t class_count,
                 std::uint64_t ball, const SearchOptions& options)
        : space_(space), options_(options), n_(static_cast<std::size_t>(space.n)), m_(M),
          class_count_(class_count), ball_(ball), assignment_(M, 0),
          bitmap_((class_count + 63) / 64, 0), window_(n_) {}

    BranchResult run(const std::vector<std::int64_t>& prefix) {
        std::copy(prefix.begin(), prefix.end(), assignment_.begin());
        std::size_t premarked = 0;
        bool pruned = false;
        for (std::size_t i = 0; i + n_ <= prefix.size(); ++i) {
            mark_window(i);
            ++premarked;
            if (options_.coverage_prune && !may_still_cover()) {
                pruned = true;
                break;
            }
        }
        if (!pruned)
            descend(prefix.size());
        unmark(premarked);
        return std::move(result_);
    }

    static std::vector<std::vector<std::int64_t>> prefixes(const SpaceDescriptor& space,
                                                           std::uint64_t M,
                                                           const SearchOptions& options) {
        std::vector<std::vector<std::int64_t>> out;
        for (std::int64_t first : candidate_values(space, M, options, {})) {
            if (M == 1) {
                out.push_back({first});
                continue;
            }
            const std::int64_t head[] = {first};
            for (std::int64_t second : candidate_values(space, M, options, head))
                out.push_back({first, second});
        }
        return out;
    }

private:
    void descend(std::size_t depth) {
        if (result_.witness)
            return;
        if (++result_.nodes > options_.limits.max_search_nodes)
            throw ResourceError("search node budget exceeded");
        if (depth == m_) {
            finish_leaf();
            return;
        }
        for (std::int64_t v :
             candidate_values(space_, m_, options_,
                              std::span<const std::int64_t>(assignment_.data(), depth))) {
            assignment_[depth] = v;
            std::size_t marked = 0;
            bool pruned = false;
            if (depth + 1 >= n_) { // window depth+1-n is now fully assigned
                mark_window(depth + 1 - n_);
                marked = 1;
                if (options_.coverage_prune && !may_still_cover())
                    pruned = true;
            }
            if (!pruned)
                descend(depth + 1);
            unmark(marked);
            if (result_.witness)
                break; // ascending candidates: the first hit is the branch lex-min
        }
    }

    void finish_leaf() {
        if (!passes_leaf_canonicality())
            return;
        // wrap-around windows (all M of them when M < n)
        const std::size_t first_wrap = m_ >= n_ ? m_ - n_ + 1 : 0;
        std::size_t marked = 0;
        bool pruned = false;
        for (std::size_t i = first_wrap; i < m_; ++i) {
            mark_window(i);
            ++marked;
            if (options_.coverage_prune && !may_still_cover()) {
                pruned = true;
                break;
            }
        }
        if (!pruned && covered_ == class_count_)
            result_.witness = assignment_;
        unmark(marked);
    }

    bool passes_leaf_canonicality() const {
        if (!space_.is_hamming() && options_.symbol_budget && options_.relabel_canonical) {
            // used values must be exactly {1..t}
            std::vector<bool> used(static_cast<std::size_t>(*options_.symbol_budget) + 1, false);
            std::int64_t max_used = 0;
            std::int64_t distinct = 0;
            for (std::int64_t v : assignment_) {
                if (!used[static_cast<std::size_t>(v)]) {
                    used[static_cast<std::size_t>(v)] = true;
                    ++distinct;
                }
                max_used = std::max(max_used, v);
            }
            if (max_used != distinct)
                return false;
        }
        if (options_.rotation_canonical && (space_.is_hamming() || options_.symbol_budget)) {
            for (std::size_t t = 1; t < m_; ++t) {
                for (std::size_t i = 0; i < m_; ++i) {
                    const std::int64_t rot = assignment_[(i + t) % m_];
                    const std::int64_t ref = assignment_[i];
                    if (rot != ref) {
                        if (rot < ref)
                            return false;
                        break;
                    }
                }
            }
        }
        return true;
    }

    bool may_still_cover() const {
        const std::uint64_t remaining = m_ - undo_sizes_.size();
        return covered_ + ball_ * remaining >= class_count_;
    }

    void mark_window(std::size_t i) {
        undo_sizes_.push_back(undo_bits_.size());
        const auto cls = classify_window(i);
        if (!cls)
            return; // tied window covers nothing
        for (std::uint64_t member : ball_ranks(*cls)) {
            auto& word = bitmap_[member >> 6];
            const std::uint64_t bit = 1ull << (member & 63);
            if (!(word & bit)) {
                word |= bit;
                ++covered_;
                undo_bits_.push_back(member);
            }
        }
    }

    void unmark(std::size_t windows) {
        for (std::size_t w = 0; w < windows; ++w) {
            const std::size_t down_to = undo_sizes_.back();
            undo_sizes_.pop_back();
            while (undo_bits_.size() > down_to) {
                const std::uint64_t member = undo_bits_.back();
                undo_bits_.pop_back();
                bitmap_[member >> 6] &= ~(1ull << (member & 63));
                --covered_;
            }
        }
    }

    std::optional<std::uint64_t> classify_window(std::size_t i) {
        for (std::size_t j = 0; j < n_; ++j)
            window_[j] = assignment_[(i + j) % m_];
        if (space_.is_hamming()) {
            std::uint64_t idx = 0;
            for (std::int64_t s : window_)
                idx = idx * static_cast<std::uint64_t>(space_.q) + static_cast<std::uint64_t>(s);
            return idx;
        }
        return order_type_rank(std::span<const std::int64_t>(window_), scratch_);
    }

    const std::vector<std::uint64_t>& ball_ranks(std::uint64_t rank) {
        auto it = ball_cache_.find(rank);
        if (it == ball_cache_.end())
            it = ball_cache_.emplace(rank, ball_enumerate(space_, rank, options_.limits)).first;
        return it->second;
    }

    SpaceDescriptor space_;
    SearchOptions options_;
    std::size_t n_;
    std::size_t m_;
    std::uint64_t class_count_;
    std::uint64_t ball_;
    std::vector<std::int64_t> assignment_;
    std::vector<std::uint64_t> bitmap_;
    std::uint64_t covered_ = 0;
    std::vector<std::size_t> undo_sizes_;
    std::vector<std::uint64_t> undo_bits_;
    std::vector<std::int64_t> window_;
    std::vector<int> scratch_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> ball_cache_;
    BranchResult result_;
};

} // namespace

SearchResult optimal_length(const SpaceDescriptor& space, const SearchOptions& options) {
    if (options.symbol_budget) {
        if (space.is_hamming())
            throw std::invalid_argument(
                "symbol_budget applies to permutation mode; q is the Hamming alphabet");
        if (*options.symbol_budget < 1)
            throw std::invalid_argument("symbol_budget must be >= 1");
    }
    const std::uint64_t class_count = space.class_count_checked(options.limits);
    const std::uint64_t ball = ball_size_u64(space);
    const std::uint64_t default_max = space.is_hamming() ? 16 : 10;
    const std::uint64_t m_max = options.M_max.value_or(default_max);
    if (m_max < 1)
        throw std::invalid_argument("M_max must be >= 1");

    SearchResult result;
    result.space = space;
    result.M_max = m_max;
    result.symbol_budget = options.symbol_budget;

    for (std::uint64_t m = 1; m <= m_max; ++m) {
        // counting bound: m windows cannot cover more than m*K classes
        if (options.coverage_prune && ball * m < class_count)
            continue;
        const auto prefixes = SearchEngine::prefixes(space, m, options);
        std::vector<BranchResult> branch(prefixes.size());
        parallel_for(prefixes.size(), options.workers, [&](std::uint64_t b) {
            SearchEngine engine(space, m, class_count, ball, options);
            branch[b] = engine.run(prefixes[b]);
        });
        std::optional<std::vector<std::int64_t>> best;
        for (auto& br : branch) {
            result.nodes_explored += br.nodes;
            if (br.witness && (!best || *br.witness < *best))
                best = std::move(br.witness);
        }
        if (best) {
            result.found = true;
            result.M_opt = m;
            result.witness = CyclicString(std::move(*best));
            return result;
        }
    }
    return result;
}

} // namespace dbcc
