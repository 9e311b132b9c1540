#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace subcode::detail {

struct BnbOutcome {
    std::vector<std::size_t> best;  // largest pairwise-compatible set found
    bool optimal = false;           // true when the search ran to completion
    std::uint64_t nodes = 0;
};

/// Branch-and-bound for a maximum pairwise-compatible subset of {0..count-1}
/// (a maximum clique of the compatibility relation). Greedy sequential
/// coloring supplies the per-node upper bound; vertices are processed in
/// index order so the result is deterministic. Stops early when `ceiling`
/// is reached or the node budget runs out (best-so-far is then returned
/// with optimal = false).
class MaxCompatibleSearch {
public:
    MaxCompatibleSearch(std::size_t count, std::function<bool(std::size_t, std::size_t)> compatible,
                        std::uint64_t node_budget, std::size_t ceiling = static_cast<std::size_t>(-1))
        : count_(count), compatible_(std::move(compatible)), budget_(node_budget),
          ceiling_(ceiling) {}

    BnbOutcome run(std::vector<std::size_t> warm_start = {}) {
        best_ = std::move(warm_start);
        aborted_ = false;
        nodes_ = 0;
        std::vector<std::size_t> candidates(count_);
        for (std::size_t i = 0; i < count_; ++i) candidates[i] = i;
        std::vector<std::size_t> current;
        expand(current, candidates);
        return BnbOutcome{best_, !aborted_, nodes_};
    }

private:
    void expand(std::vector<std::size_t>& current, const std::vector<std::size_t>& candidates) {
        if (aborted_ || best_.size() >= ceiling_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (current.size() > best_.size()) best_ = current;
        if (candidates.empty()) return;

        // Greedy coloring: vertices in one class are pairwise incompatible,
        // so a compatible set takes at most one vertex per class.
        std::vector<std::vector<std::size_t>> classes;
        std::vector<std::size_t> color(candidates.size());
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            std::size_t v = candidates[idx];
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool fits = true;
                for (std::size_t u : classes[c])
                    if (compatible_(u, v)) {
                        fits = false;
                        break;
                    }
                if (fits) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            color[idx] = c;
        }
        std::vector<std::size_t> order(candidates.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });

        for (std::size_t pos = order.size(); pos-- > 0;) {
            if (aborted_ || best_.size() >= ceiling_) return;
            std::size_t idx = order[pos];
            if (current.size() + color[idx] + 1 <= best_.size()) return;
            std::size_t v = candidates[idx];
            std::vector<std::size_t> next;
            for (std::size_t p2 = 0; p2 < pos; ++p2) {
                std::size_t u = candidates[order[p2]];
                if (compatible_(u, v)) next.push_back(u);
            }
            current.push_back(v);
            expand(current, next);
            current.pop_back();
        }
    }

    std::size_t count_;
    std::function<bool(std::size_t, std::size_t)> compatible_;
    std::uint64_t budget_;
    std::size_t ceiling_;
    std::vector<std::size_t> best_;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
};

}  // namespace subcode::detail
