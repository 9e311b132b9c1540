#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "subcode/detail/bnb.hpp"
#include "subcode/multishot.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

enum class SearchMode { greedy_lex, clique_bnb };
enum class SeedOrder { canonical, seeded_shuffle };

struct SearchConfig {
    std::size_t n = 1;
    std::size_t d = 1;
    SearchMode mode = SearchMode::greedy_lex;
    std::uint64_t node_budget = 1000000;
    SeedOrder order = SeedOrder::canonical;
    std::uint64_t seed = 0;
};

struct SearchResult {
    MultishotCode code;
    bool optimal = false;  // true when the branch-and-bound ran to completion
    std::uint64_t nodes_explored = 0;
};

namespace detail {

// Tuple index <-> mixed-radix digits over the space, coordinate 0 most
// significant, so index order equals the canonical tuple order.
class TupleUniverse {
public:
    TupleUniverse(const ProjectiveSpace& space, std::size_t n, std::size_t budget)
        : space_(space), n_(n) {
        BigInt total = boost::multiprecision::pow(BigInt(space.size()), static_cast<unsigned>(n));
        if (total > BigInt(budget)) throw std::length_error("search: tuple space exceeds budget");
        count_ = total.convert_to<std::size_t>();
        const std::size_t p = space.size();
        dist_.assign(p * p, 0);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j) {
                int d = subspace_distance(space.at(i), space.at(j));
                dist_[i * p + j] = static_cast<int8_t>(d);
                dist_[j * p + i] = static_cast<int8_t>(d);
            }
    }

    std::size_t count() const { return count_; }

    int distance(std::size_t a, std::size_t b) const {
        const std::size_t p = space_.size();
        int total = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            std::size_t da = a % p, db = b % p;
            total += dist_[da * p + db];
            a /= p;
            b /= p;
        }
        return total;
    }

    SubspaceTuple tuple_at(std::size_t index) const {
        const std::size_t p = space_.size();
        std::vector<Subspace> shots(n_, space_.at(0));
        for (std::size_t i = n_; i-- > 0;) {
            shots[i] = space_.at(index % p);
            index /= p;
        }
        return SubspaceTuple(std::move(shots));
    }

    std::size_t index_of(const SubspaceTuple& t) const {
        std::size_t idx = 0;
        for (const Subspace& v : t.shots) idx = idx * space_.size() + space_.index_of(v);
        return idx;
    }

private:
    const ProjectiveSpace& space_;
    std::size_t n_;
    std::size_t count_;
    std::vector<int8_t> dist_;
};

}  // namespace detail

/// Greedy scan: accept each tuple whose distance to everything accepted so
/// far is at least d. The canonical-order result is deterministic; a seeded
/// shuffle gives randomized restarts.
inline MultishotCode greedy_code(const ProjectiveSpace& space, const SearchConfig& config) {
    detail::TupleUniverse universe(space, config.n, 1000000);
    std::vector<std::size_t> order(universe.count());
    std::iota(order.begin(), order.end(), 0);
    if (config.order == SeedOrder::seeded_shuffle) {
        std::mt19937_64 rng(config.seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<std::size_t> accepted;
    for (std::size_t idx : order) {
        bool ok = true;
        for (std::size_t a : accepted)
            if (universe.distance(a, idx) < static_cast<int>(config.d)) {
                ok = false;
                break;
            }
        if (ok) accepted.push_back(idx);
    }
    std::vector<SubspaceTuple> words;
    words.reserve(accepted.size());
    for (std::size_t idx : accepted) words.push_back(universe.tuple_at(idx));
    return MultishotCode(std::move(words));
}

/// Maximum-code search by branch-and-bound on the conflict structure
/// (tuples conflict when their distance is below d). Warm-started from a
/// witness code when given, otherwise from the canonical greedy code. A
/// completed search certifies the optimum; on budget exhaustion the best
/// code found is returned with optimal = false.
inline SearchResult max_code_bnb(const ProjectiveSpace& space, const SearchConfig& config,
                                 const std::optional<MultishotCode>& warm_start = std::nullopt) {
    detail::TupleUniverse universe(space, config.n, 100000);
    std::vector<std::size_t> initial;
    if (warm_start) {
        if (warm_start->length() != config.n || warm_start->field() != space.field() ||
            warm_start->ambient_dim() != space.ambient_dim())
            throw std::invalid_argument("max_code_bnb: warm start has mismatched parameters");
        if (warm_start->size() > 1 &&
            warm_start->minimum_distance() < static_cast<int>(config.d))
            throw std::invalid_argument("max_code_bnb: warm start violates the distance");
        for (const SubspaceTuple& w : warm_start->codewords())
            initial.push_back(universe.index_of(w));
    } else {
        SearchConfig greedy_cfg = config;
        greedy_cfg.order = SeedOrder::canonical;
        MultishotCode seed = greedy_code(space, greedy_cfg);
        for (const SubspaceTuple& w : seed.codewords()) initial.push_back(universe.index_of(w));
    }
    auto compatible = [&universe, &config](std::size_t a, std::size_t b) {
        return universe.distance(a, b) >= static_cast<int>(config.d);
    };
    detail::MaxCompatibleSearch search(universe.count(), compatible, config.node_budget);
    detail::BnbOutcome outcome = search.run(std::move(initial));
    std::vector<SubspaceTuple> words;
    words.reserve(outcome.best.size());
    for (std::size_t idx : outcome.best) words.push_back(universe.tuple_at(idx));
    return SearchResult{MultishotCode(std::move(words)), outcome.optimal, outcome.nodes};
}

}  // namespace subcode
