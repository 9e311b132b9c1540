#pragma once

#include <cstddef>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "subcode/multishot.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

/// An adversarial error budget: per-shot error weights for one transmission.
struct ErrorEvent {
    std::vector<int> per_shot_weights;

    int total_weight() const {
        return std::accumulate(per_shot_weights.begin(), per_shot_weights.end(), 0);
    }
};

/// All subspaces at distance exactly w from v.
inline std::vector<Subspace> distance_shell(const ProjectiveSpace& space, const Subspace& v,
                                            int w) {
    std::vector<Subspace> shell;
    for (const Subspace& u : space.elements())
        if (subspace_distance(v, u) == w) shell.push_back(u);
    return shell;
}

/// A uniformly chosen subspace at distance exactly w from v, sampled by
/// enumerating the shell. Throws when the shell is empty.
inline Subspace perturb(const ProjectiveSpace& space, const Subspace& v, int w,
                        std::mt19937_64& rng) {
    if (w < 0 || w > static_cast<int>(space.ambient_dim()))
        throw std::invalid_argument("perturb: weight out of range");
    std::vector<Subspace> shell = distance_shell(space, v, w);
    if (shell.empty()) throw std::invalid_argument("perturb: empty shell at this weight");
    std::uniform_int_distribution<std::size_t> pick(0, shell.size() - 1);
    return shell[pick(rng)];
}

/// Sends one codeword through the channel under the given error event:
/// coordinate i is replaced by a random subspace at distance exactly w_i.
inline SubspaceTuple transmit(const ProjectiveSpace& space, const MultishotCode& code,
                              const SubspaceTuple& codeword, const ErrorEvent& event,
                              std::mt19937_64& rng) {
    if (!code.contains(codeword)) throw std::invalid_argument("transmit: codeword not in code");
    if (event.per_shot_weights.size() != codeword.length())
        throw std::invalid_argument("transmit: event length mismatch");
    std::vector<Subspace> shots;
    shots.reserve(codeword.length());
    for (std::size_t i = 0; i < codeword.length(); ++i)
        shots.push_back(perturb(space, codeword.shots[i], event.per_shot_weights[i], rng));
    return SubspaceTuple(std::move(shots));
}

enum class DetectResult { clean, detected };

/// Error detection: the received tuple is clean iff it is a codeword.
inline DetectResult detect(const MultishotCode& code, const SubspaceTuple& received) {
    return code.contains(received) ? DetectResult::clean : DetectResult::detected;
}

struct DecodeResult {
    SubspaceTuple decoded;
    int distance = 0;
    bool ambiguous = false;  // minimum attained by more than one codeword
};

/// Minimum-distance decoding by exhaustive scan; ties are flagged and broken
/// toward the canonically first codeword.
inline DecodeResult decode_md(const MultishotCode& code, const SubspaceTuple& received) {
    const SubspaceTuple* best = nullptr;
    int best_dist = 0;
    bool tie = false;
    for (const SubspaceTuple& w : code.codewords()) {
        int d = extended_distance(w, received);
        if (!best || d < best_dist) {
            best = &w;
            best_dist = d;
            tie = false;
        } else if (d == best_dist) {
            tie = true;
        }
    }
    return DecodeResult{*best, best_dist, tie};
}

/// One counterexample from an exhaustive detection/correction sweep.
struct SweepFailure {
    SubspaceTuple codeword;
    SubspaceTuple received;
    int weight = 0;
};

struct SweepReport {
    std::size_t events_tested = 0;
    std::size_t passed = 0;
    std::vector<SweepFailure> failures;

    bool ok() const { return failures.empty(); }
};

namespace detail {

// Enumerates every received tuple at total distance in [1, max_weight] from
// the given codeword (all weight compositions, full shell products).
template <typename Fn>
void for_each_perturbation(const ProjectiveSpace& space, const SubspaceTuple& codeword,
                           int max_weight, Fn&& fn) {
    const std::size_t n = codeword.length();
    const int m = static_cast<int>(space.ambient_dim());
    std::vector<int> weights(n, 0);

    std::vector<std::vector<Subspace>> shells(n);
    auto recurse_cells = [&](auto&& self, std::size_t i, std::vector<Subspace>& shots) -> void {
        if (i == n) {
            fn(SubspaceTuple(shots), std::accumulate(weights.begin(), weights.end(), 0));
            return;
        }
        for (const Subspace& u : shells[i]) {
            shots.push_back(u);
            self(self, i + 1, shots);
            shots.pop_back();
        }
    };
    auto recurse_weights = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == n) {
            if (remaining == max_weight) return;  // total weight 0: not an error
            for (std::size_t t = 0; t < n; ++t)
                shells[t] = distance_shell(space, codeword.shots[t], weights[t]);
            std::vector<Subspace> shots;
            recurse_cells(recurse_cells, 0, shots);
            return;
        }
        for (int w = 0; w <= std::min(m, remaining); ++w) {
            weights[i] = w;
            self(self, i + 1, remaining - w);
        }
    };
    recurse_weights(recurse_weights, 0, max_weight);
}

}  // namespace detail

/// Exhaustive check that every perturbation of every codeword with total
/// weight in [1, max_weight] is flagged as detected.
inline SweepReport sweep_detect(const ProjectiveSpace& space, const MultishotCode& code,
                                int max_weight) {
    SweepReport report;
    for (const SubspaceTuple& cw : code.codewords())
        detail::for_each_perturbation(space, cw, max_weight,
                                      [&](const SubspaceTuple& received, int weight) {
                                          ++report.events_tested;
                                          if (detect(code, received) == DetectResult::detected)
                                              ++report.passed;
                                          else
                                              report.failures.push_back({cw, received, weight});
                                      });
    return report;
}

/// Exhaustive check that every perturbation of every codeword with total
/// weight in [1, max_weight] decodes back to the transmitted codeword
/// without ambiguity.
inline SweepReport sweep_correct(const ProjectiveSpace& space, const MultishotCode& code,
                                 int max_weight) {
    SweepReport report;
    for (const SubspaceTuple& cw : code.codewords())
        detail::for_each_perturbation(space, cw, max_weight,
                                      [&](const SubspaceTuple& received, int weight) {
                                          ++report.events_tested;
                                          DecodeResult r = decode_md(code, received);
                                          if (!r.ambiguous && r.decoded == cw)
                                              ++report.passed;
                                          else
                                              report.failures.push_back({cw, received, weight});
                                      });
    return report;
}

}  // namespace subcode
