#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subcode/detail/bnb.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

using BigRat = boost::multiprecision::cpp_rational;

/// Per-coordinate dimension profile of a tuple center: dims[i] in {0..m}.
struct DimProfile {
    std::vector<unsigned> dims;
};

inline BigInt floor_rat(const BigRat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline BigInt ceil_rat(const BigRat& r) { return -floor_rat(-r); }

/// Number of subspaces at distance exactly j from a fixed dim-k subspace of
/// F_q^m: sum over i of (m-k choose j-i)_q (k choose i)_q q^{i(j-i)}.
inline BigInt shell_volume(std::uint64_t q, std::size_t m, std::size_t k, std::size_t j) {
    if (k > m) throw std::invalid_argument("shell_volume: k out of range");
    BigInt total = 0;
    for (std::size_t i = 0; i <= j; ++i) {
        BigInt a = gaussian_binomial(static_cast<long>(m - k), static_cast<long>(j - i), q);
        BigInt b = gaussian_binomial(static_cast<long>(k), static_cast<long>(i), q);
        total += a * b * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i * (j - i)));
    }
    return total;
}

namespace detail {

inline void check_profile(const DimProfile& profile, std::size_t m, std::size_t n) {
    if (profile.dims.size() != n) throw std::invalid_argument("DimProfile: wrong length");
    for (unsigned k : profile.dims)
        if (k > m) throw std::invalid_argument("DimProfile: entry out of range");
}

// Applies fn to every profile in {0..m}^n.
template <typename Fn>
void for_each_profile(std::size_t m, std::size_t n, Fn&& fn) {
    std::vector<unsigned> k(n, 0);
    while (true) {
        fn(k);
        std::size_t i = 0;
        while (i < n && k[i] == m) k[i++] = 0;
        if (i == n) break;
        ++k[i];
    }
}

}  // namespace detail

/// Ball volume in P(F_q^m)^n around a center with the given dimension
/// profile: tuples within extended distance r.
inline BigInt sphere_volume(std::uint64_t q, std::size_t m, std::size_t n,
                            const DimProfile& profile, std::size_t r) {
    detail::check_profile(profile, m, n);
    // Precompute shells per coordinate, then sum products over per-shot
    // radii j with j_1+...+j_n <= r via dynamic programming on prefixes.
    std::vector<std::vector<BigInt>> shells(n);
    const std::size_t jmax = std::min(r, m);
    for (std::size_t i = 0; i < n; ++i) {
        shells[i].resize(jmax + 1);
        for (std::size_t j = 0; j <= jmax; ++j) shells[i][j] = shell_volume(q, m, profile.dims[i], j);
    }
    std::vector<BigInt> acc(r + 1, 0);  // acc[t]: weight-t combinations of prefix
    acc[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigInt> next(r + 1, 0);
        for (std::size_t t = 0; t <= r; ++t) {
            if (acc[t] == 0) continue;
            for (std::size_t j = 0; j <= jmax && t + j <= r; ++j) next[t + j] += acc[t] * shells[i][j];
        }
        acc = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& v : acc) total += v;
    return total;
}

/// Number of tuples with the given dimension profile: product of (m choose k_i)_q.
inline BigInt freq(std::uint64_t q, std::size_t m, const DimProfile& profile) {
    detail::check_profile(profile, m, profile.dims.size());
    BigInt total = 1;
    for (unsigned k : profile.dims)
        total *= gaussian_binomial(static_cast<long>(m), static_cast<long>(k), q);
    return total;
}

/// Average ball volume over all centers. The profile sum runs over the full
/// {0..m}^n grid so that the frequencies add up to |P|^n.
inline BigRat volume_avg(std::uint64_t q, std::size_t m, std::size_t n, std::size_t r) {
    // Per-coordinate average shell volumes multiply across coordinates, so
    // the n-fold profile sum collapses to a 1-D convolution.
    BigInt space = projective_space_size(m, q);
    std::size_t jmax = std::min(r, m);
    std::vector<BigRat> avg_shell(jmax + 1, BigRat(0));
    for (std::size_t k = 0; k <= m; ++k) {
        BigInt count = gaussian_binomial(static_cast<long>(m), static_cast<long>(k), q);
        for (std::size_t j = 0; j <= jmax; ++j)
            avg_shell[j] += BigRat(count * shell_volume(q, m, k, j), space);
    }
    std::vector<BigRat> acc(r + 1, BigRat(0));
    acc[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigRat> next(r + 1, BigRat(0));
        for (std::size_t t = 0; t <= r; ++t) {
            if (acc[t] == 0) continue;
            for (std::size_t j = 0; j <= jmax && t + j <= r; ++j) next[t + j] += acc[t] * avg_shell[j];
        }
        acc = std::move(next);
    }
    BigRat total = 0;
    for (const BigRat& v : acc) total += v;
    return total;
}

/// Smallest ball volume: attained at the half-dimension profile.
inline BigInt volume_min(std::uint64_t q, std::size_t m, std::size_t n, std::size_t r) {
    DimProfile p{std::vector<unsigned>(n, static_cast<unsigned>(m / 2))};
    return sphere_volume(q, m, n, p, r);
}

/// Largest ball volume: attained at the all-zero profile.
inline BigInt volume_max(std::uint64_t q, std::size_t m, std::size_t n, std::size_t r) {
    DimProfile p{std::vector<unsigned>(n, 0)};
    return sphere_volume(q, m, n, p, r);
}

namespace detail {

inline void check_distance_range(std::size_t m, std::size_t n, std::size_t d) {
    if (d < 1 || d > m * n) throw std::invalid_argument("bounds: d must satisfy 1 <= d <= m*n");
}

}  // namespace detail

/// Sphere-packing upper bound: |P|^n / Vol_min(floor((d-1)/2)).
inline BigRat hamming_upper(std::uint64_t q, std::size_t m, std::size_t n, std::size_t d) {
    detail::check_distance_range(m, n, d);
    BigInt space_n = boost::multiprecision::pow(projective_space_size(m, q), static_cast<unsigned>(n));
    return BigRat(space_n, volume_min(q, m, n, (d - 1) / 2));
}

/// Sphere-covering lower bound: |P|^n / Vol_avg(d-1).
inline BigRat gv_lower(std::uint64_t q, std::size_t m, std::size_t n, std::size_t d) {
    detail::check_distance_range(m, n, d);
    BigInt space_n = boost::multiprecision::pow(projective_space_size(m, q), static_cast<unsigned>(n));
    return BigRat(space_n) / volume_avg(q, m, n, d - 1);
}

/// Puncturing-based upper bound: |P|^{n - floor((d-1)/m)}.
inline BigInt singleton_upper(std::uint64_t q, std::size_t m, std::size_t n, std::size_t d) {
    detail::check_distance_range(m, n, d);
    std::size_t drop = (d - 1) / m;
    return boost::multiprecision::pow(projective_space_size(m, q), static_cast<unsigned>(n - drop));
}

/// Classical Gilbert-Varshamov guarantee for length-n codes over an
/// alphabet of Q symbols with Hamming distance d (returns the ceiling).
inline BigInt classical_gv_lower(const BigInt& Q, std::size_t n, std::size_t d) {
    if (d > n) return 1;
    BigInt ball = 0;
    for (std::size_t j = 0; j + 1 <= d; ++j) {
        BigInt binom = 1;
        for (std::size_t i = 0; i < j; ++i) binom = binom * BigInt(n - i) / BigInt(i + 1);
        ball += binom * boost::multiprecision::pow(Q - 1, static_cast<unsigned>(j));
    }
    return ceil_rat(BigRat(boost::multiprecision::pow(Q, static_cast<unsigned>(n)), ball));
}

/// Best code found by exhaustive search over Z_Q^n with Hamming distance d.
/// Greedy lexicographic seed, then branch-and-bound capped by the classical
/// Singleton bound (search stops as soon as the cap is met).
inline BigInt classical_max_code(std::size_t Q, std::size_t n, std::size_t d,
                                 std::uint64_t node_budget = 2000000) {
    if (d > n) return 1;
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= Q;
    auto digit = [&](std::size_t w, std::size_t i) {
        for (std::size_t t = 0; t < i; ++t) w /= Q;
        return w % Q;
    };
    auto compatible = [&](std::size_t a, std::size_t b) {
        std::size_t diff = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (digit(a, i) != digit(b, i)) ++diff;
        return diff >= d;
    };
    std::vector<std::size_t> greedy;
    for (std::size_t w = 0; w < count; ++w) {
        bool ok = true;
        for (std::size_t g : greedy)
            if (!compatible(g, w)) {
                ok = false;
                break;
            }
        if (ok) greedy.push_back(w);
    }
    std::size_t singleton_cap = 1;
    for (std::size_t i = 0; i + d <= n; ++i) singleton_cap *= Q;
    if (greedy.size() >= singleton_cap) return BigInt(greedy.size());
    detail::MaxCompatibleSearch search(count, compatible, node_budget, singleton_cap);
    auto outcome = search.run(std::move(greedy));
    return BigInt(outcome.best.size());
}

struct ClassicalSandwich {
    BigInt lower;  // best classical-code size over an alphabet of |P| symbols
    BigInt upper;  // one-shot Singleton proxy for A_q(mn,d), clamped by |P|^n
};

/// The classical sandwich A_{|P|}(n,d) <= A_q^n(m,d) <= A_q(mn,d). The lower
/// side is the max of classical GV and, for tiny parameters, an exhaustive
/// classical-code search; the upper side uses the one-shot Singleton bound
/// on P(F_q^{mn}) as a proxy for the (open) exact one-shot optimum.
inline ClassicalSandwich classical_sandwich(std::uint64_t q, std::size_t m, std::size_t n,
                                            std::size_t d) {
    detail::check_distance_range(m, n, d);
    BigInt space = projective_space_size(m, q);
    BigInt space_n = boost::multiprecision::pow(space, static_cast<unsigned>(n));
    BigInt lower = classical_gv_lower(space, n, d);
    if (n <= 4 && space <= 7)
        lower = std::max(lower, classical_max_code(space.convert_to<std::size_t>(), n, d));
    BigInt upper = singleton_upper(q, m * n, 1, d);
    if (upper > space_n) upper = space_n;
    return ClassicalSandwich{lower, upper};
}

/// One parameter point of the bounds sandwich on A_q^n(m,d): exact rationals
/// plus the rounded integers (ceil for lower bounds, floor for upper).
struct BoundsReport {
    std::uint64_t q = 0;
    std::size_t m = 0, n = 0, d = 0;
    BigRat gv_lower_exact;
    BigRat hamming_upper_exact;
    BigInt gv_lower_ceil;
    BigInt hamming_upper_floor;
    BigInt singleton_upper;
    BigInt classical_lower;
    BigInt oneshot_upper_proxy;
    std::string oneshot_upper_note;
    BigInt best_lower;
    BigInt best_upper;
};

inline BoundsReport bounds_report(std::uint64_t q, std::size_t m, std::size_t n, std::size_t d) {
    BoundsReport rep;
    rep.q = q;
    rep.m = m;
    rep.n = n;
    rep.d = d;
    rep.gv_lower_exact = gv_lower(q, m, n, d);
    rep.hamming_upper_exact = hamming_upper(q, m, n, d);
    rep.gv_lower_ceil = ceil_rat(rep.gv_lower_exact);
    rep.hamming_upper_floor = floor_rat(rep.hamming_upper_exact);
    rep.singleton_upper = subcode::singleton_upper(q, m, n, d);
    ClassicalSandwich sandwich = classical_sandwich(q, m, n, d);
    rep.classical_lower = sandwich.lower;
    rep.oneshot_upper_proxy = sandwich.upper;
    rep.oneshot_upper_note =
        "one-shot Singleton bound on P(F_q^{mn}) standing in for the exact one-shot optimum";
    rep.best_lower = std::max(rep.classical_lower, rep.gv_lower_ceil);
    rep.best_upper = std::min({rep.hamming_upper_floor, rep.singleton_upper,
                               rep.oneshot_upper_proxy});
    if (rep.best_lower > rep.best_upper)
        throw std::logic_error("bounds_report: lower bound exceeds upper bound (computation bug)");
    return rep;
}

}  // namespace subcode
