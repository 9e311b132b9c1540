#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subcode/subspace.hpp"

namespace subcode {

/// One element of P(F_q^m)^n: a length-n sequence of subspaces sharing the
/// same field and ambient dimension.
struct SubspaceTuple {
    std::vector<Subspace> shots;

    explicit SubspaceTuple(std::vector<Subspace> s) : shots(std::move(s)) {
        if (shots.empty()) throw std::invalid_argument("SubspaceTuple: n must be >= 1");
        for (const Subspace& v : shots)
            if (v.ambient_dim() != shots[0].ambient_dim() || v.field() != shots[0].field())
                throw std::invalid_argument("SubspaceTuple: mixed ambient spaces");
    }

    std::size_t length() const { return shots.size(); }
    const FieldSpec& field() const { return shots[0].field(); }
    std::size_t ambient_dim() const { return shots[0].ambient_dim(); }

    bool operator==(const SubspaceTuple& o) const { return shots == o.shots; }
    bool operator!=(const SubspaceTuple& o) const { return !(*this == o); }
    bool operator<(const SubspaceTuple& o) const {
        return std::lexicographical_compare(shots.begin(), shots.end(), o.shots.begin(),
                                            o.shots.end());
    }
};

namespace detail {

inline void check_same_tuple_space(const SubspaceTuple& a, const SubspaceTuple& b) {
    if (a.length() != b.length() || a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw std::invalid_argument("tuple operation: mismatched parameters");
}

}  // namespace detail

/// Coordinatewise sum of subspace distances; the metric of the n-shot channel.
inline int extended_distance(const SubspaceTuple& a, const SubspaceTuple& b) {
    detail::check_same_tuple_space(a, b);
    int d = 0;
    for (std::size_t i = 0; i < a.length(); ++i) d += subspace_distance(a.shots[i], b.shots[i]);
    return d;
}

enum class RateConvention { per_channel_use, per_packet, per_symbol };
enum class EllMode { average, maximum };
enum class LogBase { projective_size, natural };

/// A non-empty set of subspace n-tuples. Codewords are kept sorted in the
/// canonical order (the documented serialization order) with duplicates
/// removed; the minimum distance is computed on demand and cached.
class MultishotCode {
public:
    explicit MultishotCode(std::vector<SubspaceTuple> words) : codewords_(std::move(words)) {
        if (codewords_.empty()) throw std::invalid_argument("MultishotCode: empty code");
        for (const SubspaceTuple& w : codewords_) detail::check_same_tuple_space(w, codewords_[0]);
        std::sort(codewords_.begin(), codewords_.end());
        codewords_.erase(std::unique(codewords_.begin(), codewords_.end()), codewords_.end());
    }

    const FieldSpec& field() const { return codewords_[0].field(); }
    std::size_t ambient_dim() const { return codewords_[0].ambient_dim(); }
    std::size_t length() const { return codewords_[0].length(); }
    std::size_t size() const { return codewords_.size(); }
    const std::vector<SubspaceTuple>& codewords() const { return codewords_; }

    bool contains(const SubspaceTuple& t) const {
        return std::binary_search(codewords_.begin(), codewords_.end(), t);
    }

    /// Minimum pairwise extended distance. Undefined (throws) for a
    /// singleton code: the minimization ranges over distinct pairs.
    int minimum_distance() const {
        if (size() < 2)
            throw std::domain_error("minimum_distance: undefined for a singleton code");
        if (!min_distance_) {
            int best = std::numeric_limits<int>::max();
            for (std::size_t i = 0; i < codewords_.size(); ++i)
                for (std::size_t j = i + 1; j < codewords_.size(); ++j)
                    best = std::min(best, extended_distance(codewords_[i], codewords_[j]));
            min_distance_ = best;
        }
        return *min_distance_;
    }

    /// Maximum subspace dimension over all coordinates of all codewords.
    std::size_t max_dimension() const {
        std::size_t best = 0;
        for (const SubspaceTuple& w : codewords_)
            for (const Subspace& v : w.shots) best = std::max(best, v.dim());
        return best;
    }

    /// Average subspace dimension over all coordinates of all codewords.
    double average_dimension() const {
        double total = 0;
        for (const SubspaceTuple& w : codewords_)
            for (const Subspace& v : w.shots) total += static_cast<double>(v.dim());
        return total / (static_cast<double>(size()) * static_cast<double>(length()));
    }

private:
    std::vector<SubspaceTuple> codewords_;
    mutable std::optional<int> min_distance_;
};

/// Code rate. Denominator per convention: n channel uses, l(C)*n packets, or
/// m*l(C)*n q-ary symbols, where l(C) is the average or maximum codeword
/// coordinate dimension. Log base defaults to |P(F_q^m)|.
inline double rate(const MultishotCode& code, RateConvention convention,
                   EllMode ell_mode = EllMode::average, LogBase base = LogBase::projective_size) {
    double log_size = std::log(static_cast<double>(code.size()));
    if (base == LogBase::projective_size) {
        BigInt p = projective_space_size(code.ambient_dim(), code.field().order());
        log_size /= std::log(p.convert_to<double>());
    }
    double denom = static_cast<double>(code.length());
    if (convention != RateConvention::per_channel_use) {
        double ell = ell_mode == EllMode::average ? code.average_dimension()
                                                  : static_cast<double>(code.max_dimension());
        if (ell == 0.0)
            throw std::domain_error("rate: l(C) = 0, per-packet/per-symbol rate undefined");
        denom *= ell;
        if (convention == RateConvention::per_symbol)
            denom *= static_cast<double>(code.ambient_dim());
    }
    return log_size / denom;
}

/// The injective, distance-preserving map P(F_q^m)^n -> P(F_q^{mn}):
/// coordinate i's basis occupies block i of an mn-wide row.
inline Subspace embed(const SubspaceTuple& t) {
    const std::size_t m = t.ambient_dim();
    const std::size_t n = t.length();
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (const Row& b : t.shots[i].basis()) {
            Row r(m * n, 0);
            std::copy(b.begin(), b.end(), r.begin() + static_cast<std::ptrdiff_t>(i * m));
            rows.push_back(std::move(r));
        }
    return Subspace::span(t.field(), m * n, std::move(rows));
}

/// Image of a whole code under the embedding: a one-shot code in P(F_q^{mn}).
inline MultishotCode embed_code(const MultishotCode& code) {
    std::vector<SubspaceTuple> words;
    words.reserve(code.size());
    for (const SubspaceTuple& w : code.codewords())
        words.push_back(SubspaceTuple({embed(w)}));
    return MultishotCode(std::move(words));
}

/// Removes one coordinate (0-based) from every codeword; colliding codewords
/// merge. If d_S(C) > m the size is preserved and the distance drops by at
/// most m.
inline MultishotCode puncture(const MultishotCode& code, std::size_t coordinate) {
    if (code.length() < 2) throw std::invalid_argument("puncture: code length must be >= 2");
    if (coordinate >= code.length()) throw std::invalid_argument("puncture: coordinate out of range");
    std::vector<SubspaceTuple> words;
    words.reserve(code.size());
    for (const SubspaceTuple& w : code.codewords()) {
        std::vector<Subspace> shots = w.shots;
        shots.erase(shots.begin() + static_cast<std::ptrdiff_t>(coordinate));
        words.push_back(SubspaceTuple(std::move(shots)));
    }
    return MultishotCode(std::move(words));
}

}  // namespace subcode
