#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subcode/galois.hpp"

namespace subcode {

using BigInt = boost::multiprecision::cpp_int;

using Row = std::vector<unsigned>;

namespace detail {

/// In-place Gauss-Jordan reduction to exact RREF: pivot entries 1, pivot
/// columns otherwise zero, pivot columns strictly increasing, zero rows
/// removed. Returns the pivot column indices.
inline std::vector<std::size_t> rref_in_place(const FieldSpec& f, std::vector<Row>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t m = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr][c] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        unsigned scale = f.inv(rows[r][c]);
        for (std::size_t j = c; j < m; ++j) rows[r][j] = f.mul(rows[r][j], scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            unsigned factor = rows[i][c];
            for (std::size_t j = c; j < m; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace detail

/// A vector subspace of F_q^m in its canonical representation: the reduced
/// row-echelon basis. RREF canonicity makes set equality plain matrix
/// equality and fixes a total order (dimension, then basis lexicographic).
class Subspace {
public:
    /// Canonical subspace spanned by the given rows (any spanning set).
    static Subspace span(const FieldSpec& field, std::size_t ambient_dim, std::vector<Row> rows) {
        for (const Row& row : rows) {
            if (row.size() != ambient_dim) throw std::invalid_argument("Subspace: wrong row length");
            for (unsigned v : row)
                if (v >= field.order()) throw std::invalid_argument("Subspace: entry out of field range");
        }
        std::vector<std::size_t> pivots = detail::rref_in_place(field, rows);
        return Subspace(field, ambient_dim, std::move(rows), std::move(pivots));
    }

    static Subspace zero(const FieldSpec& field, std::size_t ambient_dim) {
        return Subspace(field, ambient_dim, {}, {});
    }

    const FieldSpec& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Row>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Canonical order: dimension first, then row-major lexicographic basis.
    bool operator<(const Subspace& o) const {
        if (dim() != o.dim()) return dim() < o.dim();
        return basis_ < o.basis_;
    }
    bool operator<=(const Subspace& o) const { return !(o < *this); }
    bool operator>(const Subspace& o) const { return o < *this; }
    bool operator>=(const Subspace& o) const { return !(*this < o); }

private:
    friend class ProjectiveSpace;

    Subspace(FieldSpec field, std::size_t ambient_dim, std::vector<Row> basis,
             std::vector<std::size_t> pivots)
        : field_(std::move(field)), ambient_(ambient_dim), basis_(std::move(basis)),
          pivots_(std::move(pivots)) {}

    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Row> basis_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

inline void check_same_space(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw std::invalid_argument("subspace operation: mismatched ambient spaces");
}

}  // namespace detail

/// Number of k-dimensional subspaces of F_q^m (q-analog binomial coefficient).
/// Out-of-range k returns 0 by convention.
inline BigInt gaussian_binomial(long m, long k, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (k < 0 || k > m) return 0;
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m - i)) - 1;
        den *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k - i)) - 1;
    }
    return num / den;  // exact: the quotient is the Gaussian binomial
}

/// |P(F_q^m)| = sum of Gaussian binomials over all dimensions.
inline BigInt projective_space_size(std::size_t m, std::uint64_t q) {
    BigInt total = 0;
    for (std::size_t k = 0; k <= m; ++k)
        total += gaussian_binomial(static_cast<long>(m), static_cast<long>(k), q);
    return total;
}

/// Smallest subspace containing both arguments.
inline Subspace sum(const Subspace& a, const Subspace& b) {
    detail::check_same_space(a, b);
    std::vector<Row> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.field(), a.ambient_dim(), std::move(rows));
}

/// Intersection via the Zassenhaus stacked-matrix construction.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    detail::check_same_space(a, b);
    const FieldSpec& f = a.field();
    const std::size_t m = a.ambient_dim();
    std::vector<Row> stacked;
    for (const Row& v : a.basis()) {
        Row r(2 * m, 0);
        std::copy(v.begin(), v.end(), r.begin());
        std::copy(v.begin(), v.end(), r.begin() + static_cast<std::ptrdiff_t>(m));
        stacked.push_back(std::move(r));
    }
    for (const Row& u : b.basis()) {
        Row r(2 * m, 0);
        std::copy(u.begin(), u.end(), r.begin());
        stacked.push_back(std::move(r));
    }
    detail::rref_in_place(f, stacked);
    std::vector<Row> inter;
    for (const Row& r : stacked) {
        bool left_zero = std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m),
                                     [](unsigned v) { return v == 0; });
        if (left_zero) inter.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
    }
    return Subspace::span(f, m, std::move(inter));
}

/// d_S(V,U) = dim(V+U) - dim(V∩U) = 2 dim(V+U) - dim V - dim U.
inline int subspace_distance(const Subspace& a, const Subspace& b) {
    detail::check_same_space(a, b);
    std::size_t ds = sum(a, b).dim();
    return static_cast<int>(2 * ds - a.dim() - b.dim());
}

/// All subspaces of F_q^m, each exactly once, sorted by (dimension, basis
/// lexicographic). The order is a stable contract: downstream labels and
/// serialized output reference element indices.
class ProjectiveSpace {
public:
    static ProjectiveSpace enumerate(const FieldSpec& field, std::size_t m,
                                     BigInt budget = BigInt(10000000)) {
        BigInt total = projective_space_size(m, field.order());
        if (total > budget) throw std::length_error("ProjectiveSpace: enumeration budget exceeded");
        ProjectiveSpace space(field, m);
        space.elements_.reserve(static_cast<std::size_t>(total));
        for (std::size_t k = 0; k <= m; ++k) space.emit_dimension(k);
        std::sort(space.elements_.begin(), space.elements_.end());
        for (std::size_t i = 0; i < space.elements_.size(); ++i)
            space.index_.emplace(space.elements_[i], i);
        return space;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t ambient_dim() const { return m_; }
    std::size_t size() const { return elements_.size(); }
    const Subspace& at(std::size_t i) const { return elements_.at(i); }
    const std::vector<Subspace>& elements() const { return elements_; }

    std::size_t index_of(const Subspace& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) throw std::invalid_argument("ProjectiveSpace: subspace not in space");
        return it->second;
    }

    bool contains(const Subspace& s) const { return index_.count(s) != 0; }

private:
    ProjectiveSpace(FieldSpec field, std::size_t m) : field_(std::move(field)), m_(m) {}

    // Systematic RREF generation: choose pivot columns, sweep free entries.
    void emit_dimension(std::size_t k) {
        if (k == 0) {
            elements_.push_back(Subspace::zero(field_, m_));
            return;
        }
        std::vector<std::size_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            emit_pivot_choice(piv);
            // next k-combination of {0..m-1}
            std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
            while (i >= 0 && piv[static_cast<std::size_t>(i)] ==
                                 m_ - k + static_cast<std::size_t>(i))
                --i;
            if (i < 0) break;
            ++piv[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
                piv[j] = piv[j - 1] + 1;
        }
    }

    void emit_pivot_choice(const std::vector<std::size_t>& piv) {
        const std::size_t k = piv.size();
        std::vector<bool> is_pivot(m_, false);
        for (std::size_t c : piv) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = piv[r] + 1; c < m_; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);
        const std::uint64_t q = field_.order();
        std::vector<unsigned> odo(free_pos.size(), 0);
        while (true) {
            std::vector<Row> basis(k, Row(m_, 0));
            for (std::size_t r = 0; r < k; ++r) basis[r][piv[r]] = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                basis[free_pos[t].first][free_pos[t].second] = odo[t];
            elements_.push_back(Subspace(field_, m_, std::move(basis),
                                         std::vector<std::size_t>(piv)));
            std::size_t t = 0;
            while (t < odo.size() && odo[t] + 1 == q) odo[t++] = 0;
            if (t == odo.size()) break;
            ++odo[t];
        }
    }

    FieldSpec field_;
    std::size_t m_;
    std::vector<Subspace> elements_;
    std::map<Subspace, std::size_t> index_;
};

/// Distance-1 neighborhood in the Hasse graph: all codimension-1 subsubspaces
/// and dimension+1 supersubspaces.
inline std::vector<Subspace> hasse_neighbors(const ProjectiveSpace& space, const Subspace& v) {
    space.index_of(v);  // membership check
    std::vector<Subspace> out;
    for (const Subspace& u : space.elements())
        if (subspace_distance(v, u) == 1) out.push_back(u);
    return out;
}

}  // namespace subcode
