#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "subcode/multishot.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

/// Distinguished "unbounded" distance: compares greater than any real one.
constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// An (L+1)-level partition tree over a projective space. Level 0 is the
/// retained ground set; every deeper level refines the previous one. Subsets
/// hold element indices into the space (sorted, i.e. canonical order), and
/// subsets within a level are ordered by their first member, which fixes the
/// branching labels.
class PartitionTree {
public:
    using Subset = std::vector<std::size_t>;
    using Level = std::vector<Subset>;

    PartitionTree(std::shared_ptr<const ProjectiveSpace> space, std::vector<Level> levels)
        : space_(std::move(space)), levels_(std::move(levels)) {
        if (!space_) throw std::invalid_argument("PartitionTree: null space");
        if (levels_.empty() || levels_[0].size() != 1)
            throw std::invalid_argument("PartitionTree: level 0 must be a single subset");
        for (Level& level : levels_) {
            for (Subset& s : level) {
                if (s.empty()) throw std::invalid_argument("PartitionTree: empty subset");
                std::sort(s.begin(), s.end());
                for (std::size_t i : s)
                    if (i >= space_->size())
                        throw std::invalid_argument("PartitionTree: element index out of range");
            }
            std::sort(level.begin(), level.end(),
                      [](const Subset& a, const Subset& b) { return a.front() < b.front(); });
        }
        link_parents();
    }

    const ProjectiveSpace& space() const { return *space_; }
    std::shared_ptr<const ProjectiveSpace> space_ptr() const { return space_; }
    std::size_t depth() const { return levels_.size() - 1; }
    const std::vector<Level>& levels() const { return levels_; }
    const Subset& ground() const { return levels_[0][0]; }

    /// Indices (into level l+1) of the children of subset j at level l.
    std::vector<std::size_t> children(std::size_t l, std::size_t j) const {
        std::vector<std::size_t> out;
        if (l + 1 > depth()) return out;
        for (std::size_t c = 0; c < levels_[l + 1].size(); ++c)
            if (parents_[l + 1][c] == j) out.push_back(c);
        return out;
    }

    /// Uniform child count p_l of level l (>= 1), or 0 when not nested.
    std::size_t branching(std::size_t l) const {
        if (l < 1 || l > depth()) throw std::invalid_argument("PartitionTree: bad level");
        std::size_t p = 0;
        for (std::size_t j = 0; j < levels_[l - 1].size(); ++j) {
            std::size_t c = children(l - 1, j).size();
            if (p == 0) p = c;
            else if (p != c) return 0;
        }
        return p;
    }

    bool level_nested(std::size_t l) const { return branching(l) != 0; }

    /// Subset addressed by a branching-label path (a_1,...,a_l).
    const Subset& resolve(const std::vector<std::size_t>& path) const {
        if (path.size() > depth()) throw std::invalid_argument("PartitionTree: path too deep");
        std::size_t node = 0;
        for (std::size_t l = 0; l < path.size(); ++l) {
            std::vector<std::size_t> kids = children(l, node);
            if (path[l] >= kids.size())
                throw std::invalid_argument("PartitionTree: label path not present in tree");
            node = kids[path[l]];
        }
        return levels_[path.size()][node];
    }

private:
    void link_parents() {
        parents_.assign(levels_.size(), {});
        std::size_t total = ground().size();
        for (std::size_t l = 1; l < levels_.size(); ++l) {
            parents_[l].assign(levels_[l].size(), 0);
            std::size_t covered = 0;
            for (std::size_t j = 0; j < levels_[l].size(); ++j) {
                const Subset& s = levels_[l][j];
                bool found = false;
                for (std::size_t pj = 0; pj < levels_[l - 1].size(); ++pj) {
                    const Subset& parent = levels_[l - 1][pj];
                    if (std::includes(parent.begin(), parent.end(), s.begin(), s.end())) {
                        parents_[l][j] = pj;
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw std::invalid_argument("PartitionTree: level does not refine its parent");
                covered += s.size();
            }
            if (covered != total)
                throw std::invalid_argument("PartitionTree: level does not partition the ground set");
        }
    }

    std::shared_ptr<const ProjectiveSpace> space_;
    std::vector<Level> levels_;
    std::vector<std::vector<std::size_t>> parents_;
};

/// Minimum pairwise subspace distance inside any subset of level l;
/// kInfiniteDistance when every subset is a singleton.
inline int intrasubset_distance(const PartitionTree& tree, std::size_t l) {
    if (l > tree.depth()) throw std::invalid_argument("intrasubset_distance: bad level");
    int best = kInfiniteDistance;
    for (const auto& subset : tree.levels()[l])
        for (std::size_t a = 0; a < subset.size(); ++a)
            for (std::size_t b = a + 1; b < subset.size(); ++b)
                best = std::min(best, subspace_distance(tree.space().at(subset[a]),
                                                        tree.space().at(subset[b])));
    return best;
}

/// Forces levels 1..up_to_level to uniform branching by discarding elements.
/// At each violating level the over-branched parents keep their p_l largest
/// children (p_l = minimum child count over parents); whole child subtrees
/// are dropped, smallest first, ties resolved against the canonically later
/// child. Idempotent; never increases branching.
inline PartitionTree make_nested(const PartitionTree& tree, std::size_t up_to_level) {
    if (up_to_level > tree.depth()) throw std::invalid_argument("make_nested: level out of range");
    std::vector<PartitionTree::Level> levels = tree.levels();
    auto space = tree.space_ptr();
    for (std::size_t l = 1; l <= up_to_level; ++l) {
        PartitionTree current(space, levels);
        std::size_t p = std::numeric_limits<std::size_t>::max();
        for (std::size_t j = 0; j < levels[l - 1].size(); ++j)
            p = std::min(p, current.children(l - 1, j).size());
        if (p == 0) throw std::invalid_argument("make_nested: a parent would lose all children");
        std::vector<bool> removed(space->size(), false);
        bool changed = false;
        for (std::size_t j = 0; j < levels[l - 1].size(); ++j) {
            std::vector<std::size_t> kids = current.children(l - 1, j);
            if (kids.size() <= p) continue;
            changed = true;
            // keep the p largest children; among equal sizes keep the
            // canonically earlier ones
            std::stable_sort(kids.begin(), kids.end(), [&](std::size_t a, std::size_t b) {
                return levels[l][a].size() > levels[l][b].size();
            });
            for (std::size_t t = p; t < kids.size(); ++t)
                for (std::size_t e : levels[l][kids[t]]) removed[e] = true;
        }
        if (!changed) continue;
        std::vector<PartitionTree::Level> filtered;
        for (const auto& level : levels) {
            PartitionTree::Level out_level;
            for (const auto& subset : level) {
                PartitionTree::Subset kept;
                for (std::size_t e : subset)
                    if (!removed[e]) kept.push_back(e);
                if (!kept.empty()) out_level.push_back(std::move(kept));
            }
            if (out_level.empty())
                throw std::invalid_argument("make_nested: level emptied out");
            filtered.push_back(std::move(out_level));
        }
        levels = std::move(filtered);
    }
    return PartitionTree(space, std::move(levels));
}

/// A classical block code over the digit alphabet {0..alphabet-1}, one per
/// partition level.
struct ComponentCode {
    std::size_t alphabet = 0;
    std::size_t length = 0;
    std::vector<std::vector<unsigned>> words;
    int min_hamming = kInfiniteDistance;  // infinite for a singleton code
};

inline ComponentCode make_component(std::size_t alphabet, std::vector<std::vector<unsigned>> words) {
    if (words.empty()) throw std::invalid_argument("ComponentCode: empty code");
    ComponentCode c;
    c.alphabet = alphabet;
    c.length = words[0].size();
    for (const auto& w : words) {
        if (w.size() != c.length) throw std::invalid_argument("ComponentCode: mixed word lengths");
        for (unsigned digit : w)
            if (digit >= alphabet) throw std::invalid_argument("ComponentCode: digit out of alphabet");
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    c.words = std::move(words);
    c.min_hamming = kInfiniteDistance;
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j) {
            int diff = 0;
            for (std::size_t t = 0; t < c.length; ++t)
                if (c.words[i][t] != c.words[j][t]) ++diff;
            c.min_hamming = std::min(c.min_hamming, diff);
        }
    return c;
}

/// All of Z_p^n (minimum Hamming distance 1).
inline ComponentCode full_code(std::size_t p, std::size_t n) {
    std::vector<std::vector<unsigned>> words;
    std::vector<unsigned> w(n, 0);
    while (true) {
        words.push_back(w);
        std::size_t i = 0;
        while (i < n && w[i] + 1 == p) w[i++] = 0;
        if (i == n) break;
        ++w[i];
    }
    return make_component(p, std::move(words));
}

/// Words of Z_p^n whose digit sum is congruent to `coset` mod p
/// (minimum Hamming distance 2). coset = 0 is the even-parity code.
inline ComponentCode parity_code(std::size_t p, std::size_t n, unsigned coset = 0) {
    if (n < 2) throw std::invalid_argument("parity_code: length must be >= 2");
    std::vector<std::vector<unsigned>> words;
    std::vector<unsigned> w(n, 0);
    while (true) {
        unsigned s = 0;
        for (unsigned digit : w) s = (s + digit) % static_cast<unsigned>(p);
        if (s == coset % p) words.push_back(w);
        std::size_t i = 0;
        while (i < n && w[i] + 1 == p) w[i++] = 0;
        if (i == n) break;
        ++w[i];
    }
    return make_component(p, std::move(words));
}

/// The p constant words of Z_p^n (minimum Hamming distance n).
inline ComponentCode repetition_code(std::size_t p, std::size_t n) {
    std::vector<std::vector<unsigned>> words;
    for (unsigned v = 0; v < p; ++v) words.emplace_back(n, v);
    return make_component(p, std::move(words));
}

/// Supplies the component code for one level: (alphabet, length, required
/// minimum Hamming distance) -> code.
using ComponentProvider = std::function<ComponentCode(std::size_t, std::size_t, int)>;

/// Largest code in the built-in family (full / even-parity / repetition)
/// meeting the required distance.
inline ComponentProvider standard_component_family(unsigned parity_coset = 0) {
    return [parity_coset](std::size_t p, std::size_t n, int required) -> ComponentCode {
        if (required <= 1) return full_code(p, n);
        if (required == 2) return parity_code(p, n, parity_coset);
        if (required <= static_cast<int>(n)) return repetition_code(p, n);
        throw std::invalid_argument("component family: no code with the required distance");
    };
}

/// A complete multilevel plan: the (nested) tree, the cutoff level L', the
/// per-level component codes, and the intrasubset distances of the nested
/// tree (index l = level l).
struct MultilevelDesign {
    PartitionTree tree;
    std::size_t cutoff = 0;
    std::vector<ComponentCode> components;
    int target_d = 0;
    std::vector<int> intrasubset;
};

namespace detail {

inline long long mul_with_infinity(int a, int b) {
    if (a == kInfiniteDistance || b == kInfiniteDistance)
        return std::numeric_limits<long long>::max();
    return static_cast<long long>(a) * b;
}

}  // namespace detail

/// d_S(C) >= min over levels of d_S^(l-1) * d_H^(l); for a design with no
/// component levels the guarantee is the ground-set intrasubset distance.
inline long long distance_guarantee(const MultilevelDesign& design) {
    long long g = design.intrasubset[design.cutoff] == kInfiniteDistance
                      ? std::numeric_limits<long long>::max()
                      : design.intrasubset[design.cutoff];
    for (std::size_t l = 1; l <= design.cutoff; ++l)
        g = std::min(g, detail::mul_with_infinity(design.intrasubset[l - 1],
                                                  design.components[l - 1].min_hamming));
    return g;
}

/// Chooses the cutoff level L' (minimum level whose intrasubset distance
/// reaches d), nests the tree up to it, and selects component codes with
/// d_H^(l) >= ceil(d / d_S^(l-1)).
inline MultilevelDesign plan(const PartitionTree& tree, std::size_t n, int d,
                             const ComponentProvider& provider = standard_component_family()) {
    if (n < 1 || d < 1) throw std::invalid_argument("plan: need n >= 1 and d >= 1");
    const std::size_t levels = tree.depth();
    std::vector<int> dist(levels + 1);
    for (std::size_t l = 0; l <= levels; ++l) dist[l] = intrasubset_distance(tree, l);
    std::size_t cutoff = levels + 1;
    for (std::size_t l = levels + 1; l-- > 0;) {
        if (dist[l] >= d) cutoff = l;
        else break;
    }
    if (cutoff > levels)
        throw std::invalid_argument("plan: no partition level reaches the requested distance");

    PartitionTree nested = cutoff > 0 ? make_nested(tree, cutoff) : tree;
    MultilevelDesign design{nested, cutoff, {}, d, {}};
    design.intrasubset.resize(nested.depth() + 1);
    for (std::size_t l = 0; l <= nested.depth(); ++l)
        design.intrasubset[l] = intrasubset_distance(nested, l);

    for (std::size_t l = 1; l <= cutoff; ++l) {
        std::size_t p = nested.branching(l);
        int prev = design.intrasubset[l - 1];
        int required = prev == kInfiniteDistance ? 1 : (d + prev - 1) / prev;
        if (required > static_cast<int>(n))
            throw std::invalid_argument("plan: level requires Hamming distance beyond code length");
        ComponentCode comp = provider(p, n, required);
        if (comp.alphabet != p || comp.length != n || comp.min_hamming < required)
            throw std::invalid_argument("plan: component code does not meet the requirement");
        design.components.push_back(std::move(comp));
    }
    if (distance_guarantee(design) < d)
        throw std::invalid_argument("plan: selected components miss the target distance");
    return design;
}

struct AssembledCode {
    MultishotCode code;
    BigInt cardinality_formula;  // sum over label arrays of the column-subset size products
    long long guarantee;         // guaranteed minimum distance
};

/// Builds the codeword set: one label array per combination of component
/// codewords; column i of an array addresses a level-L' subset, and the
/// code takes the Cartesian product of those subsets across columns.
/// Designs with cutoff 0 have no label arrays: every coordinate ranges over
/// the whole retained ground set.
inline AssembledCode assemble(const MultilevelDesign& design, std::size_t n) {
    const PartitionTree& tree = design.tree;
    if (!design.components.empty() && design.components[0].length != n)
        throw std::invalid_argument("assemble: n disagrees with the component codes");

    std::vector<SubspaceTuple> words;
    BigInt formula = 0;

    // odometer over one codeword index per component code
    std::vector<std::size_t> pick(design.components.size(), 0);
    while (true) {
        // resolve the subset addressed by each column's label path
        std::vector<const PartitionTree::Subset*> columns(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> path(design.cutoff);
            for (std::size_t l = 0; l < design.cutoff; ++l)
                path[l] = design.components[l].words[pick[l]][i];
            columns[i] = &tree.resolve(path);
        }
        BigInt product = 1;
        for (std::size_t i = 0; i < n; ++i) product *= BigInt(columns[i]->size());
        formula += product;

        std::vector<std::size_t> sel(n, 0);
        while (true) {
            std::vector<Subspace> shots;
            shots.reserve(n);
            for (std::size_t i = 0; i < n; ++i) shots.push_back(tree.space().at((*columns[i])[sel[i]]));
            words.push_back(SubspaceTuple(std::move(shots)));
            std::size_t i = 0;
            while (i < n && sel[i] + 1 == columns[i]->size()) sel[i++] = 0;
            if (i == n) break;
            ++sel[i];
        }

        std::size_t l = 0;
        while (l < pick.size() && pick[l] + 1 == design.components[l].words.size()) pick[l++] = 0;
        if (l == pick.size()) break;
        ++pick[l];
    }

    MultishotCode code{std::move(words)};
    if (BigInt(code.size()) != formula)
        throw std::logic_error("assemble: cardinality formula disagrees with the codeword set");
    return AssembledCode{std::move(code), std::move(formula), distance_guarantee(design)};
}

/// The stock partition tree: level 1 groups complementary dimension classes
/// k and m-k together whenever they sit at distance >= 2 (i.e. m-2k >= 2);
/// otherwise each dimension class is its own group. Level 2 splits into
/// singletons in canonical order. For P(F_2^2) this is the two-block
/// partition {{O,W},{S1,S2,S3}} with {O,W} labeled 0.
inline PartitionTree default_tree(std::shared_ptr<const ProjectiveSpace> space) {
    std::vector<PartitionTree::Level> levels;
    PartitionTree::Subset ground(space->size());
    for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = i;
    levels.push_back({ground});
    if (space->size() > 1) {
        const std::size_t m = space->ambient_dim();
        // group key: (min(k, m-k), 0) for merged complementary classes,
        // (min(k, m-k), 1 or 2) when k and m-k stay separate
        std::map<std::pair<std::size_t, std::size_t>, PartitionTree::Subset> groups;
        for (std::size_t i = 0; i < space->size(); ++i) {
            std::size_t k = space->at(i).dim();
            std::size_t kk = std::min(k, m - k);
            bool merged = m >= 2 * kk + 2;
            std::size_t tag = merged ? 0 : (k == kk ? 1 : 2);
            groups[{kk, tag}].push_back(i);
        }
        PartitionTree::Level level1;
        for (auto& [key, subset] : groups) level1.push_back(std::move(subset));
        bool all_singletons = std::all_of(level1.begin(), level1.end(),
                                          [](const auto& s) { return s.size() == 1; });
        levels.push_back(std::move(level1));
        if (!all_singletons) {
            PartitionTree::Level singletons;
            for (std::size_t i = 0; i < space->size(); ++i) singletons.push_back({i});
            levels.push_back(std::move(singletons));
        }
    }
    return PartitionTree(std::move(space), std::move(levels));
}

}  // namespace subcode
