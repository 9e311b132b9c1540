#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subcode/bounds.hpp"
#include "subcode/channel.hpp"
#include "subcode/multilevel.hpp"
#include "subcode/multishot.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

using Json = nlohmann::json;

/// Subspace wire format: a list of basis rows, each a list of m integers in
/// {0..q-1}. The zero subspace is the empty list.
inline Json subspace_to_json(const Subspace& s) {
    Json rows = Json::array();
    for (const Row& r : s.basis()) rows.push_back(r);
    return rows;
}

inline Subspace subspace_from_json(const FieldSpec& field, std::size_t m, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("subspace JSON: expected an array of rows");
    std::vector<Row> rows;
    for (const Json& jr : j) rows.push_back(jr.get<Row>());
    return Subspace::span(field, m, std::move(rows));
}

/// Code wire format: header {q, m, n, count, min_distance?} plus codewords
/// in the canonical (deterministic) order.
inline Json code_to_json(const MultishotCode& code, bool with_min_distance = true) {
    Json j;
    j["q"] = code.field().order();
    j["m"] = code.ambient_dim();
    j["n"] = code.length();
    j["count"] = code.size();
    if (with_min_distance && code.size() >= 2) j["min_distance"] = code.minimum_distance();
    Json words = Json::array();
    for (const SubspaceTuple& w : code.codewords()) {
        Json tuple = Json::array();
        for (const Subspace& v : w.shots) tuple.push_back(subspace_to_json(v));
        words.push_back(std::move(tuple));
    }
    j["codewords"] = std::move(words);
    return j;
}

inline MultishotCode code_from_json(const Json& j) {
    FieldSpec field = field_from_order(j.at("q").get<std::uint64_t>());
    std::size_t m = j.at("m").get<std::size_t>();
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<SubspaceTuple> words;
    for (const Json& jw : j.at("codewords")) {
        if (jw.size() != n) throw std::invalid_argument("code JSON: codeword length mismatch");
        std::vector<Subspace> shots;
        for (const Json& jv : jw) shots.push_back(subspace_from_json(field, m, jv));
        words.push_back(SubspaceTuple(std::move(shots)));
    }
    return MultishotCode(std::move(words));
}

/// Tree wire format: nested subsets with explicit branching labels.
inline Json tree_node_to_json(const PartitionTree& tree, std::size_t level, std::size_t index,
                              std::size_t label, bool is_root) {
    const PartitionTree::Subset& subset = tree.levels()[level][index];
    Json node;
    if (!is_root) node["label"] = label;
    Json members = Json::array();
    for (std::size_t e : subset) members.push_back(subspace_to_json(tree.space().at(e)));
    node["subspaces"] = std::move(members);
    if (level < tree.depth()) {
        Json children = Json::array();
        std::vector<std::size_t> kids = tree.children(level, index);
        for (std::size_t c = 0; c < kids.size(); ++c)
            children.push_back(tree_node_to_json(tree, level + 1, kids[c], c, false));
        node["children"] = std::move(children);
    }
    return node;
}

inline Json tree_to_json(const PartitionTree& tree) {
    Json j;
    j["q"] = tree.space().field().order();
    j["m"] = tree.space().ambient_dim();
    j["root"] = tree_node_to_json(tree, 0, 0, 0, true);
    return j;
}

inline PartitionTree tree_from_json(std::shared_ptr<const ProjectiveSpace> space, const Json& j) {
    std::vector<PartitionTree::Level> levels;
    auto walk = [&](auto&& self, const Json& node, std::size_t level) -> void {
        PartitionTree::Subset subset;
        for (const Json& js : node.at("subspaces"))
            subset.push_back(space->index_of(
                subspace_from_json(space->field(), space->ambient_dim(), js)));
        if (levels.size() <= level) levels.resize(level + 1);
        levels[level].push_back(std::move(subset));
        if (node.contains("children"))
            for (const Json& child : node.at("children")) self(self, child, level + 1);
    };
    walk(walk, j.at("root"), 0);
    return PartitionTree(std::move(space), std::move(levels));
}

inline Json sweep_report_to_json(const MultishotCode& code, const SweepReport& report,
                                 const std::string& kind, int max_weight) {
    Json j;
    j["q"] = code.field().order();
    j["m"] = code.ambient_dim();
    j["n"] = code.length();
    j["count"] = code.size();
    j["kind"] = kind;
    j["max_weight"] = max_weight;
    j["ok"] = report.ok();
    j["events_tested"] = report.events_tested;
    j["passed"] = report.passed;
    Json failures = Json::array();
    for (const SweepFailure& f : report.failures) {
        Json jf;
        Json cw = Json::array(), rx = Json::array();
        for (const Subspace& v : f.codeword.shots) cw.push_back(subspace_to_json(v));
        for (const Subspace& v : f.received.shots) rx.push_back(subspace_to_json(v));
        jf["codeword"] = std::move(cw);
        jf["received"] = std::move(rx);
        jf["weight"] = f.weight;
        failures.push_back(std::move(jf));
    }
    j["failures"] = std::move(failures);
    return j;
}

inline Json bounds_report_to_json(const BoundsReport& r) {
    Json j;
    j["q"] = r.q;
    j["m"] = r.m;
    j["n"] = r.n;
    j["d"] = r.d;
    j["classical_lower"] = r.classical_lower.str();
    j["gv_lower_exact"] = r.gv_lower_exact.str();
    j["gv_lower_ceil"] = r.gv_lower_ceil.str();
    j["hamming_upper_exact"] = r.hamming_upper_exact.str();
    j["hamming_upper_floor"] = r.hamming_upper_floor.str();
    j["singleton_upper"] = r.singleton_upper.str();
    j["oneshot_upper_proxy"] = r.oneshot_upper_proxy.str();
    j["oneshot_upper_note"] = r.oneshot_upper_note;
    j["best_lower"] = r.best_lower.str();
    j["best_upper"] = r.best_upper.str();
    return j;
}

inline std::string bounds_csv_header() {
    return "q,m,n,d,classical_lower,gv_lower_ceil,hamming_upper_floor,singleton_upper,"
           "best_lower,best_upper";
}

inline std::string bounds_report_to_csv_row(const BoundsReport& r) {
    return std::to_string(r.q) + "," + std::to_string(r.m) + "," + std::to_string(r.n) + "," +
           std::to_string(r.d) + "," + r.classical_lower.str() + "," + r.gv_lower_ceil.str() +
           "," + r.hamming_upper_floor.str() + "," + r.singleton_upper.str() + "," +
           r.best_lower.str() + "," + r.best_upper.str();
}

}  // namespace subcode
