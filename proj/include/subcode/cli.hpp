#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subcode/bounds.hpp"
#include "subcode/channel.hpp"
#include "subcode/io.hpp"
#include "subcode/multilevel.hpp"
#include "subcode/multishot.hpp"
#include "subcode/search.hpp"
#include "subcode/subspace.hpp"

namespace subcode::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error.
constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

namespace detail {

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string output;
    std::string format;  // per-subcommand default when empty
};

inline void write_payload(const GlobalOptions& opts, const std::string& payload,
                          std::ostream& out) {
    if (opts.output.empty()) {
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(opts.output);
    if (!file) throw std::runtime_error("cannot open output file: " + opts.output);
    file << payload;
    if (!payload.empty() && payload.back() != '\n') file << '\n';
}

inline std::string format_or(const GlobalOptions& opts, const std::string& fallback) {
    return opts.format.empty() ? fallback : opts.format;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    return Json::parse(file);
}

inline FieldSpec make_field(std::uint64_t q) { return field_from_order(q); }

inline std::string describe_subspace(const Subspace& s) {
    std::ostringstream os;
    os << "dim " << s.dim() << " [";
    for (std::size_t r = 0; r < s.basis().size(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
            if (c) os << ' ';
            os << s.basis()[r][c];
        }
    }
    os << "]";
    return os.str();
}

}  // namespace detail

/// Runs one CLI invocation. Machine-readable payload goes to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multishot subspace codes: enumeration, bounds, construction, verification"};
    app.require_subcommand(1);

    detail::GlobalOptions opts;
    app.add_option("--seed", opts.seed, "RNG seed for randomized modes");
    app.add_option("--output", opts.output, "write the payload to this file instead of stdout");
    app.add_option("--format", opts.format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // enumerate
    std::uint64_t q = 2;
    std::size_t m = 2, n = 1, d = 1;
    auto* cmd_enum = app.add_subcommand("enumerate", "list the projective space P(F_q^m)");
    cmd_enum->add_option("--q", q, "field order")->required();
    cmd_enum->add_option("--m", m, "ambient dimension")->required();

    // distance
    std::string subspace_a, subspace_b;
    auto* cmd_dist = app.add_subcommand("distance", "subspace distance between two subspaces");
    cmd_dist->add_option("--q", q)->required();
    cmd_dist->add_option("--m", m)->required();
    cmd_dist->add_option("--a", subspace_a, "first subspace as JSON rows")->required();
    cmd_dist->add_option("--b", subspace_b, "second subspace as JSON rows")->required();

    // bounds
    std::size_t sweep_dmax = 0;
    auto* cmd_bounds = app.add_subcommand("bounds", "bounds sandwich on A_q^n(m,d)");
    cmd_bounds->add_option("--q", q)->required();
    cmd_bounds->add_option("--m", m)->required();
    cmd_bounds->add_option("--n", n)->required();
    cmd_bounds->add_option("--d", d)->required();
    cmd_bounds->add_option("--sweep", sweep_dmax, "also report every d up to this value");

    // multilevel
    std::string tree_file, component = "parity";
    auto* cmd_ml = app.add_subcommand("multilevel", "multilevel construction of an n-shot code");
    cmd_ml->add_option("--q", q)->required();
    cmd_ml->add_option("--m", m)->required();
    cmd_ml->add_option("--n", n)->required();
    cmd_ml->add_option("--d", d)->required();
    cmd_ml->add_option("--tree", tree_file, "partition tree JSON file (default: built-in tree)");
    cmd_ml->add_option("--component", component,
                       "component family: full | parity | odd-parity | repetition | <file>");

    // search
    std::string mode = "greedy";
    std::uint64_t budget = 1000000;
    std::string order = "canonical";
    auto* cmd_search = app.add_subcommand("search", "greedy or branch-and-bound code search");
    cmd_search->add_option("--q", q)->required();
    cmd_search->add_option("--m", m)->required();
    cmd_search->add_option("--n", n)->required();
    cmd_search->add_option("--d", d)->required();
    cmd_search->add_option("--mode", mode, "greedy | bnb")->check(CLI::IsMember({"greedy", "bnb"}));
    cmd_search->add_option("--budget", budget, "node budget for bnb");
    cmd_search->add_option("--order", order, "canonical | shuffle")
        ->check(CLI::IsMember({"canonical", "shuffle"}));

    // verify
    std::string code_file;
    int detect_weight = -1, correct_weight = -1;
    auto* cmd_verify = app.add_subcommand("verify", "re-check a code file and its error control");
    cmd_verify->add_option("--code", code_file, "code JSON file")->required();
    cmd_verify->add_option("--detect-weight", detect_weight,
                           "exhaustively verify detection up to this total weight");
    cmd_verify->add_option("--correct-weight", correct_weight,
                           "exhaustively verify correction up to this total weight");

    // embed
    auto* cmd_embed = app.add_subcommand("embed", "one-shot image of a code under the embedding");
    cmd_embed->add_option("--code", code_file, "code JSON file")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        if (*cmd_enum) {
            FieldSpec field = detail::make_field(q);
            ProjectiveSpace space = ProjectiveSpace::enumerate(field, m);
            std::string format = detail::format_or(opts, "json");
            if (format == "json") {
                Json j;
                j["q"] = q;
                j["m"] = m;
                j["count"] = space.size();
                Json elems = Json::array();
                for (const Subspace& s : space.elements()) elems.push_back(subspace_to_json(s));
                j["subspaces"] = std::move(elems);
                detail::write_payload(opts, j.dump(2), out);
            } else if (format == "text") {
                std::ostringstream os;
                for (std::size_t i = 0; i < space.size(); ++i)
                    os << i << ": " << detail::describe_subspace(space.at(i)) << "\n";
                detail::write_payload(opts, os.str(), out);
            } else {
                err << "usage error: enumerate supports json or text output\n";
                return kExitUsageError;
            }
        } else if (*cmd_dist) {
            FieldSpec field = detail::make_field(q);
            Subspace a = subspace_from_json(field, m, Json::parse(subspace_a));
            Subspace b = subspace_from_json(field, m, Json::parse(subspace_b));
            int dist = subspace_distance(a, b);
            std::string format = detail::format_or(opts, "json");
            if (format == "json")
                detail::write_payload(opts, Json{{"distance", dist}}.dump(), out);
            else
                detail::write_payload(opts, std::to_string(dist), out);
        } else if (*cmd_bounds) {
            std::vector<BoundsReport> reports;
            std::size_t d_hi = sweep_dmax >= d ? sweep_dmax : d;
            for (std::size_t dd = d; dd <= d_hi; ++dd) reports.push_back(bounds_report(q, m, n, dd));
            std::string format = detail::format_or(opts, "csv");
            if (format == "csv") {
                std::ostringstream os;
                os << bounds_csv_header() << "\n";
                for (const BoundsReport& r : reports) os << bounds_report_to_csv_row(r) << "\n";
                detail::write_payload(opts, os.str(), out);
            } else if (format == "json") {
                Json j = Json::array();
                for (const BoundsReport& r : reports) j.push_back(bounds_report_to_json(r));
                detail::write_payload(opts, j.dump(2), out);
            } else {
                err << "usage error: bounds supports csv or json output\n";
                return kExitUsageError;
            }
        } else if (*cmd_ml) {
            FieldSpec field = detail::make_field(q);
            auto space = std::make_shared<const ProjectiveSpace>(ProjectiveSpace::enumerate(field, m));
            PartitionTree tree = tree_file.empty()
                                     ? default_tree(space)
                                     : tree_from_json(space, detail::load_json_file(tree_file));
            ComponentProvider provider;
            if (component == "parity") provider = standard_component_family(0);
            else if (component == "odd-parity") provider = standard_component_family(1);
            else if (component == "full")
                provider = [](std::size_t p, std::size_t len, int) { return full_code(p, len); };
            else if (component == "repetition")
                provider = [](std::size_t p, std::size_t len, int) {
                    return repetition_code(p, len);
                };
            else {
                Json jc = detail::load_json_file(component);
                std::vector<ComponentCode> supplied;
                for (const Json& one : jc.at("components"))
                    supplied.push_back(make_component(
                        one.at("alphabet").get<std::size_t>(),
                        one.at("words").get<std::vector<std::vector<unsigned>>>()));
                std::size_t next = 0;
                provider = [supplied, next](std::size_t, std::size_t, int) mutable {
                    if (next >= supplied.size())
                        throw std::invalid_argument("user components: not enough codes supplied");
                    return supplied[next++];
                };
            }
            MultilevelDesign design = plan(tree, n, static_cast<int>(d), provider);
            AssembledCode assembled = assemble(design, n);
            Json j = code_to_json(assembled.code);
            j["cardinality_formula"] = assembled.cardinality_formula.str();
            j["distance_guarantee"] =
                assembled.guarantee == std::numeric_limits<long long>::max()
                    ? Json("infinity")
                    : Json(assembled.guarantee);
            j["cutoff_level"] = design.cutoff;
            detail::write_payload(opts, j.dump(2), out);
        } else if (*cmd_search) {
            FieldSpec field = detail::make_field(q);
            ProjectiveSpace space = ProjectiveSpace::enumerate(field, m);
            SearchConfig config;
            config.n = n;
            config.d = d;
            config.node_budget = budget;
            config.seed = opts.seed;
            config.order = order == "shuffle" ? SeedOrder::seeded_shuffle : SeedOrder::canonical;
            Json j;
            if (mode == "greedy") {
                MultishotCode code = greedy_code(space, config);
                j = code_to_json(code);
                j["certificate"] = {{"optimal", false}, {"nodes_explored", 0}};
            } else {
                SearchResult result = max_code_bnb(space, config);
                j = code_to_json(result.code);
                j["certificate"] = {{"optimal", result.optimal},
                                    {"nodes_explored", result.nodes_explored}};
            }
            detail::write_payload(opts, j.dump(2), out);
        } else if (*cmd_verify) {
            MultishotCode code = code_from_json(detail::load_json_file(code_file));
            Json j;
            j["q"] = code.field().order();
            j["m"] = code.ambient_dim();
            j["n"] = code.length();
            j["count"] = code.size();
            if (code.size() >= 2) j["min_distance"] = code.minimum_distance();
            if (detect_weight >= 0 || correct_weight >= 0) {
                ProjectiveSpace space = ProjectiveSpace::enumerate(code.field(), code.ambient_dim());
                if (detect_weight >= 0) {
                    SweepReport rep = sweep_detect(space, code, detect_weight);
                    j["detect"] = sweep_report_to_json(code, rep, "detect", detect_weight);
                }
                if (correct_weight >= 0) {
                    SweepReport rep = sweep_correct(space, code, correct_weight);
                    j["correct"] = sweep_report_to_json(code, rep, "correct", correct_weight);
                }
            }
            detail::write_payload(opts, j.dump(2), out);
        } else if (*cmd_embed) {
            MultishotCode code = code_from_json(detail::load_json_file(code_file));
            MultishotCode image = embed_code(code);
            detail::write_payload(opts, code_to_json(image).dump(2), out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace subcode::cli
