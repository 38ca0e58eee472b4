// Command-line front end: group reports, pair reports (K-theory and
// isotropy formality), finite-matrix-group invariant theory, and the
// worked-example catalog. Exit codes: 0 success (including undecided
// verdicts), 2 malformed input, 3 budget exhausted, 4 hypothesis refusal
// without --allow-uncovered, 1 internal error.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "isoring/catalog.hpp"
#include "isoring/reports.hpp"

namespace {

using namespace isoring;

struct Options {
    std::string format = "text";
    long budget = kDefaultPairBudget;
    bool no_cache = false;
    bool allow_uncovered = false;
    int window = 3;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open descriptor file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw input_error("invalid JSON in '" + path + "': " + e.what());
    }
}

bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return static_cast<bool>(in);
}

CompactGroup resolve_group(const std::string& target) {
    if (file_exists(target)) return parse_group_descriptor(read_json_file(target));
    return make_named(target);
}

GroupPair resolve_pair(const std::string& target) {
    constexpr const char* kPrefix = "catalog:";
    if (target.rfind(kPrefix, 0) == 0) return catalog_pair(target.substr(8));
    return parse_pair_descriptor(read_json_file(target));
}

void emit(const Options& opts, const json& doc, const std::string& text) {
    if (opts.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_group_info(const Options& opts, const std::string& target) {
    GroupInfo info = group_info(resolve_group(target), opts.budget);
    emit(opts, group_info_json(info), group_info_text(info));
    return 0;
}

int cmd_pair_ktheory(const Options& opts, const std::string& target) {
    GroupPair pair = resolve_pair(target);
    try {
        KTheoryDocument doc = ktheory_document(pair, opts.budget);
        emit(opts, ktheory_json(doc), ktheory_text(doc));
        return 0;
    } catch (const uncovered_error&) {
        if (!opts.allow_uncovered) throw;
        HypothesisReport hyp = classify_pair(pair, opts.budget);
        emit(opts, classification_json(pair.ambient.label, pair.subgroup.label, hyp),
             classification_text(pair.ambient.label, pair.subgroup.label, hyp));
        return 0;
    }
}

int cmd_pair_formality(const Options& opts, const std::string& target) {
    GroupPair pair = resolve_pair(target);
    FormalityDocument doc = formality_document(pair, opts.budget);
    emit(opts, formality_json(doc), formality_text(doc));
    return 0;
}

int cmd_invariants(const Options& opts, const std::string& which, const std::string& path) {
    FiniteMatrixGroup gamma = parse_matrix_group_descriptor(read_json_file(path), opts.budget);
    if (which == "molien") {
        MolienData data = molien_series(gamma);
        emit(opts, molien_json(gamma, data), molien_text(gamma, data));
    } else if (which == "cst") {
        CstReport report = cst_verdict(gamma, opts.budget);
        emit(opts, cst_json(gamma, report), cst_text(gamma, report));
    } else {
        CoinvariantReport report = coinvariant_dimension(gamma, -1, opts.budget);
        bool reflection = is_pseudoreflection_group(gamma).is_reflection_group;
        emit(opts, coinvariants_json(gamma, report, reflection),
             coinvariants_text(gamma, report, reflection));
    }
    return 0;
}

int cmd_catalog_list(const Options& opts) {
    if (opts.format == "json") {
        json out = json::array();
        for (const auto& entry : catalog_entries()) {
            json e;
            e["name"] = entry.name;
            e["summary"] = entry.summary;
            e["ambient"] = entry.pair.ambient.label;
            e["subgroup"] = entry.pair.subgroup.label;
            out.push_back(e);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& entry : catalog_entries())
            std::cout << entry.name << ": " << entry.summary << " ("
                      << entry.pair.ambient.label << ", " << entry.pair.subgroup.label
                      << ")\n";
    }
    return 0;
}

json run_result_json(const CatalogRunResult& result) {
    json out;
    out["name"] = result.name;
    out["passed"] = result.passed;
    json checks = json::array();
    for (const auto& check : result.checks) {
        json c;
        c["description"] = check.description;
        c["passed"] = check.passed;
        checks.push_back(c);
    }
    out["checks"] = checks;
    return out;
}

void run_result_text(std::ostream& os, const CatalogRunResult& result) {
    os << result.name << ": " << (result.passed ? "pass" : "FAIL") << "\n";
    for (const auto& check : result.checks)
        os << "  [" << (check.passed ? "ok" : "FAIL") << "] " << check.description << "\n";
}

int cmd_catalog_run(const Options& opts, const std::string& name, bool all) {
    if (all == !name.empty())
        throw input_error("catalog run needs exactly one of a catalog name or --all");
    std::vector<CatalogRunResult> results;
    if (all) {
        for (const auto& entry : catalog_entries())
            results.push_back(catalog_run(entry.name, opts.budget, opts.window));
    } else {
        results.push_back(catalog_run(name, opts.budget, opts.window));
    }
    bool passed = true;
    for (const auto& r : results) passed = passed && r.passed;
    if (opts.format == "json") {
        json out = json::array();
        for (const auto& r : results) out.push_back(run_result_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        std::ostringstream os;
        for (const auto& r : results) run_result_text(os, r);
        std::cout << os.str();
    }
    return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"exact equivariant K-theory, cohomology, and invariant theory for "
                 "compact-group pairs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", opts.budget, "computation step budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--no-cache", opts.no_cache, "disable the basis cache");
    app.add_flag("--allow-uncovered", opts.allow_uncovered,
                 "report the hypothesis classification instead of failing on refused pairs");
    app.add_option("--window", opts.window,
                   "exponent window for rank-one fixed-point comparisons")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string group_target;
    CLI::App* group = app.add_subcommand("group", "reports about a single group");
    group->require_subcommand(1);
    group->fallthrough();
    CLI::App* group_info_cmd =
        group->add_subcommand("info", "rank, Weyl order, fundamental group, generators");
    group_info_cmd->fallthrough();
    group_info_cmd->add_option("target", group_target, "group name or descriptor file")
        ->required();

    std::string pair_target_kt;
    std::string pair_target_fm;
    CLI::App* pair = app.add_subcommand("pair", "reports about a pair of groups");
    pair->require_subcommand(1);
    pair->fallthrough();
    CLI::App* pair_ktheory_cmd =
        pair->add_subcommand("ktheory", "equivariant K-theory of the isotropy action");
    pair_ktheory_cmd->fallthrough();
    pair_ktheory_cmd
        ->add_option("target", pair_target_kt, "descriptor file or catalog:NAME")
        ->required();
    CLI::App* pair_formality_cmd =
        pair->add_subcommand("formality", "isotropy-formality battery and equivariant "
                                          "cohomology");
    pair_formality_cmd->fallthrough();
    pair_formality_cmd
        ->add_option("target", pair_target_fm, "descriptor file or catalog:NAME")
        ->required();

    std::string inv_file_molien, inv_file_cst, inv_file_coinv;
    CLI::App* invariants =
        app.add_subcommand("invariants", "invariant theory of a finite matrix group");
    invariants->require_subcommand(1);
    invariants->fallthrough();
    CLI::App* molien_cmd = invariants->add_subcommand("molien", "Molien series");
    molien_cmd->fallthrough();
    molien_cmd->add_option("file", inv_file_molien, "matrix-group descriptor file")
        ->required();
    CLI::App* cst_cmd =
        invariants->add_subcommand("cst", "three-way polynomiality verdict");
    cst_cmd->fallthrough();
    cst_cmd->add_option("file", inv_file_cst, "matrix-group descriptor file")->required();
    CLI::App* coinv_cmd =
        invariants->add_subcommand("coinvariants", "coinvariant-algebra dimension");
    coinv_cmd->fallthrough();
    coinv_cmd->add_option("file", inv_file_coinv, "matrix-group descriptor file")
        ->required();

    std::string catalog_name;
    bool catalog_all = false;
    CLI::App* catalog = app.add_subcommand("catalog", "worked examples with known answers");
    catalog->require_subcommand(1);
    catalog->fallthrough();
    CLI::App* catalog_list_cmd = catalog->add_subcommand("list", "list the catalog");
    catalog_list_cmd->fallthrough();
    CLI::App* catalog_run_cmd =
        catalog->add_subcommand("run", "recompute an entry and compare to known answers");
    catalog_run_cmd->fallthrough();
    catalog_run_cmd->add_option("name", catalog_name, "catalog entry name");
    catalog_run_cmd->add_flag("--all", catalog_all, "run every listed entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (opts.no_cache) set_groebner_cache_enabled(false);

    try {
        if (group_info_cmd->parsed()) return cmd_group_info(opts, group_target);
        if (pair_ktheory_cmd->parsed()) return cmd_pair_ktheory(opts, pair_target_kt);
        if (pair_formality_cmd->parsed()) return cmd_pair_formality(opts, pair_target_fm);
        if (molien_cmd->parsed()) return cmd_invariants(opts, "molien", inv_file_molien);
        if (cst_cmd->parsed()) return cmd_invariants(opts, "cst", inv_file_cst);
        if (coinv_cmd->parsed())
            return cmd_invariants(opts, "coinvariants", inv_file_coinv);
        if (catalog_list_cmd->parsed()) return cmd_catalog_list(opts);
        if (catalog_run_cmd->parsed())
            return cmd_catalog_run(opts, catalog_name, catalog_all);
        std::cerr << "no command selected\n";
        return 2;
    } catch (const uncovered_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 4;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ungraded_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
