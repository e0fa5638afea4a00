// Command-line surface for the operator toolkit.
//
// Subcommands: check, convert, gallery, enumerate, independence,
// verify-paper. Exit codes, used consistently everywhere:
//   0  success / the requested property holds
//   1  semantic failure (violations found, oracle mismatch, missing witness,
//      conversion precondition not met)
//   2  input error (unreadable or malformed file, bad arguments, size caps)
//   3  claim discrepancy (computed facts disagree with a published claim)
//
// All output is deterministic: the same invocation always produces the
// same bytes.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fintop/axioms.hpp"
#include "fintop/gallery.hpp"
#include "fintop/report.hpp"
#include "fintop/search.hpp"
#include "fintop/setcore.hpp"
#include "fintop/transforms.hpp"

namespace {

using namespace fintop;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_check(const std::string& path, const std::string& system, const RenderOptions& opt,
              bool json) {
    const OperatorTable op = parse_operator(read_file(path));
    std::vector<AxiomSystem> systems;
    if (system == "delta" || system == "both") systems.push_back(AxiomSystem::delta);
    if (system == "beta" || system == "both") systems.push_back(AxiomSystem::beta);

    bool all_hold = true;
    if (json) {
        ordered_json out = ordered_json::array();
        for (AxiomSystem sys : systems) {
            const CheckReport report = check_system(op, sys);
            all_hold = all_hold && report.system_holds();
            out.push_back(check_report_to_json(report, op, opt));
        }
        std::cout << out.dump() << "\n";
    } else {
        bool first = true;
        for (AxiomSystem sys : systems) {
            const CheckReport report = check_system(op, sys);
            all_hold = all_hold && report.system_holds();
            if (!first) std::cout << "\n";
            first = false;
            std::cout << render_check_report(report, op, opt);
        }
    }
    return all_hold ? 0 : 1;
}

int run_convert(const std::string& path, bool to_phi, bool to_psi, bool to_closed) {
    if (static_cast<int>(to_phi) + static_cast<int>(to_psi) + static_cast<int>(to_closed) !=
        1) {
        std::cerr << "choose exactly one of --phi, --psi, --closed-sets\n";
        return 2;
    }
    const OperatorTable op = parse_operator(read_file(path));
    if (to_phi) {
        std::cout << serialize(phi(op)) << "\n";
        return 0;
    }
    if (to_psi) {
        std::cout << serialize(psi(op)) << "\n";
        return 0;
    }
    try {
        std::cout << serialize(closed_sets(op)) << "\n";
    } catch (const not_a_closure& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_gallery(const RenderOptions& opt, bool json) {
    const std::vector<VerifiedGalleryEntry> verified = verify_gallery();
    if (json)
        std::cout << gallery_to_json(verified, opt).dump() << "\n";
    else
        std::cout << render_gallery(verified, opt);
    for (const VerifiedGalleryEntry& v : verified)
        if (!v.matches_claim) return 3;
    return 0;
}

int run_enumerate(int n, const std::string& what, bool count_only, bool json) {
    std::vector<std::string> items;
    std::uint64_t count = 0;
    std::uint64_t oracle = 0;
    const bool keep_items = !count_only;

    if (what == "closures" || what == "boundaries") {
        const auto collect = [&](const OperatorTable& op) {
            if (keep_items) items.push_back(serialize(op));
        };
        const EnumStats stats = what == "closures" ? enumerate_closures(n, collect)
                                                   : enumerate_boundaries(n, collect);
        count = stats.matches;
        oracle = enumerate_topologies(n).size();
    } else {
        const std::vector<TopologyFamily> families = enumerate_topologies(n);
        count = families.size();
        if (keep_items)
            for (const TopologyFamily& f : families) items.push_back(serialize(f));
        oracle = enumerate_closures(n, [](const OperatorTable&) {}).matches;
    }

    if (json) {
        ordered_json out{{"n", n}, {"what", what}, {"count", count}, {"oracle", oracle}};
        if (keep_items) out["items"] = items;
        std::cout << out.dump() << "\n";
    } else {
        for (const std::string& item : items) std::cout << item << "\n";
        std::cout << count << " (oracle: " << oracle << ")\n";
    }
    if (count != oracle) {
        std::cerr << "count mismatch: enumeration found " << count
                  << " but the cross-check expects " << oracle << "\n";
        return 1;
    }
    return 0;
}

int run_independence(const std::string& axiom_name, int max_n, const RenderOptions& opt,
                     bool json) {
    std::vector<AxiomId> targets;
    if (axiom_name.empty()) {
        targets.assign(beta_axioms.begin(), beta_axioms.end());
    } else {
        const std::optional<AxiomId> parsed = parse_axiom_id(axiom_name);
        if (!parsed || std::find(beta_axioms.begin(), beta_axioms.end(), *parsed) ==
                           beta_axioms.end()) {
            std::cerr << "--axiom must be one of B1, B2, B3, B4, B5\n";
            return 2;
        }
        targets.push_back(*parsed);
    }

    std::vector<IndependenceResult> results;
    results.reserve(targets.size());
    for (AxiomId a : targets) results.push_back(find_independence_witness(a, max_n));

    if (json)
        std::cout << independence_to_json(results).dump() << "\n";
    else
        std::cout << render_independence(results, opt);
    for (const IndependenceResult& r : results)
        if (!r.witness) return 1;
    return 0;
}

int run_verify_paper(int max_n, const RenderOptions& opt, bool json) {
    if (max_n < 0 || max_n > 4) {
        std::cerr << "--max-n must be between 0 and 4\n";
        return 2;
    }

    std::vector<PropositionReport> props;
    for (int n = 0; n <= std::min(max_n, 3); ++n) props.push_back(verify_propositions(n));
    bool props_ok = true;
    for (const PropositionReport& p : props) props_ok = props_ok && p.all_confirmed();

    std::optional<std::uint64_t> n4_closures, n4_boundaries, n4_topologies;
    if (max_n >= 4) {
        n4_closures = enumerate_closures(4, [](const OperatorTable&) {}).matches;
        n4_boundaries = enumerate_boundaries(4, [](const OperatorTable&) {}).matches;
        n4_topologies = enumerate_topologies(4).size();
        props_ok = props_ok && *n4_closures == *n4_boundaries &&
                   *n4_boundaries == *n4_topologies;
    }

    const std::vector<VerifiedGalleryEntry> gallery = verify_gallery();
    std::vector<std::string> discrepancies;
    for (const VerifiedGalleryEntry& v : gallery)
        if (!v.matches_claim)
            discrepancies.push_back(v.entry.name + ": claimed " +
                                    render_axiom_list(v.entry.claimed_violations) +
                                    ", computed " +
                                    render_axiom_list(v.computed_violations));

    std::vector<IndependenceResult> independence;
    for (AxiomId a : beta_axioms) independence.push_back(find_independence_witness(a));
    bool independence_ok = true;
    for (const IndependenceResult& r : independence)
        independence_ok = independence_ok && r.witness.has_value();

    if (!props_ok) discrepancies.push_back("operator correspondence checks failed");
    if (!independence_ok)
        discrepancies.push_back("independence witness missing for some axiom");
    const bool confirmed = discrepancies.empty();

    if (json) {
        ordered_json out = ordered_json::object();
        out["max_n"] = max_n;
        ordered_json prop_list = ordered_json::array();
        for (const PropositionReport& p : props)
            prop_list.push_back(proposition_report_to_json(p));
        out["propositions"] = std::move(prop_list);
        if (n4_closures)
            out["count_triangle_n4"] = ordered_json{{"closures", *n4_closures},
                                                    {"boundaries", *n4_boundaries},
                                                    {"topologies", *n4_topologies}};
        out["gallery"] = gallery_to_json(gallery, opt);
        out["independence"] = independence_to_json(independence);
        out["discrepancies"] = discrepancies;
        out["confirmed"] = confirmed;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "== propositions ==\n";
        for (const PropositionReport& p : props)
            std::cout << render_proposition_report(p) << "\n";
        if (n4_closures)
            std::cout << "n=4: closures=" << *n4_closures << " boundaries=" << *n4_boundaries
                      << " topologies=" << *n4_topologies << " (counts only)\n";
        std::cout << "== gallery ==\n";
        std::cout << render_gallery(gallery, opt);
        std::cout << "== independence ==\n";
        std::cout << render_independence(independence, opt);
        std::cout << "== discrepancies ==\n";
        if (discrepancies.empty())
            std::cout << "none\n";
        else
            for (const std::string& d : discrepancies) std::cout << d << "\n";
        if (confirmed)
            std::cout << "RESULT: all claims confirmed\n";
        else
            std::cout << "RESULT: " << discrepancies.size()
                      << (discrepancies.size() == 1 ? " discrepancy found\n"
                                                    : " discrepancies found\n");
    }
    return confirmed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closure/boundary operator toolkit over finite universes"};
    app.require_subcommand(1);

    std::string check_file, check_sys = "both";
    bool check_json = false, check_all = false, check_one = false;
    CLI::App* check = app.add_subcommand("check", "evaluate axioms against an operator file");
    check->add_option("file", check_file, "operator file (JSON-shaped, see README)")
        ->required();
    check->add_option("--system", check_sys, "delta, beta, or both (default both)")
        ->check(CLI::IsMember({"delta", "beta", "both"}));
    check->add_flag("--json", check_json, "machine-readable output");
    check->add_flag("--all-witnesses", check_all, "list every violation, not just the first");
    check->add_flag("--one-based", check_one, "print elements as 1..n");

    std::string convert_file;
    bool conv_phi = false, conv_psi = false, conv_closed = false;
    CLI::App* convert = app.add_subcommand("convert", "transform an operator file");
    convert->add_option("file", convert_file, "operator file")->required();
    convert->add_flag("--phi", conv_phi, "A -> op(A) & op(X\\A) (boundary from closure)");
    convert->add_flag("--psi", conv_psi, "A -> A | op(A) (closure from boundary)");
    convert->add_flag("--closed-sets", conv_closed,
                      "fixed-point family of a closure operator");

    bool gal_json = false, gal_one = false;
    CLI::App* gallery = app.add_subcommand(
        "gallery", "show the named example operators and verify their claims");
    gallery->add_flag("--json", gal_json, "machine-readable output");
    gallery->add_flag("--one-based", gal_one, "print elements as 1..n");

    int enum_n = 0;
    std::string enum_what;
    bool enum_count_only = false, enum_json = false;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "enumerate operators or topologies at a given size");
    enumerate->add_option("--n", enum_n, "universe size")->required();
    enumerate->add_option("--what", enum_what, "closures, boundaries, or topologies")
        ->required()
        ->check(CLI::IsMember({"closures", "boundaries", "topologies"}));
    enumerate->add_flag("--count-only", enum_count_only, "print the count line only");
    enumerate->add_flag("--json", enum_json, "machine-readable output");

    std::string ind_axiom;
    int ind_max_n = -1;
    bool ind_json = false, ind_one = false;
    CLI::App* independence = app.add_subcommand(
        "independence", "search for operators failing one axiom and satisfying the rest");
    independence->add_option("--axiom", ind_axiom, "B1..B5 (default: all five)");
    independence->add_option("--max-n", ind_max_n,
                             "largest universe size to try (default 3; 4 for B4)");
    independence->add_flag("--json", ind_json, "machine-readable output");
    independence->add_flag("--one-based", ind_one, "print elements as 1..n");

    int vp_max_n = 3;
    bool vp_json = false, vp_one = false;
    CLI::App* verify_paper = app.add_subcommand(
        "verify-paper", "re-derive every published claim and report discrepancies");
    verify_paper->add_option("--max-n", vp_max_n,
                             "verify correspondences exhaustively up to this size "
                             "(default 3; 4 adds a count-only cross-check)");
    verify_paper->add_flag("--json", vp_json, "machine-readable output");
    verify_paper->add_flag("--one-based", vp_one, "print elements as 1..n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return run_check(check_file, check_sys, {check_one, check_all}, check_json);
        if (convert->parsed()) return run_convert(convert_file, conv_phi, conv_psi, conv_closed);
        if (gallery->parsed()) return run_gallery({gal_one, false}, gal_json);
        if (enumerate->parsed())
            return run_enumerate(enum_n, enum_what, enum_count_only, enum_json);
        if (independence->parsed())
            return run_independence(ind_axiom, ind_max_n, {ind_one, false}, ind_json);
        if (verify_paper->parsed()) return run_verify_paper(vp_max_n, {vp_one, false}, vp_json);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
