#pragma once

// Deterministic rendering of check reports, gallery comparisons,
// enumeration results, and independence searches. Text is the
// human-facing default; the JSON builders feed the CLI's --json mode.
// Both formats are byte-stable: same input and options, same output.

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "fintop/axioms.hpp"
#include "fintop/gallery.hpp"
#include "fintop/search.hpp"
#include "fintop/setcore.hpp"
#include "fintop/transforms.hpp"

namespace fintop {

using ordered_json = nlohmann::ordered_json;

struct RenderOptions {
    bool one_based = false;     ///< print elements as 1..n instead of 0..n-1
    bool all_witnesses = false; ///< list every violation, not just the first
};

inline std::string render_element(int element, bool one_based) {
    return std::to_string(one_based ? element + 1 : element);
}

/// "A={0} B={0,2} element 1", with "(in op(A) only)" / "(in op(X\A) only)"
/// appended for the two sides of a failed B5 equality.
inline std::string render_violation(const Violation& v, bool one_based) {
    std::string out = "A=" + v.witness_a.to_string(one_based);
    if (v.witness_b) out += " B=" + v.witness_b->to_string(one_based);
    out += " element " + render_element(v.element, one_based);
    if (v.axiom == AxiomId::B5)
        out += v.side == WitnessSide::left ? " (in op(A) only)" : " (in op(X\\A) only)";
    return out;
}

inline std::string render_check_report(const CheckReport& report, const OperatorTable& op,
                                       const RenderOptions& opt) {
    std::string out = "operator: " + report.operator_name + "\n";
    out += "system: " + std::string(to_string(report.system)) + "\n";
    std::vector<AxiomId> failing_core;
    for (const AxiomStatus& s : report.axioms) {
        out += std::string(to_string(s.axiom)) + ": ";
        if (s.holds()) {
            out += "holds\n";
            continue;
        }
        out += "fails (" + std::to_string(s.violation_count) +
               (s.violation_count == 1 ? " violation)\n" : " violations)\n");
        if (opt.all_witnesses) {
            for (const Violation& v : check_axiom(op, s.axiom))
                out += "  " + render_violation(v, opt.one_based) + "\n";
        } else {
            out += "  " + render_violation(*s.first, opt.one_based) + "\n";
        }
        if (s.axiom != AxiomId::B5p) failing_core.push_back(s.axiom);
    }
    out += "result: " + std::string(to_string(report.system)) + " system ";
    if (failing_core.empty()) {
        out += "holds\n";
    } else {
        out += "fails (";
        for (std::size_t i = 0; i < failing_core.size(); ++i) {
            if (i) out += ' ';
            out += to_string(failing_core[i]);
        }
        out += ")\n";
    }
    return out;
}

inline ordered_json operator_to_json(const OperatorTable& op) {
    ordered_json map = ordered_json::object();
    for (std::uint32_t a = 0; a < op.universe().subset_count(); ++a)
        map[std::to_string(a)] = op.value_code(a);
    return ordered_json{{"n", op.universe().size()}, {"map", std::move(map)}};
}

inline ordered_json family_to_json(const TopologyFamily& family) {
    return ordered_json{{"n", family.universe().size()},
                        {"closed", family.member_codes()}};
}

inline ordered_json violation_to_json(const Violation& v) {
    ordered_json j = ordered_json::object();
    j["witness_a"] = v.witness_a.code();
    if (v.witness_b) j["witness_b"] = v.witness_b->code();
    j["element"] = v.element;
    if (v.axiom == AxiomId::B5) j["side"] = v.side == WitnessSide::left ? "left" : "right";
    return j;
}

inline ordered_json check_report_to_json(const CheckReport& report, const OperatorTable& op,
                                         const RenderOptions& opt) {
    ordered_json axioms = ordered_json::array();
    bool core_holds = true;
    for (const AxiomStatus& s : report.axioms) {
        ordered_json j = ordered_json::object();
        j["axiom"] = std::string(to_string(s.axiom));
        j["holds"] = s.holds();
        if (!s.holds()) {
            j["count"] = s.violation_count;
            const ordered_json first = violation_to_json(*s.first);
            for (auto it = first.begin(); it != first.end(); ++it) j[it.key()] = it.value();
            if (opt.all_witnesses) {
                ordered_json all = ordered_json::array();
                for (const Violation& v : check_axiom(op, s.axiom))
                    all.push_back(violation_to_json(v));
                j["violations"] = std::move(all);
            }
            if (s.axiom != AxiomId::B5p) core_holds = false;
        }
        axioms.push_back(std::move(j));
    }
    return ordered_json{{"operator", operator_to_json(op)},
                        {"system", std::string(to_string(report.system))},
                        {"axioms", std::move(axioms)},
                        {"holds", core_holds}};
}

inline std::string render_axiom_list(const std::vector<AxiomId>& axioms) {
    if (axioms.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        if (i) out += ' ';
        out += to_string(axioms[i]);
    }
    return out;
}

inline std::string render_gallery(const std::vector<VerifiedGalleryEntry>& entries,
                                  const RenderOptions& opt) {
    std::string out;
    for (const VerifiedGalleryEntry& v : entries) {
        const GalleryEntry& e = v.entry;
        out += e.name + " (n=" + std::to_string(e.op.universe().size()) + ")\n";
        out += "  operator: " + serialize(e.op) + "\n";
        if (!e.note.empty()) out += "  note: " + e.note + "\n";
        out += "  claimed to fail: " + render_axiom_list(e.claimed_violations) + "\n";
        out += "  computed to fail: " + render_axiom_list(v.computed_violations) + "\n";
        out += std::string("  status: ") + (v.matches_claim ? "OK" : "DISCREPANCY") + "\n";
        if (!v.matches_claim) {
            for (const AxiomStatus& s : v.report.axioms) {
                if (s.axiom == AxiomId::B5p) continue;
                const bool claimed =
                    std::find(e.claimed_violations.begin(), e.claimed_violations.end(),
                              s.axiom) != e.claimed_violations.end();
                if (!s.holds() && !claimed)
                    out += "    unexpected " + std::string(to_string(s.axiom)) + ": " +
                           render_violation(*s.first, opt.one_based) + "\n";
                if (s.holds() && claimed)
                    out += "    claimed but holds: " + std::string(to_string(s.axiom)) + "\n";
            }
        }
    }
    return out;
}

inline ordered_json gallery_to_json(const std::vector<VerifiedGalleryEntry>& entries,
                                    const RenderOptions& opt) {
    ordered_json out = ordered_json::array();
    for (const VerifiedGalleryEntry& v : entries) {
        ordered_json j = ordered_json::object();
        j["name"] = v.entry.name;
        j["operator"] = operator_to_json(v.entry.op);
        if (!v.entry.note.empty()) j["note"] = v.entry.note;
        ordered_json claimed = ordered_json::array();
        for (AxiomId a : v.entry.claimed_violations) claimed.push_back(std::string(to_string(a)));
        j["claimed"] = std::move(claimed);
        ordered_json computed = ordered_json::array();
        for (AxiomId a : v.computed_violations) computed.push_back(std::string(to_string(a)));
        j["computed"] = std::move(computed);
        j["status"] = v.matches_claim ? "OK" : "DISCREPANCY";
        j["axioms"] = check_report_to_json(v.report, v.entry.op, opt)["axioms"];
        out.push_back(std::move(j));
    }
    return out;
}

inline std::string render_enum_stats(const EnumStats& stats) {
    std::string out = "n=" + std::to_string(stats.n) +
                      " examined=" + std::to_string(stats.candidates_examined) +
                      " matches=" + std::to_string(stats.matches);
    if (stats.exhausted) out += " (exhausted)";
    return out;
}

inline ordered_json enum_stats_to_json(const EnumStats& stats) {
    return ordered_json{{"n", stats.n},
                        {"candidates_examined", stats.candidates_examined},
                        {"matches", stats.matches},
                        {"exhausted", stats.exhausted}};
}

inline std::string render_independence(const std::vector<IndependenceResult>& results,
                                       const RenderOptions& opt) {
    std::string out;
    for (const IndependenceResult& r : results) {
        out += std::string(to_string(r.axiom)) + ": ";
        if (r.witness) {
            out += "witness at n=" + std::to_string(r.witness_n) + "\n";
            out += "  operator: " + serialize(*r.witness) + "\n";
            const std::vector<Violation> violations = check_axiom(*r.witness, r.axiom);
            if (!violations.empty())
                out += "  fails " + std::string(to_string(r.axiom)) + ": " +
                       render_violation(violations.front(), opt.one_based) + "\n";
        } else {
            const int last = r.attempts.empty() ? 0 : r.attempts.back().n;
            out += "no witness up to n=" + std::to_string(last) + "\n";
        }
        out += "  attempts:";
        for (std::size_t i = 0; i < r.attempts.size(); ++i)
            out += std::string(i ? ";" : "") + " " + render_enum_stats(r.attempts[i]);
        out += "\n";
    }
    return out;
}

inline ordered_json independence_to_json(const std::vector<IndependenceResult>& results) {
    ordered_json out = ordered_json::array();
    for (const IndependenceResult& r : results) {
        ordered_json j = ordered_json::object();
        j["axiom"] = std::string(to_string(r.axiom));
        if (r.witness) {
            j["witness_n"] = r.witness_n;
            j["witness"] = operator_to_json(*r.witness);
        } else {
            j["witness_n"] = nullptr;
        }
        ordered_json attempts = ordered_json::array();
        for (const EnumStats& s : r.attempts) attempts.push_back(enum_stats_to_json(s));
        j["attempts"] = std::move(attempts);
        out.push_back(std::move(j));
    }
    return out;
}

inline std::string render_proposition_report(const PropositionReport& r) {
    std::string out = "n=" + std::to_string(r.n) + ": closures=" + std::to_string(r.closures) +
                      " boundaries=" + std::to_string(r.boundaries) +
                      " topologies=" + std::to_string(r.topologies);
    if (r.all_confirmed()) return out + " confirmed";
    out += " FAILED";
    if (r.counterexample) out += " (" + *r.counterexample + ")";
    return out;
}

inline ordered_json proposition_report_to_json(const PropositionReport& r) {
    ordered_json j{{"n", r.n},
                   {"closures", r.closures},
                   {"boundaries", r.boundaries},
                   {"topologies", r.topologies},
                   {"phi_maps_closures_to_boundaries", r.phi_maps_closures_to_boundaries},
                   {"psi_maps_boundaries_to_closures", r.psi_maps_boundaries_to_closures},
                   {"round_trips_identity", r.round_trips_identity},
                   {"phi_image_equals_boundaries", r.phi_image_equals_boundaries},
                   {"counts_agree", r.counts_agree}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

}  // namespace fintop
