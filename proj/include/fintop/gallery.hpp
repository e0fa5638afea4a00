#pragma once

// The named example operators: five classic countermodels d1..d5, each
// published as failing exactly one of B1..B5 while satisfying the other
// four, plus the discrete and indiscrete closures used throughout the
// tests. Tables originally stated with 1-based element names {1,2,3} are
// renamed here to 0-based {0,1,2} (i -> i-1).
//
// The claimed violation sets are stored verbatim as published; computed
// violation sets always come from brute force, so verify_gallery() can
// flag any mismatch instead of silently repeating a claim.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/setcore.hpp"

namespace fintop {

/// Maps every subset, including {}, to X. Fails B1 and nothing else.
inline OperatorTable make_d1(int n) {
    if (n < 1) throw std::invalid_argument("constant-X operator needs n >= 1");
    Universe u(n);
    return OperatorTable::constant(u, SubsetMask::whole(u));
}

/// Unit-distance window operator on the line {0,..,n-1}:
///   op(A) = {x : dist(x,A) = 1 or dist(x,X\A) = 1}
/// with dist(x,{}) = +infinity, distances |x-e| measured inside the window.
/// Adapted from an unbounded line of points to a finite window; B1, B3,
/// B4, B5 still hold (the formula is symmetric in A and X\A) and B2 still
/// fails for every n >= 3, e.g. op(op({0})) = op({0,1}) contains 2.
inline OperatorTable make_d2(int n) {
    if (n < 3) throw std::invalid_argument("window operator needs n >= 3 for its B2 failure");
    Universe u(n);
    const auto dist_is_one = [n](int x, std::uint32_t s) {
        int best = -1;
        for (int e = 0; e < n; ++e)
            if ((s >> e) & 1u) {
                const int d = std::abs(x - e);
                if (best < 0 || d < best) best = d;
            }
        return best == 1;
    };
    return OperatorTable::from_function(u, [&](SubsetMask a) {
        std::uint32_t bits = 0;
        for (int x = 0; x < n; ++x)
            if (dist_is_one(x, a.code()) || dist_is_one(x, u.full_code() ^ a.code()))
                bits |= std::uint32_t{1} << x;
        return SubsetMask(u, bits);
    });
}

/// Case-table operator on three elements: {} and X map to {}, singletons
/// stay fixed, and every two-element set maps to its complement. The
/// original case list prints the doubleton {1,2} twice where {1,3} (here
/// {0,2}) must be meant; mapping every doubleton to its complement is the
/// only total reading consistent with B5. Fails B3 and nothing else.
inline OperatorTable make_d3() {
    return OperatorTable(Universe(3), {0, 1, 2, 4, 4, 2, 1, 0});
}

/// Case-table operator on three elements, kept exactly as published:
///   {} , X     -> {}
///   {0}, {1,2} -> {1}
///   {1}, {0,2} -> {0}
///   {2}, {0,1} -> {0,1}
/// Published as failing B4 only; brute force is expected to find B2
/// failing as well (op(op({0})) = op({1}) = {0}, not a subset of {1}),
/// which verify_gallery() reports as a discrepancy.
inline OperatorTable make_d4() {
    return OperatorTable(Universe(3), {0, 2, 1, 3, 3, 1, 2, 0});
}

/// Adds one fixed element x0 to every nonempty set: op({}) = {},
/// op(A) = A | {x0} otherwise. Satisfies B1..B4 at every n >= 1 and fails
/// B5 (and B5p); A = X is always among the B5 witnesses.
inline OperatorTable make_d5(int n, int x0) {
    if (n < 1) throw std::invalid_argument("fixed-point operator needs n >= 1");
    Universe u(n);
    if (x0 < 0 || x0 >= n)
        throw std::invalid_argument("x0 = " + std::to_string(x0) +
                                    " is not an element of a universe of size " +
                                    std::to_string(n));
    const std::uint32_t point = std::uint32_t{1} << x0;
    return OperatorTable::from_function(u, [&](SubsetMask a) {
        return a.is_empty() ? a : SubsetMask(a.universe(), a.code() | point);
    });
}

/// Discrete-topology closure: every set is closed, cl(A) = A.
inline OperatorTable make_discrete(int n) { return OperatorTable::identity(Universe(n)); }

/// Indiscrete-topology closure: only {} and X are closed, cl(A) = X for
/// nonempty A.
inline OperatorTable make_indiscrete(int n) {
    Universe u(n);
    return OperatorTable::from_function(
        u, [&](SubsetMask a) { return a.is_empty() ? a : SubsetMask::whole(u); });
}

struct GalleryEntry {
    std::string name;
    OperatorTable op;
    std::vector<AxiomId> claimed_violations;  ///< among B1..B5, as published
    std::string note;
};

/// The default entries shown by the `gallery` CLI subcommand.
inline std::vector<GalleryEntry> standard_gallery() {
    std::vector<GalleryEntry> g;
    g.push_back({"d1", make_d1(3), {AxiomId::B1}, "maps every set, including {}, to X"});
    g.push_back({"d2", make_d2(4), {AxiomId::B2},
                 "x is in the image iff its distance to A or to X\\A is exactly 1; "
                 "finite-window adaptation of an unbounded original"});
    g.push_back({"d3", make_d3(), {AxiomId::B3},
                 "singletons fixed, doubletons mapped to their complements; doubleton case "
                 "completed where the original prints {1,2} twice"});
    g.push_back({"d4", make_d4(), {AxiomId::B4},
                 "case table kept exactly as published; brute force also finds B2 failing"});
    g.push_back({"d5", make_d5(3, 0), {AxiomId::B5}, "adds the fixed element x0 = 0 to every "
                                                     "nonempty set"});
    g.push_back({"discrete", make_discrete(3), {AxiomId::B5},
                 "closure operator (every set closed); closures satisfy B1..B4 and fail B5"});
    g.push_back({"indiscrete", make_indiscrete(3), {AxiomId::B5},
                 "closure operator (only {} and X closed); closures satisfy B1..B4 and fail "
                 "B5"});
    return g;
}

struct VerifiedGalleryEntry {
    GalleryEntry entry;
    CheckReport report;                        ///< full beta-system check
    std::vector<AxiomId> computed_violations;  ///< failing among B1..B5 and B5p
    bool matches_claim;                        ///< computed == claimed over B1..B5 only
};

inline VerifiedGalleryEntry verify_entry(const GalleryEntry& e) {
    VerifiedGalleryEntry v{e, check_system(e.op, AxiomSystem::beta), {}, false};
    for (const AxiomStatus& s : v.report.axioms)
        if (!s.holds()) v.computed_violations.push_back(s.axiom);

    std::vector<AxiomId> computed_core;
    for (AxiomId a : v.computed_violations)
        if (a != AxiomId::B5p) computed_core.push_back(a);
    std::vector<AxiomId> claimed = e.claimed_violations;
    const auto by_id = [](AxiomId x, AxiomId y) {
        return static_cast<int>(x) < static_cast<int>(y);
    };
    std::sort(claimed.begin(), claimed.end(), by_id);
    std::sort(computed_core.begin(), computed_core.end(), by_id);
    v.matches_claim = computed_core == claimed;
    return v;
}

/// Brute-forces every entry and compares against its published claim.
/// B5p is reported informationally and never counts as a discrepancy.
inline std::vector<VerifiedGalleryEntry> verify_gallery(
    const std::vector<GalleryEntry>& entries = standard_gallery()) {
    std::vector<VerifiedGalleryEntry> out;
    out.reserve(entries.size());
    for (const GalleryEntry& e : entries) out.push_back(verify_entry(e));
    return out;
}

}  // namespace fintop
