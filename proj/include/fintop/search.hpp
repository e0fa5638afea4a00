#pragma once

// Enumeration of operator space and countermodel search.
//
// Three independent enumeration paths cross-check each other:
//   - enumerate_closures: generates exactly the D1..D5 operators from their
//     singleton images (closures here are finitely additive, so the images
//     of singletons determine everything);
//   - enumerate_boundaries: generates exactly the B1..B5 operators from the
//     forced structure op({}) = op(X) = {} and op(A) = op(X\A);
//   - enumerate_topologies: filters raw families of subsets by the
//     closed-set laws, touching no operator code at all.
//
// find_witnesses answers "is there an operator satisfying these axioms and
// failing those?" — exhaustively at n <= 3 (candidate counts are audited),
// with subtree pruning at n = 4.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/setcore.hpp"
#include "fintop/transforms.hpp"

namespace fintop {

struct EnumStats {
    int n = 0;
    std::uint64_t candidates_examined = 0;  ///< complete tables evaluated
    std::uint64_t matches = 0;
    double elapsed_seconds = 0.0;
    bool exhausted = true;  ///< false when a result limit stopped the run early
};

struct SearchSpec {
    int n = 0;
    std::vector<AxiomId> require;  ///< every listed axiom must hold
    std::vector<AxiomId> forbid;   ///< every listed axiom must fail
    std::size_t limit = std::numeric_limits<std::size_t>::max();
};

namespace detail {

inline constexpr int max_enumeration_n = 4;

inline void require_enumerable(int n, const char* what) {
    if (n < 0 || n > max_enumeration_n)
        throw std::invalid_argument(std::string(what) + " is capped at n = " +
                                    std::to_string(max_enumeration_n) + ", got n = " +
                                    std::to_string(n));
}

// One search coordinate: a set of table positions sharing a single value
// (either one code, or a complement pair tied by B5/B5p) and the values
// still allowed for it.
struct Slot {
    std::vector<std::uint32_t> codes;
    std::vector<std::uint32_t> domain;  ///< ascending
};

struct SlotPlan {
    std::vector<Slot> slots;       ///< ordered by smallest code
    std::uint64_t space_size = 1;  ///< product of domain sizes
};

// Structural consequences of the required axioms: D1/B1 pin op({}) = {},
// B5/B5p tie complement pairs (B5p applied at A and X\A already forces
// equality), D5 limits op(A) to supersets of A. Everything else is left to
// candidate evaluation.
inline SlotPlan plan_slots(Universe u, const std::vector<AxiomId>& require) {
    bool fix_empty = false, tie_pairs = false, supersets = false;
    for (AxiomId a : require) {
        if (a == AxiomId::D1 || a == AxiomId::B1) fix_empty = true;
        if (a == AxiomId::B5 || a == AxiomId::B5p) tie_pairs = true;
        if (a == AxiomId::D5) supersets = true;
    }

    SlotPlan plan;
    const std::uint32_t count = u.subset_count();
    const std::uint32_t full = u.full_code();
    for (std::uint32_t a = 0; a < count; ++a) {
        const std::uint32_t partner = full ^ a;
        if (tie_pairs && partner < a) continue;  // already covered by its partner

        Slot slot;
        slot.codes.push_back(a);
        if (tie_pairs && partner != a) slot.codes.push_back(partner);

        std::uint32_t must_contain = 0;
        if (supersets)
            for (std::uint32_t c : slot.codes) must_contain |= c;

        if (fix_empty && a == 0) {
            if (must_contain == 0) slot.domain.push_back(0);
            // else: the value must be {} and contain X at once — empty domain
        } else {
            const std::uint32_t rest = full & ~must_contain;
            std::uint32_t s = 0;
            while (true) {
                slot.domain.push_back(must_contain | s);
                if (s == rest) break;
                s = (s - rest) & rest;
            }
        }

        plan.space_size *= slot.domain.size();
        plan.slots.push_back(std::move(slot));
    }
    return plan;
}

// Visits every complete table in the plan's space in lexicographic table
// order. on_candidate returns false to stop. Returns false if stopped.
template <class OnCandidate>
bool run_exhaustive(Universe u, const SlotPlan& plan, OnCandidate&& on_candidate) {
    for (const Slot& s : plan.slots)
        if (s.domain.empty()) return true;

    std::vector<std::uint32_t> t(u.subset_count(), 0);
    const std::size_t k = plan.slots.size();
    const auto descend = [&](const auto& self, std::size_t i) -> bool {
        if (i == k) return on_candidate(t.data());
        for (std::uint32_t v : plan.slots[i].domain) {
            for (std::uint32_t c : plan.slots[i].codes) t[c] = v;
            if (!self(self, i + 1)) return false;
        }
        return true;
    };
    return descend(descend, 0);
}

// Checks, over the assigned entries only, every instance of the prunable
// axiom families that is fully determined so far. Sound: a completed table
// repeats these checks, so pruning never loses a candidate.
inline bool partial_ok(const std::uint32_t* t, const char* assigned, std::uint32_t count,
                       bool idem, bool subadd, bool mono_d4, bool mono_b4) {
    for (std::uint32_t x = 0; x < count; ++x) {
        if (!assigned[x]) continue;
        if (idem && assigned[t[x]] && (t[t[x]] & ~t[x])) return false;
        for (std::uint32_t y = 0; y < count; ++y) {
            if (!assigned[y]) continue;
            if (subadd && assigned[x | y] && (t[x | y] & ~(t[x] | t[y]))) return false;
            if ((x & ~y) == 0) {
                if (mono_d4 && (t[x] & ~t[y])) return false;
                if (mono_b4 && (t[x] & ~(y | t[y]))) return false;
            }
        }
    }
    return true;
}

// Depth-first variant of run_exhaustive that discards a whole subtree as
// soon as the assigned entries contradict a required axiom. Candidate
// counting covers completed tables only.
template <class OnCandidate>
bool run_pruned(Universe u, const SlotPlan& plan, const std::vector<AxiomId>& require,
                OnCandidate&& on_candidate) {
    for (const Slot& s : plan.slots)
        if (s.domain.empty()) return true;

    bool idem = false, subadd = false, mono_d4 = false, mono_b4 = false;
    for (AxiomId a : require) {
        if (a == AxiomId::D2 || a == AxiomId::B2) idem = true;
        if (a == AxiomId::D3 || a == AxiomId::B3) subadd = true;
        if (a == AxiomId::D4) mono_d4 = true;
        if (a == AxiomId::B4) mono_b4 = true;
    }

    const std::uint32_t count = u.subset_count();
    std::vector<std::uint32_t> t(count, 0);
    std::vector<char> assigned(count, 0);
    const std::size_t k = plan.slots.size();
    const auto descend = [&](const auto& self, std::size_t i) -> bool {
        if (i == k) return on_candidate(t.data());
        const Slot& slot = plan.slots[i];
        for (std::uint32_t v : slot.domain) {
            for (std::uint32_t c : slot.codes) {
                t[c] = v;
                assigned[c] = 1;
            }
            const bool viable =
                partial_ok(t.data(), assigned.data(), count, idem, subadd, mono_d4, mono_b4);
            if (viable && !self(self, i + 1)) return false;
        }
        for (std::uint32_t c : slot.codes) assigned[c] = 0;
        return true;
    };
    return descend(descend, 0);
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Calls the visitor once per operator satisfying D1..D5, in lexicographic
/// table order. A closure with cl({}) = {} is finitely additive, so it is
/// determined by its singleton images s_i = cl({i}); the generator walks
/// exactly the families with i in s_i (D5) and "j in s_i implies s_j
/// inside s_i" (idempotence), which are in bijection with the closures.
template <class Visitor>
EnumStats enumerate_closures(int n, Visitor&& visit) {
    detail::require_enumerable(n, "closure enumeration");
    const auto start = std::chrono::steady_clock::now();
    const Universe u(n);
    EnumStats stats;
    stats.n = n;

    if (n == 0) {
        stats.candidates_examined = 1;
        stats.matches = 1;
        visit(OperatorTable(u, {0}));
        stats.elapsed_seconds = detail::seconds_since(start);
        return stats;
    }

    std::vector<std::vector<std::uint32_t>> domains(n);
    for (int i = 0; i < n; ++i) {
        const std::uint32_t self = std::uint32_t{1} << i;
        const std::uint32_t rest = u.full_code() & ~self;
        std::uint32_t s = 0;
        while (true) {
            domains[i].push_back(self | s);
            if (s == rest) break;
            s = (s - rest) & rest;
        }
    }

    std::vector<std::uint32_t> img(n);
    std::vector<std::uint32_t> t(u.subset_count());
    t[0] = 0;
    const auto descend = [&](const auto& self, int i) -> void {
        if (i == n) {
            ++stats.candidates_examined;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (((img[p] >> q) & 1u) && (img[q] & ~img[p])) return;
            for (std::uint32_t a = 1; a < u.subset_count(); ++a)
                t[a] = t[a & (a - 1)] | img[std::countr_zero(a)];
            ++stats.matches;
            visit(OperatorTable(u, t));
            return;
        }
        for (std::uint32_t v : domains[i]) {
            img[i] = v;
            self(self, i + 1);
        }
    };
    descend(descend, 0);
    stats.elapsed_seconds = detail::seconds_since(start);
    return stats;
}

/// Calls the visitor once per operator satisfying B1..B5, in lexicographic
/// table order. B1 and B5 force op({}) = op(X) = {} and tie complement
/// pairs, leaving one free value per pair (8^3 = 512 raw candidates at
/// n = 3); B2, B3, B4 are then filtered — exhaustively at n <= 3, with
/// subtree pruning at n = 4.
template <class Visitor>
EnumStats enumerate_boundaries(int n, Visitor&& visit) {
    detail::require_enumerable(n, "boundary enumeration");
    const auto start = std::chrono::steady_clock::now();
    const Universe u(n);
    const std::vector<AxiomId> all_beta(beta_axioms.begin(), beta_axioms.end());
    const detail::SlotPlan plan = detail::plan_slots(u, all_beta);
    EnumStats stats;
    stats.n = n;

    const auto on_candidate = [&](const std::uint32_t* t) {
        ++stats.candidates_examined;
        for (AxiomId a : beta_axioms)
            if (!detail::axiom_holds_raw(t, n, a)) return true;
        ++stats.matches;
        visit(OperatorTable(u, std::vector<std::uint32_t>(t, t + u.subset_count())));
        return true;
    };
    if (n <= 3)
        detail::run_exhaustive(u, plan, on_candidate);
    else
        detail::run_pruned(u, plan, all_beta, on_candidate);
    stats.elapsed_seconds = detail::seconds_since(start);
    return stats;
}

/// All families of subsets containing {} and X and closed under pairwise
/// union and intersection, in ascending member-bitmask order. This is the
/// oracle leg of the count triangle: it never inspects an operator table.
inline std::vector<TopologyFamily> enumerate_topologies(int n) {
    detail::require_enumerable(n, "topology enumeration");
    const Universe u(n);
    const std::uint32_t count = u.subset_count();
    std::vector<TopologyFamily> out;
    const std::uint64_t family_count = std::uint64_t{1} << count;
    for (std::uint64_t bits = 0; bits < family_count; ++bits) {
        if (!(bits & 1u)) continue;
        if (!((bits >> (count - 1)) & 1u)) continue;
        bool ok = true;
        for (std::uint32_t a = 0; ok && a < count; ++a) {
            if (!((bits >> a) & 1u)) continue;
            for (std::uint32_t b = a + 1; b < count; ++b) {
                if (!((bits >> b) & 1u)) continue;
                if (!((bits >> (a | b)) & 1u) || !((bits >> (a & b)) & 1u)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.emplace_back(u, bits);
    }
    return out;
}

struct WitnessSearchResult {
    std::vector<OperatorTable> witnesses;
    EnumStats stats;
};

/// Searches for operators satisfying every axiom in spec.require and
/// failing every axiom in spec.forbid, in lexicographic table order, up to
/// spec.limit results. At n <= 3 the forced candidate space is examined
/// completely, so an empty result with stats.exhausted is a proof that no
/// such operator exists at that n, auditable via candidates_examined; at
/// n = 4 subtrees contradicting required axioms are pruned.
inline WitnessSearchResult find_witnesses(const SearchSpec& spec) {
    for (AxiomId r : spec.require)
        for (AxiomId f : spec.forbid)
            if (r == f)
                throw std::invalid_argument(std::string(to_string(r)) +
                                            " is both required and forbidden");
    detail::require_enumerable(spec.n, "witness search");

    const auto start = std::chrono::steady_clock::now();
    const Universe u(spec.n);
    const detail::SlotPlan plan = detail::plan_slots(u, spec.require);

    WitnessSearchResult result;
    result.stats.n = spec.n;
    bool stopped = false;
    const auto on_candidate = [&](const std::uint32_t* t) {
        ++result.stats.candidates_examined;
        for (AxiomId a : spec.require)
            if (!detail::axiom_holds_raw(t, spec.n, a)) return true;
        for (AxiomId a : spec.forbid)
            if (detail::axiom_holds_raw(t, spec.n, a)) return true;
        ++result.stats.matches;
        result.witnesses.emplace_back(u,
                                      std::vector<std::uint32_t>(t, t + u.subset_count()));
        if (result.witnesses.size() >= spec.limit) {
            stopped = true;
            return false;
        }
        return true;
    };
    if (spec.n <= 3)
        detail::run_exhaustive(u, plan, on_candidate);
    else
        detail::run_pruned(u, plan, spec.require, on_candidate);

    result.stats.exhausted = !stopped;
    result.stats.elapsed_seconds = detail::seconds_since(start);
    return result;
}

struct IndependenceResult {
    AxiomId axiom;  ///< the axiom whose independence is being witnessed
    std::optional<OperatorTable> witness;
    int witness_n = -1;              ///< universe size of the witness, -1 if none
    std::vector<EnumStats> attempts; ///< one entry per universe size tried
};

/// Looks for an operator satisfying the other four boundary axioms while
/// failing `axiom`, trying n = 1, 2, ... up to max_n (default: 3, or 4 for
/// B4, whose witness is not guaranteed to appear at 3). An exhausted
/// attempt with zero matches is a nonexistence certificate for that n.
inline IndependenceResult find_independence_witness(AxiomId axiom, int max_n = -1) {
    const bool is_beta = std::find(beta_axioms.begin(), beta_axioms.end(), axiom) !=
                         beta_axioms.end();
    if (!is_beta)
        throw std::invalid_argument("independence search covers the axioms B1..B5");
    if (max_n < 0) max_n = axiom == AxiomId::B4 ? 4 : 3;
    detail::require_enumerable(max_n, "witness search");

    IndependenceResult result{axiom, std::nullopt, -1, {}};
    for (int n = 1; n <= max_n; ++n) {
        SearchSpec spec;
        spec.n = n;
        for (AxiomId a : beta_axioms)
            if (a != axiom) spec.require.push_back(a);
        spec.forbid = {axiom};
        spec.limit = 1;
        WitnessSearchResult found = find_witnesses(spec);
        result.attempts.push_back(found.stats);
        if (!found.witnesses.empty()) {
            result.witness = std::move(found.witnesses.front());
            result.witness_n = n;
            break;
        }
    }
    return result;
}

struct PropositionReport {
    int n = 0;
    std::uint64_t closures = 0;
    std::uint64_t boundaries = 0;
    std::uint64_t topologies = 0;
    bool phi_maps_closures_to_boundaries = true;
    bool psi_maps_boundaries_to_closures = true;
    bool round_trips_identity = true;        ///< psi(phi(cl)) = cl and phi(psi(bd)) = bd
    bool phi_image_equals_boundaries = true;  ///< {phi(cl)} is exactly the boundary set
    bool counts_agree = true;
    std::optional<std::string> counterexample;  ///< first failure, if any

    bool all_confirmed() const {
        return phi_maps_closures_to_boundaries && psi_maps_boundaries_to_closures &&
               round_trips_identity && phi_image_equals_boundaries && counts_agree;
    }
};

/// Machine-checks, by exhaustion over every operator at this n: phi sends
/// closures to boundary operators, psi sends boundary operators to
/// closures, the two maps are mutually inverse, and the resulting
/// bijection makes all the counts agree (closures = boundaries =
/// topologies).
inline PropositionReport verify_propositions(int n) {
    if (n < 0 || n > 3)
        throw std::invalid_argument("proposition verification is capped at n = 3, got n = " +
                                    std::to_string(n));
    PropositionReport report;
    report.n = n;

    const auto note_failure = [&](const char* what, const OperatorTable& op) {
        if (!report.counterexample)
            report.counterexample = std::string(what) + ": " + serialize(op);
    };

    std::vector<std::string> phi_images;
    enumerate_closures(n, [&](const OperatorTable& cl) {
        ++report.closures;
        const OperatorTable bd = phi(cl);
        if (!classify(bd).is_boundary) {
            report.phi_maps_closures_to_boundaries = false;
            note_failure("phi image is not a boundary operator", cl);
        }
        if (!operators_equal(psi(bd), cl)) {
            report.round_trips_identity = false;
            note_failure("psi(phi(cl)) differs from cl", cl);
        }
        phi_images.push_back(serialize(bd));
    });

    std::vector<std::string> boundary_tables;
    enumerate_boundaries(n, [&](const OperatorTable& bd) {
        ++report.boundaries;
        boundary_tables.push_back(serialize(bd));
        if (!classify(psi(bd)).is_closure) {
            report.psi_maps_boundaries_to_closures = false;
            note_failure("psi image is not a closure operator", bd);
        }
        if (!operators_equal(phi(psi(bd)), bd)) {
            report.round_trips_identity = false;
            note_failure("phi(psi(bd)) differs from bd", bd);
        }
    });

    report.topologies = enumerate_topologies(n).size();

    std::sort(phi_images.begin(), phi_images.end());
    std::sort(boundary_tables.begin(), boundary_tables.end());
    report.phi_image_equals_boundaries = phi_images == boundary_tables;
    report.counts_agree =
        report.closures == report.boundaries && report.boundaries == report.topologies;
    return report;
}

}  // namespace fintop
