#pragma once

// Axiom checkers for closure-style (D1..D5) and boundary-style (B1..B5, B5p)
// operator laws, with concrete witnesses for every failure.
//
//   D1  op({}) = {}                      B1  op({}) = {}
//   D2  op(op(A)) <= op(A)               B2  op(op(A)) <= op(A)
//   D3  op(A|B) <= op(A)|op(B)           B3  op(A|B) <= op(A)|op(B)
//   D4  A<=B  =>  op(A) <= op(B)         B4  A<=B  =>  op(A) <= B|op(B)
//   D5  A <= op(A)                       B5  op(A) = op(X\A)
//                                        B5p op(A) <= op(X\A)
//
// ("<=" is set inclusion, "|" union, "X\A" complement.) An operator is a
// *closure* when D1..D5 all hold and a *boundary* when B1..B5 all hold.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fintop/setcore.hpp"

namespace fintop {

enum class AxiomId : std::uint8_t { D1, D2, D3, D4, D5, B1, B2, B3, B4, B5, B5p };

enum class AxiomSystem : std::uint8_t { delta, beta };

inline constexpr std::array<AxiomId, 5> delta_axioms{AxiomId::D1, AxiomId::D2, AxiomId::D3,
                                                     AxiomId::D4, AxiomId::D5};
inline constexpr std::array<AxiomId, 5> beta_axioms{AxiomId::B1, AxiomId::B2, AxiomId::B3,
                                                    AxiomId::B4, AxiomId::B5};

inline std::string_view to_string(AxiomId a) {
    switch (a) {
    case AxiomId::D1: return "D1";
    case AxiomId::D2: return "D2";
    case AxiomId::D3: return "D3";
    case AxiomId::D4: return "D4";
    case AxiomId::D5: return "D5";
    case AxiomId::B1: return "B1";
    case AxiomId::B2: return "B2";
    case AxiomId::B3: return "B3";
    case AxiomId::B4: return "B4";
    case AxiomId::B5: return "B5";
    case AxiomId::B5p: return "B5p";
    }
    return "?";
}

inline std::string_view to_string(AxiomSystem s) {
    return s == AxiomSystem::delta ? "delta" : "beta";
}

inline std::optional<AxiomId> parse_axiom_id(std::string_view s) {
    for (AxiomId a : {AxiomId::D1, AxiomId::D2, AxiomId::D3, AxiomId::D4, AxiomId::D5,
                      AxiomId::B1, AxiomId::B2, AxiomId::B3, AxiomId::B4, AxiomId::B5,
                      AxiomId::B5p})
        if (s == to_string(a)) return a;
    if (s == "B5'") return AxiomId::B5p;
    return std::nullopt;
}

/// ASCII rendering of the axiom body, for reports.
inline std::string_view axiom_formula(AxiomId a) {
    switch (a) {
    case AxiomId::D1:
    case AxiomId::B1: return "op({})={}";
    case AxiomId::D2:
    case AxiomId::B2: return "op(op(A))<=op(A)";
    case AxiomId::D3:
    case AxiomId::B3: return "op(A|B)<=op(A)|op(B)";
    case AxiomId::D4: return "A<=B => op(A)<=op(B)";
    case AxiomId::D5: return "A<=op(A)";
    case AxiomId::B4: return "A<=B => op(A)<=B|op(B)";
    case AxiomId::B5: return "op(A)=op(X\\A)";
    case AxiomId::B5p: return "op(A)<=op(X\\A)";
    }
    return "?";
}

/// True when the axiom quantifies two sets (its violations carry witness_b).
inline bool axiom_is_binary(AxiomId a) {
    return a == AxiomId::D3 || a == AxiomId::D4 || a == AxiomId::B3 || a == AxiomId::B4;
}

/// Which side of a failed equality the witness element sits on. Inclusion
/// axioms always report `left` (an element of the left side missing from the
/// right); only B5 can report `right`.
enum class WitnessSide : std::uint8_t { left, right };

/// One failed axiom instance: the quantified set(s) at which the body fails
/// and the smallest element witnessing the failure. Re-evaluating the body
/// at (witness_a, witness_b) always reproduces the failure.
struct Violation {
    AxiomId axiom;
    SubsetMask witness_a;
    std::optional<SubsetMask> witness_b;
    int element;
    WitnessSide side;
};

namespace detail {

inline constexpr std::uint32_t no_witness_b = ~std::uint32_t{0};

// Streams every violation of `ax` over a raw table (2^n entries, entry =
// image code) to sink(a, b, element, side), in lexicographic (a, b) order
// with b = no_witness_b for one-set axioms. For each failing instance the
// element is the smallest witness. The sink returns false to stop early.
template <class Sink>
void scan_axiom(const std::uint32_t* t, int n, AxiomId ax, Sink&& sink) {
    const std::uint32_t count = std::uint32_t{1} << n;
    const std::uint32_t full = count - 1;

    switch (ax) {
    case AxiomId::D1:
    case AxiomId::B1:
        if (t[0] != 0) sink(0, no_witness_b, std::countr_zero(t[0]), WitnessSide::left);
        return;

    case AxiomId::D2:
    case AxiomId::B2:
        for (std::uint32_t a = 0; a < count; ++a) {
            const std::uint32_t diff = t[t[a]] & ~t[a];
            if (diff && !sink(a, no_witness_b, std::countr_zero(diff), WitnessSide::left))
                return;
        }
        return;

    case AxiomId::D3:
    case AxiomId::B3:
        for (std::uint32_t a = 0; a < count; ++a)
            for (std::uint32_t b = 0; b < count; ++b) {
                const std::uint32_t diff = t[a | b] & ~(t[a] | t[b]);
                if (diff && !sink(a, b, std::countr_zero(diff), WitnessSide::left)) return;
            }
        return;

    case AxiomId::D4:
    case AxiomId::B4:
        // Only pairs with A <= B can violate the implication; enumerate the
        // supersets of each A directly (3^n pairs instead of 4^n).
        for (std::uint32_t a = 0; a < count; ++a) {
            const std::uint32_t rest = full & ~a;
            std::uint32_t s = 0;
            while (true) {
                const std::uint32_t b = a | s;
                const std::uint32_t bound = ax == AxiomId::D4 ? t[b] : (b | t[b]);
                const std::uint32_t diff = t[a] & ~bound;
                if (diff && !sink(a, b, std::countr_zero(diff), WitnessSide::left)) return;
                if (s == rest) break;
                s = (s - rest) & rest;
            }
        }
        return;

    case AxiomId::D5:
        for (std::uint32_t a = 0; a < count; ++a) {
            const std::uint32_t diff = a & ~t[a];
            if (diff && !sink(a, no_witness_b, std::countr_zero(diff), WitnessSide::left))
                return;
        }
        return;

    case AxiomId::B5:
        for (std::uint32_t a = 0; a < count; ++a) {
            const std::uint32_t diff = t[a] ^ t[full ^ a];
            if (diff) {
                const int e = std::countr_zero(diff);
                const WitnessSide side =
                    ((t[a] >> e) & 1u) ? WitnessSide::left : WitnessSide::right;
                if (!sink(a, no_witness_b, e, side)) return;
            }
        }
        return;

    case AxiomId::B5p:
        for (std::uint32_t a = 0; a < count; ++a) {
            const std::uint32_t diff = t[a] & ~t[full ^ a];
            if (diff && !sink(a, no_witness_b, std::countr_zero(diff), WitnessSide::left))
                return;
        }
        return;
    }
}

inline bool axiom_holds_raw(const std::uint32_t* t, int n, AxiomId ax) {
    bool ok = true;
    scan_axiom(t, n, ax, [&](std::uint32_t, std::uint32_t, int, WitnessSide) {
        ok = false;
        return false;
    });
    return ok;
}

}  // namespace detail

/// All violations of `ax`, in lexicographic order of (code(A), code(B)).
/// Empty result means the axiom holds.
inline std::vector<Violation> check_axiom(const OperatorTable& op, AxiomId ax) {
    std::vector<Violation> out;
    const Universe u = op.universe();
    detail::scan_axiom(op.raw().data(), u.size(), ax,
                       [&](std::uint32_t a, std::uint32_t b, int element, WitnessSide side) {
                           out.push_back(Violation{
                               ax,
                               SubsetMask(u, a),
                               b == detail::no_witness_b
                                   ? std::nullopt
                                   : std::optional<SubsetMask>(SubsetMask(u, b)),
                               element,
                               side,
                           });
                           return true;
                       });
    return out;
}

/// Short-circuit form of check_axiom (stops at the first violation).
inline bool axiom_holds(const OperatorTable& op, AxiomId ax) {
    return detail::axiom_holds_raw(op.raw().data(), op.universe().size(), ax);
}

/// Per-axiom outcome: the first violation (lexicographically) plus the total
/// count. Full lists can be quadratic in 2^n; check_axiom() recovers them.
struct AxiomStatus {
    AxiomId axiom;
    std::size_t violation_count = 0;
    std::optional<Violation> first;

    bool holds() const noexcept { return violation_count == 0; }
};

struct CheckReport {
    std::string operator_name;  ///< serialized form, or a gallery name
    AxiomSystem system;
    std::vector<AxiomStatus> axioms;  ///< delta: D1..D5; beta: B1..B5 plus B5p

    const AxiomStatus& status(AxiomId a) const {
        for (const AxiomStatus& s : axioms)
            if (s.axiom == a) return s;
        throw std::out_of_range("axiom not covered by this report");
    }

    /// Whether the system's defining axioms all hold. B5p is reported for
    /// information but is not part of the beta system proper.
    bool system_holds() const {
        for (const AxiomStatus& s : axioms)
            if (s.axiom != AxiomId::B5p && !s.holds()) return false;
        return true;
    }
};

inline AxiomStatus check_axiom_status(const OperatorTable& op, AxiomId ax) {
    AxiomStatus st{ax, 0, std::nullopt};
    const Universe u = op.universe();
    detail::scan_axiom(op.raw().data(), u.size(), ax,
                       [&](std::uint32_t a, std::uint32_t b, int element, WitnessSide side) {
                           if (!st.first)
                               st.first = Violation{
                                   ax,
                                   SubsetMask(u, a),
                                   b == detail::no_witness_b
                                       ? std::nullopt
                                       : std::optional<SubsetMask>(SubsetMask(u, b)),
                                   element,
                                   side,
                               };
                           ++st.violation_count;
                           return true;
                       });
    return st;
}

/// Evaluates every axiom of the system (plus B5p when system = beta).
inline CheckReport check_system(const OperatorTable& op, AxiomSystem system) {
    CheckReport report{serialize(op), system, {}};
    if (system == AxiomSystem::delta) {
        for (AxiomId a : delta_axioms) report.axioms.push_back(check_axiom_status(op, a));
    } else {
        for (AxiomId a : beta_axioms) report.axioms.push_back(check_axiom_status(op, a));
        report.axioms.push_back(check_axiom_status(op, AxiomId::B5p));
    }
    return report;
}

struct Classification {
    bool is_closure;
    bool is_boundary;
};

/// is_closure <=> D1..D5 all hold; is_boundary <=> B1..B5 all hold.
inline Classification classify(const OperatorTable& op) {
    const std::uint32_t* t = op.raw().data();
    const int n = op.universe().size();
    Classification c{true, true};
    for (AxiomId a : delta_axioms)
        if (!detail::axiom_holds_raw(t, n, a)) {
            c.is_closure = false;
            break;
        }
    for (AxiomId a : beta_axioms)
        if (!detail::axiom_holds_raw(t, n, a)) {
            c.is_boundary = false;
            break;
        }
    return c;
}

}  // namespace fintop
