#pragma once

// The two constructions connecting closure and boundary operators:
//
//   phi(op)(A) = op(A) & op(X\A)     boundary from closure
//   psi(op)(A) = A | op(A)           closure from boundary
//
// Over any finite universe these restrict to mutually inverse bijections
// between the closure operators (D1..D5) and the boundary operators
// (B1..B5). The module also models the induced topology as the family of
// closed sets, and rebuilds the closure operator from that family.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/setcore.hpp"

namespace fintop {

/// A |-> op(A) & op(X\A). Maps closures to boundaries; defined on every
/// operator, and the result satisfies op(A) = op(X\A) by construction.
inline OperatorTable phi(const OperatorTable& op) {
    const Universe u = op.universe();
    const std::uint32_t full = u.full_code();
    std::vector<std::uint32_t> t(u.subset_count());
    for (std::uint32_t a = 0; a < u.subset_count(); ++a)
        t[a] = op.value_code(a) & op.value_code(full ^ a);
    return OperatorTable(u, std::move(t));
}

/// A |-> A | op(A). Maps boundaries to closures; defined on every operator.
inline OperatorTable psi(const OperatorTable& op) {
    const Universe u = op.universe();
    std::vector<std::uint32_t> t(u.subset_count());
    for (std::uint32_t a = 0; a < u.subset_count(); ++a) t[a] = a | op.value_code(a);
    return OperatorTable(u, std::move(t));
}

class not_a_closure : public std::runtime_error {
public:
    not_a_closure(AxiomId failed, std::string message)
        : std::runtime_error(std::move(message)), failed_(failed) {}

    AxiomId failed_axiom() const noexcept { return failed_; }

private:
    AxiomId failed_;
};

/// The closed sets of a topology on {0,..,n-1}, stored as one bit per
/// subset code. Always contains {} and X and is closed under pairwise
/// union and intersection; the constructor rejects anything else.
class TopologyFamily {
public:
    TopologyFamily(Universe u, std::uint64_t member_bits) : universe_(u), bits_(member_bits) {
        const std::uint32_t count = u.subset_count();
        if (count < 64 && (bits_ >> count) != 0)
            throw std::invalid_argument("family contains a code outside the universe");
        if (!contains_code(0)) throw std::invalid_argument("family must contain the empty set");
        if (!contains_code(u.full_code()))
            throw std::invalid_argument("family must contain the whole universe");
        for (std::uint32_t a = 0; a < count; ++a) {
            if (!contains_code(a)) continue;
            for (std::uint32_t b = a + 1; b < count; ++b) {
                if (!contains_code(b)) continue;
                if (!contains_code(a | b))
                    throw std::invalid_argument("family is not closed under union");
                if (!contains_code(a & b))
                    throw std::invalid_argument("family is not closed under intersection");
            }
        }
    }

    Universe universe() const noexcept { return universe_; }
    std::uint64_t member_bits() const noexcept { return bits_; }

    bool contains_code(std::uint32_t code) const noexcept { return (bits_ >> code) & 1u; }
    bool contains(const SubsetMask& s) const {
        detail::require_same_universe(universe_, s.universe());
        return contains_code(s.code());
    }

    std::size_t size() const noexcept {
        return static_cast<std::size_t>(std::popcount(bits_));
    }

    /// Member codes in ascending order.
    std::vector<std::uint32_t> member_codes() const {
        std::vector<std::uint32_t> out;
        out.reserve(size());
        for (std::uint32_t a = 0; a < universe_.subset_count(); ++a)
            if (contains_code(a)) out.push_back(a);
        return out;
    }

    bool operator==(const TopologyFamily& other) const {
        detail::require_same_universe(universe_, other.universe_);
        return bits_ == other.bits_;
    }

private:
    Universe universe_;
    std::uint64_t bits_;
};

/// Fixed points of a closure operator, i.e. the closed sets of the topology
/// it induces. Throws not_a_closure naming the first failing axiom when the
/// operator is not a closure.
inline TopologyFamily closed_sets(const OperatorTable& op) {
    for (AxiomId a : delta_axioms)
        if (!axiom_holds(op, a))
            throw not_a_closure(a, std::string("operator is not a closure: ") +
                                       std::string(to_string(a)) + " fails");
    const Universe u = op.universe();
    std::uint64_t bits = 0;
    for (std::uint32_t a = 0; a < u.subset_count(); ++a)
        if (op.value_code(a) == a) bits |= std::uint64_t{1} << a;
    return TopologyFamily(u, bits);
}

/// cl(A) = smallest member of the family containing A. Inverse of
/// closed_sets: closure_from_family(closed_sets(cl)) == cl for closures.
inline OperatorTable closure_from_family(const TopologyFamily& family) {
    const Universe u = family.universe();
    std::vector<std::uint32_t> t(u.subset_count());
    for (std::uint32_t a = 0; a < u.subset_count(); ++a) {
        std::uint32_t best = u.full_code();
        for (std::uint32_t c = 0; c < u.subset_count(); ++c)
            if (family.contains_code(c) && (a & ~c) == 0 && std::popcount(c) < std::popcount(best))
                best = c;
        t[a] = best;
    }
    return OperatorTable(u, std::move(t));
}

/// {"n":2,"closed":[0,1,3]} with member codes ascending.
inline std::string serialize(const TopologyFamily& family) {
    std::string out = "{\"n\":" + std::to_string(family.universe().size()) + ",\"closed\":[";
    bool first = true;
    for (std::uint32_t code : family.member_codes()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(code);
    }
    out += "]}";
    return out;
}

}  // namespace fintop
