#pragma once

// Finite universes, subset bitmasks, extensional operator tables, and the
// operator text format.

#include <bit>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fintop {

/// The finite universe X = {0, ..., n-1}. Capped at n = 5: an operator
/// table has 2^n entries and everything downstream iterates over them, so
/// larger universes would stop being inspectable (or enumerable) anyway.
/// n = 0 is legal; X = {} has exactly one subset.
class Universe {
public:
    static constexpr int max_elements = 6;

    explicit Universe(int n) : n_(n) {
        if (n < 0 || n > max_elements)
            throw std::invalid_argument("universe size must be in [0, " +
                                        std::to_string(max_elements) + "], got " +
                                        std::to_string(n));
    }

    int size() const noexcept { return n_; }

    /// Number of subsets, 2^n. Subset codes range over [0, subset_count()).
    std::uint32_t subset_count() const noexcept { return std::uint32_t{1} << n_; }

    /// Code of X itself (all bits set), 2^n - 1. Code 0 is the empty set.
    std::uint32_t full_code() const noexcept { return subset_count() - 1; }

    bool operator==(const Universe&) const noexcept = default;

private:
    int n_;
};

namespace detail {
inline void require_same_universe(const Universe& a, const Universe& b) {
    if (!(a == b))
        throw std::invalid_argument("universe mismatch: n=" + std::to_string(a.size()) +
                                    " vs n=" + std::to_string(b.size()));
}
}  // namespace detail

/// A subset of a Universe packed as a bitmask: bit i set iff element i is a
/// member. The mask's integer value is the subset's *code*, which indexes
/// operator tables. Immutable value type; all operations are pure and
/// require both operands to share one universe.
class SubsetMask {
public:
    SubsetMask(Universe u, std::uint32_t bits) : u_(u), bits_(bits) {
        if (bits > u.full_code())
            throw std::invalid_argument("subset code " + std::to_string(bits) +
                                        " out of range for universe of size " +
                                        std::to_string(u.size()));
    }

    static SubsetMask empty(Universe u) { return {u, 0}; }
    static SubsetMask whole(Universe u) { return {u, u.full_code()}; }

    static SubsetMask of(Universe u, std::initializer_list<int> elems) {
        std::uint32_t bits = 0;
        for (int e : elems) {
            if (e < 0 || e >= u.size())
                throw std::invalid_argument("element " + std::to_string(e) +
                                            " not in universe of size " +
                                            std::to_string(u.size()));
            bits |= std::uint32_t{1} << e;
        }
        return {u, bits};
    }

    Universe universe() const noexcept { return u_; }
    std::uint32_t code() const noexcept { return bits_; }

    bool is_empty() const noexcept { return bits_ == 0; }
    bool is_whole() const noexcept { return bits_ == u_.full_code(); }
    bool contains(int e) const noexcept { return e >= 0 && e < u_.size() && ((bits_ >> e) & 1u); }
    int count() const noexcept { return std::popcount(bits_); }

    SubsetMask operator|(SubsetMask o) const { return combined(o, bits_ | o.bits_); }
    SubsetMask operator&(SubsetMask o) const { return combined(o, bits_ & o.bits_); }
    /// Set difference, this \ o.
    SubsetMask operator-(SubsetMask o) const { return combined(o, bits_ & ~o.bits_); }
    /// Symmetric difference.
    SubsetMask operator^(SubsetMask o) const { return combined(o, bits_ ^ o.bits_); }
    /// Complement with respect to X.
    SubsetMask operator~() const { return {u_, bits_ ^ u_.full_code()}; }

    bool is_subset_of(SubsetMask o) const {
        detail::require_same_universe(u_, o.u_);
        return (bits_ & ~o.bits_) == 0;
    }

    bool operator==(SubsetMask o) const {
        detail::require_same_universe(u_, o.u_);
        return bits_ == o.bits_;
    }
    bool operator!=(SubsetMask o) const { return !(*this == o); }

    /// Members in ascending order.
    std::vector<int> elements() const {
        std::vector<int> out;
        for (int e = 0; e < u_.size(); ++e)
            if ((bits_ >> e) & 1u) out.push_back(e);
        return out;
    }

    /// Renders "{0,2}"; with one_based, "{1,3}". The empty set is "{}".
    std::string to_string(bool one_based = false) const {
        std::string s = "{";
        bool sep = false;
        for (int e : elements()) {
            if (sep) s += ',';
            s += std::to_string(e + (one_based ? 1 : 0));
            sep = true;
        }
        s += '}';
        return s;
    }

private:
    SubsetMask combined(SubsetMask o, std::uint32_t bits) const {
        detail::require_same_universe(u_, o.u_);
        return {u_, bits};
    }

    Universe u_;
    std::uint32_t bits_;
};

/// A total map P(X) -> P(X) stored extensionally: raw()[code(A)] = code(op(A)).
/// Immutable after construction and cheap to copy at these sizes; safe to
/// share between concurrent workers.
class OperatorTable {
public:
    OperatorTable(Universe u, std::vector<std::uint32_t> table) : u_(u), table_(std::move(table)) {
        if (table_.size() != u.subset_count())
            throw std::invalid_argument("operator table must have 2^n = " +
                                        std::to_string(u.subset_count()) + " entries, got " +
                                        std::to_string(table_.size()));
        for (std::uint32_t v : table_)
            if (v > u.full_code())
                throw std::invalid_argument("operator table entry " + std::to_string(v) +
                                            " out of range for universe of size " +
                                            std::to_string(u.size()));
    }

    template <class F>
    static OperatorTable from_function(Universe u, F&& f) {
        std::vector<std::uint32_t> t(u.subset_count());
        for (std::uint32_t a = 0; a < u.subset_count(); ++a)
            t[a] = SubsetMask(f(SubsetMask(u, a))).code();
        return {u, std::move(t)};
    }

    static OperatorTable identity(Universe u) {
        std::vector<std::uint32_t> t(u.subset_count());
        for (std::uint32_t a = 0; a < u.subset_count(); ++a) t[a] = a;
        return {u, std::move(t)};
    }

    static OperatorTable constant(Universe u, SubsetMask value) {
        detail::require_same_universe(u, value.universe());
        return {u, std::vector<std::uint32_t>(u.subset_count(), value.code())};
    }

    Universe universe() const noexcept { return u_; }

    SubsetMask apply(SubsetMask a) const {
        detail::require_same_universe(u_, a.universe());
        return {u_, table_[a.code()]};
    }

    /// Table entry by subset code.
    std::uint32_t value_code(std::uint32_t code) const { return table_.at(code); }

    const std::vector<std::uint32_t>& raw() const noexcept { return table_; }

    /// Total comparison: tables over different universes are simply unequal.
    /// operators_equal() below is the checked variant.
    bool operator==(const OperatorTable& o) const {
        return u_ == o.u_ && table_ == o.table_;
    }

private:
    Universe u_;
    std::vector<std::uint32_t> table_;
};

/// Entry-by-entry equality; mixing universes is a caller bug and throws.
inline bool operators_equal(const OperatorTable& p, const OperatorTable& q) {
    detail::require_same_universe(p.universe(), q.universe());
    return p.raw() == q.raw();
}

// ---------------------------------------------------------------------------
// Operator text format
//
//   {"n":2,"map":{"0":0,"1":1,"2":2,"3":3}}
//
// "map" has one key per subset code, "0".."2^n-1", each mapping to the code
// of the image subset. Input is ordinary JSON (whitespace-insensitive,
// any key order); output is canonical: compact, keys in ascending code
// order, so equal tables serialize to identical bytes.
// ---------------------------------------------------------------------------

class parse_error : public std::runtime_error {
public:
    enum class Kind {
        malformed,          ///< not JSON, or not the expected structure/types
        bad_universe,       ///< "n" is an integer outside [0, max_elements]
        code_out_of_range,  ///< a map key or value is not a valid subset code
        code_missing,       ///< some subset code has no entry
        code_duplicate,     ///< some subset code appears more than once
    };

    parse_error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline std::string serialize(const OperatorTable& op) {
    std::string out = "{\"n\":" + std::to_string(op.universe().size()) + ",\"map\":{";
    for (std::uint32_t a = 0; a < op.universe().subset_count(); ++a) {
        if (a) out += ',';
        out += '"';
        out += std::to_string(a);
        out += "\":";
        out += std::to_string(op.raw()[a]);
    }
    out += "}}";
    return out;
}

inline OperatorTable parse_operator(std::string_view text) {
    using nlohmann::json;

    // nlohmann collapses duplicate object keys, so collect the keys of the
    // "map" object through the parser callback and check multiplicity here.
    std::vector<std::string> map_keys;
    int level = 0;
    std::string root_key;
    auto cb = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start: ++level; break;
        case json::parse_event_t::object_end: --level; break;
        case json::parse_event_t::key:
            if (level == 1)
                root_key = parsed.get<std::string>();
            else if (level == 2 && root_key == "map")
                map_keys.push_back(parsed.get<std::string>());
            break;
        default: break;
        }
        return true;
    };

    json doc;
    try {
        doc = json::parse(text, cb);
    } catch (const json::exception& e) {
        throw parse_error(parse_error::Kind::malformed, e.what());
    }

    if (!doc.is_object())
        throw parse_error(parse_error::Kind::malformed, "expected a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "n" && key != "map")
            throw parse_error(parse_error::Kind::malformed, "unexpected field \"" + key + "\"");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw parse_error(parse_error::Kind::malformed, "missing or non-integer field \"n\"");
    const auto n_value = doc["n"].get<std::int64_t>();
    if (n_value < 0 || n_value > Universe::max_elements)
        throw parse_error(parse_error::Kind::bad_universe,
                          "\"n\" must be in [0, " + std::to_string(Universe::max_elements) +
                              "], got " + std::to_string(n_value));
    const Universe u(static_cast<int>(n_value));
    if (!doc.contains("map") || !doc["map"].is_object())
        throw parse_error(parse_error::Kind::malformed, "missing or non-object field \"map\"");

    {
        std::unordered_set<std::string> seen;
        for (const std::string& k : map_keys)
            if (!seen.insert(k).second)
                throw parse_error(parse_error::Kind::code_duplicate,
                                  "duplicate subset code \"" + k + "\"");
    }

    std::vector<std::uint32_t> table(u.subset_count());
    std::vector<bool> present(u.subset_count(), false);
    for (const auto& [key, value] : doc["map"].items()) {
        std::uint32_t code = 0;
        auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), code);
        const bool canonical = ec == std::errc{} && end == key.data() + key.size() &&
                               std::to_string(code) == key;
        if (!canonical || code > u.full_code())
            throw parse_error(parse_error::Kind::code_out_of_range,
                              "subset code key \"" + key + "\" out of range for n=" +
                                  std::to_string(u.size()));
        if (!value.is_number_integer())
            throw parse_error(parse_error::Kind::malformed,
                              "value for subset code " + key + " is not an integer");
        const auto v = value.get<std::int64_t>();
        if (v < 0 || v > u.full_code())
            throw parse_error(parse_error::Kind::code_out_of_range,
                              "value " + std::to_string(v) + " for subset code " + key +
                                  " out of range for n=" + std::to_string(u.size()));
        table[code] = static_cast<std::uint32_t>(v);
        present[code] = true;
    }
    for (std::uint32_t a = 0; a < u.subset_count(); ++a)
        if (!present[a])
            throw parse_error(parse_error::Kind::code_missing,
                              "incomplete table: missing subset code " + std::to_string(a));

    return {u, std::move(table)};
}

}  // namespace fintop
