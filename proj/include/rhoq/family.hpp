#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhoq/errors.hpp"
#include "rhoq/integer.hpp"
#include "rhoq/partition.hpp"
#include "rhoq/series.hpp"

namespace rhoq {

enum class FamilyKind {
    unrestricted,
    l_regular,               // no part divisible by ell
    overpartition,           // first occurrence of each size may be overlined
    overpartition_odd,       // overpartitions into odd parts only
    overpartition_even,      // overpartitions into even parts only
    overpartition_l_regular, // overpartitions with no part divisible by ell
    k_colored,               // each part carries one of k colors
    cubic,                   // even parts come in two colors
    pod,                     // odd parts distinct
    ped,                     // even parts distinct
    even_less_than_odd,      // every even part below every odd part
};

/// A restricted or decorated partition family. Undecorated families are pure
/// membership predicates; decorated families (overpartitions, colorings,
/// cubic) attach a multiplicity to each plain partition instead.
class Family {
public:
    static Family unrestricted() { return {FamilyKind::unrestricted, 0}; }
    static Family l_regular(int ell) { return {FamilyKind::l_regular, checked_ell(ell)}; }
    static Family overpartition() { return {FamilyKind::overpartition, 0}; }
    static Family overpartition_odd() { return {FamilyKind::overpartition_odd, 0}; }
    static Family overpartition_even() { return {FamilyKind::overpartition_even, 0}; }
    static Family overpartition_l_regular(int ell) {
        return {FamilyKind::overpartition_l_regular, checked_ell(ell)};
    }
    static Family k_colored(int k) {
        if (k < 1) throw std::invalid_argument("Family: need k >= 1 colors");
        return {FamilyKind::k_colored, k};
    }
    static Family cubic() { return {FamilyKind::cubic, 0}; }
    static Family pod() { return {FamilyKind::pod, 0}; }
    static Family ped() { return {FamilyKind::ped, 0}; }
    static Family even_less_than_odd() { return {FamilyKind::even_less_than_odd, 0}; }

    FamilyKind kind() const { return kind_; }

    /// Regularity modulus; meaningful for the l_regular kinds only.
    int ell() const { return param_; }

    /// Number of colors; meaningful for k_colored only.
    int colors() const { return param_; }

    bool is_decorated() const {
        switch (kind_) {
            case FamilyKind::overpartition:
            case FamilyKind::overpartition_odd:
            case FamilyKind::overpartition_even:
            case FamilyKind::overpartition_l_regular:
            case FamilyKind::k_colored:
            case FamilyKind::cubic:
                return true;
            default:
                return false;
        }
    }

    bool operator==(const Family&) const = default;

private:
    Family(FamilyKind kind, int param) : kind_(kind), param_(param) {}

    static int checked_ell(int ell) {
        if (ell < 2) throw std::invalid_argument("Family: need ell >= 2");
        return ell;
    }

    FamilyKind kind_;
    int param_;
};

inline std::string family_name(const Family& f) {
    switch (f.kind()) {
        case FamilyKind::unrestricted: return "unrestricted";
        case FamilyKind::l_regular: return std::to_string(f.ell()) + "-regular";
        case FamilyKind::overpartition: return "overpartition";
        case FamilyKind::overpartition_odd: return "overpartition-odd";
        case FamilyKind::overpartition_even: return "overpartition-even";
        case FamilyKind::overpartition_l_regular:
            return std::to_string(f.ell()) + "-regular-overpartition";
        case FamilyKind::k_colored: return std::to_string(f.colors()) + "-colored";
        case FamilyKind::cubic: return "cubic";
        case FamilyKind::pod: return "pod";
        case FamilyKind::ped: return "ped";
        case FamilyKind::even_less_than_odd: return "even-less-than-odd";
    }
    return "unknown";
}

namespace detail {

inline bool any_multiple_of(std::span<const int> parts, int modulus) {
    for (const int part : parts)
        if (part % modulus == 0) return true;
    return false;
}

inline bool any_even(std::span<const int> parts) {
    for (const int part : parts)
        if (part % 2 == 0) return true;
    return false;
}

inline bool any_odd(std::span<const int> parts) {
    for (const int part : parts)
        if (part % 2 != 0) return true;
    return false;
}

// Walks maximal runs of equal parts: visit(size, multiplicity) per run.
// Returns false (and stops) as soon as visit does.
template <typename Visit>
bool each_run(std::span<const int> parts, Visit&& visit) {
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i + 1;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!visit(parts[i], static_cast<int>(j - i))) return false;
        i = j;
    }
    return true;
}

}  // namespace detail

/// Membership test for the undecorated families. Throws NotAPredicateFamily
/// for decorated ones, whose members are weighted objects rather than a
/// subset of plain partitions.
inline bool satisfies(const Family& f, std::span<const int> parts) {
    switch (f.kind()) {
        case FamilyKind::unrestricted:
            return true;
        case FamilyKind::l_regular:
            return !detail::any_multiple_of(parts, f.ell());
        case FamilyKind::pod:
            return detail::each_run(parts, [](int size, int mult) {
                return size % 2 == 0 || mult == 1;
            });
        case FamilyKind::ped:
            return detail::each_run(parts, [](int size, int mult) {
                return size % 2 != 0 || mult == 1;
            });
        case FamilyKind::even_less_than_odd: {
            // parts are non-increasing: the first even is the largest even,
            // the last odd is the smallest odd; vacuous if either is missing
            int max_even = 0;
            int min_odd = 0;
            for (const int part : parts) {
                if (part % 2 == 0) {
                    if (max_even == 0) max_even = part;
                } else {
                    min_odd = part;
                }
            }
            return max_even == 0 || min_odd == 0 || max_even < min_odd;
        }
        default:
            throw NotAPredicateFamily("satisfies: " + family_name(f) +
                                      " is a decorated family");
    }
}

inline bool satisfies(const Family& f, const Partition& p) {
    return satisfies(f, std::span<const int>(p.parts()));
}

/// Number of decorated family members whose underlying plain partition is
/// `parts`; 0 when the base shape is outside the family, 1 for undecorated
/// families that accept it.
inline Int decoration_weight(const Family& f, std::span<const int> parts) {
    switch (f.kind()) {
        case FamilyKind::unrestricted:
        case FamilyKind::l_regular:
        case FamilyKind::pod:
        case FamilyKind::ped:
        case FamilyKind::even_less_than_odd:
            return satisfies(f, parts) ? 1 : 0;
        case FamilyKind::overpartition:
            return Int(1) << distinct_part_count(parts);
        case FamilyKind::overpartition_odd:
            if (detail::any_even(parts)) return 0;
            return Int(1) << distinct_part_count(parts);
        case FamilyKind::overpartition_even:
            if (detail::any_odd(parts)) return 0;
            return Int(1) << distinct_part_count(parts);
        case FamilyKind::overpartition_l_regular:
            if (detail::any_multiple_of(parts, f.ell())) return 0;
            return Int(1) << distinct_part_count(parts);
        case FamilyKind::k_colored: {
            // m copies of one size form an unordered multiset of colors:
            // C(m + k - 1, k - 1) choices per distinct size
            Int weight = 1;
            detail::each_run(parts, [&](int, int mult) {
                weight *= binomial(mult + f.colors() - 1, f.colors() - 1);
                return true;
            });
            return weight;
        }
        case FamilyKind::cubic: {
            // unordered pair-colorings of the even parts: m copies give m+1
            Int weight = 1;
            detail::each_run(parts, [&](int size, int mult) {
                if (size % 2 == 0) weight *= mult + 1;
                return true;
            });
            return weight;
        }
    }
    return 0;  // unreachable
}

inline Int decoration_weight(const Family& f, const Partition& p) {
    return decoration_weight(f, std::span<const int>(p.parts()));
}

/// Exact family counter by brute-force enumeration: the sum of decoration
/// weights over all plain partitions of n. count(f, 0) = 1 for every family
/// (the empty partition, weight 1). Exponential in n; meant for n up to ~60.
inline Int count(const Family& f, int n) {
    if (n < 0) throw std::invalid_argument("count: n must be >= 0");
    Int total = 0;
    for_each_partition(n, [&](std::span<const int> parts) {
        total += decoration_weight(f, parts);
    });
    return total;
}

/// The family's product generating function, truncated. Throws NoSeriesForm
/// for even_less_than_odd, which has no closed product form here.
inline Series family_series(const Family& f, std::size_t order) {
    const std::size_t ell = static_cast<std::size_t>(f.ell());
    switch (f.kind()) {
        case FamilyKind::unrestricted:
            return eta_quotient({{1, -1}}, order);
        case FamilyKind::l_regular:
            return eta_quotient({{ell, 1}, {1, -1}}, order);
        case FamilyKind::overpartition:
            return eta_quotient({{2, 1}, {1, -2}}, order);
        case FamilyKind::overpartition_odd:
            return eta_quotient({{2, 3}, {1, -2}, {4, -1}}, order);
        case FamilyKind::overpartition_even:
            return eta_quotient({{4, 1}, {2, -2}}, order);
        case FamilyKind::overpartition_l_regular:
            return eta_quotient({{ell, 2}, {2, 1}, {1, -2}, {2 * ell, -1}}, order);
        case FamilyKind::k_colored:
            return eta_quotient({{1, -f.colors()}}, order);
        case FamilyKind::cubic:
            return eta_quotient({{1, -1}, {2, -1}}, order);
        case FamilyKind::pod:
            return eta_quotient({{2, 1}, {1, -1}, {4, -1}}, order);
        case FamilyKind::ped:
            return eta_quotient({{4, 1}, {1, -1}}, order);
        case FamilyKind::even_less_than_odd:
            throw NoSeriesForm("family even-less-than-odd has no product generating function");
    }
    throw std::logic_error("family_series: unhandled family kind");
}

/// Coefficients c_0..c_order of the family's generating function; the
/// scalable counterpart of count(). The two must agree wherever both reach.
inline std::vector<Int> count_via_series(const Family& f, std::size_t order) {
    return family_series(f, order).coeffs();
}

}  // namespace rhoq
