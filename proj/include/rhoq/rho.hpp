#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "rhoq/errors.hpp"
#include "rhoq/family.hpp"
#include "rhoq/integer.hpp"
#include "rhoq/merca.hpp"
#include "rhoq/partition.hpp"

namespace rhoq {

/// Number of decorated single-part partitions of lambda in family f: the
/// correction term the rho construction subtracts. Closed-form per family,
/// deliberately independent of the enumeration machinery.
inline Int single_part_count(const Family& f, int lambda) {
    if (lambda < 1) throw std::invalid_argument("single_part_count: lambda must be >= 1");
    switch (f.kind()) {
        case FamilyKind::unrestricted:
        case FamilyKind::pod:
        case FamilyKind::ped:
        case FamilyKind::even_less_than_odd:
            return 1;
        case FamilyKind::l_regular:
            return lambda % f.ell() == 0 ? 0 : 1;
        case FamilyKind::overpartition:
            return 2;  // lambda, plain or overlined
        case FamilyKind::overpartition_odd:
            return lambda % 2 != 0 ? 2 : 0;
        case FamilyKind::overpartition_even:
            return lambda % 2 == 0 ? 2 : 0;
        case FamilyKind::overpartition_l_regular:
            return lambda % f.ell() == 0 ? 0 : 2;
        case FamilyKind::k_colored:
            return f.colors();  // one per color
        case FamilyKind::cubic:
            return lambda % 2 == 0 ? 2 : 1;
    }
    return 0;  // unreachable
}

/// rho_f(n): partitions of n whose largest part lambda appears exactly once
/// while the remaining parts form a family-f partition of lambda. Forces
/// n = 2*lambda, so the count is 0 for odd n and for n = 0. Computed by the
/// combinator rho_f(2*lambda) = count(f, lambda) - single_part_count(f, lambda):
/// the only family member a repeat of lambda can hide in is the single-part one.
inline Int rho_count(const Family& f, int n) {
    if (n < 0) throw std::invalid_argument("rho_count: n must be >= 0");
    if (n == 0 || n % 2 != 0) return 0;
    const int lambda = n / 2;
    return count(f, lambda) - single_part_count(f, lambda);
}

/// Independent oracle for rho_count: enumerates the decorated family-f
/// partitions of lambda = n/2 that contain no part of numeric size lambda,
/// whatever its decoration.
inline Int rho_direct(const Family& f, int n) {
    if (n < 0) throw std::invalid_argument("rho_direct: n must be >= 0");
    if (n == 0 || n % 2 != 0) return 0;
    const int lambda = n / 2;
    Int total = 0;
    for_each_partition(lambda, [&](std::span<const int> parts) {
        if (!parts.empty() && parts.front() == lambda) return;  // lambda would repeat
        total += decoration_weight(f, parts);
    });
    return total;
}

/// The underlying plain partitions counted by rho_f(n), in enumeration order:
/// the largest part lambda followed by each admissible remainder (nonzero
/// decoration weight, no part of size lambda).
inline std::vector<Partition> rho_partitions(const Family& f, int n) {
    std::vector<Partition> result;
    if (n <= 0 || n % 2 != 0) return result;
    const int lambda = n / 2;
    for_each_partition(lambda, [&](std::span<const int> parts) {
        if (!parts.empty() && parts.front() == lambda) return;
        if (decoration_weight(f, parts) == 0) return;
        std::vector<int> full;
        full.reserve(parts.size() + 1);
        full.push_back(lambda);
        full.insert(full.end(), parts.begin(), parts.end());
        result.emplace_back(std::move(full));
    });
    return result;
}

/// rho_a(n): over the unrestricted rho-partitions of n, the sum of parts
/// counted without multiplicity. The leading lambda contributes once; the
/// remainder never contains lambda, so the two sums never overlap.
inline Int rho_a(int n) {
    if (n % 2 != 0) throw OddArgument("rho_a: n must be even, got " + std::to_string(n));
    if (n < 2) throw std::invalid_argument("rho_a: n must be >= 2");
    const int lambda = n / 2;
    Int total = 0;
    for_each_partition(lambda, [&](std::span<const int> parts) {
        if (!parts.empty() && parts.front() == lambda) return;
        total += lambda + distinct_part_sum(parts);
    });
    return total;
}

/// Both sides of the recurrence 2*rho_a(n) = n*(rho(n) - 1) + 2*a(n/2),
/// evaluated by enumeration so a failure would surface with its numbers.
struct RecurrenceCheck {
    int n;
    Int rho_a_value;
    Int lhs;  // 2 * rho_a(n)
    Int rhs;  // n * (rho(n) - 1) + 2 * a(n/2)
    bool holds;
};

inline RecurrenceCheck evaluate_recurrence(int n) {
    if (n % 2 != 0)
        throw OddArgument("evaluate_recurrence: n must be even, got " + std::to_string(n));
    if (n < 2) throw std::invalid_argument("evaluate_recurrence: n must be >= 2");
    RecurrenceCheck check;
    check.n = n;
    check.rho_a_value = rho_a(n);
    check.lhs = 2 * check.rho_a_value;
    check.rhs = n * (rho_count(Family::unrestricted(), n) - 1) + 2 * merca_a(n / 2);
    check.holds = check.lhs == check.rhs;
    return check;
}

inline bool check_recurrence(int n) { return evaluate_recurrence(n).holds; }

}  // namespace rhoq
