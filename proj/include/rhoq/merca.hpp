#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "rhoq/integer.hpp"
#include "rhoq/partition.hpp"
#include "rhoq/series.hpp"

namespace rhoq {

/// a(n): over all partitions of n, the sum of parts counted without
/// multiplicity. Computed by direct enumeration.
inline Int merca_a(int n) {
    if (n < 1) throw std::invalid_argument("merca_a: n must be >= 1");
    Int total = 0;
    for_each_partition(n, [&](std::span<const int> parts) {
        total += distinct_part_sum(parts);
    });
    return total;
}

/// Generating function of a(n): 1/(q;q)_inf * q/(1-q)^2, truncated.
inline Series merca_a_series(std::size_t order) {
    const Series partitions = inverse(pochhammer(1, 1, order));
    const Series geo = geometric(1, order);
    return partitions * monomial(1, 1, order) * (geo * geo);
}

}  // namespace rhoq
