#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rhoq {

/// Exact unbounded integer used for every coefficient and counter.
/// Partition counts outgrow 64 bits well within reachable truncation
/// orders, so fixed-width arithmetic is never used for values.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, r), exact. Returns 0 outside the triangle.
inline Int binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    Int result = 1;
    // result stays integral after each step: it equals C(n-r+i, i).
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

}  // namespace rhoq
