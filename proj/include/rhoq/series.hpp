#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rhoq/errors.hpp"
#include "rhoq/integer.hpp"

namespace rhoq {

/// Truncated formal power series in q with exact integer coefficients.
///
/// A series of order N carries the coefficients of q^0..q^N; everything above
/// q^N is unknown rather than zero, and asking for it throws. Arithmetic on
/// series of different orders truncates to the smaller order, which keeps
/// composition total while the result stays honest about what it knows.
/// Values are immutable once constructed and safe to share across threads.
class Series {
public:
    /// Wraps an explicit coefficient vector; coeffs[n] is the coefficient of
    /// q^n, so the vector must have at least the constant term.
    explicit Series(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("Series: need at least the constant coefficient");
    }

    Series(std::initializer_list<Int> coeffs) : Series(std::vector<Int>(coeffs)) {}

    /// Truncation order N; the highest exponent this series knows about.
    std::size_t order() const { return coeffs_.size() - 1; }

    /// Coefficient of q^n. Throws IndexBeyondOrder for n > order().
    const Int& coeff(std::size_t n) const {
        if (n > order())
            throw IndexBeyondOrder("coefficient of q^" + std::to_string(n) +
                                   " requested from a series of order " +
                                   std::to_string(order()));
        return coeffs_[n];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Copy truncated to min(new_order, order()).
    Series truncated(std::size_t new_order) const {
        if (new_order >= order()) return *this;
        return Series(std::vector<Int>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    bool operator==(const Series&) const = default;

private:
    std::vector<Int> coeffs_;
};

/// c + 0*q + ... + 0*q^order.
inline Series constant(Int c, std::size_t order) {
    std::vector<Int> coeffs(order + 1);
    coeffs[0] = std::move(c);
    return Series(std::move(coeffs));
}

/// c*q^degree, truncated at `order`. Degrees beyond the order give the zero
/// series: the term exists but is invisible at this truncation.
inline Series monomial(Int c, std::size_t degree, std::size_t order) {
    std::vector<Int> coeffs(order + 1);
    if (degree <= order) coeffs[degree] = std::move(c);
    return Series(std::move(coeffs));
}

/// 1/(1 - q^period) = 1 + q^period + q^{2 period} + ...
inline Series geometric(std::size_t period, std::size_t order) {
    if (period < 1) throw std::invalid_argument("geometric: period must be >= 1");
    std::vector<Int> coeffs(order + 1);
    for (std::size_t n = 0; n <= order; n += period) coeffs[n] = 1;
    return Series(std::move(coeffs));
}

inline Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Int> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) coeffs[i] = a.coeffs()[i] + b.coeffs()[i];
    return Series(std::move(coeffs));
}

inline Series operator-(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Int> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) coeffs[i] = a.coeffs()[i] - b.coeffs()[i];
    return Series(std::move(coeffs));
}

inline Series operator-(const Series& a) {
    std::vector<Int> coeffs(a.coeffs());
    for (Int& c : coeffs) c = -c;
    return Series(std::move(coeffs));
}

/// Cauchy product, truncated to the smaller order. Schoolbook convolution;
/// orders stay small enough that exactness beats cleverness.
inline Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Int> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Int& ai = a.coeffs()[i];
        if (ai == 0) continue;  // product constructors yield sparse factors
        for (std::size_t j = 0; i + j <= n; ++j) coeffs[i + j] += ai * b.coeffs()[j];
    }
    return Series(std::move(coeffs));
}

inline Series operator*(const Int& c, const Series& a) {
    std::vector<Int> coeffs(a.coeffs());
    for (Int& x : coeffs) x *= c;
    return Series(std::move(coeffs));
}

inline Series operator*(const Series& a, const Int& c) { return c * a; }

/// Multiplicative inverse of a series whose constant term is +1 or -1 (the
/// only constant terms with an integral inverse). Standard recurrence:
/// c_0 = 1/a_0 and c_n = -(1/a_0) * sum_{i=1..n} a_i c_{n-i}.
inline Series inverse(const Series& a) {
    const Int& a0 = a.coeffs().front();
    if (a0 != 1 && a0 != -1)
        throw NotAUnit("inverse: constant term must be +1 or -1, got " + a0.str());
    const std::size_t n = a.order();
    std::vector<Int> coeffs(n + 1);
    coeffs[0] = a0;  // 1/a0 == a0 when a0 is +1 or -1
    for (std::size_t m = 1; m <= n; ++m) {
        Int acc = 0;
        for (std::size_t i = 1; i <= m; ++i) acc += a.coeffs()[i] * coeffs[m - i];
        coeffs[m] = -a0 * acc;
    }
    return Series(std::move(coeffs));
}

/// a^exponent by square-and-multiply; a^0 is the constant series 1.
inline Series pow(const Series& a, unsigned exponent) {
    if (exponent == 0) return constant(1, a.order());
    if (exponent == 1) return a;
    Series half = pow(a, exponent / 2);
    Series result = half * half;
    if (exponent % 2 == 1) result = result * a;
    return result;
}

/// q-Pochhammer symbol (q^a; q^b)_inf = prod_{k>=0} (1 - q^{a+bk}), truncated.
/// Each factor is applied as the in-place update c[n] -= c[n-d], so the whole
/// product costs O(order^2 / b).
inline Series pochhammer(std::size_t a, std::size_t b, std::size_t order) {
    if (a < 1 || b < 1) throw std::invalid_argument("pochhammer: a and b must be >= 1");
    std::vector<Int> coeffs(order + 1);
    coeffs[0] = 1;
    for (std::size_t d = a; d <= order; d += b)
        for (std::size_t n = order; n >= d; --n) coeffs[n] -= coeffs[n - d];
    return Series(std::move(coeffs));
}

/// One factor (q^period; q^period)_inf^exponent of an eta quotient.
struct EtaFactor {
    std::size_t period;
    int exponent;
};

/// Product of Pochhammer symbols (q^m; q^m)_inf^e over the given factors,
/// truncated at `order`. Negative exponents go through inverse(); every base
/// factor has constant term 1, so the inverse always exists.
inline Series eta_quotient(std::span<const EtaFactor> factors, std::size_t order) {
    Series result = constant(1, order);
    for (const EtaFactor& factor : factors) {
        if (factor.period < 1)
            throw std::invalid_argument("eta_quotient: period must be >= 1");
        if (factor.exponent == 0)
            throw std::invalid_argument("eta_quotient: exponent must be nonzero");
        Series base = pochhammer(factor.period, factor.period, order);
        if (factor.exponent < 0) base = inverse(base);
        const unsigned e = static_cast<unsigned>(factor.exponent < 0 ? -factor.exponent
                                                                     : factor.exponent);
        result = result * pow(base, e);
    }
    return result;
}

inline Series eta_quotient(std::initializer_list<EtaFactor> factors, std::size_t order) {
    return eta_quotient(std::span<const EtaFactor>(factors.begin(), factors.size()), order);
}

inline std::string to_string(const Series& s) {
    std::ostringstream out;
    out << "[";
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (n > 0) out << ", ";
        out << s.coeffs()[n];
    }
    out << "]";
    return out.str();
}

inline std::ostream& operator<<(std::ostream& out, const Series& s) {
    return out << to_string(s);
}

}  // namespace rhoq
