#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rhoq/errors.hpp"
#include "rhoq/family.hpp"
#include "rhoq/integer.hpp"
#include "rhoq/rho.hpp"
#include "rhoq/series.hpp"

namespace rhoq {

/// One rho-variant per catalogued identity.
enum class Variant {
    rho,
    rho_l_regular,
    rho_over,
    rho_over_odd,
    rho_over_even,
    rho_over_l_regular,
    rho_k_colored,
    rho_cubic,
    rho_pod,
    rho_ped,
    rho_epsilon,
};

inline constexpr std::array<Variant, 11> all_variants{
    Variant::rho,          Variant::rho_l_regular, Variant::rho_over,
    Variant::rho_over_odd, Variant::rho_over_even, Variant::rho_over_l_regular,
    Variant::rho_k_colored, Variant::rho_cubic,    Variant::rho_pod,
    Variant::rho_ped,      Variant::rho_epsilon,
};

inline bool requires_ell(Variant v) {
    return v == Variant::rho_l_regular || v == Variant::rho_over_l_regular;
}

inline bool requires_colors(Variant v) { return v == Variant::rho_k_colored; }

inline std::string variant_name(Variant v) {
    switch (v) {
        case Variant::rho: return "rho";
        case Variant::rho_l_regular: return "rho-lregular";
        case Variant::rho_over: return "rho-over";
        case Variant::rho_over_odd: return "rho-over-odd";
        case Variant::rho_over_even: return "rho-over-even";
        case Variant::rho_over_l_regular: return "rho-over-lregular";
        case Variant::rho_k_colored: return "rho-kcolored";
        case Variant::rho_cubic: return "rho-cubic";
        case Variant::rho_pod: return "rho-pod";
        case Variant::rho_ped: return "rho-ped";
        case Variant::rho_epsilon: return "rho-epsilon";
    }
    return "unknown";
}

inline std::optional<Variant> parse_variant(const std::string& name) {
    for (const Variant v : all_variants)
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

/// Identifies one catalogued identity: which variant, its parameter when it
/// takes one, and the truncation order to check to.
struct VariantSpec {
    Variant variant = Variant::rho;
    int ell = 0;  // for rho-lregular / rho-over-lregular; 0 otherwise
    int k = 0;    // for rho-kcolored; 0 otherwise
    std::size_t order = 0;

    void validate() const {
        if (requires_ell(variant)) {
            if (ell < 2)
                throw std::invalid_argument(variant_name(variant) + ": need ell >= 2");
        } else if (ell != 0) {
            throw std::invalid_argument(variant_name(variant) + " takes no ell parameter");
        }
        if (requires_colors(variant)) {
            if (k < 1)
                throw std::invalid_argument(variant_name(variant) + ": need k >= 1");
        } else if (k != 0) {
            throw std::invalid_argument(variant_name(variant) + " takes no color parameter");
        }
    }

    bool operator==(const VariantSpec&) const = default;
};

/// The inner family whose partitions sit below the unique largest part.
inline Family family_of(const VariantSpec& spec) {
    spec.validate();
    switch (spec.variant) {
        case Variant::rho: return Family::unrestricted();
        case Variant::rho_l_regular: return Family::l_regular(spec.ell);
        case Variant::rho_over: return Family::overpartition();
        case Variant::rho_over_odd: return Family::overpartition_odd();
        case Variant::rho_over_even: return Family::overpartition_even();
        case Variant::rho_over_l_regular: return Family::overpartition_l_regular(spec.ell);
        case Variant::rho_k_colored: return Family::k_colored(spec.k);
        case Variant::rho_cubic: return Family::cubic();
        case Variant::rho_pod: return Family::pod();
        case Variant::rho_ped: return Family::ped();
        case Variant::rho_epsilon: return Family::even_less_than_odd();
    }
    throw std::logic_error("family_of: unhandled variant");
}

/// Right-hand side of the variant's identity as a truncated series. Every
/// expression is assembled directly in its exponent-doubled form; there is
/// no substitution operator to get wrong.
inline Series build_gf(const VariantSpec& spec) {
    spec.validate();
    const std::size_t n = spec.order;
    const Series one = constant(1, n);
    switch (spec.variant) {
        case Variant::rho:
            return eta_quotient({{2, -1}}, n) - geometric(2, n);
        case Variant::rho_l_regular: {
            const std::size_t period = 2 * static_cast<std::size_t>(spec.ell);
            return eta_quotient({{period, 1}, {2, -1}}, n) - geometric(2, n) +
                   monomial(1, period, n) * geometric(period, n);
        }
        case Variant::rho_over:
            return eta_quotient({{4, 1}, {2, -2}}, n) - Int(2) * geometric(2, n) + one;
        case Variant::rho_over_odd:
            return eta_quotient({{4, 3}, {2, -2}, {8, -1}}, n) -
                   Int(2) * (monomial(1, 2, n) * geometric(4, n)) - one;
        case Variant::rho_over_even:
            return eta_quotient({{8, 1}, {4, -2}}, n) -
                   Int(2) * (monomial(1, 4, n) * geometric(4, n)) - one;
        case Variant::rho_over_l_regular: {
            const std::size_t period = 2 * static_cast<std::size_t>(spec.ell);
            return eta_quotient({{period, 2}, {4, 1}, {2, -2}, {2 * period, -1}}, n) -
                   Int(2) * geometric(2, n) +
                   Int(2) * (monomial(1, period, n) * geometric(period, n)) + one;
        }
        case Variant::rho_k_colored:
            return eta_quotient({{2, -spec.k}}, n) -
                   Int(spec.k) * (monomial(1, 2, n) * geometric(2, n)) - one;
        case Variant::rho_cubic:
            return eta_quotient({{2, -1}, {4, -1}}, n) - Int(2) * geometric(2, n) +
                   monomial(1, 6, n) * geometric(4, n) + one + monomial(1, 2, n);
        case Variant::rho_pod:
            return eta_quotient({{4, 1}, {2, -1}, {8, -1}}, n) - geometric(2, n);
        case Variant::rho_ped:
            return eta_quotient({{8, 1}, {2, -1}}, n) - geometric(2, n);
        case Variant::rho_epsilon:
            return geometric(2, n) * (eta_quotient({{4, -1}}, n) - one);
    }
    throw std::logic_error("build_gf: unhandled variant");
}

/// Which independent counter(s) the series is checked against.
enum class Oracle { combinator, direct, both };

inline std::string oracle_name(Oracle o) {
    switch (o) {
        case Oracle::combinator: return "combinator";
        case Oracle::direct: return "direct";
        case Oracle::both: return "both";
    }
    return "unknown";
}

inline std::optional<Oracle> parse_oracle(const std::string& name) {
    if (name == "combinator") return Oracle::combinator;
    if (name == "direct") return Oracle::direct;
    if (name == "both") return Oracle::both;
    return std::nullopt;
}

/// Enumeration ceilings, expressed as the highest checkable series order n
/// (the underlying enumeration runs at lambda = n/2). Checks beyond these
/// raise BudgetExceeded instead of quietly taking minutes.
struct Budgets {
    std::size_t combinator = 120;
    std::size_t direct = 60;
};

struct Mismatch {
    std::size_t n;
    Int series_value;
    Int oracle_value;

    bool operator==(const Mismatch&) const = default;
};

/// Outcome of checking one identity: the checked range and every coefficient
/// disagreement, each carrying both values so a failure diagnoses itself.
struct VerificationReport {
    VariantSpec spec;
    Oracle oracle = Oracle::both;
    std::size_t checked_order = 0;
    std::vector<Mismatch> mismatches;
    std::int64_t elapsed_ms = 0;

    bool ok() const { return mismatches.empty(); }
};

/// Compares series coefficients 0..order against the requested oracle(s) for
/// the given inner family. Exposed separately from verify() so that candidate
/// or deliberately perturbed series can be checked against the same counters.
inline std::vector<Mismatch> verify_series(const Series& series, const Family& family,
                                           Oracle oracle, std::size_t order) {
    if (order > series.order())
        throw std::invalid_argument("verify_series: requested order exceeds the series order");
    std::vector<Mismatch> mismatches;
    const bool use_combinator = oracle != Oracle::direct;
    const bool use_direct = oracle != Oracle::combinator;
    for (std::size_t n = 0; n <= order; ++n) {
        const Int& from_series = series.coeff(n);
        std::optional<Int> combinator_value;
        if (use_combinator) {
            combinator_value = rho_count(family, static_cast<int>(n));
            if (*combinator_value != from_series)
                mismatches.push_back({n, from_series, *combinator_value});
        }
        if (use_direct) {
            Int direct_value = rho_direct(family, static_cast<int>(n));
            // skip the duplicate entry when both oracles disagree identically
            if (direct_value != from_series &&
                (!combinator_value || direct_value != *combinator_value))
                mismatches.push_back({n, from_series, std::move(direct_value)});
        }
    }
    return mismatches;
}

/// Builds the identity's series and checks it coefficient-by-coefficient.
inline VerificationReport verify(const VariantSpec& spec, Oracle oracle,
                                 const Budgets& budgets = {}) {
    spec.validate();
    if (oracle != Oracle::direct && spec.order > budgets.combinator)
        throw BudgetExceeded("combinator oracle limited to order " +
                             std::to_string(budgets.combinator) + ", requested " +
                             std::to_string(spec.order));
    if (oracle != Oracle::combinator && spec.order > budgets.direct)
        throw BudgetExceeded("direct enumeration limited to order " +
                             std::to_string(budgets.direct) + ", requested " +
                             std::to_string(spec.order));
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.spec = spec;
    report.oracle = oracle;
    report.checked_order = spec.order;
    report.mismatches = verify_series(build_gf(spec), family_of(spec), oracle, spec.order);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

inline constexpr std::array<int, 5> default_ell_sweep{2, 3, 4, 5, 7};
inline constexpr std::array<int, 4> default_color_sweep{1, 2, 3, 5};

/// Every catalogued identity at the given order, with the parameterized
/// variants swept over the supplied sets, in catalogue order.
inline std::vector<VariantSpec> sweep_specs(std::size_t order, std::span<const int> ell_set,
                                            std::span<const int> k_set) {
    std::vector<VariantSpec> specs;
    for (const Variant v : all_variants) {
        if (requires_ell(v)) {
            for (const int ell : ell_set) specs.push_back({.variant = v, .ell = ell, .order = order});
        } else if (requires_colors(v)) {
            for (const int k : k_set) specs.push_back({.variant = v, .k = k, .order = order});
        } else {
            specs.push_back({.variant = v, .order = order});
        }
    }
    for (const VariantSpec& spec : specs) spec.validate();
    return specs;
}

/// Runs verify over the full sweep. Independent identities may be checked on
/// worker threads; reports always come back in sweep order, so the output is
/// deterministic either way.
inline std::vector<VerificationReport> verify_all(std::size_t order,
                                                  std::span<const int> ell_set,
                                                  std::span<const int> k_set,
                                                  Oracle oracle = Oracle::both,
                                                  const Budgets& budgets = {},
                                                  bool parallel = true) {
    const std::vector<VariantSpec> specs = sweep_specs(order, ell_set, k_set);
    std::vector<VerificationReport> reports;
    reports.reserve(specs.size());
    if (parallel) {
        std::vector<std::future<VerificationReport>> futures;
        futures.reserve(specs.size());
        for (const VariantSpec& spec : specs)
            futures.push_back(std::async(std::launch::async,
                                         [spec, oracle, budgets] { return verify(spec, oracle, budgets); }));
        for (auto& future : futures) reports.push_back(future.get());
    } else {
        for (const VariantSpec& spec : specs) reports.push_back(verify(spec, oracle, budgets));
    }
    return reports;
}

inline std::vector<VerificationReport> verify_all(std::size_t order,
                                                  Oracle oracle = Oracle::both,
                                                  const Budgets& budgets = {},
                                                  bool parallel = true) {
    return verify_all(order, default_ell_sweep, default_color_sweep, oracle, budgets, parallel);
}

/// Table of rho_f(0..limit) on the combinator path, as rendered by the CLI.
inline std::vector<Int> rho_table(const Family& family, int limit) {
    if (limit < 0) throw std::invalid_argument("rho_table: limit must be >= 0");
    std::vector<Int> values;
    values.reserve(static_cast<std::size_t>(limit) + 1);
    for (int n = 0; n <= limit; ++n) values.push_back(rho_count(family, n));
    return values;
}

}  // namespace rhoq
