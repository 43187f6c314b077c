#include <catch2/catch.hpp>

#include <vector>

#include "rhoq/catalog.hpp"

using namespace rhoq;

TEST_CASE("variant names round-trip") {
    for (const Variant v : all_variants) {
        const auto parsed = parse_variant(variant_name(v));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == v);
    }
    CHECK(!parse_variant("nonsuch").has_value());
    CHECK(variant_name(Variant::rho_k_colored) == "rho-kcolored");
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS((VariantSpec{.variant = Variant::rho_l_regular, .ell = 1, .order = 10}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((VariantSpec{.variant = Variant::rho_k_colored, .k = 0, .order = 10}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((VariantSpec{.variant = Variant::rho, .ell = 3, .order = 10}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((VariantSpec{.variant = Variant::rho_cubic, .k = 2, .order = 10}.validate()),
                    std::invalid_argument);
    CHECK_NOTHROW((VariantSpec{.variant = Variant::rho_l_regular, .ell = 2, .order = 10}.validate()));
}

TEST_CASE("family_of pairs each variant with its inner family") {
    CHECK(family_of({.variant = Variant::rho, .order = 1}) == Family::unrestricted());
    CHECK(family_of({.variant = Variant::rho_l_regular, .ell = 5, .order = 1}) ==
          Family::l_regular(5));
    CHECK(family_of({.variant = Variant::rho_over, .order = 1}) == Family::overpartition());
    CHECK(family_of({.variant = Variant::rho_over_odd, .order = 1}) ==
          Family::overpartition_odd());
    CHECK(family_of({.variant = Variant::rho_over_even, .order = 1}) ==
          Family::overpartition_even());
    CHECK(family_of({.variant = Variant::rho_over_l_regular, .ell = 3, .order = 1}) ==
          Family::overpartition_l_regular(3));
    CHECK(family_of({.variant = Variant::rho_k_colored, .k = 3, .order = 1}) ==
          Family::k_colored(3));
    CHECK(family_of({.variant = Variant::rho_cubic, .order = 1}) == Family::cubic());
    CHECK(family_of({.variant = Variant::rho_pod, .order = 1}) == Family::pod());
    CHECK(family_of({.variant = Variant::rho_ped, .order = 1}) == Family::ped());
    CHECK(family_of({.variant = Variant::rho_epsilon, .order = 1}) ==
          Family::even_less_than_odd());
}

TEST_CASE("build_gf reproduces the worked constants") {
    CHECK(build_gf({.variant = Variant::rho, .order = 12}).coeff(12) == 10);
    CHECK(build_gf({.variant = Variant::rho_epsilon, .order = 10}).coeff(10) == 3);
    CHECK(build_gf({.variant = Variant::rho_over, .order = 8}).coeff(8) == 12);
    for (const VariantSpec& spec : sweep_specs(16, default_ell_sweep, default_color_sweep))
        CHECK(build_gf(spec).coeff(0) == 0);
}

TEST_CASE("build_gf outputs are even-supported and nonnegative up to 200") {
    for (const VariantSpec& spec : sweep_specs(200, default_ell_sweep, default_color_sweep)) {
        const Series s = build_gf(spec);
        for (std::size_t n = 0; n <= 200; ++n) {
            INFO(variant_name(spec.variant) << " ell=" << spec.ell << " k=" << spec.k
                                            << " at n=" << n);
            CHECK(s.coeff(n) >= 0);
            if (n % 2 == 1) CHECK(s.coeff(n) == 0);
        }
    }
}

TEST_CASE("verify against both oracles") {
    const VerificationReport report = verify({.variant = Variant::rho, .order = 40}, Oracle::both);
    CHECK(report.ok());
    CHECK(report.checked_order == 40);
    CHECK(report.mismatches.empty());
}

TEST_CASE("verify k-colored against the combinator") {
    const VerificationReport report =
        verify({.variant = Variant::rho_k_colored, .k = 2, .order = 30}, Oracle::combinator);
    CHECK(report.ok());
}

TEST_CASE("a perturbed series is reported with both values") {
    const VariantSpec spec{.variant = Variant::rho, .order = 20};
    std::vector<Int> coeffs = build_gf(spec).coeffs();
    const Int oracle_value = coeffs[10];
    coeffs[10] += 1;
    const Series perturbed(std::move(coeffs));
    const auto mismatches = verify_series(perturbed, family_of(spec), Oracle::both, 20);
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0].n == 10);
    CHECK(mismatches[0].series_value == oracle_value + 1);
    CHECK(mismatches[0].oracle_value == oracle_value);
}

TEST_CASE("substituting the mistyped k-colored product is caught early") {
    // inner generating function 1/(q^k;q^k) instead of 1/(q;q)^k, in doubled
    // form; the k=2 check must fail by n=6
    const int k = 2;
    const std::size_t order = 30;
    const Series wrong = eta_quotient({{2 * static_cast<std::size_t>(k), -1}}, order) -
                         Int(k) * (monomial(1, 2, order) * geometric(2, order)) -
                         constant(1, order);
    const auto mismatches =
        verify_series(wrong, Family::k_colored(k), Oracle::combinator, order);
    REQUIRE(!mismatches.empty());
    CHECK(mismatches.front().n <= 6);
}

TEST_CASE("verify_series rejects orders beyond the series") {
    const Series s = constant(0, 10);
    CHECK_THROWS_AS(verify_series(s, Family::unrestricted(), Oracle::both, 11),
                    std::invalid_argument);
}

TEST_CASE("enumeration budgets are enforced") {
    CHECK_THROWS_AS(verify({.variant = Variant::rho, .order = 121}, Oracle::combinator),
                    BudgetExceeded);
    CHECK_THROWS_AS(verify({.variant = Variant::rho, .order = 61}, Oracle::direct),
                    BudgetExceeded);
    CHECK_THROWS_AS(verify({.variant = Variant::rho, .order = 61}, Oracle::both),
                    BudgetExceeded);
    CHECK_NOTHROW(verify({.variant = Variant::rho, .order = 61}, Oracle::combinator));
    // custom budgets override the defaults
    CHECK_THROWS_AS(verify({.variant = Variant::rho, .order = 10}, Oracle::both,
                           Budgets{.combinator = 5, .direct = 5}),
                    BudgetExceeded);
}

TEST_CASE("verify_all sweeps in deterministic order") {
    const std::vector<int> ells{2, 3};
    const std::vector<int> ks{1, 2};
    const auto reports = verify_all(24, ells, ks, Oracle::both, {}, false);
    REQUIRE(reports.size() == 14);
    CHECK(reports.front().spec.variant == Variant::rho);
    CHECK(reports[1].spec.variant == Variant::rho_l_regular);
    CHECK(reports[1].spec.ell == 2);
    CHECK(reports[2].spec.ell == 3);
    CHECK(reports.back().spec.variant == Variant::rho_epsilon);
    for (const VerificationReport& report : reports) {
        INFO(variant_name(report.spec.variant));
        CHECK(report.ok());
    }
    // parallel evaluation returns the same reports in the same order
    const auto parallel_reports = verify_all(24, ells, ks, Oracle::both, {}, true);
    REQUIRE(parallel_reports.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(parallel_reports[i].spec == reports[i].spec);
        CHECK(parallel_reports[i].mismatches == reports[i].mismatches);
    }
}

TEST_CASE("verify_all at order zero trivially passes") {
    const auto reports = verify_all(0);
    CHECK(reports.size() == 22);  // 8 plain + 2*5 ell-swept + 4 color-swept
    for (const VerificationReport& report : reports) CHECK(report.ok());
}

TEST_CASE("verify is deterministic") {
    const VariantSpec spec{.variant = Variant::rho_cubic, .order = 30};
    const auto first = verify(spec, Oracle::both);
    const auto second = verify(spec, Oracle::both);
    CHECK(first.mismatches == second.mismatches);
    CHECK(first.spec == second.spec);
    CHECK(first.checked_order == second.checked_order);
}

TEST_CASE("rho_table renders the combinator path") {
    const auto values = rho_table(Family::unrestricted(), 12);
    REQUIRE(values.size() == 13);
    CHECK(values.back() == 10);
    CHECK(values[0] == 0);
    CHECK_THROWS_AS(rho_table(Family::unrestricted(), -1), std::invalid_argument);
}
