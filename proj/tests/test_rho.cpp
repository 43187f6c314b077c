#include <catch2/catch.hpp>

#include <string>
#include <vector>

#include "rhoq/rho.hpp"

using namespace rhoq;

namespace {

std::vector<Family> sweep_families() {
    std::vector<Family> families{
        Family::unrestricted(),       Family::overpartition(),
        Family::overpartition_odd(),  Family::overpartition_even(),
        Family::cubic(),              Family::pod(),
        Family::ped(),                Family::even_less_than_odd(),
    };
    for (int ell : {2, 3, 4, 5, 7}) {
        families.push_back(Family::l_regular(ell));
        families.push_back(Family::overpartition_l_regular(ell));
    }
    for (int k : {1, 2, 3, 5}) families.push_back(Family::k_colored(k));
    return families;
}

std::vector<std::string> formatted(const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const Partition& p : ps) out.push_back(format_partition(p));
    return out;
}

}  // namespace

TEST_CASE("single-part counts") {
    CHECK(single_part_count(Family::overpartition(), 5) == 2);
    CHECK(single_part_count(Family::l_regular(3), 6) == 0);
    CHECK(single_part_count(Family::l_regular(3), 7) == 1);
    CHECK(single_part_count(Family::k_colored(4), 7) == 4);
    CHECK(single_part_count(Family::cubic(), 6) == 2);
    CHECK(single_part_count(Family::cubic(), 5) == 1);
    CHECK(single_part_count(Family::overpartition_odd(), 3) == 2);
    CHECK(single_part_count(Family::overpartition_odd(), 4) == 0);
    CHECK(single_part_count(Family::even_less_than_odd(), 9) == 1);
    CHECK_THROWS_AS(single_part_count(Family::unrestricted(), 0), std::invalid_argument);
}

TEST_CASE("single-part count agrees with the weight of a one-part partition") {
    for (const Family& f : sweep_families())
        for (int lambda = 1; lambda <= 30; ++lambda)
            CHECK(single_part_count(f, lambda) ==
                  decoration_weight(f, Partition(std::vector<int>{lambda})));
}

TEST_CASE("rho counts") {
    CHECK(rho_count(Family::unrestricted(), 12) == 10);
    CHECK(rho_count(Family::unrestricted(), 0) == 0);
    for (const Family& f : sweep_families()) CHECK(rho_count(f, 7) == 0);
    CHECK(rho_count(Family::even_less_than_odd(), 10) == 3);
    CHECK(rho_count(Family::overpartition(), 8) == 12);
}

TEST_CASE("rho_direct oracle") {
    CHECK(rho_direct(Family::unrestricted(), 12) == 10);
    CHECK(rho_direct(Family::unrestricted(), 2) == 0);
    CHECK(rho_direct(Family::pod(), 6) == 1);
    CHECK(rho_direct(Family::overpartition(), 8) == 12);
}

TEST_CASE("rho partition listings reproduce the worked examples") {
    const auto rho12 = formatted(rho_partitions(Family::unrestricted(), 12));
    const std::vector<std::string> expected12{
        "6+5+1",       "6+4+2",         "6+4+1+1",   "6+3+3",       "6+3+2+1",
        "6+3+1+1+1",   "6+2+2+2",       "6+2+2+1+1", "6+2+1+1+1+1", "6+1+1+1+1+1+1",
    };
    CHECK(rho12 == expected12);

    const auto eps10 = formatted(rho_partitions(Family::even_less_than_odd(), 10));
    const std::vector<std::string> expected10{"5+3+2", "5+3+1+1", "5+1+1+1+1+1"};
    CHECK(eps10 == expected10);

    CHECK(rho_partitions(Family::unrestricted(), 7).empty());
    CHECK(rho_partitions(Family::unrestricted(), 0).empty());
}

TEST_CASE("combinator equals direct enumeration across the sweep") {
    for (const Family& f : sweep_families())
        for (int n = 0; n <= 60; n += 2) {
            INFO(family_name(f) << " at n=" << n);
            CHECK(rho_count(f, n) == rho_direct(f, n));
        }
}

TEST_CASE("unrestricted rho is the partition count minus one") {
    for (int lambda = 1; lambda <= 30; ++lambda)
        CHECK(rho_count(Family::unrestricted(), 2 * lambda) ==
              count(Family::unrestricted(), lambda) - 1);
}

TEST_CASE("rho counts are never negative") {
    for (const Family& f : sweep_families())
        for (int n = 0; n <= 50; ++n) CHECK(rho_count(f, n) >= 0);
}

TEST_CASE("one color is no restriction for rho") {
    for (int n = 0; n <= 40; ++n)
        CHECK(rho_count(Family::k_colored(1), n) == rho_count(Family::unrestricted(), n));
}

TEST_CASE("rho_a by enumeration") {
    CHECK(rho_a(2) == 0);
    CHECK(rho_a(4) == 3);
    CHECK(rho_a(12) == 99);
    CHECK_THROWS_AS(rho_a(7), OddArgument);
    CHECK_THROWS_AS(rho_a(0), std::invalid_argument);
}

TEST_CASE("recurrence spot values") {
    const RecurrenceCheck at12 = evaluate_recurrence(12);
    CHECK(at12.rho_a_value == 99);
    CHECK(at12.lhs == 198);
    CHECK(at12.rhs == 198);
    CHECK(at12.holds);

    const RecurrenceCheck at2 = evaluate_recurrence(2);
    CHECK(at2.lhs == 0);
    CHECK(at2.rhs == 0);  // 2*(0-1) + 2*a(1)
    CHECK(at2.holds);

    const RecurrenceCheck at4 = evaluate_recurrence(4);
    CHECK(at4.lhs == 6);
    CHECK(at4.rhs == 6);  // 4*(1-1) + 2*a(2)
    CHECK(at4.holds);

    CHECK_THROWS_AS(evaluate_recurrence(5), OddArgument);
}

TEST_CASE("recurrence holds on the full range") {
    for (int n = 2; n <= 80; n += 2) {
        INFO("n=" << n);
        CHECK(check_recurrence(n));
    }
}
