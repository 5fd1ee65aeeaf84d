#include <catch2/catch_amalgamated.hpp>

#include "genus1/count.hpp"

using namespace genus1;

TEST_CASE("binomial and helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(exact_div(mpz_class(12), mpz_class(4)) == 3);
    CHECK_THROWS_AS(exact_div(mpz_class(13), mpz_class(4)), std::logic_error);
    CHECK(factorial(5) == 120);
    CHECK(parse_backpoints("0") == BackPoints::Zero);
    CHECK(parse_backpoints("any") == BackPoints::Any);
    CHECK_THROWS_AS(parse_backpoints("3"), std::invalid_argument);
}

TEST_CASE("reduced counts, small values") {
    CHECK(reduced_count(4, 2, BackPoints::Zero) == 1); // only (1,3)(2,4)
    CHECK(reduced_count(3, 1, BackPoints::One) == 1);  // only (1,3,2)
    CHECK(reduced_count(4, 1, BackPoints::Two) == 1);  // only (1,4,3,2)
    CHECK(reduced_count(4, 1, BackPoints::Any) == 5);
    CHECK(reduced_count(4, 2, BackPoints::Any) == 1);
    CHECK(reduced_count(2, 1, BackPoints::Any) == 0);  // nothing reduced of genus 1 on 2 points
}

TEST_CASE("reduced two-backpoint column is a shift of the zero column, n<=20") {
    for (long n = 0; n <= 20; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(reduced_count(n, k, BackPoints::Two) ==
                  reduced_count(n, k + 1, BackPoints::Zero));
}

TEST_CASE("reduced columns sum to the any column, n<=20") {
    for (long n = 0; n <= 20; ++n) {
        mpz_class any_total = 0, split_total = 0;
        for (long k = 0; k <= n + 2; ++k) {
            any_total += reduced_count(n, k, BackPoints::Any);
            split_total += reduced_count(n, k, BackPoints::Zero) +
                           reduced_count(n, k, BackPoints::One) +
                           reduced_count(n, k, BackPoints::Two);
        }
        CHECK(any_total == split_total);
    }
}

TEST_CASE("full counts, small values") {
    CHECK(full_count(4, 2, BackPoints::Zero) == 1);
    CHECK(full_count(3, 1, BackPoints::Any) == 1);
    CHECK(full_count(4, 1, BackPoints::Any) == 5);
    CHECK(full_count(4, 2, BackPoints::Any) == 5);
    CHECK(full_count(4, 1, BackPoints::One) == 4);
    CHECK(full_count(5, 2, BackPoints::One) == 30);
    // |S_4| minus the 14 noncrossing ones
    mpz_class genus1_in_s4 = 0;
    for (long k = 1; k <= 4; ++k) genus1_in_s4 += full_count(4, k, BackPoints::Any);
    CHECK(genus1_in_s4 == 10);
}

TEST_CASE("full two-backpoint column is a shift of the zero column, n<=20") {
    for (long n = 0; n <= 20; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(full_count(n, k, BackPoints::Two) == full_count(n, k + 1, BackPoints::Zero));
}

TEST_CASE("full columns sum to the any column, n<=30") {
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(full_count(n, k, BackPoints::Any) == full_count(n, k, BackPoints::Zero) +
                                                          full_count(n, k, BackPoints::One) +
                                                          full_count(n, k, BackPoints::Two));
}

TEST_CASE("totals") {
    CHECK(totals(4, TotalKind::P0Total) == 1);
    CHECK(totals(5, TotalKind::P0Total) == 10);
    CHECK(totals(6, TotalKind::P0Total) == 70);
    CHECK(totals(4, TotalKind::R0Total) == 1);
    CHECK(totals(5, TotalKind::R0Total) == 5);
    CHECK(totals(6, TotalKind::R0Total) == 19);
    CHECK_THROWS_AS(totals(3, TotalKind::P0Total), std::invalid_argument);
    // the totals routine cross-checks closed form against row sums and throws
    // on any disagreement; exercise it over a range
    for (long n = 4; n <= 40; ++n) {
        CHECK_NOTHROW(totals(n, TotalKind::P0Total));
        CHECK_NOTHROW(totals(n, TotalKind::R0Total));
    }
}

TEST_CASE("narayana and j") {
    CHECK(narayana(4, 2) == 6);
    CHECK(narayana(5, 1) == 1);
    CHECK(narayana(5, 5) == 1);
    CHECK(narayana(5, 6) == 0);
    CHECK(j_count(4, 2) == 18);
    CHECK(j_count(1, 1) == 1);
    // Catalan row sums
    long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (long n = 1; n <= 8; ++n) {
        mpz_class s = 0;
        for (long k = 1; k <= n; ++k) s += narayana(n, k);
        CHECK(s == catalan[n]);
    }
}

TEST_CASE("one-backpoint full count factors through narayana, n<=25") {
    for (long n = 3; n <= 25; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(full_count(n, k, BackPoints::One) == binomial(n, 3) * narayana(n - 2, k));
}

TEST_CASE("formula table") {
    CountTable t = formula_table(CountTable::Kind::Partition, false, BackPoints::Any, 6);
    CHECK(t.at(4, 2) == 1);
    CHECK(t.at(5, 2) == full_count(5, 2, BackPoints::Zero));
    CHECK(t.at(3, 1) == 0);
    CHECK(t.provenance == CountTable::Provenance::Formula);

    CountTable r = formula_table(CountTable::Kind::Permutation, true, BackPoints::Any, 6);
    CHECK(r.at(4, 1) == 5);
    CHECK(r.at(4, 2) == 1);
}
