#include <catch2/catch_amalgamated.hpp>

#include "genus1/count.hpp"
#include "genus1/series.hpp"

using namespace genus1;

namespace {

BivariateSeries poly(int t, std::vector<BivariateSeries::Term> terms) {
    return BivariateSeries(t, terms);
}

} // namespace

TEST_CASE("ring operations") {
    BivariateSeries one = poly(4, {{0, 0, 1}});
    BivariateSeries x = poly(4, {{1, 0, 1}});
    BivariateSeries y = poly(4, {{0, 1, 1}});

    CHECK((x + y - y).at(1, 0) == 1);
    CHECK((x * y).at(1, 1) == 1);
    CHECK((x * y).at(1, 0) == 0);
    CHECK(agree(series_pow(one + x, 2), poly(4, {{0, 0, 1}, {1, 0, 2}, {2, 0, 1}})));
    CHECK(agree(series_pow(x, 5), BivariateSeries(4))); // truncated away
    CHECK((mpq_class(1, 2) * x).at(1, 0) == mpq_class(1, 2));
    CHECK(BivariateSeries(3).is_zero());
    CHECK_FALSE(one.is_zero());
    CHECK_THROWS_AS(one.coefficient(5, 0), std::out_of_range);
    CHECK(one.coefficient(0, 5) == 0);
}

TEST_CASE("divide") {
    // 1 / (1 - x) is the geometric series
    BivariateSeries g = divide(poly(6, {{0, 0, 1}}), poly(6, {{0, 0, 1}, {1, 0, -1}}));
    for (int n = 0; n <= 6; ++n) CHECK(g.at(n, 0) == 1);

    // 1 / (1 - xy) and exactness of the quotient
    BivariateSeries h = divide(poly(6, {{0, 0, 1}}), poly(6, {{0, 0, 1}, {1, 1, -1}}));
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k) CHECK(h.at(n, k) == (n == k ? 1 : 0));

    // f = q * g round trip for a denser pair
    BivariateSeries f = poly(6, {{0, 0, 2}, {2, 1, 7}, {4, 3, -1}});
    BivariateSeries d = poly(6, {{0, 0, 3}, {1, 0, 1}, {1, 1, -2}, {2, 2, 5}});
    CHECK(agree(divide(f, d) * d, f));

    CHECK_THROWS_AS(divide(f, poly(6, {{1, 0, 1}})), std::invalid_argument);
}

TEST_CASE("inv_sqrt") {
    BivariateSeries f = poly(8, {{0, 0, 1}, {1, 0, -4}, {1, 1, 2}, {2, 1, 3}});
    BivariateSeries r = inv_sqrt(f);
    CHECK(agree(r * r * f, poly(8, {{0, 0, 1}})));
    CHECK_THROWS_AS(inv_sqrt(poly(4, {{0, 0, 2}})), std::invalid_argument);
    // (1-x)^{-1/2} starts 1 + x/2 + 3x^2/8
    BivariateSeries s = inv_sqrt(poly(4, {{0, 0, 1}, {1, 0, -1}}));
    CHECK(s.at(1, 0) == mpq_class(1, 2));
    CHECK(s.at(2, 0) == mpq_class(3, 8));
}

TEST_CASE("partial_x and substitute_x") {
    BivariateSeries f = poly(5, {{0, 0, 1}, {3, 2, 4}, {5, 1, 2}});
    BivariateSeries df = partial_x(f);
    CHECK(df.at(2, 2) == 12);
    CHECK(df.trunc() == 4);
    CHECK(partial_x(BivariateSeries(0)).is_zero());

    // substitute x <- x + x^2 into 1/(1-x): gives 1/(1-x-x^2), Fibonacci
    BivariateSeries geo = divide(poly(8, {{0, 0, 1}}), poly(8, {{0, 0, 1}, {1, 0, -1}}));
    BivariateSeries fib = substitute_x(geo, poly(8, {{1, 0, 1}, {2, 0, 1}}));
    long expect[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int n = 0; n <= 8; ++n) CHECK(fib.at(n, 0) == expect[n]);

    CHECK_THROWS_AS(substitute_x(geo, poly(8, {{0, 0, 1}})), std::invalid_argument);
}

TEST_CASE("D has Narayana coefficients and satisfies its equation") {
    const int t = 10;
    BivariateSeries d = solve_D(t);
    for (int n = 0; n <= t; ++n)
        for (int k = 0; k <= t; ++k) {
            mpz_class expect = (n == 0) ? mpz_class(k == 0 ? 1 : 0) : narayana(n, k);
            CHECK(d.coefficient_int(n, k) == expect);
        }
    // D = 1 + xyD + x(D-1)D
    BivariateSeries one = poly(t, {{0, 0, 1}});
    BivariateSeries residual =
        d - one - poly(t, {{1, 1, 1}}) * d - poly(t, {{1, 0, 1}}) * ((d - one) * d);
    CHECK(residual.is_zero());
}

TEST_CASE("x D'/D expands with coefficients C(n,k)C(n-1,k-1)") {
    const int t = 9;
    BivariateSeries d = solve_D(t + 1);
    BivariateSeries dcut(t);
    for (int n = 0; n <= t; ++n)
        for (int k = 0; k <= t; ++k) dcut.at(n, k) = d.at(n, k);
    BivariateSeries j = divide(poly(t, {{1, 0, 1}}) * partial_x(d), dcut);
    for (int n = 0; n <= t; ++n)
        for (int k = 0; k <= t; ++k) CHECK(j.coefficient_int(n, k) == j_count(n, k));
}

TEST_CASE("radical surrogate squares to the discriminant") {
    const int t = 10;
    BivariateSeries d = solve_D(t);
    BivariateSeries s = radical_surrogate(d);
    BivariateSeries delta =
        poly(t, {{0, 0, 1}, {1, 0, -2}, {1, 1, -2}, {2, 0, 1}, {2, 1, -2}, {2, 2, 1}});
    CHECK(agree(s * s, delta));
    // and inverts against the Newton inverse square root
    CHECK(agree(s * inv_sqrt(delta), poly(t, {{0, 0, 1}})));
}

TEST_CASE("inverse square root of the discriminant has squared-binomial rows") {
    const int t = 10;
    BivariateSeries delta =
        poly(t, {{0, 0, 1}, {1, 0, -2}, {1, 1, -2}, {2, 0, 1}, {2, 1, -2}, {2, 2, 1}});
    BivariateSeries r = inv_sqrt(delta);
    for (int n = 0; n <= t; ++n)
        for (int k = 0; k <= t; ++k)
            CHECK(r.coefficient_int(n, k) == binomial(n, k) * binomial(n, k));
}

TEST_CASE("reduced series match the reduced counting formulas") {
    const int t = 12;
    struct Row { const char* name; BackPoints j; } rows[] = {
        {"R0", BackPoints::Zero}, {"R1", BackPoints::One},
        {"R2", BackPoints::Two}, {"Rstar", BackPoints::Any}};
    for (const auto& row : rows) {
        BivariateSeries s = expand_named(row.name, t);
        for (int n = 0; n <= t; ++n)
            for (int k = 0; k <= t; ++k)
                CHECK(s.coefficient_int(n, k) == reduced_count(n, k, row.j));
    }
}

TEST_CASE("full series match the full counting formulas") {
    const int t = 12;
    struct Row { const char* name; BackPoints j; } rows[] = {
        {"P0", BackPoints::Zero}, {"P1", BackPoints::One},
        {"P2", BackPoints::Two}, {"Pstar", BackPoints::Any}};
    for (const auto& row : rows) {
        BivariateSeries s = expand_named(row.name, t);
        for (int n = 0; n <= t; ++n)
            for (int k = 0; k <= t; ++k)
                CHECK(s.coefficient_int(n, k) == full_count(n, k, row.j));
    }
    CHECK(expand_named("P0", 4).coefficient_int(4, 2) == 1);
}

TEST_CASE("star series are the sums of the three backpoint series") {
    const int t = 10;
    CHECK(agree(expand_named("Rstar", t),
                expand_named("R0", t) + expand_named("R1", t) + expand_named("R2", t)));
    CHECK(agree(expand_named("Pstar", t),
                expand_named("P0", t) + expand_named("P1", t) + expand_named("P2", t)));
}

TEST_CASE("lifting the reduced series yields the full series") {
    const int t = 10;
    CHECK(agree(lift_reduced_to_full(expand_named("R0", t)), expand_named("P0", t)));
    CHECK(agree(lift_reduced_to_full(expand_named("R1", t)), expand_named("P1", t)));
    CHECK(agree(lift_reduced_to_full(expand_named("R2", t)), expand_named("P2", t)));
    CHECK(agree(lift_reduced_to_full(expand_named("Rstar", t)), expand_named("Pstar", t)));
}

TEST_CASE("Dfactor equals the lift correction factor") {
    const int t = 10;
    CHECK(agree(expand_named("Dfactor", t), lift_factor(t)));
    CHECK_THROWS_AS(expand_named("Q7", 4), std::invalid_argument);
}
