#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

#include "genus1/oracle.hpp"

using namespace genus1;

TEST_CASE("permutation enumeration") {
    long long seen = enumerate_permutations(4, [](const Permutation&) { return true; });
    CHECK(seen == 24);

    // lexicographic on image tables, early stop honored
    std::vector<std::vector<int>> first;
    enumerate_permutations(3, [&](const Permutation& a) {
        first.push_back(a.images());
        return first.size() < 2;
    });
    REQUIRE(first.size() == 2);
    CHECK(first[0] == std::vector<int>{1, 2, 3});
    CHECK(first[1] == std::vector<int>{1, 3, 2});

    CHECK(enumerate_permutations(0, [](const Permutation&) { return true; }) == 1);
    CHECK_THROWS_AS(enumerate_permutations(10, [](const Permutation&) { return true; }),
                    std::invalid_argument);
}

TEST_CASE("brute table of permutations") {
    BruteTable t = brute_table(CountTable::Kind::Permutation, 6);
    CHECK(t.sum(4) == 24);
    CHECK(t.sum(5) == 120);
    CHECK(t.sum(6) == 720);
    CHECK(t.sum(4, -1, 0) == 14); // Catalan
    CHECK(t.sum(4, -1, 1) == 10);
    CHECK(t.sum(5, -1, 1) == 70);
    CHECK(t.sum(4, 1, 1, -1, 1) == 5); // reduced genus-1 single cycles at n=4
    CHECK(t.sum(4, 2, 1, 0, 1) == 1);  // only (1,3)(2,4)
    CHECK(t.at(ClassKey{4, 2, 1, 0, true}) == 1);
    // 720 total = 132 of genus 0 + 420 of genus 1 + 168 of genus 2
    CHECK(t.sum(6, -1, 0) == 132);
    CHECK(t.sum(6, -1, 1) == 420);
    CHECK(t.sum(6, -1, 2) == 168);
}

TEST_CASE("brute table of partitions") {
    BruteTable t = brute_table(CountTable::Kind::Partition, 7);
    CHECK(t.sum(5) == 52);                 // Bell
    CHECK(t.sum(4, -1, 1) == 1);
    CHECK(t.sum(5, -1, 1) == 10);
    CHECK(t.sum(6, -1, 1) == 70);
    CHECK(t.sum(6, -1, 0) == 132);         // Catalan
    for (int n = 4; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(mpz_class(t.sum(n, k, 1)) == full_count(n, k, BackPoints::Zero));
}

TEST_CASE("parallel sweep agrees with serial") {
    BruteTable serial = brute_table(CountTable::Kind::Permutation, 7, 1);
    BruteTable parallel = brute_table(CountTable::Kind::Permutation, 7, 4);
    CHECK(serial.counts == parallel.counts);
}

TEST_CASE("cache round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "genus1_cache_test";
    fs::remove_all(dir);
    setenv("GENUS1_CACHE_DIR", dir.c_str(), 1);

    BruteTable fresh = brute_table(CountTable::Kind::Permutation, 5);
    CHECK(fs::exists(dir / "perm_5.csv"));
    BruteTable cached = brute_table(CountTable::Kind::Permutation, 5);
    CHECK(fresh.counts == cached.counts);

    unsetenv("GENUS1_CACHE_DIR");
    fs::remove_all(dir);
}

TEST_CASE("extension counts") {
    // permutations of S_5 with 2 cycles reducing to (1,3)(2,4)
    Permutation rho = parse_cycles("(1,3)(2,4)", 4);
    mpz_class direct = 0;
    enumerate_permutations(5, [&](const Permutation& a) {
        if (a.cycle_count() == 2 && reduce_fully(a).result == rho) direct += 1;
        return true;
    });
    CHECK(extension_count(rho, 5, 2) == direct);

    // every genus-1 permutation of S_n reduces to some reduced genus-1 one;
    // summing extension counts over all reduced targets recovers the row total
    for (int n = 4; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            mpz_class total = 0;
            std::set<std::vector<int>> targets;
            for (int m = 3; m <= n; ++m)
                enumerate_permutations(m, [&](const Permutation& r) {
                    if (genus(r) == 1 && is_reduced(r)) targets.insert(r.images());
                    return true;
                });
            for (const auto& img : targets)
                total += extension_count(Permutation(std::vector<int>(img)), n, k);
            CHECK(total == full_count(n, k, BackPoints::Any));
        }

    CHECK_THROWS_AS(extension_count(zeta(3), 4, 1), std::invalid_argument);
}

TEST_CASE("verify suite passes") {
    VerifyReport report = verify_suite(6, 2);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.pass);
    }
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 14);
}
