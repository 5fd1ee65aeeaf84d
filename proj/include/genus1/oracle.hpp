#pragma once

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "count.hpp"
#include "reduce.hpp"

namespace genus1 {

inline constexpr int kOracleLimitPermutations = 9;
inline constexpr int kOracleLimitPartitions = 12;

/// Visit every element of S_n exactly once, in lexicographic order on image
/// tables. Returns the number visited; the callback may return false to stop.
inline long enumerate_permutations(int n,
                                        const std::function<bool(const Permutation&)>& fn,
                                        int limit = kOracleLimitPermutations) {
    if (n > limit)
        throw std::invalid_argument("enumerate_permutations: n exceeds oracle limit");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    long count = 0;
    do {
        ++count;
        if (!fn(Permutation(img))) return count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

/// Classification axes of a brute-force count.
struct ClassKey {
    int n = 0;
    int k = 0; // cycle/block count
    int genus = 0;
    int backpoints = 0;
    bool reduced = false;

    auto operator<=>(const ClassKey&) const = default;
};

/// Counts of all permutations (or partitions) of sizes up to n_max, fully
/// classified by (n, k, genus, back points, reduced).
struct BruteTable {
    CountTable::Kind kind = CountTable::Kind::Permutation;
    std::map<ClassKey, long> counts;

    long at(const ClassKey& key) const {
        auto it = counts.find(key);
        return it == counts.end() ? 0 : it->second;
    }

    /// Sum over the classes of size n matching the given filters; -1 matches
    /// every value of that axis.
    long sum(int n, int k = -1, int genus = -1, int backpoints = -1,
                  int reduced = -1) const {
        long s = 0;
        for (const auto& [key, v] : counts) {
            if (key.n != n) continue;
            if (k >= 0 && key.k != k) continue;
            if (genus >= 0 && key.genus != genus) continue;
            if (backpoints >= 0 && key.backpoints != backpoints) continue;
            if (reduced >= 0 && key.reduced != (reduced != 0)) continue;
            s += v;
        }
        return s;
    }
};

namespace oracle_detail {

inline ClassKey classify(const Permutation& alpha) {
    return ClassKey{alpha.size(), alpha.cycle_count(), genus(alpha),
                    static_cast<int>(back_points(alpha).size()), is_reduced(alpha)};
}

inline std::filesystem::path cache_file(CountTable::Kind kind, int n) {
    const char* dir = std::getenv("GENUS1_CACHE_DIR");
    if (!dir || !*dir) return {};
    std::string name = (kind == CountTable::Kind::Permutation ? "perm_" : "part_") +
                       std::to_string(n) + ".csv";
    return std::filesystem::path(dir) / name;
}

inline bool load_cached(CountTable::Kind kind, int n, std::map<ClassKey, long>& into) {
    auto path = cache_file(kind, n);
    if (path.empty() || !std::filesystem::exists(path)) return false;
    std::ifstream in(path);
    std::string line;
    std::map<ClassKey, long> loaded;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ClassKey key;
        int reduced;
        long v;
        if (std::sscanf(line.c_str(), "%d,%d,%d,%d,%d,%ld", &key.n, &key.k, &key.genus,
                        &key.backpoints, &reduced, &v) != 6)
            return false;
        key.reduced = reduced != 0;
        loaded[key] = v;
    }
    for (auto& [k, v] : loaded) into[k] += v;
    return true;
}

inline void store_cached(CountTable::Kind kind, int n, const std::map<ClassKey, long>& all) {
    auto path = cache_file(kind, n);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    for (const auto& [key, v] : all)
        if (key.n == n)
            out << key.n << ',' << key.k << ',' << key.genus << ',' << key.backpoints << ','
                << (key.reduced ? 1 : 0) << ',' << v << '\n';
}

/// Permutation sweep for one n, split across workers by the image of 1.
/// Sub-tables are merged by entry-wise addition, so the result does not
/// depend on the worker count.
inline void sweep_permutations(int n, int jobs, std::map<ClassKey, long>& into) {
    if (n == 0) {
        into[classify(Permutation())] += 1;
        return;
    }
    jobs = std::max(1, std::min(jobs, n));
    std::vector<std::map<ClassKey, long>> partial(n);
    auto work = [&](int first_image) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (v != first_image) rest.push_back(v);
        auto& local = partial[first_image - 1];
        do {
            std::vector<int> img(n);
            img[0] = first_image;
            std::copy(rest.begin(), rest.end(), img.begin() + 1);
            local[classify(Permutation(std::move(img)))] += 1;
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    if (jobs == 1) {
        for (int fi = 1; fi <= n; ++fi) work(fi);
    } else {
        std::vector<std::thread> threads;
        std::atomic<int> next{1};
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back([&] {
                for (int fi = next++; fi <= n; fi = next++) work(fi);
            });
        for (auto& th : threads) th.join();
    }
    for (const auto& m : partial)
        for (const auto& [key, v] : m) into[key] += v;
}

} // namespace oracle_detail

/// Exhaustive classification table, built by full enumeration. Results are
/// optionally cached as CSV under $GENUS1_CACHE_DIR, keyed by (kind, n).
inline BruteTable brute_table(CountTable::Kind kind, int n_max, int jobs = 1) {
    const int limit = kind == CountTable::Kind::Permutation ? kOracleLimitPermutations
                                                            : kOracleLimitPartitions;
    if (n_max > limit)
        throw std::invalid_argument("brute_table: n_max exceeds oracle limit");
    BruteTable table;
    table.kind = kind;
    for (int n = 0; n <= n_max; ++n) {
        if (oracle_detail::load_cached(kind, n, table.counts)) continue;
        std::map<ClassKey, long> fresh;
        if (kind == CountTable::Kind::Permutation) {
            oracle_detail::sweep_permutations(n, jobs, fresh);
        } else {
            enumerate_set_partitions(n, [&](const SetPartition& p) {
                Permutation alpha = to_permutation(p);
                fresh[oracle_detail::classify(alpha)] += 1;
                return true;
            });
        }
        oracle_detail::store_cached(kind, n, fresh);
        for (const auto& [key, v] : fresh) table.counts[key] += v;
    }
    return table;
}

/// Number of permutations of S_n with k cycles whose full reduction is rho.
inline mpz_class extension_count(const Permutation& rho, int n, int k) {
    if (!is_reduced(rho))
        throw std::invalid_argument("extension_count: rho is not reduced");
    long count = 0;
    enumerate_permutations(n, [&](const Permutation& alpha) {
        if (alpha.cycle_count() == k && reduce_fully(alpha).result == rho) ++count;
        return true;
    });
    return mpz_class(static_cast<long>(count));
}

/// One verification check: pass/fail plus the first counterexample found.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness; // empty when passing
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace oracle_detail {

template <class Fn>
void run_check(VerifyReport& report, const std::string& name, Fn&& body) {
    CheckResult res;
    res.name = name;
    try {
        body(res);
    } catch (const std::exception& e) {
        res.pass = false;
        if (res.witness.empty()) res.witness = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(res));
}

inline void fail(CheckResult& res, const std::string& witness) {
    if (res.pass) {
        res.pass = false;
        res.witness = witness;
    }
}

} // namespace oracle_detail

/// Run every cross-module invariant up to n_max, reporting pass/fail with a
/// first counterexample per failed check.
inline VerifyReport verify_suite(int n_max, int jobs = 1) {
    using oracle_detail::fail;
    using oracle_detail::run_check;
    VerifyReport report;
    const int n_perm = std::min(n_max, kOracleLimitPermutations);

    run_check(report, "genus-definition-well-defined", [&](CheckResult& res) {
        for (int n = 1; n <= n_perm && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                int t = n + 1 - a.cycle_count() - kreweras(a).cycle_count();
                if (t < 0 || t % 2 != 0) {
                    fail(res, "alpha=" + format_cycles(a) + " n=" + std::to_string(n));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "transposition-cycle-lemma", [&](CheckResult& res) {
        for (int n = 2; n <= std::min(n_perm, 7) && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        Permutation tau = transposition(n, i, j);
                        bool same = false;
                        for (int x = a(i); x != i; x = a(x))
                            if (x == j) { same = true; break; }
                        int expect = a.cycle_count() + (same ? 1 : -1);
                        if (compose(a, tau).cycle_count() != expect ||
                            compose(tau, a).cycle_count() != expect) {
                            fail(res, "alpha=" + format_cycles(a) + " tau=(" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
                            return false;
                        }
                    }
                return true;
            });
    });

    run_check(report, "backpoint-genus-lemma", [&](CheckResult& res) {
        for (int n = 1; n <= n_perm && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                if (static_cast<int>(back_points(a).size() + back_points(kreweras(a)).size()) !=
                    2 * genus(a)) {
                    fail(res, "alpha=" + format_cycles(a));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "kreweras-preserves-genus", [&](CheckResult& res) {
        for (int n = 1; n <= n_perm && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                if (genus(kreweras(a)) != genus(a)) {
                    fail(res, "alpha=" + format_cycles(a));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "four-type-classification", [&](CheckResult& res) {
        for (int n = 1; n <= n_perm && res.pass; ++n) {
            std::map<Genus1Type, long> seen;
            enumerate_permutations(n, [&](const Permutation& a) {
                if (genus(a) == 1) seen[classify_genus1(a)] += 1;
                return true;
            });
            if (n >= 6 && seen.size() != 4)
                fail(res, "n=" + std::to_string(n) + " has only " +
                              std::to_string(seen.size()) + " nonempty classes");
        }
    });

    run_check(report, "noncrossing-iff-genus0", [&](CheckResult& res) {
        for (int n = 0; n <= n_perm && res.pass; ++n)
            enumerate_set_partitions(n, [&](const SetPartition& p) {
                if (is_noncrossing(p) != (n == 0 || genus_of_partition(p) == 0)) {
                    fail(res, format_partition(p));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "partition-roundtrip", [&](CheckResult& res) {
        for (int n = 0; n <= n_perm && res.pass; ++n)
            enumerate_set_partitions(n, [&](const SetPartition& p) {
                if (from_permutation(to_permutation(p)) != p) {
                    fail(res, format_partition(p));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "colored-partition-classification", [&](CheckResult& res) {
        for (int n = 2; n <= std::min(n_perm, 6) && res.pass; ++n) {
            auto colorings = all_colorings(n);
            enumerate_set_partitions(n, [&](const SetPartition& p) {
                if (!is_noncrossing(p)) return true;
                for (const auto& cp : colorings) {
                    ColoredPartition colored(p, cp);
                    int g = genus(phi_map(colored));
                    if (g != 0 && g != 1) {
                        fail(res, format_partition(p) + " genus=" + std::to_string(g));
                        return false;
                    }
                    if (colored_genus_classify(colored).first != g) {
                        fail(res, format_partition(p) + " ijkl=(" + std::to_string(cp.i) + "," +
                                      std::to_string(cp.j) + "," + std::to_string(cp.k) + "," +
                                      std::to_string(cp.l) + ")");
                        return false;
                    }
                }
                return true;
            });
        }
    });

    run_check(report, "separating-points-exist", [&](CheckResult& res) {
        for (int n = 3; n <= std::min(n_perm, 7) && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                if (genus(a) != 1) return true;
                SeparatingPoints sp = find_separating(a);
                Permutation back = phi_map(induced_representation(a, sp));
                if (back != a) {
                    fail(res, "alpha=" + format_cycles(a));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "canonical-separating-valid", [&](CheckResult& res) {
        for (int n = 3; n <= n_perm && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                if (genus(a) != 1 || !is_reduced(a)) return true;
                SeparatingPoints sp = canonical_separating(a);
                if (!is_separating(a, sp) || !is_canonical_candidate(a, sp) ||
                    phi_map(canonical_representation(a)) != a) {
                    fail(res, "alpha=" + format_cycles(a));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "canonical-uniqueness", [&](CheckResult& res) {
        for (int n = 3; n <= std::min(n_perm, 7) && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                if (genus(a) != 1 || !is_reduced(a)) return true;
                int hits = 0;
                for (const auto& sp : all_quadruples(n))
                    if (hypermap_genus(theta_of_separating(sp), a) == 0 &&
                        is_canonical_candidate(a, sp))
                        ++hits;
                if (hits != 1) {
                    fail(res, "alpha=" + format_cycles(a) + " candidates=" + std::to_string(hits));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "reduction-order-independence", [&](CheckResult& res) {
        std::mt19937 rng(20240601);
        for (int n = 1; n <= n_perm && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                Permutation reference = reduce_fully(a).result;
                if (genus(reduce_fully(a).result) != genus(a)) {
                    fail(res, "genus changed for alpha=" + format_cycles(a));
                    return false;
                }
                const int replays = n <= 6 ? 50 : 5;
                for (int rep = 0; rep < replays; ++rep) {
                    Permutation cur = a;
                    for (;;) {
                        auto tc = trivial_cycles(cur);
                        if (tc.empty()) break;
                        cur = reduce_once(cur, tc[rng() % tc.size()]);
                    }
                    if (cur != reference) {
                        fail(res, "alpha=" + format_cycles(a));
                        return false;
                    }
                }
                return true;
            });
    });

    run_check(report, "removable-cycles-equivalence", [&](CheckResult& res) {
        for (int n = 1; n <= std::min(n_perm, 8) && res.pass; ++n)
            enumerate_permutations(n, [&](const Permutation& a) {
                std::set<std::vector<int>> direct;
                for (const auto& c : removable_cycles(a)) direct.insert(c.elements);
                std::set<std::vector<int>> via_reduce;
                for (const auto& step : reduce_fully(a).steps) {
                    auto elems = step.original_elements;
                    // recover the original cycle in cycle order, min first
                    std::vector<int> cyc;
                    int start = *std::min_element(elems.begin(), elems.end());
                    for (int x = start;;) {
                        cyc.push_back(x);
                        x = a(x);
                        if (x == start) break;
                    }
                    via_reduce.insert(cyc);
                }
                if (direct != via_reduce) {
                    fail(res, "alpha=" + format_cycles(a));
                    return false;
                }
                return true;
            });
    });

    run_check(report, "formula-vs-bruteforce", [&](CheckResult& res) {
        BruteTable perms = brute_table(CountTable::Kind::Permutation, n_perm, jobs);
        BruteTable parts =
            brute_table(CountTable::Kind::Partition, std::min(n_max, kOracleLimitPartitions), jobs);
        for (int n = 0; n <= n_perm && res.pass; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (int j = 0; j <= 2; ++j) {
                    BackPoints sel = j == 0 ? BackPoints::Zero
                                   : j == 1 ? BackPoints::One
                                            : BackPoints::Two;
                    if (full_count(n, k, sel) != perms.sum(n, k, 1, j))
                        fail(res, "p_" + std::to_string(j) + "(" + std::to_string(n) + "," +
                                      std::to_string(k) + ")");
                    if (reduced_count(n, k, sel) != perms.sum(n, k, 1, j, 1))
                        fail(res, "r_" + std::to_string(j) + "(" + std::to_string(n) + "," +
                                      std::to_string(k) + ")");
                }
                if (full_count(n, k, BackPoints::Any) != perms.sum(n, k, 1))
                    fail(res, "p_*(" + std::to_string(n) + "," + std::to_string(k) + ")");
                if (full_count(n, k, BackPoints::Zero) != parts.sum(n, k, 1))
                    fail(res, "partition p_0(" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
            // histogram sanity
            long total = perms.sum(n);
            long factorial_n = 1;
            for (int t = 2; t <= n; ++t) factorial_n *= t;
            if (total != factorial_n) fail(res, "permutation histogram n=" + std::to_string(n));
        }
    });

    return report;
}

} // namespace genus1
