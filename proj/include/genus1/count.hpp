#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace genus1 {

/// C(n,k) as an exact integer; 0 outside 0 <= k <= n. The zero convention
/// encodes every support condition of the counting formulas.
inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Divides a by b, insisting the division is exact.
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("exact_div: inexact division");
    return a / b;
}

enum class BackPoints { Zero, One, Two, Any };

inline BackPoints parse_backpoints(const std::string& s) {
    if (s == "0") return BackPoints::Zero;
    if (s == "1") return BackPoints::One;
    if (s == "2") return BackPoints::Two;
    if (s == "any") return BackPoints::Any;
    throw std::invalid_argument("backpoints must be 0, 1, 2 or any");
}

/// r_j(n,k): reduced genus-1 permutations with j back points and k cycles.
/// j = 0 counts the reduced genus-1 partitions.
inline mpz_class reduced_count(long n, long k, BackPoints j) {
    switch (j) {
        case BackPoints::Zero:
            return binomial(n, 2 * k) * binomial(k + 1, 3);
        case BackPoints::Two:
            return binomial(n, 2 * k + 2) * binomial(k + 2, 3);
        case BackPoints::One:
            return binomial(n, 2 * k + 1) * (binomial(k + 2, 3) + binomial(k + 1, 3));
        case BackPoints::Any:
            return binomial(n + 2, 2 * k + 2) * binomial(k + 1, 3) +
                   binomial(n + 1, 2 * k + 2) * binomial(k + 1, 2);
    }
    throw std::invalid_argument("reduced_count: bad selector");
}

/// p_j(n,k): all genus-1 permutations with j back points and k cycles.
/// j = 0 counts the genus-1 partitions.
inline mpz_class full_count(long n, long k, BackPoints j) {
    switch (j) {
        case BackPoints::Zero:
            return exact_div(binomial(n, 2) * binomial(n - 2, k) * binomial(n - 2, k - 2), 6);
        case BackPoints::Two:
            return exact_div(binomial(n, 2) * binomial(n - 2, k + 1) * binomial(n - 2, k - 1), 6);
        case BackPoints::One:
            return exact_div(binomial(n, 2) * binomial(n - 2, k) * binomial(n - 2, k - 1), 3);
        case BackPoints::Any:
            return exact_div(binomial(n + 1, 2) * binomial(n - 1, k + 1) * binomial(n - 1, k - 1), 6);
    }
    throw std::invalid_argument("full_count: bad selector");
}

inline mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

enum class TotalKind { P0Total, R0Total };

/// Row totals over k, cross-checked against the closed forms: the factorial
/// expression (2n-5)!/(6 (n-4)! (n-3)!) for genus-1 partitions, and the
/// asymmetric-Delannoy expression for reduced genus-1 partitions.
inline mpz_class totals(long n, TotalKind which) {
    if (n < 4) throw std::invalid_argument("totals: need n >= 4");
    mpz_class closed, rowsum = 0;
    if (which == TotalKind::P0Total) {
        closed = exact_div(factorial(2 * n - 5), 6 * factorial(n - 4) * factorial(n - 3));
        for (long k = 0; k <= n; ++k) rowsum += full_count(n, k, BackPoints::Zero);
    } else {
        closed = 0;
        const long coeff[4] = {1, 3, 3, 1};
        for (int t = 0; t < 4; ++t) {
            mpz_class b = binomial(n - 4, t);
            if (b == 0) continue;
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(n - 4 - t));
            closed += coeff[t] * b * pw;
        }
        for (long k = 0; k <= n; ++k) rowsum += reduced_count(n, k, BackPoints::Zero);
    }
    if (closed != rowsum)
        throw std::logic_error("totals: closed form disagrees with row sum at n=" + std::to_string(n));
    return closed;
}

/// Narayana number N(n,k) = C(n,k) C(n,k-1) / n.
inline mpz_class narayana(long n, long k) {
    if (n <= 0 || k < 1 || k > n) return 0;
    return exact_div(binomial(n, k) * binomial(n, k - 1), n);
}

/// J(n,k) = C(n,k) C(n-1,k-1).
inline mpz_class j_count(long n, long k) {
    return binomial(n, k) * binomial(n - 1, k - 1);
}

/// A tabulated family of counts keyed by (n,k), with recorded provenance.
struct CountTable {
    enum class Kind { Partition, Permutation };
    enum class Provenance { Formula, BruteForce, Series };

    Kind kind = Kind::Partition;
    bool reduced = false;
    BackPoints backpoints = BackPoints::Any;
    Provenance provenance = Provenance::Formula;
    std::map<std::pair<long, long>, mpz_class> entries;

    mpz_class at(long n, long k) const {
        auto it = entries.find({n, k});
        return it == entries.end() ? mpz_class(0) : it->second;
    }
};

/// Table of formula values for n <= n_max, all k.
inline CountTable formula_table(CountTable::Kind kind, bool reduced, BackPoints j, long n_max) {
    CountTable t;
    t.kind = kind;
    t.reduced = reduced;
    t.backpoints = j;
    t.provenance = CountTable::Provenance::Formula;
    if (kind == CountTable::Kind::Partition) j = BackPoints::Zero;
    for (long n = 0; n <= n_max; ++n)
        for (long k = 0; k <= n; ++k) {
            mpz_class v = reduced ? reduced_count(n, k, j) : full_count(n, k, j);
            if (v != 0) t.entries[{n, k}] = v;
        }
    return t;
}

} // namespace genus1
