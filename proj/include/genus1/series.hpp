#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace genus1 {

/// Truncated bivariate formal power series in x and y over exact rationals.
/// Coefficients are kept for x-degree and y-degree up to trunc; every series
/// in this problem family satisfies deg_y <= deg_x, so the shared bound loses
/// nothing. Values are immutable in spirit: operations return new series.
class BivariateSeries {
public:
    explicit BivariateSeries(int trunc = 0)
        : trunc_(trunc), c_(trunc + 1, std::vector<mpq_class>(trunc + 1, 0)) {
        if (trunc < 0) throw std::invalid_argument("BivariateSeries: negative truncation");
    }

    struct Term {
        int n, k;
        mpq_class coef;
    };

    BivariateSeries(int trunc, const std::vector<Term>& terms) : BivariateSeries(trunc) {
        for (const auto& t : terms)
            if (t.n <= trunc && t.k <= trunc) c_[t.n][t.k] = t.coef;
    }

    int trunc() const { return trunc_; }

    const mpq_class& at(int n, int k) const { return c_[n][k]; }
    mpq_class& at(int n, int k) { return c_[n][k]; }

    /// Stored coefficient; 0 beyond the y bound, error beyond the x bound.
    mpq_class coefficient(int n, int k) const {
        if (n < 0 || n > trunc_)
            throw std::out_of_range("coefficient: x-degree beyond truncation");
        if (k < 0 || k > trunc_) return 0;
        return c_[n][k];
    }

    /// Coefficient asserted to be an integer.
    mpz_class coefficient_int(int n, int k) const {
        mpq_class q = coefficient(n, k);
        if (q.get_den() != 1)
            throw std::logic_error("coefficient_int: non-integer coefficient at x^" +
                                   std::to_string(n) + " y^" + std::to_string(k));
        return q.get_num();
    }

    bool is_zero() const {
        for (const auto& row : c_)
            for (const auto& q : row)
                if (q != 0) return false;
        return true;
    }

    /// Equality of all coefficients up to the smaller truncation.
    friend bool agree(const BivariateSeries& f, const BivariateSeries& g) {
        int t = std::min(f.trunc_, g.trunc_);
        for (int n = 0; n <= t; ++n)
            for (int k = 0; k <= t; ++k)
                if (f.c_[n][k] != g.c_[n][k]) return false;
        return true;
    }

    friend BivariateSeries operator+(const BivariateSeries& f, const BivariateSeries& g) {
        BivariateSeries r(std::min(f.trunc_, g.trunc_));
        for (int n = 0; n <= r.trunc_; ++n)
            for (int k = 0; k <= r.trunc_; ++k)
                r.c_[n][k] = f.c_[n][k] + g.c_[n][k];
        return r;
    }

    friend BivariateSeries operator-(const BivariateSeries& f, const BivariateSeries& g) {
        BivariateSeries r(std::min(f.trunc_, g.trunc_));
        for (int n = 0; n <= r.trunc_; ++n)
            for (int k = 0; k <= r.trunc_; ++k)
                r.c_[n][k] = f.c_[n][k] - g.c_[n][k];
        return r;
    }

    /// Cauchy product in x and y jointly, truncated.
    friend BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g) {
        BivariateSeries r(std::min(f.trunc_, g.trunc_));
        for (int n1 = 0; n1 <= r.trunc_; ++n1)
            for (int k1 = 0; k1 <= r.trunc_; ++k1) {
                if (f.c_[n1][k1] == 0) continue;
                for (int n2 = 0; n1 + n2 <= r.trunc_; ++n2)
                    for (int k2 = 0; k1 + k2 <= r.trunc_; ++k2) {
                        if (g.c_[n2][k2] == 0) continue;
                        r.c_[n1 + n2][k1 + k2] += f.c_[n1][k1] * g.c_[n2][k2];
                    }
            }
        return r;
    }

    friend BivariateSeries operator*(const mpq_class& s, const BivariateSeries& f) {
        BivariateSeries r(f.trunc_);
        for (int n = 0; n <= r.trunc_; ++n)
            for (int k = 0; k <= r.trunc_; ++k)
                r.c_[n][k] = s * f.c_[n][k];
        return r;
    }

private:
    int trunc_;
    std::vector<std::vector<mpq_class>> c_;
};

inline BivariateSeries series_pow(const BivariateSeries& f, int e) {
    BivariateSeries r(f.trunc(), {{0, 0, 1}});
    BivariateSeries base = f;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

/// f / g for a divisor with nonzero constant term: solved row by row in x,
/// inverting g's constant x-row as a power series in y.
inline BivariateSeries divide(const BivariateSeries& f, const BivariateSeries& g) {
    const int t = std::min(f.trunc(), g.trunc());
    if (g.coefficient(0, 0) == 0)
        throw std::invalid_argument("divide: divisor has zero constant term");
    // inverse of g's x^0 row as a univariate series in y
    std::vector<mpq_class> inv0(t + 1, 0);
    inv0[0] = 1 / g.at(0, 0);
    for (int k = 1; k <= t; ++k) {
        mpq_class s = 0;
        for (int m = 0; m < k; ++m) s += inv0[m] * g.at(0, k - m);
        inv0[k] = -s / g.at(0, 0);
    }
    BivariateSeries q(t);
    for (int n = 0; n <= t; ++n) {
        std::vector<mpq_class> rhs(t + 1, 0);
        for (int k = 0; k <= t; ++k) rhs[k] = f.coefficient(n, k);
        for (int m = 0; m < n; ++m)
            for (int k1 = 0; k1 <= t; ++k1) {
                if (q.at(m, k1) == 0) continue;
                for (int k2 = 0; k1 + k2 <= t; ++k2)
                    rhs[k1 + k2] -= q.at(m, k1) * g.at(n - m, k2);
            }
        for (int k = 0; k <= t; ++k) {
            mpq_class v = 0;
            for (int m = 0; m <= k; ++m) v += rhs[m] * inv0[k - m];
            q.at(n, k) = v;
        }
    }
    return q;
}

/// Newton iteration for f^{-1/2}; requires constant term 1. The result r
/// satisfies r^2 f = 1 up to truncation.
inline BivariateSeries inv_sqrt(const BivariateSeries& f) {
    if (f.coefficient(0, 0) != 1)
        throw std::invalid_argument("inv_sqrt: constant term must be 1");
    BivariateSeries r(f.trunc(), {{0, 0, 1}});
    const mpq_class half(1, 2);
    int correct = 1;
    while (correct <= f.trunc()) {
        // r <- r (3 - f r^2) / 2, doubling the correct order
        BivariateSeries three(f.trunc(), {{0, 0, 3}});
        r = half * (r * (three - f * (r * r)));
        correct *= 2;
    }
    return r;
}

/// Formal partial derivative in x; the truncation drops by one.
inline BivariateSeries partial_x(const BivariateSeries& f) {
    if (f.trunc() == 0) return BivariateSeries(0);
    const int t = f.trunc() - 1;
    BivariateSeries r(t);
    for (int n = 0; n <= t; ++n)
        for (int k = 0; k <= t && k <= f.trunc(); ++k)
            r.at(n, k) = mpq_class(n + 1) * f.at(n + 1, k);
    return r;
}

/// Substitute x <- g throughout f (y untouched); g must have x-order >= 1.
inline BivariateSeries substitute_x(const BivariateSeries& f, const BivariateSeries& g) {
    const int t = std::min(f.trunc(), g.trunc());
    for (int k = 0; k <= g.trunc(); ++k)
        if (g.at(0, k) != 0)
            throw std::invalid_argument("substitute_x: substituted series must have x-order >= 1");
    // Horner in x: rows of f are polynomials in y alone
    BivariateSeries acc(t);
    for (int n = t; n >= 0; --n) {
        BivariateSeries row(t);
        for (int k = 0; k <= t && k <= f.trunc(); ++k) row.at(0, k) = f.at(n, k);
        acc = acc * g + row;
    }
    return acc;
}

/// The noncrossing-partition generating function D(x,y), the unique formal
/// power series solution of D = 1 + xyD + x(D-1)D with constant term 1.
/// [x^n y^k] D is the Narayana count of noncrossing partitions.
inline BivariateSeries solve_D(int trunc) {
    BivariateSeries d(trunc);
    d.at(0, 0) = 1;
    for (int n = 1; n <= trunc; ++n) {
        // row_n = y * row_{n-1} + sum_{m=1}^{n-1} row_m (*) row_{n-1-m}
        for (int k = 1; k <= trunc; ++k) d.at(n, k) = d.at(n - 1, k - 1);
        for (int m = 1; m < n; ++m)
            for (int k1 = 0; k1 <= trunc; ++k1) {
                if (d.at(m, k1) == 0) continue;
                for (int k2 = 0; k1 + k2 <= trunc; ++k2)
                    d.at(n, k1 + k2) += d.at(m, k1) * d.at(n - 1 - m, k2);
            }
    }
    return d;
}

namespace series_detail {

inline BivariateSeries poly(int trunc, std::vector<BivariateSeries::Term> terms) {
    return BivariateSeries(trunc, terms);
}

} // namespace series_detail

/// The square-root-free surrogate 1 + x - xy - 2xD(x,y) for
/// sqrt((x+xy-1)^2 - 4x^2 y).
inline BivariateSeries radical_surrogate(const BivariateSeries& d) {
    using series_detail::poly;
    const int t = d.trunc();
    BivariateSeries x = poly(t, {{1, 0, 1}});
    BivariateSeries xy = poly(t, {{1, 1, 1}});
    BivariateSeries one = poly(t, {{0, 0, 1}});
    return one + x - xy - mpq_class(2) * (x * d);
}

/// The correction factor 1 + x dD/dx / D of the reduction-lift, computed
/// radical-free.
inline BivariateSeries lift_factor(int trunc) {
    using series_detail::poly;
    BivariateSeries d = solve_D(trunc + 1);
    BivariateSeries xdd = poly(trunc, {{1, 0, 1}}) * partial_x(d);
    BivariateSeries dcut(trunc);
    for (int n = 0; n <= trunc; ++n)
        for (int k = 0; k <= trunc; ++k) dcut.at(n, k) = d.at(n, k);
    return poly(trunc, {{0, 0, 1}}) + divide(xdd, dcut);
}

/// P(x,y) = R(x D(x,y), y) (1 + x dD/dx / D): lifts the generating function
/// of a reduced class to the full reduction-closed class.
inline BivariateSeries lift_reduced_to_full(const BivariateSeries& R) {
    const int t = R.trunc();
    BivariateSeries d = solve_D(t);
    BivariateSeries xd = series_detail::poly(t, {{1, 0, 1}}) * d;
    return substitute_x(R, xd) * lift_factor(t);
}

/// Expansion of a named closed form.
///   R0,R1,R2,Rstar : reduced genus-1 classes (rational forms)
///   P0,P1,P2,Pstar : full genus-1 classes (inverse square-root forms)
///   D              : noncrossing-partition series
///   Dfactor        : (1 - xD)/sqrt((x+xy-1)^2 - 4x^2y), radical-free
inline BivariateSeries expand_named(const std::string& name, int trunc) {
    using series_detail::poly;
    const int t = trunc;
    BivariateSeries one = poly(t, {{0, 0, 1}});
    BivariateSeries x = poly(t, {{1, 0, 1}});
    BivariateSeries y_only = poly(t, {{0, 1, 1}});
    BivariateSeries onemx = poly(t, {{0, 0, 1}, {1, 0, -1}});

    if (name == "D") return solve_D(t);

    if (name == "Dfactor") {
        BivariateSeries d = solve_D(t);
        return divide(one - x * d, radical_surrogate(d));
    }

    if (name == "R0" || name == "R1" || name == "R2" || name == "Rstar") {
        // ((1-x)^2 - y x^2)^4
        BivariateSeries base = onemx * onemx - poly(t, {{2, 1, 1}});
        BivariateSeries denom = series_pow(base, 4);
        BivariateSeries num(t);
        if (name == "R0")
            num = poly(t, {{4, 2, 1}}) * series_pow(onemx, 3);
        else if (name == "R2")
            num = poly(t, {{4, 1, 1}}) * series_pow(onemx, 3);
        else if (name == "R1")
            num = poly(t, {{3, 1, 1}}) * (onemx * onemx) * (onemx * onemx + poly(t, {{2, 1, 1}}));
        else // Rstar
            num = poly(t, {{3, 1, 1}}) * (onemx * onemx) * poly(t, {{0, 0, 1}, {1, 0, -1}, {1, 1, 1}});
        return divide(num, denom);
    }

    if (name == "P0" || name == "P1" || name == "P2" || name == "Pstar") {
        // 1 - 2(1+y)x + x^2 (1-y)^2
        BivariateSeries delta = poly(
            t, {{0, 0, 1}, {1, 0, -2}, {1, 1, -2}, {2, 0, 1}, {2, 1, -2}, {2, 2, 1}});
        BivariateSeries pw = series_pow(inv_sqrt(delta), 5);
        if (name == "P0") return poly(t, {{4, 2, 1}}) * pw;
        if (name == "P2") return poly(t, {{4, 1, 1}}) * pw;
        if (name == "P1") return poly(t, {{3, 1, 1}, {4, 1, -1}, {4, 2, -1}}) * pw;
        return poly(t, {{3, 1, 1}}) * pw; // Pstar
    }

    throw std::invalid_argument("expand_named: unknown series name '" + name + "'");
}

} // namespace genus1
