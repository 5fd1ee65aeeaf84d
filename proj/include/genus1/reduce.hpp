#pragma once

#include "four_color.hpp"

namespace genus1 {

/// A cycle of circularly consecutive points start, start+1, ... (mod n),
/// mapped in successor order.
struct TrivialCycle {
    int start = 0;
    int length = 0;

    std::vector<int> elements(int n) const {
        std::vector<int> out;
        out.reserve(length);
        for (int t = 0; t < length; ++t) out.push_back((start - 1 + t) % n + 1);
        return out;
    }

    bool operator==(const TrivialCycle&) const = default;
};

/// All trivial cycles of alpha, including fixed points and wraparound runs.
/// zeta_n itself is one trivial cycle of length n.
inline std::vector<TrivialCycle> trivial_cycles(const Permutation& alpha) {
    const int n = alpha.size();
    std::vector<TrivialCycle> out;
    for (const auto& c : alpha.cycle_decomposition()) {
        const int p = c.length();
        if (p == n) {
            bool circular = true;
            for (int x = 1; x <= n; ++x)
                if (alpha(x) != x % n + 1) { circular = false; break; }
            if (circular) out.push_back({1, n});
            continue;
        }
        std::vector<char> in(n + 1, 0);
        for (int x : c.elements) in[x] = 1;
        // the start is the unique element whose circular predecessor is outside
        int start = 0;
        for (int x : c.elements)
            if (!in[(x - 2 + n) % n + 1]) { start = x; break; }
        if (start == 0) continue; // cannot happen for p < n
        bool ok = true;
        for (int t = 0; t < p && ok; ++t) {
            int x = (start - 1 + t) % n + 1;
            int expect = (t == p - 1) ? start : x % n + 1;
            if (!in[x] || alpha(x) != expect) ok = false;
        }
        if (ok) out.push_back({start, p});
    }
    auto min_element_of = [n](const TrivialCycle& t) {
        std::vector<int> e = t.elements(n);
        return *std::min_element(e.begin(), e.end());
    };
    std::sort(out.begin(), out.end(), [&](const TrivialCycle& s, const TrivialCycle& t) {
        return min_element_of(s) < min_element_of(t);
    });
    return out;
}

inline bool is_reduced(const Permutation& alpha) {
    return trivial_cycles(alpha).empty();
}

/// Remove a trivial cycle and compress the surviving labels
/// order-preservingly onto {1..n'}. Genus is unchanged.
inline Permutation reduce_once(const Permutation& alpha, const TrivialCycle& t) {
    const int n = alpha.size();
    auto tc = trivial_cycles(alpha);
    if (std::find(tc.begin(), tc.end(), t) == tc.end())
        throw std::invalid_argument("reduce_once: not a trivial cycle of alpha");
    std::vector<char> removed(n + 1, 0);
    for (int x : t.elements(n)) removed[x] = 1;
    std::vector<int> newlab(n + 1, 0);
    int next = 0;
    for (int x = 1; x <= n; ++x)
        if (!removed[x]) newlab[x] = ++next;
    std::vector<int> img(next);
    for (int x = 1; x <= n; ++x)
        if (!removed[x]) img[newlab[x] - 1] = newlab[alpha(x)];
    return Permutation(std::move(img));
}

/// One reduction step together with the removed cycle in original labels.
struct ReductionStep {
    TrivialCycle cycle;                 // in the labels current at removal time
    std::vector<int> original_elements; // same cycle, original labels
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Permutation result;
};

/// Remove trivial cycles until none remain. At each step the trivial cycle
/// with the smallest minimal element is removed; the final permutation does
/// not depend on this choice.
inline ReductionTrace reduce_fully(const Permutation& alpha) {
    ReductionTrace trace;
    Permutation cur = alpha;
    std::vector<int> orig(cur.size() + 1);
    std::iota(orig.begin(), orig.end(), 0);
    for (;;) {
        auto tc = trivial_cycles(cur);
        if (tc.empty()) break;
        const TrivialCycle& t = tc.front();
        ReductionStep step{t, {}};
        for (int x : t.elements(cur.size())) step.original_elements.push_back(orig[x]);
        std::sort(step.original_elements.begin(), step.original_elements.end());
        trace.steps.push_back(std::move(step));
        std::vector<char> removed(cur.size() + 1, 0);
        for (int x : t.elements(cur.size())) removed[x] = 1;
        std::vector<int> norig;
        norig.push_back(0);
        for (int x = 1; x <= cur.size(); ++x)
            if (!removed[x]) norig.push_back(orig[x]);
        cur = reduce_once(cur, t);
        orig = std::move(norig);
    }
    trace.result = std::move(cur);
    return trace;
}

namespace detail {

/// Two element sets cross iff their merged labels alternate four times.
inline bool sets_cross(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<std::pair<int, int>> merged;
    for (int x : s) merged.emplace_back(x, 0);
    for (int x : t) merged.emplace_back(x, 1);
    std::sort(merged.begin(), merged.end());
    int runs = 0, last = -1;
    for (auto [x, lab] : merged)
        if (lab != last) { ++runs; last = lab; }
    return runs >= 4;
}

} // namespace detail

/// The cycles that vanish under full reduction, characterized directly:
/// the cycle follows the circular order, nothing crosses it, and the cycles
/// caught in the circular gaps between its consecutive elements are untwisted
/// and uncrossing. One gap is exempt: the eventual trivial run may start at
/// any element of the cycle, leaving the gap before the starting element
/// untouched, so the condition only needs to hold for all gaps but one.
inline std::vector<Cycle> removable_cycles(const Permutation& alpha) {
    auto cycles = alpha.cycle_decomposition();
    std::vector<Cycle> out;
    // a cycle is clean when it is untwisted and crosses nothing
    std::vector<char> clean(cycles.size(), 1);
    for (size_t r = 0; r < cycles.size(); ++r) {
        if (twist_class(alpha, cycles[r]) != TwistClass::NotTwisted) { clean[r] = 0; continue; }
        for (size_t u = 0; u < cycles.size(); ++u)
            if (u != r && detail::sets_cross(cycles[r].elements, cycles[u].elements)) {
                clean[r] = 0;
                break;
            }
    }
    for (size_t q = 0; q < cycles.size(); ++q) {
        const auto& c = cycles[q];
        if (!std::is_sorted(c.elements.begin(), c.elements.end())) continue;
        bool uncrossed = true;
        for (size_t r = 0; r < cycles.size() && uncrossed; ++r)
            if (r != q && detail::sets_cross(c.elements, cycles[r].elements)) uncrossed = false;
        if (!uncrossed) continue;
        const int p = static_cast<int>(c.elements.size());
        // gap s lies circularly strictly between elements s and s+1 (mod p)
        std::vector<char> dirty(p, 0);
        for (size_t r = 0; r < cycles.size(); ++r) {
            if (r == q || clean[r]) continue;
            for (int s = 0; s < p; ++s) {
                int gl = c.elements[s], gr = c.elements[(s + 1) % p];
                bool inside = true;
                for (int x : cycles[r].elements) {
                    bool in_gap = (gl < gr) ? (gl < x && x < gr) : (x > gl || x < gr);
                    if (!in_gap) { inside = false; break; }
                }
                if (inside) { dirty[s] = 1; break; }
            }
        }
        if (std::count(dirty.begin(), dirty.end(), char(1)) <= 1) out.push_back(c);
    }
    return out;
}

/// Canonical sequence of separating points of a reduced genus-1 permutation:
/// a is the first point with alpha(a) != a+1, b the first later point leaving
/// the interval [a+1, alpha(a)], then c = alpha(a)-1 and d = alpha(b)-1 mod n.
inline SeparatingPoints canonical_separating(const Permutation& alpha) {
    if (genus(alpha) != 1)
        throw std::invalid_argument("canonical_separating: alpha is not of genus 1");
    if (!is_reduced(alpha))
        throw std::invalid_argument("canonical_separating: alpha is not reduced");
    const int n = alpha.size();
    int a = 0;
    for (int x = 1; x < n; ++x)
        if (alpha(x) != x + 1) { a = x; break; }
    if (a == 0)
        throw std::logic_error("canonical_separating: no anchor point");
    int b = 0;
    for (int x = a + 1; x <= n; ++x)
        if (alpha(x) > alpha(a) || alpha(x) <= a) { b = x; break; }
    if (b == 0)
        throw std::logic_error("canonical_separating: no second anchor point");
    int c = alpha(a) - 1;
    int d = alpha(b) == 1 ? n : alpha(b) - 1;
    return SeparatingPoints(n, a, b, c, d);
}

/// Checks the structural properties that single out the canonical
/// representation among those induced by separating points: a is the first
/// point moved off its circular successor, alpha sends a to c+1 and b to d+1,
/// same-colored pairs are consecutive, and the only cycles mixing A with D or
/// B with D are the allowed exceptions through b and d+1. The minimality of a
/// is required; without it a second quadruple can satisfy the remaining
/// properties (e.g. (2,3,3,4) for (1,3)(2,4)).
inline bool is_canonical_candidate(const Permutation& alpha, const SeparatingPoints& sp) {
    const int n = sp.n;
    const int a = sp.a, b = sp.b, c = sp.c, d = sp.d;
    for (int x = 1; x < a; ++x)
        if (alpha(x) != x % n + 1) return false;
    if (alpha(a) != c % n + 1) return false;
    if (alpha(b) != d % n + 1) return false;
    // color sets in alpha's labels: A = [1,a] u (d,n], D = (a,b], C = (b,c], B = (c,d]
    auto color = [&](int x) -> char {
        if (x <= a || x > d) return 'A';
        if (x <= b) return 'D';
        if (x <= c) return 'C';
        return 'B';
    };
    for (int x = 1; x <= n; ++x)
        if (color(x) == color(alpha(x)) && alpha(x) != x % n + 1) return false;
    const int dp1 = d % n + 1;
    for (const auto& cyc : alpha.cycle_decomposition()) {
        bool hasA = false, hasB = false, hasD = false, hasb = false, hasdp1 = false;
        for (int x : cyc.elements) {
            char col = color(x);
            hasA |= col == 'A';
            hasB |= col == 'B';
            hasD |= col == 'D';
            hasb |= x == b;
            hasdp1 |= x == dp1;
        }
        if (hasA && hasD && !(hasb && hasdp1)) return false;
        if (hasB && hasD) {
            if (!(hasb && hasdp1 && twist_class(alpha, cyc) != TwistClass::NotTwisted))
                return false;
        }
    }
    return true;
}

/// The unique canonical four-colored noncrossing partition representation of
/// a reduced genus-1 permutation.
inline ColoredPartition canonical_representation(const Permutation& alpha) {
    return induced_representation(alpha, canonical_separating(alpha));
}

/// Split alpha at a point a with a+1 < alpha(a) whose inner interval
/// {a+1..alpha(a)-1} is a union of cycles. Genus is additive over the parts.
inline std::pair<Permutation, Permutation> split_at(const Permutation& alpha, int a) {
    const int n = alpha.size();
    if (a < 1 || a > n || a + 1 >= alpha(a))
        throw std::invalid_argument("split_at: need a+1 < alpha(a)");
    const int lo = a + 1, hi = alpha(a) - 1;
    for (int x = lo; x <= hi; ++x)
        if (alpha(x) < lo || alpha(x) > hi)
            throw std::invalid_argument("split_at: inner interval is not a union of cycles");
    std::vector<int> inner(hi - lo + 1), outer;
    for (int x = lo; x <= hi; ++x) inner[x - lo] = alpha(x) - lo + 1;
    std::vector<int> lab(n + 1, 0);
    int next = 0;
    for (int x = 1; x <= n; ++x)
        if (x < lo || x > hi) lab[x] = ++next;
    outer.resize(next);
    for (int x = 1; x <= n; ++x)
        if (lab[x]) outer[lab[x] - 1] = lab[alpha(x)];
    return {Permutation(std::move(inner)), Permutation(std::move(outer))};
}

} // namespace genus1
