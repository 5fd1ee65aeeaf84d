#pragma once

#include "set_partition.hpp"

namespace genus1 {

/// Coloring points (i,j,k,l) with 1 <= i < j <= k < l <= n: right endpoints of
/// the four clockwise arcs A, B, C, D. C is empty exactly when j = k.
struct ColoringPoints {
    int n = 0, i = 0, j = 0, k = 0, l = 0;

    ColoringPoints() = default;
    ColoringPoints(int n_, int i_, int j_, int k_, int l_)
        : n(n_), i(i_), j(j_), k(k_), l(l_) {
        if (!(1 <= i && i < j && j <= k && k < l && l <= n))
            throw std::invalid_argument("ColoringPoints: need 1 <= i < j <= k < l <= n");
    }

    /// Color of a point: A holds l+1..n and 1..i, B holds i+1..j,
    /// C holds j+1..k, D holds k+1..l.
    char color(int x) const {
        if (x <= i || x > l) return 'A';
        if (x <= j) return 'B';
        if (x <= k) return 'C';
        return 'D';
    }

    bool operator==(const ColoringPoints&) const = default;
};

/// Separating points (a,b,c,d) with a < b <= c < d.
struct SeparatingPoints {
    int n = 0, a = 0, b = 0, c = 0, d = 0;

    SeparatingPoints() = default;
    SeparatingPoints(int n_, int a_, int b_, int c_, int d_)
        : n(n_), a(a_), b(b_), c(c_), d(d_) {
        if (!(1 <= a && a < b && b <= c && c < d && d <= n))
            throw std::invalid_argument("SeparatingPoints: need 1 <= a < b <= c < d <= n");
    }

    bool operator==(const SeparatingPoints&) const = default;
    auto operator<=>(const SeparatingPoints&) const = default;
};

/// A noncrossing partition together with a four-coloring.
struct ColoredPartition {
    SetPartition partition;
    ColoringPoints coloring;

    ColoredPartition(SetPartition p, ColoringPoints cp)
        : partition(std::move(p)), coloring(cp) {
        if (!is_noncrossing(partition))
            throw std::invalid_argument("ColoredPartition: partition crosses");
        if (coloring.n != partition.size())
            throw std::invalid_argument("ColoredPartition: size mismatch");
    }
};

/// (a,b,c,d) = (i, i+l-k, i+l-j, l).
inline SeparatingPoints coloring_to_separating(const ColoringPoints& cp) {
    return SeparatingPoints(cp.n, cp.i, cp.i + cp.l - cp.k, cp.i + cp.l - cp.j, cp.l);
}

/// (i,j,k,l) = (a, a+d-c, a+d-b, d); inverse of coloring_to_separating.
inline ColoringPoints separating_to_coloring(const SeparatingPoints& sp) {
    return ColoringPoints(sp.n, sp.a, sp.a + sp.d - sp.c, sp.a + sp.d - sp.b, sp.d);
}

/// The relabeling map phi: identity on A, x+l-j on B, x+i+l-j-k on C,
/// x+i-k on D.
inline Permutation phi_of_coloring(const ColoringPoints& cp) {
    std::vector<int> img(cp.n);
    for (int x = 1; x <= cp.n; ++x) {
        switch (cp.color(x)) {
            case 'A': img[x - 1] = x; break;
            case 'B': img[x - 1] = x + cp.l - cp.j; break;
            case 'C': img[x - 1] = x + cp.i + cp.l - cp.j - cp.k; break;
            case 'D': img[x - 1] = x + cp.i - cp.k; break;
        }
    }
    return Permutation(std::move(img));
}

/// Phi(P, gamma) = phi . alpha_P . phi^-1.
inline Permutation phi_map(const ColoredPartition& colored) {
    Permutation phi = phi_of_coloring(colored.coloring);
    return compose(compose(phi, to_permutation(colored.partition)), phi.inverse());
}

/// theta = zeta_n (a,c)(b,d), always a single n-cycle.
inline Permutation theta_of_separating(const SeparatingPoints& sp) {
    return compose(compose(zeta(sp.n), transposition(sp.n, sp.a, sp.c)),
                   transposition(sp.n, sp.b, sp.d));
}

/// True iff the hypermap (theta, alpha) has genus zero.
inline bool is_separating(const Permutation& alpha, const SeparatingPoints& sp) {
    if (genus(alpha) != 1)
        throw std::invalid_argument("is_separating: alpha is not of genus 1");
    return hypermap_genus(theta_of_separating(sp), alpha) == 0;
}

/// All quadruples a < b <= c < d <= n, lexicographically.
inline std::vector<SeparatingPoints> all_quadruples(int n) {
    std::vector<SeparatingPoints> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    out.emplace_back(n, a, b, c, d);
    return out;
}

/// Lexicographically smallest sequence of separating points of a genus-1
/// permutation. Exists for every genus-1 input.
inline SeparatingPoints find_separating(const Permutation& alpha) {
    if (genus(alpha) != 1)
        throw std::invalid_argument("find_separating: alpha is not of genus 1");
    const int n = alpha.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    SeparatingPoints sp(n, a, b, c, d);
                    if (hypermap_genus(theta_of_separating(sp), alpha) == 0) return sp;
                }
    throw std::logic_error("find_separating: no separating points found");
}

/// The four-colored noncrossing partition representation induced by a
/// sequence of separating points: gamma from (a,b,c,d), P from phi^-1 alpha phi.
inline ColoredPartition induced_representation(const Permutation& alpha,
                                               const SeparatingPoints& sp) {
    ColoringPoints cp = separating_to_coloring(sp);
    Permutation phi = phi_of_coloring(cp);
    Permutation beta = compose(compose(phi.inverse(), alpha), phi);
    auto p = from_permutation(beta);
    if (!p || !is_noncrossing(*p))
        throw std::invalid_argument("induced_representation: points do not separate alpha");
    return ColoredPartition(std::move(*p), cp);
}

/// Why a colored partition has genus 1.
struct ColoredGenusWitness {
    enum class Kind { None, MulticoloredPart, SharedColorPair };
    Kind kind = Kind::None;
    int part1 = -1; // index into partition.blocks()
    int part2 = -1; // second part for SharedColorPair
};

/// Genus of phi_map(colored), decided combinatorially: 1 iff some part is
/// three/four-colored or two bicolored parts share exactly one color.
inline std::pair<int, ColoredGenusWitness> colored_genus_classify(const ColoredPartition& colored) {
    const auto& blocks = colored.partition.blocks();
    std::vector<std::set<char>> colors(blocks.size());
    for (size_t q = 0; q < blocks.size(); ++q)
        for (int x : blocks[q]) colors[q].insert(colored.coloring.color(x));

    for (size_t q = 0; q < blocks.size(); ++q)
        if (colors[q].size() >= 3)
            return {1, {ColoredGenusWitness::Kind::MulticoloredPart, static_cast<int>(q), -1}};

    for (size_t q = 0; q < blocks.size(); ++q) {
        if (colors[q].size() != 2) continue;
        for (size_t r = q + 1; r < blocks.size(); ++r) {
            if (colors[r].size() != 2) continue;
            std::vector<char> common;
            std::set_intersection(colors[q].begin(), colors[q].end(),
                                  colors[r].begin(), colors[r].end(),
                                  std::back_inserter(common));
            if (common.size() == 1)
                return {1, {ColoredGenusWitness::Kind::SharedColorPair,
                            static_cast<int>(q), static_cast<int>(r)}};
        }
    }
    return {0, {}};
}

/// All valid colorings of an n-point circle.
inline std::vector<ColoringPoints> all_colorings(int n) {
    std::vector<ColoringPoints> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    out.emplace_back(n, i, j, k, l);
    return out;
}

} // namespace genus1
