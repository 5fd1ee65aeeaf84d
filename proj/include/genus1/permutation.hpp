#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace genus1 {

/// A cycle of a permutation, rotated so its minimum element comes first.
struct Cycle {
    std::vector<int> elements;

    Cycle() = default;
    explicit Cycle(std::vector<int> elems) : elements(std::move(elems)) {
        if (elements.empty())
            throw std::invalid_argument("Cycle: empty element list");
        auto it = std::min_element(elements.begin(), elements.end());
        std::rotate(elements.begin(), it, elements.end());
    }

    int min() const { return elements.front(); }
    int length() const { return static_cast<int>(elements.size()); }

    bool operator==(const Cycle&) const = default;
};

/// How many back points a cycle carries.
enum class TwistClass { NotTwisted, SimplyTwisted, DoublyTwisted };

/// The four structural types of a genus-1 permutation.
enum class Genus1Type { Partition, OneSimplyTwisted, OneDoublyTwisted, TwoSimplyTwisted };

inline const char* to_string(Genus1Type t) {
    switch (t) {
        case Genus1Type::Partition: return "Partition";
        case Genus1Type::OneSimplyTwisted: return "OneSimplyTwisted";
        case Genus1Type::OneDoublyTwisted: return "OneDoublyTwisted";
        case Genus1Type::TwoSimplyTwisted: return "TwoSimplyTwisted";
    }
    return "?";
}

/// A permutation of {1..n}, stored as its image table. Immutable after
/// construction; n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;

    /// images[i-1] is the image of i; must be a bijection on {1..n}.
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        const int n = size();
        std::vector<char> seen(n + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > n)
                throw std::invalid_argument("Permutation: image out of range");
            if (seen[v]++)
                throw std::invalid_argument("Permutation: image table is not a bijection");
        }
    }

    int size() const { return static_cast<int>(img_.size()); }

    /// Image of a point, 1-based.
    int operator()(int i) const { return img_[i - 1]; }

    const std::vector<int>& images() const { return img_; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(size());
        for (int i = 1; i <= size(); ++i) v[img_[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }

    /// Disjoint cycles, each min-first, listed by increasing minimum.
    std::vector<Cycle> cycle_decomposition() const {
        std::vector<Cycle> out;
        std::vector<char> seen(size() + 1, 0);
        for (int i = 1; i <= size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = img_[j - 1]) {
                seen[j] = 1;
                cyc.push_back(j);
            }
            out.emplace_back(std::move(cyc));
        }
        return out;
    }

    /// z(alpha), the number of cycles.
    int cycle_count() const {
        int z = 0;
        std::vector<char> seen(size() + 1, 0);
        for (int i = 1; i <= size(); ++i) {
            if (seen[i]) continue;
            ++z;
            for (int j = i; !seen[j]; j = img_[j - 1]) seen[j] = 1;
        }
        return z;
    }

private:
    std::vector<int> img_;
};

/// The circular permutation i -> i+1 (n -> 1).
inline Permutation zeta(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (i + 1) % n + 1;
    return Permutation(std::move(v));
}

/// Right-to-left composition: result(i) = alpha(beta(i)).
inline Permutation compose(const Permutation& alpha, const Permutation& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> v(alpha.size());
    for (int i = 1; i <= alpha.size(); ++i) v[i - 1] = alpha(beta(i));
    return Permutation(std::move(v));
}

inline Permutation transposition(int n, int i, int j) {
    auto v = Permutation::identity(n).images();
    std::swap(v[i - 1], v[j - 1]);
    return Permutation(std::move(v));
}

namespace detail {

inline void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

inline int parse_int(const std::string& s, size_t& p) {
    skip_ws(s, p);
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw std::invalid_argument("parse: expected integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, p - start));
}

} // namespace detail

/// Parse cycle notation "(1,4,3,8)(2,7)" or a one-line image list "[3,4,1,2]".
/// Points not mentioned are fixed.
inline Permutation parse_cycles(const std::string& text, int n) {
    size_t p = 0;
    detail::skip_ws(text, p);
    if (p < text.size() && text[p] == '[') {
        ++p;
        std::vector<int> v;
        detail::skip_ws(text, p);
        if (p < text.size() && text[p] != ']') {
            v.push_back(detail::parse_int(text, p));
            detail::skip_ws(text, p);
            while (p < text.size() && text[p] == ',') {
                ++p;
                v.push_back(detail::parse_int(text, p));
                detail::skip_ws(text, p);
            }
        }
        if (p >= text.size() || text[p] != ']')
            throw std::invalid_argument("parse: expected ']'");
        ++p;
        detail::skip_ws(text, p);
        if (p != text.size()) throw std::invalid_argument("parse: trailing input");
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("parse: image list length differs from n");
        return Permutation(std::move(v));
    }

    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<char> used(n + 1, 0);
    while (p < text.size()) {
        if (text[p] != '(') throw std::invalid_argument("parse: expected '('");
        ++p;
        std::vector<int> cyc;
        cyc.push_back(detail::parse_int(text, p));
        detail::skip_ws(text, p);
        while (p < text.size() && text[p] == ',') {
            ++p;
            cyc.push_back(detail::parse_int(text, p));
            detail::skip_ws(text, p);
        }
        if (p >= text.size() || text[p] != ')')
            throw std::invalid_argument("parse: expected ')'");
        ++p;
        for (int x : cyc) {
            if (x < 1 || x > n) throw std::invalid_argument("parse: point outside 1..n");
            if (used[x]++) throw std::invalid_argument("parse: duplicate point " + std::to_string(x));
        }
        for (size_t q = 0; q < cyc.size(); ++q)
            img[cyc[q] - 1] = cyc[(q + 1) % cyc.size()];
        detail::skip_ws(text, p);
    }
    return Permutation(std::move(img));
}

/// Canonical display: cycles start at their minimum, listed by increasing
/// minimum, fixed points printed explicitly.
inline std::string format_cycles(const Permutation& alpha) {
    std::ostringstream os;
    for (const auto& c : alpha.cycle_decomposition()) {
        os << '(';
        for (size_t q = 0; q < c.elements.size(); ++q) {
            if (q) os << ',';
            os << c.elements[q];
        }
        os << ')';
    }
    return os.str();
}

/// Genus of alpha: n + 1 - 2g = z(alpha) + z(alpha^-1 zeta_n). Empty
/// permutation has genus 0 by convention.
inline int genus(const Permutation& alpha) {
    const int n = alpha.size();
    if (n == 0) return 0;
    int twice = n + 1 - alpha.cycle_count() - compose(alpha.inverse(), zeta(n)).cycle_count();
    return twice / 2;
}

/// Genus of the hypermap (sigma, alpha): n + 2 - 2g = z(sigma) + z(alpha) +
/// z(alpha^-1 sigma). Throws if the pair is not transitive.
inline int hypermap_genus(const Permutation& sigma, const Permutation& alpha) {
    const int n = sigma.size();
    if (n != alpha.size())
        throw std::invalid_argument("hypermap_genus: size mismatch");
    if (n == 0) return 0;
    // Transitivity = connectivity of the graph with edges {i,alpha(i)}, {i,sigma(i)}.
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= n; ++i) {
        parent[find(i)] = find(alpha(i));
        parent[find(i)] = find(sigma(i));
    }
    for (int i = 2; i <= n; ++i)
        if (find(i) != find(1))
            throw std::invalid_argument("hypermap_genus: (sigma, alpha) is not transitive");
    int twice = n + 2 - sigma.cycle_count() - alpha.cycle_count() -
                compose(alpha.inverse(), sigma).cycle_count();
    return twice / 2;
}

/// Back points: i with alpha(i) < i and alpha(i) not the minimum of its cycle.
inline std::set<int> back_points(const Permutation& alpha) {
    std::set<int> out;
    for (const auto& c : alpha.cycle_decomposition())
        for (int x : c.elements)
            if (alpha(x) < x && alpha(x) != c.min()) out.insert(x);
    return out;
}

inline TwistClass twist_class(const Permutation& alpha, const Cycle& c) {
    int bp = 0;
    for (int x : c.elements)
        if (alpha(x) < x && alpha(x) != c.min()) ++bp;
    switch (bp) {
        case 0: return TwistClass::NotTwisted;
        case 1: return TwistClass::SimplyTwisted;
        default: return TwistClass::DoublyTwisted;
    }
}

/// The Kreweras dual alpha^-1 zeta_n.
inline Permutation kreweras(const Permutation& alpha) {
    return compose(alpha.inverse(), zeta(alpha.size()));
}

/// Classify a genus-1 permutation by its twisted cycles.
inline Genus1Type classify_genus1(const Permutation& alpha) {
    if (genus(alpha) != 1)
        throw std::invalid_argument("classify_genus1: input is not of genus 1");
    int simply = 0, doubly = 0;
    for (const auto& c : alpha.cycle_decomposition()) {
        switch (twist_class(alpha, c)) {
            case TwistClass::SimplyTwisted: ++simply; break;
            case TwistClass::DoublyTwisted: ++doubly; break;
            case TwistClass::NotTwisted: break;
        }
    }
    if (simply == 0 && doubly == 0) return Genus1Type::Partition;
    if (doubly == 1 && simply == 0) return Genus1Type::OneDoublyTwisted;
    if (simply == 1 && doubly == 0) return Genus1Type::OneSimplyTwisted;
    if (simply == 2 && doubly == 0) return Genus1Type::TwoSimplyTwisted;
    throw std::logic_error("classify_genus1: impossible twist profile for genus 1");
}

} // namespace genus1
