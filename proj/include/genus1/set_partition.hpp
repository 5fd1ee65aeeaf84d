#pragma once

#include <functional>
#include <optional>
#include <sstream>

#include "permutation.hpp"

namespace genus1 {

/// A set partition of {1..n}. Blocks are sorted ascending and listed by
/// increasing minimum.
class SetPartition {
public:
    SetPartition() = default;

    SetPartition(int n, std::vector<std::vector<int>> blocks)
        : n_(n), blocks_(std::move(blocks)) {
        std::vector<char> seen(n_ + 1, 0);
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
            std::sort(b.begin(), b.end());
            for (int x : b) {
                if (x < 1 || x > n_)
                    throw std::invalid_argument("SetPartition: element outside 1..n");
                if (seen[x]++)
                    throw std::invalid_argument("SetPartition: duplicate element");
            }
        }
        for (int x = 1; x <= n_; ++x)
            if (!seen[x]) throw std::invalid_argument("SetPartition: blocks do not cover 1..n");
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    int size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const SetPartition&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// The permutation with one increasing cycle per block.
inline Permutation to_permutation(const SetPartition& p) {
    std::vector<int> img(p.size());
    for (const auto& b : p.blocks())
        for (size_t q = 0; q < b.size(); ++q)
            img[b[q] - 1] = b[(q + 1) % b.size()];
    return Permutation(std::move(img));
}

/// The partition whose blocks are alpha's cycles, when every cycle is
/// increasing from its minimum; nullopt otherwise.
inline std::optional<SetPartition> from_permutation(const Permutation& alpha) {
    std::vector<std::vector<int>> blocks;
    for (const auto& c : alpha.cycle_decomposition()) {
        if (!std::is_sorted(c.elements.begin(), c.elements.end()))
            return std::nullopt;
        blocks.push_back(c.elements);
    }
    return SetPartition(alpha.size(), std::move(blocks));
}

inline int genus_of_partition(const SetPartition& p) {
    return genus(to_permutation(p));
}

/// True iff no two blocks interleave as a < b < a' < b'.
inline bool is_noncrossing(const SetPartition& p) {
    // Two blocks cross iff, merging them in increasing order, the block labels
    // alternate at least four times.
    const auto& bl = p.blocks();
    for (size_t i = 0; i < bl.size(); ++i) {
        for (size_t j = i + 1; j < bl.size(); ++j) {
            std::vector<std::pair<int, int>> merged;
            for (int x : bl[i]) merged.emplace_back(x, 0);
            for (int x : bl[j]) merged.emplace_back(x, 1);
            std::sort(merged.begin(), merged.end());
            int runs = 0, last = -1;
            for (auto [x, lab] : merged)
                if (lab != last) { ++runs; last = lab; }
            if (runs >= 4) return false;
        }
    }
    return true;
}

/// Visit every set partition of {1..n} in restricted-growth-string
/// lexicographic order. Returns the number visited; the callback may return
/// false to stop early.
inline long long enumerate_set_partitions(int n,
                                          const std::function<bool(const SetPartition&)>& fn) {
    if (n == 0) {
        fn(SetPartition(0, {}));
        return 1;
    }
    std::vector<int> rgs(n, 0); // rgs[i] = block index of point i+1
    long long count = 0;
    for (;;) {
        int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(k);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        ++count;
        if (!fn(SetPartition(n, std::move(blocks)))) return count;
        // next restricted growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int maxPrefix = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= maxPrefix) { ++rgs[i]; break; }
        }
        if (i == 0) return count;
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
}

/// Kreweras dual of a noncrossing partition: the partition of alpha^-1 zeta_n.
inline SetPartition kreweras_dual(const SetPartition& p) {
    if (!is_noncrossing(p))
        throw std::invalid_argument("kreweras_dual: partition crosses");
    auto dual = from_permutation(kreweras(to_permutation(p)));
    if (!dual) throw std::logic_error("kreweras_dual: dual is not a partition");
    return *dual;
}

/// Partition text format: blocks in braces separated by slashes,
/// e.g. "{1,5,7,8}/{2,4}/{3}/{6}".
inline SetPartition parse_partition(const std::string& text, int n) {
    size_t p = 0;
    std::vector<std::vector<int>> blocks;
    detail::skip_ws(text, p);
    while (p < text.size()) {
        if (text[p] != '{') throw std::invalid_argument("parse_partition: expected '{'");
        ++p;
        std::vector<int> b;
        b.push_back(detail::parse_int(text, p));
        detail::skip_ws(text, p);
        while (p < text.size() && text[p] == ',') {
            ++p;
            b.push_back(detail::parse_int(text, p));
            detail::skip_ws(text, p);
        }
        if (p >= text.size() || text[p] != '}')
            throw std::invalid_argument("parse_partition: expected '}'");
        ++p;
        blocks.push_back(std::move(b));
        detail::skip_ws(text, p);
        if (p < text.size()) {
            if (text[p] != '/') throw std::invalid_argument("parse_partition: expected '/'");
            ++p;
            detail::skip_ws(text, p);
        }
    }
    return SetPartition(n, std::move(blocks));
}

inline std::string format_partition(const SetPartition& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& b : p.blocks()) {
        if (!first) os << '/';
        first = false;
        os << '{';
        for (size_t q = 0; q < b.size(); ++q) {
            if (q) os << ',';
            os << b[q];
        }
        os << '}';
    }
    return os.str();
}

} // namespace genus1
