#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace mpla {

constexpr int kMaxDim = 62;

inline std::size_t binomial(int n, int k) {
    static const auto table = [] {
        std::vector<std::vector<std::size_t>> t(kMaxDim + 1, std::vector<std::size_t>(kMaxDim + 1, 0));
        for (int i = 0; i <= kMaxDim; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > kMaxDim) fail(ErrorKind::DimensionMismatch, "dimension too large");
    return table[n][k];
}

// lex rank of a strictly increasing tuple drawn from [0,n)
inline std::size_t subset_rank(std::span<const int> c, int n) {
    const int k = static_cast<int>(c.size());
    std::size_t r = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int j = prev + 1; j < c[i]; ++j) r += binomial(n - 1 - j, k - 1 - i);
        prev = c[i];
    }
    return r;
}

// all increasing k-subsets of [0,n), lexicographic; cached
inline const std::vector<std::vector<int>>& subsets(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::vector<int>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, k}];
    if (!slot) {
        slot = std::make_unique<std::vector<std::vector<int>>>();
        if (k >= 0 && k <= n) {
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = i;
            while (true) {
                slot->push_back(c);
                int i = k - 1;
                while (i >= 0 && c[i] == n - k + i) --i;
                if (i < 0) break;
                ++c[i];
                for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            }
        }
    }
    return *slot;
}

// sorts in place; returns the sign of the sorting permutation, 0 on a repeat
inline int sort_sign(std::span<int> idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] == idx[i]) return 0;
    return sign;
}

// (p,q)-shuffle: positions of the first block, positions of the second, sign
struct Shuffle {
    std::vector<int> first;
    std::vector<int> second;
    int sign;
};

inline const std::vector<Shuffle>& shuffles(int p, int q) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Shuffle>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, q}];
    if (!slot) {
        slot = std::make_unique<std::vector<Shuffle>>();
        if (p >= 0 && q >= 0) {
            const int n = p + q;
            std::vector<int> c(p);
            for (int i = 0; i < p; ++i) c[i] = i;
            while (true) {
                Shuffle s;
                s.first = c;
                std::vector<bool> used(n, false);
                for (int x : c) used[x] = true;
                for (int i = 0; i < n; ++i)
                    if (!used[i]) s.second.push_back(i);
                long inv = 0;
                for (int i = 0; i < p; ++i) inv += c[i] - i;
                s.sign = (inv % 2) ? -1 : 1;
                slot->push_back(std::move(s));
                int i = p - 1;
                while (i >= 0 && c[i] == n - p + i) --i;
                if (i < 0) break;
                ++c[i];
                for (int j = i + 1; j < p; ++j) c[j] = c[j - 1] + 1;
            }
        }
    }
    return *slot;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace mpla
