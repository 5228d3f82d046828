#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace eltlab {

/// Sign (+1/-1) of a permutation given in one-line notation.
inline int permutation_sign(std::span<const std::size_t> p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

/// Calls f(perm, sign) for every permutation of {0..n-1} in lexicographic order.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
        f(std::span<const std::size_t>(p), permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

/// Calls f(subset) for every k-subset of {0..n-1} (ascending indices).
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), std::size_t{0});
    while (true) {
        f(std::span<const std::size_t>(s));
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace eltlab
