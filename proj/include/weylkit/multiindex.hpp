#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

namespace weylkit {

// Exponent vector of fixed length; entries are non-negative.
using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline bool is_zero_index(const MultiIndex& a) {
    return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

inline MultiIndex index_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// a - b; caller guarantees divisibility.
inline MultiIndex index_sub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool index_divides(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline MultiIndex index_lcm(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline MultiIndex index_min(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline bool index_disjoint(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace weylkit
