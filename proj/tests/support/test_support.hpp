#pragma once

#include "gkm/bigint.hpp"
#include "gkm/index_id.hpp"
#include "gkm/path_crystal.hpp"
#include "gkm/path_vector.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace gkm::test {

// Little-endian literal: pv({2,0,1}) has x_1 = 2, x_3 = 1.
inline PathVector pv(std::initializer_list<long> little_endian) {
    PathVector x;
    Int k = 1;
    for (long v : little_endian) {
        if (v != 0)
            x.set(k, v);
        ++k;
    }
    return x;
}

// Every vector supported in 1..window with total degree <= max_total.
inline void for_each_vector(const Int& window, const Int& max_total,
                            const std::function<void(const PathVector&)>& fn) {
    PathVector current;
    std::function<void(Int, Int)> rec = [&](Int k, Int budget) {
        if (k > window) {
            fn(current);
            return;
        }
        for (Int v = 0; v <= budget; ++v) {
            if (v != 0)
                current.set(k, v);
            rec(k + 1, budget - v);
            if (v != 0)
                current.set(k, 0);
        }
    };
    rec(1, max_total);
}

inline std::set<PathVector> all_vectors(const Int& window, const Int& max_total) {
    std::set<PathVector> out;
    for_each_vector(window, max_total, [&](const PathVector& x) { out.insert(x); });
    return out;
}

inline PathVector random_vector(std::mt19937_64& rng, int window, int max_total) {
    std::uniform_int_distribution<int> total_dist(0, max_total);
    std::uniform_int_distribution<int> pos_dist(1, window);
    PathVector x;
    const int total = total_dist(rng);
    for (int u = 0; u < total; ++u) {
        const Int k = pos_dist(rng);
        x.set(k, x.at(k) + 1);
    }
    return x;
}

// Distinct indices occurring in positions 1..window, sorted.
inline std::vector<IndexId> window_indices(const PathCrystal& z, const Int& window) {
    std::set<IndexId> seen;
    for (Int k = 1; k <= window; ++k)
        seen.insert(z.iota().at(k));
    return {seen.begin(), seen.end()};
}

}  // namespace gkm::test
