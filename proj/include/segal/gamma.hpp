#pragma once

// Finite pointed sets k+ = {0,...,k} (0 the base point) and the base-point
// preserving maps between them.  These index everything else in the library:
// a Gamma-set assigns data to each k+ and an action to each such map.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace segal {

// Identification of k+ smash m+ with (km)+.  Nonzero pairs (i,j) map to
// (i-1)*m + j; anything touching the base point collapses to 0.
inline int smash_index(int i, int j, int k, int m) {
    if (i < 0 || i > k || j < 0 || j > m)
        throw std::out_of_range("smash_index: component out of range");
    if (i == 0 || j == 0) return 0;
    return (i - 1) * m + j;
}

// A morphism k+ -> m+ in the indexing category: tab[0] == 0 always.
struct PointedMap {
    int src = 0;
    int dst = 0;
    std::vector<int> tab;  // size src+1, values in 0..dst

    PointedMap() : tab{0} {}
    PointedMap(int k, int m, std::vector<int> t) : src(k), dst(m), tab(std::move(t)) {
        if ((int)tab.size() != src + 1) throw std::invalid_argument("pointed map: table size");
        if (tab[0] != 0) throw std::invalid_argument("pointed map: base point not preserved");
        for (int v : tab)
            if (v < 0 || v > dst) throw std::invalid_argument("pointed map: value out of range");
    }

    int operator()(int i) const { return tab[i]; }

    bool operator==(const PointedMap& o) const {
        return src == o.src && dst == o.dst && tab == o.tab;
    }

    static PointedMap identity(int k) {
        std::vector<int> t(k + 1);
        for (int i = 0; i <= k; ++i) t[i] = i;
        return {k, k, std::move(t)};
    }

    // delta_j : n+ -> 1+, hits 1 exactly at slot j.
    static PointedMap delta(int n, int j) {
        std::vector<int> t(n + 1, 0);
        t[j] = 1;
        return {n, 1, std::move(t)};
    }

    // Sigma : n+ -> 1+, every nonzero slot to 1.
    static PointedMap sigma(int n) {
        std::vector<int> t(n + 1, 1);
        t[0] = 0;
        return {n, 1, std::move(t)};
    }

    // h_{k,j} : 1+ -> k+ sending 1 to j.
    static PointedMap slot(int k, int j) { return {1, k, {0, j}}; }
};

// g after f.
inline PointedMap compose(const PointedMap& g, const PointedMap& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose: arity mismatch");
    std::vector<int> t(f.src + 1);
    for (int i = 0; i <= f.src; ++i) t[i] = g.tab[f.tab[i]];
    return {f.src, g.dst, std::move(t)};
}

// f smash g under the smash_index identification.
inline PointedMap smash(const PointedMap& f, const PointedMap& g) {
    int k = f.src, m = g.src;
    std::vector<int> t(k * m + 1, 0);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= m; ++j)
            t[smash_index(i, j, k, m)] = smash_index(f.tab[i], g.tab[j], f.dst, g.dst);
    return {k * m, f.dst * g.dst, std::move(t)};
}

// All pointed maps k+ -> m+ in lexicographic table order.
inline std::vector<PointedMap> all_pointed_maps(int k, int m) {
    std::vector<PointedMap> out;
    std::vector<int> t(k + 1, 0);
    while (true) {
        out.emplace_back(k, m, t);
        int i = k;
        while (i >= 1 && t[i] == m) t[i--] = 0;
        if (i < 1) break;
        ++t[i];
    }
    return out;
}

}  // namespace segal
