#pragma once

// The divisibility category of a pointed monoid: one object r(f) per element,
// morphisms into r(f) labelled by monoid elements, sieves as ideals.

#include <set>

#include "segal/monoid.hpp"

namespace segal {

struct CMCat {
    FiniteMonoid m;

    // Labels u with f = u*g, i.e. the morphisms r(f) -> r(g).
    std::vector<int> hom(int f, int g) const {
        std::vector<int> out;
        for (int u = 0; u < m.size(); ++u)
            if (m.times(u, g) == f) out.push_back(u);
        return out;
    }

    // Composition of u: r(f)->r(g) with v: r(g)->r(h) is the product uv.
    int compose(int u, int v) const { return m.times(u, v); }
};

// A sieve on r(target): the morphisms u -> r(target) with u in `labels`.
// Stability under precomposition makes the label set an ideal.
struct CMSieve {
    int target = 0;
    std::set<int> labels;
};

inline bool is_sieve(const FiniteMonoid& m, const CMSieve& s) { return is_ideal(m, s.labels); }

inline CMSieve sieve_from_ideal(const FiniteMonoid& m, const std::set<int>& ideal, int f) {
    if (!is_ideal(m, ideal)) throw std::invalid_argument("sieve_from_ideal: not an ideal");
    return CMSieve{f, ideal};
}

inline std::set<int> ideal_from_sieve(const FiniteMonoid& m, const CMSieve& s) {
    if (!is_sieve(m, s)) throw std::invalid_argument("ideal_from_sieve: labels not an ideal");
    return s.labels;
}

// Existence of the unique morphism of divisibility functors F_b -> F_c:
// some power of c falls into b*M.
inline bool hom_exists_F(const FiniteMonoid& m, int b, int c) { return divides_power(m, c, b); }

}  // namespace segal
