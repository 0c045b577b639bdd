#pragma once

// Morphism enumeration between dense carriers.  The search assigns images
// level by level and element by element, pruning with every naturality
// square whose endpoints are already assigned, so the result is an
// exhaustive list of natural families in deterministic order.

#include <map>
#include <optional>

#include "segal/families.hpp"
#include "segal/salgebra.hpp"

namespace segal {

struct NatTransform {
    std::vector<std::vector<int>> at;  // at[k][x]
    bool trivial() const {
        for (const auto& lvl : at)
            for (int v : lvl)
                if (v != 0) return false;
        return true;
    }
};

namespace detail {

struct ActCache {
    const GammaSet* gs;
    int N;
    std::map<std::pair<int, int>, std::vector<PointedMap>> maps;
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> tabs;

    explicit ActCache(const GammaSet& g) : gs(&g), N(g.trunc()) {
        for (int a = 0; a <= N; ++a)
            for (int b = 0; b <= N; ++b) {
                auto key = std::make_pair(a, b);
                maps[key] = all_pointed_maps(a, b);
                auto& tt = tabs[key];
                for (const auto& f : maps[key]) tt.push_back(gs->act_table(f));
            }
    }
};

}  // namespace detail

// All natural families X -> Y within the common truncation.  With `algebra`
// set, both carriers must come from S-algebras and the families are also
// required to be unital and multiplicative.
inline std::vector<NatTransform> nat_transformations(const GammaSet& X, const GammaSet& Y,
                                                     const SAlgebra* AX = nullptr,
                                                     const SAlgebra* AY = nullptr,
                                                     bool algebra = false,
                                                     size_t limit = SIZE_MAX) {
    if (X.trunc() != Y.trunc()) throw std::invalid_argument("nat_transformations: truncation mismatch");
    if (algebra && (!AX || !AY)) throw std::invalid_argument("nat_transformations: algebra homs need algebras");
    int N = X.trunc();
    detail::ActCache cx(X), cy(Y);

    // preimage lists per map for "who lands on x" lookups
    std::map<std::pair<int, int>, std::vector<std::vector<std::vector<int>>>> rev;
    for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k) {
            auto key = std::make_pair(j, k);
            auto& r = rev[key];
            r.resize(cx.maps[key].size());
            for (size_t mi = 0; mi < cx.maps[key].size(); ++mi) {
                r[mi].assign(X.size(k), {});
                const auto& tx = cx.tabs[key][mi];
                for (int xp = 0; xp < X.size(j); ++xp) r[mi][tx[xp]].push_back(xp);
            }
        }

    std::vector<std::vector<int>> phi(N + 1);
    for (int k = 0; k <= N; ++k) phi[k].assign(X.size(k), -1);
    for (int k = 0; k <= N; ++k) phi[k][0] = 0;

    std::vector<std::pair<int, int>> order;  // (level, element), base points skipped
    for (int k = 0; k <= N; ++k)
        for (int x = 1; x < X.size(k); ++x) order.push_back({k, x});

    std::vector<NatTransform> out;

    // multiplicativity over pairs (a,b) with a*b == k, all levels <= k assigned
    auto products_ok_at = [&](int k) {
        for (int a = 1; a <= k; ++a) {
            if (k % a != 0) continue;
            int b = k / a;
            if (a > N || b > N) continue;
            for (int x = 0; x < X.size(a); ++x)
                for (int y = 0; y < X.size(b); ++y)
                    if (phi[k][AX->mul(a, x, b, y)] != AY->mul(a, phi[a][x], b, phi[b][y]))
                        return false;
        }
        return true;
    };

    std::function<void(size_t)> dfs = [&](size_t pos) {
        if (out.size() >= limit) return;
        if (pos == order.size()) {
            NatTransform t{phi};
            out.push_back(std::move(t));
            return;
        }
        auto [k, x] = order[pos];
        // forced values from maps landing on x
        std::optional<int> forced;
        bool contradiction = false;
        auto force = [&](int v) {
            if (forced && *forced != v) contradiction = true;
            forced = v;
        };
        for (int j = 0; j <= k && !contradiction; ++j) {
            auto key = std::make_pair(j, k);
            const auto& ms = cx.maps[key];
            const auto& tys = cy.tabs[key];
            const auto& rv = rev[key];
            for (size_t mi = 0; mi < ms.size() && !contradiction; ++mi) {
                const auto& ty = tys[mi];
                for (int xp : rv[mi][x]) {
                    if (j == k && xp >= x) break;  // strictly earlier elements only
                    force(ty[phi[j][xp]]);
                    if (contradiction) break;
                }
            }
        }
        if (contradiction) return;
        if (algebra && k == 1 && x == AX->unit()) {
            if (forced && *forced != AY->unit()) return;
            forced = AY->unit();
        }

        // outgoing constraints usable as filters
        struct Filter {
            const std::vector<int>* ty;
            int want;  // -2 means want == candidate itself
        };
        std::vector<Filter> filters;
        for (int j = 0; j <= k; ++j) {
            auto key = std::make_pair(k, j);
            const auto& ms = cx.maps[key];
            const auto& ts = cx.tabs[key];
            const auto& tys = cy.tabs[key];
            for (size_t mi = 0; mi < ms.size(); ++mi) {
                int t = ts[mi][x];
                if (j < k)
                    filters.push_back({&tys[mi], phi[j][t]});
                else if (t < x)
                    filters.push_back({&tys[mi], phi[k][t]});
                else if (t == x)
                    filters.push_back({&tys[mi], -2});
            }
        }
        auto admissible = [&](int y) {
            for (const auto& f : filters) {
                int want = f.want == -2 ? y : f.want;
                if ((*f.ty)[y] != want) return false;
            }
            return true;
        };

        auto try_value = [&](int y) {
            if (!admissible(y)) return;
            phi[k][x] = y;
            bool level_done = (pos + 1 == order.size()) || order[pos + 1].first != k;
            if (!algebra || !level_done || products_ok_at(k)) dfs(pos + 1);
            phi[k][x] = -1;
        };
        if (forced) {
            try_value(*forced);
        } else {
            for (int y = 0; y < Y.size(k); ++y) try_value(y);
        }
    };
    dfs(0);
    return out;
}

inline std::vector<NatTransform> enumerate_module_homs(const GammaSet& X, const GammaSet& Y) {
    return nat_transformations(X, Y);
}

inline std::vector<NatTransform> enumerate_algebra_homs(const SAlgebra& A, const SAlgebra& B) {
    return nat_transformations(A.underlying(), B.underlying(), &A, &B, true);
}

// The sphere-into-X bijection: one natural family per element of X(1+),
// x_a(k)(j) = X(slot_{k,j})(a).  Throws if naturality ever fails.
inline std::vector<NatTransform> hom_from_sphere(const GammaSet& X) {
    int N = X.trunc();
    SAlgebra S = sphere(N);
    std::vector<NatTransform> out;
    for (int a = 0; a < X.size(1); ++a) {
        NatTransform t;
        t.at.resize(N + 1);
        for (int k = 0; k <= N; ++k) {
            t.at[k].assign(S.size(k), 0);
            for (int j = 1; j <= k; ++j) t.at[k][j] = X.act(PointedMap::slot(k, j), a);
        }
        // verify naturality of the constructed family
        for (int k = 0; k <= N; ++k)
            for (int m = 0; m <= N; ++m)
                for (const auto& f : all_pointed_maps(k, m))
                    for (int x = 0; x < S.size(k); ++x)
                        if (t.at[m][S.act(f, x)] != X.act(f, t.at[k][x]))
                            throw std::logic_error("sphere transformation not natural");
        out.push_back(std::move(t));
    }
    return out;
}

// Pointed unital multiplicative maps between monoid tables, in lexicographic
// order of the image tuple.
inline std::vector<std::vector<int>> monoid_homs(const FiniteMonoid& M, const FiniteMonoid& T) {
    std::vector<int> img(M.size(), -1);
    img[0] = 0;
    img[M.one] = T.one;
    std::vector<int> freeelts;
    for (int x = 0; x < M.size(); ++x)
        if (x != 0 && x != M.one) freeelts.push_back(x);
    std::vector<std::vector<int>> out;
    auto consistent = [&]() {
        for (int a = 0; a < M.size(); ++a) {
            if (img[a] < 0) continue;
            for (int b = 0; b < M.size(); ++b) {
                if (img[b] < 0) continue;
                int ab = M.times(a, b);
                if (img[ab] >= 0 && img[ab] != T.times(img[a], img[b])) return false;
            }
        }
        return true;
    };
    std::function<void(size_t)> dfs = [&](size_t i) {
        if (i == freeelts.size()) {
            if (consistent()) out.push_back(img);
            return;
        }
        for (int v = 0; v < T.size(); ++v) {
            img[freeelts[i]] = v;
            if (consistent()) dfs(i + 1);
            img[freeelts[i]] = -1;
        }
    };
    dfs(0);
    return out;
}

// Monoid maps M -> A(1+) together with their unique extensions SM(M) -> A.
struct MonoidAlgebraHoms {
    std::vector<std::vector<int>> monoid_maps;
    std::vector<SAlgebraMorphism> extensions;
};

inline MonoidAlgebraHoms hom_sm_to_algebra(const FiniteMonoid& M, const SAlgebra& A) {
    MonoidAlgebraHoms out;
    out.monoid_maps = monoid_homs(M, A.level1_monoid());
    SAlgebra sm = make_sm(M, A.trunc());
    for (const auto& psi : out.monoid_maps) {
        SAlgebraMorphism phi{sm, A, {}};
        int N = A.trunc();
        phi.at.resize(N + 1);
        for (int k = 0; k <= N; ++k) {
            phi.at[k].assign(sm.size(k), 0);
            for (int x = 1; x < sm.size(k); ++x) {
                int u = 1 + (x - 1) % (M.size() - 1);
                int slot = 1 + (x - 1) / (M.size() - 1);
                phi.at[k][x] = A.act(PointedMap::slot(k, slot), psi[u]);
            }
        }
        auto bad = check_morphism(phi);
        if (!bad.empty()) throw std::logic_error("monoid extension not an algebra morphism: " + bad);
        out.extensions.push_back(std::move(phi));
    }
    return out;
}

// Multiplicative pointed unital maps M -> (R, .).
inline std::vector<std::vector<int>> hom_mr(const FiniteMonoid& M, const FiniteSemiring& R) {
    return monoid_homs(M, R.multiplicative_monoid());
}

// Maps from the degree-d fragment {0,1,T,...,T^d} of the free monoid into
// A(1+): tuples (t_1,...,t_d) with t_a t_b = t_{a+b} whenever a+b <= d.
inline long free_fragment_hom_count(const SAlgebra& A, int degree) {
    const auto& t = A.monoid_table();
    std::vector<int> img(degree + 1);
    img[0] = A.unit();
    long count = 0;
    std::function<void(int)> dfs = [&](int i) {
        if (i > degree) {
            ++count;
            return;
        }
        for (int v = 0; v < A.size(1); ++v) {
            bool ok = true;
            for (int a = 1; a <= i && ok; ++a) {
                int b = i - a;
                if (b >= 1 && t[img[a]][img[b]] != v) ok = false;
            }
            if (!ok) continue;
            img[i] = v;
            dfs(i + 1);
        }
    };
    dfs(1);
    return count;
}

}  // namespace segal
