#pragma once

// The concrete algebra families: H of a semiring, SM of a pointed monoid,
// quotients by unit subgroups, and finite products.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "segal/salgebra.hpp"

namespace segal {

// H(R): level k is R^k, a map f sends a tuple to the tuple of sums over the
// nonzero preimages of each slot, and the product multiplies coordinatewise
// along the smash indexing.
inline SAlgebra make_h(const FiniteSemiring& ring, int trunc = 3, std::string label = {}) {
    auto bad = ring.check();
    if (!bad.empty()) throw std::invalid_argument("H: " + bad);
    auto R = std::make_shared<FiniteSemiring>(ring);
    int B = R->size();

    auto d = std::make_shared<SAlgebra::Data>();
    auto gd = std::make_shared<GammaSet::Data>();
    gd->trunc = trunc;
    gd->size.resize(trunc + 1);
    long s = 1;
    for (int k = 0; k <= trunc; ++k) {
        gd->size[k] = (int)s;
        s *= B;
        if (s > 1'000'000) throw std::invalid_argument("H: level sets too large at this truncation");
    }
    auto digit = [B](int x, int i) {  // slot i in 1..k
        int v = x;
        for (int t = 1; t < i; ++t) v /= B;
        return v % B;
    };
    gd->name = [R, B, digit](int k, int x) {
        if (k == 1) return R->names[x];
        std::string out = "(";
        for (int i = 1; i <= k; ++i) out += (i > 1 ? "," : "") + R->names[digit(x, i)];
        return out + ")";
    };
    gd->act = [R, B, digit](const PointedMap& f, int x) {
        std::vector<int> out(f.dst + 1, 0);
        for (int i = 1; i <= f.src; ++i) {
            int j = f.tab[i];
            if (j > 0) out[j] = R->plus(out[j], digit(x, i));
        }
        int enc = 0;
        for (int j = f.dst; j >= 1; --j) enc = enc * B + out[j];
        return enc;
    };
    d->gs = GammaSet(gd);
    d->unit = R->one;
    d->mul = [R, B, digit](int k, int x, int m, int y) {
        std::vector<int> out(k * m + 1, 0);
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= m; ++j)
                out[smash_index(i, j, k, m)] = R->times(digit(x, i), digit(y, j));
        int enc = 0;
        for (int t = k * m; t >= 1; --t) enc = enc * B + out[t];
        return enc;
    };
    d->h_base = R;
    d->mono = level1_table(d->gs, d->mul);
    d->label = label.empty() ? "H" : label;
    return SAlgebra(d);
}

// SM(M): level k is {*} together with pairs (u, slot) for nonzero u; maps
// relocate the slot and kill pairs sent to the base point.
inline SAlgebra make_sm(const FiniteMonoid& monoid, int trunc = 3, std::string label = {}) {
    auto bad = monoid.check();
    if (!bad.empty()) throw std::invalid_argument("SM: " + bad);
    auto M = std::make_shared<FiniteMonoid>(monoid);
    int nz = M->size() - 1;

    auto d = std::make_shared<SAlgebra::Data>();
    auto gd = std::make_shared<GammaSet::Data>();
    gd->trunc = trunc;
    gd->size.resize(trunc + 1);
    for (int k = 0; k <= trunc; ++k) gd->size[k] = 1 + nz * k;
    auto dec = [nz](int x) {  // x > 0 -> (u, slot)
        int u = 1 + (x - 1) % nz;
        int slot = 1 + (x - 1) / nz;
        return std::pair<int, int>{u, slot};
    };
    auto enc = [nz](int u, int slot) { return u == 0 ? 0 : 1 + (slot - 1) * nz + (u - 1); };
    gd->name = [M, dec](int k, int x) {
        if (x == 0) return std::string("*");
        auto [u, slot] = dec(x);
        if (k == 1) return M->names[u];
        return "(" + M->names[u] + "@" + std::to_string(slot) + ")";
    };
    gd->act = [dec, enc](const PointedMap& f, int x) {
        if (x == 0) return 0;
        auto [u, slot] = dec(x);
        int j = f.tab[slot];
        return j == 0 ? 0 : enc(u, j);
    };
    d->gs = GammaSet(gd);
    d->unit = enc(M->one, 1);
    d->mul = [M, dec, enc](int k, int x, int m, int y) {
        if (x == 0 || y == 0) return 0;
        auto [u, i] = dec(x);
        auto [v, j] = dec(y);
        int uv = M->times(u, v);
        return uv == 0 ? 0 : enc(uv, smash_index(i, j, k, m));
    };
    d->sm_base = M;
    d->mono = level1_table(d->gs, d->mul);
    d->label = label.empty() ? "SM" : label;
    return SAlgebra(d);
}

// The sphere: SM of {0,1}.
inline SAlgebra sphere(int trunc = 3) { return make_sm(monoid_01(), trunc, "S"); }

// The Gamma-set H(A) of an abelian monoid (A,+,0) given by its table; no
// product.  Used as a module-level carrier.
inline GammaSet make_h_module(const std::vector<std::vector<int>>& add,
                              const std::vector<std::string>& names, int trunc = 3) {
    int B = (int)add.size();
    auto gd = std::make_shared<GammaSet::Data>();
    gd->trunc = trunc;
    gd->size.resize(trunc + 1);
    long s = 1;
    for (int k = 0; k <= trunc; ++k) {
        gd->size[k] = (int)s;
        s *= B;
    }
    auto tab = std::make_shared<std::vector<std::vector<int>>>(add);
    auto nm = std::make_shared<std::vector<std::string>>(names);
    auto digit = [B](int x, int i) {
        int v = x;
        for (int t = 1; t < i; ++t) v /= B;
        return v % B;
    };
    gd->name = [nm, digit](int k, int x) {
        std::string out = "(";
        for (int i = 1; i <= k; ++i) out += (i > 1 ? "," : "") + (*nm)[digit(x, i)];
        return out + ")";
    };
    gd->act = [tab, B, digit](const PointedMap& f, int x) {
        std::vector<int> out(f.dst + 1, 0);
        for (int i = 1; i <= f.src; ++i) {
            int j = f.tab[i];
            if (j > 0) out[j] = (*tab)[out[j]][digit(x, i)];
        }
        int enc = 0;
        for (int j = f.dst; j >= 1; --j) enc = enc * B + out[j];
        return enc;
    };
    return GammaSet(gd);
}

// Unit subgroup check on the level-1 monoid of A.
inline std::string check_unit_subgroup(const SAlgebra& a, const std::set<int>& g) {
    const auto& t = a.monoid_table();
    if (!g.count(a.unit())) return "group must contain the unit";
    for (int x : g) {
        bool inv = false;
        for (int y : g) {
            if (!g.count(t[x][y])) return "group not closed under product";
            inv |= t[x][y] == a.unit();
        }
        if (!inv) return "element " + a.name(1, x) + " has no inverse in the group";
    }
    return {};
}

// A/G: levels are orbits of the scalar action of a unit subgroup G.
inline SAlgebra make_quotient(const SAlgebra& base, const std::set<int>& group, std::string label = {}) {
    auto bad = check_unit_subgroup(base, group);
    if (!bad.empty()) throw std::invalid_argument("quotient: " + bad);
    int N = base.trunc();
    auto qi = std::make_shared<QuotientInfo>();
    qi->base = base;
    qi->group.assign(group.begin(), group.end());
    qi->orbit_of.resize(N + 1);
    qi->rep.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        int n = base.size(k);
        std::vector<int> orb(n, -1);
        std::vector<int> reps;
        for (int x = 0; x < n; ++x) {
            if (orb[x] >= 0) continue;
            int id = (int)reps.size();
            reps.push_back(x);
            // x is the least element of its orbit because scans go upward
            for (int g : qi->group) {
                int gx = base.scalar(g, k, x);
                if (orb[gx] >= 0 && orb[gx] != id) throw std::logic_error("quotient: inconsistent orbits");
                orb[gx] = id;
            }
            orb[x] = id;
        }
        qi->orbit_of[k] = std::move(orb);
        qi->rep[k] = std::move(reps);
    }

    auto d = std::make_shared<SAlgebra::Data>();
    auto gd = std::make_shared<GammaSet::Data>();
    gd->trunc = N;
    gd->size.resize(N + 1);
    for (int k = 0; k <= N; ++k) gd->size[k] = (int)qi->rep[k].size();
    GammaSet bgs = base.underlying();
    gd->name = [qi, bgs](int k, int x) { return "[" + bgs.name(k, qi->rep[k][x]) + "]"; };
    gd->act = [qi, bgs](const PointedMap& f, int x) {
        return qi->orbit_of[f.dst][bgs.act(f, qi->rep[f.src][x])];
    };
    d->gs = GammaSet(gd);
    d->unit = qi->orbit_of[1][base.unit()];
    SAlgebra b = base;
    d->mul = [qi, b](int k, int x, int m, int y) {
        return qi->orbit_of[k * m][b.mul(k, qi->rep[k][x], m, qi->rep[m][y])];
    };
    d->quot = qi;
    d->mono = level1_table(d->gs, d->mul);
    d->label = label.empty() ? base.label() + "/G" : label;
    return SAlgebra(d);
}

inline SAlgebraMorphism quotient_map(const SAlgebra& quotient) {
    auto qi = quotient.quotient_info();
    if (!qi) throw std::invalid_argument("not a quotient algebra");
    SAlgebraMorphism phi{qi->base, quotient, qi->orbit_of};
    return phi;
}

// Levelwise cartesian product with componentwise structure.  The empty
// product is the terminal one point algebra.
inline SAlgebra make_product(const std::vector<SAlgebra>& parts, std::string label = {}, int trunc_if_empty = 3) {
    int N = parts.empty() ? trunc_if_empty : parts[0].trunc();
    for (const auto& a : parts)
        if (a.trunc() != N) throw std::invalid_argument("product: truncation mismatch");
    auto ps = std::make_shared<std::vector<SAlgebra>>(parts);
    auto d = std::make_shared<SAlgebra::Data>();
    auto gd = std::make_shared<GammaSet::Data>();
    gd->trunc = N;
    gd->size.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        long s = 1;
        for (const auto& a : *ps) {
            s *= a.size(k);
            if (s > 2'000'000) throw std::invalid_argument("product: level sets too large");
        }
        gd->size[k] = (int)s;
    }
    auto split = [ps](int k, int x) {
        std::vector<int> c(ps->size());
        for (size_t i = 0; i < ps->size(); ++i) {
            int n = (*ps)[i].size(k);
            c[i] = x % n;
            x /= n;
        }
        return c;
    };
    auto join = [ps](int k, const std::vector<int>& c) {
        int enc = 0;
        for (size_t i = ps->size(); i-- > 0;) enc = enc * (*ps)[i].size(k) + c[i];
        return enc;
    };
    gd->name = [ps, split](int k, int x) {
        if (ps->empty()) return std::string("*");
        auto c = split(k, x);
        std::string out = "<";
        for (size_t i = 0; i < c.size(); ++i) out += (i ? "|" : "") + (*ps)[i].name(k, c[i]);
        return out + ">";
    };
    gd->act = [ps, split, join](const PointedMap& f, int x) {
        auto c = split(f.src, x);
        for (size_t i = 0; i < ps->size(); ++i) c[i] = (*ps)[i].act(f, c[i]);
        return join(f.dst, c);
    };
    d->gs = GammaSet(gd);
    {
        std::vector<int> u(ps->size());
        for (size_t i = 0; i < ps->size(); ++i) u[i] = (*ps)[i].unit();
        d->unit = join(1, u);
    }
    d->mul = [ps, split, join](int k, int x, int m, int y) {
        auto cx = split(k, x), cy = split(m, y);
        std::vector<int> c(ps->size());
        for (size_t i = 0; i < ps->size(); ++i) c[i] = (*ps)[i].mul(k, cx[i], m, cy[i]);
        return join(k * m, c);
    };
    d->mono = level1_table(d->gs, d->mul);
    d->label = label.empty() ? "prod" : label;
    return SAlgebra(d);
}

inline SAlgebra one_point_algebra(int trunc = 3) { return make_product({}, "1pt", trunc); }

}  // namespace segal
