#pragma once

// Localization of an S-algebra at a multiplicatively closed subset of its
// level-1 monoid: levelwise classes of (denominator, element) pairs under
// (s,x) ~ (t,y) iff a t x = a s y for some a in the subset.  That relation is
// the orbit equivalence of (s,x) -> (a s, a x), which is how the classes are
// computed.

#include <unordered_map>

#include "segal/cinf.hpp"
#include "segal/families.hpp"

namespace segal {

inline std::string check_multiplicative_set(const SAlgebra& a, const std::set<int>& m) {
    if (!m.count(a.unit())) return "multiplicative set must contain 1";
    const auto& t = a.monoid_table();
    for (int x : m)
        for (int y : m)
            if (!m.count(t[x][y])) return "set not closed under product";
    return {};
}

// The canonical multiplicative set of an object: all g such that some power
// of f falls into g * A(1+).
inline std::set<int> canonical_mset(const SAlgebra& a, const CInfCategory& c, int obj) {
    std::set<int> m;
    for (int g = 0; g < a.size(1); ++g)
        if (divides_power_table(a.monoid_table(), c.rep[obj], g)) m.insert(g);
    return m;
}

inline SAlgebra localize(const SAlgebra& base, const std::set<int>& mset, std::string label = {}) {
    auto bad = check_multiplicative_set(base, mset);
    if (!bad.empty()) throw std::invalid_argument("localize: " + bad);
    int N = base.trunc();
    auto li = std::make_shared<LocInfo>();
    li->base = base;
    li->mset.assign(mset.begin(), mset.end());

    li->rep.resize(N + 1);
    li->class_of_pair.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        int n = base.size(k);
        int sz = base.size(1) * n;
        detail::UnionFind uf(sz);
        auto pid = [n](int s, int x) { return s * n + x; };
        for (int s : li->mset)
            for (int x = 0; x < n; ++x)
                for (int a : li->mset)
                    uf.unite(pid(s, x), pid(base.monoid_table()[a][s], base.scalar(a, k, x)));
        auto& cls = li->class_of_pair[k];
        cls.assign(sz, -1);
        auto& rep = li->rep[k];
        std::unordered_map<int, int> root_to_class;
        auto class_id = [&](int s, int x) {
            int r = uf.find(pid(s, x));
            auto it = root_to_class.find(r);
            if (it != root_to_class.end()) return it->second;
            int id = (int)rep.size();
            root_to_class.emplace(r, id);
            rep.push_back({s, x});
            return id;
        };
        (void)class_id(base.unit(), 0);  // the base point comes first
        for (int s : li->mset)
            for (int x = 0; x < n; ++x) cls[pid(s, x)] = class_id(s, x);
    }

    auto d = std::make_shared<SAlgebra::Data>();
    auto gd = std::make_shared<GammaSet::Data>();
    gd->trunc = N;
    gd->size.resize(N + 1);
    for (int k = 0; k <= N; ++k) gd->size[k] = (int)li->rep[k].size();
    SAlgebra b = base;
    gd->name = [li, b](int k, int x) {
        auto [s, xx] = li->rep[k][x];
        if (x == 0) return std::string("*");
        return "(" + b.name(1, s) + "|" + b.name(k, xx) + ")";
    };
    gd->act = [li, b](const PointedMap& f, int x) {
        auto [s, xx] = li->rep[f.src][x];
        return li->pair_class(f.dst, s, b.act(f, xx));
    };
    d->gs = GammaSet(gd);
    d->unit = li->pair_class(1, base.unit(), base.unit());
    const auto& mono = base.monoid_table();
    d->mul = [li, b, &mono = *std::make_shared<std::vector<std::vector<int>>>(mono)](int k, int x, int m, int y) {
        auto [s, xx] = li->rep[k][x];
        auto [t, yy] = li->rep[m][y];
        return li->pair_class(k * m, mono[s][t], b.mul(k, xx, m, yy));
    };
    d->loc = li;
    d->mono = level1_table(d->gs, d->mul);
    d->label = label.empty() ? "loc(" + base.label() + ")" : label;
    return SAlgebra(d);
}

// The canonical map A -> M^{-1}A, x -> class of (1, x).
inline SAlgebraMorphism localization_map(const SAlgebra& loc) {
    auto li = loc.loc_info();
    if (!li) throw std::invalid_argument("not a localized algebra");
    SAlgebraMorphism phi{li->base, loc, {}};
    int N = loc.trunc();
    phi.at.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        phi.at[k].resize(li->base.size(k));
        for (int x = 0; x < li->base.size(k); ++x)
            phi.at[k][x] = li->pair_class(k, li->base.unit(), x);
    }
    return phi;
}

// Inclusion-induced map N^{-1}A -> M^{-1}A for N inside M.
inline SAlgebraMorphism localization_inclusion(const SAlgebra& locN, const SAlgebra& locM) {
    auto ln = locN.loc_info(), lm = locM.loc_info();
    if (!ln || !lm) throw std::invalid_argument("localization_inclusion: need localized algebras");
    SAlgebraMorphism phi{locN, locM, {}};
    int N = locN.trunc();
    phi.at.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        phi.at[k].resize(locN.size(k));
        for (int x = 0; x < locN.size(k); ++x) {
            auto [s, xx] = ln->rep[k][x];
            phi.at[k][x] = lm->pair_class(k, s, xx);
        }
    }
    return phi;
}

struct LevelwiseIso {
    bool iso = false;
    std::string detail;
    SAlgebraMorphism map;
};

// Compares the localization of H(R) with H of the localized semiring:
// class of (m,(a_j)) -> the tuple of classes ((m,a_j))_j.
inline LevelwiseIso localok_semiring(const FiniteSemiring& R, const std::set<int>& S, int trunc = 3) {
    LevelwiseIso out;
    SAlgebra HR = make_h(R, trunc, "H");
    SAlgebra lhs = localize(HR, S);
    auto locR = localize_semiring(R, S);
    SAlgebra rhs = make_h(locR.result, trunc, "HM");
    auto li = lhs.loc_info();
    int B = R.size(), Bq = locR.result.size();
    SAlgebraMorphism rho{lhs, rhs, {}};
    rho.at.resize(trunc + 1);
    for (int k = 0; k <= trunc; ++k) {
        rho.at[k].resize(lhs.size(k));
        for (int x = 0; x < lhs.size(k); ++x) {
            auto [s, xx] = li->rep[k][x];
            int enc = 0;
            for (int i = k; i >= 1; --i) {
                int digit = xx;
                for (int t = 1; t < i; ++t) digit /= B;
                digit %= B;
                enc = enc * Bq + locR.class_of_pair[s * B + digit];
            }
            rho.at[k][x] = enc;
        }
        std::vector<char> hit(rhs.size(k), 0);
        for (int x = 0; x < lhs.size(k); ++x) {
            if (hit[rho.at[k][x]]) {
                out.detail = "not injective at level " + std::to_string(k);
                return out;
            }
            hit[rho.at[k][x]] = 1;
        }
        if (lhs.size(k) != rhs.size(k)) {
            out.detail = "level " + std::to_string(k) + " sizes differ";
            return out;
        }
    }
    auto bad = check_morphism(rho);
    if (!bad.empty()) {
        out.detail = bad;
        return out;
    }
    out.iso = true;
    out.map = std::move(rho);
    return out;
}

// Compares the localization of SM(N) with SM of the localized monoid.
inline LevelwiseIso localok_monoid(const FiniteMonoid& M, const std::set<int>& S, int trunc = 3) {
    LevelwiseIso out;
    SAlgebra smn = make_sm(M, trunc, "SM");
    SAlgebra lhs = localize(smn, S);
    auto locM = localize_monoid(M, S);
    SAlgebra rhs = make_sm(locM.result, trunc, "SMloc");
    auto li = lhs.loc_info();
    int nz = M.size() - 1;
    int nzq = locM.result.size() - 1;
    SAlgebraMorphism rho{lhs, rhs, {}};
    rho.at.resize(trunc + 1);
    for (int k = 0; k <= trunc; ++k) {
        rho.at[k].resize(lhs.size(k));
        for (int x = 0; x < lhs.size(k); ++x) {
            auto [s, xx] = li->rep[k][x];
            if (xx == 0) {
                rho.at[k][x] = 0;
                continue;
            }
            int u = 1 + (xx - 1) % nz;
            int slot = 1 + (xx - 1) / nz;
            int uq = locM.class_of_pair[s * M.size() + u];
            rho.at[k][x] = uq == 0 ? 0 : 1 + (slot - 1) * nzq + (uq - 1);
        }
        if (lhs.size(k) != rhs.size(k)) {
            out.detail = "level " + std::to_string(k) + " sizes differ";
            return out;
        }
        std::vector<char> hit(rhs.size(k), 0);
        for (int x = 0; x < lhs.size(k); ++x) {
            if (hit[rho.at[k][x]]) {
                out.detail = "not injective at level " + std::to_string(k);
                return out;
            }
            hit[rho.at[k][x]] = 1;
        }
    }
    auto bad = check_morphism(rho);
    if (!bad.empty()) {
        out.detail = bad;
        return out;
    }
    out.iso = true;
    out.map = std::move(rho);
    return out;
}

}  // namespace segal
