#pragma once

// Truncated Gamma-sets and S-algebras with dense, index-based level sets.
// Level k holds the value at k+; element 0 of every level is the base point.
// Carriers are immutable after construction and shared by value.

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "segal/gamma.hpp"
#include "segal/monoid.hpp"
#include "segal/semiring.hpp"

namespace segal {

class SAlgebra;

struct QuotientInfo;
struct LocInfo;

class GammaSet {
public:
    struct Data {
        int trunc = 3;
        std::vector<int> size;  // levels 0..trunc
        std::function<std::string(int, int)> name;
        std::function<int(const PointedMap&, int)> act;
    };

    GammaSet() = default;
    explicit GammaSet(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    bool valid() const { return d_ != nullptr; }
    int trunc() const { return d_->trunc; }
    int size(int k) const { return d_->size.at(k); }
    std::string name(int k, int x) const { return d_->name(k, x); }

    int act(const PointedMap& f, int x) const {
        if (f.src > trunc() || f.dst > trunc()) throw std::out_of_range("act: level beyond truncation");
        if (x < 0 || x >= size(f.src)) throw std::out_of_range("act: element out of range");
        return d_->act(f, x);
    }

    // Action table of one map, materialized.
    std::vector<int> act_table(const PointedMap& f) const {
        std::vector<int> t(size(f.src));
        for (int x = 0; x < size(f.src); ++x) t[x] = d_->act(f, x);
        return t;
    }

    const std::shared_ptr<const Data>& data() const { return d_; }

private:
    std::shared_ptr<const Data> d_;
};

class SAlgebra {
public:
    struct Data {
        GammaSet gs;
        int unit = 0;
        std::function<int(int, int, int, int)> mul;  // (k,x,m,y) -> element of level k*m
        // provenance, set by the family constructors that apply
        std::shared_ptr<const FiniteSemiring> h_base;
        std::shared_ptr<const FiniteMonoid> sm_base;
        std::shared_ptr<const QuotientInfo> quot;
        std::shared_ptr<const LocInfo> loc;
        std::vector<std::vector<int>> mono;  // level-1 multiplication table
        std::string label;
    };

    SAlgebra() = default;
    explicit SAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    bool valid() const { return d_ != nullptr; }
    const GammaSet& underlying() const { return d_->gs; }
    int trunc() const { return d_->gs.trunc(); }
    int size(int k) const { return d_->gs.size(k); }
    std::string name(int k, int x) const { return d_->gs.name(k, x); }
    int act(const PointedMap& f, int x) const { return d_->gs.act(f, x); }
    int unit() const { return d_->unit; }
    const std::string& label() const { return d_->label; }

    int mul(int k, int x, int m, int y) const {
        if (k * m > trunc()) throw std::out_of_range("mul: product level beyond truncation");
        return d_->mul(k, x, m, y);
    }

    // u.x for u at level 1, x at level k (the 1+ smash k+ = k+ identification).
    int scalar(int u, int k, int x) const { return d_->mul(1, u, k, x); }

    // The multiplicative pointed monoid on level 1.
    const std::vector<std::vector<int>>& monoid_table() const { return d_->mono; }
    FiniteMonoid level1_monoid() const {
        FiniteMonoid m;
        m.names.resize(size(1));
        for (int i = 0; i < size(1); ++i) m.names[i] = name(1, i);
        m.one = unit();
        m.mul = d_->mono;
        return m;
    }

    const std::shared_ptr<const FiniteSemiring>& h_base() const { return d_->h_base; }
    const std::shared_ptr<const FiniteMonoid>& sm_base() const { return d_->sm_base; }
    const std::shared_ptr<const QuotientInfo>& quotient_info() const { return d_->quot; }
    const std::shared_ptr<const LocInfo>& loc_info() const { return d_->loc; }
    const std::shared_ptr<const Data>& data() const { return d_; }

private:
    std::shared_ptr<const Data> d_;
};

struct QuotientInfo {
    SAlgebra base;
    std::vector<int> group;                     // unit subgroup of base level 1
    std::vector<std::vector<int>> orbit_of;     // per level: base element -> orbit id
    std::vector<std::vector<int>> rep;          // per level: orbit id -> least base element
};

struct LocInfo {
    SAlgebra base;
    std::vector<int> mset;                              // multiplicative subset of base level 1
    std::vector<std::vector<std::pair<int, int>>> rep;  // per level: class -> (s,x)
    std::vector<std::vector<int>> class_of_pair;        // per level: s*size(k)+x -> class
    int pair_class(int k, int s, int x) const { return class_of_pair[k][s * (int)base.size(k) + x]; }
};

inline std::vector<std::vector<int>> level1_table(const GammaSet& gs, const std::function<int(int, int, int, int)>& mul) {
    int n = gs.size(1);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = mul(1, a, 1, b);
    return t;
}

// ---- morphisms ----

struct SAlgebraMorphism {
    SAlgebra dom, cod;
    std::vector<std::vector<int>> at;  // at[k][x]

    int operator()(int k, int x) const { return at[k][x]; }
};

// Natural transformation check; with `algebra`, also unit and products.
// Returns the first violation found, or the empty string.
inline std::string check_morphism(const SAlgebraMorphism& phi, bool algebra = true) {
    const auto& A = phi.dom;
    const auto& B = phi.cod;
    int N = A.trunc();
    if (B.trunc() != N) return "truncation mismatch";
    for (int k = 0; k <= N; ++k) {
        if ((int)phi.at[k].size() != A.size(k)) return "level map size mismatch at level " + std::to_string(k);
        if (phi.at[k][0] != 0) return "base point not preserved at level " + std::to_string(k);
    }
    for (int k = 0; k <= N; ++k)
        for (int m = 0; m <= N; ++m)
            for (const auto& f : all_pointed_maps(k, m))
                for (int x = 0; x < A.size(k); ++x)
                    if (phi.at[m][A.act(f, x)] != B.act(f, phi.at[k][x]))
                        return "naturality fails at level " + std::to_string(k) + " element " + A.name(k, x);
    if (algebra) {
        if (phi.at[1][A.unit()] != B.unit()) return "unit not preserved";
        for (int k = 1; k <= N; ++k)
            for (int m = 1; k * m <= N; ++m)
                for (int x = 0; x < A.size(k); ++x)
                    for (int y = 0; y < A.size(m); ++y)
                        if (phi.at[k * m][A.mul(k, x, m, y)] !=
                            B.mul(k, phi.at[k][x], m, phi.at[m][y]))
                            return "multiplicativity fails at levels " + std::to_string(k) + "," + std::to_string(m);
    }
    return {};
}

inline SAlgebraMorphism identity_morphism(const SAlgebra& a) {
    SAlgebraMorphism phi{a, a, {}};
    phi.at.resize(a.trunc() + 1);
    for (int k = 0; k <= a.trunc(); ++k) {
        phi.at[k].resize(a.size(k));
        for (int x = 0; x < a.size(k); ++x) phi.at[k][x] = x;
    }
    return phi;
}

inline SAlgebraMorphism compose(const SAlgebraMorphism& g, const SAlgebraMorphism& f) {
    SAlgebraMorphism out{f.dom, g.cod, {}};
    out.at.resize(f.dom.trunc() + 1);
    for (int k = 0; k <= f.dom.trunc(); ++k) {
        out.at[k].resize(f.dom.size(k));
        for (int x = 0; x < f.dom.size(k); ++x) out.at[k][x] = g.at[k][f.at[k][x]];
    }
    return out;
}

// ---- axiom validation ----

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every axiom instance within the truncation: functor laws, base point
// preservation, naturality of the product in both smash arguments,
// commutativity via the transposition of the smash index, associativity, and
// the unit law.  Reports the first failing instance per axiom.
inline ValidationReport validate_salgebra(const SAlgebra& A) {
    ValidationReport rep;
    int N = A.trunc();
    const GammaSet& gs = A.underlying();

    // action tables memoized per map, addressed by the map's lexicographic rank
    std::vector<std::vector<std::vector<int>>> tabs((N + 1) * (N + 1));
    auto key = [&](int k, int m) { return k * (N + 1) + m; };
    for (int k = 0; k <= N; ++k)
        for (int m = 0; m <= N; ++m)
            for (const auto& f : all_pointed_maps(k, m)) tabs[key(k, m)].push_back(gs.act_table(f));
    auto table_of = [&](const PointedMap& f) -> const std::vector<int>& {
        long idx = 0;
        for (int i = 1; i <= f.src; ++i) idx = idx * (f.dst + 1) + f.tab[i];
        return tabs[key(f.src, f.dst)][idx];
    };

    // identity and base point
    for (int k = 0; k <= N && rep.violations.size() < 1; ++k) {
        const auto& t = table_of(PointedMap::identity(k));
        for (int x = 0; x < gs.size(k); ++x)
            if (t[x] != x) {
                rep.violations.push_back("identity action broken at level " + std::to_string(k));
                break;
            }
    }
    {
        bool bad = false;
        for (int k = 0; k <= N && !bad; ++k)
            for (int m = 0; m <= N && !bad; ++m)
                for (const auto& f : all_pointed_maps(k, m))
                    if (table_of(f)[0] != 0) {
                        rep.violations.push_back("base point moved by a map " + std::to_string(k) + "->" + std::to_string(m));
                        bad = true;
                        break;
                    }
    }

    // functoriality on all composable pairs
    {
        bool bad = false;
        for (int a = 0; a <= N && !bad; ++a)
            for (int b = 0; b <= N && !bad; ++b)
                for (int c = 0; c <= N && !bad; ++c) {
                    auto fs = all_pointed_maps(a, b);
                    auto gsm = all_pointed_maps(b, c);
                    for (const auto& f : fs) {
                        const auto& tf = table_of(f);
                        for (const auto& g : gsm) {
                            const auto& tg = table_of(g);
                            const auto& tgf = table_of(compose(g, f));
                            for (int x = 0; x < gs.size(a); ++x)
                                if (tgf[x] != tg[tf[x]]) {
                                    rep.violations.push_back("composition law fails for maps " + std::to_string(a) + "->" +
                                                             std::to_string(b) + "->" + std::to_string(c));
                                    bad = true;
                                    break;
                                }
                            if (bad) break;
                        }
                        if (bad) break;
                    }
                }
    }

    // naturality of the product in both arguments
    {
        bool bad = false;
        for (int k = 1; k <= N && !bad; ++k)
            for (int m = 1; k * m <= N && !bad; ++m)
                for (int k2 = 1; k2 <= N && !bad; ++k2)
                    for (int m2 = 1; k2 * m2 <= N && !bad; ++m2)
                        for (const auto& f : all_pointed_maps(k, k2)) {
                            for (const auto& g : all_pointed_maps(m, m2)) {
                                const auto& tfg = table_of(smash(f, g));
                                const auto& tf = table_of(f);
                                const auto& tg = table_of(g);
                                for (int x = 0; x < gs.size(k) && !bad; ++x)
                                    for (int y = 0; y < gs.size(m); ++y)
                                        if (A.mul(k2, tf[x], m2, tg[y]) != tfg[A.mul(k, x, m, y)]) {
                                            rep.violations.push_back(
                                                "product naturality square fails at levels (" + std::to_string(k) + "," +
                                                std::to_string(m) + ")->(" + std::to_string(k2) + "," + std::to_string(m2) +
                                                ") on (" + A.name(k, x) + "," + A.name(m, y) + ")");
                                            bad = true;
                                            break;
                                        }
                                if (bad) break;
                            }
                            if (bad) break;
                        }
    }

    // commutativity through the smash transposition
    {
        bool bad = false;
        for (int k = 1; k <= N && !bad; ++k)
            for (int m = 1; k * m <= N && !bad; ++m) {
                std::vector<int> t(k * m + 1, 0);
                for (int i = 1; i <= k; ++i)
                    for (int j = 1; j <= m; ++j) t[smash_index(i, j, k, m)] = smash_index(j, i, m, k);
                PointedMap tau{k * m, m * k, std::move(t)};
                for (int x = 0; x < gs.size(k) && !bad; ++x)
                    for (int y = 0; y < gs.size(m); ++y)
                        if (gs.act(tau, A.mul(k, x, m, y)) != A.mul(m, y, k, x)) {
                            rep.violations.push_back("commutativity fails at levels (" + std::to_string(k) + "," +
                                                     std::to_string(m) + ")");
                            bad = true;
                            break;
                        }
            }
    }

    // associativity
    {
        bool bad = false;
        for (int k = 1; k <= N && !bad; ++k)
            for (int m = 1; k * m <= N && !bad; ++m)
                for (int l = 1; k * m * l <= N && !bad; ++l)
                    for (int x = 0; x < gs.size(k) && !bad; ++x)
                        for (int y = 0; y < gs.size(m) && !bad; ++y)
                            for (int z = 0; z < gs.size(l); ++z)
                                if (A.mul(k * m, A.mul(k, x, m, y), l, z) !=
                                    A.mul(k, x, m * l, A.mul(m, y, l, z))) {
                                    rep.violations.push_back("associativity fails at levels (" + std::to_string(k) + "," +
                                                             std::to_string(m) + "," + std::to_string(l) + ")");
                                    bad = true;
                                    break;
                                }
    }

    // unit law on both sides
    {
        bool bad = false;
        for (int k = 1; k <= N && !bad; ++k)
            for (int y = 0; y < gs.size(k); ++y)
                if (A.mul(1, A.unit(), k, y) != y || A.mul(k, y, 1, A.unit()) != y) {
                    rep.violations.push_back("unit law fails at level " + std::to_string(k) + " element " + A.name(k, y));
                    bad = true;
                    break;
                }
    }

    return rep;
}

}  // namespace segal
