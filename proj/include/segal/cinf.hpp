#pragma once

// The localized divisibility category of an S-algebra: objects are the mutual
// power-divisibility classes of level-1 elements, with at most one morphism
// between any two objects.  Partitions of objects through higher levels,
// multi-partitions on rooted trees, and the covering machinery they generate.

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "segal/salgebra.hpp"
#include "segal/site.hpp"

namespace segal {

struct CInfCategory {
    std::vector<std::string> obj_name;          // canonical representative names
    std::vector<int> rep;                       // object -> least level-1 element
    std::vector<std::vector<int>> members;      // object -> its class
    std::vector<int> obj_of;                    // level-1 element -> object
    std::vector<std::vector<char>> homm;        // homm[a][b]: morphism a -> b exists
    std::vector<std::vector<int>> prod;         // object product (the pullback over 1^inf)
    int terminal = -1;                          // class of the unit
    int zero = -1;                              // class of the base point

    int size() const { return (int)rep.size(); }
    bool hom(int a, int b) const { return homm[a][b] != 0; }
};

// Morphism b^inf -> c^inf exists iff some power of b lies in c*A(1+).
inline CInfCategory build_cinf(const SAlgebra& A) {
    const auto& t = A.monoid_table();
    int n = A.size(1);
    std::vector<std::vector<char>> dp(n, std::vector<char>(n));
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) dp[b][c] = divides_power_table(t, b, c) ? 1 : 0;

    CInfCategory C;
    C.obj_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (C.obj_of[x] >= 0) continue;
        int id = C.size();
        C.rep.push_back(x);
        C.members.push_back({});
        for (int y = x; y < n; ++y)
            if (C.obj_of[y] < 0 && dp[x][y] && dp[y][x]) {
                C.obj_of[y] = id;
                C.members[id].push_back(y);
            }
    }
    int k = C.size();
    C.obj_name.resize(k);
    for (int o = 0; o < k; ++o) C.obj_name[o] = A.name(1, C.rep[o]);
    C.homm.assign(k, std::vector<char>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) C.homm[a][b] = dp[C.rep[a]][C.rep[b]];
    C.prod.assign(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) C.prod[a][b] = C.obj_of[t[C.rep[a]][C.rep[b]]];
    C.zero = C.obj_of[0];
    C.terminal = C.obj_of[A.unit()];
    return C;
}

// Pullback of a^inf -> c^inf and b^inf -> c^inf; both morphisms must exist.
inline int pullback(const CInfCategory& C, int a, int b, int c) {
    if (!C.hom(a, c) || !C.hom(b, c)) throw std::invalid_argument("pullback: morphisms do not exist");
    return C.prod[a][b];
}

// ---- partitions ----

struct PartitionWitness {
    int arity = 0;
    int xi = 0;                // element of A(arity+)
    int target = -1;           // object
    std::vector<int> parts;    // objects, one per slot
};

inline PartitionWitness make_partition(const SAlgebra& A, const CInfCategory& C, int n, int xi) {
    PartitionWitness w;
    w.arity = n;
    w.xi = xi;
    w.target = C.obj_of[A.act(PointedMap::sigma(n), xi)];
    w.parts.resize(n);
    for (int j = 1; j <= n; ++j) w.parts[j - 1] = C.obj_of[A.act(PointedMap::delta(n, j), xi)];
    return w;
}

inline std::string check_partition(const SAlgebra& A, const CInfCategory& C, const PartitionWitness& w) {
    if (w.arity < 1 || w.arity > A.trunc()) return "arity outside truncation";
    if (w.xi < 0 || w.xi >= A.size(w.arity)) return "witness element out of range";
    auto fresh = make_partition(A, C, w.arity, w.xi);
    if (fresh.target != w.target) return "target class mismatch";
    if (fresh.parts != w.parts) return "part classes mismatch";
    for (int p : w.parts)
        if (!C.hom(p, w.target)) return "part without morphism to target";
    return {};
}

inline PartitionWitness trivial_partition(const SAlgebra& A, const CInfCategory& C, int obj) {
    return make_partition(A, C, 1, C.rep[obj]);
}

// All partitions of the given object with the given number of parts.
// Witnesses are deduplicated by their part multiset unless raw is set.
inline std::vector<PartitionWitness> enumerate_partitions(const SAlgebra& A, const CInfCategory& C,
                                                          int target, int n, bool raw = false) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions: arity must be positive");
    if (n > A.trunc()) throw std::invalid_argument("enumerate_partitions: arity beyond truncation");
    std::vector<PartitionWitness> out;
    std::set<std::vector<int>> seen;
    PointedMap sig = PointedMap::sigma(n);
    for (int xi = 0; xi < A.size(n); ++xi) {
        if (C.obj_of[A.act(sig, xi)] != target) continue;
        auto w = make_partition(A, C, n, xi);
        if (!raw) {
            auto key = w.parts;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
        }
        out.push_back(std::move(w));
    }
    return out;
}

// Product of two partitions: the witness is the image of xi smash eta under
// the algebra product, living at arity |F|*|G|.
inline PartitionWitness partition_product(const SAlgebra& A, const CInfCategory& C,
                                          const PartitionWitness& p, const PartitionWitness& q) {
    if (p.arity * q.arity > A.trunc())
        throw std::out_of_range("partition_product: arity beyond truncation");
    int zeta = A.mul(p.arity, p.xi, q.arity, q.xi);
    auto w = make_partition(A, C, p.arity * q.arity, zeta);
    // parts must be the pairwise object products
    for (int i = 1; i <= p.arity; ++i)
        for (int j = 1; j <= q.arity; ++j) {
            int slot = smash_index(i, j, p.arity, q.arity);
            if (w.parts[slot - 1] != C.prod[p.parts[i - 1]][q.parts[j - 1]])
                throw std::logic_error("partition_product: parts are not componentwise products");
        }
    if (w.target != C.prod[p.target][q.target])
        throw std::logic_error("partition_product: target is not the product");
    return w;
}

// ---- rooted trees and multi-partitions ----

struct RootedTree {
    std::vector<int> parent;  // parent[0] == -1, vertex 0 is the root

    int size() const { return (int)parent.size(); }
    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> ch(size());
        for (int v = 1; v < size(); ++v) ch[parent[v]].push_back(v);
        return ch;
    }
    std::vector<int> external() const {
        auto ch = children();
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (ch[v].empty()) out.push_back(v);
        return out;
    }
    int height() const {
        int h = 0;
        for (int v = 0; v < size(); ++v) {
            int d = 0, u = v;
            while (parent[u] >= 0) { u = parent[u]; ++d; }
            h = std::max(h, d);
        }
        return h;
    }
};

struct MultiPartition {
    RootedTree tree;
    std::vector<int> value;                    // object per vertex
    std::map<int, PartitionWitness> witness;   // per internal vertex
};

inline std::string check_multipartition(const SAlgebra& A, const CInfCategory& C, const MultiPartition& mp) {
    if (mp.tree.size() == 0 || mp.tree.parent[0] != -1) return "tree must be rooted at vertex 0";
    auto ch = mp.tree.children();
    for (int v = 0; v < mp.tree.size(); ++v) {
        if (ch[v].empty()) continue;
        auto it = mp.witness.find(v);
        if (it == mp.witness.end()) return "internal vertex without witness";
        const auto& w = it->second;
        auto bad = check_partition(A, C, w);
        if (!bad.empty()) return bad;
        if (w.target != mp.value[v]) return "witness target differs from vertex value";
        if ((int)ch[v].size() != w.arity) return "vertex degree differs from witness arity";
        std::vector<int> got, want;
        for (int u : ch[v]) got.push_back(mp.value[u]);
        want = w.parts;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) return "children values differ from witness parts";
    }
    return {};
}

// Pointwise product of a multi-partition with a level-1 element: values are
// multiplied by its class, witnesses by the trivial partition it spans.
inline MultiPartition scale_multipartition(const SAlgebra& A, const CInfCategory& C,
                                           const MultiPartition& mp, int y) {
    MultiPartition out;
    out.tree = mp.tree;
    int yobj = C.obj_of[y];
    out.value.resize(mp.value.size());
    for (size_t v = 0; v < mp.value.size(); ++v) out.value[v] = C.prod[mp.value[v]][yobj];
    for (const auto& [v, w] : mp.witness) {
        PartitionWitness t = make_partition(A, C, 1, y);
        out.witness[v] = partition_product(A, C, w, t);
    }
    return out;
}

// ---- covers ----

enum class CoverStrategy { AUTO, SEMIRING, MONOID, TROPICAL, GENERIC };

struct CoverDecision {
    enum Verdict { COVER, NOT_COVER, UNKNOWN } verdict = UNKNOWN;
    std::optional<MultiPartition> witness;
    std::string detail;
    bool exact = false;  // NOT_COVER only ever comes from an exact strategy
};

inline std::vector<int> sieve_objects(const CInfCategory& C, const std::vector<int>& family) {
    std::vector<int> out;
    for (int e = 0; e < C.size(); ++e)
        for (int x : family)
            if (C.hom(e, x)) {
                out.push_back(e);
                break;
            }
    return out;
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Distinct partition-generated covering families of each object, with one
// witness per family, for arities 1..cap (bounded by the truncation).
struct GeneratedCovers {
    // per object: list of (family objects, witness)
    std::vector<std::vector<std::pair<std::vector<int>, PartitionWitness>>> at;
};

inline GeneratedCovers partition_covers(const SAlgebra& A, const CInfCategory& C, int arity_cap) {
    int cap = std::min(arity_cap, A.trunc());
    GeneratedCovers g;
    g.at.resize(C.size());
    std::vector<std::set<std::vector<int>>> seen(C.size());
    for (int n = 1; n <= cap; ++n) {
        PointedMap sig = PointedMap::sigma(n);
        for (int xi = 0; xi < A.size(n); ++xi) {
            int target = C.obj_of[A.act(sig, xi)];
            auto w = make_partition(A, C, n, xi);
            auto fam = sorted_unique(w.parts);
            if (seen[target].insert(fam).second) g.at[target].push_back({fam, w});
        }
    }
    return g;
}

namespace detail {

// Ideal of R generated by `gens`, with one linear representation per member.
struct IdealClosure {
    std::vector<char> in;                       // membership
    std::vector<std::vector<int>> coeff;        // per element: coefficient per generator
};

inline IdealClosure ideal_closure(const FiniteSemiring& R, const std::vector<int>& gens) {
    int n = R.size();
    IdealClosure ic;
    ic.in.assign(n, 0);
    ic.coeff.assign(n, {});
    auto add_elt = [&](int e, std::vector<int> co) {
        if (ic.in[e]) return false;
        ic.in[e] = 1;
        ic.coeff[e] = std::move(co);
        return true;
    };
    add_elt(0, std::vector<int>(gens.size(), 0));
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<int> co(gens.size(), 0);
        co[i] = R.one;
        add_elt(gens[i], std::move(co));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < n; ++e) {
            if (!ic.in[e]) continue;
            for (int r = 0; r < n; ++r) {
                int re = R.times(r, e);
                if (!ic.in[re]) {
                    std::vector<int> co(gens.size());
                    for (size_t i = 0; i < gens.size(); ++i) co[i] = R.times(r, ic.coeff[e][i]);
                    grew |= add_elt(re, std::move(co));
                }
            }
            for (int f = 0; f < n; ++f) {
                if (!ic.in[f]) continue;
                int ef = R.plus(e, f);
                if (!ic.in[ef]) {
                    std::vector<int> co(gens.size());
                    for (size_t i = 0; i < gens.size(); ++i) co[i] = R.plus(ic.coeff[e][i], ic.coeff[f][i]);
                    grew |= add_elt(ef, std::move(co));
                }
            }
        }
    }
    return ic;
}

// Powers c, c^2, ... up to the cycle bound, in order.
inline std::vector<int> power_list(const std::vector<std::vector<int>>& mul, int c) {
    std::vector<int> out;
    std::vector<char> seen(mul.size(), 0);
    int x = c;
    while (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
        x = mul[x][c];
    }
    return out;
}

}  // namespace detail

// Bounded multi-partition search: rounds of "an object is covered if some
// partition of it has all parts already covered".  Produces a tree witness on
// success and never answers NOT_COVER.
inline CoverDecision generic_cover_search(const SAlgebra& A, const CInfCategory& C,
                                          const std::vector<int>& family, int target,
                                          int arity_cap = 4, int height_cap = 3) {
    CoverDecision d;
    auto sieve = sieve_objects(C, family);
    std::vector<char> insieve(C.size(), 0);
    for (int e : sieve) insieve[e] = 1;
    std::vector<int> round(C.size(), -1);  // round at which the object became covered
    std::vector<std::optional<PartitionWitness>> via(C.size());
    for (int e : sieve) round[e] = 0;
    int cap = std::min(arity_cap, A.trunc());
    auto covers = partition_covers(A, C, cap);
    for (int h = 1; h <= height_cap; ++h) {
        bool grew = false;
        for (int o = 0; o < C.size(); ++o) {
            if (round[o] >= 0) continue;
            for (const auto& [fam, w] : covers.at[o]) {
                bool all = true;
                for (int p : fam)
                    if (round[p] < 0 || round[p] >= h) { all = false; break; }
                if (all) {
                    round[o] = h;
                    via[o] = w;
                    grew = true;
                    break;
                }
            }
        }
        if (!grew) break;
    }
    if (round[target] < 0) {
        d.verdict = CoverDecision::UNKNOWN;
        d.detail = "bounded multi-partition search exhausted (arity <= " + std::to_string(cap) +
                   ", height <= " + std::to_string(height_cap) + ")";
        return d;
    }
    // assemble the witness tree; parts recorded at round r only use rounds < r
    MultiPartition mp;
    mp.tree.parent = {-1};
    mp.value = {target};
    std::function<void(int)> expand = [&](int v) {
        int obj = mp.value[v];
        if (round[obj] == 0) return;  // external vertex, lands in the sieve
        const auto& w = via[obj];
        mp.witness[v] = *w;
        for (int p : w->parts) {
            mp.tree.parent.push_back(v);
            mp.value.push_back(p);
            expand((int)mp.value.size() - 1);
        }
    };
    expand(0);
    auto bad = check_multipartition(A, C, mp);
    if (!bad.empty()) throw std::logic_error("generic cover witness invalid: " + bad);
    d.verdict = CoverDecision::COVER;
    d.witness = std::move(mp);
    d.exact = false;
    d.detail = "multi-partition witness of height <= " + std::to_string(mp.tree.height());
    return d;
}

// Exact decision for H(R): the family covers c^inf iff the ideal generated by
// its representatives contains a power of c.  The witness partition scales
// each representative by its ideal coefficient.
inline CoverDecision semiring_cover_decision(const SAlgebra& A, const CInfCategory& C,
                                             const std::vector<int>& family, int target) {
    auto R = A.h_base();
    if (!R) throw std::invalid_argument("semiring strategy requires an H algebra");
    std::vector<int> gens;
    for (int x : family) gens.push_back(C.rep[x]);
    auto ic = detail::ideal_closure(*R, gens);
    CoverDecision d;
    d.exact = true;
    for (int p : detail::power_list(R->mul, C.rep[target])) {
        if (!ic.in[p]) continue;
        d.verdict = CoverDecision::COVER;
        const auto& co = ic.coeff[p];
        int n = (int)gens.size();
        if (n <= A.trunc()) {
            // xi = (a_1 x_1, ..., a_n x_n), encoded in the H levels
            int B = R->size(), enc = 0;
            for (int i = n; i-- > 0;) enc = enc * B + R->times(co[i], gens[i]);
            MultiPartition mp;
            mp.tree.parent.assign(n + 1, 0);
            mp.tree.parent[0] = -1;
            auto w = make_partition(A, C, n, enc);
            mp.value = {target};
            for (int i = 0; i < n; ++i) mp.value.push_back(w.parts[i]);
            mp.witness[0] = w;
            auto bad = check_multipartition(A, C, mp);
            if (!bad.empty()) throw std::logic_error("semiring cover witness invalid: " + bad);
            d.witness = std::move(mp);
        }
        d.detail = "ideal membership: a power of " + C.obj_name[target] + " is a combination of the family";
        return d;
    }
    d.verdict = CoverDecision::NOT_COVER;
    d.detail = "no power of " + C.obj_name[target] + " lies in the ideal generated by the family";
    return d;
}

// Exact decision for SM(M): only isomorphisms cover, so the family must
// contain the target object itself.
inline CoverDecision monoid_cover_decision(const SAlgebra& A, const CInfCategory& C,
                                           const std::vector<int>& family, int target) {
    if (!A.sm_base()) throw std::invalid_argument("monoid strategy requires an SM algebra");
    CoverDecision d;
    d.exact = true;
    for (int x : family)
        if (x == target) {
            d.verdict = CoverDecision::COVER;
            MultiPartition mp;
            mp.tree.parent = {-1, 0};
            auto w = trivial_partition(A, C, target);
            mp.value = {target, w.parts[0]};
            mp.witness[0] = w;
            d.witness = std::move(mp);
            d.detail = "family contains an isomorphism onto the target";
            return d;
        }
    d.verdict = CoverDecision::NOT_COVER;
    d.detail = "chaotic topology: no family member is isomorphic to the target";
    return d;
}

inline CoverDecision is_cover(const SAlgebra& A, const CInfCategory& C, const std::vector<int>& family,
                              int target, CoverStrategy strategy = CoverStrategy::AUTO,
                              int arity_cap = 4, int height_cap = 3) {
    for (int x : family) {
        if (x < 0 || x >= C.size()) throw std::invalid_argument("is_cover: unknown object in family");
        if (!C.hom(x, target)) throw std::invalid_argument("is_cover: family member has no morphism to target");
    }
    if (strategy == CoverStrategy::AUTO) {
        if (A.h_base())
            strategy = CoverStrategy::SEMIRING;
        else if (A.sm_base())
            strategy = CoverStrategy::MONOID;
        else
            strategy = CoverStrategy::GENERIC;
    }
    switch (strategy) {
        case CoverStrategy::SEMIRING: return semiring_cover_decision(A, C, family, target);
        case CoverStrategy::MONOID: return monoid_cover_decision(A, C, family, target);
        case CoverStrategy::TROPICAL:
            throw std::invalid_argument("tropical covers are decided on cofinite opens; use the tropical module");
        default: return generic_cover_search(A, C, family, target, arity_cap, height_cap);
    }
}

// ---- cover lattice: the data behind sheafification ----

// For each object: every covering family reachable from bounded-arity
// partitions by grafting refinements, and the intersection of their sieves.
struct CoverLattice {
    GeneratedCovers generated;                        // raw partition covers
    std::vector<std::vector<std::vector<int>>> families;  // closure, per object
    std::vector<std::vector<int>> min_sieve;          // objects of the smallest covering sieve
};

inline CoverLattice build_cover_lattice(const SAlgebra& A, const CInfCategory& C, int arity_cap = 3) {
    CoverLattice L;
    L.generated = partition_covers(A, C, arity_cap);
    int K = C.size();
    L.families.resize(K);
    for (int o = 0; o < K; ++o) {
        std::set<std::vector<int>> fams;
        for (const auto& [fam, w] : L.generated.at[o]) fams.insert(fam);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> cur(fams.begin(), fams.end());
            for (const auto& f : cur)
                for (int x : f)
                    for (const auto& [g, w] : L.generated.at[x]) {
                        std::vector<int> nf;
                        for (int y : f)
                            if (y != x) nf.push_back(y);
                        nf.insert(nf.end(), g.begin(), g.end());
                        nf = sorted_unique(nf);
                        if (fams.insert(nf).second) grew = true;
                    }
        }
        L.families[o].assign(fams.begin(), fams.end());
    }
    L.min_sieve.resize(K);
    for (int o = 0; o < K; ++o) {
        std::vector<char> in(K, 1);
        for (const auto& f : L.families[o]) {
            auto s = sieve_objects(C, f);
            std::vector<char> cur(K, 0);
            for (int e : s) cur[e] = 1;
            for (int e = 0; e < K; ++e) in[e] = in[e] && cur[e];
        }
        for (int e = 0; e < K; ++e)
            if (in[e]) L.min_sieve[o].push_back(e);
    }
    return L;
}

// Cover verdict relative to the bounded lattice: the family's sieve must
// contain the minimal covering sieve.
inline bool lattice_covers(const CInfCategory& C, const CoverLattice& L, const std::vector<int>& family,
                           int target) {
    auto s = sieve_objects(C, family);
    std::vector<char> in(C.size(), 0);
    for (int e : s) in[e] = 1;
    for (int e : L.min_sieve[target])
        if (!in[e]) return false;
    return true;
}

// ---- functoriality ----

struct SiteMorphism {
    std::vector<int> object_map;  // objects of the source category -> target
    bool consistent_on_members = true;
    bool preserves_terminal = false;
    bool preserves_products = false;
    bool preserves_covers = false;
    std::string detail;
};

// The site morphism induced by an algebra morphism: f^inf -> phi(f)^inf.
// Cover preservation is checked by pushing every generated partition through.
inline SiteMorphism site_morphism(const SAlgebraMorphism& phi, const CInfCategory& CA,
                                  const CInfCategory& CB, int arity_cap = 3) {
    const SAlgebra& A = phi.dom;
    const SAlgebra& B = phi.cod;
    SiteMorphism sm;
    sm.object_map.resize(CA.size());
    for (int o = 0; o < CA.size(); ++o) {
        sm.object_map[o] = CB.obj_of[phi.at[1][CA.rep[o]]];
        for (int x : CA.members[o])
            if (CB.obj_of[phi.at[1][x]] != sm.object_map[o]) {
                sm.consistent_on_members = false;
                sm.detail = "members of " + CA.obj_name[o] + " map to different classes";
            }
    }
    sm.preserves_terminal = sm.object_map[CA.terminal] == CB.terminal;
    sm.preserves_products = true;
    for (int a = 0; a < CA.size() && sm.preserves_products; ++a)
        for (int b = 0; b < CA.size(); ++b)
            if (sm.object_map[CA.prod[a][b]] != CB.prod[sm.object_map[a]][sm.object_map[b]]) {
                sm.preserves_products = false;
                sm.detail = "product of objects not preserved";
                break;
            }
    // hom preservation comes with products, but check directly as well
    for (int a = 0; a < CA.size(); ++a)
        for (int b = 0; b < CA.size(); ++b)
            if (CA.hom(a, b) && !CB.hom(sm.object_map[a], sm.object_map[b])) {
                sm.consistent_on_members = false;
                sm.detail = "a morphism is not preserved";
            }
    sm.preserves_covers = true;
    auto covers = partition_covers(A, CA, arity_cap);
    for (int o = 0; o < CA.size() && sm.preserves_covers; ++o)
        for (const auto& [fam, w] : covers.at[o]) {
            int xi2 = phi.at[w.arity][w.xi];
            auto w2 = make_partition(B, CB, w.arity, xi2);
            if (w2.target != sm.object_map[o]) {
                sm.preserves_covers = false;
                sm.detail = "image of a partition has the wrong target";
                break;
            }
            for (int i = 0; i < w.arity; ++i)
                if (w2.parts[i] != sm.object_map[w.parts[i]]) {
                    sm.preserves_covers = false;
                    sm.detail = "image of a partition has wrong parts";
                    break;
                }
        }
    return sm;
}

}  // namespace segal
