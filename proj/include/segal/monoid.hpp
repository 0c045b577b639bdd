#pragma once

// Commutative pointed monoids given by explicit multiplication tables.
// Convention throughout: element 0 is the absorbing zero, and every table is
// indexed by dense element ids into `names`.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace segal {

struct FiniteMonoid {
    std::vector<std::string> names;       // names[0] is the zero element
    int one = 1;                          // id of the unit
    std::vector<std::vector<int>> mul;    // mul[a][b]

    int size() const { return (int)names.size(); }
    int times(int a, int b) const { return mul[a][b]; }

    int index_of(const std::string& n) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == n) return i;
        throw std::out_of_range("monoid element not declared: " + n);
    }

    // Returns an empty string when all axioms hold, otherwise a description
    // of the first failure found.
    std::string check() const {
        int n = size();
        if (n == 0) return "monoid needs at least the zero element";
        if (n == 1) return one == 0 && mul == std::vector<std::vector<int>>{{0}} ? "" : "trivial monoid must have 0 = 1";
        if (one < 0 || one >= n) return "unit id out of range";
        if ((int)mul.size() != n) return "mul table has wrong row count";
        for (int a = 0; a < n; ++a)
            if ((int)mul[a].size() != n) return "mul table row " + std::to_string(a) + " has wrong width";
        for (int a = 0; a < n; ++a) {
            if (mul[0][a] != 0) return "zero not absorbing at " + names[a];
            if (mul[one][a] != a) return "unit law fails at " + names[a];
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (mul[a][b] != mul[b][a])
                    return "commutativity fails at (" + names[a] + "," + names[b] + ")";
                for (int c = 0; c < n; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        return "associativity fails at (" + names[a] + "," + names[b] + "," + names[c] + ")";
            }
        return {};
    }

    std::vector<int> units() const {
        std::vector<int> out;
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (mul[a][b] == one) { out.push_back(a); break; }
        return out;
    }
};

// Decides whether some positive power of b lies in a*M.  The power sequence
// b, b^2, ... is eventually periodic; Floyd cycle detection bounds the scan
// without knowing the monoid exponent.
inline bool divides_power_table(const std::vector<std::vector<int>>& mul, int b, int a) {
    auto in_principal = [&](int x) {
        for (size_t u = 0; u < mul.size(); ++u)
            if (mul[a][u] == x) return true;
        return false;
    };
    auto step = [&](int x) { return mul[x][b]; };
    // Find cycle parameters of n -> b^n starting at b^1.
    int tort = b, hare = b;
    do {
        tort = step(tort);
        hare = step(step(hare));
    } while (tort != hare);
    int mu = 0, x = b;
    while (x != hare) { x = step(x); hare = step(hare); ++mu; }
    int lambda = 1;
    hare = step(tort);
    while (hare != tort) { hare = step(hare); ++lambda; }
    int limit = mu + lambda + 1;
    x = b;
    for (int n = 1; n <= limit; ++n) {
        if (in_principal(x)) return true;
        x = step(x);
    }
    return false;
}

inline bool divides_power(const FiniteMonoid& m, int b, int a) {
    return divides_power_table(m.mul, b, a);
}

// Power-divisibility in both directions: b and a generate the same object of
// the localized divisibility category.
inline bool same_power_class(const FiniteMonoid& m, int a, int b) {
    return divides_power(m, a, b) && divides_power(m, b, a);
}

inline bool is_ideal(const FiniteMonoid& m, const std::set<int>& I) {
    for (int i : I)
        for (int a = 0; a < m.size(); ++a)
            if (!I.count(m.times(a, i))) return false;
    return true;
}

// Every ideal of m (subsets with M*I inside I), including the empty one.
inline std::vector<std::set<int>> all_ideals(const FiniteMonoid& m) {
    int n = m.size();
    if (n > 16) throw std::invalid_argument("ideal enumeration capped at 16 elements");
    std::vector<std::set<int>> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<int> I;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) I.insert(i);
        if (is_ideal(m, I)) out.push_back(std::move(I));
    }
    return out;
}

// Prime ideals: proper ideals containing 0 whose complement is closed under
// multiplication.
inline std::vector<std::set<int>> prime_ideals_monoid(const FiniteMonoid& m) {
    std::vector<std::set<int>> out;
    for (auto& I : all_ideals(m)) {
        if (!I.count(0) || (int)I.size() == m.size()) continue;
        bool comp_closed = true;
        for (int a = 0; a < m.size() && comp_closed; ++a)
            for (int b = 0; b < m.size() && comp_closed; ++b)
                if (!I.count(a) && !I.count(b) && I.count(m.times(a, b))) comp_closed = false;
        if (comp_closed) out.push_back(I);
    }
    return out;
}

// Localization S^{-1}M at a multiplicatively closed subset S containing 1.
// Pairs (s,x) modulo (s,x)~(t,y) iff u t x = u s y for some u in S; the
// relation is the orbit equivalence of (s,x) -> (us,ux), so a union-find over
// those moves computes the classes.
struct LocalizedMonoid {
    FiniteMonoid result;
    std::vector<int> class_of_pair;  // index s*|M|+x -> class id
    std::vector<int> class_of;       // image of x under M -> S^{-1}M
};

namespace detail {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace detail

inline LocalizedMonoid localize_monoid(const FiniteMonoid& m, const std::set<int>& S) {
    if (!S.count(m.one)) throw std::invalid_argument("localization set must contain 1");
    for (int a : S)
        for (int b : S)
            if (!S.count(m.times(a, b))) throw std::invalid_argument("localization set not multiplicative");
    int n = m.size();
    std::vector<int> svec(S.begin(), S.end());
    auto pid = [&](int s, int x) { return s * n + x; };
    detail::UnionFind uf(n * n);
    for (int s : svec)
        for (int x = 0; x < n; ++x)
            for (int u : svec) uf.unite(pid(s, x), pid(m.times(u, s), m.times(u, x)));

    LocalizedMonoid out;
    // Canonical class order: the zero pair (1,0) first, the unit pair (1,1)
    // next, then first appearance scanning s in S order, x ascending.
    std::vector<int> roots;
    std::vector<std::pair<int, int>> rep;
    auto class_id = [&](int s, int x) {
        int r = uf.find(pid(s, x));
        for (size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == r) return (int)i;
        roots.push_back(r);
        rep.push_back({s, x});
        return (int)roots.size() - 1;
    };
    (void)class_id(m.one, 0);
    int unit_class = class_id(m.one, m.one);
    for (int s : svec)
        for (int x = 0; x < n; ++x) (void)class_id(s, x);
    int k = (int)roots.size();
    out.result.names.resize(k);
    out.result.names[0] = m.names[0];
    for (int c = 1; c < k; ++c)
        out.result.names[c] = "(" + m.names[rep[c].first] + "|" + m.names[rep[c].second] + ")";
    out.result.one = unit_class;
    out.result.mul.assign(k, std::vector<int>(k, 0));
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
            int s = m.times(rep[c].first, rep[d].first);
            int x = m.times(rep[c].second, rep[d].second);
            out.result.mul[c][d] = class_id(s, x);
        }
    if ((int)roots.size() != k) throw std::logic_error("localized monoid not closed");
    out.class_of_pair.assign(n * n, -1);
    for (int s : svec)
        for (int x = 0; x < n; ++x) out.class_of_pair[pid(s, x)] = class_id(s, x);
    out.class_of.resize(n);
    for (int x = 0; x < n; ++x) out.class_of[x] = class_id(m.one, x);
    auto bad = out.result.check();
    if (!bad.empty()) throw std::logic_error("localized monoid invalid: " + bad);
    return out;
}

// ---- named examples and the small-monoid corpus ----

inline FiniteMonoid pointed_monoid(std::vector<std::string> names, int one,
                                   std::vector<std::vector<int>> mul) {
    FiniteMonoid m{std::move(names), one, std::move(mul)};
    auto bad = m.check();
    if (!bad.empty()) throw std::invalid_argument("monoid: " + bad);
    return m;
}

// {0,1}: the sphere's coefficient monoid.
inline FiniteMonoid monoid_01() {
    return pointed_monoid({"0", "1"}, 1, {{0, 0}, {0, 1}});
}

// {0,1,x} with x^2 = 0.
inline FiniteMonoid monoid_m3() {
    return pointed_monoid({"0", "1", "x"}, 1, {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}});
}

// {0,1,e} with e^2 = e.
inline FiniteMonoid monoid_idempotent3() {
    return pointed_monoid({"0", "1", "e"}, 1, {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
}

// Cyclic group of order n with a zero adjoined.
inline FiniteMonoid group_with_zero(int n) {
    int sz = n + 1;
    std::vector<std::string> names(sz);
    names[0] = "0";
    for (int i = 0; i < n; ++i) names[i + 1] = i == 0 ? "1" : "g" + std::to_string(i);
    std::vector<std::vector<int>> mul(sz, std::vector<int>(sz, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i + 1][j + 1] = ((i + j) % n) + 1;
    return pointed_monoid(std::move(names), 1, std::move(mul));
}

// All commutative pointed monoids with `size` elements (0 and 1 fixed),
// deduplicated up to renaming of the free elements.  Deterministic order.
inline std::vector<FiniteMonoid> all_pointed_monoids(int size) {
    if (size < 2 || size > 5) throw std::invalid_argument("monoid corpus covers sizes 2..5");
    int f = size - 2;  // free elements 2..size-1
    std::vector<std::pair<int, int>> slots;
    for (int a = 2; a < size; ++a)
        for (int b = a; b < size; ++b) slots.push_back({a, b});
    std::vector<FiniteMonoid> out;
    std::set<std::vector<int>> seen;  // canonical flattened tables
    std::vector<int> choice(slots.size(), 0);
    auto build = [&](const std::vector<int>& ch) -> std::optional<FiniteMonoid> {
        FiniteMonoid m;
        m.names.resize(size);
        m.names[0] = "0";
        m.names[1] = "1";
        for (int i = 0; i < f; ++i) m.names[2 + i] = std::string(1, char('a' + i));
        m.one = 1;
        m.mul.assign(size, std::vector<int>(size, 0));
        for (int a = 0; a < size; ++a) {
            m.mul[1][a] = a;
            m.mul[a][1] = a;
        }
        for (size_t i = 0; i < slots.size(); ++i) {
            m.mul[slots[i].first][slots[i].second] = ch[i];
            m.mul[slots[i].second][slots[i].first] = ch[i];
        }
        if (!m.check().empty()) return std::nullopt;
        return m;
    };
    auto canonical = [&](const FiniteMonoid& m) {
        std::vector<int> perm(f);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> best;
        do {
            std::vector<int> full(size);
            full[0] = 0;
            full[1] = 1;
            for (int i = 0; i < f; ++i) full[2 + i] = 2 + perm[i];
            std::vector<int> flat;
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b) flat.push_back(full[m.mul[a][b]]);
            // flat is indexed by renamed (a,b); rebuild in renamed order
            std::vector<int> flat2(size * size);
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b) flat2[full[a] * size + full[b]] = full[m.mul[a][b]];
            if (best.empty() || flat2 < best) best = flat2;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };
    while (true) {
        if (auto m = build(choice)) {
            auto key = canonical(*m);
            if (seen.insert(key).second) out.push_back(std::move(*m));
        }
        int i = (int)slots.size() - 1;
        while (i >= 0 && choice[i] == size - 1) choice[i--] = 0;
        if (i < 0) break;
        ++choice[i];
    }
    return out;
}

inline std::vector<FiniteMonoid> monoid_corpus(int max_size = 5) {
    std::vector<FiniteMonoid> out;
    for (int s = 2; s <= max_size; ++s)
        for (auto& m : all_pointed_monoids(s)) out.push_back(m);
    return out;
}

}  // namespace segal
