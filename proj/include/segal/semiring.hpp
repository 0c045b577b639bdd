#pragma once

// Commutative semirings with explicit operation tables, their prime ideals,
// and localization.  Element 0 is the additive neutral / multiplicative
// absorber by convention.

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "segal/monoid.hpp"

namespace segal {

struct FiniteSemiring {
    std::vector<std::string> names;     // names[0] is 0
    int one = 1;
    std::vector<std::vector<int>> add;  // add[a][b]
    std::vector<std::vector<int>> mul;  // mul[a][b]

    int size() const { return (int)names.size(); }
    int plus(int a, int b) const { return add[a][b]; }
    int times(int a, int b) const { return mul[a][b]; }

    int index_of(const std::string& n) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == n) return i;
        throw std::out_of_range("semiring element not declared: " + n);
    }

    // First axiom violation, or empty string.  Violations name the table and
    // the offending cell triple.
    std::string check() const {
        int n = size();
        if (n == 0) return "semiring needs at least 0";
        if (n == 1)
            return (one == 0 && add == std::vector<std::vector<int>>{{0}} && add == mul)
                       ? ""
                       : "trivial semiring must have 0 = 1";
        if (one <= 0 || one >= n) return "unit id out of range";
        for (auto* t : {&add, &mul}) {
            if ((int)t->size() != n) return "table has wrong row count";
            for (auto& row : *t)
                if ((int)row.size() != n) return "table row has wrong width";
        }
        for (int a = 0; a < n; ++a) {
            if (add[0][a] != a) return "additive neutral fails at " + names[a];
            if (mul[0][a] != 0) return "zero not absorbing at " + names[a];
            if (mul[one][a] != a) return "unit law fails at " + names[a];
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (add[a][b] != add[b][a]) return "add commutativity fails at (" + names[a] + "," + names[b] + ")";
                if (mul[a][b] != mul[b][a]) return "mul commutativity fails at (" + names[a] + "," + names[b] + ")";
                for (int c = 0; c < n; ++c) {
                    if (add[add[a][b]][c] != add[a][add[b][c]])
                        return "add associativity fails at (" + names[a] + "," + names[b] + "," + names[c] + ")";
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        return "mul associativity fails at (" + names[a] + "," + names[b] + "," + names[c] + ")";
                    if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
                        return "distributivity fails at (" + names[a] + "," + names[b] + "," + names[c] + ")";
                }
            }
        return {};
    }

    FiniteMonoid multiplicative_monoid() const { return FiniteMonoid{names, one, mul}; }

    std::vector<int> units() const { return multiplicative_monoid().units(); }

    bool is_field() const {
        if (size() < 2) return false;
        // additive inverses and multiplicative inverses off zero
        for (int a = 0; a < size(); ++a) {
            bool neg = false;
            for (int b = 0; b < size(); ++b) neg |= add[a][b] == 0;
            if (!neg) return false;
        }
        return (int)units().size() == size() - 1;
    }

    bool has_zero_divisors() const {
        for (int a = 1; a < size(); ++a)
            for (int b = 1; b < size(); ++b)
                if (mul[a][b] == 0) return true;
        return false;
    }
};

inline FiniteSemiring semiring_from_tables(std::vector<std::string> names, int one,
                                           std::vector<std::vector<int>> add,
                                           std::vector<std::vector<int>> mul) {
    FiniteSemiring r{std::move(names), one, std::move(add), std::move(mul)};
    auto bad = r.check();
    if (!bad.empty()) throw std::invalid_argument("semiring: " + bad);
    return r;
}

inline FiniteSemiring zmod(int n) {
    if (n < 2) throw std::invalid_argument("zmod needs n >= 2");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    return semiring_from_tables(std::move(names), 1, std::move(add), std::move(mul));
}

// Boolean semiring {0,1} with 1+1 = 1.
inline FiniteSemiring boolean_semiring() {
    return semiring_from_tables({"0", "1"}, 1, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
}

// Field with four elements {0,1,a,b}, b = a+1.
inline FiniteSemiring gf4() {
    return semiring_from_tables({"0", "1", "a", "b"}, 1,
                                {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                                {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
}

// Three element chain 0 < m < 1 with max as addition and min as product.
inline FiniteSemiring chain3() {
    return semiring_from_tables({"0", "m", "1"}, 2,
                                {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
                                {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
}

inline FiniteSemiring product_semiring(const FiniteSemiring& r1, const FiniteSemiring& r2) {
    int n1 = r1.size(), n2 = r2.size(), n = n1 * n2;
    auto id = [&](int a, int b) { return a * n2 + b; };
    std::vector<std::string> names(n);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) names[id(a, b)] = "(" + r1.names[a] + "," + r2.names[b] + ")";
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d) {
                    add[id(a, b)][id(c, d)] = id(r1.add[a][c], r2.add[b][d]);
                    mul[id(a, b)][id(c, d)] = id(r1.mul[a][c], r2.mul[b][d]);
                }
    return semiring_from_tables(std::move(names), id(r1.one, r2.one), std::move(add), std::move(mul));
}

// All prime ideals: proper subsets containing 0, closed under addition,
// absorbing under multiplication, with multiplicatively closed complement.
// Exhaustive over subsets, capped to keep the scan in seconds.
inline std::vector<std::set<int>> prime_ideals_semiring(const FiniteSemiring& r) {
    int n = r.size();
    if (n > 16) throw std::invalid_argument("prime ideal enumeration capped at 16 elements");
    std::vector<std::set<int>> out;
    for (uint32_t mask = 1; mask < (1u << n); mask += 2) {  // bit 0 (element 0) always set
        auto in = [&](int x) { return (mask >> x) & 1u; };
        if (mask == (1u << n) - 1) continue;  // proper
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (in(a) && in(b) && !in(r.add[a][b])) ok = false;
                if (in(b) && !in(r.mul[a][b])) ok = false;
                if (!in(a) && !in(b) && in(r.mul[a][b])) ok = false;
            }
        if (!ok) continue;
        std::set<int> J;
        for (int x = 0; x < n; ++x)
            if (in(x)) J.insert(x);
        out.push_back(std::move(J));
    }
    return out;
}

// Multiplicative closure of {1} and the given generators.
inline std::set<int> multiplicative_closure(const FiniteSemiring& r, const std::set<int>& gens) {
    std::set<int> S = gens;
    S.insert(r.one);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(S.begin(), S.end());
        for (int a : cur)
            for (int b : cur)
                if (S.insert(r.times(a, b)).second) grew = true;
    }
    return S;
}

struct LocalizedSemiring {
    FiniteSemiring result;
    std::vector<int> class_of_pair;  // s*|R|+x -> class id
    std::vector<int> class_of;       // canonical map R -> S^{-1}R
};

// Pairs (s,x) modulo (s,x)~(t,y) iff utx = usy for some u in S: the orbit
// equivalence of (s,x) -> (us,ux).
inline LocalizedSemiring localize_semiring(const FiniteSemiring& r, const std::set<int>& S) {
    if (!S.count(r.one)) throw std::invalid_argument("localization set must contain 1");
    for (int a : S)
        for (int b : S)
            if (!S.count(r.times(a, b))) throw std::invalid_argument("localization set not multiplicative");
    int n = r.size();
    std::vector<int> svec(S.begin(), S.end());
    auto pid = [&](int s, int x) { return s * n + x; };
    detail::UnionFind uf(n * n);
    for (int s : svec)
        for (int x = 0; x < n; ++x)
            for (int u : svec) uf.unite(pid(s, x), pid(r.times(u, s), r.times(u, x)));

    std::vector<int> roots;
    std::vector<std::pair<int, int>> rep;
    auto class_id = [&](int s, int x) {
        int root = uf.find(pid(s, x));
        for (size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == root) return (int)i;
        roots.push_back(root);
        rep.push_back({s, x});
        return (int)roots.size() - 1;
    };
    (void)class_id(r.one, 0);
    int unit_class = class_id(r.one, r.one);
    for (int s : svec)
        for (int x = 0; x < n; ++x) (void)class_id(s, x);
    int k = (int)roots.size();

    LocalizedSemiring out;
    out.result.names.resize(k);
    out.result.names[0] = r.names[0];
    for (int c = 1; c < k; ++c)
        out.result.names[c] = "(" + r.names[rep[c].first] + "|" + r.names[rep[c].second] + ")";
    out.result.one = unit_class;
    out.result.add.assign(k, std::vector<int>(k, 0));
    out.result.mul.assign(k, std::vector<int>(k, 0));
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
            int s = rep[c].first, x = rep[c].second, t = rep[d].first, y = rep[d].second;
            // x/s + y/t = (tx + sy)/(st), x/s * y/t = xy/(st)
            out.result.add[c][d] = class_id(r.times(s, t), r.plus(r.times(t, x), r.times(s, y)));
            out.result.mul[c][d] = class_id(r.times(s, t), r.times(x, y));
        }
    if ((int)roots.size() != k) throw std::logic_error("localized semiring not closed");
    auto bad = out.result.check();
    if (!bad.empty()) throw std::logic_error("localized semiring invalid: " + bad);
    out.class_of_pair.assign(n * n, -1);
    for (int s : svec)
        for (int x = 0; x < n; ++x) out.class_of_pair[pid(s, x)] = class_id(s, x);
    out.class_of.resize(n);
    for (int x = 0; x < n; ++x) out.class_of[x] = class_id(r.one, x);
    return out;
}

}  // namespace segal
