#pragma once

// The rational norm-ball algebra: level n consists of rational tuples with
// total absolute value at most 1.  Levels are not enumerable, so this carrier
// exposes membership, the operations, a divisibility oracle on declared
// representatives, and a registered partition witness; anything that needs
// enumeration must reject it.

#include <vector>

#include "segal/cinf.hpp"
#include "segal/rational.hpp"

namespace segal {
namespace norm_ball {

using Tuple = std::vector<Rat>;

inline bool member(const Tuple& q) {
    Rat s(0);
    for (const auto& x : q) s += rat_abs(x);
    return s <= Rat(1);
}

inline Tuple act(const PointedMap& f, const Tuple& x) {
    Tuple out(f.dst, Rat(0));
    for (int i = 1; i <= f.src; ++i)
        if (f.tab[i] > 0) out[f.tab[i] - 1] += x[i - 1];
    return out;
}

inline Tuple mul(const Tuple& x, const Tuple& y) {
    int k = (int)x.size(), m = (int)y.size();
    Tuple out(k * m, Rat(0));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= m; ++j) out[smash_index(i, j, k, m) - 1] = x[i - 1] * y[j - 1];
    return out;
}

inline Rat unit() { return Rat(1); }

// r lies in s * (level 1) iff |r| <= |s|, so powers of b eventually divide a
// exactly when |b| < 1 (or |b| <= |a| outright).
inline bool divides_power(const Rat& b, const Rat& a) {
    if (a == Rat(0)) return b == Rat(0);
    return rat_abs(b) < Rat(1) || rat_abs(b) <= rat_abs(a);
}

// Membership r in s*A(1+).
inline bool divides(const Rat& s, const Rat& r) { return rat_abs(r) <= rat_abs(s); }

// The declared object list: 0, the class u of interior elements, and 1.
inline std::vector<Rat> declared_objects() { return {Rat(0), Rat(1, 2), Rat(1)}; }

struct Site {
    std::vector<Rat> rep;                 // representatives per object
    std::vector<std::string> obj_name;
    std::vector<std::vector<char>> homm;  // homm[a][b]: a^inf -> b^inf
    int zero = 0, interior = 1, terminal = 2;
    bool hom(int a, int b) const { return homm[a][b] != 0; }
};

// The three object chain 0 -> u -> 1 computed from the divisibility oracle on
// the declared representatives.
inline Site build_site() {
    Site s;
    s.rep = declared_objects();
    s.obj_name = {"0", "u", "1"};
    int n = (int)s.rep.size();
    s.homm.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.homm[a][b] = divides_power(s.rep[a], s.rep[b]) ? 1 : 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && s.homm[a][b] && s.homm[b][a])
                throw std::logic_error("norm ball: declared objects collapse");
    return s;
}

// The registered partition witness (1/2, 1/2): both parts are the interior
// object and the total recovers the unit, making {u -> 1} a cover of 1.
struct RegisteredWitness {
    Tuple xi;
    int part_object;
    int target_object;
};

inline RegisteredWitness registered_witness() {
    return {{Rat(1, 2), Rat(1, 2)}, 1, 2};
}

inline bool witness_checks(const Site& s, const RegisteredWitness& w) {
    if (!member(w.xi)) return false;
    // parts via the delta maps, target via sigma
    int n = (int)w.xi.size();
    for (int j = 1; j <= n; ++j) {
        Tuple part = act(PointedMap::delta(n, j), w.xi);
        bool matches = divides_power(part[0], s.rep[w.part_object]) && divides_power(s.rep[w.part_object], part[0]);
        if (!matches) return false;
    }
    Tuple total = act(PointedMap::sigma(n), w.xi);
    return divides_power(total[0], s.rep[w.target_object]) && divides_power(s.rep[w.target_object], total[0]);
}

// Sections of the structure presheaf at the interior object: localizing at
// the nonzero elements clears every denominator, so membership at level n is
// unconstrained rational tuples.
inline bool localized_membership_at_interior(const Tuple&) { return true; }

// At the terminal object only the signs are inverted, so membership stays the
// norm ball condition.
inline bool localized_membership_at_terminal(const Tuple& q) { return member(q); }

}  // namespace norm_ball
}  // namespace segal
