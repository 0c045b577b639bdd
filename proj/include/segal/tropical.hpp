#pragma once

// Convex piecewise affine functions with integer slopes on the open interval
// I = (0,1), over exact rationals.  Addition is pointwise sup, product is
// pointwise sum; the corner locus Z(f) with multiplicities drives the
// divisibility calculus, and cofinite open sets carry the covering
// combinatorics of the associated site.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "segal/rational.hpp"

namespace segal {

// f(x) = c0 + left_slope * x + sum m_p * max(0, x - p).
// `bottom` encodes the constant -infinity, the zero of the semiring.
struct ConvexPL {
    bool bottom = false;
    std::vector<std::pair<Rat, int>> bp;  // (position, multiplicity), increasing, inside (0,1)
    long long left_slope = 0;
    Rat c0 = Rat(0);

    static ConvexPL bot() {
        ConvexPL f;
        f.bottom = true;
        return f;
    }

    bool is_affine() const { return !bottom && bp.empty(); }

    Rat eval(const Rat& x) const {
        if (bottom) throw std::domain_error("eval on bottom");
        Rat v = c0 + Rat(left_slope) * x;
        for (const auto& [p, m] : bp)
            if (x > p) v += Rat(m) * (x - p);
        return v;
    }

    long long slope_right_of(const Rat& x) const {
        long long s = left_slope;
        for (const auto& [p, m] : bp)
            if (p <= x) s += m;
        return s;
    }
};

inline void check_positions(const ConvexPL& f) {
    Rat prev(-1);
    for (const auto& [p, m] : f.bp) {
        if (p <= Rat(0) || p >= Rat(1)) throw std::invalid_argument("breakpoint outside (0,1)");
        if (p <= prev) throw std::invalid_argument("breakpoints not strictly increasing");
        if (m < 1) throw std::invalid_argument("multiplicity must be positive");
        prev = p;
    }
}

// Builds the function with the given corners and left slope whose value at
// `point` is `value`.
inline ConvexPL make_pl(std::vector<std::pair<Rat, int>> bp, long long left_slope,
                        const Rat& point = Rat(1, 2), const Rat& value = Rat(0)) {
    ConvexPL f;
    f.bp = std::move(bp);
    std::sort(f.bp.begin(), f.bp.end());
    f.left_slope = left_slope;
    f.c0 = Rat(0);
    check_positions(f);
    f.c0 = value - f.eval(point);
    return f;
}

// f plus the affine function  a + s * (x - x0).
inline ConvexPL add_affine(const ConvexPL& f, const Rat& a, long long s, const Rat& x0) {
    if (f.bottom) return f;
    ConvexPL g = f;
    g.left_slope += s;
    g.c0 += a - Rat(s) * x0;
    return g;
}

inline std::vector<Rat> zero_set(const ConvexPL& f) {
    std::vector<Rat> z;
    for (const auto& [p, m] : f.bp) z.push_back(p);
    return z;
}

inline std::map<Rat, int> multiplicity_map(const ConvexPL& f) {
    std::map<Rat, int> n;
    for (const auto& [p, m] : f.bp) n[p] = m;
    return n;
}

// Product = pointwise sum: corner multiplicities add, affine parts add.
inline ConvexPL trop_mul(const ConvexPL& f, const ConvexPL& g) {
    if (f.bottom || g.bottom) return ConvexPL::bot();
    std::map<Rat, int> n = multiplicity_map(f);
    for (const auto& [p, m] : multiplicity_map(g)) n[p] += m;
    ConvexPL h;
    h.bp.assign(n.begin(), n.end());
    h.left_slope = f.left_slope + g.left_slope;
    h.c0 = f.c0 + g.c0;
    return h;
}

// The tent function: 0 on [a,b], slope -1 left of a, slope +1 right of b.
inline ConvexPL phi(const Rat& a, const Rat& b) {
    if (a > b) throw std::invalid_argument("phi: a must be <= b");
    std::vector<std::pair<Rat, int>> bp;
    if (a == b)
        bp = {{a, 2}};
    else
        bp = {{a, 1}, {b, 1}};
    return make_pl(std::move(bp), -1, a, Rat(0));
}

namespace detail_trop {

// Candidate kink locations of max(f,g) inside (0,1): breakpoints of both
// functions plus every crossing of their affine pieces.
inline std::vector<Rat> envelope_candidates(const ConvexPL& f, const ConvexPL& g) {
    std::set<Rat> xs;
    for (const auto& [p, m] : f.bp) xs.insert(p);
    for (const auto& [p, m] : g.bp) xs.insert(p);
    auto cuts = [](const ConvexPL& h) {
        std::vector<Rat> c{Rat(0)};
        for (const auto& [p, m] : h.bp) c.push_back(p);
        c.push_back(Rat(1));
        return c;
    };
    auto cf = cuts(f), cg = cuts(g);
    for (size_t i = 0; i + 1 < cf.size(); ++i)
        for (size_t j = 0; j + 1 < cg.size(); ++j) {
            Rat lo = std::max(cf[i], cg[j]), hi = std::min(cf[i + 1], cg[j + 1]);
            if (lo >= hi) continue;
            Rat mid = (lo + hi) / 2;
            long long sf = f.slope_right_of(mid), sg = g.slope_right_of(mid);
            if (sf == sg) continue;
            Rat x = mid + (g.eval(mid) - f.eval(mid)) / Rat(sf - sg);
            if (x > lo && x < hi) xs.insert(x);
        }
    return {xs.begin(), xs.end()};
}

}  // namespace detail_trop

// Addition = pointwise sup.  The upper envelope of two convex PL functions is
// convex PL; its kinks lie among breakpoints and crossings, so measuring
// slopes on the gaps of that grid reconstructs the result exactly.  A
// deterministic rational sample check guards the reconstruction.
inline ConvexPL trop_add(const ConvexPL& f, const ConvexPL& g) {
    if (f.bottom) return g;
    if (g.bottom) return f;
    auto xs = detail_trop::envelope_candidates(f, g);
    auto h_eval = [&](const Rat& x) { return std::max(f.eval(x), g.eval(x)); };
    std::vector<long long> slopes;  // per gap, gaps = |xs|+1
    for (size_t i = 0; i <= xs.size(); ++i) {
        Rat lo = i == 0 ? Rat(0) : xs[i - 1];
        Rat hi = i == xs.size() ? Rat(1) : xs[i];
        Rat a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
        Rat sl = (h_eval(b) - h_eval(a)) / (b - a);
        if (sl.denominator() != 1) throw std::logic_error("trop_add: envelope slope not integral");
        slopes.push_back(sl.numerator());
    }
    ConvexPL h;
    h.left_slope = slopes.front();
    for (size_t i = 0; i < xs.size(); ++i) {
        long long jump = slopes[i + 1] - slopes[i];
        if (jump < 0) throw std::logic_error("trop_add: envelope not convex");
        if (jump > 0) h.bp.push_back({xs[i], (int)jump});
    }
    h.c0 = Rat(0);
    h.c0 = h_eval(Rat(1, 2)) - h.eval(Rat(1, 2));
    for (int i = 1; i <= 100; ++i) {
        Rat x(i, 101);
        if (h.eval(x) != h_eval(x)) throw std::logic_error("trop_add: envelope self-check failed");
    }
    return h;
}

inline bool pl_equal(const ConvexPL& f, const ConvexPL& g) {
    if (f.bottom || g.bottom) return f.bottom == g.bottom;
    return f.bp == g.bp && f.left_slope == g.left_slope && f.c0 == g.c0;
}

// g divides f iff the corner multiplicities of g are dominated by those of f.
inline bool trop_divides(const ConvexPL& g, const ConvexPL& f) {
    if (g.bottom) {
        if (!f.bottom) throw std::invalid_argument("trop_divides: bottom divisor of a finite function");
        return true;
    }
    if (f.bottom) return true;  // g * bottom = bottom
    auto nf = multiplicity_map(f);
    for (const auto& [p, m] : multiplicity_map(g)) {
        auto it = nf.find(p);
        if (it == nf.end() || it->second < m) return false;
    }
    return true;
}

// Power divisibility (morphism existence between the localized objects):
// compares zero sets only.
inline bool trop_divides_power(const ConvexPL& g, const ConvexPL& f) {
    if (g.bottom) return f.bottom;
    if (f.bottom) return true;
    auto zf = zero_set(f);
    for (const auto& p : zero_set(g))
        if (std::find(zf.begin(), zf.end(), p) == zf.end()) return false;
    return true;
}

// ---- the cofinite-open site ----

struct CofiniteOpen {
    std::set<Rat> removed;  // the complement, a finite subset of (0,1)
};

inline CofiniteOpen open_of(const ConvexPL& f) {
    CofiniteOpen o;
    for (const auto& p : zero_set(f)) o.removed.insert(p);
    return o;
}

// Connected components as intervals (lo,hi) between removed points, with 0
// and 1 bounding the ambient interval.
inline std::vector<std::pair<Rat, Rat>> components(const CofiniteOpen& o) {
    std::vector<Rat> cuts{Rat(0)};
    for (const auto& p : o.removed) cuts.push_back(p);
    cuts.push_back(Rat(1));
    std::vector<std::pair<Rat, Rat>> out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back({cuts[i], cuts[i + 1]});
    return out;
}

// A family of subopens covers the target iff their union covers it and every
// connected component of the target avoids the removed set of some single
// member.
inline bool trop_cover_check(const std::vector<CofiniteOpen>& family, const CofiniteOpen& target) {
    for (const auto& m : family)
        for (const auto& p : target.removed)
            if (!m.removed.count(p))
                throw std::invalid_argument("trop_cover_check: family member is not a subobject of the target");
    for (const auto& m : family)
        for (const auto& p : m.removed) {
            if (target.removed.count(p)) continue;
            bool covered = false;
            for (const auto& other : family)
                if (!other.removed.count(p)) { covered = true; break; }
            if (!covered) return false;
        }
    for (const auto& [lo, hi] : components(target)) {
        bool found = false;
        for (const auto& m : family) {
            bool avoids = true;
            for (const auto& p : m.removed)
                if (p > lo && p < hi) { avoids = false; break; }
            if (avoids) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

// Constructive counterpart: exhibit PL functions, one per component of the
// target, whose pointwise sup equals n times a function cutting out the
// target.  Succeeding certifies the family as a partition-style cover.
struct TropCoverWitness {
    ConvexPL target_fn;           // n * h with Z(h) = removed set of the target
    std::vector<ConvexPL> parts;  // sup of parts equals target_fn; Z(part) = member's removed set
    std::vector<int> member_of;   // which family member each part came from
    int n = 0;
};

inline ConvexPL function_with_zeros(const std::set<Rat>& zs) {
    ConvexPL f = make_pl({}, 0);
    for (const auto& p : zs) f = trop_mul(f, phi(p, p));
    return f;
}

inline std::optional<TropCoverWitness> trop_cover_witness(const std::vector<CofiniteOpen>& family,
                                                          const CofiniteOpen& target, int n_max = 16) {
    auto comps = components(target);
    std::vector<int> pick(comps.size(), -1);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        for (size_t j = 0; j < family.size(); ++j) {
            bool avoids = true;
            for (const auto& p : family[j].removed)
                if (p > comps[ci].first && p < comps[ci].second) { avoids = false; break; }
            if (avoids) { pick[ci] = (int)j; break; }
        }
        if (pick[ci] < 0) return std::nullopt;
    }
    ConvexPL h = function_with_zeros(target.removed);
    ConvexPL nh = make_pl({}, 0);
    for (int n = 1; n <= n_max; ++n) {
        nh = trop_mul(nh, h);
        std::vector<ConvexPL> parts;
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            Rat mid = (comps[ci].first + comps[ci].second) / 2;
            ConvexPL hj = function_with_zeros(family[pick[ci]].removed);
            // replace hj's affine part on the component by that of n*h
            ConvexPL flat = add_affine(hj, -hj.eval(mid), -hj.slope_right_of(mid), mid);
            ConvexPL part = add_affine(flat, nh.eval(mid), nh.slope_right_of(mid), mid);
            parts.push_back(part);
        }
        ConvexPL sup = ConvexPL::bot();
        for (const auto& p : parts) sup = trop_add(sup, p);
        if (pl_equal(sup, nh)) {
            TropCoverWitness w;
            w.target_fn = nh;
            w.parts = parts;
            w.member_of.assign(pick.begin(), pick.end());
            w.n = n;
            return w;
        }
    }
    return std::nullopt;
}

// ---- the convexity obstruction for candidate points ----

struct PointCandidate {
    enum Kind { FINITE, INTERVAL, ALL } kind = ALL;
    std::set<Rat> finite;
    Rat lo, hi;

    static PointCandidate finite_set(std::set<Rat> pts) {
        PointCandidate e;
        e.kind = FINITE;
        e.finite = std::move(pts);
        return e;
    }
    static PointCandidate interval(const Rat& lo, const Rat& hi) {
        PointCandidate e;
        e.kind = INTERVAL;
        e.lo = lo;
        e.hi = hi;
        return e;
    }
    static PointCandidate all() { return {}; }

    bool meets_removed(const std::set<Rat>& removed) const {
        switch (kind) {
            case FINITE:
                for (const auto& p : finite)
                    if (removed.count(p)) return true;
                return false;
            case INTERVAL:
                for (const auto& p : removed)
                    if (p >= lo && p <= hi) return true;
                return false;
            default:
                return !removed.empty();
        }
    }
};

struct ObstructionReport {
    bool continuous = false;
    std::optional<std::pair<CofiniteOpen, std::vector<CofiniteOpen>>> failing_cover;
};

// Tests the two-valued functor of a candidate point set E on the fragment of
// opens with removed sets drawn from {x,y,z}: continuity demands that
// whenever E avoids the target's removed set, it also avoids some member's.
inline ObstructionReport convexity_obstruction(const Rat& x, const Rat& y, const Rat& z,
                                               const PointCandidate& E) {
    if (!(x < y && y < z)) throw std::invalid_argument("convexity_obstruction: need x < y < z");
    std::vector<Rat> pts{x, y, z};
    std::vector<CofiniteOpen> opens;
    for (int mask = 0; mask < 8; ++mask) {
        CofiniteOpen o;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) o.removed.insert(pts[i]);
        opens.push_back(std::move(o));
    }
    ObstructionReport rep;
    rep.continuous = true;
    for (const auto& target : opens) {
        if (E.meets_removed(target.removed)) continue;  // functor already empty here
        std::vector<CofiniteOpen> subs;
        for (const auto& o : opens) {
            bool sub = true;
            for (const auto& p : target.removed)
                if (!o.removed.count(p)) { sub = false; break; }
            if (sub) subs.push_back(o);
        }
        int S = (int)subs.size();
        for (int mask = 1; mask < (1 << S); ++mask) {
            std::vector<CofiniteOpen> fam;
            for (int i = 0; i < S; ++i)
                if (mask & (1 << i)) fam.push_back(subs[i]);
            if (!trop_cover_check(fam, target)) continue;
            bool hit = false;
            for (const auto& m : fam)
                if (!E.meets_removed(m.removed)) { hit = true; break; }
            if (!hit) {
                rep.continuous = false;
                rep.failing_cover = {target, fam};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace segal
