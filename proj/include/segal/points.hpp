#pragma once

// Points of the spectrum topos as two-valued flat continuous functors on the
// localized divisibility category: supports that are upward closed, closed
// under products, and meet every generated cover of their members.

#include "segal/cinf.hpp"

namespace segal {

struct ToposPoint {
    std::vector<int> support;       // object ids, ascending
    int prime_label = -1;           // index into the prime oracle list, when applicable
};

struct PointsResult {
    std::vector<ToposPoint> points;
    bool exact = false;             // confirmed against a prime ideal oracle
    std::string method;
};

inline bool support_is_point(const CInfCategory& C, const GeneratedCovers& covers, uint32_t mask) {
    if (mask == 0) return false;
    auto in = [&](int o) { return (mask >> o) & 1u; };
    for (int a = 0; a < C.size(); ++a) {
        if (!in(a)) continue;
        for (int b = 0; b < C.size(); ++b) {
            if (C.hom(a, b) && !in(b)) return false;       // hereditary
            if (in(b) && !in(C.prod[a][b])) return false;  // flat
        }
    }
    // continuity: every generated cover of a supported object meets the support
    for (int o = 0; o < C.size(); ++o) {
        if (!in(o)) continue;
        for (const auto& [fam, w] : covers.at[o]) {
            bool hit = false;
            for (int x : fam)
                if (in(x)) { hit = true; break; }
            if (!hit) return false;
        }
    }
    return true;
}

inline ToposPoint point_from_prime(const CInfCategory& C, const std::set<int>& prime) {
    ToposPoint p;
    for (int o = 0; o < C.size(); ++o)
        if (!prime.count(C.rep[o])) p.support.push_back(o);
    return p;
}

// The ideal {f : f^inf outside the support}.
inline std::set<int> prime_from_point(const CInfCategory& C, const ToposPoint& p) {
    std::vector<char> in(C.size(), 0);
    for (int o : p.support) in[o] = 1;
    std::set<int> out;
    for (int o = 0; o < C.size(); ++o)
        if (!in[o])
            for (int x : C.members[o]) out.insert(x);
    return out;
}

inline PointsResult enumerate_points(const SAlgebra& A, const CInfCategory& C, int arity_cap = 3) {
    if (C.size() > 20) throw std::invalid_argument("point enumeration capped at 20 objects");
    auto covers = partition_covers(A, C, arity_cap);
    PointsResult res;
    for (uint32_t mask = 1; mask < (1u << C.size()); ++mask) {
        if (!support_is_point(C, covers, mask)) continue;
        ToposPoint p;
        for (int o = 0; o < C.size(); ++o)
            if ((mask >> o) & 1u) p.support.push_back(o);
        res.points.push_back(std::move(p));
    }
    res.method = "support scan over generated covers";

    // cross-check against the prime ideal oracle when one applies; a mismatch
    // is a hard failure, never a silent fallback
    std::vector<std::set<int>> primes;
    bool have_oracle = false;
    if (A.h_base()) {
        primes = prime_ideals_semiring(*A.h_base());
        have_oracle = true;
        res.method += " + semiring prime oracle";
    } else if (A.sm_base()) {
        primes = prime_ideals_monoid(*A.sm_base());
        have_oracle = true;
        res.method += " + monoid prime oracle";
    }
    if (have_oracle) {
        if (primes.size() != res.points.size())
            throw std::logic_error("point enumeration disagrees with the prime ideal oracle: " +
                                   std::to_string(res.points.size()) + " points vs " +
                                   std::to_string(primes.size()) + " primes");
        for (size_t i = 0; i < primes.size(); ++i) {
            auto q = point_from_prime(C, primes[i]);
            bool found = false;
            for (auto& p : res.points)
                if (p.support == q.support) {
                    if (p.prime_label >= 0) throw std::logic_error("two primes map to one point");
                    p.prime_label = (int)i;
                    found = true;
                    break;
                }
            if (!found) throw std::logic_error("a prime ideal yields no enumerated point");
        }
        res.exact = true;
    }
    return res;
}

}  // namespace segal
