#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "picard/errors.hpp"
#include "picard/real_quadratic.hpp"

namespace picard {

/// Both-sign divisors of n (n != 0), ascending.
inline std::vector<Int> signed_divisors(const Int& n) {
    Int m = abs(n);
    std::vector<Int> pos;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            pos.push_back(d);
            if (d * d != m) pos.push_back(m / d);
        }
    }
    std::vector<Int> out;
    out.reserve(pos.size() * 2);
    for (const Int& d : pos) {
        out.push_back(d);
        out.push_back(-d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All triples (a, k, c) with a^2 < 3k^2 and c | a^2 - 3k^2 (both signs of c).
/// a^2 - 3k^2 is always negative here, never zero.
inline std::vector<RealQuadratic> theorem3_candidates(const Int& k) {
    if (k < 1) throw InvalidK();
    std::vector<RealQuadratic> out;
    Int bound = 3 * k * k;
    for (Int a = 0; a * a < bound; ++a) {
        for (int sign : {1, -1}) {
            if (a == 0 && sign < 0) continue;
            Int aa = sign * a;
            for (const Int& c : signed_divisors(aa * aa - bound))
                out.emplace_back(aa, k, c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SmallerPathMembership {
    Int m;                   // the smaller layer index the value belongs to
    RealQuadratic reduced;   // the gcd-reduced triple (a0, m, c0)
};

/// Decides whether (a, k, c) really belongs to the closed path of a proper
/// divisor m of k: for each divisor g > 1 of gcd(a, k, c), largest first,
/// test whether the reduced triple (a/g, m, c/g) with m = k/g satisfies
/// c/g | (a/g)^2 - 3m^2.  The first hit names the smallest m whose path
/// already contains the value.  nullopt means the candidate stays with k.
/// The full-gcd reduction alone is not enough: (-4, 4, -16) reduces to the
/// coprime (-1, 1, -4) with non-integral d, yet its half-reduction
/// (-2, 2, -8) has integral d and lives in the k = 2 path.
inline std::optional<SmallerPathMembership> belongs_to_smaller_path(const RealQuadratic& q) {
    Int g0 = gcd(gcd(abs(q.a()), q.b()), abs(q.c()));
    if (g0 == 1) return std::nullopt;
    auto divs = signed_divisors(g0);  // ascending, so iterate from the back
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        const Int& g = *it;
        if (g <= 1) break;
        if (g0 % g != 0) continue;
        RealQuadratic red(q.a() / g, q.b() / g, q.c() / g);
        if (red.d_integral()) return SmallerPathMembership{red.b(), red};
    }
    return std::nullopt;
}

struct ExclusionRecord {
    RealQuadratic candidate;
    RealQuadratic reduced;
    Int m;
};

struct EnumerationResult {
    Int k;
    std::vector<RealQuadratic> members;      // sorted by (a, c)
    std::vector<ExclusionRecord> excluded;
};

/// All ambiguous numbers of the closed path containing k*sqrt(3): the
/// candidate triples, minus those whose reduced form already lives in a
/// smaller path.
inline EnumerationResult enumerate_ambiguous(const Int& k) {
    EnumerationResult res{k, {}, {}};
    for (const RealQuadratic& q : theorem3_candidates(k)) {
        if (auto smaller = belongs_to_smaller_path(q))
            res.excluded.push_back({q, smaller->reduced, smaller->m});
        else
            res.members.push_back(q);
    }
    return res;
}

}  // namespace picard
