#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "picard/enumerate.hpp"
#include "picard/graph.hpp"
#include "picard/mobius.hpp"
#include "picard/real_quadratic.hpp"

namespace picard {

struct SuiteResult {
    std::string name;
    long checked = 0;
    bool ok = true;
    std::string witness;  // first failing input, when !ok
    std::string detail;   // optional informational summary
};

namespace detail {

class SuiteRecorder {
public:
    explicit SuiteRecorder(std::string name) { res_.name = std::move(name); }

    void check(bool cond, const RealQuadratic& q) {
        ++res_.checked;
        if (!cond && res_.ok) {
            res_.ok = false;
            std::ostringstream os;
            os << q;
            res_.witness = os.str();
        }
    }
    void check(bool cond, const std::string& witness) {
        ++res_.checked;
        if (!cond && res_.ok) {
            res_.ok = false;
            res_.witness = witness;
        }
    }

    SuiteResult take() { return std::move(res_); }

private:
    SuiteResult res_;
};

/// Random triples (a, b, c) with integral d: pick a, b, then c among the
/// divisors of a^2 - 3b^2.
inline std::vector<RealQuadratic> random_integral_d_triples(std::mt19937& rng, long count) {
    std::uniform_int_distribution<int> bdist(1, 12);
    std::uniform_int_distribution<int> adist(-40, 40);
    std::vector<RealQuadratic> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<long>(out.size()) < count) {
        Int b = bdist(rng);
        Int a = adist(rng);
        Int n = a * a - 3 * b * b;
        if (n == 0) continue;
        auto divs = signed_divisors(n);
        Int c = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
        out.emplace_back(a, b, c);
    }
    return out;
}

/// Random totally positive triples with integral d, both orientation cases
/// (a, d, c all positive and all negative).
inline std::vector<RealQuadratic> random_totally_positive(std::mt19937& rng, long count) {
    std::uniform_int_distribution<int> bdist(1, 10);
    std::uniform_int_distribution<int> offset(1, 30);
    std::vector<RealQuadratic> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<long>(out.size()) < count) {
        Int b = bdist(rng);
        // a > sqrt(3) b, so a dominates and both conjugates are positive
        Int a = 2 * b + offset(rng);
        Int n = a * a - 3 * b * b;
        auto divs = signed_divisors(n);
        Int c;
        do {
            c = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
        } while (c < 0);
        if (std::uniform_int_distribution<int>(0, 1)(rng))
            out.emplace_back(-a, b, -c);  // a, d, c all negative, still canonical
        else
            out.emplace_back(a, b, c);
    }
    return out;
}

inline MobiusMap matrix_of_action(char which) {
    switch (which) {
        case 'B': return generator(Generator::B);
        case 'C': return generator(Generator::C);
        case '2': return generator(Generator::C) * generator(Generator::C);
        case 'D': return generator(Generator::D);
    }
    throw std::logic_error("bad action");
}

}  // namespace detail

/// The eight defining relators all evaluate to +I or -I.
inline SuiteResult suite_relators() {
    detail::SuiteRecorder rec("relators");
    for (const RelatorResult& r : verify_relators()) rec.check(r.pass, r.name);
    return rec.take();
}

/// Proposition 1: C and C^2 of a totally positive number are totally negative.
inline SuiteResult suite_prop1(std::mt19937& rng, long count) {
    detail::SuiteRecorder rec("prop1");
    for (const RealQuadratic& q : detail::random_totally_positive(rng, count)) {
        rec.check(q.classify() == AmbiguityClass::TotallyPositive &&
                      q.act_C().classify() == AmbiguityClass::TotallyNegative &&
                      q.act_C2().classify() == AmbiguityClass::TotallyNegative,
                  q);
    }
    return rec.take();
}

/// Lemmas 1 and 2: B and D preserve both ambiguity and non-ambiguity.
inline SuiteResult suite_lemma1_2(const std::vector<RealQuadratic>& samples) {
    detail::SuiteRecorder rec("lemma1_2");
    for (const RealQuadratic& q : samples) {
        if (q.is_zero()) continue;
        bool amb = q.classify() == AmbiguityClass::Ambiguous;
        rec.check((q.act_B().classify() == AmbiguityClass::Ambiguous) == amb &&
                      (q.act_D().classify() == AmbiguityClass::Ambiguous) == amb,
                  q);
    }
    return rec.take();
}

/// Proposition 2: A and A^2 images of an ambiguous number keep a nonzero
/// i-coordinate, so extraction back to (a+b*sqrt(3))/c form fails.
inline SuiteResult suite_prop2(const std::vector<RealQuadratic>& ambiguous) {
    detail::SuiteRecorder rec("prop2");
    for (const RealQuadratic& q : ambiguous) {
        rec.check(q.act_A_image().has_i_component() &&
                      q.act_A2_image().has_i_component() &&
                      !RealQuadratic::extract(q.act_A_image()).has_value(),
                  q);
    }
    return rec.take();
}

/// Proposition 3: exactly one of C(q), C^2(q) is ambiguous, the other
/// totally negative.  partner() throws PropositionViolation otherwise.
inline SuiteResult suite_prop3(const std::vector<RealQuadratic>& ambiguous) {
    detail::SuiteRecorder rec("prop3");
    for (const RealQuadratic& q : ambiguous) {
        bool ok = true;
        try {
            RealQuadratic p = partner(q);
            ok = p.classify() == AmbiguityClass::Ambiguous && partner(p).value_equal(q);
        } catch (const PropositionViolation&) {
            ok = false;
        }
        rec.check(ok, q);
    }
    return rec.take();
}

/// Proposition 4: when d is integral, so are the d of the B, D, C and C^2
/// images.  In the raw representations B(q) = (a - b*sqrt(3))/d and
/// D(q) = (-a + b*sqrt(3))/d those d equal c and -c; the canonical
/// orientation negates the B triple (its raw b-entry is negative) and
/// leaves the D triple alone, so on canonical triples the values are -c
/// and c.  C and C^2 keep b positive and are unaffected.
inline SuiteResult suite_prop4(const std::vector<RealQuadratic>& samples) {
    detail::SuiteRecorder rec("prop4");
    for (const RealQuadratic& q : samples) {
        if (q.is_zero() || !q.d_integral()) continue;
        Int d = q.d_int();
        bool ok = q.act_B().d_value() == Rational(-q.c()) &&
                  q.act_D().d_value() == Rational(q.c()) &&
                  q.act_C().d_value() == Rational(2 * q.a() + q.c() + d);
        if (2 * q.a() + q.c() + d != 0)
            ok = ok && q.act_C2().d_value() == Rational(q.c());
        rec.check(ok, q);
    }
    return rec.take();
}

/// Remark 1: the canonical b survives every closed-form action.
inline SuiteResult suite_remark1(const std::vector<RealQuadratic>& samples) {
    detail::SuiteRecorder rec("remark1");
    for (const RealQuadratic& q : samples) {
        if (q.is_zero() || !q.d_integral()) continue;
        bool ok = q.act_B().b() == q.b() && q.act_D().b() == q.b() &&
                  q.act_C().b() == q.b();
        if (2 * q.a() + q.c() + q.d_int() != 0) ok = ok && q.act_C2().b() == q.b();
        rec.check(ok, q);
    }
    return rec.take();
}

/// Ambiguity is equivalent to d*c < 0.
inline SuiteResult suite_dc_sign(const std::vector<RealQuadratic>& samples) {
    detail::SuiteRecorder rec("dc_sign");
    for (const RealQuadratic& q : samples) {
        if (q.b() == 0) continue;
        bool amb = q.classify() == AmbiguityClass::Ambiguous;
        rec.check((q.d_value() * Rational(q.c()) < 0) == amb, q);
    }
    return rec.take();
}

/// Theorem 1 structure: Partner/D/B are perfect matchings, the Partner+D
/// subgraph decomposes into alternating cycles, and B edges connect the
/// whole graph.
inline SuiteResult suite_theorem1(const AmbiguousGraph& g) {
    detail::SuiteRecorder rec("theorem1_k" + g.k().str());
    std::size_t n = g.vertices().size();
    for (EdgeLabel l : {EdgeLabel::Partner, EdgeLabel::D, EdgeLabel::B}) {
        auto es = g.edges_with(l);
        std::vector<int> deg(n, 0);
        for (const LabeledEdge& e : es) {
            ++deg[e.from];
            ++deg[e.to];
        }
        bool matching = es.size() * 2 == n;
        for (int d : deg) matching = matching && d == 1;
        rec.check(matching, std::string("label ") + edge_label_name(l) +
                                " is not a perfect matching");
    }
    std::size_t covered = 0;
    for (const ClosedPath& p : g.layer_cycles()) {
        covered += p.vertices.size();
        bool alternates = p.vertices.size() % 2 == 0;
        for (std::size_t j = 0; j < p.labels.size(); ++j)
            alternates = alternates && (p.labels[j] == (j % 2 == 0 ? EdgeLabel::Partner
                                                                   : EdgeLabel::D));
        rec.check(alternates, "cycle labels do not alternate");
    }
    rec.check(covered == n, "cycles do not cover all vertices");
    rec.check(g.connected(), "graph with B edges is not connected");
    return rec.take();
}

/// Theorems 2-3: the BFS closure from k*sqrt(3) through ambiguous images is
/// exactly the enumerated member set.
inline SuiteResult suite_orbit_equals_enumeration(const Int& k) {
    detail::SuiteRecorder rec("orbit_eq_enum_k" + k.str());
    auto members = enumerate_ambiguous(k).members;
    auto orbit = bfs_orbit_ambiguous(RealQuadratic(0, k, 1), 100000);
    rec.check(orbit == members, "BFS orbit differs from enumeration");
    SuiteResult res = rec.take();
    res.detail = "k=" + k.str() + ": " + std::to_string(orbit.size()) +
                 " == " + std::to_string(members.size());
    return res;
}

/// Every closed-form action agrees with the general Moebius application of
/// the corresponding generator matrix, as exact field values.
inline SuiteResult suite_oracle_equivalence(const std::vector<RealQuadratic>& samples) {
    detail::SuiteRecorder rec("oracle_equivalence");
    for (const RealQuadratic& q : samples) {
        if (q.is_zero() || !q.d_integral()) continue;
        bool ok = true;
        for (char which : {'B', 'D', 'C', '2'}) {
            if (which == '2' && 2 * q.a() + q.c() + q.d_int() == 0) continue;
            RealQuadratic closed = which == 'B'   ? q.act_B()
                                   : which == 'D' ? q.act_D()
                                   : which == 'C' ? q.act_C()
                                                  : q.act_C2();
            ProjectivePoint general =
                detail::matrix_of_action(which).apply(ProjectivePoint(q.embed()));
            ok = ok && !general.is_infinity() && general.value() == closed.embed();
        }
        rec.check(ok, q);
    }
    return rec.take();
}

/// All module-level property suites over the enumerated sets for k <= k_max
/// plus seeded random samples.  Used by both the test suite and the CLI.
inline std::vector<SuiteResult> run_property_suites(int k_max, unsigned seed,
                                                    long random_count = 1000) {
    std::mt19937 rng(seed);
    std::vector<RealQuadratic> enumerated;
    std::vector<SuiteResult> out;
    out.push_back(suite_relators());
    for (int k = 1; k <= k_max; ++k) {
        auto members = enumerate_ambiguous(k).members;
        enumerated.insert(enumerated.end(), members.begin(), members.end());
        out.push_back(suite_theorem1(AmbiguousGraph(k)));
        out.push_back(suite_orbit_equals_enumeration(k));
    }
    auto samples = detail::random_integral_d_triples(rng, random_count);
    samples.insert(samples.end(), enumerated.begin(), enumerated.end());
    out.push_back(suite_prop1(rng, random_count));
    out.push_back(suite_lemma1_2(samples));
    out.push_back(suite_prop2(enumerated));
    out.push_back(suite_prop3(enumerated));
    out.push_back(suite_prop4(samples));
    out.push_back(suite_remark1(samples));
    out.push_back(suite_dc_sign(samples));
    out.push_back(suite_oracle_equivalence(samples));
    return out;
}

}  // namespace picard
