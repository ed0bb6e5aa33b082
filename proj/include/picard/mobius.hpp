#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picard/errors.hpp"
#include "picard/field.hpp"
#include "picard/gaussian.hpp"

namespace picard {

enum class Generator { A, B, C, D };

inline char generator_name(Generator g) {
    switch (g) {
        case Generator::A: return 'A';
        case Generator::B: return 'B';
        case Generator::C: return 'C';
        case Generator::D: return 'D';
    }
    return '?';
}

inline int generator_order(Generator g) {
    return (g == Generator::A || g == Generator::C) ? 3 : 2;
}

/// Plain 2x2 matrix over Z[i], no sign identification.  Relator
/// verification needs the raw product to tell +I from -I.
struct RawMat {
    GaussianInt p, q, r, s;

    GaussianInt det() const { return p * s - q * r; }

    friend RawMat operator*(const RawMat& m, const RawMat& n) {
        return {m.p * n.p + m.q * n.r, m.p * n.q + m.q * n.s,
                m.r * n.p + m.s * n.r, m.r * n.q + m.s * n.s};
    }

    friend bool operator==(const RawMat&, const RawMat&) = default;

    bool is_plus_identity() const {
        return p == GaussianInt(1) && q.is_zero() && r.is_zero() && s == GaussianInt(1);
    }
    bool is_minus_identity() const {
        return p == GaussianInt(-1) && q.is_zero() && r.is_zero() && s == GaussianInt(-1);
    }
};

/// Determinant-1 matrices realizing the four generators.  A and B need a
/// factor i to lift their naive matrices (determinant -1) into SL(2,Z[i]).
inline RawMat generator_raw(Generator g) {
    switch (g) {
        case Generator::A: return {GaussianInt(0, 0), GaussianInt(0, 1),
                                   GaussianInt(0, 1), GaussianInt(1, 0)};
        case Generator::B: return {GaussianInt(0, 0), GaussianInt(0, 1),
                                   GaussianInt(0, 1), GaussianInt(0, 0)};
        case Generator::C: return {GaussianInt(1, 0), GaussianInt(1, 0),
                                   GaussianInt(-1, 0), GaussianInt(0, 0)};
        case Generator::D: return {GaussianInt(0, 0), GaussianInt(-1, 0),
                                   GaussianInt(1, 0), GaussianInt(0, 0)};
    }
    throw std::logic_error("bad generator");
}

/// Element of PSL(2,Z[i]): determinant-1 matrix identified up to overall
/// sign.  The sign is canonicalized (first nonzero entry in p,q,r,s order
/// has re > 0, or re = 0 and im > 0) so equality is structural.
class MobiusMap {
public:
    explicit MobiusMap(RawMat m) : m_(std::move(m)) {
        if (m_.det() != GaussianInt(1))
            throw std::invalid_argument("MobiusMap: determinant is not 1");
        canonicalize();
    }
    MobiusMap(GaussianInt p, GaussianInt q, GaussianInt r, GaussianInt s)
        : MobiusMap(RawMat{std::move(p), std::move(q), std::move(r), std::move(s)}) {}

    static MobiusMap identity() {
        return MobiusMap(RawMat{GaussianInt(1, 0), GaussianInt(0, 0),
                                GaussianInt(0, 0), GaussianInt(1, 0)});
    }

    const RawMat& mat() const { return m_; }

    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

    friend MobiusMap operator*(const MobiusMap& m, const MobiusMap& n) {
        return MobiusMap(m.m_ * n.m_);
    }

    MobiusMap inverse() const {
        return MobiusMap(RawMat{m_.s, -m_.q, -m_.r, m_.p});
    }

    /// (p z + q)/(r z + s); infinity maps to p/r, poles map to infinity.
    ProjectivePoint apply(const ProjectivePoint& z) const {
        FieldElement p(m_.p), q(m_.q), r(m_.r), s(m_.s);
        if (z.is_infinity()) {
            if (r.is_zero()) return ProjectivePoint::infinity();
            return p * r.invert();
        }
        FieldElement num = p * z.value() + q;
        FieldElement den = r * z.value() + s;
        if (den.is_zero()) return ProjectivePoint::infinity();
        return num * den.invert();
    }

private:
    void canonicalize() {
        for (const GaussianInt* e : {&m_.p, &m_.q, &m_.r, &m_.s}) {
            if (e->is_zero()) continue;
            if (e->re < 0 || (e->re == 0 && e->im < 0)) {
                m_.p = -m_.p;
                m_.q = -m_.q;
                m_.r = -m_.r;
                m_.s = -m_.s;
            }
            return;
        }
    }

    RawMat m_;
};

inline MobiusMap generator(Generator g) { return MobiusMap(generator_raw(g)); }

/// Word over {A,B,C,D} with exponents reduced mod the generator orders.
/// The leftmost letter acts first.
class GeneratorWord {
public:
    struct Letter {
        Generator gen;
        int exp;  // 1..order-1
    };

    GeneratorWord() = default;

    void append(Generator g, int exp = 1) {
        int order = generator_order(g);
        exp %= order;
        if (exp < 0) exp += order;
        if (exp == 0) return;
        if (!letters_.empty() && letters_.back().gen == g) {
            int merged = (letters_.back().exp + exp) % order;
            if (merged == 0)
                letters_.pop_back();
            else
                letters_.back().exp = merged;
            return;
        }
        letters_.push_back({g, exp});
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    /// Matrix of the word under the leftmost-acts-first convention:
    /// later letters multiply on the left.
    MobiusMap matrix() const {
        MobiusMap m = MobiusMap::identity();
        for (const Letter& l : letters_)
            for (int j = 0; j < l.exp; ++j) m = generator(l.gen) * m;
        return m;
    }

    ProjectivePoint apply(const ProjectivePoint& z) const {
        ProjectivePoint w = z;
        for (const Letter& l : letters_)
            for (int j = 0; j < l.exp; ++j) w = generator(l.gen).apply(w);
        return w;
    }

private:
    std::vector<Letter> letters_;
};

struct RelatorResult {
    std::string name;
    bool minus_identity;  // false means +I (when pass) or neither (when !pass)
    bool pass;
};

/// Evaluates the eight defining relators with a pluggable generator table,
/// so corrupted matrices can be detected in tests.
inline std::vector<RelatorResult> verify_relators_with(
    const std::function<RawMat(Generator)>& gen) {
    using G = Generator;
    struct Rel {
        std::string name;
        std::vector<G> word;
    };
    const std::vector<Rel> rels = {
        {"A^3", {G::A, G::A, G::A}},
        {"B^2", {G::B, G::B}},
        {"C^3", {G::C, G::C, G::C}},
        {"D^2", {G::D, G::D}},
        {"(AC)^2", {G::A, G::C, G::A, G::C}},
        {"(AD)^2", {G::A, G::D, G::A, G::D}},
        {"(BC)^2", {G::B, G::C, G::B, G::C}},
        {"(BD)^2", {G::B, G::D, G::B, G::D}},
    };
    std::vector<RelatorResult> out;
    for (const Rel& rel : rels) {
        RawMat m{GaussianInt(1, 0), GaussianInt(0, 0), GaussianInt(0, 0),
                 GaussianInt(1, 0)};
        for (G g : rel.word) m = m * gen(g);
        bool plus = m.is_plus_identity();
        bool minus = m.is_minus_identity();
        out.push_back({rel.name, minus, plus || minus});
    }
    return out;
}

inline std::vector<RelatorResult> verify_relators() {
    return verify_relators_with(&generator_raw);
}

}  // namespace picard
