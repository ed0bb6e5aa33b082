#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>

#include "picard/errors.hpp"
#include "picard/field.hpp"
#include "picard/gaussian.hpp"

namespace picard {

enum class AmbiguityClass { TotallyPositive, TotallyNegative, Ambiguous, RationalDegenerate };

inline const char* to_string(AmbiguityClass c) {
    switch (c) {
        case AmbiguityClass::TotallyPositive: return "TotallyPositive";
        case AmbiguityClass::TotallyNegative: return "TotallyNegative";
        case AmbiguityClass::Ambiguous: return "Ambiguous";
        case AmbiguityClass::RationalDegenerate: return "RationalDegenerate";
    }
    return "?";
}

/// Integer triple (a, b, c) representing (a + b*sqrt(3))/c, in the canonical
/// orientation b > 0, or b = 0 and c > 0.  Triples are NOT gcd-reduced:
/// unreduced representations like 2*sqrt(3)/4 are meaningful, since their
/// companion quantity d is integral only unreduced.  Value equality (the
/// gcd-reduced comparison) is a separate predicate.
class RealQuadratic {
public:
    RealQuadratic(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (c_ == 0) throw ZeroDenominator();
        if (b_ < 0 || (b_ == 0 && c_ < 0)) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    /// Structural equality: compares stored triples.
    friend bool operator==(const RealQuadratic&, const RealQuadratic&) = default;

    friend bool operator<(const RealQuadratic& x, const RealQuadratic& y) {
        return std::tie(x.a_, x.c_, x.b_) < std::tie(y.a_, y.c_, y.b_);
    }

    /// d = (a^2 - 3 b^2)/c, the quantity whose integrality B, C, C^2, D preserve.
    Rational d_value() const { return Rational(a_ * a_ - 3 * b_ * b_) / Rational(c_); }

    bool d_integral() const { return (a_ * a_ - 3 * b_ * b_) % c_ == 0; }

    Int d_int() const {
        Int n = a_ * a_ - 3 * b_ * b_;
        if (n % c_ != 0) throw NonIntegralD();
        return n / c_;
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Sign classification, decided exactly by comparing a^2 with 3 b^2 and
    /// the signs of a and c; never touches floating point.
    AmbiguityClass classify() const {
        if (b_ == 0) return AmbiguityClass::RationalDegenerate;
        Int lhs = a_ * a_;
        Int rhs = 3 * b_ * b_;
        if (lhs < rhs) return AmbiguityClass::Ambiguous;
        // |a| > sqrt(3)|b|, so both conjugates carry the sign of a/c.
        bool positive = (a_ > 0) == (c_ > 0);
        return positive ? AmbiguityClass::TotallyPositive : AmbiguityClass::TotallyNegative;
    }

    FieldElement embed() const {
        Rational den(c_);
        return {Rational(a_) / den, 0, Rational(b_) / den, 0};
    }

    /// Exact triple for a FieldElement with no i-component: the gcd-reduced
    /// representation, canonically oriented.  nullopt when the element is
    /// not of the form (a + b*sqrt(3))/c.
    static std::optional<RealQuadratic> extract(const FieldElement& x) {
        if (x.has_i_component()) return std::nullopt;
        const Rational& r0 = x.coord(0);
        const Rational& r2 = x.coord(2);
        Int q0 = denominator(r0);
        Int q2 = denominator(r2);
        Int c = q0 / gcd(q0, q2) * q2;  // lcm, positive
        return RealQuadratic(numerator(r0) * (c / q0), numerator(r2) * (c / q2), c);
    }

    /// B(alpha) = 1/alpha = (a - b*sqrt(3))/d.
    RealQuadratic act_B() const {
        if (is_zero()) throw ZeroInput();
        return {a_, -b_, d_nonzero()};
    }

    /// D(alpha) = -1/alpha = (-a + b*sqrt(3))/d.
    RealQuadratic act_D() const {
        if (is_zero()) throw ZeroInput();
        return {-a_, b_, d_nonzero()};
    }

    /// C(alpha) = (-a - d + b*sqrt(3))/d; the image's own d is 2a + c + d.
    RealQuadratic act_C() const {
        Int d = d_nonzero();
        return {-a_ - d, b_, d};
    }

    /// C^2(alpha) = (-a - c + b*sqrt(3))/(2a + c + d); the image's own d is c.
    RealQuadratic act_C2() const {
        Int d = d_int();
        Int den = 2 * a_ + c_ + d;
        if (den == 0) throw ZeroDenominator("C^2 image is infinite");
        return {-a_ - c_, b_, den};
    }

    /// A(alpha) = 1/(alpha - i).  Has a nonzero i-component whenever b != 0.
    FieldElement act_A_image() const {
        return (embed() - FieldElement::i()).invert();
    }

    /// A^2(alpha) = (1 + i*alpha)/alpha.  Has a nonzero i-component whenever b != 0.
    FieldElement act_A2_image() const {
        if (is_zero()) throw ZeroD();
        FieldElement x = embed();
        return (FieldElement::one() + FieldElement::i() * x) * x.invert();
    }

    /// Conjugate over Q(i): (a - b*sqrt(3))/c, reoriented to (-a, b, -c).
    RealQuadratic conj() const { return {a_, -b_, c_}; }

    /// gcd-reduced representation of the same value.
    RealQuadratic reduced() const {
        Int g = gcd(gcd(abs(a_), abs(b_)), abs(c_));
        return {a_ / g, b_ / g, c_ / g};
    }

    bool value_equal(const RealQuadratic& other) const {
        return reduced() == other.reduced();
    }

    /// Human rendering: "(-3+2√3)/3", "√3", "-√3/3".  A negative stored
    /// denominator becomes a leading minus over |c|.
    std::string render() const {
        std::string core;
        int terms = 0;
        if (a_ != 0 || b_ == 0) {
            core += a_.str();
            ++terms;
        }
        if (b_ != 0) {
            if (terms > 0 && b_ > 0) core += "+";
            if (b_ == -1)
                core += "-";
            else if (b_ != 1)
                core += b_.str();
            core += "√3";
            ++terms;
        }
        Int ac = abs(c_);
        std::string out = c_ < 0 ? "-" : "";
        if (terms > 1 && (ac != 1 || c_ < 0)) core = "(" + core + ")";
        out += core;
        if (ac != 1) out += "/" + ac.str();
        return out;
    }

    /// Graph node id: "a_b_c" with "m" prefixing negative entries.
    std::string node_id() const {
        auto part = [](const Int& n) {
            return n < 0 ? "m" + Int(-n).str() : n.str();
        };
        return part(a_) + "_" + part(b_) + "_" + part(c_);
    }

    friend std::ostream& operator<<(std::ostream& os, const RealQuadratic& q) {
        return os << "(" << q.a_ << "," << q.b_ << "," << q.c_ << ")";
    }

private:
    Int d_nonzero() const {
        Int d = d_int();
        if (d == 0) throw ZeroD();
        return d;
    }

    Int a_, b_, c_;
};

}  // namespace picard
