#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "picard/errors.hpp"
#include "picard/gaussian.hpp"

namespace picard {

/// Exact element of Q(i,sqrt(3)), stored as four rational coordinates
/// over the ordered basis {1, i, sqrt(3), i*sqrt(3)}.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Rational c0, Rational c1, Rational c2, Rational c3)
        : x_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    explicit FieldElement(const GaussianInt& g)
        : x_{Rational(g.re), Rational(g.im), Rational(0), Rational(0)} {}
    explicit FieldElement(const Rational& r) : x_{r, 0, 0, 0} {}
    explicit FieldElement(long n) : x_{Rational(n), 0, 0, 0} {}

    static FieldElement zero() { return FieldElement(0); }
    static FieldElement one() { return FieldElement(1); }
    static FieldElement i() { return {0, 1, 0, 0}; }
    static FieldElement sqrt3() { return {0, 0, 1, 0}; }

    const Rational& coord(int j) const { return x_[static_cast<std::size_t>(j)]; }

    bool is_zero() const {
        return x_[0] == 0 && x_[1] == 0 && x_[2] == 0 && x_[3] == 0;
    }
    bool has_i_component() const { return x_[1] != 0 || x_[3] != 0; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

    FieldElement operator-() const { return {-x_[0], -x_[1], -x_[2], -x_[3]}; }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        return {x.x_[0] + y.x_[0], x.x_[1] + y.x_[1], x.x_[2] + y.x_[2],
                x.x_[3] + y.x_[3]};
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        return x + (-y);
    }

    // Expansion over the basis, using i^2 = -1, sqrt(3)^2 = 3, (i*sqrt(3))^2 = -3.
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        const auto& a = x.x_;
        const auto& b = y.x_;
        return {a[0] * b[0] - a[1] * b[1] + 3 * (a[2] * b[2] - a[3] * b[3]),
                a[0] * b[1] + a[1] * b[0] + 3 * (a[2] * b[3] + a[3] * b[2]),
                a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1],
                a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
    }

    /// Conjugation over Q(i): sqrt(3) -> -sqrt(3), fixes 1 and i.
    FieldElement conj_over_qi() const { return {x_[0], x_[1], -x_[2], -x_[3]}; }

    /// Conjugation over Q(sqrt(3)): i -> -i, fixes 1 and sqrt(3).
    FieldElement conj_over_qsqrt3() const { return {x_[0], -x_[1], x_[2], -x_[3]}; }

    /// Multiplicative inverse, computed by conjugating down the tower:
    /// x * conj_qi(x) lies in Q(i); its norm to Q is a nonzero rational.
    FieldElement invert() const {
        if (is_zero()) throw ZeroInverse();
        FieldElement n1 = *this * conj_over_qi();        // in Q(i)
        FieldElement n2 = n1 * n1.conj_over_qsqrt3();    // rational
        const Rational& r = n2.x_[0];
        FieldElement num = conj_over_qi() * n1.conj_over_qsqrt3();
        Rational inv_r = Rational(1) / r;
        return {num.x_[0] * inv_r, num.x_[1] * inv_r, num.x_[2] * inv_r,
                num.x_[3] * inv_r};
    }

    /// Coordinates as "num/den" strings, the CLI wire form.
    std::array<std::string, 4> coord_strings() const {
        std::array<std::string, 4> out;
        for (int j = 0; j < 4; ++j) {
            out[static_cast<std::size_t>(j)] =
                numerator(x_[static_cast<std::size_t>(j)]).str() + "/" +
                denominator(x_[static_cast<std::size_t>(j)]).str();
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
        auto s = x.coord_strings();
        return os << "[" << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << "]";
    }

private:
    std::array<Rational, 4> x_{};
};

/// Point of the projective line over Q(i,sqrt(3)): a field element or infinity.
class ProjectivePoint {
public:
    ProjectivePoint(FieldElement v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    static ProjectivePoint infinity() { return ProjectivePoint(); }

    bool is_infinity() const { return !v_.has_value(); }
    const FieldElement& value() const { return *v_; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ProjectivePoint& z) {
        if (z.is_infinity()) return os << "inf";
        return os << z.value();
    }

private:
    ProjectivePoint() = default;
    std::optional<FieldElement> v_;
};

}  // namespace picard
