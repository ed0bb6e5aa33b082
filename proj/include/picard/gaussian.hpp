#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

namespace picard {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Z[i].
struct GaussianInt {
    Int re;
    Int im;

    GaussianInt() = default;
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianInt(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt operator-() const { return {-re, -im}; }

    friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }

    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

    std::string str() const {
        if (im == 0) return re.str();
        std::string s = re == 0 ? "" : re.str();
        if (im > 0 && re != 0) s += "+";
        if (im == -1)
            s += "-i";
        else if (im == 1)
            s += "i";
        else
            s += im.str() + "i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
        return os << g.str();
    }
};

}  // namespace picard
