// Reduced rational functions num/den in Q(x,y). The denominator is kept
// primitive with integer coefficients and positive grlex-leading coefficient,
// and gcd(num, den) = 1, which makes the representation canonical.
#pragma once

#include <string>

#include "webgeo/bivar_poly.hpp"

namespace webgeo {

class RatFunc {
  public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFunc(const BivarPoly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(BivarPoly n, BivarPoly d);

    static RatFunc var_x() { return RatFunc(BivarPoly::var_x()); }
    static RatFunc var_y() { return RatFunc(BivarPoly::var_y()); }

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative_x() const;
    RatFunc derivative_y() const;
    RatFunc pow(int e) const;
    RatFunc inv() const { return RatFunc(den_, num_); }

    bool defined_at(const Rational& x0, const Rational& y0) const { return !den_.eval(x0, y0).is_zero(); }
    Rational eval(const Rational& x0, const Rational& y0) const;
    RatFunc subst(const RatFunc& fx, const RatFunc& fy) const;

    std::string str(const std::string& xn = "x", const std::string& yn = "y") const;

  private:
    BivarPoly num_;
    BivarPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace webgeo
