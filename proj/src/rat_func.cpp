#include "webgeo/rat_func.hpp"

#include <ostream>
#include <stdexcept>

namespace webgeo {

RatFunc::RatFunc(BivarPoly n, BivarPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = BivarPoly(Rational(1));
        return;
    }
    BivarPoly g = BivarPoly::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.divided_by(g);
        den_ = *den_.divided_by(g);
    }
    Rational c = den_.content();
    den_ = den_.scaled(c.inv());
    num_ = num_.scaled(c.inv());
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative_x() const {
    return RatFunc(num_.derivative_x() * den_ - num_ * den_.derivative_x(), den_ * den_);
}

RatFunc RatFunc::derivative_y() const {
    return RatFunc(num_.derivative_y() * den_ - num_ * den_.derivative_y(), den_ * den_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r(1);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rational RatFunc::eval(const Rational& x0, const Rational& y0) const {
    Rational d = den_.eval(x0, y0);
    if (d.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
    return num_.eval(x0, y0) / d;
}

RatFunc RatFunc::subst(const RatFunc& fx, const RatFunc& fy) const {
    // p(n_x/d_x, n_y/d_y): substitute with cleared denominators
    int dx = num_.degree_x() > den_.degree_x() ? num_.degree_x() : den_.degree_x();
    int dy = num_.degree_y() > den_.degree_y() ? num_.degree_y() : den_.degree_y();
    if (dx < 0) dx = 0;
    if (dy < 0) dy = 0;
    auto lift = [&](const BivarPoly& p) {
        // p(fx, fy) * (dxden^dx * dyden^dy) as a polynomial
        BivarPoly acc;
        for (const auto& [m, c] : p.terms()) {
            BivarPoly t = fx.num().pow(m.i) * fx.den().pow(dx - m.i) * fy.num().pow(m.j) * fy.den().pow(dy - m.j);
            acc += t.scaled(c);
        }
        return acc;
    };
    return RatFunc(lift(num_), lift(den_));
}

std::string RatFunc::str(const std::string& xn, const std::string& yn) const {
    if (is_polynomial()) return num_.str(xn, yn); // den is normalized to exactly 1

    std::string n = num_.str(xn, yn);
    std::string d = den_.str(xn, yn);
    bool npar = num_.terms().size() > 1;
    bool dpar = den_.terms().size() > 1 || !den_.leading_coeff().is_one() || den_.leading_mono().deg() == 0;
    std::string out = npar ? "(" + n + ")" : n;
    out += "/";
    out += dpar ? "(" + d + ")" : d;
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

} // namespace webgeo
