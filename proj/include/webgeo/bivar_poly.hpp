// Bivariate polynomials over Q with graded-lexicographic term order (x > y).
// Only nonzero coefficients are stored; all arithmetic is exact.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "webgeo/rational.hpp"

namespace webgeo {

struct Mono {
    int i = 0; // exponent of x
    int j = 0; // exponent of y
    int deg() const { return i + j; }
    bool operator==(const Mono&) const = default;
};

// grlex, x > y: ordered first by total degree, ties broken by exponent of x.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.i < b.i;
    }
};

class BivarPoly {
  public:
    using Terms = std::map<Mono, Rational, MonoLess>;

    BivarPoly() = default;
    BivarPoly(const Rational& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    BivarPoly(long c) : BivarPoly(Rational(c)) {}
    static BivarPoly var_x() { return monomial(1, 0, Rational(1)); }
    static BivarPoly var_y() { return monomial(0, 1, Rational(1)); }
    static BivarPoly monomial(int i, int j, const Rational& c) {
        BivarPoly p;
        if (!c.is_zero()) p.terms_[{i, j}] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg() == 0); }
    Rational constant_value() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.deg(); }
    int degree_x() const;
    int degree_y() const;
    // leading term in grlex
    Mono leading_mono() const { return terms_.rbegin()->first; }
    const Rational& leading_coeff() const { return terms_.rbegin()->second; }
    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly operator-() const;
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }
    BivarPoly scaled(const Rational& c) const;
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    BivarPoly derivative_x() const;
    BivarPoly derivative_y() const;
    BivarPoly pow(int e) const;
    Rational eval(const Rational& x0, const Rational& y0) const;
    double eval_double(double x0, double y0) const;
    BivarPoly subst(const BivarPoly& fx, const BivarPoly& fy) const; // p(fx, fy)
    BivarPoly shift(const Rational& x0, const Rational& y0) const { // p(x + x0, y + y0)
        return subst(var_x() + BivarPoly(x0), var_y() + BivarPoly(y0));
    }

    // content (rational scalar making the polynomial primitive with integer
    // coefficients and positive grlex-leading coefficient) and primitive part
    Rational content() const;
    BivarPoly primitive_part() const;

    // exact division; nullopt when the division does not come out even
    std::optional<BivarPoly> divided_by(const BivarPoly& d) const;
    bool divisible_by(const BivarPoly& d) const { return divided_by(d).has_value(); }

    static BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);
    BivarPoly squarefree_part() const;

    void set_coeff(int i, int j, const Rational& c) {
        if (c.is_zero())
            terms_.erase({i, j});
        else
            terms_[{i, j}] = c;
    }

    std::string str(const std::string& xn = "x", const std::string& yn = "y") const;

  private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BivarPoly& p);

} // namespace webgeo
