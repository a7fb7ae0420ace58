// Univariate polynomials over Q(x,y) in a named auxiliary indeterminate
// (p, lambda or t), plus Sylvester resultants and discriminants.
#pragma once

#include <string>
#include <vector>

#include "webgeo/rat_func.hpp"

namespace webgeo {

class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<RatFunc> coeffs, std::string var = "p") : c_(std::move(coeffs)), var_(std::move(var)) {
        normalize();
    }
    static UniPoly variable(const std::string& var = "p") { return UniPoly({RatFunc(0), RatFunc(1)}, var); }
    static UniPoly constant(const RatFunc& c, const std::string& var = "p") { return UniPoly({c}, var); }

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const RatFunc& leading() const { return c_.back(); }
    RatFunc coeff(int d) const { return d >= 0 && d < (int)c_.size() ? c_[d] : RatFunc(0); }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    void set_coeff(int d, const RatFunc& v);

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly scaled(const RatFunc& f) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const;            // d/d(var)
    RatFunc eval(const RatFunc& v) const;  // Horner
    // division over the field Q(x,y): returns {quotient, remainder}
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    std::string str(const std::string& xn = "x", const std::string& yn = "y") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<RatFunc> c_;
    std::string var_ = "p";
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

// Determinant of the Sylvester matrix, P-rows first. Throws on zero input.
RatFunc resultant(const UniPoly& P, const UniPoly& Q);

// Res(P, P') / lead(P); normalized so a p^2 + b p + c gives b^2 - 4ac.
// Requires deg >= 2 and a nonzero leading coefficient.
RatFunc discriminant(const UniPoly& P);

// All rational roots (with multiplicity) of a nonzero polynomial whose
// coefficients are constant rational functions; divisor enumeration on the
// normalized integer polynomial.
std::vector<Rational> rational_roots(const UniPoly& P);

} // namespace webgeo
