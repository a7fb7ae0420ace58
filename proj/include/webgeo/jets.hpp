// Truncated power series: bivariate jets at a rational base point (dense
// triangular storage) and univariate jets. Arithmetic truncates at the jet
// order; mixed-order operands truncate to the smaller order.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "webgeo/rat_func.hpp"
#include "webgeo/uni_poly.hpp"

namespace webgeo {

using Point = std::pair<Rational, Rational>;

class Jet2 {
  public:
    Jet2() = default;
    Jet2(Point base, int order) : base_(std::move(base)), order_(order), c_(size_of(order), Rational(0)) {}
    static Jet2 constant(const Rational& v, Point base, int order) {
        Jet2 j(std::move(base), order);
        j.c_[0] = v;
        return j;
    }
    // the local coordinates (displacements from the base point)
    static Jet2 dx(Point base, int order) {
        Jet2 j(std::move(base), order);
        if (order >= 1) j.set(1, 0, Rational(1));
        return j;
    }
    static Jet2 dy(Point base, int order) {
        Jet2 j(std::move(base), order);
        if (order >= 1) j.set(0, 1, Rational(1));
        return j;
    }

    int order() const { return order_; }
    const Point& base() const { return base_; }
    const Rational& at(int i, int j) const { return c_[index(i, j)]; }
    void set(int i, int j, const Rational& v) { c_[index(i, j)] = v; }
    const Rational& value() const { return c_[0]; } // value at the base point
    bool is_zero() const;

    Jet2 truncated(int new_order) const;

    friend Jet2 operator+(const Jet2& a, const Jet2& b);
    friend Jet2 operator-(const Jet2& a, const Jet2& b);
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    Jet2 operator-() const;
    Jet2 scaled(const Rational& v) const;
    friend bool operator==(const Jet2& a, const Jet2& b);

    Jet2 inverse() const;                             // requires nonzero value at base
    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * b.inverse(); }
    Jet2 pow(int e) const;
    Jet2 derivative_x() const; // order drops by one
    Jet2 derivative_y() const;

    std::string str(const std::string& xn = "x", const std::string& yn = "y") const;

    static size_t size_of(int order) { return (size_t)(order + 1) * (order + 2) / 2; }
    static size_t index(int i, int j) {
        int d = i + j;
        return (size_t)d * (d + 1) / 2 + j;
    }

  private:
    Point base_{Rational(0), Rational(0)};
    int order_ = 0;
    std::vector<Rational> c_{Rational(0)};
};

struct JetForm {
    Jet2 a; // dx coefficient
    Jet2 b; // dy coefficient
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_zero_to(int ord) const { return a.truncated(ord).is_zero() && b.truncated(ord).is_zero(); }
};

// Taylor expansion of f at base, truncated at total degree N.
// Throws when the denominator vanishes at the base point.
Jet2 expand(const RatFunc& f, const Point& base, int N);

// total differential of a jet as a JetForm of one order less
JetForm differential(const Jet2& u);

// g(u) for a univariate coefficient sequence g (degree = index); u must have
// zero constant term.
Jet2 compose_uni(const std::vector<Rational>& g, const Jet2& u);

Jet2 exp_jet(const Jet2& u);   // u(base) = 0 required
Jet2 log1p_jet(const Jet2& u); // log(1+u), u(base) = 0 required

// Primitive P of a closed JetForm: dP = omega to order N-1, P(base) = 0.
// Closedness is checked to order N-1; failure names the offending monomial.
Jet2 primitive_of_closed(const JetForm& omega);

// Newton lifting: Y with G(Y; a, b) = 0 to order N and Y(base) = seed.
// G is univariate in its own indeterminate with RatFunc coefficients in the
// base-plane variables. The seed must be a simple root of G at the base.
Jet2 lift_root(const UniPoly& G, const Rational& seed, const Point& base, int N);

// ---------------------------------------------------------------------------
// univariate truncated series (used by holonomy and residues)

class UniSeries {
  public:
    UniSeries() = default;
    UniSeries(int order) : order_(order), c_(order + 1, Rational(0)) {}
    UniSeries(std::vector<Rational> coeffs, int order) : order_(order), c_(std::move(coeffs)) {
        c_.resize(order + 1, Rational(0));
    }
    static UniSeries constant(const Rational& v, int order) {
        UniSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static UniSeries t(int order) {
        UniSeries s(order);
        if (order >= 1) s.c_[1] = Rational(1);
        return s;
    }

    int order() const { return order_; }
    const Rational& coeff(int d) const { return c_[d]; }
    void set(int d, const Rational& v) { c_[d] = v; }
    bool is_zero() const;

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    UniSeries operator-() const;
    UniSeries scaled(const Rational& v) const;
    UniSeries inverse() const;
    friend UniSeries operator/(const UniSeries& a, const UniSeries& b) { return a * b.inverse(); }
    friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.c_ == b.c_ && a.order_ == b.order_; }

    std::string str(const std::string& var = "t") const;

  private:
    int order_ = 0;
    std::vector<Rational> c_{Rational(0)};
};

// evaluate a bivariate jet at univariate displacement series (both with zero
// constant term)
UniSeries eval_at_series(const Jet2& u, const UniSeries& dx, const UniSeries& dy);

} // namespace webgeo
