// Planar webs: foliation presentations (first integral, closed form, slope),
// validation, subweb enumeration, implicit presentations and their
// resultant/discriminant divisors.
//
// Slope convention used repo-wide: theta = dy/dx along leaves, defining
// 1-form omega = dy - theta dx. Vertical leaves carry a reserved infinite
// slope; the chart rotation (x,y) -> (x+c y, y) removes them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "webgeo/jets.hpp"
#include "webgeo/uni_poly.hpp"

namespace webgeo {

// finite slope function or the reserved vertical symbol
struct SlopeFunc {
    bool vertical = false;
    RatFunc theta; // valid when not vertical
    static SlopeFunc inf() { return SlopeFunc{true, RatFunc(0)}; }
    static SlopeFunc of(RatFunc t) { return SlopeFunc{false, std::move(t)}; }
};

// slope value at a point: nullopt encodes the vertical direction
using SlopeValue = std::optional<Rational>;

class FoliationPresentation {
  public:
    enum class Kind { FirstIntegral, ClosedForm, Slope };

    static FoliationPresentation first_integral(RatFunc u);
    static FoliationPresentation closed_form(RatFunc a, RatFunc b); // a dx + b dy, closed
    static FoliationPresentation slope(RatFunc theta);              // dy/dx = theta
    static FoliationPresentation vertical_slope();                  // leaves x = const

    Kind kind() const { return kind_; }
    const RatFunc& integral() const { return u_; }
    // defining 1-form omega = A dx + B dy
    std::pair<RatFunc, RatFunc> omega() const;
    // slope as a rational function (or the vertical symbol)
    SlopeFunc slope_func() const;
    // slope value at a point; throws when the presentation is undefined there
    SlopeValue slope_at(const Point& p) const;
    bool defined_at(const Point& p) const;
    // Taylor jet of a local first integral u with u(base) = 0 and
    // du(base) != 0, to order N
    Jet2 integral_jet(const Point& base, int N) const;
    bool has_rational_integral() const { return kind_ == Kind::FirstIntegral; }

    // pullback under the substitution (x,y) -> (f1, f2)
    FoliationPresentation pullback(const RatFunc& f1, const RatFunc& f2) const;

    std::string str() const;

  private:
    FoliationPresentation() = default;
    Kind kind_ = Kind::FirstIntegral;
    RatFunc u_;        // first integral
    RatFunc a_, b_;    // closed form components
    RatFunc theta_;    // slope
    bool vertical_ = false;
};

struct PlanarWeb {
    std::vector<FoliationPresentation> foliations;
    Point base{Rational(0), Rational(0)};

    int size() const { return (int)foliations.size(); }
    PlanarWeb with_base(Point b) const {
        PlanarWeb w = *this;
        w.base = std::move(b);
        return w;
    }
};

PlanarWeb make_web(std::vector<RatFunc> integrals, Point base = {Rational(0), Rational(0)});

struct ValidationReport {
    bool smooth_at_base = false;
    std::vector<SlopeValue> slopes;
    std::vector<std::pair<int, int>> coincident; // offending index pairs
    std::optional<Point> suggested_base;         // proposed when the given base fails
};

// checks pairwise distinct tangent directions at the base point; on failure at
// the given base, searches the rational grid {-3..3}/{1,2,3}^2 for a proposal
ValidationReport validate(const PlanarWeb& w);

std::vector<SlopeFunc> to_slopes(const PlanarWeb& w);

struct ImplicitWeb {
    UniPoly slopePoly; // degree k in p, squarefree
    Point base{Rational(0), Rational(0)};
    int degree() const { return slopePoly.degree(); }
};

// slopePoly = prod (p - theta_i); throws on vertical members
ImplicitWeb implicit_from_slopes(const PlanarWeb& w);

// resultant in p of the two slope polynomials; zero locus = tangency divisor.
// Throws when the webs share a common subweb.
BivarPoly tangency(const ImplicitWeb& w1, const ImplicitWeb& w2);

struct WebDiscriminant {
    BivarPoly divisor;    // discriminant of the slope polynomial, cleared to a polynomial
    BivarPoly squarefree; // its squarefree part
};

WebDiscriminant discriminant_web(const ImplicitWeb& w);

// all C(k,m) subwebs, order preserved inside each
std::vector<PlanarWeb> subwebs(const PlanarWeb& w, int m);

// affine chart rotation (x,y) -> (x + c y, y); moves the base point along
PlanarWeb chart_rotate(const PlanarWeb& w, const Rational& c);

// pullback of a web under the substitution map (x,y) -> (f1(x,y), f2(x,y));
// new_base must satisfy (f1,f2)(new_base) = w.base
PlanarWeb pullback_web(const PlanarWeb& w, const RatFunc& f1, const RatFunc& f2, const Point& new_base);

} // namespace webgeo
