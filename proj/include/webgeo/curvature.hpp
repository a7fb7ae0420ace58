// Curvature of 3-webs via the unique eta form, Mihaileanu's k-web curvature,
// hexagonality, holonomy germs, F-barycenters and curve invariance.
//
// Translation note: the defining 1-forms here are omega = dy - theta dx for
// finite slope theta (and dx for vertical leaves); all formulas from sources
// using omega = dx + theta dy have been converted to this convention once.
#pragma once

#include "webgeo/webmodel.hpp"

namespace webgeo {

struct OneForm {
    RatFunc a, b; // a dx + b dy
};

struct TwoForm {
    RatFunc coeff; // coeff dx ^ dy
    bool is_zero() const { return coeff.is_zero(); }
};

// exterior derivative d(a dx + b dy) = (b_x - a_y) dx^dy
TwoForm exterior_d(const OneForm& w);

// The unique eta with d(alpha_i) = eta ^ alpha_i for the delta-normalized
// alpha_i = delta_jk omega_i (cyclic). Solved from the first two equations;
// the third is asserted as a consistency check. Eta depends on the chosen
// presentation, its differential does not.
OneForm eta_form(const FoliationPresentation& f1, const FoliationPresentation& f2,
                 const FoliationPresentation& f3);

TwoForm curvature3(const FoliationPresentation& f1, const FoliationPresentation& f2,
                   const FoliationPresentation& f3);

// d^2/(dx dy) log(f_x/f_y), computed with exact logarithmic derivatives;
// equals curvature3(W(x, y, f)).
TwoForm blaschke_formula(const RatFunc& f);

// K(W) = sum of curvature3 over all 3-subwebs
TwoForm mihaileanu_curvature(const PlanarWeb& w);

bool is_hexagonal(const PlanarWeb& w);

// First-return germ of the three-foliation cycle, as a jet h(t) = t + ...
// on the leaf of the second foliation through base, parametrized by the
// first-coordinate displacement. Permuting the foliations conjugates the
// germ to h or its inverse.
UniSeries holonomy_jet(const FoliationPresentation& f1, const FoliationPresentation& f2,
                       const FoliationPresentation& f3, const Point& base, int N);

// barycenter of the listed directions in the affine structure induced by f:
// with z(m) = 1/(m - f), z(m_beta) = mean of z(m_i). The vertical sentinel
// for f means the plain affine mean of the slopes. A zero z-mean makes the
// barycenter the z = 0 direction, reported as the reserved vertical value.
SlopeFunc f_barycenter(const SlopeFunc& f, const std::vector<SlopeFunc>& slopes);

// true iff omega_f ^ dC == 0 modulo C (exact polynomial divisibility)
bool curve_invariant(const FoliationPresentation& f, const BivarPoly& C);

} // namespace webgeo
