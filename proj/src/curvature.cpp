#include "webgeo/curvature.hpp"

#include <stdexcept>

namespace webgeo {

TwoForm exterior_d(const OneForm& w) { return TwoForm{w.b.derivative_x() - w.a.derivative_y()}; }

namespace {

RatFunc wedge(const std::pair<RatFunc, RatFunc>& u, const std::pair<RatFunc, RatFunc>& v) {
    return u.first * v.second - v.first * u.second;
}

} // namespace

OneForm eta_form(const FoliationPresentation& f1, const FoliationPresentation& f2,
                 const FoliationPresentation& f3) {
    auto w1 = f1.omega(), w2 = f2.omega(), w3 = f3.omega();
    RatFunc d12 = wedge(w1, w2), d23 = wedge(w2, w3), d31 = wedge(w3, w1);
    if (d12.is_zero() || d23.is_zero() || d31.is_zero())
        throw std::domain_error("eta_form: two foliations coincide on a dense set");
    OneForm al1{d23 * w1.first, d23 * w1.second};
    OneForm al2{d31 * w2.first, d31 * w2.second};
    OneForm al3{d12 * w3.first, d12 * w3.second};
    RatFunc c1 = exterior_d(al1).coeff, c2 = exterior_d(al2).coeff, c3 = exterior_d(al3).coeff;
    // eta = h dx + g dy with h*B_i - g*A_i = c_i for i = 1,2
    RatFunc det = al1.b * (-al2.a) - (-al1.a) * al2.b;
    if (det.is_zero()) throw std::domain_error("eta_form: degenerate normalization system (web not quasi-smooth)");
    RatFunc h = (c1 * (-al2.a) - (-al1.a) * c2) / det;
    RatFunc g = (al1.b * c2 - c1 * al2.b) / det;
    if (h * al3.b - g * al3.a != c3)
        throw std::logic_error("eta_form: consistency identity d(alpha_3) = eta ^ alpha_3 failed");
    return OneForm{h, g};
}

TwoForm curvature3(const FoliationPresentation& f1, const FoliationPresentation& f2,
                   const FoliationPresentation& f3) {
    return exterior_d(eta_form(f1, f2, f3));
}

TwoForm blaschke_formula(const RatFunc& f) {
    RatFunc fx = f.derivative_x(), fy = f.derivative_y();
    if (fx.is_zero() || fy.is_zero()) throw std::domain_error("blaschke_formula: f_x or f_y vanishes identically");
    RatFunc u = fx / fy;
    // d/dy (u_x / u) as the exact form of d^2/(dx dy) log u
    return TwoForm{(u.derivative_x() / u).derivative_y()};
}

TwoForm mihaileanu_curvature(const PlanarWeb& w) {
    if (w.size() < 3) throw std::invalid_argument("mihaileanu_curvature: need at least 3 foliations");
    RatFunc sum(0);
    auto subs = subwebs(w, 3);
    for (const auto& s : subs)
        sum += curvature3(s.foliations[0], s.foliations[1], s.foliations[2]).coeff;
    return TwoForm{sum};
}

bool is_hexagonal(const PlanarWeb& w) {
    if (w.size() < 3) throw std::invalid_argument("is_hexagonal: need at least 3 foliations");
    for (const auto& s : subwebs(w, 3))
        if (!curvature3(s.foliations[0], s.foliations[1], s.foliations[2]).is_zero()) return false;
    return true;
}

namespace {

// follow the leaf of `mover` from P to the leaf of `target` through base;
// 2x2 Newton on the pair of displacement series
std::pair<UniSeries, UniSeries> leaf_step(const Jet2& mover, const Jet2& target,
                                          const std::pair<UniSeries, UniSeries>& P) {
    int n = P.first.order();
    UniSeries X(n), Y(n); // displacement of the unknown point
    UniSeries rhs_a = eval_at_series(mover, P.first, P.second);
    Jet2 ma_x = mover.derivative_x(), ma_y = mover.derivative_y();
    Jet2 tb_x = target.derivative_x(), tb_y = target.derivative_y();
    int steps = 1;
    while ((1 << steps) <= n) ++steps;
    for (int s = 0; s <= steps; ++s) {
        UniSeries Fa = eval_at_series(mover, X, Y) - rhs_a;
        UniSeries Fb = eval_at_series(target, X, Y); // target value at base is 0
        UniSeries J11 = eval_at_series(ma_x, X, Y), J12 = eval_at_series(ma_y, X, Y);
        UniSeries J21 = eval_at_series(tb_x, X, Y), J22 = eval_at_series(tb_y, X, Y);
        UniSeries det = J11 * J22 - J12 * J21;
        UniSeries dinv = det.inverse();
        X = X - dinv * (J22 * Fa - J12 * Fb);
        Y = Y - dinv * (J11 * Fb - J21 * Fa);
    }
    return {X, Y};
}

} // namespace

UniSeries holonomy_jet(const FoliationPresentation& f1, const FoliationPresentation& f2,
                       const FoliationPresentation& f3, const Point& base, int N) {
    Jet2 u1 = f1.integral_jet(base, N + 1);
    Jet2 u2 = f2.integral_jet(base, N + 1);
    Jet2 u3 = f3.integral_jet(base, N + 1);
    // start on the leaf of F2 through base, x-displacement t: solve u2(t, Y) = 0
    if (u2.at(0, 1).is_zero())
        throw std::domain_error("holonomy_jet: second foliation tangent to the carrier parametrization");
    UniSeries t = UniSeries::t(N);
    UniSeries Y0(N);
    {
        Jet2 u2y = u2.derivative_y();
        int steps = 1;
        while ((1 << steps) <= N) ++steps;
        for (int s = 0; s <= steps; ++s) {
            UniSeries F = eval_at_series(u2, t, Y0);
            UniSeries J = eval_at_series(u2y, t, Y0);
            Y0 = Y0 - F * J.inverse();
        }
    }
    std::pair<UniSeries, UniSeries> P{t, Y0};
    const Jet2* U[3] = {&u1, &u2, &u3};
    // steps: follow F3 to L(F1), F2 to L(F3), F1 to L(F2), twice
    const int seq[6][2] = {{2, 0}, {1, 2}, {0, 1}, {2, 0}, {1, 2}, {0, 1}};
    for (const auto& st : seq) P = leaf_step(*U[st[0]], *U[st[1]], P);
    return P.first;
}

SlopeFunc f_barycenter(const SlopeFunc& f, const std::vector<SlopeFunc>& slopes) {
    if (slopes.empty()) throw std::invalid_argument("f_barycenter: no directions given");
    long k = (long)slopes.size();
    if (f.vertical) {
        // affine mean of the slopes in the standard chart
        RatFunc sum(0);
        for (const auto& m : slopes) {
            if (m.vertical) throw std::domain_error("f_barycenter: direction coincides with f");
            sum += m.theta;
        }
        return SlopeFunc::of(sum / RatFunc(Rational(k)));
    }
    RatFunc zsum(0);
    for (const auto& m : slopes) {
        if (m.vertical) continue; // z(inf) = 0 contributes nothing
        RatFunc d = m.theta - f.theta;
        if (d.is_zero()) throw std::domain_error("f_barycenter: direction coincides with f");
        zsum += RatFunc(1) / d;
    }
    if (zsum.is_zero()) return SlopeFunc::inf(); // barycenter sits at the z = 0 direction
    return SlopeFunc::of(f.theta + RatFunc(Rational(k)) / zsum);
}

bool curve_invariant(const FoliationPresentation& f, const BivarPoly& C) {
    auto [A, B] = f.omega();
    RatFunc r = A * RatFunc(C.derivative_y()) - B * RatFunc(C.derivative_x());
    // invariance along {C = 0} means C divides the reduced numerator
    return r.is_zero() || r.num().divisible_by(C);
}

} // namespace webgeo
