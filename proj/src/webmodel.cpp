#include "webgeo/webmodel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace webgeo {

FoliationPresentation FoliationPresentation::first_integral(RatFunc u) {
    FoliationPresentation f;
    f.kind_ = Kind::FirstIntegral;
    f.u_ = std::move(u);
    return f;
}

FoliationPresentation FoliationPresentation::closed_form(RatFunc a, RatFunc b) {
    if (a.derivative_y() != b.derivative_x())
        throw std::domain_error("closed_form: d(a dx + b dy) != 0");
    FoliationPresentation f;
    f.kind_ = Kind::ClosedForm;
    f.a_ = std::move(a);
    f.b_ = std::move(b);
    return f;
}

FoliationPresentation FoliationPresentation::slope(RatFunc theta) {
    FoliationPresentation f;
    f.kind_ = Kind::Slope;
    f.theta_ = std::move(theta);
    return f;
}

FoliationPresentation FoliationPresentation::vertical_slope() {
    FoliationPresentation f;
    f.kind_ = Kind::Slope;
    f.vertical_ = true;
    return f;
}

std::pair<RatFunc, RatFunc> FoliationPresentation::omega() const {
    switch (kind_) {
        case Kind::FirstIntegral: return {u_.derivative_x(), u_.derivative_y()};
        case Kind::ClosedForm: return {a_, b_};
        case Kind::Slope:
            if (vertical_) return {RatFunc(1), RatFunc(0)};
            return {-theta_, RatFunc(1)};
    }
    throw std::logic_error("unreachable");
}

SlopeFunc FoliationPresentation::slope_func() const {
    if (kind_ == Kind::Slope) return vertical_ ? SlopeFunc::inf() : SlopeFunc::of(theta_);
    auto [A, B] = omega();
    if (B.is_zero()) return SlopeFunc::inf();
    return SlopeFunc::of(-A / B);
}

bool FoliationPresentation::defined_at(const Point& p) const {
    auto [A, B] = omega();
    if (!A.defined_at(p.first, p.second) || !B.defined_at(p.first, p.second)) return false;
    return !(A.eval(p.first, p.second).is_zero() && B.eval(p.first, p.second).is_zero());
}

SlopeValue FoliationPresentation::slope_at(const Point& p) const {
    auto [A, B] = omega();
    if (!A.defined_at(p.first, p.second) || !B.defined_at(p.first, p.second))
        throw std::domain_error("slope_at: presentation undefined at the point (pole)");
    Rational av = A.eval(p.first, p.second), bv = B.eval(p.first, p.second);
    if (av.is_zero() && bv.is_zero())
        throw std::domain_error("slope_at: defining form vanishes at the point (zero gradient)");
    if (bv.is_zero()) return std::nullopt; // vertical
    return -av / bv;
}

Jet2 FoliationPresentation::integral_jet(const Point& base, int N) const {
    switch (kind_) {
        case Kind::FirstIntegral: {
            Jet2 j = expand(u_, base, N);
            j.set(0, 0, Rational(0));
            if (N >= 1 && j.at(1, 0).is_zero() && j.at(0, 1).is_zero())
                throw std::domain_error("integral_jet: first integral is not a submersion at base");
            return j;
        }
        case Kind::ClosedForm: {
            JetForm w{expand(a_, base, N), expand(b_, base, N)};
            if (w.a.value().is_zero() && w.b.value().is_zero())
                throw std::domain_error("integral_jet: closed form vanishes at base");
            return primitive_of_closed(w);
        }
        case Kind::Slope: {
            if (vertical_) {
                // leaves x = const: integral x - x0
                return Jet2::dx(base, N);
            }
            // solve u_x = -theta u_y with u(x0, y) = y - y0, degree-by-degree in x
            Jet2 th = expand(theta_, base, N);
            Jet2 u = Jet2::dy(base, N);
            for (int m = 0; m < N; ++m) {
                Jet2 rhs = th * u.derivative_y(); // need row m, uses columns <= m of u
                for (int j = 0; m + 1 + j <= N; ++j)
                    u.set(m + 1, j, -rhs.at(m, j) / Rational(m + 1));
            }
            return u;
        }
    }
    throw std::logic_error("unreachable");
}

FoliationPresentation FoliationPresentation::pullback(const RatFunc& f1, const RatFunc& f2) const {
    switch (kind_) {
        case Kind::FirstIntegral: return first_integral(u_.subst(f1, f2));
        case Kind::ClosedForm: {
            RatFunc a = a_.subst(f1, f2), b = b_.subst(f1, f2);
            return closed_form(a * f1.derivative_x() + b * f2.derivative_x(),
                               a * f1.derivative_y() + b * f2.derivative_y());
        }
        case Kind::Slope: {
            auto [A0, B0] = omega();
            RatFunc a = A0.subst(f1, f2), b = B0.subst(f1, f2);
            RatFunc A = a * f1.derivative_x() + b * f2.derivative_x();
            RatFunc B = a * f1.derivative_y() + b * f2.derivative_y();
            if (B.is_zero()) return vertical_slope();
            return slope(-A / B);
        }
    }
    throw std::logic_error("unreachable");
}

std::string FoliationPresentation::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::FirstIntegral: os << "[" << u_ << "]"; break;
        case Kind::ClosedForm: os << "[(" << a_ << ") dx + (" << b_ << ") dy]"; break;
        case Kind::Slope:
            if (vertical_)
                os << "[slope inf]";
            else
                os << "[slope " << theta_ << "]";
            break;
    }
    return os.str();
}

PlanarWeb make_web(std::vector<RatFunc> integrals, Point base) {
    PlanarWeb w;
    w.base = std::move(base);
    for (auto& u : integrals) w.foliations.push_back(FoliationPresentation::first_integral(std::move(u)));
    return w;
}

namespace {

bool web_smooth_at(const PlanarWeb& w, const Point& p) {
    std::vector<SlopeValue> sl;
    for (const auto& f : w.foliations) {
        if (!f.defined_at(p)) return false;
        try {
            sl.push_back(f.slope_at(p));
        } catch (const std::domain_error&) {
            return false;
        }
    }
    for (size_t i = 0; i < sl.size(); ++i)
        for (size_t j = i + 1; j < sl.size(); ++j)
            if (sl[i] == sl[j]) return false;
    return true;
}

std::optional<Point> search_base(const PlanarWeb& w) {
    for (long nx = -3; nx <= 3; ++nx)
        for (long dx = 1; dx <= 3; ++dx)
            for (long ny = -3; ny <= 3; ++ny)
                for (long dy = 1; dy <= 3; ++dy) {
                    Point cand{Rational(nx, dx), Rational(ny, dy)};
                    if (web_smooth_at(w, cand)) return cand;
                }
    return std::nullopt;
}

} // namespace

ValidationReport validate(const PlanarWeb& w) {
    if (w.size() < 2) throw std::invalid_argument("validate: a web needs at least two foliations");
    ValidationReport rep;
    for (int i = 0; i < w.size(); ++i) {
        if (!w.foliations[i].defined_at(w.base)) {
            auto sug = search_base(w);
            std::string hint = sug ? " (base " + sug->first.str() + "," + sug->second.str() + " would work)" : "";
            throw std::domain_error("validate: foliation " + std::to_string(i + 1) +
                                    " is undefined at the base point" + hint);
        }
    }
    for (const auto& f : w.foliations) rep.slopes.push_back(f.slope_at(w.base));
    for (size_t i = 0; i < rep.slopes.size(); ++i)
        for (size_t j = i + 1; j < rep.slopes.size(); ++j)
            if (rep.slopes[i] == rep.slopes[j]) rep.coincident.push_back({(int)i, (int)j});
    rep.smooth_at_base = rep.coincident.empty();
    if (!rep.smooth_at_base) rep.suggested_base = search_base(w);
    return rep;
}

std::vector<SlopeFunc> to_slopes(const PlanarWeb& w) {
    std::vector<SlopeFunc> out;
    for (const auto& f : w.foliations) out.push_back(f.slope_func());
    return out;
}

ImplicitWeb implicit_from_slopes(const PlanarWeb& w) {
    UniPoly poly({RatFunc(1)}, "p");
    for (const auto& f : w.foliations) {
        SlopeFunc s = f.slope_func();
        if (s.vertical)
            throw std::domain_error("implicit_from_slopes: vertical member; apply a chart rotation first");
        poly = poly * UniPoly({-s.theta, RatFunc(1)}, "p");
    }
    return ImplicitWeb{poly, w.base};
}

BivarPoly tangency(const ImplicitWeb& w1, const ImplicitWeb& w2) {
    RatFunc r = resultant(w1.slopePoly, w2.slopePoly);
    if (r.is_zero()) throw std::domain_error("tangency: webs share a common subweb");
    return r.num().primitive_part();
}

WebDiscriminant discriminant_web(const ImplicitWeb& w) {
    if (w.degree() < 2) throw std::domain_error("discriminant_web: degree must be at least 2");
    RatFunc d = discriminant(w.slopePoly);
    BivarPoly divisor = d.num().primitive_part();
    return WebDiscriminant{divisor, divisor.squarefree_part()};
}

std::vector<PlanarWeb> subwebs(const PlanarWeb& w, int m) {
    int k = w.size();
    if (m < 2 || m > k) throw std::invalid_argument("subwebs: need 2 <= m <= k");
    std::vector<PlanarWeb> out;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        PlanarWeb sub;
        sub.base = w.base;
        for (int i : idx) sub.foliations.push_back(w.foliations[i]);
        out.push_back(std::move(sub));
        int pos = m - 1;
        while (pos >= 0 && idx[pos] == k - m + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

PlanarWeb chart_rotate(const PlanarWeb& w, const Rational& c) {
    RatFunc f1 = RatFunc::var_x() + RatFunc(c) * RatFunc::var_y();
    RatFunc f2 = RatFunc::var_y();
    Point nb{w.base.first - c * w.base.second, w.base.second};
    return pullback_web(w, f1, f2, nb);
}

PlanarWeb pullback_web(const PlanarWeb& w, const RatFunc& f1, const RatFunc& f2, const Point& new_base) {
    Rational ex = f1.eval(new_base.first, new_base.second);
    Rational ey = f2.eval(new_base.first, new_base.second);
    if (ex != w.base.first || ey != w.base.second)
        throw std::invalid_argument("pullback_web: new base does not map to the old base");
    PlanarWeb out;
    out.base = new_base;
    for (const auto& f : w.foliations) out.foliations.push_back(f.pullback(f1, f2));
    return out;
}

} // namespace webgeo
