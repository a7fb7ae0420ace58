#include "webgeo/bivar_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace webgeo {

namespace {

// univariate polynomials in y over Q, used by the bivariate gcd
using YPoly = std::vector<Rational>; // coefficient of y^d at index d

void ynorm(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly ymul(const YPoly& a, const YPoly& b) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ynorm(r);
    return r;
}

YPoly ysub(YPoly a, const YPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ynorm(a);
    return a;
}

YPoly yscale(YPoly a, const Rational& c) {
    for (auto& v : a) v *= c;
    ynorm(a);
    return a;
}

YPoly yrem(YPoly a, const YPoly& b) {
    ynorm(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        ynorm(a);
    }
    return a;
}

YPoly ymonic(YPoly a) {
    ynorm(a);
    if (a.empty()) return a;
    Rational l = a.back();
    for (auto& v : a) v /= l;
    return a;
}

YPoly ygcd(YPoly a, YPoly b) {
    ynorm(a);
    ynorm(b);
    while (!b.empty()) {
        YPoly r = yrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return ymonic(a);
}

// view in Q[y][x]: x-coefficients as YPolys, index = x-degree
std::vector<YPoly> to_xcoeffs(const BivarPoly& p) {
    std::vector<YPoly> out(static_cast<size_t>(std::max(0, p.degree_x() + 1)));
    for (const auto& [m, c] : p.terms()) {
        auto& yp = out[m.i];
        if ((int)yp.size() <= m.j) yp.resize(m.j + 1, Rational(0));
        yp[m.j] = c;
    }
    for (auto& yp : out) ynorm(yp);
    return out;
}

BivarPoly from_xcoeffs(const std::vector<YPoly>& v) {
    BivarPoly p;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v[i].size(); ++j) p.set_coeff((int)i, (int)j, v[i][j]);
    return p;
}

BivarPoly from_ypoly(const YPoly& v) {
    BivarPoly p;
    for (size_t j = 0; j < v.size(); ++j) p.set_coeff(0, (int)j, v[j]);
    return p;
}

int xdeg(const std::vector<YPoly>& v) {
    for (int i = (int)v.size() - 1; i >= 0; --i)
        if (!v[i].empty()) return i;
    return -1;
}

// content in Q[y] of p viewed in Q[y][x]
YPoly ycontent(const std::vector<YPoly>& xs) {
    YPoly g;
    for (const auto& c : xs)
        if (!c.empty()) g = g.empty() ? ymonic(c) : ygcd(g, c);
    return g;
}

// pseudo-remainder of a by b in Q[y][x] (b nonzero)
std::vector<YPoly> xprem(std::vector<YPoly> a, const std::vector<YPoly>& b) {
    int db = xdeg(b);
    const YPoly& lb = b[db];
    int da = xdeg(a);
    while (da >= db && da >= 0) {
        const YPoly la = a[da];
        // a = lb * a - la * x^(da-db) * b
        for (auto& c : a) c = ymul(c, lb);
        for (int i = 0; i <= db; ++i) a[da - db + i] = ysub(a[da - db + i], ymul(la, b[i]));
        a[da] = {};
        da = xdeg(a);
    }
    a.resize(std::max(0, da + 1));
    return a;
}

std::vector<YPoly> xprimitive(std::vector<YPoly> a) {
    YPoly c = ycontent(a);
    if (c.empty() || (c.size() == 1 && c[0].is_one())) return a;
    BivarPoly q = from_xcoeffs(a);
    auto d = q.divided_by(from_ypoly(c));
    return to_xcoeffs(*d);
}

} // namespace

int BivarPoly::degree_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.i);
    return d;
}

int BivarPoly::degree_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.j);
    return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Mono m{ma.i + mb.i, ma.j + mb.j};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rational v = ca * cb;
                if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BivarPoly BivarPoly::scaled(const Rational& c) const {
    BivarPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

BivarPoly BivarPoly::derivative_x() const {
    BivarPoly r;
    for (const auto& [m, c] : terms_)
        if (m.i > 0) r.terms_.emplace(Mono{m.i - 1, m.j}, c * Rational(m.i));
    return r;
}

BivarPoly BivarPoly::derivative_y() const {
    BivarPoly r;
    for (const auto& [m, c] : terms_)
        if (m.j > 0) r.terms_.emplace(Mono{m.i, m.j - 1}, c * Rational(m.j));
    return r;
}

BivarPoly BivarPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("BivarPoly::pow: negative exponent");
    BivarPoly r(Rational(1));
    BivarPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rational BivarPoly::eval(const Rational& x0, const Rational& y0) const {
    // Horner in x with y evaluated per coefficient
    Rational acc(0);
    int dx = degree_x();
    auto xs = to_xcoeffs(*this);
    for (int i = dx; i >= 0; --i) {
        Rational cy(0);
        const auto& yp = xs[i];
        for (int j = (int)yp.size() - 1; j >= 0; --j) cy = cy * y0 + yp[j];
        acc = acc * x0 + cy;
    }
    return acc;
}

double BivarPoly::eval_double(double x0, double y0) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (int k = 0; k < m.i; ++k) t *= x0;
        for (int k = 0; k < m.j; ++k) t *= y0;
        acc += t;
    }
    return acc;
}

BivarPoly BivarPoly::subst(const BivarPoly& fx, const BivarPoly& fy) const {
    // cache powers
    int dx = degree_x(), dy = degree_y();
    std::vector<BivarPoly> px(std::max(1, dx + 1)), py(std::max(1, dy + 1));
    px[0] = BivarPoly(Rational(1));
    for (int i = 1; i <= dx; ++i) px[i] = px[i - 1] * fx;
    py[0] = BivarPoly(Rational(1));
    for (int j = 1; j <= dy; ++j) py[j] = py[j - 1] * fy;
    BivarPoly r;
    for (const auto& [m, c] : terms_) r += (px[m.i] * py[m.j]).scaled(c);
    return r;
}

Rational BivarPoly::content() const {
    if (is_zero()) return Rational(1);
    Rational g(0);
    for (const auto& [m, c] : terms_) g = g.is_zero() ? c.abs() : Rational::content_gcd(g, c);
    if (leading_coeff().sign() < 0) g = -g;
    return g;
}

BivarPoly BivarPoly::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(content().inv());
}

std::optional<BivarPoly> BivarPoly::divided_by(const BivarPoly& d) const {
    if (d.is_zero()) throw std::domain_error("BivarPoly: division by zero polynomial");
    BivarPoly r = *this;
    BivarPoly q;
    const Mono dm = d.leading_mono();
    const Rational& dc = d.leading_coeff();
    while (!r.is_zero()) {
        Mono rm = r.leading_mono();
        if (rm.i < dm.i || rm.j < dm.j) return std::nullopt;
        Mono qm{rm.i - dm.i, rm.j - dm.j};
        Rational qc = r.leading_coeff() / dc;
        BivarPoly t = monomial(qm.i, qm.j, qc);
        q += t;
        r -= t * d;
    }
    return q;
}

BivarPoly BivarPoly::gcd(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return BivarPoly(Rational(1));

    auto xa = to_xcoeffs(a.primitive_part());
    auto xb = to_xcoeffs(b.primitive_part());
    if (xdeg(xa) == 0 && xdeg(xb) == 0) {
        // both univariate in y
        return from_ypoly(ygcd(xa[0], xb[0])).primitive_part();
    }
    YPoly cont_g = ygcd(ycontent(xa), ycontent(xb));
    auto A = xprimitive(xa);
    auto B = xprimitive(xb);
    if (xdeg(A) < xdeg(B)) std::swap(A, B);
    while (true) {
        if (xdeg(B) < 0) break;
        auto R = xprem(A, B);
        if (xdeg(R) < 0) {
            A = B;
            break;
        }
        A = B;
        B = xprimitive(R);
    }
    BivarPoly g = from_xcoeffs(A);
    g = g * from_ypoly(cont_g.empty() ? YPoly{Rational(1)} : cont_g);
    return g.primitive_part();
}

BivarPoly BivarPoly::squarefree_part() const {
    if (is_zero() || is_constant()) return primitive_part();
    BivarPoly g = gcd(gcd(*this, derivative_x()), gcd(*this, derivative_y()));
    auto q = divided_by(g);
    return q ? q->primitive_part() : primitive_part();
}

std::string BivarPoly::str(const std::string& xn, const std::string& yn) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_var = m.i > 0 || m.j > 0;
        if (!ac.is_one() || !has_var) {
            os << ac.str();
            if (has_var) os << "*";
        }
        if (m.i > 0) {
            os << xn;
            if (m.i > 1) os << "^" << m.i;
            if (m.j > 0) os << "*";
        }
        if (m.j > 0) {
            os << yn;
            if (m.j > 1) os << "^" << m.j;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivarPoly& p) { return os << p.str(); }

} // namespace webgeo
