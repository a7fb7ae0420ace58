#include "webgeo/jets.hpp"

#include <sstream>
#include <stdexcept>

namespace webgeo {

namespace {

void require_same(const Jet2& a, const Jet2& b) {
    if (a.base() != b.base()) throw std::invalid_argument("Jet2: mismatched base points");
}

} // namespace

bool Jet2::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

Jet2 Jet2::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    Jet2 r(base_, new_order);
    for (int d = 0; d <= new_order; ++d)
        for (int j = 0; j <= d; ++j) r.set(d - j, j, at(d - j, j));
    return r;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
    require_same(a, b);
    int n = std::min(a.order(), b.order());
    Jet2 r = a.truncated(n);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) r.set(d - j, j, r.at(d - j, j) + b.at(d - j, j));
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    require_same(a, b);
    int n = std::min(a.order(), b.order());
    Jet2 r = a.truncated(n);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) r.set(d - j, j, r.at(d - j, j) - b.at(d - j, j));
    return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    require_same(a, b);
    int n = std::min(a.order(), b.order());
    Jet2 r(a.base(), n);
    for (int da = 0; da <= n; ++da) {
        for (int ja = 0; ja <= da; ++ja) {
            const Rational& ca = a.at(da - ja, ja);
            if (ca.is_zero()) continue;
            for (int db = 0; db + da <= n; ++db) {
                for (int jb = 0; jb <= db; ++jb) {
                    const Rational& cb = b.at(db - jb, jb);
                    if (cb.is_zero()) continue;
                    int i = da - ja + db - jb, j = ja + jb;
                    r.set(i, j, r.at(i, j) + ca * cb);
                }
            }
        }
    }
    return r;
}

Jet2 Jet2::operator-() const {
    Jet2 r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Jet2 Jet2::scaled(const Rational& v) const {
    Jet2 r = *this;
    for (auto& w : r.c_) w *= v;
    return r;
}

bool operator==(const Jet2& a, const Jet2& b) {
    return a.base() == b.base() && a.order() == b.order() && a.c_ == b.c_;
}

Jet2 Jet2::inverse() const {
    if (value().is_zero()) throw std::domain_error("Jet2::inverse: zero value at base point");
    Rational c0 = value();
    Jet2 r = scaled(c0.inv());
    r.c_[0] -= Rational(1); // r = u/c0 - 1, zero constant term
    Jet2 acc = Jet2::constant(Rational(1), base_, order_);
    Jet2 pw = Jet2::constant(Rational(1), base_, order_);
    for (int k = 1; k <= order_; ++k) {
        pw = pw * (-r);
        acc = acc + pw;
    }
    return acc.scaled(c0.inv());
}

Jet2 Jet2::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Jet2 r = Jet2::constant(Rational(1), base_, order_);
    Jet2 b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Jet2 Jet2::derivative_x() const {
    Jet2 r(base_, order_ > 0 ? order_ - 1 : 0);
    for (int d = 1; d <= order_; ++d)
        for (int j = 0; j < d; ++j) {
            int i = d - j;
            if (i - 1 + j <= r.order()) r.set(i - 1, j, at(i, j) * Rational(i));
        }
    return r;
}

Jet2 Jet2::derivative_y() const {
    Jet2 r(base_, order_ > 0 ? order_ - 1 : 0);
    for (int d = 1; d <= order_; ++d)
        for (int j = 1; j <= d; ++j) {
            int i = d - j;
            if (i + j - 1 <= r.order()) r.set(i, j - 1, at(i, j) * Rational(j));
        }
    return r;
}

std::string Jet2::str(const std::string& xn, const std::string& yn) const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= order_; ++d)
        for (int j = 0; j <= d; ++j) {
            const Rational& v = at(d - j, j);
            if (v.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << v.str();
            if (d - j > 0) os << "*" << xn << (d - j > 1 ? "^" + std::to_string(d - j) : "");
            if (j > 0) os << "*" << yn << (j > 1 ? "^" + std::to_string(j) : "");
        }
    if (first) os << "0";
    return os.str();
}

Jet2 expand(const RatFunc& f, const Point& base, int N) {
    BivarPoly ns = f.num().shift(base.first, base.second);
    BivarPoly ds = f.den().shift(base.first, base.second);
    if (ds.coeff(0, 0).is_zero())
        throw std::domain_error("expand: pole at base point (denominator " + f.den().str() + " vanishes)");
    auto to_jet = [&](const BivarPoly& p) {
        Jet2 j(base, N);
        for (const auto& [m, c] : p.terms())
            if (m.deg() <= N) j.set(m.i, m.j, c);
        return j;
    };
    return to_jet(ns) * to_jet(ds).inverse();
}

JetForm differential(const Jet2& u) { return JetForm{u.derivative_x(), u.derivative_y()}; }

Jet2 compose_uni(const std::vector<Rational>& g, const Jet2& u) {
    if (!u.value().is_zero()) throw std::domain_error("compose_uni: inner jet has nonzero constant term");
    Jet2 acc = Jet2::constant(Rational(0), u.base(), u.order());
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
        acc = acc * u;
        acc.set(0, 0, acc.value() + *it);
    }
    return acc;
}

Jet2 exp_jet(const Jet2& u) {
    if (!u.value().is_zero()) throw std::domain_error("exp_jet: nonzero constant term");
    Jet2 acc = Jet2::constant(Rational(1), u.base(), u.order());
    Jet2 pw = Jet2::constant(Rational(1), u.base(), u.order());
    Rational fact(1);
    for (int k = 1; k <= u.order(); ++k) {
        pw = pw * u;
        fact *= Rational(k);
        acc = acc + pw.scaled(fact.inv());
    }
    return acc;
}

Jet2 log1p_jet(const Jet2& u) {
    if (!u.value().is_zero()) throw std::domain_error("log1p_jet: nonzero constant term");
    Jet2 acc = Jet2::constant(Rational(0), u.base(), u.order());
    Jet2 pw = Jet2::constant(Rational(1), u.base(), u.order());
    for (int k = 1; k <= u.order(); ++k) {
        pw = pw * u;
        acc = acc + pw.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
    }
    return acc;
}

Jet2 primitive_of_closed(const JetForm& omega) {
    const Jet2 &a = omega.a, &b = omega.b;
    if (a.base() != b.base() || a.order() != b.order())
        throw std::invalid_argument("primitive_of_closed: component mismatch");
    int N = a.order();
    Jet2 day = a.derivative_y(), dbx = b.derivative_x();
    for (int d = 0; d < N && d <= day.order(); ++d)
        for (int j = 0; j <= d; ++j)
            if (day.at(d - j, j) != dbx.at(d - j, j))
                throw std::domain_error("primitive_of_closed: form is not closed at monomial x^" +
                                        std::to_string(d - j) + "*y^" + std::to_string(j));
    Jet2 P(a.base(), N);
    for (int d = 1; d <= N; ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            if (i >= 1) {
                P.set(i, j, a.at(i - 1, j) / Rational(i));
            } else {
                P.set(0, j, b.at(0, j - 1) / Rational(j));
            }
        }
    return P;
}

Jet2 lift_root(const UniPoly& G, const Rational& seed, const Point& base, int N) {
    std::vector<Jet2> cj;
    for (const auto& cf : G.coeffs()) cj.push_back(expand(cf, base, N));
    auto eval_at = [&](const Jet2& Y) {
        Jet2 acc = Jet2::constant(Rational(0), base, N);
        for (auto it = cj.rbegin(); it != cj.rend(); ++it) acc = acc * Y + *it;
        return acc;
    };
    std::vector<Jet2> cdj;
    for (size_t d = 1; d < cj.size(); ++d) cdj.push_back(cj[d].scaled(Rational((long)d)));
    auto eval_dat = [&](const Jet2& Y) {
        Jet2 acc = Jet2::constant(Rational(0), base, N);
        for (auto it = cdj.rbegin(); it != cdj.rend(); ++it) acc = acc * Y + *it;
        return acc;
    };
    Jet2 Y = Jet2::constant(seed, base, N);
    Jet2 g0 = eval_at(Y);
    if (!g0.value().is_zero()) throw std::domain_error("lift_root: seed is not a root at the base point");
    Jet2 d0 = eval_dat(Y);
    if (d0.value().is_zero()) throw std::domain_error("lift_root: multiple root (derivative vanishes at seed)");
    int steps = 1;
    while ((1 << steps) <= N) ++steps;
    for (int s = 0; s <= steps; ++s) Y = Y - eval_at(Y) * eval_dat(Y).inverse();
    return Y;
}

// ---------------------------------------------------------------------------

bool UniSeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order(), b.order());
    UniSeries r(n);
    for (int d = 0; d <= n; ++d) r.set(d, a.coeff(d) + b.coeff(d));
    return r;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order(), b.order());
    UniSeries r(n);
    for (int d = 0; d <= n; ++d) r.set(d, a.coeff(d) - b.coeff(d));
    return r;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order(), b.order());
    UniSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

UniSeries UniSeries::operator-() const {
    UniSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UniSeries UniSeries::scaled(const Rational& v) const {
    UniSeries r = *this;
    for (auto& w : r.c_) w *= v;
    return r;
}

UniSeries UniSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("UniSeries::inverse: zero constant term");
    UniSeries r(order_);
    r.set(0, c_[0].inv());
    for (int d = 1; d <= order_; ++d) {
        Rational s(0);
        for (int k = 1; k <= d; ++k) s += c_[k] * r.coeff(d - k);
        r.set(d, -s / c_[0]);
    }
    return r;
}

std::string UniSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= order_; ++d) {
        if (c_[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[d].str();
        if (d > 0) os << "*" << var << (d > 1 ? "^" + std::to_string(d) : "");
    }
    if (first) os << "0";
    return os.str();
}

UniSeries eval_at_series(const Jet2& u, const UniSeries& dx, const UniSeries& dy) {
    if (!dx.coeff(0).is_zero() || !dy.coeff(0).is_zero())
        throw std::invalid_argument("eval_at_series: displacements must vanish at t=0");
    int n = std::min(dx.order(), dy.order());
    std::vector<UniSeries> px(u.order() + 1, UniSeries::constant(Rational(1), n));
    std::vector<UniSeries> py(u.order() + 1, UniSeries::constant(Rational(1), n));
    for (int k = 1; k <= u.order(); ++k) {
        px[k] = px[k - 1] * dx;
        py[k] = py[k - 1] * dy;
    }
    UniSeries acc(n);
    for (int d = 0; d <= u.order(); ++d)
        for (int j = 0; j <= d; ++j) {
            const Rational& c = u.at(d - j, j);
            if (c.is_zero()) continue;
            acc = acc + (px[d - j] * py[j]).scaled(c);
        }
    return acc;
}

} // namespace webgeo
