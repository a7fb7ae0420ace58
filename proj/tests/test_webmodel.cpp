#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "webgeo/webmodel.hpp"

using namespace webgeo;

namespace {
RatFunc X() { return RatFunc::var_x(); }
RatFunc Y() { return RatFunc::var_y(); }
Point origin{Rational(0), Rational(0)};

PlanarWeb bol5(Point base = {Rational(2), Rational(3)}) {
    RatFunc one(1);
    return make_web({X(), Y(), X() / Y(), (one - Y()) / (one - X()), X() * (one - Y()) / (Y() * (one - X()))},
                    base);
}
} // namespace

TEST_CASE("validate W(x,y,x+y) at origin") {
    PlanarWeb w = make_web({X(), Y(), X() + Y()}, origin);
    auto rep = validate(w);
    CHECK(rep.smooth_at_base);
    REQUIRE(rep.slopes.size() == 3);
    CHECK(!rep.slopes[0].has_value()); // x = const leaves are vertical
    CHECK(rep.slopes[1] == Rational(0));
    CHECK(rep.slopes[2] == Rational(-1));
}

TEST_CASE("validate rejects equal members") {
    PlanarWeb w = make_web({X(), X() + RatFunc(1)}, origin);
    auto rep = validate(w);
    CHECK(!rep.smooth_at_base);
    REQUIRE(rep.coincident.size() == 1);
    CHECK(rep.coincident[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("validate names undefined foliations and suggests a base") {
    PlanarWeb w = make_web({X() / Y(), X()}, origin); // x/y undefined at origin
    CHECK_THROWS_WITH_AS(validate(w), doctest::Contains("foliation 1"), std::domain_error);
}

TEST_CASE("bol web is smooth at (2,3)") {
    auto rep = validate(bol5());
    CHECK(rep.smooth_at_base);
    REQUIRE(rep.slopes.size() == 5);
    CHECK(!rep.slopes[0].has_value());
    CHECK(rep.slopes[1] == Rational(0));
    CHECK(rep.slopes[2] == Rational(3, 2));
    CHECK(rep.slopes[3] == Rational(2));
    CHECK(rep.slopes[4] == Rational(3));
}

TEST_CASE("to_slopes") {
    PlanarWeb w = make_web({X() + Y(), X() * Y()}, {Rational(1), Rational(2)});
    auto sl = to_slopes(w);
    CHECK(!sl[0].vertical);
    CHECK(sl[0].theta == RatFunc(-1));
    CHECK(sl[1].theta == -Y() / X());

    // du = dx/x has vertical leaves x = const
    PlanarWeb v;
    v.base = {Rational(1), Rational(0)};
    v.foliations.push_back(FoliationPresentation::closed_form(RatFunc(1) / X(), RatFunc(0)));
    v.foliations.push_back(FoliationPresentation::first_integral(Y()));
    auto sv = to_slopes(v);
    CHECK(sv[0].vertical);
}

TEST_CASE("implicit_from_slopes") {
    PlanarWeb w;
    w.base = origin;
    w.foliations.push_back(FoliationPresentation::slope(RatFunc(0)));
    w.foliations.push_back(FoliationPresentation::slope(RatFunc(-1)));
    ImplicitWeb iw = implicit_from_slopes(w);
    // p(p+1)
    CHECK(iw.slopePoly.degree() == 2);
    CHECK(iw.slopePoly.coeff(0).is_zero());
    CHECK(iw.slopePoly.coeff(1) == RatFunc(1));
    CHECK(iw.slopePoly.coeff(2) == RatFunc(1));

    PlanarWeb vert = make_web({X(), Y()}, origin);
    CHECK_THROWS_WITH_AS(implicit_from_slopes(vert), doctest::Contains("chart"), std::domain_error);

    ImplicitWeb bq = implicit_from_slopes(chart_rotate(bol5(), Rational(1)));
    CHECK(bq.slopePoly.degree() == 5);
}

TEST_CASE("tangency divisors") {
    UniPoly P({RatFunc(0), RatFunc(1)}, "p");  // p
    UniPoly Q({X(), RatFunc(1)}, "p");         // p + x
    ImplicitWeb w1{P, origin}, w2{Q, origin};
    CHECK(tangency(w1, w2) == BivarPoly::var_x());

    UniPoly R({RatFunc(-1), RatFunc(1)}, "p"); // p - 1
    ImplicitWeb w3{R, origin};
    CHECK(tangency(w1, w3) == BivarPoly(Rational(-1)));
    CHECK_THROWS_WITH_AS(tangency(w1, w1), doctest::Contains("common subweb"), std::domain_error);
}

TEST_CASE("discriminant_web") {
    UniPoly P({-X(), RatFunc(0), RatFunc(1)}, "p"); // p^2 - x
    auto d = discriminant_web(ImplicitWeb{P, origin});
    CHECK(d.divisor == BivarPoly::var_x());

    // product of distinct constant slopes: nonzero constant discriminant
    UniPoly Q = UniPoly({RatFunc(0), RatFunc(1)}, "p") * UniPoly({RatFunc(-1), RatFunc(1)}, "p") *
                UniPoly({RatFunc(2), RatFunc(1)}, "p");
    auto dq = discriminant_web(ImplicitWeb{Q, origin});
    CHECK(dq.divisor.is_constant());
    CHECK(!dq.divisor.is_zero());
}

TEST_CASE("subweb enumeration counts") {
    PlanarWeb w5 = bol5();
    CHECK(subwebs(w5, 3).size() == 10);
    PlanarWeb w3 = make_web({X(), Y(), X() + Y()}, origin);
    CHECK(subwebs(w3, 3).size() == 1);
    PlanarWeb w9 = make_web({X(), Y(), X() + Y(), X() - Y(), X() + Y() * RatFunc(2), X() - Y() * RatFunc(2),
                             X() + Y() * RatFunc(3), X() - Y() * RatFunc(3), X() + Y() * RatFunc(4)},
                            origin);
    CHECK(subwebs(w9, 3).size() == 84);
    // ordering preserved
    auto ss = subwebs(w3, 2);
    CHECK(ss[0].foliations[0].integral() == X());
    CHECK(ss[0].foliations[1].integral() == Y());
}

TEST_CASE("slope route agrees with first-integral route (randomized)") {
    std::vector<RatFunc> us = {X() * Y() + X(), (X() + Y() * Y()) / (RatFunc(1) + X() * X()),
                               X() * X() * Y() - Y() * Y()};
    for (const auto& u : us) {
        auto f_int = FoliationPresentation::first_integral(u);
        SlopeFunc s = f_int.slope_func();
        REQUIRE(!s.vertical);
        auto f_closed = FoliationPresentation::closed_form(u.derivative_x(), u.derivative_y());
        CHECK(f_closed.slope_func().theta == s.theta);
        auto f_slope = FoliationPresentation::slope(s.theta);
        CHECK(f_slope.slope_func().theta == s.theta);
    }
}

TEST_CASE("discriminant vanishes exactly where two slopes collide") {
    PlanarWeb w;
    w.base = origin;
    std::vector<RatFunc> thetas{X(), Y(), X() + Y() * Y()};
    for (const auto& t : thetas) w.foliations.push_back(FoliationPresentation::slope(t));
    auto d = discriminant_web(implicit_from_slopes(w));
    BivarPoly expect(Rational(1));
    for (size_t i = 0; i < thetas.size(); ++i)
        for (size_t j = i + 1; j < thetas.size(); ++j) {
            RatFunc diff = thetas[i] - thetas[j];
            expect = expect * diff.num();
        }
    // same squarefree zero locus
    CHECK(d.squarefree == expect.squarefree_part());
}

TEST_CASE("chart rotation moves the base and kills vertical members") {
    PlanarWeb w = make_web({X(), Y(), X() + Y()}, {Rational(5), Rational(7)});
    PlanarWeb r = chart_rotate(w, Rational(2));
    CHECK(r.base.first == Rational(5) - Rational(2) * Rational(7));
    auto sl = to_slopes(r);
    CHECK(!sl[0].vertical);
    auto rep = validate(r);
    CHECK(rep.smooth_at_base);
}

TEST_CASE("first integral jets for slope presentations solve the leaf ODE") {
    auto f = FoliationPresentation::slope(X() + Y());
    int N = 7;
    Jet2 u = f.integral_jet(origin, N);
    CHECK(u.value().is_zero());
    // u_x + theta u_y = 0 to order N-1
    Jet2 th = expand(X() + Y(), origin, N);
    Jet2 lhs = u.derivative_x() + (th * u.derivative_y()).truncated(N - 1);
    CHECK(lhs.is_zero());
}
