#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "webgeo/rat_func.hpp"
#include "webgeo/uni_poly.hpp"

using namespace webgeo;

namespace {

RatFunc X() { return RatFunc::var_x(); }
RatFunc Y() { return RatFunc::var_y(); }

std::mt19937 rng(20240911);

RatFunc random_ratfunc() {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 2);
    auto rnd_poly = [&] {
        BivarPoly p;
        for (int t = 0; t < 4; ++t) p += BivarPoly::monomial(expo(rng), expo(rng), Rational(coeff(rng)));
        return p;
    };
    BivarPoly d;
    while (d.is_zero()) d = rnd_poly();
    return RatFunc(rnd_poly(), d);
}

} // namespace

TEST_CASE("rational basics") {
    Rational a(3, 6);
    CHECK(a == Rational(1, 2));
    CHECK(a.str() == "1/2");
    CHECK((Rational(2, 3) + Rational(1, 6)) == Rational(5, 6));
    CHECK((Rational(-4, 8)).str() == "-1/2");
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK_THROWS(Rational(1, 1) / Rational(0));
    CHECK(Rational("22/7") * Rational(7) == Rational(22));
}

TEST_CASE("bivar poly arithmetic and canonical order") {
    BivarPoly p = BivarPoly::var_x() * BivarPoly::var_x() + BivarPoly::var_y();
    CHECK(p.str() == "x^2 + y");
    CHECK(p.total_degree() == 2);
    BivarPoly q = p * p;
    CHECK(q.coeff(2, 1) == Rational(2));
    CHECK(q.eval(Rational(2), Rational(3)) == Rational(49));
    CHECK((p - p).is_zero());
}

TEST_CASE("bivar gcd and exact division") {
    BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
    BivarPoly f = (x + y) * (x - y);
    BivarPoly g = (x + y) * (x * x + BivarPoly(Rational(1)));
    BivarPoly d = BivarPoly::gcd(f, g);
    CHECK(d == x + y);
    CHECK(*f.divided_by(x + y) == x - y);
    CHECK(!f.divided_by(x + BivarPoly(Rational(1))).has_value());
    CHECK(BivarPoly::gcd(x * y, y * y) == y);
    CHECK(((x + y) * (x + y) * (x - y)).squarefree_part() == (x + y) * (x - y));
}

TEST_CASE("ratfunc reduction is canonical and idempotent") {
    BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
    RatFunc f((x * x - y * y), (x - y));
    CHECK(f == RatFunc(x + y));
    RatFunc g(x, y.scaled(Rational(-2)));
    // denominator normalized to positive leading coefficient
    CHECK(g.den().leading_coeff() > Rational(0));
    RatFunc again(g.num(), g.den());
    CHECK(again == g);
    CHECK(g.str() == "-1/2*x/y");
}

TEST_CASE("derivative examples") {
    RatFunc f = X().pow(2) * Y();
    CHECK(f.derivative_x() == RatFunc(2) * X() * Y());
    RatFunc g = RatFunc(1) / (X() - Y());
    CHECK(g.derivative_y() == (RatFunc(1) / (X() - Y())).pow(2));
    RatFunc h = X() / Y();
    CHECK(h.derivative_x().derivative_y() == h.derivative_y().derivative_x());
}

TEST_CASE("derivative is a derivation (randomized)") {
    for (int trial = 0; trial < 20; ++trial) {
        RatFunc f = random_ratfunc(), g = random_ratfunc();
        RatFunc lhs = (f * g).derivative_x();
        RatFunc rhs = f.derivative_x() * g + f * g.derivative_x();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resultant via sylvester matrix") {
    UniPoly P({RatFunc(-1), RatFunc(1)}, "p"); // p - 1
    UniPoly Q({RatFunc(1), RatFunc(1)}, "p");  // p + 1
    CHECK(resultant(P, Q) == RatFunc(2));

    UniPoly Px({-X(), RatFunc(1)}, "p");
    UniPoly Py({-Y(), RatFunc(1)}, "p");
    CHECK(resultant(Px, Py) == X() - Y());

    CHECK(resultant(Px, Px).is_zero());
    CHECK_THROWS(resultant(UniPoly("p"), Px));
}

TEST_CASE("resultant swap sign rule") {
    std::uniform_int_distribution<int> cf(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        UniPoly P("p"), Q("p");
        int m = 1 + trial % 3, n = 1 + (trial / 2) % 3;
        for (int i = 0; i <= m; ++i) P.set_coeff(i, RatFunc(Rational(cf(rng))));
        for (int i = 0; i <= n; ++i) Q.set_coeff(i, RatFunc(Rational(cf(rng))));
        P.set_coeff(m, RatFunc(Rational(1 + std::abs(cf(rng)))));
        Q.set_coeff(n, RatFunc(Rational(1 + std::abs(cf(rng)))));
        RatFunc r1 = resultant(P, Q), r2 = resultant(Q, P);
        RatFunc expect = (P.degree() * Q.degree()) % 2 == 0 ? r1 : -r1;
        CHECK(r2 == expect);
    }
}

TEST_CASE("discriminant normalization") {
    // a p^2 + b p + c -> b^2 - 4ac with symbolic a=x, b=y, c=1
    UniPoly P({RatFunc(1), Y(), X()}, "p");
    CHECK(discriminant(P) == Y() * Y() - RatFunc(4) * X());

    // (p - x)(p - y) -> (x - y)^2
    UniPoly Q({X() * Y(), -(X() + Y()), RatFunc(1)}, "p");
    CHECK(discriminant(Q) == (X() - Y()) * (X() - Y()));

    // p^2 - x -> 4x
    UniPoly R({-X(), RatFunc(0), RatFunc(1)}, "p");
    CHECK(discriminant(R) == RatFunc(4) * X());

    CHECK_THROWS(discriminant(UniPoly({X(), RatFunc(1)}, "p")));
}

TEST_CASE("discriminant of split products (randomized roots)") {
    std::uniform_int_distribution<int> cf(-6, 6);
    for (int trial = 0; trial < 8; ++trial) {
        // distinct rational roots
        std::vector<Rational> roots;
        while (roots.size() < 3) {
            Rational r(cf(rng), 1 + std::abs(cf(rng)) % 3);
            bool dup = false;
            for (const auto& s : roots) dup = dup || s == r;
            if (!dup) roots.push_back(r);
        }
        UniPoly P({RatFunc(1)}, "p");
        for (const auto& r : roots) P = P * UniPoly({RatFunc(-Rational(r)), RatFunc(1)}, "p");
        RatFunc expect(1);
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j) {
                Rational d = roots[i] - roots[j];
                expect = expect * RatFunc(d * d);
            }
        CHECK(discriminant(P) == expect);
    }
}

TEST_CASE("rational roots with multiplicity") {
    // lambda (lambda-1)^2 (lambda-2)^2 (lambda-4)(lambda-6)
    UniPoly L = UniPoly::variable("lam");
    auto lin = [](long r) { return UniPoly({RatFunc(Rational(-r)), RatFunc(1)}, "lam"); };
    UniPoly P = L * lin(1) * lin(1) * lin(2) * lin(2) * lin(4) * lin(6);
    auto roots = rational_roots(P);
    std::vector<Rational> expect{Rational(0), Rational(1), Rational(1), Rational(2),
                                 Rational(2), Rational(4), Rational(6)};
    CHECK(roots == expect);

    UniPoly none({RatFunc(1), RatFunc(0), RatFunc(1)}, "lam"); // lam^2 + 1
    CHECK(rational_roots(none).empty());

    UniPoly half({RatFunc(-3), RatFunc(2)}, "lam"); // 2 lam - 3
    auto r = rational_roots(half);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == Rational(3, 2));
}

TEST_CASE("unipoly division") {
    UniPoly P({RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)}, "p"); // p^3 + 1
    UniPoly D({RatFunc(1), RatFunc(1)}, "p");                         // p + 1
    auto [q, r] = P.divmod(D);
    CHECK(r.is_zero());
    CHECK(q * D == P);
}
