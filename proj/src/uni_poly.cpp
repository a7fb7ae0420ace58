#include "webgeo/uni_poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "webgeo/linalg.hpp"

namespace webgeo {

void UniPoly::set_coeff(int d, const RatFunc& v) {
    if (d < 0) throw std::invalid_argument("UniPoly: negative degree");
    if ((int)c_.size() <= d) c_.resize(d + 1, RatFunc(0));
    c_[d] = v;
    normalize();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<RatFunc> c(a.c_.size() + b.c_.size() - 1, RatFunc(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c), a.var_);
}

UniPoly UniPoly::operator-() const {
    std::vector<RatFunc> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(-v);
    return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::scaled(const RatFunc& f) const {
    std::vector<RatFunc> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * f);
    return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(var_);
    std::vector<RatFunc> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * RatFunc(Rational((long)i));
    return UniPoly(std::move(c), var_);
}

RatFunc UniPoly::eval(const RatFunc& v) const {
    RatFunc acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    UniPoly r = *this;
    UniPoly q(var_);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        RatFunc f = r.leading() / d.leading();
        UniPoly t(var_);
        t.set_coeff(shift, f);
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

std::string UniPoly::str(const std::string& xn, const std::string& yn) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const RatFunc& c = c_[d];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = c.is_constant() && c.constant_value().is_one();
        if (!unit || d == 0) os << "(" << c.str(xn, yn) << ")";
        if (d > 0) {
            if (!unit) os << "*";
            os << var_;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

RatFunc resultant(const UniPoly& P, const UniPoly& Q) {
    if (P.is_zero() || Q.is_zero()) throw std::domain_error("resultant: zero polynomial input");
    int m = P.degree(), n = Q.degree();
    if (m == 0 && n == 0) return RatFunc(1);
    if (m == 0) return P.coeff(0).pow(n);
    if (n == 0) return Q.coeff(0).pow(m);
    Mat<RatFunc> S(m + n, m + n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) S.at(r, r + k) = P.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S.at(n + r, r + k) = Q.coeff(n - k);
    return S.det();
}

RatFunc discriminant(const UniPoly& P) {
    int m = P.degree();
    if (m < 2) throw std::domain_error("discriminant: degree must be at least 2");
    if (P.leading().is_zero()) throw std::domain_error("discriminant: zero leading coefficient");
    RatFunc r = resultant(P, P.derivative()) / P.leading();
    // sign fixed so that a p^2 + b p + c gives exactly b^2 - 4ac
    if ((m * (m - 1) / 2) % 2 != 0) r = -r;
    return r;
}

namespace {

// integer factorization: trial division then Pollard rho (mpz arithmetic)
void factor_into(mpz_t n, std::map<std::string, std::pair<std::string, int>>& acc);

void add_factor(const mpz_t f, std::map<std::string, std::pair<std::string, int>>& acc, int mult = 1) {
    char* s = mpz_get_str(nullptr, 10, f);
    std::string key(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, key.size() + 1);
    auto it = acc.find(key);
    if (it == acc.end())
        acc[key] = {key, mult};
    else
        it->second.second += mult;
}

void pollard_rho(const mpz_t n, mpz_t factor) {
    mpz_t x, y, d, c, t, n1;
    mpz_inits(x, y, d, c, t, n1, nullptr);
    mpz_sub_ui(n1, n, 1);
    unsigned long seed = 2;
    while (true) {
        mpz_set_ui(x, 2);
        mpz_set_ui(y, 2);
        mpz_set_ui(d, 1);
        mpz_set_ui(c, seed);
        while (mpz_cmp_ui(d, 1) == 0) {
            mpz_mul(t, x, x);
            mpz_add(t, t, c);
            mpz_mod(x, t, n);
            mpz_mul(t, y, y);
            mpz_add(t, t, c);
            mpz_mod(y, t, n);
            mpz_mul(t, y, y);
            mpz_add(t, t, c);
            mpz_mod(y, t, n);
            mpz_sub(t, x, y);
            mpz_abs(t, t);
            if (mpz_sgn(t) == 0) break;
            mpz_gcd(d, t, n);
        }
        if (mpz_cmp(d, n) != 0 && mpz_cmp_ui(d, 1) > 0) {
            mpz_set(factor, d);
            break;
        }
        ++seed;
    }
    mpz_clears(x, y, d, c, t, n1, nullptr);
}

void factor_into(mpz_t n, std::map<std::string, std::pair<std::string, int>>& acc) {
    if (mpz_cmp_ui(n, 1) == 0) return;
    if (mpz_probab_prime_p(n, 30)) {
        add_factor(n, acc);
        return;
    }
    // trial division for small primes
    for (unsigned long p = 2; p < 100000; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(n, p)) {
            mpz_t f;
            mpz_init_set_ui(f, p);
            while (mpz_divisible_ui_p(n, p)) {
                add_factor(f, acc);
                mpz_divexact_ui(n, n, p);
            }
            mpz_clear(f);
            if (mpz_cmp_ui(n, 1) == 0) return;
            if (mpz_probab_prime_p(n, 30)) {
                add_factor(n, acc);
                return;
            }
        }
        mpz_t sq;
        mpz_init(sq);
        mpz_sqrt(sq, n);
        bool done = mpz_cmp_ui(sq, p) < 0;
        mpz_clear(sq);
        if (done) {
            if (mpz_cmp_ui(n, 1) > 0) add_factor(n, acc);
            return;
        }
    }
    mpz_t f, rest;
    mpz_inits(f, rest, nullptr);
    pollard_rho(n, f);
    mpz_divexact(rest, n, f);
    factor_into(f, acc);
    factor_into(rest, acc);
    mpz_clears(f, rest, nullptr);
}

std::vector<Rational> divisors_of(const Rational& value) {
    // positive divisors of |value| (an integer)
    mpz_t n;
    mpz_init(n);
    mpz_abs(n, mpq_numref(value.raw()));
    std::map<std::string, std::pair<std::string, int>> fac;
    if (mpz_cmp_ui(n, 1) > 0) factor_into(n, fac);
    mpz_clear(n);
    std::vector<Rational> divs{Rational(1)};
    for (const auto& [k, pv] : fac) {
        Rational prime(pv.first);
        size_t base = divs.size();
        Rational pw(1);
        for (int e = 1; e <= pv.second; ++e) {
            pw = pw * prime;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly& P) {
    if (P.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rational> coeffs;
    for (const auto& c : P.coeffs()) {
        if (!c.is_constant()) throw std::domain_error("rational_roots: non-constant coefficient");
        coeffs.push_back(c.constant_value());
    }
    std::vector<Rational> roots;
    // strip roots at zero
    size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo].is_zero()) {
        roots.push_back(Rational(0));
        ++lo;
    }
    coeffs.erase(coeffs.begin(), coeffs.begin() + lo);
    if (coeffs.size() <= 1) return roots;
    // clear to a primitive integer polynomial
    Rational g(0);
    for (const auto& c : coeffs)
        if (!c.is_zero()) g = g.is_zero() ? c.abs() : Rational::content_gcd(g, c);
    for (auto& c : coeffs) c /= g;

    auto eval_at = [&](const std::vector<Rational>& cs, const Rational& r) {
        Rational acc(0);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * r + *it;
        return acc;
    };
    auto deflate = [&](std::vector<Rational>& cs, const Rational& r) {
        // synthetic division by (t - r)
        std::vector<Rational> q(cs.size() - 1, Rational(0));
        Rational carry(0);
        for (int i = (int)cs.size() - 1; i >= 1; --i) {
            carry = cs[i] + carry * r;
            q[i - 1] = carry;
        }
        cs = q;
    };

    std::vector<Rational> candidates;
    for (const auto& pnum : divisors_of(coeffs.front()))
        for (const auto& pden : divisors_of(coeffs.back())) {
            Rational c = pnum / pden;
            candidates.push_back(c);
            candidates.push_back(-c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& cand : candidates) {
        while (coeffs.size() > 1 && eval_at(coeffs, cand).is_zero()) {
            roots.push_back(cand);
            deflate(coeffs, cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace webgeo
