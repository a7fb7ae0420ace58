// Exact arbitrary-precision rationals, backed by GMP's mpq_t.
// Values are always stored canonically: gcd(|num|, den) = 1, den > 0.
#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace webgeo {

class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, n, d);
        mpq_canonicalize(v_);
    }
    explicit Rational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0) {
            mpq_clear(v_);
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        if (mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw std::domain_error("Rational: zero denominator");
        }
        mpq_canonicalize(v_);
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    Rational abs() const {
        Rational r;
        mpq_abs(r.v_, v_);
        return r;
    }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.v_, v_);
        return r;
    }
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: 0^negative");
            return Rational(0);
        }
        Rational base = e < 0 ? inv() : *this;
        unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
        Rational r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), n);
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), n);
        return r;
    }

    // gcd on rationals: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); used for polynomial contents.
    static Rational content_gcd(const Rational& a, const Rational& b) {
        Rational r;
        mpz_gcd(mpq_numref(r.v_), mpq_numref(a.v_), mpq_numref(b.v_));
        mpz_lcm(mpq_denref(r.v_), mpq_denref(a.v_), mpq_denref(b.v_));
        mpq_canonicalize(r.v_);
        return r;
    }

    double to_double() const { return mpq_get_d(v_); }
    long num_long() const { return mpz_get_si(mpq_numref(v_)); }
    long den_long() const { return mpz_get_si(mpq_denref(v_)); }
    bool fits_long() const { return mpz_fits_slong_p(mpq_numref(v_)) && mpz_fits_slong_p(mpq_denref(v_)); }

    const mpq_t& raw() const { return v_; }
    mpq_t& raw() { return v_; }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }

  private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace webgeo
