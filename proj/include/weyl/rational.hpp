#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace weyl {

// Exact arbitrary-precision rational. Arithmetic via GMP; results are kept
// in canonical reduced form (positive denominator, gcd 1).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational rational_binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    return r;  // base canonical => base^exp canonical
}

// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long n) : re(n), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_imaginary() const { return re == 0 && im != 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational d = b.re * b.re + b.im * b.im;  // nonzero unless b == 0
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational gaussian_pow(const GaussianRational& base, unsigned exp) {
    GaussianRational acc(1);
    GaussianRational sq = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) acc *= sq;
        e >>= 1u;
        if (e != 0) sq *= sq;
    }
    return acc;
}

}  // namespace weyl
