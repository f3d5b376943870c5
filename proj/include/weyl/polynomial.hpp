#pragma once

#include <compare>
#include <map>

#include "weyl/laurent.hpp"

namespace weyl {

// Normal-ordered monomial X^xpow P^ppow (every X to the left of every P).
struct WeylMonomial {
    unsigned xpow = 0;
    unsigned ppow = 0;

    friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

enum class Axis { X, P };

// Noncommutative polynomial in the generators X, P of the relation
// X P - P X = i hbar, kept in canonical normal order. Two polynomials are
// equal iff their term maps are structurally identical.
class WeylPolynomial {
public:
    WeylPolynomial() = default;

    static WeylPolynomial zero() { return {}; }
    static WeylPolynomial one() { return constant(GaussianRational(1)); }
    static WeylPolynomial sym_x() { return monomial({1, 0}, HbarLaurent::constant(GaussianRational(1))); }
    static WeylPolynomial sym_p() { return monomial({0, 1}, HbarLaurent::constant(GaussianRational(1))); }
    static WeylPolynomial sym_hbar() { return scalar(HbarLaurent::single(1, GaussianRational(1))); }
    static WeylPolynomial imaginary_unit() { return constant(GaussianRational::unit_i()); }

    static WeylPolynomial constant(GaussianRational c) { return scalar(HbarLaurent::constant(std::move(c))); }

    static WeylPolynomial scalar(HbarLaurent c) { return monomial({0, 0}, std::move(c)); }

    static WeylPolynomial monomial(WeylMonomial m, HbarLaurent c) {
        WeylPolynomial p;
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    // True when no term carries a P factor.
    bool is_x_only() const {
        for (const auto& [m, c] : terms_)
            if (m.ppow != 0) return false;
        return true;
    }

    unsigned x_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_)
            if (m.xpow > d) d = m.xpow;
        return d;
    }

    const std::map<WeylMonomial, HbarLaurent>& terms() const { return terms_; }

    void add_term(const WeylMonomial& m, const HbarLaurent& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WeylPolynomial& operator+=(const WeylPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    WeylPolynomial& operator-=(const WeylPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    WeylPolynomial operator-() const {
        WeylPolynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend WeylPolynomial operator+(WeylPolynomial a, const WeylPolynomial& b) { return a += b; }
    friend WeylPolynomial operator-(WeylPolynomial a, const WeylPolynomial& b) { return a -= b; }
    friend WeylPolynomial operator*(const WeylPolynomial& a, const WeylPolynomial& b) { return mul(a, b); }

    friend WeylPolynomial operator*(const HbarLaurent& s, const WeylPolynomial& p) {
        WeylPolynomial r;
        for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
        return r;
    }
    friend WeylPolynomial operator*(const GaussianRational& s, const WeylPolynomial& p) {
        return HbarLaurent::constant(s) * p;
    }

    friend bool operator==(const WeylPolynomial& a, const WeylPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const WeylPolynomial& a, const WeylPolynomial& b) { return !(a == b); }

    // Product under the rewrite P X -> X P - i hbar; result is normal-ordered.
    static WeylPolynomial mul(const WeylPolynomial& a, const WeylPolynomial& b);

private:
    std::map<WeylMonomial, HbarLaurent> terms_;
};

WeylPolynomial commutator(const WeylPolynomial& a, const WeylPolynomial& b);
WeylPolynomial anticommutator(const WeylPolynomial& a, const WeylPolynomial& b);

// Formal partial derivative, applied termwise to normal-ordered monomials.
WeylPolynomial deriv(const WeylPolynomial& a, Axis which);

// Applies D(g) = (-i/hbar)[g, P] exactly n times. For f a polynomial in X
// only this equals the n-th formal derivative of f.
WeylPolynomial iterated_commutator(const WeylPolynomial& f, unsigned n);

// Truncated conjugation series  sum_{n=0}^{order} (a^n/n!) D^n(f).
WeylPolynomial conjugate_series(const WeylPolynomial& f, const GaussianRational& a, unsigned order);

// F(X) -> F(X+a) by exact binomial expansion. Throws Error if f has any P
// dependence.
WeylPolynomial taylor_shift(const WeylPolynomial& f, const GaussianRational& a);

// Raises f to a non-negative integer power.
WeylPolynomial poly_pow(const WeylPolynomial& f, unsigned long exp);

}  // namespace weyl
