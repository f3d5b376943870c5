#include "weyl/polynomial.hpp"

#include <utility>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

// Normal-ordered form of the word P^n X^m, derived by single-adjacency
// rewriting P X -> X P - i hbar and memoized per (n, m). The rewrite strictly
// reduces the number of P..X inversions, so the recursion terminates.
const WeylPolynomial& normal_order_pn_xm(unsigned n, unsigned m) {
    thread_local std::map<std::pair<unsigned, unsigned>, WeylPolynomial> memo;
    auto key = std::make_pair(n, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    WeylPolynomial result;
    const GaussianRational one(1);
    if (n == 0 || m == 0) {
        result = WeylPolynomial::monomial({m, n}, HbarLaurent::constant(one));
    } else if (n == 1) {
        // P X^m = (P X) X^{m-1} = X (P X^{m-1}) - i hbar X^{m-1}
        const WeylPolynomial& tail = normal_order_pn_xm(1, m - 1);
        for (const auto& [mono, c] : tail.terms()) result.add_term({mono.xpow + 1, mono.ppow}, c);
        result.add_term({m - 1, 0}, HbarLaurent::single(1, -GaussianRational::unit_i()));
    } else {
        // P^n X^m = P^{n-1} (P X^m); left factor passes through each
        // normal-ordered term of the inner product.
        const WeylPolynomial& inner = normal_order_pn_xm(1, m);
        for (const auto& [mono, c] : inner.terms()) {
            const WeylPolynomial& left = normal_order_pn_xm(n - 1, mono.xpow);
            for (const auto& [lm, lc] : left.terms())
                result.add_term({lm.xpow, lm.ppow + mono.ppow}, lc * c);
        }
    }
    return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

WeylPolynomial WeylPolynomial::mul(const WeylPolynomial& a, const WeylPolynomial& b) {
    WeylPolynomial r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            HbarLaurent c = ca * cb;
            if (ma.ppow == 0 || mb.xpow == 0) {
                r.add_term({ma.xpow + mb.xpow, ma.ppow + mb.ppow}, c);
                continue;
            }
            const WeylPolynomial& mid = normal_order_pn_xm(ma.ppow, mb.xpow);
            for (const auto& [mm, cm] : mid.terms())
                r.add_term({ma.xpow + mm.xpow, mm.ppow + mb.ppow}, cm * c);
        }
    }
    return r;
}

WeylPolynomial commutator(const WeylPolynomial& a, const WeylPolynomial& b) {
    return WeylPolynomial::mul(a, b) - WeylPolynomial::mul(b, a);
}

WeylPolynomial anticommutator(const WeylPolynomial& a, const WeylPolynomial& b) {
    return WeylPolynomial::mul(a, b) + WeylPolynomial::mul(b, a);
}

WeylPolynomial deriv(const WeylPolynomial& a, Axis which) {
    WeylPolynomial r;
    for (const auto& [m, c] : a.terms()) {
        if (which == Axis::X) {
            if (m.xpow == 0) continue;
            r.add_term({m.xpow - 1, m.ppow}, c * GaussianRational(static_cast<long>(m.xpow)));
        } else {
            if (m.ppow == 0) continue;
            r.add_term({m.xpow, m.ppow - 1}, c * GaussianRational(static_cast<long>(m.ppow)));
        }
    }
    return r;
}

WeylPolynomial iterated_commutator(const WeylPolynomial& f, unsigned n) {
    const HbarLaurent minus_i_over_hbar = HbarLaurent::single(-1, -GaussianRational::unit_i());
    WeylPolynomial g = f;
    const WeylPolynomial p = WeylPolynomial::sym_p();
    for (unsigned k = 0; k < n; ++k) g = minus_i_over_hbar * commutator(g, p);
    return g;
}

WeylPolynomial conjugate_series(const WeylPolynomial& f, const GaussianRational& a, unsigned order) {
    WeylPolynomial acc;
    WeylPolynomial g = f;
    const WeylPolynomial p = WeylPolynomial::sym_p();
    const HbarLaurent minus_i_over_hbar = HbarLaurent::single(-1, -GaussianRational::unit_i());
    GaussianRational weight(1);  // a^n / n!
    for (unsigned n = 0;; ++n) {
        acc += weight * g;
        if (n == order) break;
        g = minus_i_over_hbar * commutator(g, p);
        weight = weight * a / GaussianRational(Rational(static_cast<long>(n) + 1));
    }
    return acc;
}

WeylPolynomial taylor_shift(const WeylPolynomial& f, const GaussianRational& a) {
    if (!f.is_x_only()) throw Error("taylor_shift: polynomial has P dependence");
    WeylPolynomial r;
    for (const auto& [m, c] : f.terms()) {
        for (unsigned j = 0; j <= m.xpow; ++j) {
            GaussianRational w = gaussian_pow(a, m.xpow - j) * GaussianRational(rational_binomial(m.xpow, j));
            r.add_term({j, 0}, c * w);
        }
    }
    return r;
}

WeylPolynomial poly_pow(const WeylPolynomial& f, unsigned long exp) {
    WeylPolynomial acc = WeylPolynomial::one();
    WeylPolynomial sq = f;
    while (exp != 0) {
        if (exp & 1ul) acc = WeylPolynomial::mul(acc, sq);
        exp >>= 1ul;
        if (exp != 0) sq = WeylPolynomial::mul(sq, sq);
    }
    return acc;
}

}  // namespace weyl
