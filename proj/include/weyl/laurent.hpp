#pragma once

#include <map>

#include "weyl/rational.hpp"

namespace weyl {

// Finite Laurent series in hbar with GaussianRational coefficients.
// Negative powers are admitted: the (-i/hbar) prefactors of iterated
// commutators pass through here before they cancel. Zero coefficients are
// never stored, so the empty map is the canonical zero.
class HbarLaurent {
public:
    HbarLaurent() = default;

    static HbarLaurent constant(GaussianRational c) { return single(0, std::move(c)); }

    static HbarLaurent single(int power, GaussianRational c) {
        HbarLaurent l;
        if (!c.is_zero()) l.coeffs_.emplace(power, std::move(c));
        return l;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<int, GaussianRational>& coeffs() const { return coeffs_; }

    // True when the series is a plain hbar^0 scalar (or zero).
    bool is_constant() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }

    void add_term(int power, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(power);
        if (it == coeffs_.end()) {
            coeffs_.emplace(power, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    HbarLaurent& operator+=(const HbarLaurent& o) {
        for (const auto& [p, c] : o.coeffs_) add_term(p, c);
        return *this;
    }
    HbarLaurent& operator-=(const HbarLaurent& o) {
        for (const auto& [p, c] : o.coeffs_) add_term(p, -c);
        return *this;
    }

    HbarLaurent operator-() const {
        HbarLaurent r;
        for (const auto& [p, c] : coeffs_) r.coeffs_.emplace(p, -c);
        return r;
    }

    friend HbarLaurent operator+(HbarLaurent a, const HbarLaurent& b) { return a += b; }
    friend HbarLaurent operator-(HbarLaurent a, const HbarLaurent& b) { return a -= b; }

    friend HbarLaurent operator*(const HbarLaurent& a, const HbarLaurent& b) {
        HbarLaurent r;
        for (const auto& [pa, ca] : a.coeffs_)
            for (const auto& [pb, cb] : b.coeffs_) r.add_term(pa + pb, ca * cb);
        return r;
    }

    friend HbarLaurent operator*(const HbarLaurent& a, const GaussianRational& s) {
        HbarLaurent r;
        for (const auto& [p, c] : a.coeffs_) r.add_term(p, c * s);
        return r;
    }

    friend bool operator==(const HbarLaurent& a, const HbarLaurent& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const HbarLaurent& a, const HbarLaurent& b) { return !(a == b); }

private:
    std::map<int, GaussianRational> coeffs_;
};

}  // namespace weyl
