#include "weyl/expm.hpp"

#include <cmath>

namespace weyl {

namespace {

constexpr double kNormCap = 1.0e4;   // supported input range (Frobenius)
constexpr double kTheta = 0.25;      // scale target for the Taylor core

bool is_diagonal(const ComplexMatrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j && a(i, j) != ComplexScalar(0.0)) return false;
    return true;
}

}  // namespace

ComplexMatrix matrix_exp(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("matrix_exp: matrix not square");
    if (!is_finite(a)) throw Error("matrix_exp: non-finite entries");
    const int n = a.rows();

    if (is_diagonal(a)) {
        ComplexMatrix r(n, n);
        for (int i = 0; i < n; ++i) r(i, i) = std::exp(a(i, i));
        return r;
    }

    const double norm = frobenius_norm(a);
    if (norm > kNormCap) throw NormTooLarge("matrix_exp: input norm above supported range");

    int squarings = 0;
    double scaled = norm;
    while (scaled > kTheta) {
        scaled *= 0.5;
        ++squarings;
    }
    ComplexMatrix b = a * ComplexScalar(std::ldexp(1.0, -squarings));

    // Taylor series at ||b|| <= theta; terms fall below 1e-18 within ~16 steps.
    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 64; ++k) {
        term = term * b;
        term *= ComplexScalar(1.0 / k);
        result += term;
        if (frobenius_norm(term) <= 1e-18 * frobenius_norm(result)) break;
    }

    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace weyl
