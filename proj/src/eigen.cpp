#include "weyl/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace weyl {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& h, double tol) {
    if (!h.is_square()) throw DimensionMismatch("hermitian_eigen: matrix not square");
    const int n = h.rows();
    if (n == 0) throw InvalidDimension("hermitian_eigen: empty matrix");

    const double scale = frobenius_norm(h);
    if (hermitian_defect(h) > tol * std::max(scale, 1e-300))
        throw NotHermitian("hermitian_eigen: matrix is not Hermitian within tolerance");

    // Work on the exactly Hermitian part; the defect is within tol anyway.
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = ComplexScalar(h(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            ComplexScalar v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int kMaxSweeps = 100;
    const double stop = 1e-14 * std::max(scale, 1e-300);
    bool converged = off_diagonal_norm(a) <= stop;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq <= 1e-18 * std::max(scale, 1e-300)) continue;

                // Unitary rotation in the (p,q) plane annihilating a(p,q).
                const ComplexScalar phase = a(p, q) / apq;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const ComplexScalar s_phase = s * phase;        // enters column q
                const ComplexScalar s_conj = s * std::conj(phase);

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double app_new = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                const double aqq_new = s * s * app + 2.0 * s * c * apq + c * c * aqq;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const ComplexScalar akp = a(k, p);
                    const ComplexScalar akq = a(k, q);
                    a(k, p) = akp * c - akq * s_conj;
                    a(k, q) = akp * s_phase + akq * c;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = app_new;
                a(q, q) = aqq_new;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const ComplexScalar vkp = v(k, p);
                    const ComplexScalar vkq = v(k, q);
                    v(k, p) = vkp * c - vkq * s_conj;
                    v(k, q) = vkp * s_phase + vkq * c;
                }
            }
        }
        converged = off_diagonal_norm(a) <= stop;
    }
    if (!converged) throw NoConvergence("hermitian_eigen: Jacobi sweep cap exceeded");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = ComplexMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        const int src = order[static_cast<std::size_t>(col)];
        out.values[static_cast<std::size_t>(col)] = a(src, src).real();

        int peak = 0;
        double peak_mag = -1.0;
        for (int k = 0; k < n; ++k) {
            const double mag = std::abs(v(k, src));
            if (mag > peak_mag + 1e-15) {
                peak_mag = mag;
                peak = k;
            }
        }
        ComplexScalar rot = 1.0;
        if (peak_mag > 0.0) rot = std::conj(v(peak, src)) / std::abs(v(peak, src));
        for (int k = 0; k < n; ++k) out.vectors(k, col) = v(k, src) * rot;
    }
    return out;
}

double operator_norm(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    const double f = frobenius_norm(m);
    if (f == 0.0) return 0.0;
    ComplexMatrix gram = adjoint(m) * m;
    EigenDecomposition d = hermitian_eigen(gram, 1e-9);
    double top = d.values.back();
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

}  // namespace weyl
