#include "weyl/matrix.hpp"

#include <cmath>

namespace weyl {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidDimension("matrix dimensions must be non-negative");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), ComplexScalar(0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(ComplexScalar s) {
    for (auto& x : a_) x *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::operator-() const {
    ComplexMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matmul: inner dimensions differ");
    ComplexMatrix c(a.rows_, b.cols_);
    const int n = a.rows_, k_dim = a.cols_, m = b.cols_;
    for (int i = 0; i < n; ++i) {
        const ComplexScalar* arow = a.data() + static_cast<std::size_t>(i) * k_dim;
        ComplexScalar* crow = c.data() + static_cast<std::size_t>(i) * m;
        for (int k = 0; k < k_dim; ++k) {
            const ComplexScalar aik = arow[k];
            if (aik == ComplexScalar(0.0)) continue;
            const ComplexScalar* brow = b.data() + static_cast<std::size_t>(k) * m;
            for (int j = 0; j < m; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    const ComplexScalar* p = m.data();
    const std::size_t n = static_cast<std::size_t>(m.rows()) * m.cols();
    for (std::size_t i = 0; i < n; ++i) s += std::norm(p[i]);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
    double s = 0.0;
    const ComplexScalar* p = m.data();
    const std::size_t n = static_cast<std::size_t>(m.rows()) * m.cols();
    for (std::size_t i = 0; i < n; ++i) s = std::max(s, std::abs(p[i]));
    return s;
}

bool is_finite(const ComplexMatrix& m) {
    const ComplexScalar* p = m.data();
    const std::size_t n = static_cast<std::size_t>(m.rows()) * m.cols();
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(p[i].real()) || !std::isfinite(p[i].imag())) return false;
    return true;
}

double hermitian_defect(const ComplexMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("hermitian_defect: matrix not square");
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j) - std::conj(m(j, i)));
    return std::sqrt(s);
}

StateVector::StateVector(std::vector<ComplexScalar> amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.empty()) throw InvalidDimension("state vector must be non-empty");
    double n2 = 0.0;
    for (const auto& x : amp_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw Error("state vector has non-finite amplitude");
        n2 += std::norm(x);
    }
    if (n2 <= 0.0) throw Error("state vector has zero norm");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : amp_) x *= inv;
}

StateVector StateVector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) throw InvalidDimension("basis vector out of range");
    std::vector<ComplexScalar> v(static_cast<std::size_t>(dim), ComplexScalar(0.0));
    v[static_cast<std::size_t>(index)] = 1.0;
    return StateVector(std::move(v));
}

std::vector<ComplexScalar> matvec(const ComplexMatrix& m, const std::vector<ComplexScalar>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw DimensionMismatch("matvec: shape mismatch");
    std::vector<ComplexScalar> r(static_cast<std::size_t>(m.rows()), ComplexScalar(0.0));
    for (int i = 0; i < m.rows(); ++i) {
        const ComplexScalar* row = m.data() + static_cast<std::size_t>(i) * m.cols();
        ComplexScalar acc(0.0);
        for (int j = 0; j < m.cols(); ++j) acc += row[j] * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = acc;
    }
    return r;
}

ComplexScalar inner(const std::vector<ComplexScalar>& a, const std::vector<ComplexScalar>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("inner: length mismatch");
    ComplexScalar s(0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

ComplexScalar expectation(const StateVector& s, const ComplexMatrix& m) {
    if (m.rows() != s.dim() || m.cols() != s.dim())
        throw DimensionMismatch("expectation: operator/state dimension mismatch");
    return inner(s.amplitudes(), matvec(m, s.amplitudes()));
}

double variance(const StateVector& s, const ComplexMatrix& m) {
    if (m.rows() != s.dim() || m.cols() != s.dim())
        throw DimensionMismatch("variance: operator/state dimension mismatch");
    const double scale = frobenius_norm(m);
    if (hermitian_defect(m) > 1e-12 * std::max(scale, 1.0))
        throw NotHermitian("variance: operator is not Hermitian");
    const double mean = expectation(s, m).real();
    std::vector<ComplexScalar> w = matvec(m, s.amplitudes());
    double v = 0.0;
    for (int i = 0; i < s.dim(); ++i) v += std::norm(w[static_cast<std::size_t>(i)] - mean * s[i]);
    return v < 0.0 ? 0.0 : v;
}

}  // namespace weyl
