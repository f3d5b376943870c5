#pragma once

#include <complex>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

using ComplexScalar = std::complex<double>;

// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    ComplexScalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const ComplexScalar& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    ComplexScalar* data() { return a_.data(); }
    const ComplexScalar* data() const { return a_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(ComplexScalar s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, ComplexScalar s) { return a *= s; }
    friend ComplexMatrix operator*(ComplexScalar s, ComplexMatrix a) { return a *= s; }
    ComplexMatrix operator-() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ComplexScalar> a_;
};

ComplexMatrix adjoint(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);

// Largest singular value, via the top eigenvalue of adjoint(m)*m.
double operator_norm(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);

bool is_finite(const ComplexMatrix& m);

// ||m - adjoint(m)||_F
double hermitian_defect(const ComplexMatrix& m);

// Unit vector in a dim-dimensional state space. Construction normalizes; a
// zero input is rejected.
class StateVector {
public:
    explicit StateVector(std::vector<ComplexScalar> amplitudes);

    static StateVector basis(int dim, int index);

    int dim() const { return static_cast<int>(amp_.size()); }
    const std::vector<ComplexScalar>& amplitudes() const { return amp_; }
    const ComplexScalar& operator[](int i) const { return amp_[static_cast<std::size_t>(i)]; }

private:
    std::vector<ComplexScalar> amp_;
};

std::vector<ComplexScalar> matvec(const ComplexMatrix& m, const std::vector<ComplexScalar>& v);

// <a, b>, conjugate-linear in the first slot.
ComplexScalar inner(const std::vector<ComplexScalar>& a, const std::vector<ComplexScalar>& b);

// <s, m s>
ComplexScalar expectation(const StateVector& s, const ComplexMatrix& m);

// ||(m - <m>) s||^2 for Hermitian m, clamped at zero.
double variance(const StateVector& s, const ComplexMatrix& m);

}  // namespace weyl
