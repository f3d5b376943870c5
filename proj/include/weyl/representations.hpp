#pragma once

#include <string>

#include "weyl/eigen.hpp"
#include "weyl/matrix.hpp"

namespace weyl {

enum class RepKind { FockTruncated, PeriodicGrid, ClockShift };

std::string rep_kind_name(RepKind kind);

// A concrete finite-dimensional realization. Fock and grid carry the
// Hermitian pair (X, P); clock-shift carries the unitary pair (U, V) with
// V U = omega U V, omega = exp(2 pi i / dim). Immutable after construction.
struct Representation {
    RepKind kind;
    int dim = 0;
    double hbar = 1.0;
    double spacing = 0.0;  // PeriodicGrid only

    ComplexMatrix X;
    ComplexMatrix P;
    ComplexMatrix U;
    ComplexMatrix V;

    bool has_xp() const { return kind != RepKind::ClockShift; }

    double box_length() const { return spacing * dim; }
    double momentum_spacing() const;  // 2 pi hbar / (dim * spacing)
};

struct EigenBasis {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // unitary columns
};

// X = sqrt(hbar/2)(a + a^dag), P = i sqrt(hbar/2)(a^dag - a) on the first
// dim ladder levels. [X,P] equals i hbar (I - dim E_{dim-1,dim-1}) exactly.
Representation build_fock(int dim, double hbar);

// X = diag(j * spacing); P = F^dag diag(p_k) F with the unitary DFT F and
// p_k = k * 2 pi hbar / (dim * spacing) over the symmetric k-window.
Representation build_grid(int dim, double hbar, double spacing);

// U = cyclic shift, V = diag(omega^j).
Representation build_clock_shift(int dim);

// U_a = exp(-(i/hbar) a P)
ComplexMatrix translation_unitary(const Representation& rep, double a);
// V_g = exp(+(i/hbar) g X)
ComplexMatrix boost_unitary(const Representation& rep, double g);

// Position eigenbasis: standard basis for the grid, diagonalized X for Fock.
EigenBasis position_basis(const Representation& rep);
// Momentum eigenbasis: conjugate DFT columns for the grid, diagonalized P for Fock.
EigenBasis momentum_basis(const Representation& rep);

// Normalized grid packet exp(-d^2/(4 sigma^2)) exp(i (p0 x + chirp d^2)/hbar)
// with d the periodic displacement from x0. chirp != 0 gives the quadratic
// phase that produces a nonzero position-momentum covariance.
StateVector gaussian_packet(const Representation& rep, double x0, double p0, double sigma,
                            double chirp = 0.0);

// Truncated coherent state, amplitudes ~ alpha^n / sqrt(n!). Rejects states
// leaking more than 1e-6 probability into the top two levels.
StateVector coherent_state(const Representation& rep, ComplexScalar alpha);

}  // namespace weyl
