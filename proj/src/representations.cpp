#include "weyl/representations.hpp"

#include <cmath>

#include "weyl/expm.hpp"

namespace weyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_dim(int dim) {
    if (dim < 2) throw InvalidDimension("representation dimension must be >= 2");
}

// Symmetric momentum window: k runs over (-ceil(dim/2)+1 .. floor(dim/2)).
int momentum_index(int k, int dim) { return k <= dim / 2 ? k : k - dim; }

}  // namespace

std::string rep_kind_name(RepKind kind) {
    switch (kind) {
        case RepKind::FockTruncated: return "fock";
        case RepKind::PeriodicGrid: return "grid";
        case RepKind::ClockShift: return "clock";
    }
    return "unknown";
}

double Representation::momentum_spacing() const {
    if (kind != RepKind::PeriodicGrid) throw Error("momentum_spacing: not a grid representation");
    return 2.0 * kPi * hbar / (dim * spacing);
}

Representation build_fock(int dim, double hbar) {
    require_dim(dim);
    if (hbar <= 0.0) throw Error("build_fock: hbar must be positive");

    Representation rep;
    rep.kind = RepKind::FockTruncated;
    rep.dim = dim;
    rep.hbar = hbar;
    rep.X = ComplexMatrix(dim, dim);
    rep.P = ComplexMatrix(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double w = std::sqrt(hbar * (n + 1) / 2.0);
        rep.X(n, n + 1) = w;
        rep.X(n + 1, n) = w;
        rep.P(n, n + 1) = ComplexScalar(0.0, -w);
        rep.P(n + 1, n) = ComplexScalar(0.0, w);
    }
    return rep;
}

Representation build_grid(int dim, double hbar, double spacing) {
    require_dim(dim);
    if (hbar <= 0.0) throw Error("build_grid: hbar must be positive");
    if (spacing <= 0.0) throw Error("build_grid: spacing must be positive");

    Representation rep;
    rep.kind = RepKind::PeriodicGrid;
    rep.dim = dim;
    rep.hbar = hbar;
    rep.spacing = spacing;

    rep.X = ComplexMatrix(dim, dim);
    for (int j = 0; j < dim; ++j) rep.X(j, j) = j * spacing;

    // P_{jl} = (1/dim) sum_k p_k omega^{k(j-l)}; filled for j <= l and
    // mirrored so Hermiticity is exact.
    const double dp = 2.0 * kPi * hbar / (dim * spacing);
    rep.P = ComplexMatrix(dim, dim);
    std::vector<ComplexScalar> row(static_cast<std::size_t>(dim));
    for (int delta = 0; delta < dim; ++delta) {
        ComplexScalar acc(0.0);
        for (int k = 0; k < dim; ++k) {
            const double pk = momentum_index(k, dim) * dp;
            const double angle = 2.0 * kPi * k * delta / dim;
            acc += pk * ComplexScalar(std::cos(angle), std::sin(angle));
        }
        row[static_cast<std::size_t>(delta)] = acc / static_cast<double>(dim);
    }
    for (int j = 0; j < dim; ++j) {
        rep.P(j, j) = row[0].real();
        for (int l = j + 1; l < dim; ++l) {
            const ComplexScalar v = std::conj(row[static_cast<std::size_t>(l - j)]);
            rep.P(j, l) = v;
            rep.P(l, j) = std::conj(v);
        }
    }
    return rep;
}

Representation build_clock_shift(int dim) {
    require_dim(dim);
    Representation rep;
    rep.kind = RepKind::ClockShift;
    rep.dim = dim;
    rep.U = ComplexMatrix(dim, dim);
    rep.V = ComplexMatrix(dim, dim);
    for (int j = 0; j < dim; ++j) {
        rep.U((j + 1) % dim, j) = 1.0;
        const double angle = 2.0 * kPi * j / dim;
        rep.V(j, j) = ComplexScalar(std::cos(angle), std::sin(angle));
    }
    return rep;
}

ComplexMatrix translation_unitary(const Representation& rep, double a) {
    if (!rep.has_xp()) throw Error("translation_unitary: representation has no P operator");
    return matrix_exp(rep.P * ComplexScalar(0.0, -a / rep.hbar));
}

ComplexMatrix boost_unitary(const Representation& rep, double g) {
    if (!rep.has_xp()) throw Error("boost_unitary: representation has no X operator");
    return matrix_exp(rep.X * ComplexScalar(0.0, g / rep.hbar));
}

EigenBasis position_basis(const Representation& rep) {
    if (rep.kind == RepKind::PeriodicGrid) {
        EigenBasis b;
        b.vectors = ComplexMatrix::identity(rep.dim);
        b.values.resize(static_cast<std::size_t>(rep.dim));
        for (int j = 0; j < rep.dim; ++j) b.values[static_cast<std::size_t>(j)] = j * rep.spacing;
        return b;
    }
    if (rep.kind == RepKind::FockTruncated) {
        EigenDecomposition d = hermitian_eigen(rep.X);
        return {std::move(d.values), std::move(d.vectors)};
    }
    throw Error("position_basis: clock-shift representation has no X operator");
}

EigenBasis momentum_basis(const Representation& rep) {
    if (rep.kind == RepKind::PeriodicGrid) {
        const int dim = rep.dim;
        const double dp = rep.momentum_spacing();
        EigenBasis b;
        b.vectors = ComplexMatrix(dim, dim);
        b.values.resize(static_cast<std::size_t>(dim));
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        // Column order is ascending momentum; phi_{p_k}[j] = omega^{jk}/sqrt(dim).
        int col = 0;
        const int k_lo = -((dim + 1) / 2) + 1;
        for (int k = k_lo; k <= dim / 2; ++k, ++col) {
            b.values[static_cast<std::size_t>(col)] = k * dp;
            for (int j = 0; j < dim; ++j) {
                const double angle = 2.0 * kPi * j * k / dim;
                b.vectors(j, col) = scale * ComplexScalar(std::cos(angle), std::sin(angle));
            }
        }
        return b;
    }
    if (rep.kind == RepKind::FockTruncated) {
        EigenDecomposition d = hermitian_eigen(rep.P);
        return {std::move(d.values), std::move(d.vectors)};
    }
    throw Error("momentum_basis: clock-shift representation has no P operator");
}

StateVector gaussian_packet(const Representation& rep, double x0, double p0, double sigma,
                            double chirp) {
    if (rep.kind != RepKind::PeriodicGrid) throw Error("gaussian_packet: grid representation required");
    if (sigma <= 0.0) throw Error("gaussian_packet: sigma must be positive");
    const double box = rep.box_length();
    std::vector<ComplexScalar> amp(static_cast<std::size_t>(rep.dim));
    for (int j = 0; j < rep.dim; ++j) {
        const double x = j * rep.spacing;
        double d = std::fmod(x - x0, box);
        if (d < -box / 2.0) d += box;
        if (d >= box / 2.0) d -= box;
        const double mag = std::exp(-d * d / (4.0 * sigma * sigma));
        const double phase = (p0 * x + chirp * d * d) / rep.hbar;
        amp[static_cast<std::size_t>(j)] = mag * ComplexScalar(std::cos(phase), std::sin(phase));
    }
    return StateVector(std::move(amp));
}

StateVector coherent_state(const Representation& rep, ComplexScalar alpha) {
    if (rep.kind != RepKind::FockTruncated) throw Error("coherent_state: Fock representation required");
    if (std::norm(alpha) > rep.dim / 4.0)
        throw TruncationWeightTooLarge("coherent_state: |alpha|^2 exceeds dim/4");
    std::vector<ComplexScalar> amp(static_cast<std::size_t>(rep.dim));
    ComplexScalar c(1.0);
    double total = 0.0;
    for (int n = 0; n < rep.dim; ++n) {
        amp[static_cast<std::size_t>(n)] = c;
        total += std::norm(c);
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    const double tail = (std::norm(amp[static_cast<std::size_t>(rep.dim - 1)]) +
                         std::norm(amp[static_cast<std::size_t>(rep.dim - 2)])) /
                        total;
    if (tail > 1e-6)
        throw TruncationWeightTooLarge("coherent_state: top-two-level weight exceeds 1e-6");
    return StateVector(std::move(amp));
}

}  // namespace weyl
