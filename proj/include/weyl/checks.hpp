#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weyl/representations.hpp"

namespace weyl {

// Indeterminacy data for one (representation, state) pair.
//   generalized_bound = (|<{Xc,Pc}>|/2)^2 + (|<[X,P]>|/2)^2   (Xc, Pc centered)
//   ideal_bound       = (hbar/2)^2 + covariance^2
// The generalized bound is the exact Cauchy-Schwarz statement and holds for
// any Hermitian pair in any dimension; the ideal bound assumes the literal
// i hbar commutator and is only approximate in truncated representations.
struct UncertaintyReport {
    double var_x = 0.0;
    double var_p = 0.0;
    double covariance = 0.0;
    ComplexScalar commutator_expectation{0.0, 0.0};
    double generalized_bound = 0.0;
    double ideal_bound = 0.0;
    double generalized_slack = 0.0;
    double ideal_slack = 0.0;
};

UncertaintyReport uncertainty_check(const Representation& rep, const StateVector& state);

struct ParamValue {
    enum class Kind { Number, Text, Flag };
    Kind kind = Kind::Number;
    double number = 0.0;
    std::string text;
    bool flag = false;

    static ParamValue num(double v) {
        ParamValue p;
        p.kind = Kind::Number;
        p.number = v;
        return p;
    }
    static ParamValue str(std::string v) {
        ParamValue p;
        p.kind = Kind::Text;
        p.text = std::move(v);
        return p;
    }
    static ParamValue boolean(bool v) {
        ParamValue p;
        p.kind = Kind::Flag;
        p.flag = v;
        return p;
    }
};

// Named verification result. pass is always max_deviation <= tolerance;
// informational reports (asserted = false) never gate an exit code.
struct CheckReport {
    std::string name;
    std::string rep;
    int dim = 0;
    double hbar = 0.0;
    std::map<std::string, ParamValue> params;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool asserted = true;
    std::vector<std::pair<std::string, double>> details;

    void seal() { pass = max_deviation <= tolerance; }
};

// Guarded subspace on which approximate identities are measured. Full-matrix
// deviations cannot be small in finite dimension (wrap seam / truncation
// corner), so checks restrict to interior packets or low ladder levels.
struct Guard {
    enum class Kind { Full, LevelFraction, InteriorPacket };
    Kind kind = Kind::Full;
    double level_fraction = 0.5;    // bottom share of ladder levels kept
    double sigma_fraction = 0.05;   // packet width as share of the box

    static Guard full() { return {}; }
    static Guard levels(double fraction) { return {Kind::LevelFraction, fraction, 0.05}; }
    static Guard packet(double sigma_fraction = 0.05) {
        return {Kind::InteriorPacket, 0.5, sigma_fraction};
    }
};

// F(X+aI) vs U_a^dag F(X) U_a for a real polynomial F, measured on a probe
// state (grid: interior packet; Fock: coherent state). tol < 0 selects the
// per-representation default (grid 1e-6, Fock 1e-3).
CheckReport generator_conjugation_check(const Representation& rep, const std::vector<double>& coeffs,
                                        double a, double tol = -1.0,
                                        const StateVector* probe = nullptr);

// [X, U_a] - a U_a under the requested guard, relative to |a|.
CheckReport shift_commutator_check(const Representation& rep, double a,
                                   const Guard& guard = Guard::full(), double tol = 1e-6);

// U_{steps*spacing} permutes the position basis cyclically; deviation is
// 1 - min fidelity.
CheckReport eigen_shift_check(const Representation& rep, int steps, double tol = 1e-10);
// Same, from a raw displacement; throws NonCommensurate unless a is an
// integer multiple of the grid spacing (within 1e-9 relative).
CheckReport eigen_shift_check(const Representation& rep, double a, double tol = 1e-10);

// || V_g U_a - exp(i a g / hbar) U_a V_g ||_op, plus the commute_flag <->
// integral ag/(2 pi hbar) consistency assertion (an inconsistent pair
// contributes deviation 1 so the report fails).
CheckReport weyl_relation_check(const Representation& rep, double a, double g, double tol = 1e-10,
                                double commute_tol = 1e-10);
// Clock-shift native version with integer step counts: U_a = U^a, V_g = V^g,
// expected phase omega^{a g}.
CheckReport weyl_relation_check(const Representation& rep, int a_steps, int g_steps,
                                double tol = 1e-10, double commute_tol = 1e-10);

// max | sqrt(dim) |<phi_x, phi_p>| - 1 | over all pairs. Exact for the grid;
// informational (asserted = false) for Fock, where truncation breaks
// unbiasedness.
CheckReport mub_check(const Representation& rep, double tol = 1e-10);

// Entrywise deviation of <phi_x, phi_p> from (1/sqrt(dim)) exp(i x p / hbar)
// under the declared phase convention; the fitted constant K is reported.
CheckReport overlap_kernel_check(const Representation& rep, double tol = 1e-10);

// Pre-limit derivative identity on the grid:
// (G[j+1][k]-G[j][k])/spacing = (exp(i p_k spacing/hbar)-1)/spacing * G[j][k].
CheckReport finite_difference_derivative_check(const Representation& rep, double tol = 1e-12);

// Eigenvalue-spacing shrinkage at fixed box length. An illustration of the
// continuum limit, not a proof; labeled as such in the report.
CheckReport spectrum_densification_sweep(const std::vector<int>& dims, double box_length,
                                         RepKind kind = RepKind::PeriodicGrid, double hbar = 1.0);

// Bundles the exact symbolic identities ([X^n,P], [F,P] = i hbar F',
// iterated commutators, conjugation series vs binomial shift) into one
// reportable suite; deviation counts failed cases.
CheckReport symbolic_suite(unsigned max_n, unsigned samples, std::uint64_t seed);

// Random unit state with standard complex Gaussian amplitudes.
StateVector random_state(int dim, std::mt19937_64& rng);

// Worst normalized Cauchy-Schwarz violation over `count` random states:
// max(0, -generalized_slack) / scale^4 with scale = max(||X||, ||P||).
CheckReport uncertainty_slack_batch(const Representation& rep, int count, std::uint64_t seed,
                                    double tol = 1e-10);

}  // namespace weyl
