#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "weyl/checks.hpp"
#include "weyl/runner.hpp"

using weyl::CheckReport;
using weyl::ComplexMatrix;
using weyl::ComplexScalar;
using weyl::Guard;
using weyl::Representation;
using weyl::StateVector;
using weyl::UncertaintyReport;

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("gaussian packet: covariance vanishes and the product saturates") {
    const Representation rep = weyl::build_grid(128, 1.0, 1.0);
    const double sigma = 8.0;
    const StateVector packet = weyl::gaussian_packet(rep, 64.0, 0.0, sigma);
    const UncertaintyReport u = weyl::uncertainty_check(rep, packet);

    CHECK(std::abs(u.covariance) <= 1e-6 * rep.hbar);
    const double product = std::sqrt(u.var_x * u.var_p);
    CHECK(product >= 0.98 * rep.hbar / 2.0);
    CHECK(product <= 1.02 * rep.hbar / 2.0);
    CHECK(u.commutator_expectation.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(u.commutator_expectation.imag() == doctest::Approx(rep.hbar).epsilon(1e-3));
}

TEST_CASE("position basis state has zero variance and zero bound") {
    const Representation rep = weyl::build_grid(32, 1.0, 1.0);
    const UncertaintyReport u = weyl::uncertainty_check(rep, StateVector::basis(32, 7));
    CHECK(u.var_x <= 1e-20);
    CHECK(u.generalized_bound <= 1e-10);
    CHECK(std::abs(u.commutator_expectation) <= 1e-10);
}

TEST_CASE("chirped packet matches the continuum covariance and tightens the bound") {
    const Representation rep = weyl::build_grid(128, 1.0, 1.0);
    const double sigma = 8.0;
    const double chirp = 0.5 / (sigma * sigma);
    const StateVector packet = weyl::gaussian_packet(rep, 64.0, 0.0, sigma, chirp);
    const UncertaintyReport u = weyl::uncertainty_check(rep, packet);

    // Continuum oracle: covariance = 2 c sigma^2, here exactly 1.
    CHECK(u.covariance == doctest::Approx(2.0 * chirp * sigma * sigma).epsilon(0.02));
    const double floor = rep.hbar * rep.hbar / 4.0;
    CHECK(u.ideal_bound >= 1.1 * floor);
    // The chirped gaussian saturates the generalized bound.
    CHECK(u.generalized_slack <= 1e-6 * u.var_x * u.var_p);
    CHECK(u.generalized_slack >= -1e-10);
}

TEST_CASE("generalized slack is nonnegative for random states") {
    std::mt19937_64 seed_rng(2024);
    for (int dim : {8, 16, 32}) {
        for (bool fock : {false, true}) {
            const Representation rep =
                fock ? weyl::build_fock(dim, 1.0) : weyl::build_grid(dim, 1.0, 1.0);
            const CheckReport r = weyl::uncertainty_slack_batch(rep, 500, seed_rng());
            CAPTURE(dim);
            CAPTURE(fock);
            CHECK(r.pass);
            CHECK(r.max_deviation <= 1e-10);
        }
    }
}

TEST_CASE("hermitian plus antihermitian decomposition of the centered product") {
    const Representation rep = weyl::build_grid(16, 1.0, 1.0);
    std::mt19937_64 rng(55);
    const double scale =
        std::max(weyl::operator_norm(rep.X), weyl::operator_norm(rep.P));
    for (int t = 0; t < 50; ++t) {
        const StateVector s = weyl::random_state(16, rng);
        const double ex = expectation(s, rep.X).real();
        const double ep = expectation(s, rep.P).real();
        ComplexMatrix xc = rep.X;
        ComplexMatrix pc = rep.P;
        for (int i = 0; i < 16; ++i) {
            xc(i, i) -= ex;
            pc(i, i) -= ep;
        }
        const ComplexScalar full = expectation(s, xc * pc);
        const ComplexScalar anti = expectation(s, xc * pc + pc * xc) * ComplexScalar(0.5);
        const ComplexScalar comm = expectation(s, xc * pc - pc * xc) * ComplexScalar(0.5);
        CHECK(std::abs(full - (anti + comm)) <= 1e-10 * scale * scale);
        CHECK(std::abs(anti.imag()) <= 1e-10 * scale * scale);
        CHECK(std::abs(comm.real()) <= 1e-10 * scale * scale);
    }
}

TEST_CASE("generator conjugation: guarded deviations stay small") {
    const Representation fock = weyl::build_fock(128, 1.0);
    const CheckReport linear = weyl::generator_conjugation_check(fock, {0.0, 1.0}, 0.1);
    CHECK(linear.pass);
    CHECK(linear.max_deviation <= 1e-3);
    const CheckReport quad = weyl::generator_conjugation_check(fock, {0.0, 0.0, 1.0}, 0.1);
    CHECK(quad.max_deviation <= 1e-3);

    const Representation grid = weyl::build_grid(128, 1.0, 1.0);
    const CheckReport gq = weyl::generator_conjugation_check(grid, {0.0, 0.0, 1.0}, grid.spacing);
    CHECK(gq.max_deviation <= 1e-6);

    const CheckReport zero = weyl::generator_conjugation_check(grid, {0.0, 1.0}, 0.0);
    CHECK(zero.max_deviation <= 1e-14);
}

TEST_CASE("shift commutator: guards isolate the wrap defect") {
    const Representation grid = weyl::build_grid(128, 1.0, 1.0);

    const CheckReport zero = weyl::shift_commutator_check(grid, 0.0, Guard::full());
    CHECK(zero.max_deviation <= 1e-14);

    const CheckReport guarded = weyl::shift_commutator_check(grid, grid.spacing, Guard::packet());
    CHECK(guarded.pass);
    CHECK(guarded.max_deviation <= 1e-6);

    // Unguarded, the wrap seam dominates: the full-matrix fixture must fail.
    const CheckReport full = weyl::shift_commutator_check(grid, grid.spacing, Guard::full());
    CHECK(full.max_deviation >= 0.1);
    CHECK(!full.pass);

    const Representation fock = weyl::build_fock(128, 1.0);
    const CheckReport levels = weyl::shift_commutator_check(fock, 0.1, Guard::levels(0.25));
    CHECK(levels.pass);
    CHECK(levels.max_deviation <= 1e-6);
}

TEST_CASE("eigenvector shift fidelities") {
    const Representation rep = weyl::build_grid(8, 1.0, 1.0);
    CHECK(weyl::eigen_shift_check(rep, 0).max_deviation <= 1e-14);
    CHECK(weyl::eigen_shift_check(rep, 1).max_deviation <= 1e-10);
    CHECK(weyl::eigen_shift_check(rep, 8).max_deviation <= 1e-10);
    CHECK(weyl::eigen_shift_check(rep, -3).max_deviation <= 1e-10);
    CHECK(weyl::eigen_shift_check(rep, 1.0 * rep.spacing).pass);
    CHECK_THROWS_AS(weyl::eigen_shift_check(rep, 0.5 * rep.spacing), weyl::NonCommensurate);
}

TEST_CASE("weyl relation on clock-shift matches the brute-force product") {
    for (int dim = 2; dim <= 8; ++dim) {
        const Representation rep = weyl::build_clock_shift(dim);
        const CheckReport r = weyl::weyl_relation_check(rep, 1, 1);
        CAPTURE(dim);
        CHECK(r.max_deviation <= 1e-12);
        CHECK(r.pass);

        // Independent oracle: (V U) e_j = omega^{j+1} e_{j+1} and
        // (omega U V) e_j = omega^{j+1} e_{j+1}; matrices agree entrywise.
        const ComplexMatrix lhs = rep.V * rep.U;
        double worst = 0.0;
        for (int j = 0; j < dim; ++j) {
            for (int i = 0; i < dim; ++i) {
                const double angle = 2.0 * kPi * ((j + 1) % dim) / dim;
                const ComplexScalar want =
                    i == (j + 1) % dim ? ComplexScalar(std::cos(angle), std::sin(angle))
                                       : ComplexScalar(0.0);
                worst = std::max(worst, std::abs(lhs(i, j) - want));
            }
        }
        CHECK(worst <= 1e-13);
    }
}

TEST_CASE("weyl relation commuting and non-commuting parameter pairs") {
    const Representation clock = weyl::build_clock_shift(6);
    const CheckReport commuting = weyl::weyl_relation_check(clock, 2, 3);  // ag = dim
    CHECK(commuting.pass);
    CHECK(commuting.params.at("commute_flag").flag);

    const CheckReport skew = weyl::weyl_relation_check(clock, 1, 3);
    CHECK(skew.pass);
    CHECK(!skew.params.at("commute_flag").flag);
    CHECK(skew.params.at("commutator_norm").number >= 0.1);

    // negative step counts wrap modulo the dimension
    const CheckReport back = weyl::weyl_relation_check(clock, -1, -3);
    CHECK(back.pass);
    CHECK(back.params.at("commute_consistent").flag);

    const Representation grid = weyl::build_grid(64, 1.0, 1.0);
    const double dp = grid.momentum_spacing();
    const CheckReport rel = weyl::weyl_relation_check(grid, grid.spacing, dp);
    CHECK(rel.pass);
    CHECK(rel.max_deviation <= 1e-10);

    // ag = 2 pi hbar m for m = 1, 2: exact commutation
    const CheckReport m1 = weyl::weyl_relation_check(grid, 2.0, 32.0 * dp);
    CHECK(m1.pass);
    CHECK(m1.params.at("commute_flag").flag);
    const CheckReport m2 = weyl::weyl_relation_check(grid, 4.0, 32.0 * dp);
    CHECK(m2.pass);
    CHECK(m2.params.at("commute_flag").flag);

    // near misses must not commute, and must stay consistent
    const CheckReport near1 = weyl::weyl_relation_check(grid, 2.0 * 1.01, 32.0 * dp);
    CHECK(!near1.params.at("commute_flag").flag);
    CHECK(near1.params.at("commute_consistent").flag);

    // ag = pi hbar: commutator norm reaches |e^{i pi} - 1| = 2
    const CheckReport anti = weyl::weyl_relation_check(grid, 1.0, kPi);
    CHECK(anti.params.at("commutator_norm").number >= 0.1);
    CHECK(!anti.params.at("commute_flag").flag);
    CHECK(anti.pass);

    // g = 0: V is the identity, everything commutes, phase factor 1
    const CheckReport trivial = weyl::weyl_relation_check(grid, 1.0, 0.0);
    CHECK(trivial.pass);
    CHECK(trivial.params.at("commute_flag").flag);
    CHECK(trivial.max_deviation <= 1e-14);
}

TEST_CASE("commute flag matches integrality over a lattice of (a,g) pairs") {
    const Representation grid = weyl::build_grid(32, 1.0, 1.0);
    const double dp = grid.momentum_spacing();
    for (int j : {1, 2, 3}) {
        for (int k : {8, 16, 32}) {
            const CheckReport r = weyl::weyl_relation_check(grid, j * grid.spacing, k * dp);
            CAPTURE(j);
            CAPTURE(k);
            CHECK(r.params.at("commute_consistent").flag);
            CHECK(r.params.at("commute_flag").flag == ((j * k) % 32 == 0));
            CHECK(r.pass);
        }
    }
}

TEST_CASE("checks that need an (X, P) pair reject the clock-shift representation") {
    const Representation clock = weyl::build_clock_shift(4);
    CHECK_THROWS_AS(weyl::generator_conjugation_check(clock, {0.0, 1.0}, 0.1), weyl::Error);
    CHECK_THROWS_AS(weyl::uncertainty_check(clock, StateVector::basis(4, 0)), weyl::Error);
    CHECK_THROWS_AS(weyl::mub_check(clock), weyl::Error);
}

TEST_CASE("mub constancy on the grid, informational on fock") {
    for (int dim : {2, 4, 16, 64}) {
        const Representation rep = weyl::build_grid(dim, 1.0, 1.0);
        const CheckReport r = weyl::mub_check(rep);
        CAPTURE(dim);
        CHECK(r.asserted);
        CHECK(r.pass);
        CHECK(r.max_deviation <= 1e-10);
    }

    // dim 4: every overlap magnitude is exactly 1/2
    const Representation four = weyl::build_grid(4, 1.0, 1.0);
    const weyl::EigenBasis mom = weyl::momentum_basis(four);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(mom.vectors(j, k)) == doctest::Approx(0.5).epsilon(1e-14));

    const Representation fock = weyl::build_fock(32, 1.0);
    const CheckReport info = weyl::mub_check(fock);
    CHECK(!info.asserted);  // truncation breaks exact unbiasedness
}

TEST_CASE("overlap kernel matches K exp(i x p / hbar) with K = 1/sqrt(dim)") {
    for (int dim : {4, 16, 64}) {
        const Representation rep = weyl::build_grid(dim, 1.0, 1.0);
        const CheckReport r = weyl::overlap_kernel_check(rep);
        CAPTURE(dim);
        CHECK(r.pass);
        CHECK(r.max_deviation <= 1e-10);
        CHECK(r.params.at("k_abs").number ==
              doctest::Approx(1.0 / std::sqrt(double(dim))).epsilon(1e-12));
        CHECK(r.params.at("k_im").number == doctest::Approx(0.0));
    }

    // dim 4, hbar 1, spacing 1: entry (j=1, k=1) is (1/2) exp(i pi / 2) = i/2
    const Representation four = weyl::build_grid(4, 1.0, 1.0);
    const weyl::EigenBasis mom = weyl::momentum_basis(four);
    int col = -1;
    for (int k = 0; k < 4; ++k)
        if (std::abs(mom.values[static_cast<std::size_t>(k)] - kPi / 2.0) < 1e-12) col = k;
    REQUIRE(col >= 0);
    CHECK(std::abs(mom.vectors(1, col) - ComplexScalar(0.0, 0.5)) < 1e-14);
    // x = 0 row: all entries exactly 1/sqrt(dim)
    for (int k = 0; k < 4; ++k) CHECK(std::abs(mom.vectors(0, k) - ComplexScalar(0.5)) < 1e-14);
}

TEST_CASE("kernel refit deviation is invariant under a global momentum phase") {
    const Representation rep = weyl::build_grid(16, 1.0, 1.0);
    const weyl::EigenBasis mom = weyl::momentum_basis(rep);

    auto refit_deviation = [&](ComplexScalar phase) {
        ComplexScalar k_fit(0.0);
        std::vector<ComplexScalar> units(static_cast<std::size_t>(16 * 16));
        for (int j = 0; j < 16; ++j)
            for (int k = 0; k < 16; ++k) {
                const double angle =
                    j * rep.spacing * mom.values[static_cast<std::size_t>(k)] / rep.hbar;
                const ComplexScalar unit(std::cos(angle), std::sin(angle));
                units[static_cast<std::size_t>(j * 16 + k)] = unit;
                k_fit += phase * mom.vectors(j, k) * std::conj(unit);
            }
        k_fit /= 256.0;
        double dev = 0.0;
        for (int j = 0; j < 16; ++j)
            for (int k = 0; k < 16; ++k)
                dev = std::max(dev, std::abs(phase * mom.vectors(j, k) -
                                             k_fit * units[static_cast<std::size_t>(j * 16 + k)]));
        return dev;
    };

    const double base = refit_deviation(ComplexScalar(1.0));
    const ComplexScalar twist(std::cos(0.813), std::sin(0.813));
    CHECK(refit_deviation(twist) == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("pre-limit derivative identity is exact on the grid") {
    for (int dim : {4, 8, 64}) {
        const Representation rep = weyl::build_grid(dim, 1.0, 1.0);
        const CheckReport r = weyl::finite_difference_derivative_check(rep);
        CAPTURE(dim);
        CHECK(r.pass);
        CHECK(r.max_deviation <= 1e-12);
    }

    // scalar consistency: (exp(i p s) - 1)/s -> i p with error O(s)
    const double p = 1.3;
    for (double s : {1e-2, 1e-3, 1e-4}) {
        const ComplexScalar ratio =
            (ComplexScalar(std::cos(p * s), std::sin(p * s)) - 1.0) / s;
        CHECK(std::abs(ratio - ComplexScalar(0.0, p)) <= p * p * s);
    }
}

TEST_CASE("densification sweep reports shrinking spacings") {
    const CheckReport grid = weyl::spectrum_densification_sweep({8, 16, 32}, 1.0);
    CHECK(grid.pass);
    REQUIRE(grid.details.size() == 3);
    CHECK(grid.details[0].second == doctest::Approx(1.0 / 8));
    CHECK(grid.details[1].second == doctest::Approx(1.0 / 16));
    CHECK(grid.details[2].second == doctest::Approx(1.0 / 32));
    CHECK(grid.params.at("label").text.find("illustration") != std::string::npos);

    const CheckReport fock =
        weyl::spectrum_densification_sweep({8, 16, 32, 64}, 0.0, weyl::RepKind::FockTruncated);
    CHECK(fock.pass);  // max adjacent X gap shrinks with dim

    CHECK_THROWS_AS(weyl::spectrum_densification_sweep({8}, 1.0), weyl::Error);
    CHECK_THROWS_AS(weyl::spectrum_densification_sweep({8, 8}, 1.0), weyl::Error);
}

TEST_CASE("symbolic suite is exact") {
    const CheckReport r = weyl::symbolic_suite(30, 60, 4242);
    CHECK(r.pass);
    CHECK(r.max_deviation == 0.0);
}

TEST_CASE("hbar scaling: ideal bound scales and verdicts are invariant") {
    const double sigma = 4.0;
    for (double hbar : {1.0, 2.0}) {
        const Representation rep = weyl::build_grid(64, hbar, 1.0);
        const StateVector packet = weyl::gaussian_packet(rep, 32.0, 0.0, sigma);
        const UncertaintyReport u = weyl::uncertainty_check(rep, packet);
        // first term of the ideal bound is exactly (hbar/2)^2
        CHECK(u.ideal_bound - u.covariance * u.covariance ==
              doctest::Approx(hbar * hbar / 4.0).epsilon(1e-15));
    }

    for (weyl::RepKind kind : {weyl::RepKind::PeriodicGrid, weyl::RepKind::FockTruncated}) {
        weyl::RunConfig base;
        base.rep = kind;
        base.dim = kind == weyl::RepKind::PeriodicGrid ? 16 : 32;
        base.seed = 99;
        const auto reports1 = weyl::run_suites(base);
        weyl::RunConfig doubled = base;
        doubled.hbar = 2.0;
        const auto reports2 = weyl::run_suites(doubled);
        REQUIRE(reports1.size() == reports2.size());
        for (std::size_t i = 0; i < reports1.size(); ++i) {
            CAPTURE(reports1[i].name);
            CHECK(reports1[i].pass == reports2[i].pass);
        }
    }
}

TEST_CASE("suites are deterministic given config and seed") {
    weyl::RunConfig cfg;
    cfg.rep = weyl::RepKind::PeriodicGrid;
    cfg.dim = 16;
    cfg.seed = 31337;
    const std::string once = weyl::render_reports(weyl::run_suites(cfg), weyl::OutputFormat::Json);
    const std::string twice = weyl::render_reports(weyl::run_suites(cfg), weyl::OutputFormat::Json);
    CHECK(once == twice);
    CHECK(!once.empty());
}

TEST_CASE("sweep rows halve the spacing as dims double") {
    weyl::RunConfig cfg;
    cfg.rep = weyl::RepKind::PeriodicGrid;
    const auto rows = weyl::run_sweep(cfg, {8, 16, 32}, 1.0);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].spacing == doctest::Approx(0.125));
    CHECK(rows[1].spacing == doctest::Approx(0.0625));
    CHECK(rows[2].spacing == doctest::Approx(0.03125));

    weyl::RunConfig fock;
    fock.rep = weyl::RepKind::FockTruncated;
    const auto frows = weyl::run_sweep(fock, {8, 16, 32}, 1.0);
    REQUIRE(frows.size() == 3);
    // coherent-state truncation weight decreases monotonically
    double prev = 1e9;
    for (const auto& row : frows) {
        const double tail = row.deviations[1].second;
        CHECK(tail < prev);
        prev = tail;
    }
    CHECK_THROWS_AS(weyl::run_sweep(cfg, {}, 1.0), weyl::Error);
}

TEST_CASE("config validation rejects bad input") {
    weyl::RunConfig cfg;
    cfg.dim = 1;
    CHECK_THROWS_AS(cfg.validate(), weyl::InvalidDimension);
    cfg.dim = 8;
    cfg.suites = {"nope"};
    CHECK_THROWS_AS(cfg.validate(), weyl::Error);
    cfg.suites = {"kernel"};
    cfg.rep = weyl::RepKind::ClockShift;
    CHECK_THROWS_AS(cfg.validate(), weyl::Error);
    cfg.rep = weyl::RepKind::PeriodicGrid;
    cfg.tolerances["bogus"] = 1.0;
    CHECK_THROWS_AS(cfg.validate(), weyl::Error);
}
