#include "weyl/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "weyl/polynomial.hpp"

namespace weyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

ComplexMatrix matrix_poly(const ComplexMatrix& x, const std::vector<double>& coeffs) {
    const int n = x.rows();
    ComplexMatrix r(n, n);
    if (coeffs.empty()) return r;
    for (int i = 0; i < n; ++i) r(i, i) = coeffs.back();
    for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
        r = r * x;
        for (int i = 0; i < n; ++i) r(i, i) += coeffs[static_cast<std::size_t>(k)];
    }
    return r;
}

ComplexMatrix matrix_int_pow(const ComplexMatrix& m, int e) {
    ComplexMatrix acc = ComplexMatrix::identity(m.rows());
    ComplexMatrix sq = m;
    unsigned exp = static_cast<unsigned>(e);
    while (exp != 0) {
        if (exp & 1u) acc = acc * sq;
        exp >>= 1u;
        if (exp != 0) sq = sq * sq;
    }
    return acc;
}

std::string format_double_brief(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string poly_label(const std::vector<double>& coeffs) {
    std::string out;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const double c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0.0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1.0 || k == 0) out += format_double_brief(c);
        if (k > 0) {
            if (c != 1.0) out += "*";
            out += k == 1 ? "X" : "X^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

double default_coherent_alpha(int dim) {
    if (dim >= 32) return 2.0;
    if (dim >= 16) return 1.0;
    return 0.5;
}

// Probe used when a guarded check is not handed an explicit state: an
// interior packet for the grid, a low-lying coherent state for Fock.
StateVector default_probe(const Representation& rep, double sigma_fraction,
                          std::map<std::string, ParamValue>& params) {
    if (rep.kind == RepKind::PeriodicGrid) {
        const double sigma = sigma_fraction * rep.box_length();
        const double center = (rep.dim / 2) * rep.spacing;
        params["probe"] = ParamValue::str("packet");
        params["probe_sigma"] = ParamValue::num(sigma);
        return gaussian_packet(rep, center, 0.0, sigma);
    }
    const double alpha = default_coherent_alpha(rep.dim);
    params["probe"] = ParamValue::str("coherent");
    params["probe_alpha"] = ParamValue::num(alpha);
    return coherent_state(rep, ComplexScalar(alpha, 0.0));
}

double vec_norm(const std::vector<ComplexScalar>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

ComplexMatrix overlap_table(const Representation& rep) {
    EigenBasis pos = position_basis(rep);
    EigenBasis mom = momentum_basis(rep);
    return adjoint(pos.vectors) * mom.vectors;
}

}  // namespace

UncertaintyReport uncertainty_check(const Representation& rep, const StateVector& state) {
    if (!rep.has_xp()) throw Error("uncertainty_check: representation has no (X, P) pair");
    if (state.dim() != rep.dim)
        throw DimensionMismatch("uncertainty_check: state/representation dimension mismatch");

    const auto& amp = state.amplitudes();
    std::vector<ComplexScalar> xs = matvec(rep.X, amp);
    std::vector<ComplexScalar> ps = matvec(rep.P, amp);
    const double ex = inner(amp, xs).real();
    const double ep = inner(amp, ps).real();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        xs[i] -= ex * amp[i];
        ps[i] -= ep * amp[i];
    }

    UncertaintyReport r;
    for (const auto& x : xs) r.var_x += std::norm(x);
    for (const auto& p : ps) r.var_p += std::norm(p);

    // cross = <Xc psi, Pc psi>; its real part is the covariance, twice its
    // imaginary part is the commutator expectation over i.
    const ComplexScalar cross = inner(xs, ps);
    r.covariance = cross.real();
    r.commutator_expectation = cross - std::conj(cross);
    r.generalized_bound = cross.real() * cross.real() + cross.imag() * cross.imag();
    r.ideal_bound = (rep.hbar / 2.0) * (rep.hbar / 2.0) + r.covariance * r.covariance;
    r.generalized_slack = r.var_x * r.var_p - r.generalized_bound;
    r.ideal_slack = r.var_x * r.var_p - r.ideal_bound;
    return r;
}

StateVector random_state(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<ComplexScalar> amp(static_cast<std::size_t>(dim));
    for (auto& a : amp) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = ComplexScalar(re, im);
    }
    return StateVector(std::move(amp));
}

CheckReport uncertainty_slack_batch(const Representation& rep, int count, std::uint64_t seed,
                                    double tol) {
    CheckReport r;
    r.name = "uncertainty_slack_batch";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol;
    r.params["states"] = ParamValue::num(count);
    r.params["seed"] = ParamValue::num(static_cast<double>(seed));

    const double scale = std::max(operator_norm(rep.X), operator_norm(rep.P));
    const double s4 = std::max(scale * scale * scale * scale, 1e-300);
    r.params["scale"] = ParamValue::num(scale);

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const StateVector st = random_state(rep.dim, rng);
        const UncertaintyReport u = uncertainty_check(rep, st);
        worst = std::max(worst, std::max(0.0, -u.generalized_slack) / s4);
    }
    r.max_deviation = worst;
    r.seal();
    return r;
}

CheckReport generator_conjugation_check(const Representation& rep, const std::vector<double>& coeffs,
                                        double a, double tol, const StateVector* probe) {
    if (!rep.has_xp()) throw Error("generator_conjugation_check: representation has no (X, P) pair");
    const double tol_eff =
        tol >= 0.0 ? tol : (rep.kind == RepKind::FockTruncated ? 1e-3 : 1e-6);

    CheckReport r;
    r.name = "generator_conjugation";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol_eff;
    r.params["a"] = ParamValue::num(a);
    r.params["f"] = ParamValue::str(poly_label(coeffs));

    ComplexMatrix x_shifted = rep.X;
    for (int i = 0; i < rep.dim; ++i) x_shifted(i, i) += a;
    const ComplexMatrix f_shifted = matrix_poly(x_shifted, coeffs);
    const ComplexMatrix u = translation_unitary(rep, a);
    const ComplexMatrix m = f_shifted - adjoint(u) * (matrix_poly(rep.X, coeffs) * u);

    std::vector<ComplexScalar> mv;
    if (probe != nullptr) {
        r.params["probe"] = ParamValue::str("explicit");
        mv = matvec(m, probe->amplitudes());
    } else {
        const StateVector psi = default_probe(rep, 0.05, r.params);
        mv = matvec(m, psi.amplitudes());
    }
    const double denom = std::max(operator_norm(f_shifted), 1e-300);
    r.max_deviation = vec_norm(mv) / denom;
    r.seal();
    return r;
}

CheckReport shift_commutator_check(const Representation& rep, double a, const Guard& guard,
                                   double tol) {
    if (!rep.has_xp()) throw Error("shift_commutator_check: representation has no (X, P) pair");

    CheckReport r;
    r.name = "shift_commutator";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol;
    r.params["a"] = ParamValue::num(a);

    const ComplexMatrix u = translation_unitary(rep, a);
    ComplexMatrix m = rep.X * u - u * rep.X - u * ComplexScalar(a);
    const double denom = a != 0.0 ? std::abs(a) : 1.0;

    switch (guard.kind) {
        case Guard::Kind::Full: {
            r.params["guard"] = ParamValue::str("full");
            r.max_deviation = operator_norm(m) / denom;
            break;
        }
        case Guard::Kind::LevelFraction: {
            const int keep = std::clamp(
                static_cast<int>(std::ceil(guard.level_fraction * rep.dim)), 1, rep.dim);
            r.params["guard"] = ParamValue::str("levels");
            r.params["guard_levels"] = ParamValue::num(keep);
            for (int i = 0; i < rep.dim; ++i)
                for (int j = keep; j < rep.dim; ++j) m(i, j) = 0.0;
            r.max_deviation = operator_norm(m) / denom;
            break;
        }
        case Guard::Kind::InteriorPacket: {
            const StateVector psi = default_probe(rep, guard.sigma_fraction, r.params);
            r.max_deviation = vec_norm(matvec(m, psi.amplitudes())) / denom;
            break;
        }
    }
    r.seal();
    return r;
}

CheckReport eigen_shift_check(const Representation& rep, int steps, double tol) {
    if (rep.kind != RepKind::PeriodicGrid)
        throw Error("eigen_shift_check: grid representation required");

    CheckReport r;
    r.name = "eigen_shift";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol;
    r.params["steps"] = ParamValue::num(steps);

    const ComplexMatrix u = translation_unitary(rep, steps * rep.spacing);
    double min_fid = 1.0;
    for (int j = 0; j < rep.dim; ++j) {
        const int target = ((j + steps) % rep.dim + rep.dim) % rep.dim;
        min_fid = std::min(min_fid, std::abs(u(target, j)));
    }
    r.max_deviation = std::max(0.0, 1.0 - min_fid);
    r.seal();
    return r;
}

CheckReport eigen_shift_check(const Representation& rep, double a, double tol) {
    if (rep.kind != RepKind::PeriodicGrid)
        throw Error("eigen_shift_check: grid representation required");
    const double ratio = a / rep.spacing;
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) > 1e-9)
        throw NonCommensurate("eigen_shift_check: displacement is not a multiple of the spacing");
    return eigen_shift_check(rep, static_cast<int>(nearest), tol);
}

namespace {

CheckReport weyl_relation_report(const Representation& rep, const ComplexMatrix& u,
                                 const ComplexMatrix& v, double phase_angle, double ratio,
                                 bool integral, double tol, double commute_tol) {
    CheckReport r;
    r.name = "weyl_relation";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol;

    const ComplexScalar phase(std::cos(phase_angle), std::sin(phase_angle));
    const ComplexMatrix lhs = v * u;
    const ComplexMatrix rhs = u * v;
    const double relation_dev = operator_norm(lhs - rhs * phase);
    const double comm_norm = operator_norm(lhs - rhs);
    const bool commute_flag = comm_norm <= commute_tol;
    const bool consistent = commute_flag == integral;

    r.params["phase_angle"] = ParamValue::num(phase_angle);
    r.params["commutator_norm"] = ParamValue::num(comm_norm);
    r.params["commute_flag"] = ParamValue::boolean(commute_flag);
    r.params["ag_over_two_pi_hbar"] = ParamValue::num(ratio);
    r.params["commute_consistent"] = ParamValue::boolean(consistent);

    // An inconsistent commute flag is a failed check even when the phase
    // relation itself is tight; fold it into the deviation.
    r.max_deviation = consistent ? relation_dev : std::max(relation_dev, 1.0);
    r.seal();
    return r;
}

}  // namespace

CheckReport weyl_relation_check(const Representation& rep, double a, double g, double tol,
                                double commute_tol) {
    if (!rep.has_xp())
        throw Error("weyl_relation_check: continuous parameters need a (X, P) representation");
    const ComplexMatrix u = translation_unitary(rep, a);
    const ComplexMatrix v = boost_unitary(rep, g);
    const double ratio = a * g / (2.0 * kPi * rep.hbar);
    const bool integral = std::abs(ratio - std::round(ratio)) <= 1e-9;
    CheckReport r =
        weyl_relation_report(rep, u, v, a * g / rep.hbar, ratio, integral, tol, commute_tol);
    r.params["a"] = ParamValue::num(a);
    r.params["g"] = ParamValue::num(g);
    return r;
}

CheckReport weyl_relation_check(const Representation& rep, int a_steps, int g_steps, double tol,
                                double commute_tol) {
    if (rep.kind != RepKind::ClockShift)
        throw Error("weyl_relation_check: step counts need the clock-shift representation");
    const int a_mod = (a_steps % rep.dim + rep.dim) % rep.dim;
    const int g_mod = (g_steps % rep.dim + rep.dim) % rep.dim;
    const ComplexMatrix u = matrix_int_pow(rep.U, a_mod);
    const ComplexMatrix v = matrix_int_pow(rep.V, g_mod);
    const long long prod = static_cast<long long>(a_steps) * g_steps;
    const long long rem = ((prod % rep.dim) + rep.dim) % rep.dim;
    const double ratio = static_cast<double>(prod) / rep.dim;
    CheckReport r = weyl_relation_report(rep, u, v, 2.0 * kPi * rem / rep.dim, ratio, rem == 0,
                                         tol, commute_tol);
    r.params["a_steps"] = ParamValue::num(a_steps);
    r.params["g_steps"] = ParamValue::num(g_steps);
    return r;
}

CheckReport mub_check(const Representation& rep, double tol) {
    if (!rep.has_xp()) throw Error("mub_check: representation has no eigenbases");

    CheckReport r;
    r.name = "mub_unbiasedness";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol;
    // Truncation breaks exact unbiasedness on Fock space; the deviation is
    // reported but not asserted there.
    r.asserted = rep.kind == RepKind::PeriodicGrid;
    if (!r.asserted) r.params["informational"] = ParamValue::boolean(true);

    const ComplexMatrix overlaps = overlap_table(rep);
    const double root = std::sqrt(static_cast<double>(rep.dim));
    double dev = 0.0;
    for (int j = 0; j < rep.dim; ++j)
        for (int k = 0; k < rep.dim; ++k)
            dev = std::max(dev, std::abs(root * std::abs(overlaps(j, k)) - 1.0));
    r.max_deviation = dev;
    r.seal();
    return r;
}

CheckReport overlap_kernel_check(const Representation& rep, double tol) {
    if (rep.kind != RepKind::PeriodicGrid)
        throw Error("overlap_kernel_check: grid representation required");

    CheckReport r;
    r.name = "overlap_kernel";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol;

    const EigenBasis mom = momentum_basis(rep);
    const double scale = 1.0 / std::sqrt(static_cast<double>(rep.dim));

    ComplexScalar k_fit(0.0);
    double declared = 0.0;
    for (int j = 0; j < rep.dim; ++j) {
        const double x = j * rep.spacing;
        for (int k = 0; k < rep.dim; ++k) {
            const double angle = x * mom.values[static_cast<std::size_t>(k)] / rep.hbar;
            const ComplexScalar unit(std::cos(angle), std::sin(angle));
            const ComplexScalar o = mom.vectors(j, k);
            declared = std::max(declared, std::abs(o - scale * unit));
            k_fit += o * std::conj(unit);
        }
    }
    k_fit /= static_cast<double>(rep.dim) * static_cast<double>(rep.dim);

    double refit = 0.0;
    for (int j = 0; j < rep.dim; ++j) {
        const double x = j * rep.spacing;
        for (int k = 0; k < rep.dim; ++k) {
            const double angle = x * mom.values[static_cast<std::size_t>(k)] / rep.hbar;
            const ComplexScalar unit(std::cos(angle), std::sin(angle));
            refit = std::max(refit, std::abs(mom.vectors(j, k) - k_fit * unit));
        }
    }

    r.params["k_re"] = ParamValue::num(k_fit.real());
    r.params["k_im"] = ParamValue::num(k_fit.imag());
    r.params["k_abs"] = ParamValue::num(std::abs(k_fit));
    r.details.emplace_back("refit_deviation", refit);
    r.max_deviation = declared;
    r.seal();
    return r;
}

CheckReport finite_difference_derivative_check(const Representation& rep, double tol) {
    if (rep.kind != RepKind::PeriodicGrid)
        throw Error("finite_difference_derivative_check: grid representation required");

    CheckReport r;
    r.name = "finite_difference_derivative";
    r.rep = rep_kind_name(rep.kind);
    r.dim = rep.dim;
    r.hbar = rep.hbar;
    r.tolerance = tol;

    const EigenBasis mom = momentum_basis(rep);
    double dev = 0.0;
    for (int k = 0; k < rep.dim; ++k) {
        const double angle = mom.values[static_cast<std::size_t>(k)] * rep.spacing / rep.hbar;
        const ComplexScalar factor =
            (ComplexScalar(std::cos(angle), std::sin(angle)) - 1.0) / rep.spacing;
        for (int j = 0; j < rep.dim; ++j) {
            const int jn = (j + 1) % rep.dim;
            const ComplexScalar diff = (mom.vectors(jn, k) - mom.vectors(j, k)) / rep.spacing;
            dev = std::max(dev, std::abs(diff - factor * mom.vectors(j, k)));
        }
    }
    r.max_deviation = dev;
    r.seal();
    return r;
}

CheckReport spectrum_densification_sweep(const std::vector<int>& dims, double box_length,
                                         RepKind kind, double hbar) {
    if (dims.size() < 2) throw Error("spectrum_densification_sweep: need at least two dims");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 2) throw InvalidDimension("spectrum_densification_sweep: dim must be >= 2");
        if (i > 0 && dims[i] <= dims[i - 1])
            throw Error("spectrum_densification_sweep: dims must be strictly increasing");
    }
    if (kind == RepKind::ClockShift)
        throw Error("spectrum_densification_sweep: clock-shift has no position spectrum");

    CheckReport r;
    r.name = "densification_illustration";
    r.rep = rep_kind_name(kind);
    r.dim = dims.back();
    r.hbar = hbar;
    r.tolerance = 0.0;
    r.params["label"] = ParamValue::str("illustration, not a proof");
    if (kind == RepKind::PeriodicGrid) r.params["box_length"] = ParamValue::num(box_length);

    std::vector<double> gaps;
    for (int dim : dims) {
        double gap;
        if (kind == RepKind::PeriodicGrid) {
            gap = box_length / dim;  // exact eigenvalue spacing of diagonal X
        } else {
            const Representation rep = build_fock(dim, hbar);
            const EigenDecomposition d = hermitian_eigen(rep.X);
            gap = 0.0;
            for (std::size_t i = 1; i < d.values.size(); ++i)
                gap = std::max(gap, d.values[i] - d.values[i - 1]);
        }
        gaps.push_back(gap);
        r.details.emplace_back("dim_" + std::to_string(dim), gap);
    }

    double worst = 0.0;
    for (std::size_t i = 1; i < gaps.size(); ++i) worst = std::max(worst, gaps[i] - gaps[i - 1]);
    r.max_deviation = std::max(0.0, worst);
    r.seal();
    return r;
}

namespace {

GaussianRational random_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = 1 + static_cast<long>(rng() % 9);
    return GaussianRational(make_rational(num, den));
}

WeylPolynomial random_x_polynomial(std::mt19937_64& rng, unsigned max_degree) {
    const unsigned deg = rng() % (max_degree + 1);
    WeylPolynomial f;
    for (unsigned k = 0; k <= deg; ++k) {
        if (rng() % 2 == 0) continue;
        const GaussianRational c = random_rational(rng);
        if (c.is_zero()) continue;
        f += WeylPolynomial::monomial({k, 0}, HbarLaurent::constant(c));
    }
    if (f.is_zero()) f = WeylPolynomial::monomial({deg, 0}, HbarLaurent::constant(GaussianRational(1)));
    return f;
}

}  // namespace

CheckReport symbolic_suite(unsigned max_n, unsigned samples, std::uint64_t seed) {
    CheckReport r;
    r.name = "symbolic_identities";
    r.rep = "symbolic";
    r.dim = 0;
    r.hbar = 0.0;
    r.tolerance = 0.0;
    r.params["max_n"] = ParamValue::num(max_n);
    r.params["samples"] = ParamValue::num(samples);
    r.params["seed"] = ParamValue::num(static_cast<double>(seed));

    std::mt19937_64 rng(seed);
    const WeylPolynomial x = WeylPolynomial::sym_x();
    const WeylPolynomial p = WeylPolynomial::sym_p();
    const HbarLaurent i_hbar = HbarLaurent::single(1, GaussianRational::unit_i());

    unsigned power_rule_failures = 0;
    for (unsigned n = 1; n <= max_n; ++n) {
        const WeylPolynomial lhs = commutator(poly_pow(x, n), p);
        const WeylPolynomial rhs = WeylPolynomial::monomial(
            {n - 1, 0}, HbarLaurent::single(1, GaussianRational(Rational(0), Rational(static_cast<long>(n)))));
        if (lhs != rhs) ++power_rule_failures;
    }

    unsigned derivative_failures = 0;
    unsigned tower_failures = 0;
    unsigned shift_failures = 0;
    for (unsigned s = 0; s < samples; ++s) {
        const WeylPolynomial f = random_x_polynomial(rng, 12);
        if (commutator(f, p) != i_hbar * deriv(f, Axis::X)) ++derivative_failures;

        const unsigned n = rng() % 7;
        WeylPolynomial dn = f;
        for (unsigned k = 0; k < n; ++k) dn = deriv(dn, Axis::X);
        if (iterated_commutator(f, n) != dn) ++tower_failures;

        const WeylPolynomial g = random_x_polynomial(rng, 8);
        const GaussianRational a = random_rational(rng);
        const unsigned order = g.x_degree() + rng() % 3;
        if (conjugate_series(g, a, order) != taylor_shift(g, a)) ++shift_failures;
    }

    r.details.emplace_back("power_rule_failures", power_rule_failures);
    r.details.emplace_back("derivative_failures", derivative_failures);
    r.details.emplace_back("tower_failures", tower_failures);
    r.details.emplace_back("shift_failures", shift_failures);
    r.max_deviation =
        power_rule_failures + derivative_failures + tower_failures + shift_failures;
    r.seal();
    return r;
}

}  // namespace weyl
