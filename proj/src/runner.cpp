#include "weyl/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace weyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct SuiteInfo {
    const char* name;
    bool grid;
    bool fock;
    bool clock;
    bool in_defaults;
};

constexpr SuiteInfo kSuites[] = {
    {"uncertainty", true, true, false, true},
    {"generator", true, true, false, true},
    {"shift", true, true, false, true},
    {"eigenshift", true, false, false, true},
    {"weyl", true, false, true, true},
    {"mub", true, true, false, true},
    {"kernel", true, false, false, true},
    {"derivative", true, false, false, true},
    {"densify", true, true, false, false},
    {"symbolic", true, true, true, false},
};

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : kSuites)
        if (name == s.name) return &s;
    return nullptr;
}

bool suite_matches(const SuiteInfo& s, RepKind rep) {
    switch (rep) {
        case RepKind::PeriodicGrid: return s.grid;
        case RepKind::FockTruncated: return s.fock;
        case RepKind::ClockShift: return s.clock;
    }
    return false;
}

double resolved_tol(const RunConfig& config, const std::string& name, double fallback) {
    auto it = config.tolerances.find(name);
    return it == config.tolerances.end() ? fallback : it->second;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double_or_throw(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw Error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw Error("invalid numeric value for " + what + ": '" + text + "'");
    }
}

long long parse_int_or_throw(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw Error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw Error("invalid integer value for " + what + ": '" + text + "'");
    }
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw Error("unknown output format '" + name + "' (expected text, json, or csv)");
}

RepKind parse_rep_kind(const std::string& name) {
    if (name == "fock") return RepKind::FockTruncated;
    if (name == "grid") return RepKind::PeriodicGrid;
    if (name == "clock") return RepKind::ClockShift;
    throw Error("unknown representation '" + name + "' (expected fock, grid, or clock)");
}

std::vector<std::string> known_suites() {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
}

std::vector<std::string> default_suites(RepKind rep) {
    std::vector<std::string> out;
    for (const auto& s : kSuites)
        if (s.in_defaults && suite_matches(s, rep)) out.emplace_back(s.name);
    return out;
}

bool suite_available(const std::string& suite, RepKind rep) {
    const SuiteInfo* s = find_suite(suite);
    return s != nullptr && suite_matches(*s, rep);
}

std::vector<std::string> known_tolerance_keys() {
    return {
        "uncertainty_slack_batch",
        "uncertainty_gaussian_covariance",
        "uncertainty_gaussian_product",
        "uncertainty_chirped_bound",
        "generator_conjugation_linear",
        "generator_conjugation_quadratic",
        "shift_commutator_guarded",
        "shift_commutator_full",
        "eigen_shift",
        "weyl_relation",
        "weyl_commuting_m1",
        "weyl_commuting_m2",
        "weyl_noncommuting",
        "mub_unbiasedness",
        "overlap_kernel",
        "finite_difference_derivative",
        "densification_illustration",
        "symbolic_identities",
    };
}

void RunConfig::validate() const {
    if (dim < 2) throw InvalidDimension("dim must be >= 2");
    if (hbar <= 0.0) throw Error("hbar must be positive");
    if (spacing <= 0.0) throw Error("spacing must be positive");
    if (slack_states < 1) throw Error("state count must be >= 1");
    for (const auto& s : suites) {
        const SuiteInfo* info = find_suite(s);
        if (info == nullptr) throw Error("unknown suite '" + s + "'");
        if (!suite_matches(*info, rep))
            throw Error("suite '" + s + "' is not available for representation '" +
                        rep_kind_name(rep) + "'");
    }
    const auto keys = known_tolerance_keys();
    for (const auto& [k, v] : tolerances) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            throw Error("unknown tolerance key '" + k + "'");
        if (v < 0.0) throw Error("tolerance for '" + k + "' must be non-negative");
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error("config line " + std::to_string(lineno) + ": expected key = value");

        if (key == "rep") {
            config.rep = parse_rep_kind(value);
        } else if (key == "dim") {
            config.dim = static_cast<int>(parse_int_or_throw(value, key));
        } else if (key == "hbar") {
            config.hbar = parse_double_or_throw(value, key);
        } else if (key == "spacing") {
            config.spacing = parse_double_or_throw(value, key);
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_int_or_throw(value, key));
        } else if (key == "format") {
            config.format = parse_output_format(value);
        } else if (key == "suite") {
            config.suites = split_csv(value);
        } else if (key == "states") {
            config.slack_states = static_cast<int>(parse_int_or_throw(value, key));
        } else if (key.rfind("tol.", 0) == 0) {
            config.tolerances[key.substr(4)] = parse_double_or_throw(value, key);
        } else {
            throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
}

namespace {

void run_uncertainty_suite(const RunConfig& config, const Representation& rep,
                           std::vector<CheckReport>& out) {
    out.push_back(uncertainty_slack_batch(
        rep, config.slack_states, config.seed,
        resolved_tol(config, "uncertainty_slack_batch", 1e-10)));

    if (rep.kind != RepKind::PeriodicGrid) return;

    const double sigma = rep.box_length() / 16.0;
    const double x0 = (rep.dim / 2) * rep.spacing;

    const StateVector packet = gaussian_packet(rep, x0, 0.0, sigma);
    const UncertaintyReport u = uncertainty_check(rep, packet);

    CheckReport cov;
    cov.name = "uncertainty_gaussian_covariance";
    cov.rep = rep_kind_name(rep.kind);
    cov.dim = rep.dim;
    cov.hbar = rep.hbar;
    cov.params["sigma"] = ParamValue::num(sigma);
    cov.params["x0"] = ParamValue::num(x0);
    cov.params["covariance"] = ParamValue::num(u.covariance);
    cov.tolerance = resolved_tol(config, "uncertainty_gaussian_covariance", 1e-6);
    cov.max_deviation = std::abs(u.covariance) / rep.hbar;
    cov.seal();
    out.push_back(std::move(cov));

    CheckReport prod;
    prod.name = "uncertainty_gaussian_product";
    prod.rep = rep_kind_name(rep.kind);
    prod.dim = rep.dim;
    prod.hbar = rep.hbar;
    prod.params["sigma"] = ParamValue::num(sigma);
    prod.params["product"] = ParamValue::num(std::sqrt(u.var_x * u.var_p));
    prod.tolerance = resolved_tol(config, "uncertainty_gaussian_product", 0.02);
    prod.max_deviation = std::abs(std::sqrt(u.var_x * u.var_p) / (rep.hbar / 2.0) - 1.0);
    prod.seal();
    out.push_back(std::move(prod));

    const double chirp = 0.5 / (sigma * sigma);
    const StateVector chirped = gaussian_packet(rep, x0, 0.0, sigma, chirp);
    const UncertaintyReport uc = uncertainty_check(rep, chirped);

    CheckReport bound;
    bound.name = "uncertainty_chirped_bound";
    bound.rep = rep_kind_name(rep.kind);
    bound.dim = rep.dim;
    bound.hbar = rep.hbar;
    bound.params["sigma"] = ParamValue::num(sigma);
    bound.params["chirp"] = ParamValue::num(chirp);
    bound.params["covariance"] = ParamValue::num(uc.covariance);
    bound.params["ideal_bound"] = ParamValue::num(uc.ideal_bound);
    bound.tolerance = resolved_tol(config, "uncertainty_chirped_bound", 0.0);
    const double floor = rep.hbar * rep.hbar / 4.0;
    // Demands at least a 10% tightening over (hbar/2)^2.
    bound.max_deviation = std::max(0.0, 1.1 - uc.ideal_bound / floor);
    bound.seal();
    out.push_back(std::move(bound));
}

void run_generator_suite(const RunConfig& config, const Representation& rep,
                         std::vector<CheckReport>& out) {
    const double a = rep.kind == RepKind::PeriodicGrid ? rep.spacing : 0.1;
    const double fallback = rep.kind == RepKind::FockTruncated ? 1e-3 : 1e-6;

    CheckReport linear = generator_conjugation_check(
        rep, {0.0, 1.0}, a, resolved_tol(config, "generator_conjugation_linear", fallback));
    linear.name = "generator_conjugation_linear";
    out.push_back(std::move(linear));

    CheckReport quad = generator_conjugation_check(
        rep, {0.0, 0.0, 1.0}, a, resolved_tol(config, "generator_conjugation_quadratic", fallback));
    quad.name = "generator_conjugation_quadratic";
    out.push_back(std::move(quad));
}

void run_shift_suite(const RunConfig& config, const Representation& rep,
                     std::vector<CheckReport>& out) {
    const double a = rep.kind == RepKind::PeriodicGrid ? rep.spacing : 0.1;
    const Guard guard = rep.kind == RepKind::PeriodicGrid ? Guard::packet() : Guard::levels(0.5);

    CheckReport guarded = shift_commutator_check(
        rep, a, guard, resolved_tol(config, "shift_commutator_guarded", 1e-6));
    guarded.name = "shift_commutator_guarded";
    out.push_back(std::move(guarded));

    if (rep.kind == RepKind::PeriodicGrid) {
        // The unguarded identity cannot hold in finite dimension; this
        // fixture documents the wrap defect instead of hiding it.
        CheckReport full = shift_commutator_check(
            rep, a, Guard::full(), resolved_tol(config, "shift_commutator_full", 1e-6));
        full.name = "shift_commutator_full";
        full.asserted = false;
        full.params["expected_failure"] = ParamValue::boolean(true);
        out.push_back(std::move(full));
    }
}

void run_eigenshift_suite(const RunConfig& config, const Representation& rep,
                          std::vector<CheckReport>& out) {
    const double tol = resolved_tol(config, "eigen_shift", 1e-10);
    CheckReport merged;
    merged.name = "eigen_shift";
    merged.rep = rep_kind_name(rep.kind);
    merged.dim = rep.dim;
    merged.hbar = rep.hbar;
    merged.tolerance = tol;
    const int steps_list[] = {1, 7, rep.dim};
    std::string label;
    for (int steps : steps_list) {
        const CheckReport one = eigen_shift_check(rep, steps, tol);
        merged.max_deviation = std::max(merged.max_deviation, one.max_deviation);
        merged.details.emplace_back("steps_" + std::to_string(steps), one.max_deviation);
        if (!label.empty()) label += ";";
        label += std::to_string(steps);
    }
    merged.params["steps"] = ParamValue::str(label);
    merged.seal();
    out.push_back(std::move(merged));
}

CheckReport noncommuting_report(const RunConfig& config, CheckReport base) {
    const double margin = 0.1;
    CheckReport r = std::move(base);
    r.name = "weyl_noncommuting";
    const double comm_norm = r.params.at("commutator_norm").number;
    r.tolerance = resolved_tol(config, "weyl_noncommuting", 0.0);
    r.max_deviation = std::max(0.0, margin - comm_norm);
    r.params["margin"] = ParamValue::num(margin);
    r.seal();
    return r;
}

void run_weyl_suite(const RunConfig& config, const Representation& rep,
                    std::vector<CheckReport>& out) {
    const double tol_rel = resolved_tol(config, "weyl_relation", 1e-10);
    if (rep.kind == RepKind::ClockShift) {
        CheckReport rel = weyl_relation_check(rep, 1, 1, tol_rel);
        rel.name = "weyl_relation";
        out.push_back(std::move(rel));

        const bool even = rep.dim % 2 == 0;
        CheckReport m1 = weyl_relation_check(rep, even ? 2 : rep.dim, even ? rep.dim / 2 : 1,
                                             resolved_tol(config, "weyl_commuting_m1", 1e-10));
        m1.name = "weyl_commuting_m1";
        out.push_back(std::move(m1));

        CheckReport m2 = weyl_relation_check(rep, even ? 4 : rep.dim, even ? rep.dim / 2 : 2,
                                             resolved_tol(config, "weyl_commuting_m2", 1e-10));
        m2.name = "weyl_commuting_m2";
        out.push_back(std::move(m2));

        out.push_back(noncommuting_report(
            config, weyl_relation_check(rep, 1, std::max(1, rep.dim / 2), tol_rel)));
        return;
    }

    const double dp = rep.momentum_spacing();
    CheckReport rel = weyl_relation_check(rep, rep.spacing, dp, tol_rel);
    rel.name = "weyl_relation";
    out.push_back(std::move(rel));

    const bool even = rep.dim % 2 == 0;
    const double a1 = even ? 2.0 * rep.spacing : rep.spacing;
    const double g1 = even ? (rep.dim / 2) * dp : rep.dim * dp;
    CheckReport m1 =
        weyl_relation_check(rep, a1, g1, resolved_tol(config, "weyl_commuting_m1", 1e-10));
    m1.name = "weyl_commuting_m1";
    out.push_back(std::move(m1));

    const double a2 = even ? 4.0 * rep.spacing : 2.0 * rep.spacing;
    const double g2 = even ? (rep.dim / 2) * dp : rep.dim * dp;
    CheckReport m2 =
        weyl_relation_check(rep, a2, g2, resolved_tol(config, "weyl_commuting_m2", 1e-10));
    m2.name = "weyl_commuting_m2";
    out.push_back(std::move(m2));

    out.push_back(noncommuting_report(
        config,
        weyl_relation_check(rep, rep.spacing, kPi * rep.hbar / rep.spacing, tol_rel)));
}

void run_densify_suite(const RunConfig& config, std::vector<CheckReport>& out) {
    std::vector<int> dims{config.dim / 4, config.dim / 2, config.dim};
    dims.erase(std::remove_if(dims.begin(), dims.end(), [](int d) { return d < 2; }), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    if (dims.size() < 2) dims = {config.dim, config.dim * 2};
    CheckReport r = spectrum_densification_sweep(dims, config.spacing * config.dim, config.rep,
                                                 config.hbar);
    r.tolerance = resolved_tol(config, "densification_illustration", 0.0);
    r.seal();
    out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckReport> run_suites(const RunConfig& config) {
    config.validate();
    std::vector<std::string> suites = config.suites.empty() ? default_suites(config.rep)
                                                            : config.suites;

    Representation rep;
    switch (config.rep) {
        case RepKind::FockTruncated: rep = build_fock(config.dim, config.hbar); break;
        case RepKind::PeriodicGrid: rep = build_grid(config.dim, config.hbar, config.spacing); break;
        case RepKind::ClockShift: rep = build_clock_shift(config.dim); break;
    }

    std::vector<CheckReport> out;
    for (const auto& suite : suites) {
        if (suite == "uncertainty") {
            run_uncertainty_suite(config, rep, out);
        } else if (suite == "generator") {
            run_generator_suite(config, rep, out);
        } else if (suite == "shift") {
            run_shift_suite(config, rep, out);
        } else if (suite == "eigenshift") {
            run_eigenshift_suite(config, rep, out);
        } else if (suite == "weyl") {
            run_weyl_suite(config, rep, out);
        } else if (suite == "mub") {
            out.push_back(mub_check(rep, resolved_tol(config, "mub_unbiasedness", 1e-10)));
        } else if (suite == "kernel") {
            out.push_back(overlap_kernel_check(rep, resolved_tol(config, "overlap_kernel", 1e-10)));
        } else if (suite == "derivative") {
            out.push_back(finite_difference_derivative_check(
                rep, resolved_tol(config, "finite_difference_derivative", 1e-12)));
        } else if (suite == "densify") {
            run_densify_suite(config, out);
        } else if (suite == "symbolic") {
            out.push_back(symbolic_suite(30, 50, config.seed));
        }
    }
    return out;
}

bool all_asserted_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.asserted && !r.pass) return false;
    return true;
}

std::vector<SweepRow> run_sweep(const RunConfig& config, const std::vector<int>& dims,
                                double box_length) {
    if (dims.size() < 2) throw Error("sweep needs at least two dims");
    if (box_length <= 0.0) throw Error("box length must be positive");
    if (config.rep == RepKind::ClockShift)
        throw Error("sweep supports grid and fock representations");
    for (int d : dims)
        if (d < 2) throw InvalidDimension("sweep dim must be >= 2");

    std::vector<SweepRow> rows;
    for (int dim : dims) {
        SweepRow row;
        row.dim = dim;
        if (config.rep == RepKind::PeriodicGrid) {
            const double spacing = box_length / dim;
            row.spacing = spacing;
            const Representation rep = build_grid(dim, config.hbar, spacing);
            row.deviations.emplace_back("mub", mub_check(rep).max_deviation);
            row.deviations.emplace_back("kernel", overlap_kernel_check(rep).max_deviation);
            row.deviations.emplace_back("derivative",
                                        finite_difference_derivative_check(rep).max_deviation);
        } else {
            const Representation rep = build_fock(dim, config.hbar);
            const EigenDecomposition d = hermitian_eigen(rep.X);
            double gap = 0.0;
            for (std::size_t i = 1; i < d.values.size(); ++i)
                gap = std::max(gap, d.values[i] - d.values[i - 1]);
            row.spacing = gap;

            // Frobenius deviation from i hbar (I - dim E_last), relative.
            ComplexMatrix defect = rep.X * rep.P - rep.P * rep.X;
            for (int i = 0; i < dim; ++i) defect(i, i) -= ComplexScalar(0.0, config.hbar);
            defect(dim - 1, dim - 1) -= ComplexScalar(0.0, -config.hbar * dim);
            row.deviations.emplace_back("commutator_defect",
                                        frobenius_norm(defect) / (config.hbar * dim));

            // Raw truncation weight of a unit coherent state on the two top
            // levels (Poisson tail), monotone decreasing in dim.
            double total = 0.0;
            double top_two = 0.0;
            double weight = 1.0;  // |alpha|^{2n}/n! at alpha = 1
            for (int n = 0; n < dim; ++n) {
                total += weight;
                if (n >= dim - 2) top_two += weight;
                weight /= (n + 1);
            }
            row.deviations.emplace_back("coherent_tail", top_two / total);
            row.deviations.emplace_back("x_gap_max", gap);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_double_17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string param_value_text(const ParamValue& v) {
    switch (v.kind) {
        case ParamValue::Kind::Number: return format_double_17(v.number);
        case ParamValue::Kind::Flag: return v.flag ? "true" : "false";
        case ParamValue::Kind::Text: return v.text;
    }
    return "";
}

std::string params_json(const CheckReport& r) {
    std::string out = "{";
    bool first = true;
    auto append = [&](const std::string& key, const std::string& rendered) {
        if (!first) out += ",";
        first = false;
        out += "\"" + json_escape(key) + "\":" + rendered;
    };
    if (!r.asserted) append("asserted", "false");
    for (const auto& [k, v] : r.params) {
        switch (v.kind) {
            case ParamValue::Kind::Number: append(k, format_double_17(v.number)); break;
            case ParamValue::Kind::Flag: append(k, v.flag ? "true" : "false"); break;
            case ParamValue::Kind::Text: append(k, "\"" + json_escape(v.text) + "\""); break;
        }
    }
    for (const auto& [label, value] : r.details)
        append("detail:" + label, format_double_17(value));
    out += "}";
    return out;
}

std::string params_flat(const CheckReport& r) {
    std::string out;
    auto append = [&](const std::string& key, const std::string& value) {
        if (!out.empty()) out += ";";
        out += key + "=" + value;
    };
    if (!r.asserted) append("asserted", "false");
    for (const auto& [k, v] : r.params) append(k, param_value_text(v));
    for (const auto& [label, value] : r.details)
        append("detail:" + label, format_double_17(value));
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Json) {
        for (const auto& r : reports) {
            out += "{\"check\":\"" + json_escape(r.name) + "\"";
            out += ",\"rep\":\"" + json_escape(r.rep) + "\"";
            out += ",\"dim\":" + std::to_string(r.dim);
            out += ",\"hbar\":" + format_double_17(r.hbar);
            out += ",\"params\":" + params_json(r);
            out += ",\"max_deviation\":" + format_double_17(r.max_deviation);
            out += ",\"tolerance\":" + format_double_17(r.tolerance);
            out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
            out += "}\n";
        }
        return out;
    }
    if (format == OutputFormat::Csv) {
        out += "check,rep,dim,hbar,max_deviation,tolerance,pass,params\n";
        for (const auto& r : reports) {
            out += r.name + "," + r.rep + "," + std::to_string(r.dim) + "," +
                   format_double_17(r.hbar) + "," + format_double_17(r.max_deviation) + "," +
                   format_double_17(r.tolerance) + "," + (r.pass ? "true" : "false") + "," +
                   csv_quote(params_flat(r)) + "\n";
        }
        return out;
    }
    for (const auto& r : reports) {
        const char* status = r.asserted ? (r.pass ? "PASS" : "FAIL") : "INFO";
        out += status;
        out += "  ";
        out += r.name;
        if (r.name.size() < 32) out += std::string(32 - r.name.size(), ' ');
        out += " rep=" + r.rep + " dim=" + std::to_string(r.dim) +
               " hbar=" + format_double_17(r.hbar) +
               " max_deviation=" + format_double_17(r.max_deviation) +
               " tolerance=" + format_double_17(r.tolerance);
        if (!r.asserted) out += std::string(" pass=") + (r.pass ? "true" : "false");
        const std::string extras = params_flat(r);
        if (!extras.empty()) out += " | " + extras;
        out += "\n";
    }
    return out;
}

std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Json) {
        for (const auto& row : rows) {
            out += "{\"dim\":" + std::to_string(row.dim);
            out += ",\"spacing\":" + format_double_17(row.spacing);
            for (const auto& [name, value] : row.deviations)
                out += ",\"" + json_escape(name) + "\":" + format_double_17(value);
            out += "}\n";
        }
        return out;
    }
    // CSV and text share the tabular layout.
    out += "dim,spacing";
    if (!rows.empty())
        for (const auto& [name, value] : rows.front().deviations) out += "," + name;
    out += "\n";
    for (const auto& row : rows) {
        out += std::to_string(row.dim) + "," + format_double_17(row.spacing);
        for (const auto& [name, value] : row.deviations) out += "," + format_double_17(value);
        out += "\n";
    }
    return out;
}

}  // namespace weyl
