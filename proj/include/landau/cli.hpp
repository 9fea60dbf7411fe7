#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landau/bounds.hpp"
#include "landau/corpus.hpp"
#include "landau/radii.hpp"
#include "landau/report.hpp"
#include "landau/scan.hpp"

namespace landau::cli {

/// Exit codes: 0 success (including exploratory-only comparisons),
/// 1 an asserted check failed, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

using report::json;

inline std::string csv_bool(bool b) { return b ? "true" : "false"; }

inline std::string csv_quote(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

inline std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return csv_bool(v.get<bool>());
    if (v.is_string()) return csv_quote(v.get<std::string>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return report::format_double(v.get<double>());
}

/// CSV view of a report: fixed header, rows pulled from the JSON rows so the
/// two encodings carry identical numbers.
inline std::string csv_table(const std::vector<std::string>& header,
                             const json& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < header.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row.contains(header[i]) ? row[header[i]] : json(nullptr));
        }
        out += '\n';
    }
    return out;
}

inline json base_report(const std::string& command) {
    json doc = json::object();
    doc["command"] = command;
    doc["inputs"] = json::object();
    return doc;
}

inline void finish_report(json& doc, const std::string& status) {
    doc["status"] = status;
    doc["tool_version"] = report::kToolVersion;
}

inline std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        size_t used = 0;
        parts.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::domain_error("compare: bad grid component '" + tok + "'");
    }
    if (parts.size() != 3)
        throw std::domain_error("compare: grid must be start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0) || stop < start)
        throw std::domain_error("compare: grid requires start <= stop and step > 0");
    std::vector<double> grid;
    for (double v = start; v <= stop + 1e-12; v += step) grid.push_back(v);
    return grid;
}

inline std::string list_theorems() {
    std::string s;
    for (auto t : radii::kAllTheorems) {
        if (!s.empty()) s += ", ";
        s += std::string(radii::theorem_name(t));
    }
    return s;
}

struct CommonFlags {
    double tol = 1e-13;
    int grid_n = 128;
    bool csv = false;
};

inline int cmd_radii(const std::string& theorem, const std::optional<double>& M,
                     const std::optional<double>& M1, const std::optional<double>& M2,
                     const CommonFlags& flags, std::ostream& out) {
    const auto id = radii::theorem_from_name(theorem);
    if (!id)
        throw std::domain_error("radii: unknown theorem '" + theorem
                                + "' (valid: " + list_theorems() + ")");
    radii::TheoremParams params{M, M1, M2};
    const radii::RadiusResult res = radii::theorem_radius(*id, params, flags.tol);

    json doc = base_report("radii");
    doc["inputs"]["theorem"] = theorem;
    if (M) doc["inputs"]["M"] = *M;
    if (M1) doc["inputs"]["M1"] = *M1;
    if (M2) doc["inputs"]["M2"] = *M2;
    doc["inputs"]["tol"] = flags.tol;
    doc["rho"] = res.rho;
    doc["sigma"] = res.sigma;
    doc["residual"] = res.residual;
    doc["unconstrained"] = res.unconstrained;
    finish_report(doc, "ok");

    if (flags.csv) {
        json row = json::object();
        row["rho"] = res.rho;
        row["sigma"] = res.sigma;
        row["residual"] = res.residual;
        row["iterations"] = res.iterations;
        row["unconstrained"] = res.unconstrained;
        out << csv_table({"rho", "sigma", "residual", "iterations", "unconstrained"},
                         json::array({row}));
    } else {
        out << report::dump(doc);
    }
    return kExitOk;
}

inline int cmd_compare(const std::string& remark, const std::string& grid_text,
                       double m1, const CommonFlags& flags, std::ostream& out) {
    const auto id = radii::remark_from_name(remark);
    if (!id)
        throw std::domain_error("compare: unknown remark '" + remark
                                + "' (valid: R27, R29, R211, R213)");
    const auto grid = parse_grid(grid_text);
    const radii::ChainReport rep = radii::remark_chain(*id, grid, m1);

    json doc = base_report("compare");
    doc["inputs"]["remark"] = remark;
    doc["inputs"]["grid"] = grid_text;
    if (*id == radii::Remark::R27 || *id == radii::Remark::R29)
        doc["inputs"]["M1"] = m1;
    doc["inputs"]["tol"] = flags.tol;
    json rows = json::array();
    for (const auto& pt : rep.points) {
        json row = json::object();
        row["param"] = pt.param;
        row["r_prime"] = pt.radii[0];
        row["r"] = pt.radii[1];
        row["rho_old"] = pt.radii[2];
        row["rho_oldest"] = pt.radii.size() > 3 ? json(pt.radii[3]) : json(nullptr);
        row["sigma_prime"] = pt.sigmas[0];
        row["sigma"] = pt.sigmas[1];
        row["sigma_old"] = pt.sigmas[2];
        row["sigma_oldest"] = pt.sigmas.size() > 3 ? json(pt.sigmas[3]) : json(nullptr);
        row["in_regime"] = pt.in_regime;
        row["pass"] = pt.holds;
        rows.push_back(std::move(row));
    }
    doc["rows"] = rows;
    const std::string status = !rep.pass ? "fail" : (rep.exploratory ? "exploratory" : "ok");
    finish_report(doc, status);

    if (flags.csv)
        out << csv_table({"param", "r_prime", "r", "rho_old", "rho_oldest", "pass"}, rows);
    else
        out << report::dump(doc);
    return rep.pass ? kExitOk : kExitFail;
}

inline int cmd_coeffs(const std::string& map_name, const std::map<std::string, double>& params,
                      int n_max, double r, int samples, const CommonFlags& flags,
                      std::ostream& out) {
    const verify::CorpusEntry entry = verify::corpus(map_name, params);

    json doc = base_report("coeffs");
    doc["inputs"]["map"] = map_name;
    for (const auto& [k, v] : entry.params) doc["inputs"][k] = v;
    doc["inputs"]["n_max"] = n_max;
    doc["inputs"]["r"] = r;
    doc["inputs"]["samples"] = samples;

    json rows = json::array();
    bool ok = true;
    for (const auto& part : entry.audits) {
        const auto audit = bounds::audit_bounds(part.eval, entry.name, part.M, part.mode,
                                                n_max, r, samples);
        ok = ok && audit.pass;
        for (const auto& arow : audit.rows) {
            json row = json::object();
            row["part"] = part.part;
            row["n"] = arow.n;
            row["sum"] = arow.sum;
            row["bound"] = arow.bound;
            row["slack"] = arow.slack;
            rows.push_back(std::move(row));
        }
    }
    doc["rows"] = rows;
    finish_report(doc, ok ? "ok" : "fail");

    if (flags.csv)
        out << csv_table({"part", "n", "sum", "bound", "slack"}, rows);
    else
        out << report::dump(doc);
    return ok ? kExitOk : kExitFail;
}

/// The corpus configuration a theorem row speaks about: |z|^2 g rows get the
/// g-only composite, |z|^2 g + h rows the two-part one (A uses M for both).
inline verify::CorpusEntry theorem_config(radii::Theorem t, const radii::TheoremParams& p) {
    using radii::Theorem;
    switch (t) {
        case Theorem::A:
            return verify::make_bi_gh(p.M.value(), p.M.value());
        case Theorem::D:
        case Theorem::E:
        case Theorem::T26:
        case Theorem::T26p:
        case Theorem::T28:
        case Theorem::T28p:
            return verify::make_bi_gh(p.M1.value(), p.M2.value());
        default:
            return verify::make_bi_g_only(p.M.value());
    }
}

inline int cmd_verify(const std::optional<std::string>& theorem, bool classic,
                      const std::optional<double>& M, const std::optional<double>& M1,
                      const std::optional<double>& M2, const CommonFlags& flags,
                      std::ostream& out) {
    json doc = base_report("verify");
    json rows = json::array();
    bool ok = true;

    if (classic == theorem.has_value())
        throw std::domain_error("verify: give exactly one of --theorem or --classic");

    if (classic) {
        if (!M) throw std::domain_error("verify: --classic requires --M");
        const verify::CorpusEntry entry = verify::make_landau_classic(*M);
        const double r0 = *M - std::sqrt(*M * *M - 1.0);
        const double R0 = *M * r0 * r0;
        doc["inputs"]["classic"] = true;
        doc["inputs"]["M"] = *M;
        doc["inputs"]["grid_n"] = flags.grid_n;
        doc["rho"] = r0;
        doc["sigma"] = R0;

        const auto inj = verify::injectivity_scan(entry.eval, 0.99 * r0, flags.grid_n);
        ok = ok && inj.pass;
        json jrow = json::object();
        jrow["check"] = "injectivity";
        jrow["r"] = inj.radius;
        jrow["grid_n"] = inj.grid_n;
        jrow["pairs_tested"] = inj.pairs_tested;
        jrow["value"] = inj.min_separation_ratio ? json(*inj.min_separation_ratio)
                                                 : json(nullptr);
        jrow["pass"] = inj.pass;
        rows.push_back(std::move(jrow));

        const auto cov = verify::schlicht_scan(entry.eval, r0, 0.99 * R0,
                                               8 * flags.grid_n, 20);
        ok = ok && cov.pass;
        json crow = json::object();
        crow["check"] = "coverage";
        crow["r"] = cov.radius;
        crow["sigma"] = cov.sigma;
        crow["n_targets"] = cov.n_targets;
        crow["value"] = cov.max_winding_deviation;
        crow["pass"] = cov.pass;
        rows.push_back(std::move(crow));

        // sharpness witness: |f'| vanishes somewhere on |z| = r0
        double min_deriv = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 4096; ++k) {
            const cplx z = std::polar(r0, 2.0 * std::numbers::pi * k / 4096.0);
            min_deriv = std::min(min_deriv, local_distortion(entry.wirtinger(z)).Lam);
        }
        const bool sharp = min_deriv <= 1e-8;
        ok = ok && sharp;
        json srow = json::object();
        srow["check"] = "critical_ring";
        srow["r"] = r0;
        srow["value"] = min_deriv;
        srow["pass"] = sharp;
        rows.push_back(std::move(srow));
    } else {
        const auto id = radii::theorem_from_name(*theorem);
        if (!id)
            throw std::domain_error("verify: unknown theorem '" + *theorem
                                    + "' (valid: " + list_theorems() + ")");
        radii::TheoremParams params{M, M1, M2};
        const radii::RadiusResult res = radii::theorem_radius(*id, params, flags.tol);
        const verify::CorpusEntry entry = theorem_config(*id, params);

        doc["inputs"]["theorem"] = *theorem;
        if (M) doc["inputs"]["M"] = *M;
        if (M1) doc["inputs"]["M1"] = *M1;
        if (M2) doc["inputs"]["M2"] = *M2;
        doc["inputs"]["grid_n"] = flags.grid_n;
        doc["inputs"]["tol"] = flags.tol;
        doc["rho"] = res.rho;
        doc["sigma"] = res.sigma;

        const double rt = 0.999 * res.rho;
        const auto inj = verify::injectivity_scan(entry.eval, rt, flags.grid_n);
        ok = ok && inj.pass;
        json jrow = json::object();
        jrow["check"] = "injectivity";
        jrow["r"] = inj.radius;
        jrow["grid_n"] = inj.grid_n;
        jrow["pairs_tested"] = inj.pairs_tested;
        jrow["value"] = inj.min_separation_ratio ? json(*inj.min_separation_ratio)
                                                 : json(nullptr);
        jrow["pass"] = inj.pass;
        rows.push_back(std::move(jrow));

        const auto cov = verify::schlicht_scan(entry.eval, rt, 0.99 * res.sigma,
                                               8 * flags.grid_n, 20);
        ok = ok && cov.pass;
        json crow = json::object();
        crow["check"] = "coverage";
        crow["r"] = cov.radius;
        crow["sigma"] = cov.sigma;
        crow["n_targets"] = cov.n_targets;
        crow["value"] = cov.max_winding_deviation;
        crow["pass"] = cov.pass;
        rows.push_back(std::move(crow));

        json mrow = json::object();
        mrow["check"] = "min_jacobian";
        mrow["r"] = rt;
        mrow["grid_n"] = flags.grid_n;
        mrow["value"] = verify::min_jacobian(entry.wirtinger, rt, flags.grid_n);
        mrow["pass"] = nullptr; // informational
        rows.push_back(std::move(mrow));
    }

    doc["rows"] = rows;
    finish_report(doc, ok ? "ok" : "fail");
    if (flags.csv)
        out << csv_table({"check", "r", "value", "pass"}, rows);
    else
        out << report::dump(doc);
    return ok ? kExitOk : kExitFail;
}

inline int cmd_corpus_list(const CommonFlags& flags, std::ostream& out) {
    json doc = base_report("corpus-list");
    json rows = json::array();
    for (const auto& sig : verify::corpus_signatures()) {
        json row = json::object();
        row["name"] = sig.name;
        row["kind"] = std::string(verify::kind_name(sig.kind));
        std::string ps;
        for (const auto& p : sig.params) {
            if (!ps.empty()) ps += ';';
            ps += p;
        }
        row["params"] = ps;
        row["hypothesis"] = sig.hypothesis;
        rows.push_back(std::move(row));
    }
    doc["rows"] = rows;
    finish_report(doc, "ok");
    if (flags.csv)
        out << csv_table({"name", "kind", "params", "hypothesis"}, rows);
    else
        out << report::dump(doc);
    return kExitOk;
}

} // namespace detail

/// Entry point shared by the binary and the tests; args exclude the program
/// name.  Writes one report to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"univalence and coverage radii for harmonic and biharmonic mappings"};
    app.require_subcommand(0, 1);

    detail::CommonFlags flags;
    bool json_flag = false;
    app.add_option("--tol", flags.tol, "bisection interval tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--grid-n", flags.grid_n, "scan grid density")->check(CLI::Range(2, 4096));
    app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--csv", flags.csv, "CSV output");

    std::string theorem, remark, grid_text, map_name;
    std::optional<double> M, M1, M2, a;
    std::optional<int> n, m;
    double compare_m1 = 1.0;
    int n_max = 16, samples = 4096;
    double extract_r = 0.5;
    bool classic = false;

    CLI::App* radii_cmd = app.add_subcommand("radii", "solve one theorem row");
    radii_cmd->add_option("--theorem", theorem, "row id")->required();
    radii_cmd->add_option("--M", M, "modulus bound");
    radii_cmd->add_option("--M1", M1, "bound on |g|");
    radii_cmd->add_option("--M2", M2, "bound on the h part");
    radii_cmd->fallthrough();

    CLI::App* compare_cmd = app.add_subcommand("compare", "evaluate a remark chain on a grid");
    compare_cmd->add_option("--remark", remark, "chain id")->required();
    compare_cmd->add_option("--grid", grid_text, "start:stop:step")->required();
    compare_cmd->add_option("--M1", compare_m1, "fixed M1 for the two-parameter chains");
    compare_cmd->fallthrough();

    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "extract and audit coefficients");
    coeffs_cmd->add_option("--map", map_name, "corpus map name")->required();
    coeffs_cmd->add_option("--M", M, "modulus bound");
    coeffs_cmd->add_option("--M1", M1, "bound on |g|");
    coeffs_cmd->add_option("--M2", M2, "bound on the h part");
    coeffs_cmd->add_option("--a", a, "lambda(0) of f_an");
    coeffs_cmd->add_option("--n", n, "sharp row of f_an");
    coeffs_cmd->add_option("--m", m, "power of vstrip_m");
    coeffs_cmd->add_option("--n-max", n_max, "highest coefficient row");
    coeffs_cmd->add_option("--r", extract_r, "extraction circle radius");
    coeffs_cmd->add_option("--samples", samples, "extraction sample count");
    coeffs_cmd->fallthrough();

    CLI::App* verify_cmd = app.add_subcommand("verify", "scan a theorem-generated map");
    verify_cmd->add_option("--theorem", theorem, "row id");
    verify_cmd->add_flag("--classic", classic, "classical bounded configuration");
    verify_cmd->add_option("--M", M, "modulus bound");
    verify_cmd->add_option("--M1", M1, "bound on |g|");
    verify_cmd->add_option("--M2", M2, "bound on the h part");
    verify_cmd->fallthrough();

    CLI::App* list_cmd = app.add_subcommand("corpus-list", "list corpus maps");
    list_cmd->fallthrough();

    std::reverse(args.begin(), args.end()); // CLI11 consumes back to front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (json_flag && flags.csv) {
        err << "error: --json and --csv are mutually exclusive\n";
        return kExitUsage;
    }

    try {
        if (radii_cmd->parsed())
            return detail::cmd_radii(theorem, M, M1, M2, flags, out);
        if (compare_cmd->parsed())
            return detail::cmd_compare(remark, grid_text, compare_m1, flags, out);
        if (coeffs_cmd->parsed()) {
            std::map<std::string, double> params;
            if (M) params["M"] = *M;
            if (M1) params["M1"] = *M1;
            if (M2) params["M2"] = *M2;
            if (a) params["a"] = *a;
            if (n) params["n"] = *n;
            if (m) params["m"] = *m;
            return detail::cmd_coeffs(map_name, params, n_max, extract_r, samples, flags, out);
        }
        if (verify_cmd->parsed())
            return detail::cmd_verify(
                theorem.empty() ? std::nullopt : std::optional<std::string>(theorem), classic,
                M, M1, M2, flags, out);
        if (list_cmd->parsed())
            return detail::cmd_corpus_list(flags, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // an asserted mathematical check failed (e.g. corpus hypothesis audit)
        err << "check failed: " << e.what() << "\n";
        return kExitFail;
    }

    out << app.help();
    return kExitOk;
}

} // namespace landau::cli
