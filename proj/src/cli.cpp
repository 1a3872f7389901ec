#include "gextreme/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"

#include "gextreme/diagnostics.hpp"
#include "gextreme/mc_sim.hpp"
#include "gextreme/normal.hpp"
#include "gextreme/normalization.hpp"
#include "gextreme/rate_set.hpp"
#include "gextreme/tail_approx.hpp"

namespace gextreme::cli {

namespace {

constexpr double kLn10 = 2.302585092994046;

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

// JSON value token: plain number when finite, quoted literal otherwise.
std::string json_num(double v) {
    if (std::isfinite(v)) return fmt_g10(v);
    return "\"" + fmt_g10(v) + "\"";
}

std::vector<double> build_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
        throw std::domain_error("grid: need finite lo <= hi and step > 0");
    const auto count = static_cast<std::int64_t>(
        std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i)
        xs.push_back(lo + static_cast<double>(i) * step);
    return xs;
}

void emit_row_csv(std::ostream& out, const TailComparisonRow& r) {
    out << fmt_g10(r.x) << ',' << fmt_g10(nat_to_log10(r.log_exact.value))
        << ',' << fmt_g10(nat_to_log10(r.log_gumbel.value)) << ','
        << fmt_g10(nat_to_log10(r.log_ldp.value)) << '\n';
}

void emit_row_json(std::ostream& out, const TailComparisonRow& r) {
    out << "{\"x\":" << json_num(r.x)
        << ",\"log10_exact\":" << json_num(nat_to_log10(r.log_exact.value))
        << ",\"log10_gumbel\":" << json_num(nat_to_log10(r.log_gumbel.value))
        << ",\"log10_ldp\":" << json_num(nat_to_log10(r.log_ldp.value)) << "}";
}

void emit_rows(std::ostream& out, const CliConfig& cfg,
               const std::vector<TailComparisonRow>& rows) {
    if (cfg.format == OutputFormat::csv) {
        out << "x,log10_exact,log10_gumbel,log10_ldp\n";
        for (const auto& r : rows) emit_row_csv(out, r);
        return;
    }
    out << "{\"n\":" << cfg.n << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ',';
        emit_row_json(out, rows[i]);
    }
    out << "]}\n";
}

void emit_report_json(std::ostream& out, const ConvergenceReport& rep) {
    out << "{\"label\":\"" << json_escape(rep.label) << "\",\"ladder\":[";
    for (std::size_t i = 0; i < rep.ladder.size(); ++i) {
        if (i) out << ',';
        out << rep.ladder[i];
    }
    out << "],\"values\":[";
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        if (i) out << ',';
        out << json_num(rep.values[i]);
    }
    out << "],\"monotone_decreasing\":"
        << (rep.monotone_decreasing ? "true" : "false")
        << ",\"final_value\":" << json_num(rep.final_value) << "}";
}

int cmd_tail(const CliConfig& cfg, std::ostream& out) {
    const NormalizationParams p = make_norm(cfg.n);
    const TailComparisonRow row{cfg.x, log_tail_exact(p, cfg.x),
                                log_tail_gumbel(p, cfg.x),
                                LogProb{-rate(cfg.x) * p.log_n}};
    emit_rows(out, cfg, {row});
    return 0;
}

int cmd_prob_set(const CliConfig& cfg, std::ostream& out) {
    const NormalizationParams p = make_norm(cfg.n);
    const IntervalUnion a = normalize_set(parse_interval_union(cfg.set_text));
    const double l10_exact = nat_to_log10(log_prob_set_exact(p, a).value);
    const double l10_ldp = nat_to_log10(log_prob_ldp(p, a).value);
    const double i_a = ess_inf_rate(a);
    if (cfg.format == OutputFormat::csv) {
        out << "log10_exact,log10_ldp,I_A\n"
            << fmt_g10(l10_exact) << ',' << fmt_g10(l10_ldp) << ','
            << fmt_g10(i_a) << '\n';
    } else {
        out << "{\"n\":" << cfg.n << ",\"set\":\""
            << json_escape(to_string(a)) << "\",\"log10_exact\":"
            << json_num(l10_exact) << ",\"log10_ldp\":" << json_num(l10_ldp)
            << ",\"I_A\":" << json_num(i_a) << "}\n";
    }
    return 0;
}

int cmd_rate(const CliConfig& cfg, std::ostream& out) {
    const IntervalUnion a = normalize_set(parse_interval_union(cfg.set_text));
    const double i_a = ess_inf_rate(a);
    if (cfg.format == OutputFormat::csv)
        out << fmt_g10(i_a) << '\n';
    else
        out << "{\"I_A\":" << json_num(i_a) << "}\n";
    return 0;
}

int cmd_compare(const CliConfig& cfg, std::ostream& out) {
    const NormalizationParams p = make_norm(cfg.n);
    const std::vector<double> xs =
        build_grid(cfg.grid_lo, cfg.grid_hi, cfg.grid_step);
    emit_rows(out, cfg, compare_grid(p, xs, cfg.threads));
    return 0;
}

int cmd_simulate(const CliConfig& cfg, std::ostream& out) {
    const NormalizationParams p = make_norm(cfg.n);
    const McEstimate e =
        estimate_tail(p, cfg.x, cfg.samples, cfg.seed, cfg.threads);
    if (cfg.format == OutputFormat::csv) {
        out << "n,x,samples,hits,log10_p_hat,log10_ci_lo,log10_ci_hi,seed\n"
            << e.n << ',' << fmt_g10(e.x) << ',' << e.samples << ',' << e.hits
            << ',' << fmt_g10(nat_to_log10(e.log_p_hat.value)) << ','
            << fmt_g10(nat_to_log10(e.ci_lo.value)) << ','
            << fmt_g10(nat_to_log10(e.ci_hi.value)) << ',' << e.seed << '\n';
    } else {
        out << "{\"n\":" << e.n << ",\"x\":" << json_num(e.x)
            << ",\"samples\":" << e.samples << ",\"hits\":" << e.hits
            << ",\"log10_p_hat\":" << json_num(nat_to_log10(e.log_p_hat.value))
            << ",\"log10_ci_lo\":" << json_num(nat_to_log10(e.ci_lo.value))
            << ",\"log10_ci_hi\":" << json_num(nat_to_log10(e.ci_hi.value))
            << ",\"seed\":" << e.seed << "}\n";
    }
    return 0;
}

int cmd_diagnose(const CliConfig& cfg, std::ostream& out) {
    const std::vector<std::int64_t> ladder = default_ladder();
    const std::vector<std::int64_t> bn_ladder = {10000, 1000000, 100000000,
                                                 10000000000, 1000000000000};
    std::vector<double> t_grid;
    for (int i = 1; i <= 800; ++i) t_grid.push_back(0.05 * i);

    std::vector<ConvergenceReport> reports;
    reports.push_back(check_mills_bounds_log(t_grid, ladder));
    reports.push_back(bn_limit_seq(bn_ladder));
    reports.push_back(density_rate_report(ladder, 3.0, 0.01, cfg.threads));
    for (double x : {0.5, 1.0, 2.0})
        reports.push_back(tail_rate_report(ladder, x));

    out << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out << ",\n ";
        emit_report_json(out, reports[i]);
    }
    out << "]\n";
    return 0;
}

} // namespace

std::string fmt_g10(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v < 0.0 ? "-inf" : "inf";
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double nat_to_log10(double v) { return v / kLn10; }

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::tail: return cmd_tail(cfg, out);
            case Command::prob_set: return cmd_prob_set(cfg, out);
            case Command::rate: return cmd_rate(cfg, out);
            case Command::compare: return cmd_compare(cfg, out);
            case Command::simulate: return cmd_simulate(cfg, out);
            case Command::diagnose: return cmd_diagnose(cfg, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CliConfig cfg;
    std::string grid_text;
    std::string format_text = "csv";

    CLI::App app{"Exact, Gumbel and large-deviation tail probabilities of the "
                 "rescaled maximum of n i.i.d. standard normals, computed in "
                 "the log domain"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", format_text, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* c_tail = app.add_subcommand(
        "tail", "Tail probability of (x, inf): exact, Gumbel, LDP");
    c_tail->add_option("n", cfg.n, "Sample size (>= 2)")->required();
    c_tail->add_option("x", cfg.x, "Threshold on the rescaled axis")->required();

    CLI::App* c_prob = app.add_subcommand(
        "prob-set", "Probability of an interval-union set: exact, LDP, I_A");
    c_prob->add_option("n", cfg.n, "Sample size (>= 2)")->required();
    c_prob->add_option("set", cfg.set_text,
                       "Set, e.g. \"[1,2],{5},(3,inf)\"")->required();

    CLI::App* c_rate = app.add_subcommand(
        "rate", "Rate-function essential infimum I_A of a set");
    c_rate->add_option("set", cfg.set_text, "Set expression")->required();

    CLI::App* c_compare = app.add_subcommand(
        "compare", "Stream the exact/Gumbel/LDP comparison grid as CSV");
    c_compare->add_option("n", cfg.n, "Sample size (>= 2)")->required();
    c_compare->add_option("--grid", grid_text, "Grid lo:hi:step")
        ->default_val("0:5:0.05");

    CLI::App* c_sim = app.add_subcommand(
        "simulate", "Monte Carlo estimate of P(Z_n > x)");
    c_sim->add_option("n", cfg.n, "Sample size (>= 2)")->required();
    c_sim->add_option("x", cfg.x, "Threshold on the rescaled axis")->required();
    c_sim->add_option("samples", cfg.samples, "Number of draws")->required();
    c_sim->add_option("seed", cfg.seed, "RNG seed")->default_val(42);

    app.add_subcommand("diagnose",
                       "Run every convergence diagnostic, emit JSON reports");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    cfg.format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
    if (const char* env = std::getenv("GEXTREME_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) cfg.threads = static_cast<int>(v);
    }

    if (c_tail->parsed()) cfg.command = Command::tail;
    else if (c_prob->parsed()) cfg.command = Command::prob_set;
    else if (c_rate->parsed()) cfg.command = Command::rate;
    else if (c_compare->parsed()) cfg.command = Command::compare;
    else if (c_sim->parsed()) cfg.command = Command::simulate;
    else cfg.command = Command::diagnose;

    if (cfg.command == Command::compare) {
        std::istringstream ss(grid_text);
        std::string part;
        std::vector<double> vals;
        while (std::getline(ss, part, ':')) {
            try {
                vals.push_back(std::stod(part));
            } catch (const std::exception&) {
                err << "error: bad --grid component '" << part << "'\n";
                return 2;
            }
        }
        if (vals.size() != 3) {
            err << "error: --grid wants lo:hi:step\n";
            return 2;
        }
        cfg.grid_lo = vals[0];
        cfg.grid_hi = vals[1];
        cfg.grid_step = vals[2];
    }

    return run(cfg, out, err);
}

} // namespace gextreme::cli
