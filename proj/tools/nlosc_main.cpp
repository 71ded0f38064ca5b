// nlosc command-line front end.
//
// Subcommands: period, series, pade, radius, figure pt, figure ipt, verify.
// Exit codes: 0 success, 1 argument error, 2 numerical failure,
// 3 verification failure.
//
// Output contract: CSV has a one-line column header, comma separators, '.'
// decimal point, LF line endings.  JSON is a single top-level object carrying
// "method", "tolerance", and "version".  Floats are printed with %.17g
// (17 significant digits, lowercase exponent) in both formats, so identical
// configurations produce byte-identical output.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlosc/nlosc.hpp>

namespace {

using nlosc::two_pi;

std::string f17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_cell(double x) { return std::isnan(x) ? "" : f17(x); }

std::string json_number(double x) { return std::isnan(x) ? "null" : f17(x); }

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Tiny ordered-JSON builder: nlohmann::json serializes doubles with
// shortest-round-trip digits, which breaks the fixed 17-significant-digit
// float contract, so the flat objects here are assembled by hand.
class json_object {
  public:
    void field_raw(const std::string& key, const std::string& raw) {
        parts_.push_back(json_string(key) + ": " + raw);
    }
    void field(const std::string& key, double v) { field_raw(key, json_number(v)); }
    void field(const std::string& key, int v) { field_raw(key, std::to_string(v)); }
    void field(const std::string& key, bool v) { field_raw(key, v ? "true" : "false"); }
    void field(const std::string& key, const std::string& v) {
        field_raw(key, json_string(v));
    }
    void field_null(const std::string& key) { field_raw(key, "null"); }
    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            out += (i ? ", " : "") + parts_[i];
        return out + "}";
    }

  private:
    std::vector<std::string> parts_;
};

std::string json_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out + "]";
}

struct output_options {
    std::string format;  // "csv" or "json"
    std::string path;    // empty = stdout
};

int emit(const output_options& out, const std::string& text) {
    if (out.path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n", out.path.c_str());
        return 1;
    }
    f << text;
    return f.good() ? 0 : 1;
}

void add_output_flags(CLI::App* cmd, output_options& out, const std::string& def_format) {
    out.format = def_format;
    std::vector<std::string> allowed = {"csv", "json"};
    if (def_format == "text") allowed.push_back("text");
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
    cmd->add_option("-o,--output", out.path, "output file (default: stdout)");
}

// ---- period ----------------------------------------------------------------

struct period_config {
    double amplitude = 0.0;
    std::string method = "quad";
    double tol = std::nan("");
    output_options out;
};

int run_period(const period_config& cfg) {
    double A = cfg.amplitude;
    double rho = A * A;
    double period = 0.0, err = std::nan("");
    double tol_used = std::nan("");

    if (cfg.method == "quad") {
        tol_used = std::isnan(cfg.tol) ? 1e-12 : cfg.tol;
        nlosc::period_result r = nlosc::period_quad(A, tol_used);
        period = r.period;
        err = r.error_estimate;
    } else if (cfg.method == "ode") {
        tol_used = std::isnan(cfg.tol) ? 1e-11 : cfg.tol;
        double span = 4.3 * nlosc::period_quad(A, 1e-10).period;
        nlosc::trajectory traj = nlosc::integrate(A, tol_used, span);
        nlosc::period_result r = nlosc::detect_period(traj);
        period = r.period;
        err = r.error_estimate;
    } else if (cfg.method.rfind("series", 0) == 0) {
        int N = -1;
        if (cfg.method.size() > 7 && cfg.method[6] == ':') {
            try {
                std::size_t pos = 0;
                N = std::stoi(cfg.method.substr(7), &pos);
                if (pos != cfg.method.size() - 7) N = -1;
            } catch (const std::exception&) {
                N = -1;
            }
        }
        if (N < 0) {
            std::fprintf(stderr, "error: --method series:N requires an integer N >= 0\n");
            return 1;
        }
        nlosc::series s = nlosc::period_series(N);
        period = two_pi * nlosc::evaluate_partial_sum(s, rho, N);
        if (N >= 1)
            err = std::fabs(period - two_pi * nlosc::evaluate_partial_sum(s, rho, N - 1));
    } else if (cfg.method == "hb") {
        period = nlosc::hb_period(A);
    } else if (cfg.method == "asymptotic") {
        // the two limiting forms are equally wrong (both give pi) at A = 2;
        // below it the small-A parabola wins, above it the 2*pi/A tail does
        auto regime = A < 2.0 ? nlosc::asymptotic_regime::small : nlosc::asymptotic_regime::large;
        period = nlosc::asymptotic_period(A, regime);
    } else {
        std::fprintf(stderr,
                     "error: unknown --method '%s' (expected quad, ode, series:N, hb, "
                     "or asymptotic)\n",
                     cfg.method.c_str());
        return 1;
    }

    std::string text;
    if (cfg.out.format == "csv") {
        text = "amplitude,rho,period,error_estimate,method\n";
        text += f17(A) + "," + f17(rho) + "," + f17(period) + "," + csv_cell(err) + "," +
                cfg.method + "\n";
    } else {
        json_object o;
        o.field("amplitude", A);
        o.field("rho", rho);
        o.field("period", period);
        o.field("error_estimate", err);
        o.field("method", cfg.method);
        o.field("tolerance", tol_used);
        o.field("version", std::string(nlosc::library_version));
        text = o.str() + "\n";
    }
    return emit(cfg.out, text);
}

// ---- series ----------------------------------------------------------------

struct series_config {
    std::string what;
    int order = 10;
    output_options out;
};

int run_series(const series_config& cfg) {
    nlosc::series s;
    int first_row = 0;
    if (cfg.what == "csq") {
        s = nlosc::csq_series(cfg.order);
    } else if (cfg.what == "period") {
        s = nlosc::period_series(cfg.order);
    } else {
        s = nlosc::inverted_period_series(cfg.order);
        first_row = 1;  // q_0 = 0 carries no information
    }
    const std::string note = "values are T/(2*pi)";

    std::string text;
    if (cfg.out.format == "csv") {
        if (cfg.what == "period") text += "# note: " + note + "\n";
        text += "j,numerator,denominator,pi_power\n";
        for (int j = first_row; j <= cfg.order; ++j) {
            const nlosc::rational& c = s[j];
            int pi_power = cfg.what == "inverted" ? -j : 0;
            text += std::to_string(j) + "," + numerator(c).str() + "," +
                    denominator(c).str() + "," + std::to_string(pi_power) + "\n";
        }
    } else {
        std::vector<std::string> rows;
        for (int j = first_row; j <= cfg.order; ++j) {
            const nlosc::rational& c = s[j];
            json_object row;
            row.field("j", j);
            row.field("numerator", numerator(c).str());
            row.field("denominator", denominator(c).str());
            row.field("pi_power", cfg.what == "inverted" ? -j : 0);
            rows.push_back(row.str());
        }
        json_object o;
        o.field("method", std::string("series"));
        o.field("what", cfg.what);
        o.field("order", cfg.order);
        if (cfg.what == "period") o.field("note", note);
        o.field_null("tolerance");
        o.field("version", std::string(nlosc::library_version));
        o.field_raw("coefficients", json_array(rows));
        text = o.str() + "\n";
    }
    return emit(cfg.out, text);
}

// ---- pade ------------------------------------------------------------------

struct pade_config {
    int max_order = 10;
    bool dlog = false;
    output_options out;
};

int run_pade(const pade_config& cfg) {
    nlosc::scan_result scan =
        cfg.dlog ? nlosc::dlog_singularity_scan(cfg.max_order)
                 : nlosc::singularity_scan(cfg.max_order);

    auto skipped = [&](int N) {
        for (int s : scan.skipped_orders)
            if (s == N) return true;
        return false;
    };
    auto entry_for = [&](int N) -> const nlosc::singularity_estimate* {
        for (const auto& e : scan.per_order)
            if (e.pade_order.second == N) return &e;
        return nullptr;
    };

    std::string text;
    if (cfg.out.format == "csv") {
        text = cfg.dlog ? "kind,N,re,im,residual,exponent\n" : "kind,N,re,im,residual\n";
        auto row = [&](const std::string& kind, int N, const nlosc::singularity_estimate* e) {
            text += kind + "," + std::to_string(N);
            if (e) {
                text += "," + f17(e->location.real()) + "," + f17(e->location.imag()) + "," +
                        (e->residual ? f17(*e->residual) : "");
                if (cfg.dlog) text += "," + (e->exponent ? f17(*e->exponent) : "");
            } else {
                text += cfg.dlog ? ",,,," : ",,,";
            }
            text += "\n";
        };
        for (int N = 2; N <= cfg.max_order; ++N) {
            if (skipped(N))
                row("skipped", N, nullptr);
            else if (const auto* e = entry_for(N))
                row("order", N, e);
        }
        row("final", scan.final.pade_order.second, &scan.final);
    } else {
        auto entry_json = [&](const nlosc::singularity_estimate& e) {
            json_object row;
            row.field("order", e.pade_order.second);
            row.field("re", e.location.real());
            row.field("im", e.location.imag());
            if (e.residual)
                row.field("residual", *e.residual);
            else
                row.field_null("residual");
            if (cfg.dlog) {
                if (e.exponent)
                    row.field("exponent", *e.exponent);
                else
                    row.field_null("exponent");
            }
            row.field("conjugate_paired", e.conjugate_paired);
            return row.str();
        };
        std::vector<std::string> rows;
        for (const auto& e : scan.per_order) rows.push_back(entry_json(e));
        std::vector<std::string> skipped_items;
        for (int s : scan.skipped_orders) skipped_items.push_back(std::to_string(s));
        json_object o;
        o.field("method", std::string(cfg.dlog ? "dlog-pade" : "pade"));
        o.field_null("tolerance");
        o.field("version", std::string(nlosc::library_version));
        o.field_raw("per_order", json_array(rows));
        o.field_raw("skipped_orders", json_array(skipped_items));
        o.field_raw("final", entry_json(scan.final));
        text = o.str() + "\n";
    }
    return emit(cfg.out, text);
}

// ---- radius ----------------------------------------------------------------

struct radius_config {
    std::string what = "period";
    int order = 39;
    std::string method = "two-step";
    output_options out;
};

int run_radius(const radius_config& cfg) {
    nlosc::radius_estimator est = cfg.method == "ratio" ? nlosc::radius_estimator::ratio
                                  : cfg.method == "root" ? nlosc::radius_estimator::root
                                                         : nlosc::radius_estimator::two_step;
    nlosc::series s =
        cfg.what == "csq" ? nlosc::csq_series(cfg.order) : nlosc::period_series(cfg.order);
    nlosc::radius_estimate r = nlosc::radius_estimate_from(s.coeffs, est);

    std::string text;
    if (cfg.out.format == "csv") {
        text = "kind,j,estimate\n";
        for (const auto& [j, v] : r.per_order)
            text += "order," + std::to_string(j) + "," + f17(v) + "\n";
        for (int j : r.skipped) text += "skipped," + std::to_string(j) + ",\n";
        text += "extrapolated,," + f17(r.extrapolated) + "\n";
    } else {
        std::vector<std::string> rows;
        for (const auto& [j, v] : r.per_order) {
            json_object row;
            row.field("j", j);
            row.field("estimate", v);
            rows.push_back(row.str());
        }
        std::vector<std::string> skipped_items;
        for (int j : r.skipped) skipped_items.push_back(std::to_string(j));
        json_object o;
        o.field("method", std::string("radius"));
        o.field("estimator", std::string(nlosc::estimator_name(est)));
        o.field("what", cfg.what);
        o.field("order", cfg.order);
        o.field_null("tolerance");
        o.field("version", std::string(nlosc::library_version));
        o.field_raw("per_order", json_array(rows));
        o.field_raw("skipped", json_array(skipped_items));
        o.field("extrapolated", r.extrapolated);
        text = o.str() + "\n";
    }
    return emit(cfg.out, text);
}

// ---- figure pt -------------------------------------------------------------

struct figure_pt_config {
    double amax = 3.5;
    double step = 0.05;
    std::vector<int> orders = {2, 4, 6, 8};
    output_options out;
};

int validate_orders(const std::vector<int>& orders, bool require_even) {
    if (orders.empty()) {
        std::fprintf(stderr, "error: --orders must be nonempty\n");
        return 1;
    }
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1 || (require_even && orders[i] % 2 != 0)) {
            std::fprintf(stderr, "error: --orders entries must be positive%s\n",
                         require_even ? " even integers" : " integers");
            return 1;
        }
        if (i > 0 && orders[i] <= orders[i - 1]) {
            std::fprintf(stderr, "error: --orders must be strictly ascending\n");
            return 1;
        }
    }
    return 0;
}

int run_figure_pt(const figure_pt_config& cfg) {
    if (int rc = validate_orders(cfg.orders, /*require_even=*/true)) return rc;
    if (!(cfg.step > 0) || !(cfg.amax >= cfg.step)) {
        std::fprintf(stderr, "error: require 0 < --step <= --amax\n");
        return 1;
    }
    const double quad_tol = 1e-12;
    nlosc::series s = nlosc::period_series(cfg.orders.back());
    int count = static_cast<int>(std::floor(cfg.amax / cfg.step + 1e-9));

    std::string text;
    std::vector<std::string> json_rows;
    if (cfg.out.format == "csv") {
        text = "A,T_exact";
        for (int N : cfg.orders) text += ",T_series_" + std::to_string(N);
        text += "\n";
    }
    for (int i = 1; i <= count; ++i) {
        double A = i * cfg.step;
        double t_exact = nlosc::period_quad(A, quad_tol).period;
        if (cfg.out.format == "csv") {
            text += f17(A) + "," + f17(t_exact);
            for (int N : cfg.orders)
                text += "," + f17(two_pi * nlosc::evaluate_partial_sum(s, A * A, N));
            text += "\n";
        } else {
            json_object row;
            row.field("A", A);
            row.field("T_exact", t_exact);
            for (int N : cfg.orders)
                row.field("T_series_" + std::to_string(N),
                          two_pi * nlosc::evaluate_partial_sum(s, A * A, N));
            json_rows.push_back(row.str());
        }
    }
    if (cfg.out.format == "json") {
        json_object o;
        o.field("method", std::string("figure-pt"));
        o.field("tolerance", quad_tol);
        o.field("version", std::string(nlosc::library_version));
        std::vector<std::string> order_items;
        for (int N : cfg.orders) order_items.push_back(std::to_string(N));
        o.field_raw("orders", json_array(order_items));
        o.field_raw("rows", json_array(json_rows));
        text = o.str() + "\n";
    }
    return emit(cfg.out, text);
}

// ---- figure ipt ------------------------------------------------------------

struct figure_ipt_config {
    double amax = 3.0;
    std::vector<int> orders = {1, 2, 3, 4, 5, 6};
    output_options out;
};

int run_figure_ipt(const figure_ipt_config& cfg) {
    if (int rc = validate_orders(cfg.orders, /*require_even=*/false)) return rc;
    if (!(cfg.amax > 0)) {
        std::fprintf(stderr, "error: require --amax > 0\n");
        return 1;
    }
    const double quad_tol = 1e-10;
    const int points = 50;
    nlosc::series inv = nlosc::inverted_period_series(cfg.orders.back());
    double t_min = nlosc::period_quad(cfg.amax, 1e-12).period;

    // Invert T(A) = t by bisection; T is strictly decreasing on A > 0.
    auto a_exact_of = [&](double t) {
        double lo = 0.0, hi = cfg.amax + 1e-6;
        if (t > two_pi + 1e-9 || t < nlosc::period_quad(hi, quad_tol).period - 1e-9)
            throw nlosc::no_convergence("figure ipt: grid period does not bracket a root");
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
            double mid = 0.5 * (lo + hi);
            (nlosc::period_quad(mid, quad_tol).period > t ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    std::string text;
    std::vector<std::string> json_rows;
    if (cfg.out.format == "csv") {
        text = "T,A_exact";
        for (int N : cfg.orders) text += ",A_" + std::to_string(N);
        text += ",flag\n";
    }
    for (int i = 0; i < points; ++i) {
        double t = t_min + (two_pi - t_min) * i / (points - 1);
        double a_exact = a_exact_of(t);
        double tau = (t - two_pi) / nlosc::pi;
        std::vector<double> rho_n;
        for (int N : cfg.orders) rho_n.push_back(nlosc::evaluate_partial_sum(inv, tau, N));

        std::vector<std::string> flags;
        for (std::size_t k = 0; k < rho_n.size(); ++k)
            if (rho_n[k] < 0) flags.push_back("rho_" + std::to_string(cfg.orders[k]) + "<0");

        if (cfg.out.format == "csv") {
            text += f17(t) + "," + f17(a_exact);
            for (double r : rho_n) text += "," + (r < 0 ? std::string() : f17(std::sqrt(r)));
            std::string flag;
            for (std::size_t k = 0; k < flags.size(); ++k) flag += (k ? ";" : "") + flags[k];
            text += "," + flag + "\n";
        } else {
            json_object row;
            row.field("T", t);
            row.field("A_exact", a_exact);
            for (std::size_t k = 0; k < rho_n.size(); ++k) {
                std::string key = "A_" + std::to_string(cfg.orders[k]);
                if (rho_n[k] < 0)
                    row.field_null(key);
                else
                    row.field(key, std::sqrt(rho_n[k]));
            }
            std::vector<std::string> flag_items;
            for (const auto& fl : flags) flag_items.push_back(json_string(fl));
            row.field_raw("flags", json_array(flag_items));
            json_rows.push_back(row.str());
        }
    }
    if (cfg.out.format == "json") {
        json_object o;
        o.field("method", std::string("figure-ipt"));
        o.field("tolerance", quad_tol);
        o.field("version", std::string(nlosc::library_version));
        std::vector<std::string> order_items;
        for (int N : cfg.orders) order_items.push_back(std::to_string(N));
        o.field_raw("orders", json_array(order_items));
        o.field_raw("rows", json_array(json_rows));
        text = o.str() + "\n";
    }
    return emit(cfg.out, text);
}

// ---- verify ----------------------------------------------------------------

struct verify_config {
    bool json = false;
    output_options out;
};

int run_verify(const verify_config& cfg) {
    std::vector<nlosc::check_result> results = nlosc::run_all_checks();
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;

    std::string text;
    if (cfg.json || cfg.out.format == "json") {
        std::vector<std::string> rows;
        for (const auto& r : results) {
            json_object row;
            row.field("id", r.id);
            row.field("name", r.name);
            row.field("passed", r.passed);
            row.field("detail", r.detail);
            rows.push_back(row.str());
        }
        json_object o;
        o.field("method", std::string("verify"));
        o.field_null("tolerance");
        o.field("version", std::string(nlosc::library_version));
        o.field("passed", static_cast<int>(results.size()) - failed);
        o.field("failed", failed);
        o.field_raw("results", json_array(rows));
        text = o.str() + "\n";
    } else if (cfg.out.format == "csv") {
        text = "id,name,passed,detail\n";
        for (const auto& r : results)
            text += std::to_string(r.id) + "," + r.name + "," +
                    (r.passed ? "true" : "false") + "," + csv_quote(r.detail) + "\n";
    } else {
        char line[600];
        for (const auto& r : results) {
            std::snprintf(line, sizeof line, "%s %2d %-26s %s\n",
                          r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                          r.detail.c_str());
            text += line;
        }
        std::snprintf(line, sizeof line, "%d/%d checks passed\n",
                      static_cast<int>(results.size()) - failed,
                      static_cast<int>(results.size()));
        text += line;
    }
    if (int rc = emit(cfg.out, text)) return rc;
    return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "nlosc: period and small-amplitude series analysis of the oscillator "
        "x'' + (1 + x'^2) x = 0"};
    app.require_subcommand(1);

    period_config pc;
    CLI::App* period = app.add_subcommand("period", "compute the period at one amplitude");
    period->add_option("--amplitude", pc.amplitude, "oscillation amplitude A > 0")
        ->required()
        ->check(CLI::PositiveNumber);
    period->add_option("--method", pc.method,
                       "quad | ode | series:N | hb | asymptotic")
        ->capture_default_str();
    period->add_option("--tol", pc.tol, "tolerance (default: 1e-12 quad, 1e-11 ode)")
        ->check(CLI::PositiveNumber);
    add_output_flags(period, pc.out, "json");

    series_config sc;
    CLI::App* series = app.add_subcommand(
        "series", "exact rational series coefficients (csq rows are c_j; period rows "
                  "are T/(2*pi) coefficients, true coefficient = value * 2*pi; inverted "
                  "rows are q_k with true coefficient q_k * pi^-k)");
    series->add_option("--what", sc.what, "csq | period | inverted")
        ->required()
        ->check(CLI::IsMember({"csq", "period", "inverted"}));
    series->add_option("--order", sc.order, "truncation order N >= 0")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_output_flags(series, sc.out, "csv");

    pade_config pdc;
    CLI::App* pade = app.add_subcommand(
        "pade", "diagonal Pade scan for the nearest singularity of the period series");
    pade->add_option("--max-order", pdc.max_order, "largest diagonal order N (>= 2)")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    pade->add_flag("--dlog", pdc.dlog, "scan the logarithmic derivative instead");
    add_output_flags(pade, pdc.out, "csv");

    radius_config rc;
    CLI::App* radius = app.add_subcommand(
        "radius", "radius-of-convergence estimate from series coefficients");
    radius->add_option("--what", rc.what, "csq | period")
        ->check(CLI::IsMember({"csq", "period"}))
        ->capture_default_str();
    radius->add_option("--order", rc.order, "series truncation order (>= 5)")
        ->check(CLI::Range(5, 1000000))
        ->capture_default_str();
    radius->add_option("--method", rc.method, "ratio | two-step | root")
        ->check(CLI::IsMember({"ratio", "two-step", "root"}))
        ->capture_default_str();
    add_output_flags(radius, rc.out, "csv");

    CLI::App* figure = app.add_subcommand("figure", "figure reproduction data");
    figure->require_subcommand(1);

    figure_pt_config fpc;
    CLI::App* fig_pt = figure->add_subcommand(
        "pt", "period vs amplitude: quadrature against series partial sums");
    fig_pt->add_option("--amax", fpc.amax, "largest amplitude")->capture_default_str();
    fig_pt->add_option("--step", fpc.step, "amplitude step")->capture_default_str();
    fig_pt->add_option("--orders", fpc.orders, "even partial-sum orders, ascending")
        ->delimiter(',')
        ->capture_default_str();
    add_output_flags(fig_pt, fpc.out, "csv");

    figure_ipt_config fic;
    CLI::App* fig_ipt = figure->add_subcommand(
        "ipt", "inverted series: amplitude vs period on a 50-point grid");
    fig_ipt->add_option("--amax", fic.amax,
                        "amplitude fixing the lower grid edge T_min = T(amax)")
        ->capture_default_str();
    fig_ipt->add_option("--orders", fic.orders, "partial-sum orders, ascending")
        ->delimiter(',')
        ->capture_default_str();
    add_output_flags(fig_ipt, fic.out, "csv");

    verify_config vc;
    CLI::App* verify =
        app.add_subcommand("verify", "run the cross-oracle verification suite");
    verify->add_flag("--json", vc.json, "machine-readable results");
    add_output_flags(verify, vc.out, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (period->parsed()) return run_period(pc);
        if (series->parsed()) return run_series(sc);
        if (pade->parsed()) return run_pade(pdc);
        if (radius->parsed()) return run_radius(rc);
        if (figure->parsed() && fig_pt->parsed()) return run_figure_pt(fpc);
        if (figure->parsed() && fig_ipt->parsed()) return run_figure_ipt(fic);
        if (verify->parsed()) return run_verify(vc);
    } catch (const nlosc::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
