#include <mlucas/cli/commands.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include <mlucas/arith.hpp>
#include <mlucas/polyfam.hpp>
#include <mlucas/sequences.hpp>
#include <mlucas/symfun.hpp>

namespace mlucas::cli
{

using arith::GaussianDyadic;
using arith::Poly;
using arith::to_string;
using seq::Method;

namespace
{

CommandOutput usage(const std::string &msg)
{
    return {exit_usage, {}, "error: " + msg + "\n"};
}

bool is_poly_family(std::string_view f)
{
    return f == "mpoly" || f == "gmpoly";
}

bool is_gaussian_family(std::string_view f)
{
    return f == "gm" || f == "gmpoly";
}

const std::vector<Method> all_methods = {Method::Recurrence, Method::Binet,  Method::Explicit,
                                         Method::Symmetric,  Method::GenFun, Method::Relation};

// Empty string when (family, n, method) is a valid combination, else the reason.
std::string method_problem(std::string_view family, std::int64_t n, Method m)
{
    if (n < 0) {
        return m == Method::Binet ? std::string{}
                                  : "negative n is only available through the negative extension (method binet)";
    }
    if (m == Method::Relation && !is_gaussian_family(family)) {
        return "relation applies only to the Gaussian families gm and gmpoly";
    }
    if ((m == Method::Explicit || m == Method::Relation) && is_gaussian_family(family) && n == 0) {
        return std::string(seq::to_string(m)) + " requires n >= 1 for Gaussian families";
    }
    if (m == Method::Binet && is_poly_family(family)) {
        return "binet has no exact form for polynomial families at n >= 0";
    }
    return {};
}

GaussianDyadic number_value(std::string_view family, std::int64_t n, Method m)
{
    const bool g = family == "gm";
    const auto idx = static_cast<std::size_t>(n);
    switch (m) {
    case Method::Recurrence:
        return (g ? seq::gml_recurrence(n) : seq::ml_recurrence(n)).value;
    case Method::Binet:
        if (n < 0) {
            return (g ? seq::gml_negative(-n) : seq::ml_negative(-n)).value;
        }
        return (g ? seq::gml_binet(n) : seq::ml_binet(n)).value;
    case Method::Explicit:
        return (g ? seq::gml_explicit(n) : seq::ml_explicit(n)).value;
    case Method::Symmetric:
        return g ? symfun::sym_decompose_gml(n) : symfun::sym_decompose_ml(n);
    case Method::GenFun:
        return (g ? symfun::gf_gml(idx) : symfun::gf_ml(idx))[idx];
    case Method::Relation:
        return seq::gml_from_ml(n).value;
    }
    throw std::logic_error("unhandled method");
}

Poly poly_value(std::string_view family, std::int64_t n, Method m)
{
    const bool g = family == "gmpoly";
    const auto idx = static_cast<std::size_t>(n);
    switch (m) {
    case Method::Recurrence:
        return (g ? polyfam::gml_poly(n) : polyfam::ml_poly(n)).value;
    case Method::Binet:
        return (g ? polyfam::gml_poly_negative(-n) : polyfam::ml_poly_negative(-n)).value;
    case Method::Explicit:
        return (g ? polyfam::gml_poly_explicit(n) : polyfam::ml_poly_explicit(n)).value;
    case Method::Symmetric:
        return g ? symfun::sym_decompose_gml_poly(n) : symfun::sym_decompose_ml_poly(n);
    case Method::GenFun:
        return (g ? symfun::gf_gml_poly(idx) : symfun::gf_ml_poly(idx))[idx];
    case Method::Relation:
        return polyfam::gml_poly_from_ml(n).value;
    }
    throw std::logic_error("unhandled method");
}

template <typename V>
std::string term_csv(const TermRequest &req, const V &value)
{
    std::string out;
    if constexpr (std::is_same_v<V, Poly>) {
        out = "family,n,method,k," + std::string(csv_value_header) + "\n";
        const auto &cs = value.coeffs();
        const std::string prefix = req.family + "," + std::to_string(req.n) + "," + req.method + ",";
        if (cs.empty()) {
            out += prefix + "0," + csv_fields(GaussianDyadic{0}) + "\n";
        }
        for (std::size_t k = 0; k < cs.size(); ++k) {
            out += prefix + std::to_string(k) + "," + csv_fields(cs[k]) + "\n";
        }
    } else {
        out = "family,n,method," + std::string(csv_value_header) + "\n";
        out += req.family + "," + std::to_string(req.n) + "," + req.method + "," + csv_fields(value) + "\n";
    }
    return out;
}

template <typename V>
CommandOutput term_with(const TermRequest &req, const std::vector<Method> &methods,
                        const std::function<V(Method)> &compute)
{
    std::vector<std::pair<Method, V>> results;
    for (Method m : methods) {
        results.emplace_back(m, compute(m));
    }
    const V &value = results.front().second;
    const bool agree = std::all_of(results.begin(), results.end(), [&](const auto &r) { return r.second == value; });
    if (!agree) {
        CommandOutput o{exit_failure, {}, "error: methods disagree for " + req.family + " n=" + std::to_string(req.n) + "\n"};
        for (const auto &[m, v] : results) {
            o.err += "  " + std::string(seq::to_string(m)) + " = " + to_string(v) + "\n";
        }
        return o;
    }

    CommandOutput o;
    switch (req.format) {
    case Format::Text:
        o.out = to_string(value) + "\n";
        break;
    case Format::Json: {
        Json j{{"family", req.family}, {"n", req.n}, {"method", req.method}};
        if (req.method == "auto") {
            Json used = Json::array();
            for (const auto &r : results) {
                used.push_back(seq::to_string(r.first));
            }
            j["methods"] = std::move(used);
        }
        j["value"] = to_json(value);
        o.out = j.dump() + "\n";
        break;
    }
    case Format::Csv:
        o.out = term_csv(req, value);
        break;
    }
    return o;
}

std::string table1_text(const std::vector<GaussianDyadic> &gm)
{
    std::string out = "n\tGm_n\n";
    for (std::size_t n = 0; n < gm.size(); ++n) {
        out += std::to_string(n) + "\t" + to_string(gm[n]) + "\n";
    }
    return out;
}

template <typename T>
std::string series_text(const symfun::PowerSeries<T> &s)
{
    std::string out = "[";
    for (std::size_t k = 0; k <= s.order(); ++k) {
        out += (k ? ", " : "") + to_string(s[k]);
    }
    return out + "]\n";
}

template <typename T>
std::string series_csv(const symfun::PowerSeries<T> &s)
{
    std::string out;
    if constexpr (std::is_same_v<T, Poly>) {
        out = "k,j," + std::string(csv_value_header) + "\n";
        for (std::size_t k = 0; k <= s.order(); ++k) {
            const auto &cs = s[k].coeffs();
            if (cs.empty()) {
                out += std::to_string(k) + ",0," + csv_fields(GaussianDyadic{0}) + "\n";
            }
            for (std::size_t j = 0; j < cs.size(); ++j) {
                out += std::to_string(k) + "," + std::to_string(j) + "," + csv_fields(cs[j]) + "\n";
            }
        }
    } else {
        out = "k," + std::string(csv_value_header) + "\n";
        for (std::size_t k = 0; k <= s.order(); ++k) {
            out += std::to_string(k) + "," + csv_fields(s[k]) + "\n";
        }
    }
    return out;
}

template <typename T>
CommandOutput emit_series(const SeriesRequest &req, const symfun::PowerSeries<T> &s)
{
    CommandOutput o;
    switch (req.format) {
    case Format::Text:
        o.out = series_text(s);
        break;
    case Format::Json: {
        Json j{{"which", req.which}};
        const Json body = series_to_json(s);
        for (const auto &[k, v] : body.items()) {
            j[k] = v;
        }
        o.out = j.dump() + "\n";
        break;
    }
    case Format::Csv:
        o.out = series_csv(s);
        break;
    }
    return o;
}

} // namespace

CommandOutput cmd_term(const TermRequest &req)
{
    const std::string &f = req.family;
    if (f != "m" && f != "gm" && f != "mpoly" && f != "gmpoly") {
        return usage("unknown family '" + f + "' (expected m, gm, mpoly or gmpoly)");
    }
    std::vector<Method> methods;
    if (req.method == "auto") {
        for (Method m : all_methods) {
            if (method_problem(f, req.n, m).empty()) {
                methods.push_back(m);
            }
        }
    } else {
        const auto m = seq::parse_method(req.method);
        if (!m) {
            return usage("unknown method '" + req.method + "'");
        }
        if (auto why = method_problem(f, req.n, *m); !why.empty()) {
            return usage("method " + req.method + " is not valid for " + f + " at n=" + std::to_string(req.n) + ": "
                         + why);
        }
        methods.push_back(*m);
    }
    try {
        if (is_poly_family(f)) {
            return term_with<Poly>(req, methods, [&](Method m) { return poly_value(f, req.n, m); });
        }
        return term_with<GaussianDyadic>(req, methods, [&](Method m) { return number_value(f, req.n, m); });
    } catch (const std::invalid_argument &e) {
        return usage(e.what());
    }
}

CommandOutput cmd_table(const TableRequest &req)
{
    if (req.which != 1 && req.which != 2) {
        return usage("table must be 1 or 2");
    }
    if (req.rows < 1) {
        return usage("rows must be >= 1");
    }
    const std::int64_t last = req.rows - 1;
    CommandOutput o;
    if (req.which == 1) {
        const auto gm = seq::gml_recurrence_range(last);
        switch (req.format) {
        case Format::Text:
            o.out = table1_text(gm);
            break;
        case Format::Json: {
            Json rows = Json::array();
            for (std::size_t n = 0; n < gm.size(); ++n) {
                rows.push_back(Json{{"n", n}, {"gm", to_json(gm[n])}});
            }
            o.out = Json{{"table", 1}, {"rows", std::move(rows)}}.dump() + "\n";
            break;
        }
        case Format::Csv:
            o.out = "n," + std::string(csv_value_header) + "\n";
            for (std::size_t n = 0; n < gm.size(); ++n) {
                o.out += std::to_string(n) + "," + csv_fields(gm[n]) + "\n";
            }
            break;
        }
        return o;
    }

    const auto m = polyfam::ml_poly_range(last);
    const auto gm = polyfam::gml_poly_range(last);
    switch (req.format) {
    case Format::Text:
        o.out = "n\tm_n(x)\tGm_n(x)\n";
        for (std::size_t n = 0; n < m.size(); ++n) {
            o.out += std::to_string(n) + "\t" + to_string(m[n]) + "\t" + to_string(gm[n]) + "\n";
        }
        break;
    case Format::Json: {
        Json rows = Json::array();
        for (std::size_t n = 0; n < m.size(); ++n) {
            rows.push_back(Json{{"n", n}, {"m", to_json(m[n])}, {"gm", to_json(gm[n])}});
        }
        o.out = Json{{"table", 2}, {"rows", std::move(rows)}}.dump() + "\n";
        break;
    }
    case Format::Csv:
        o.out = "n,family,k," + std::string(csv_value_header) + "\n";
        for (std::size_t n = 0; n < m.size(); ++n) {
            for (const auto &[name, p] : {std::pair<const char *, const Poly *>{"m", &m[n]}, {"gm", &gm[n]}}) {
                for (std::size_t k = 0; k < p->coeffs().size(); ++k) {
                    o.out += std::to_string(n) + "," + name + "," + std::to_string(k) + ","
                             + csv_fields(p->coeffs()[k]) + "\n";
                }
            }
        }
        break;
    }
    return o;
}

CommandOutput cmd_series(const SeriesRequest &req)
{
    const std::string &w = req.which;
    const std::size_t order = req.order;
    if (w == "gm") {
        return emit_series(req, symfun::gf_gml(order));
    }
    if (w == "gm-even") {
        return emit_series(req, symfun::gf_gml_even(order));
    }
    if (w == "gm-odd") {
        return emit_series(req, symfun::gf_gml_odd(order));
    }
    if (w == "mpoly") {
        return emit_series(req, symfun::gf_ml_poly(order));
    }
    if (w == "gmpoly") {
        return emit_series(req, symfun::gf_gml_poly(order));
    }
    if (w == "kernel") {
        if (!req.d || !req.p) {
            return usage("series kernel requires both --d and --p");
        }
        symfun::SymKernel<GaussianDyadic> k;
        try {
            k = {arith::parse_gaussian(*req.d), arith::parse_gaussian(*req.p)};
        } catch (const std::invalid_argument &e) {
            return usage(std::string("bad kernel parameter: ") + e.what());
        }
        return emit_series(req, symfun::kernel_series(k, order));
    }
    return usage("unknown series '" + w + "' (expected gm, gm-even, gm-odd, mpoly, gmpoly or kernel)");
}

CommandOutput cmd_verify(const VerifyRequest &req)
{
    VerifyOptions opts = req.options;
    VerifyReport report;
    try {
        if (req.perturb) {
            opts.seeds = perturbed_seeds(*req.perturb);
        }
        report = run_verify(opts);
    } catch (const std::invalid_argument &e) {
        return usage(e.what());
    }

    CommandOutput o;
    o.exit_code = report.overall ? exit_ok : exit_failure;
    switch (req.format) {
    case Format::Text:
        for (const auto &c : report.checks) {
            o.out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + "  " + c.range;
            if (!c.passed) {
                o.out += "  " + c.detail;
            }
            o.out += "\n";
        }
        o.out += std::string("overall: ") + (report.overall ? "PASS" : "FAIL") + "\n";
        break;
    case Format::Json: {
        Json checks = Json::array();
        for (const auto &c : report.checks) {
            checks.push_back(Json{{"name", c.name},
                                  {"range", c.range},
                                  {"status", c.passed ? "pass" : "fail"},
                                  {"detail", c.detail}});
        }
        Json j{{"overall", report.overall}, {"max_n", opts.max_n}, {"max_poly_n", opts.max_poly_n},
               {"seed", opts.seed}};
        if (req.perturb) {
            j["perturb"] = *req.perturb;
        }
        j["checks"] = std::move(checks);
        o.out = j.dump() + "\n";
        break;
    }
    case Format::Csv:
        o.out = "name,range,status,detail\n";
        for (const auto &c : report.checks) {
            o.out += csv_escape(c.name) + "," + csv_escape(c.range) + "," + (c.passed ? "pass" : "fail") + ","
                     + csv_escape(c.detail) + "\n";
        }
        break;
    }
    if (!report.overall) {
        o.err = "verification failed\n";
    }
    return o;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact Mersenne Lucas and Gaussian Mersenne Lucas numbers and polynomials", "mlucas"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    TermRequest term;
    auto *term_cmd = app.add_subcommand("term", "Compute one term by a chosen method");
    term_cmd->add_option("--family", term.family, "m, gm, mpoly or gmpoly")->required();
    term_cmd->add_option("--n", term.n, "Index (negative allowed with binet or auto)")->required();
    term_cmd->add_option("--method", term.method, "recurrence, binet, explicit, symmetric, genfun, relation or auto")
        ->capture_default_str();

    TableRequest table;
    auto *table_cmd = app.add_subcommand("table", "Print the number table (1) or polynomial table (2)");
    table_cmd->add_option("which", table.which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    table_cmd->add_option("--rows", table.rows, "Number of rows starting at n = 0")->capture_default_str();

    SeriesRequest series;
    std::string d, p;
    auto *series_cmd = app.add_subcommand("series", "Expand a generating function");
    series_cmd->add_option("--which", series.which, "gm, gm-even, gm-odd, mpoly, gmpoly or kernel")->required();
    series_cmd->add_option("--order", series.order, "Last coefficient index")->capture_default_str();
    auto *d_opt = series_cmd->add_option("--d", d, "Kernel d (Gaussian dyadic, e.g. 3 or 1+1/2^1i)");
    auto *p_opt = series_cmd->add_option("--p", p, "Kernel p (Gaussian dyadic)");

    VerifyRequest verify;
    std::string perturb;
    auto *verify_cmd = app.add_subcommand("verify", "Run every cross-route check");
    verify_cmd->add_option("--max-n", verify.options.max_n, "Number-family range")->capture_default_str();
    verify_cmd->add_option("--max-poly-n", verify.options.max_poly_n, "Polynomial-family range")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify.options.seed, "Seed for the random alphabets")->capture_default_str();
    auto *perturb_opt = verify_cmd->add_option("--perturb", perturb, "Bump one recurrence seed (m1, gm0, gm1)")
                            ->check(CLI::IsMember({"m1", "gm0", "gm1"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return exit_usage;
    }

    const Format fmt = *parse_format(format);
    CommandOutput result;
    if (*term_cmd) {
        term.format = fmt;
        result = cmd_term(term);
    } else if (*table_cmd) {
        table.format = fmt;
        result = cmd_table(table);
    } else if (*series_cmd) {
        series.format = fmt;
        if (*d_opt) {
            series.d = d;
        }
        if (*p_opt) {
            series.p = p;
        }
        result = cmd_series(series);
    } else {
        verify.format = fmt;
        if (*perturb_opt) {
            verify.perturb = perturb;
        }
        result = cmd_verify(verify);
    }
    out << result.out;
    err << result.err;
    return result.exit_code;
}

} // namespace mlucas::cli
