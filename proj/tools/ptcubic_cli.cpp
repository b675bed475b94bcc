// ptcubic — command-line front end for the series, resummation, shooting,
// and asymptotics toolkit for H = p^2 + x^2/4 + i*l*x^3.
//
// Subcommands: coeffs, pade, energy, shoot, growth, dispersion, bounce,
// verify.  Output formats: table (human), csv, json; csv/json output is
// byte-stable for identical configuration and cache (verify is the one
// exception: its report carries wall-clock timings).  Errors are emitted to
// stderr as one-line machine-readable JSON records.

#include "ptcubic/asymptotics.hpp"
#include "ptcubic/errors.hpp"
#include "ptcubic/numeric.hpp"
#include "ptcubic/pade.hpp"
#include "ptcubic/perturbation.hpp"
#include "ptcubic/quadrature.hpp"
#include "ptcubic/reference_values.hpp"
#include "ptcubic/spectral.hpp"
#include "ptcubic/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace ptcubic;

constexpr const char* kCacheFileName = "bn_cache.txt";

enum class Format { table, csv, json };

Format parse_format(const std::string& text) {
    if (text == "table") return Format::table;
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw InputError("unknown format '" + text + "' (expected table, csv, or json)");
}

// ---------------------------------------------------------------- tables

struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print(std::ostream& os) const {
        std::vector<size_t> width(header.size());
        for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
        for (const auto& row : rows)
            for (size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        auto print_row = [&](const std::vector<std::string>& row) {
            for (size_t c = 0; c < row.size(); ++c)
                os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c]))
                   << row[c];
            os << '\n';
        };
        print_row(header);
        std::string rule;
        for (size_t c = 0; c < header.size(); ++c)
            rule += std::string(width[c], '-') + (c + 1 < header.size() ? "  " : "");
        os << rule << '\n';
        for (const auto& row : rows) print_row(row);
    }

    void print_csv(std::ostream& os) const {
        auto cell = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string quoted = "\"";
            for (char ch : s) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
            return quoted + "\"";
        };
        for (size_t c = 0; c < header.size(); ++c)
            os << (c ? "," : "") << cell(header[c]);
        os << '\n';
        for (const auto& row : rows) {
            for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell(row[c]);
            os << '\n';
        }
    }
};

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

// ------------------------------------------------------------- the cache

std::optional<fs::path> resolve_cache_path(const std::string& explicit_path) {
    if (!explicit_path.empty()) return fs::path(explicit_path);
    if (const char* dir = std::getenv("PTCUBIC_CACHE_DIR"); dir && *dir)
        return fs::path(dir) / kCacheFileName;
    return std::nullopt;
}

PerturbationSeries truncated(PerturbationSeries series, int order) {
    if (series.max_order > order) {
        series.coefficients.resize(static_cast<size_t>(order));
        series.max_order = order;
    }
    return series;
}

// Cache policy: use the cache when it is present, parses, carries our
// hamiltonian tag, and holds at least `order` coefficients; otherwise
// recompute and rewrite it.  Without a cache location, just compute.
PerturbationSeries obtain_series(int order, const std::string& cache_flag,
                                 int order_ceiling) {
    const auto path = resolve_cache_path(cache_flag);
    if (!path) return compute_coefficients(order, order_ceiling);

    if (fs::exists(*path)) {
        try {
            PerturbationSeries cached = read_cache(*path);
            if (cached.hamiltonian_tag == kHamiltonianTag && cached.max_order >= order)
                return truncated(std::move(cached), order);
        } catch (const CacheError&) {
            // stale or damaged: fall through to recompute and rewrite
        }
    }
    PerturbationSeries series = compute_coefficients(order, order_ceiling);
    if (path->has_parent_path()) fs::create_directories(path->parent_path());
    write_cache(series, *path);
    return series;
}

// --------------------------------------------------------------- globals

struct GlobalOptions {
    std::string format_text = "table";
    int precision = 30;
    std::string cache_path;
    int order_ceiling = kDefaultOrderCeiling;

    Format format() const { return parse_format(format_text); }
};

void emit(const GlobalOptions& opts, const TextTable& table, const json& payload) {
    switch (opts.format()) {
        case Format::table: table.print(std::cout); break;
        case Format::csv: table.print_csv(std::cout); break;
        case Format::json: std::cout << payload.dump(2) << '\n'; break;
    }
}

// ------------------------------------------------------------- commands

int cmd_coeffs(const GlobalOptions& opts, int order) {
    const PerturbationSeries series = obtain_series(order, opts.cache_path, opts.order_ceiling);
    TextTable table;
    table.header = {"n", "b_n"};
    json rows = json::array();
    for (int n = 1; n <= series.max_order; ++n) {
        table.rows.push_back({std::to_string(n), series.b(n).str()});
        rows.push_back({{"n", n}, {"b", series.b(n).str()}});
    }
    json payload = {{"command", "coeffs"},
                    {"hamiltonian", series.hamiltonian_tag},
                    {"order", series.max_order},
                    {"e0", "1/2"},
                    {"coefficients", std::move(rows)}};
    emit(opts, table, payload);
    return 0;
}

int cmd_pade(const GlobalOptions& opts, const std::string& lambda_text, int depth,
             int order) {
    const Rat lambda = parse_rational(lambda_text);
    const Rat t = lambda * lambda;
    const PerturbationSeries series = obtain_series(order, opts.cache_path, opts.order_ceiling);
    const PadeLadder lad = ladder(series, t, depth, opts.precision);
    const StieltjesReport chain = stieltjes_check(lad);

    TextTable table;
    table.header = {"N", "diag", "subdiag"};
    json ladder_rows = json::array();
    for (int n = 0; n <= depth; ++n) {
        const std::string diag = format_significant(lad.diagonal[static_cast<size_t>(n)],
                                                    opts.precision);
        const std::string sub = format_significant(lad.subdiagonal[static_cast<size_t>(n)],
                                                   opts.precision);
        table.rows.push_back({std::to_string(n), diag, sub});
        ladder_rows.push_back({{"N", n}, {"diag", diag}, {"subdiag", sub}});
    }

    const char* verdict = chain.verdict == ChainVerdict::holds       ? "holds"
                          : chain.verdict == ChainVerdict::violated ? "violated"
                                                                    : "inconclusive";
    json stieltjes = {
        {"verdict", verdict},
        {"chain_holds", chain.chain_holds},
        {"first_violation",
         chain.first_violation
             ? json{{"comparison", chain.first_violation->comparison},
                    {"gap", format_significant(chain.first_violation->gap, 3)}}
             : json(nullptr)},
        {"min_subdiagonal_gap", format_significant(chain.min_subdiagonal_gap, 6)},
        {"min_diagonal_gap", format_significant(chain.min_diagonal_gap, 6)},
        {"separation_gap", format_significant(chain.separation_gap, 6)},
        {"margin", format_significant(chain.margin, 2)},
    };
    json payload = {{"command", "pade"},     {"lambda", lambda_text},
                    {"t", format_significant(t, opts.precision)},
                    {"depth", depth},        {"precision", opts.precision},
                    {"ladder", ladder_rows}, {"stieltjes", stieltjes}};

    if (opts.format() == Format::table) {
        table.print(std::cout);
        std::cout << "\nordering chain: " << verdict;
        if (chain.first_violation)
            std::cout << " (first at " << chain.first_violation->comparison << ")";
        std::cout << "\nmargin 10^(2-p) = " << format_significant(chain.margin, 2)
                  << ", smallest gaps: subdiagonal "
                  << format_significant(chain.min_subdiagonal_gap, 3) << ", diagonal "
                  << format_significant(chain.min_diagonal_gap, 3) << ", separation "
                  << format_significant(chain.separation_gap, 3) << '\n';
    } else {
        emit(opts, table, payload);
    }
    return 0;
}

int cmd_energy(const GlobalOptions& opts, const std::vector<std::string>& lambdas,
               int depth, int order) {
    const PerturbationSeries series = obtain_series(order, opts.cache_path, opts.order_ceiling);
    TextTable table;
    table.header = {"lambda", "diag_energy", "offdiag_energy", "average"};
    json rows = json::array();
    for (const auto& text : lambdas) {
        const Rat lambda = parse_rational(text);
        const EnergyEstimate est = energy_estimate(series, lambda, depth, opts.precision);
        const std::string diag = format_significant(est.diag_energy, opts.precision);
        const std::string off = format_significant(est.offdiag_energy, opts.precision);
        const std::string avg = format_significant(est.average, opts.precision);
        table.rows.push_back({text, diag, off, avg});
        rows.push_back({{"lambda", text},
                        {"diag_energy", diag},
                        {"offdiag_energy", off},
                        {"average", avg}});
    }
    json payload = {{"command", "energy"},
                    {"depth", depth},
                    {"order", order},
                    {"precision", opts.precision},
                    {"results", std::move(rows)}};
    emit(opts, table, payload);
    return 0;
}

int cmd_shoot(const GlobalOptions& opts, const std::vector<std::string>& lambdas,
              int depth, int order, double step_tolerance, double root_tolerance,
              int max_iterations, double domain_radius, double match_point,
              double guess_re, double guess_im, bool explicit_guess) {
    // The guess comes from the resummed series unless one is given.
    std::optional<PerturbationSeries> series;
    if (!explicit_guess) {
        try {
            series = obtain_series(order, opts.cache_path, opts.order_ceiling);
        } catch (const Error&) {
            series.reset(); // fall back to the unperturbed level
        }
    }

    TextTable table;
    table.header = {"lambda", "re_energy", "im_energy", "residual", "iterations"};
    json rows = json::array();
    for (const auto& text : lambdas) {
        const Rat lambda = parse_rational(text);
        if (!(lambda > 0)) throw InputError("shoot requires lambda > 0, got " + text);

        ShootingConfig config;
        config.step_tolerance = step_tolerance;
        config.root_tolerance = root_tolerance;
        config.max_iterations = max_iterations;
        config.domain_radius = domain_radius;
        config.match_point = match_point;
        if (explicit_guess) {
            config.energy_guess = {guess_re, guess_im};
        } else if (series && series->max_order >= 4) {
            const int usable_depth = std::min(depth, (series->max_order - 2) / 2);
            const EnergyEstimate est = energy_estimate(*series, lambda, usable_depth, 20);
            config.energy_guess = {static_cast<double>(to_real(est.average)), 0.0};
        }

        const EigenResult result =
            solve_ground_energy(static_cast<double>(to_real(lambda)), config);
        table.rows.push_back({text, fmt_double(result.energy.real()),
                              fmt_double(result.energy.imag()), fmt_double(result.residual),
                              std::to_string(result.iterations)});
        rows.push_back({{"lambda", text},
                        {"re_energy", result.energy.real()},
                        {"im_energy", result.energy.imag()},
                        {"residual", result.residual},
                        {"iterations", result.iterations}});
    }
    json payload = {{"command", "shoot"},
                    {"step_tolerance", step_tolerance},
                    {"root_tolerance", root_tolerance},
                    {"results", std::move(rows)}};
    emit(opts, table, payload);
    return 0;
}

int cmd_growth(const GlobalOptions& opts, int order, int depth, int richardson_order) {
    const PerturbationSeries series = obtain_series(order, opts.cache_path, opts.order_ceiling);
    const GrowthReport report = growth_report(series, depth, opts.precision);

    TextTable table;
    table.header = {"n", "b_n", "leading_prediction", "wkb_prediction", "leading_ratio",
                    "wkb_ratio"};
    json rows = json::array();
    for (const auto& row : report.rows) {
        const std::string lead = format_real(row.leading_prediction, opts.precision);
        const std::string wkb = format_real(row.wkb_prediction, opts.precision);
        const std::string lr = format_real(row.leading_ratio, 12);
        const std::string wr = format_real(row.wkb_ratio, 12);
        table.rows.push_back({std::to_string(row.n), row.b_n.str(), lead, wkb, lr, wr});
        rows.push_back({{"n", row.n},
                        {"b", row.b_n.str()},
                        {"leading_prediction", lead},
                        {"wkb_prediction", wkb},
                        {"leading_ratio", lr},
                        {"wkb_ratio", wr},
                        {"wkb_depth", row.wkb_depth}});
    }

    json payload = {{"command", "growth"}, {"order", order},
                    {"depth", depth},      {"precision", opts.precision},
                    {"rows", std::move(rows)}};
    std::string extrapolated;
    if (richardson_order > 0 && static_cast<int>(report.rows.size()) > richardson_order) {
        std::vector<Real> ratios;
        ratios.reserve(report.rows.size());
        for (const auto& row : report.rows) ratios.push_back(row.leading_ratio);
        extrapolated = format_real(richardson_extrapolate(ratios, richardson_order), 12);
        payload["richardson"] = {{"order", richardson_order},
                                 {"leading_ratio_limit", extrapolated}};
    }

    if (opts.format() == Format::table) {
        table.print(std::cout);
        if (!extrapolated.empty())
            std::cout << "\nrichardson(" << richardson_order
                      << ") leading-ratio limit: " << extrapolated << '\n';
    } else {
        emit(opts, table, payload);
    }
    return 0;
}

QuadratureConfig make_quadrature_config(const std::string& scheme, int nodes,
                                        const std::string& qtol) {
    QuadratureConfig config;
    if (scheme == "de" || scheme == "double-exponential")
        config.scheme = QuadratureScheme::double_exponential;
    else if (scheme == "gl" || scheme == "gauss-legendre")
        config.scheme = QuadratureScheme::gauss_legendre;
    else
        throw InputError("unknown quadrature scheme '" + scheme + "'");
    config.nodes = nodes;
    config.rel_tolerance = to_real(parse_rational(qtol));
    if (!(config.rel_tolerance > 0)) throw InputError("quadrature tolerance must be > 0");
    return config;
}

int cmd_dispersion(const GlobalOptions& opts, std::vector<int> ns,
                   const std::string& scheme, int nodes, const std::string& qtol) {
    if (ns.empty()) for (int n = 1; n <= 10; ++n) ns.push_back(n);
    const QuadratureConfig config = make_quadrature_config(scheme, nodes, qtol);

    TextTable table;
    table.header = {"n", "value", "abs_value", "closed_form", "rel_delta", "nodes",
                    "est_error"};
    json rows = json::array();
    for (int n : ns) {
        const DispersionMoment m = dispersion_moment(
            n, [](const Real& t) { return discontinuity(t, kRealDigits); }, config);
        const Real rel = abs(m.abs_value - m.closed_form_reference) / m.closed_form_reference;
        table.rows.push_back({std::to_string(n), format_real(m.value, opts.precision),
                              format_real(m.abs_value, opts.precision),
                              format_real(m.closed_form_reference, opts.precision),
                              format_real(rel, 3), std::to_string(m.nodes_used),
                              format_real(m.estimated_error, 3)});
        rows.push_back({{"n", n},
                        {"value", format_real(m.value, opts.precision)},
                        {"abs_value", format_real(m.abs_value, opts.precision)},
                        {"closed_form", format_real(m.closed_form_reference, opts.precision)},
                        {"rel_delta", format_real(rel, 3)},
                        {"nodes_used", m.nodes_used},
                        {"estimated_error", format_real(m.estimated_error, 3)}});
    }
    json payload = {{"command", "dispersion"},
                    {"precision", opts.precision},
                    {"quadrature", {{"scheme", scheme}, {"nodes", nodes}, {"tolerance", qtol}}},
                    {"results", std::move(rows)}};
    emit(opts, table, payload);
    return 0;
}

int cmd_bounce(const GlobalOptions& opts, const std::vector<std::string>& eps_list,
               const std::string& scheme, int nodes, const std::string& qtol) {
    const QuadratureConfig config = make_quadrature_config(scheme, nodes, qtol);
    TextTable table;
    table.header = {"eps", "closed_form", "numeric", "rel_delta", "nodes", "est_error"};
    json rows = json::array();
    for (const auto& text : eps_list) {
        const Rat eps = parse_rational(text);
        const BounceAction action = bounce_action(eps, config);
        const Real closed = to_real(action.closed_form);
        const Real rel = abs(action.numeric - closed) / closed;
        const std::string closed_text =
            action.closed_form.str(); // exact rational, e.g. "5/3"
        table.rows.push_back({text, closed_text, format_real(action.numeric, opts.precision),
                              format_real(rel, 3), std::to_string(action.nodes_used),
                              format_real(action.estimated_error, 3)});
        rows.push_back({{"eps", text},
                        {"closed_form", closed_text},
                        {"numeric", format_real(action.numeric, opts.precision)},
                        {"rel_delta", format_real(rel, 3)},
                        {"nodes_used", action.nodes_used},
                        {"estimated_error", format_real(action.estimated_error, 3)}});
    }
    json payload = {{"command", "bounce"},
                    {"precision", opts.precision},
                    {"quadrature", {{"scheme", scheme}, {"nodes", nodes}, {"tolerance", qtol}}},
                    {"results", std::move(rows)}};
    emit(opts, table, payload);
    return 0;
}

int cmd_verify(const GlobalOptions& opts, int order) {
    // Work from the cache verbatim when one is configured and readable, so
    // that cache damage shows up in the report; otherwise compute fresh.
    PerturbationSeries working;
    const auto path = resolve_cache_path(opts.cache_path);
    if (path && fs::exists(*path))
        working = read_cache_unvalidated(*path);
    else
        working = compute_coefficients(order, opts.order_ceiling);

    const VerificationReport report = run_verification(working);

    if (opts.format() == Format::table) {
        std::cout << format_report(report);
    } else if (opts.format() == Format::csv) {
        TextTable table;
        table.header = {"id", "name", "status", "seconds", "detail"};
        for (const auto& c : report.criteria) {
            const char* status = c.status == CriterionStatus::pass     ? "pass"
                                 : c.status == CriterionStatus::fail   ? "fail"
                                                                       : "skipped";
            std::ostringstream secs;
            secs.precision(3);
            secs << std::fixed << c.seconds;
            table.rows.push_back({std::to_string(c.id), c.name, status, secs.str(), c.detail});
        }
        table.print_csv(std::cout);
    } else {
        json criteria = json::array();
        int passed = 0, failed = 0, skipped = 0;
        for (const auto& c : report.criteria) {
            const char* status = c.status == CriterionStatus::pass     ? "pass"
                                 : c.status == CriterionStatus::fail   ? "fail"
                                                                       : "skipped";
            (c.status == CriterionStatus::pass      ? passed
                 : c.status == CriterionStatus::fail ? failed
                                                     : skipped)++;
            criteria.push_back({{"id", c.id},
                                {"name", c.name},
                                {"status", status},
                                {"detail", c.detail},
                                {"seconds", c.seconds}});
        }
        json payload = {{"command", "verify"}, {"series_order", working.max_order},
                        {"passed", passed},    {"failed", failed},
                        {"skipped", skipped},  {"criteria", std::move(criteria)}};
        std::cout << payload.dump(2) << '\n';
    }
    return report.any_failed() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"series, resummation, shooting, and asymptotics toolkit for "
                 "H = p^2 + x^2/4 + i*l*x^3"};
    app.require_subcommand(1);
    app.fallthrough(); // let global options appear after the subcommand

    GlobalOptions opts;
    app.add_option("--format", opts.format_text, "output format: table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", opts.precision, "significant decimal digits in output")
        ->check(CLI::Range(10, kMaxPrintDigits))
        ->capture_default_str();
    app.add_option("--cache", opts.cache_path,
                   "coefficient cache file (default: $PTCUBIC_CACHE_DIR/" +
                       std::string(kCacheFileName) + " when the variable is set)");
    app.add_option("--order-ceiling", opts.order_ceiling,
                   "safety ceiling on the series order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // coeffs
    int coeffs_order = 46;
    auto* coeffs = app.add_subcommand("coeffs", "exact series coefficients b_n");
    coeffs->add_option("--order", coeffs_order, "number of coefficients")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    // pade
    std::string pade_lambda = "1/8";
    int pade_depth = 22, pade_order = 46;
    auto* pade = app.add_subcommand("pade", "diagonal/subdiagonal ladder and ordering check");
    pade->add_option("--lambda", pade_lambda, "coupling (exact rational, t = lambda^2)")
        ->capture_default_str();
    pade->add_option("--depth", pade_depth, "ladder depth K")->capture_default_str();
    pade->add_option("--order", pade_order, "series order to use")->capture_default_str();

    // energy
    std::vector<std::string> energy_lambdas;
    int energy_depth = 22, energy_order = 46;
    auto* energy = app.add_subcommand("energy", "resummed ground-state energy estimates");
    energy->add_option("--lambda", energy_lambdas, "coupling(s), exact rationals")
        ->required()
        ->expected(-1);
    energy->add_option("--depth", energy_depth, "ladder depth K")->capture_default_str();
    energy->add_option("--order", energy_order, "series order to use")->capture_default_str();

    // shoot
    std::vector<std::string> shoot_lambdas;
    int shoot_depth = 22, shoot_order = 46, shoot_max_iter = 60;
    double shoot_tol = 1e-12, shoot_root_tol = 1e-10, shoot_radius = 0.0, shoot_match = 0.0;
    double guess_re = 0.5, guess_im = 0.0;
    auto* shoot = app.add_subcommand("shoot", "ground-state energy by direct integration");
    shoot->add_option("--lambda", shoot_lambdas, "coupling(s) > 0, exact rationals")
        ->required()
        ->expected(-1);
    shoot->add_option("--step-tol", shoot_tol, "local error per integration step")
        ->capture_default_str();
    shoot->add_option("--root-tol", shoot_root_tol, "matching-determinant tolerance")
        ->capture_default_str();
    shoot->add_option("--max-iter", shoot_max_iter, "secant iteration cap")
        ->capture_default_str();
    shoot->add_option("--radius", shoot_radius,
                      "integration endpoints +-L (0 = choose adaptively)")
        ->capture_default_str();
    shoot->add_option("--match-point", shoot_match, "matching location")
        ->capture_default_str();
    auto* guess_re_opt =
        shoot->add_option("--guess-re", guess_re, "energy guess, real part");
    shoot->add_option("--guess-im", guess_im, "energy guess, imaginary part");
    shoot->add_option("--depth", shoot_depth, "ladder depth for the default guess")
        ->capture_default_str();
    shoot->add_option("--order", shoot_order, "series order for the default guess")
        ->capture_default_str();

    // growth
    int growth_order = 46, growth_depth = 7, growth_richardson = 4;
    auto* growth = app.add_subcommand("growth", "large-order growth comparison");
    growth->add_option("--order", growth_order, "series order")->capture_default_str();
    growth->add_option("--depth", growth_depth, "correction depth 0..7")
        ->check(CLI::Range(0, 7))
        ->capture_default_str();
    growth->add_option("--richardson", growth_richardson,
                       "Richardson order for the ratio limit (0 = off)")
        ->capture_default_str();

    // dispersion
    std::vector<int> dispersion_ns;
    std::string dispersion_scheme = "de", dispersion_qtol = "1e-30";
    int dispersion_nodes = 200;
    auto* dispersion =
        app.add_subcommand("dispersion", "moment integral of the discontinuity");
    dispersion->add_option("--n", dispersion_ns, "moment order(s), default 1..10")
        ->expected(-1);
    dispersion->add_option("--scheme", dispersion_scheme, "quadrature scheme: de or gl")
        ->check(CLI::IsMember({"de", "gl", "double-exponential", "gauss-legendre"}))
        ->capture_default_str();
    dispersion->add_option("--nodes", dispersion_nodes, "Gauss-Legendre node count")
        ->capture_default_str();
    dispersion->add_option("--qtol", dispersion_qtol, "relative quadrature tolerance")
        ->capture_default_str();

    // bounce
    std::vector<std::string> bounce_eps;
    std::string bounce_scheme = "de", bounce_qtol = "1e-30";
    int bounce_nodes = 200;
    auto* bounce = app.add_subcommand("bounce", "bounce action: quadrature vs closed form");
    bounce->add_option("--eps", bounce_eps, "coupling(s) > 0, exact rationals")
        ->required()
        ->expected(-1);
    bounce->add_option("--scheme", bounce_scheme, "quadrature scheme: de or gl")
        ->check(CLI::IsMember({"de", "gl", "double-exponential", "gauss-legendre"}))
        ->capture_default_str();
    bounce->add_option("--nodes", bounce_nodes, "Gauss-Legendre node count")
        ->capture_default_str();
    bounce->add_option("--qtol", bounce_qtol, "relative quadrature tolerance")
        ->capture_default_str();

    // verify
    int verify_order = 46;
    auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
    verify->add_option("--order", verify_order,
                       "series order when no cache is configured")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (coeffs->parsed()) return cmd_coeffs(opts, coeffs_order);
        if (pade->parsed()) return cmd_pade(opts, pade_lambda, pade_depth, pade_order);
        if (energy->parsed()) return cmd_energy(opts, energy_lambdas, energy_depth, energy_order);
        if (shoot->parsed())
            return cmd_shoot(opts, shoot_lambdas, shoot_depth, shoot_order, shoot_tol,
                             shoot_root_tol, shoot_max_iter, shoot_radius, shoot_match,
                             guess_re, guess_im, guess_re_opt->count() > 0);
        if (growth->parsed()) return cmd_growth(opts, growth_order, growth_depth, growth_richardson);
        if (dispersion->parsed())
            return cmd_dispersion(opts, dispersion_ns, dispersion_scheme, dispersion_nodes,
                                  dispersion_qtol);
        if (bounce->parsed())
            return cmd_bounce(opts, bounce_eps, bounce_scheme, bounce_nodes, bounce_qtol);
        if (verify->parsed()) return cmd_verify(opts, verify_order);
    } catch (const Error& e) {
        json record = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << record.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        json record = {{"error", {{"code", "internal"}, {"message", e.what()}}}};
        std::cerr << record.dump() << '\n';
        return 1;
    }
    return 0;
}
