// fmgl: fixed-memory Grunwald-Letnikov fractional calculus toolkit.
// Every subcommand emits deterministic CSV (header row, LF endings,
// round-trip number formatting) or, with --json, a single JSON document
// with a schema_version field. Exit codes: 0 ok, 2 usage, 3 numeric
// failure, 4 solver non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fmgl/analysis.hpp"
#include "fmgl/closed_forms.hpp"
#include "fmgl/csv.hpp"
#include "fmgl/errors.hpp"
#include "fmgl/fde_solver.hpp"
#include "fmgl/gl_derivative.hpp"
#include "fmgl/integral_form.hpp"
#include "fmgl/specfun.hpp"

using json = nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr double kPi = 3.141592653589793238462643383279502884;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Output {
    std::string out_path;  // empty: stdout
    bool as_json = false;
};

void emit(const Table& table, const Output& output, const std::string& command,
          const json& params, const std::optional<json>& sidecar = std::nullopt) {
    std::ostringstream body;
    if (output.as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = command;
        doc["params"] = params;
        doc["columns"] = table.columns;
        doc["rows"] = table.rows;
        if (sidecar) {
            doc["report"] = *sidecar;
        }
        body << doc.dump(2) << '\n';
    } else {
        fmgl::CsvWriter csv(body);
        csv.header(table.columns);
        for (const auto& row : table.rows) {
            csv.row(row);
        }
    }

    if (!output.out_path.empty()) {
        std::ofstream file(output.out_path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot open output file " + output.out_path);
        }
        file << body.str();
    } else {
        std::cout << body.str();
    }

    if (sidecar && !output.as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = command;
        doc["params"] = params;
        doc["report"] = *sidecar;
        if (!output.out_path.empty()) {
            std::ofstream file(output.out_path + ".json", std::ios::binary);
            file << doc.dump(2) << '\n';
        } else {
            std::cerr << doc.dump(2) << '\n';
        }
    }
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            values.push_back(std::stod(item));
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("expected a comma-separated list of numbers");
    }
    return values;
}

json ml_config_json(const fmgl::MLConfig& cfg) {
    return {{"ml_term_cap", cfg.term_cap},
            {"ml_reflect_threshold", cfg.alpha2_reflection_threshold}};
}

struct DeriveArgs {
    std::string fn;
    double alpha = 0.5;
    double L = 1.0;
    int N = 1024;
    double t0 = 0.0;
    double t1 = 1.0;
    std::string method = "discrete";
    int panels = 1024;
    bool compare = false;
    Output output;
};

int run_derive(const DeriveArgs& args) {
    const fmgl::FunctionSpec f = fmgl::FunctionSpec::from_name(args.fn);
    const fmgl::FracOrder order(args.alpha);
    const fmgl::GridSpec grid(args.L, args.N);

    const bool wants_oracle = args.compare || args.method == "oracle";
    if (wants_oracle && !fmgl::closed_form_derivative(f, args.t0, args.alpha, args.L)) {
        throw std::invalid_argument("no closed form available for --fn " + args.fn);
    }

    Table table;
    table.columns = {"t", "value"};
    if (args.compare) {
        table.columns.push_back("oracle");
        table.columns.push_back("abs_error");
    }

    std::vector<double> ts, values;
    if (args.method == "discrete") {
        const fmgl::Series series = fmgl::fm_gl_derivative_series(f, args.t0, args.t1, order, grid);
        for (int i = 0; i < series.size(); ++i) {
            ts.push_back(series.time_at(i));
            values.push_back(series.values[i]);
        }
    } else if (args.method == "integral") {
        bool warned = false;
        const int count = static_cast<int>(std::floor((args.t1 - args.t0) / grid.h * (1.0 + 1e-12))) + 1;
        for (int i = 0; i < count; ++i) {
            const double t = args.t0 + i * grid.h;
            const fmgl::IntegralFormResult r =
                fmgl::fm_gl_integral_form(f, t, order, args.L, args.panels);
            if (!warned && r.used_finite_differences && r.derivative_error_estimate > 1e-6) {
                std::cerr << "warning: finite-difference derivatives, estimated error "
                          << fmgl::format_double(r.derivative_error_estimate) << '\n';
                warned = true;
            }
            ts.push_back(t);
            values.push_back(r.value);
        }
    } else if (args.method == "oracle") {
        const int count = static_cast<int>(std::floor((args.t1 - args.t0) / grid.h * (1.0 + 1e-12))) + 1;
        for (int i = 0; i < count; ++i) {
            const double t = args.t0 + i * grid.h;
            ts.push_back(t);
            values.push_back(*fmgl::closed_form_derivative(f, t, args.alpha, args.L));
        }
    } else {
        throw std::invalid_argument("unknown --method " + args.method);
    }

    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<double> row = {ts[i], values[i]};
        if (args.compare) {
            const double oracle = *fmgl::closed_form_derivative(f, ts[i], args.alpha, args.L);
            row.push_back(oracle);
            row.push_back(std::fabs(values[i] - oracle));
        }
        table.rows.push_back(std::move(row));
    }

    const json params = {{"fn", args.fn},       {"alpha", args.alpha}, {"L", args.L},
                         {"N", args.N},         {"t0", args.t0},       {"t1", args.t1},
                         {"method", args.method}, {"panels", args.panels},
                         {"compare", args.compare}};
    emit(table, args.output, "derive", params);
    return 0;
}

struct SimulateArgs {
    std::string system = "rotation";
    double alpha = 0.5;
    double L = 2.0 * kPi;
    int N = 2048;
    double t_end = 6.0 * kPi;
    std::string history = "cossin";
    double c = 1.0;
    double fp_tol = 1e-12;
    int fp_max = 100;
    Output output;
};

int run_simulate(const SimulateArgs& args) {
    const fmgl::GridSpec grid(args.L, args.N);

    fmgl::Mat A;
    bool rotation = false;
    std::vector<fmgl::FunctionSpec> history_components;
    if (args.system == "rotation") {
        rotation = true;
        A = fmgl::RotationSystem::for_order(args.alpha, args.L).matrix();
    } else {
        std::ifstream file(args.system);
        if (!file) {
            throw std::invalid_argument("cannot read system file " + args.system);
        }
        json doc = json::parse(file);
        const auto& rows = doc.at("A");
        const int d = static_cast<int>(rows.size());
        A.resize(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                A(i, j) = rows.at(i).at(j).get<double>();
            }
        }
        if (doc.contains("history")) {
            for (const auto& src : doc.at("history")) {
                history_components.push_back(
                    fmgl::FunctionSpec::from_name(src.get<std::string>()));
            }
        }
    }

    if (args.history == "cossin") {
        history_components = {fmgl::FunctionSpec::fourier({}, {args.c}),
                              fmgl::FunctionSpec::fourier({args.c}, {})};
    } else if (!args.history.empty() && args.history != "file") {
        history_components.clear();
        std::stringstream ss(args.history);
        std::string item;
        while (std::getline(ss, item, ';')) {
            history_components.push_back(fmgl::FunctionSpec::from_name(item));
        }
    }
    if (history_components.empty()) {
        throw std::invalid_argument("no history given (use --history or the system file)");
    }
    if (static_cast<int>(history_components.size()) != A.rows()) {
        throw std::invalid_argument("history dimension does not match the system matrix");
    }

    const fmgl::HistorySegment hist =
        fmgl::HistorySegment::from_function(history_components, 0.0, grid);
    const fmgl::Trajectory traj = fmgl::solve_linear(A, hist, args.alpha, args.t_end);

    Table table;
    table.columns = {"t"};
    for (int d = 0; d < traj.dimension(); ++d) {
        table.columns.push_back("x_" + std::to_string(d + 1));
    }
    for (int i = 0; i < traj.size(); ++i) {
        std::vector<double> row = {traj.time_at(i)};
        for (int d = 0; d < traj.dimension(); ++d) {
            row.push_back(traj.states[i][d]);
        }
        table.rows.push_back(std::move(row));
    }

    json report;
    report["alpha"] = args.alpha;
    report["L"] = args.L;
    report["N"] = args.N;
    report["h"] = grid.h;
    report["t_end"] = traj.time_at(traj.size() - 1);
    report["config"] = ml_config_json(fmgl::MLConfig{});
    const double period = 2.0 * kPi;
    const double ratio = period / grid.h;
    if (std::fabs(ratio - std::nearbyint(ratio)) <= 1e-9 &&
        traj.size() > static_cast<int>(std::nearbyint(ratio))) {
        report["periodicity_defect"] = fmgl::periodicity_defect(traj, period);
    } else {
        report["periodicity_defect"] = nullptr;
    }
    if (rotation) {
        double dev = 0.0;
        for (int i = 0; i < traj.size(); ++i) {
            const double t = traj.time_at(i);
            dev = std::max(dev, std::fabs(traj.states[i][0] - args.c * std::cos(t)));
            dev = std::max(dev, std::fabs(traj.states[i][1] - args.c * std::sin(t)));
        }
        report["max_deviation_from_exact"] = dev;
    }

    const json params = {{"system", args.system}, {"alpha", args.alpha}, {"L", args.L},
                         {"N", args.N},           {"t_end", args.t_end},
                         {"history", args.history}, {"c", args.c}};
    emit(table, args.output, "simulate", params, report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-memory Grunwald-Letnikov fractional calculus toolkit"};
    app.require_subcommand(1);

    fmgl::MLConfig ml_cfg;  // flags > FMGL_* environment > defaults

    // --- derive ---------------------------------------------------------
    DeriveArgs derive;
    CLI::App* cmd_derive = app.add_subcommand("derive", "fixed-memory derivative over a t-range");
    cmd_derive->add_option("--fn", derive.fn, "catalog name or expression in t")->required();
    cmd_derive->add_option("--alpha", derive.alpha)->required()->envname("FMGL_ALPHA");
    cmd_derive->add_option("--L", derive.L, "memory length")->required();
    cmd_derive->add_option("--N", derive.N, "window samples")->required();
    cmd_derive->add_option("--t0", derive.t0)->required();
    cmd_derive->add_option("--t1", derive.t1)->required();
    cmd_derive->add_option("--method", derive.method, "discrete|integral|oracle");
    cmd_derive->add_option("--panels", derive.panels, "integral method panels")
        ->envname("FMGL_PANELS");
    cmd_derive->add_flag("--compare", derive.compare, "add closed-form oracle columns");
    cmd_derive->add_option("--out", derive.output.out_path);
    cmd_derive->add_flag("--json", derive.output.as_json);

    // --- classic --------------------------------------------------------
    struct {
        std::string fn;
        double alpha = 0.5, a = 0.0, t0 = 0.5, t1 = 10.0;
        int steps = 1024, samples = 200;
        Output output;
    } classic;
    CLI::App* cmd_classic = app.add_subcommand("classic", "classical growing-memory derivative");
    cmd_classic->add_option("--fn", classic.fn)->required();
    cmd_classic->add_option("--alpha", classic.alpha)->required();
    cmd_classic->add_option("--a", classic.a, "lower terminal");
    cmd_classic->add_option("--steps", classic.steps);
    cmd_classic->add_option("--t0", classic.t0)->required();
    cmd_classic->add_option("--t1", classic.t1)->required();
    cmd_classic->add_option("--samples", classic.samples);
    cmd_classic->add_option("--out", classic.output.out_path);
    cmd_classic->add_flag("--json", classic.output.as_json);

    // --- weights ---------------------------------------------------------
    struct {
        double alpha = 0.5;
        int N = 8;
        Output output;
    } weights;
    CLI::App* cmd_weights = app.add_subcommand("weights", "Grunwald coefficients w_0..w_N");
    cmd_weights->add_option("--alpha", weights.alpha)->required();
    cmd_weights->add_option("--N", weights.N)->required();
    cmd_weights->add_option("--out", weights.output.out_path);
    cmd_weights->add_flag("--json", weights.output.as_json);

    // --- ml ---------------------------------------------------------------
    struct {
        double alpha = 1.0, beta = 1.0, z = 0.0, tol = 1e-12;
        Output output;
    } ml;
    CLI::App* cmd_ml = app.add_subcommand("ml", "two-parameter Mittag-Leffler function");
    cmd_ml->add_option("--alpha", ml.alpha)->required();
    cmd_ml->add_option("--beta", ml.beta)->required();
    cmd_ml->add_option("--z", ml.z)->required();
    cmd_ml->add_option("--tol", ml.tol)->envname("FMGL_ML_TOL");
    cmd_ml->add_option("--term-cap", ml_cfg.term_cap)->envname("FMGL_ML_TERM_CAP");
    cmd_ml->add_option("--reflect-threshold", ml_cfg.alpha2_reflection_threshold)
        ->envname("FMGL_ML_REFLECT_THRESHOLD");
    cmd_ml->add_option("--out", ml.output.out_path);
    cmd_ml->add_flag("--json", ml.output.as_json);

    // --- gamma -------------------------------------------------------------
    struct {
        double x = 1.0;
        bool recip = false;
        Output output;
    } gam;
    CLI::App* cmd_gamma = app.add_subcommand("gamma", "gamma function on the real line");
    cmd_gamma->add_option("--x", gam.x)->required();
    cmd_gamma->add_flag("--recip", gam.recip, "1/Gamma(x) (total, zero at poles)");
    cmd_gamma->add_option("--out", gam.output.out_path);
    cmd_gamma->add_flag("--json", gam.output.as_json);

    // --- simulate -----------------------------------------------------------
    SimulateArgs sim;
    CLI::App* cmd_sim = app.add_subcommand("simulate", "fixed-memory linear system stepper");
    cmd_sim->add_option("--system", sim.system, "rotation | path to a JSON system file");
    cmd_sim->add_option("--alpha", sim.alpha)->required();
    cmd_sim->add_option("--L", sim.L)->required();
    cmd_sim->add_option("--N", sim.N)->required();
    cmd_sim->add_option("--t-end", sim.t_end)->required();
    cmd_sim->add_option("--history", sim.history, "cossin | ';'-separated expressions");
    cmd_sim->add_option("--c", sim.c, "history scale for cossin");
    cmd_sim->add_option("--out", sim.output.out_path);
    cmd_sim->add_flag("--json", sim.output.as_json);

    // --- oracle ---------------------------------------------------------------
    struct {
        std::string fn;
        double alpha = 0.5, L = 1.0, t0 = 0.0, t1 = 1.0;
        int samples = 200;
        Output output;
    } oracle;
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "closed-form derivative over a t-range");
    cmd_oracle->add_option("--fn", oracle.fn)->required();
    cmd_oracle->add_option("--alpha", oracle.alpha)->required();
    cmd_oracle->add_option("--L", oracle.L)->required();
    cmd_oracle->add_option("--t0", oracle.t0)->required();
    cmd_oracle->add_option("--t1", oracle.t1)->required();
    cmd_oracle->add_option("--samples", oracle.samples);
    cmd_oracle->add_option("--out", oracle.output.out_path);
    cmd_oracle->add_flag("--json", oracle.output.as_json);

    // --- sweep -----------------------------------------------------------------
    struct {
        std::string fn = "sin";
        std::string Ls = "10,20,30,60";
        double alpha = 0.5, t0 = 0.0, t1 = 4.0 * kPi;
        int samples = 200, N = 4096;
        Output output;
    } sweep;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "memory-length influence study");
    cmd_sweep->add_option("--fn", sweep.fn);
    cmd_sweep->add_option("--alpha", sweep.alpha)->required();
    cmd_sweep->add_option("--Ls", sweep.Ls, "comma-separated increasing memory lengths");
    cmd_sweep->add_option("--t0", sweep.t0);
    cmd_sweep->add_option("--t1", sweep.t1);
    cmd_sweep->add_option("--samples", sweep.samples);
    cmd_sweep->add_option("--N", sweep.N, "window samples for the discrete fallback");
    cmd_sweep->add_option("--out", sweep.output.out_path);
    cmd_sweep->add_flag("--json", sweep.output.as_json);

    // --- interp -----------------------------------------------------------------
    struct {
        std::string fn = "sin";
        std::string alphas = "0.9,0.99,0.999";
        double t = 2.0, L = 10.0;
        Output output;
    } interp;
    CLI::App* cmd_interp = app.add_subcommand("interp", "integer-order interpolation study");
    cmd_interp->add_option("--fn", interp.fn);
    cmd_interp->add_option("--t", interp.t)->required();
    cmd_interp->add_option("--L", interp.L)->required();
    cmd_interp->add_option("--alphas", interp.alphas);
    cmd_interp->add_option("--out", interp.output.out_path);
    cmd_interp->add_flag("--json", interp.output.as_json);

    // --- fig1 --------------------------------------------------------------------
    struct {
        double alpha = 0.5, t_max = 35.0;
        int steps = 3500;
        Output output;
    } fig1;
    CLI::App* cmd_fig1 = app.add_subcommand("fig1", "classical-operator non-periodicity demo");
    cmd_fig1->add_option("--alpha", fig1.alpha)->required();
    cmd_fig1->add_option("--t-max", fig1.t_max)->required();
    cmd_fig1->add_option("--steps", fig1.steps);
    cmd_fig1->add_option("--out", fig1.output.out_path);
    cmd_fig1->add_flag("--json", fig1.output.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (cmd_derive->parsed()) {
            return run_derive(derive);
        }
        if (cmd_classic->parsed()) {
            const fmgl::FunctionSpec f = fmgl::FunctionSpec::from_name(classic.fn);
            if (!(classic.t1 > classic.t0) || classic.samples < 1) {
                throw std::invalid_argument("need t1 > t0 and samples >= 1");
            }
            Table table;
            table.columns = {"t", "value"};
            const double dt = (classic.samples > 1)
                ? (classic.t1 - classic.t0) / (classic.samples - 1) : 0.0;
            for (int i = 0; i < classic.samples; ++i) {
                const double t = classic.t0 + i * dt;
                table.rows.push_back(
                    {t, fmgl::classical_gl_derivative(f, t, classic.alpha, classic.a, classic.steps)});
            }
            const json params = {{"fn", classic.fn}, {"alpha", classic.alpha}, {"a", classic.a},
                                 {"steps", classic.steps}, {"t0", classic.t0}, {"t1", classic.t1},
                                 {"samples", classic.samples}};
            emit(table, classic.output, "classic", params);
            return 0;
        }
        if (cmd_weights->parsed()) {
            const fmgl::WeightTable t = fmgl::grunwald_weights(weights.alpha, weights.N);
            Table table;
            table.columns = {"k", "w"};
            for (int k = 0; k <= t.size(); ++k) {
                table.rows.push_back({static_cast<double>(k), t.w[k]});
            }
            const json params = {{"alpha", weights.alpha}, {"N", weights.N}};
            emit(table, weights.output, "weights", params);
            return 0;
        }
        if (cmd_ml->parsed()) {
            const double value = fmgl::mittag_leffler({ml.alpha, ml.beta, ml.z, ml.tol}, ml_cfg);
            Table table;
            table.columns = {"alpha", "beta", "z", "value"};
            table.rows.push_back({ml.alpha, ml.beta, ml.z, value});
            json params = {{"alpha", ml.alpha}, {"beta", ml.beta}, {"z", ml.z}, {"tol", ml.tol}};
            params.update(ml_config_json(ml_cfg));
            emit(table, ml.output, "ml", params);
            return 0;
        }
        if (cmd_gamma->parsed()) {
            const double value = gam.recip ? fmgl::recip_gamma(gam.x) : fmgl::gamma(gam.x);
            Table table;
            table.columns = {"x", gam.recip ? "recip_gamma" : "gamma"};
            table.rows.push_back({gam.x, value});
            const json params = {{"x", gam.x}, {"recip", gam.recip}};
            emit(table, gam.output, "gamma", params);
            return 0;
        }
        if (cmd_sim->parsed()) {
            return run_simulate(sim);
        }
        if (cmd_oracle->parsed()) {
            const fmgl::FunctionSpec f = fmgl::FunctionSpec::from_name(oracle.fn);
            if (!fmgl::closed_form_derivative(f, oracle.t0, oracle.alpha, oracle.L)) {
                throw std::invalid_argument("no closed form available for --fn " + oracle.fn);
            }
            if (!(oracle.t1 > oracle.t0) || oracle.samples < 2) {
                throw std::invalid_argument("need t1 > t0 and samples >= 2");
            }
            Table table;
            table.columns = {"t", "value"};
            const double dt = (oracle.t1 - oracle.t0) / (oracle.samples - 1);
            for (int i = 0; i < oracle.samples; ++i) {
                const double t = oracle.t0 + i * dt;
                table.rows.push_back({t, *fmgl::closed_form_derivative(f, t, oracle.alpha, oracle.L)});
            }
            const json params = {{"fn", oracle.fn}, {"alpha", oracle.alpha}, {"L", oracle.L},
                                 {"t0", oracle.t0}, {"t1", oracle.t1}, {"samples", oracle.samples}};
            emit(table, oracle.output, "oracle", params);
            return 0;
        }
        if (cmd_sweep->parsed()) {
            const auto result = fmgl::memory_sweep(fmgl::FunctionSpec::from_name(sweep.fn),
                                                   sweep.alpha, sweep.t0, sweep.t1, sweep.samples,
                                                   parse_list(sweep.Ls), sweep.N);
            Table table;
            table.columns = {"t"};
            for (double L : result.Ls) {
                table.columns.push_back("L_" + fmgl::format_double(L));
            }
            for (std::size_t j = 0; j < result.ts.size(); ++j) {
                std::vector<double> row = {result.ts[j]};
                for (const auto& series : result.series) {
                    row.push_back(series[j]);
                }
                table.rows.push_back(std::move(row));
            }
            const json params = {{"fn", sweep.fn}, {"alpha", sweep.alpha}, {"Ls", result.Ls},
                                 {"t0", sweep.t0}, {"t1", sweep.t1}, {"samples", sweep.samples},
                                 {"N", sweep.N}};
            const json report = {{"sup_distances", result.sup_distances}};
            emit(table, sweep.output, "sweep", params, report);
            return 0;
        }
        if (cmd_interp->parsed()) {
            const auto rows = fmgl::interpolation_curve(fmgl::FunctionSpec::from_name(interp.fn),
                                                        interp.t, interp.L,
                                                        parse_list(interp.alphas));
            Table table;
            table.columns = {"alpha", "value", "reference", "abs_error"};
            for (const auto& row : rows) {
                table.rows.push_back({row.alpha, row.value, row.reference, row.abs_error});
            }
            const json params = {{"fn", interp.fn}, {"t", interp.t}, {"L", interp.L},
                                 {"alphas", parse_list(interp.alphas)}};
            emit(table, interp.output, "interp", params);
            return 0;
        }
        if (cmd_fig1->parsed()) {
            const auto result = fmgl::nonperiodicity_demo(fig1.alpha, fig1.t_max, fig1.steps);
            Table table;
            table.columns = {"t", "classical_value", "envelope", "difference"};
            for (const auto& row : result.rows) {
                table.rows.push_back({row.t, row.classical_value, row.envelope, row.difference});
            }
            const json params = {{"alpha", fig1.alpha}, {"t_max", fig1.t_max},
                                 {"steps", fig1.steps}};
            const json report = {{"classical_defect", result.classical_defect},
                                 {"fm_defect", result.fm_defect}};
            emit(table, fig1.output, "fig1", params, report);
            return 0;
        }
    } catch (const fmgl::SolverConvergenceError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 4;
    } catch (const fmgl::GridError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fmgl::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
