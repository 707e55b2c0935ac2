#include "relengine/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "relengine/scenario.hpp"
#include "relengine/version.hpp"

namespace relengine {

namespace {

// The config file must be loaded before CLI11 binds flag defaults, so the
// path is pre-scanned from the raw arguments.
std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config" && i + 1 < args.size()) return args[i + 1];
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return std::nullopt;
}

struct AxisFlags {
    double value = 0.0;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    std::string spacing = "linear";
    CLI::Option* o_value = nullptr;
    CLI::Option* o_start = nullptr;
    CLI::Option* o_stop = nullptr;
    CLI::Option* o_count = nullptr;
    CLI::Option* o_spacing = nullptr;
};

void add_axis_flags(CLI::App* cmd, AxisFlags& f, const std::string& stem,
                    const std::string& what) {
    f.o_value = cmd->add_option("--" + stem, f.value, "single " + what + " value");
    f.o_start = cmd->add_option("--" + stem + "-start", f.start, what + " sweep start");
    f.o_stop = cmd->add_option("--" + stem + "-stop", f.stop, what + " sweep stop");
    f.o_count =
        cmd->add_option("--" + stem + "-count", f.count, what + " sweep point count");
    f.o_spacing = cmd->add_option("--" + stem + "-spacing", f.spacing,
                                  what + " sweep spacing: linear|log");
    f.o_value->excludes(f.o_start);
    f.o_value->excludes(f.o_stop);
    f.o_value->excludes(f.o_count);
    f.o_value->excludes(f.o_spacing);
}

void apply_axis_flags(const AxisFlags& f, GridAxis& axis, const std::string& stem) {
    if (f.o_value->count() > 0) {
        axis = GridAxis::single(f.value);
        return;
    }
    const bool has_sweep = f.o_start->count() || f.o_stop->count() ||
                           f.o_count->count() || f.o_spacing->count();
    if (!has_sweep) return;  // keep config-file / default axis
    if (!f.o_start->count() || !f.o_stop->count() || !f.o_count->count()) {
        throw std::invalid_argument("--" + stem + "-start/-stop/-count must be given together");
    }
    axis = GridAxis::sweep(f.start, f.stop, f.count, parse_spacing(f.spacing));
}

void add_common_flags(CLI::App* cmd, ScenarioConfig& sc, std::string& format_str,
                      std::string& config_path) {
    cmd->add_option("--config", config_path,
                    "flat JSON config file (flags override file values)");
    cmd->add_option("--format", format_str, "output format: csv|json");
    cmd->add_option("--out", sc.out, "output path, or - for standard output");
}

void add_engine_flags(CLI::App* cmd, ScenarioConfig& sc) {
    cmd->add_option("--omega-a", sc.omega_a, "qubit A (hot side) frequency");
    cmd->add_option("--omega-b", sc.omega_b, "qubit B (cold side) frequency");
    cmd->add_option("--beta-a", sc.beta_a, "hot bath inverse temperature");
    cmd->add_option("--beta-b", sc.beta_b, "cold bath inverse temperature");
    cmd->add_option("--velocity-a", sc.velocity_a, "qubit A speed (fraction of c)");
    cmd->add_option("--velocity-b", sc.velocity_b, "qubit B speed (fraction of c)");
    cmd->add_option("--coupling-a", sc.coupling_a, "qubit A field coupling");
    cmd->add_option("--coupling-b", sc.coupling_b, "qubit B field coupling");
    cmd->add_option("--mode", sc.temperature_mode,
                    "effective-temperature map: full|high_t|rest");
}

void write_output(const std::string& payload, const std::string& out_path,
                  std::ostream& out_stream) {
    if (out_path == "-") {
        out_stream << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    f << payload;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    ScenarioConfig sc;
    try {
        if (const auto path = find_config_path(args)) {
            sc = load_config_file(*path, sc);
        }
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 2;
    }

    CLI::App app{"relengine: thermodynamics of a two-qubit SWAP heat engine "
                 "with relativistically moving qubits"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.footer("Precedence: CLI flags override --config file values, which "
               "override built-in defaults.");

    std::string format_str = sc.format == OutputFormat::csv ? "csv" : "json";
    std::string config_path;

    CLI::App* teff = app.add_subcommand(
        "teff", "effective temperature of a moving qubit over an (omega, velocity) grid");
    teff->add_option("--beta", sc.beta, "rest-frame inverse bath temperature");
    teff->add_option("--coupling", sc.coupling, "field coupling");
    AxisFlags teff_omega, teff_velocity;
    add_axis_flags(teff, teff_omega, "omega", "frequency");
    add_axis_flags(teff, teff_velocity, "velocity", "velocity");
    add_common_flags(teff, sc, format_str, config_path);

    CLI::App* engine = app.add_subcommand(
        "engine", "per-cycle work, heats, entropy production, and operating mode "
                  "over a frequency-ratio sweep");
    add_engine_flags(engine, sc);
    engine->add_option("--scenario", sc.scenario,
                       "all|both-rest|only-a-moving|only-b-moving|both-moving");
    AxisFlags ratio_axis;
    add_axis_flags(engine, ratio_axis, "ratio", "omega_b/omega_a");
    add_common_flags(engine, sc, format_str, config_path);

    CLI::App* optimize = app.add_subcommand(
        "optimize", "efficiency at maximum power with Carnot/Curzon-Ahlborn references");
    add_engine_flags(optimize, sc);
    optimize->add_option("--regime", sc.regime,
                         "optimizer regime: high_t|low_t|numeric-full");
    optimize->add_option("--scan", sc.scan,
                         "scan parameter: velocity_a|velocity_b|effective_ratio");
    AxisFlags scan_axis;
    add_axis_flags(optimize, scan_axis, "scan", "scan parameter");
    add_common_flags(optimize, sc, format_str, config_path);

    CLI::App* fcs = app.add_subcommand(
        "fcs", "joint work/heat counting statistics of a single configuration");
    add_engine_flags(fcs, sc);
    add_common_flags(fcs, sc, format_str, config_path);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("relengine");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        sc.format = parse_output_format(format_str);
        Table table;
        if (teff->parsed()) {
            apply_axis_flags(teff_omega, sc.omega_axis, "omega");
            apply_axis_flags(teff_velocity, sc.velocity_axis, "velocity");
            table = run_teff(sc);
        } else if (engine->parsed()) {
            apply_axis_flags(ratio_axis, sc.ratio_axis, "ratio");
            table = run_engine(sc);
        } else if (optimize->parsed()) {
            apply_axis_flags(scan_axis, sc.scan_axis, "scan");
            table = run_optimize(sc);
        } else {
            table = run_fcs(sc);
        }
        write_output(serialize(table, sc.format), sc.out, out);
        return 0;
    } catch (const empty_result_error& e) {
        err << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace relengine
