#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relengine/engine.hpp"
#include "relengine/table.hpp"

namespace relengine {

enum class Spacing { linear, log };
enum class OutputFormat { csv, json };

Spacing parse_spacing(std::string_view name);
OutputFormat parse_output_format(std::string_view name);

/// One sweep axis: either a single fixed value or a sampled interval.
/// Sweeps require count >= 2 and start < stop; log spacing needs start > 0.
struct GridAxis {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    Spacing spacing = Spacing::linear;

    static GridAxis single(double value);
    static GridAxis sweep(double start, double stop, int count, Spacing spacing);
    std::vector<double> values() const;
};

/// Everything a command run needs: the engine parameterization, the sweep
/// axes, and the output selection. CLI flags override config-file values,
/// which override these defaults.
struct ScenarioConfig {
    // two-qubit engine parameterization
    double omega_a = 1.0;
    double omega_b = 0.5;
    double beta_a = 0.5;
    double beta_b = 1.0;
    double velocity_a = 0.0;
    double velocity_b = 0.0;
    double coupling_a = 1.0;
    double coupling_b = 1.0;
    std::string temperature_mode = "full";

    // single-detector parameters and grid (teff)
    double beta = 1.0;
    double coupling = 1.0;
    GridAxis omega_axis = GridAxis::single(1.0);
    GridAxis velocity_axis = GridAxis::single(0.0);

    // frequency-ratio sweep and motion scenario (engine)
    GridAxis ratio_axis = GridAxis::sweep(0.05, 1.0, 20, Spacing::linear);
    std::string scenario = "all";

    // efficiency-at-maximum-power scan (optimize)
    std::string regime = "high_t";
    std::string scan = "effective_ratio";
    GridAxis scan_axis = GridAxis::sweep(0.1, 0.9, 17, Spacing::linear);

    // output selection
    OutputFormat format = OutputFormat::csv;
    std::string out = "-";
};

/// Overlays the flat JSON object at `path` on top of `base`.
/// Unknown keys are rejected by name.
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base);

/// No grid point admits an engine window (maps to exit code 3).
struct empty_result_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EngineConfig make_engine_config(const ScenarioConfig& sc);

Table run_teff(const ScenarioConfig& sc);
Table run_engine(const ScenarioConfig& sc);
Table run_optimize(const ScenarioConfig& sc);
Table run_fcs(const ScenarioConfig& sc);

std::string serialize(const Table& table, OutputFormat format);

}  // namespace relengine
