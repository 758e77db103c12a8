#pragma once

#include "emsim/meter.hpp"
#include "emsim/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emsim {

// =============================================================================
// Scenarios and results
// =============================================================================

/// One experiment: ideal sinusoidal current and voltage at fixed RMS values
/// driven through a fresh meter for duration_s.
struct ScenarioSpec {
    double i_rms_a = 0.0;
    double v_rms_v = 0.0;
    double phase_rad = 0.0;     ///< angle by which the current lags the voltage
    double line_freq_hz = 0.0;  ///< 0 = use the CircuitParams value
    double duration_s = 0.0;
    std::string label;
};

/// One result row.
struct RunResult {
    ScenarioSpec spec;
    std::uint64_t pulse_count = 0;
    double energy_expected_kwh = 0.0;
    double energy_simulated_kwh = 0.0;
    double error_pct = 0.0;  ///< 0 when expected energy is 0
    bool tripped = false;
    bool counter_overflow = false;
    double wall_time_s = 0.0;
};

/// Per-signal sample recording at dt * decimation spacing.
struct TraceBuffer {
    std::string signal_name;
    std::vector<double> t;
    std::vector<double> values;
    int decimation = 1;
};

struct TraceRequest {
    std::vector<std::string> signals;
    int decimation = 100;
};

/// The signals that can be traced, in chain order: instantaneous_power,
/// instantaneous_active_power, active_power_signal, energy_signal,
/// energy_pulses.
std::span<const std::string_view> trace_signal_names();

// =============================================================================
// Runners
// =============================================================================

enum class TableId { T1, T2, T3 };

/// "t1" / "t2" / "t3", case-insensitive. Throws config_error otherwise.
TableId parse_table_id(std::string_view text);

/// The fixed row set of a built-in table, in emission order.
///   T1: 40 A, 240 V (9.6 kW), ten durations from 60 s to 24 h.
///   T2: 220 V for one hour, twelve currents from 0.1 A to 40 A.
///   T3: 220 V for one week, currents 1 A, 20 A, 40 A.
std::vector<ScenarioSpec> table_rows(TableId id);

/// Runs one scenario. Over-limit inputs trip the meter before any stepping
/// and yield a zero-energy row with tripped set. Durations above one hour
/// switch to the analytic steady path once settled.
/// Throws config_error for a spec that cannot be run as given.
RunResult run_scenario(const ScenarioSpec& spec, const CircuitParams& params);

/// Same, recording the requested signals. Tracing forces full stepping.
RunResult run_scenario_traced(const ScenarioSpec& spec,
                              const CircuitParams& params,
                              const TraceRequest& request,
                              std::vector<TraceBuffer>& traces_out);

std::vector<RunResult> run_table(TableId id, const CircuitParams& params);

// =============================================================================
// CSV emission
// =============================================================================

/// Header plus one row per result. Energies and error percentage are fixed
/// to three decimals, other numeric fields plain decimal, UTF-8, LF.
/// Throws io_error when the sink fails.
void emit_results_csv(std::span<const RunResult> rows, std::ostream& os);

/// "# signal: <name>" comment, then a t_s,value row per sample.
/// Throws config_error for an empty trace, io_error when the sink fails.
void emit_trace_csv(const TraceBuffer& trace, std::ostream& os);

}  // namespace emsim
