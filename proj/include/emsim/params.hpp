#pragma once

#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace emsim {

/// A parameter set or scenario that cannot be simulated as given.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An override key that does not name any circuit parameter.
class unknown_key_error : public config_error {
public:
    using config_error::config_error;
};

/// A sink that stopped accepting output.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// =============================================================================
// Circuit parameters
// =============================================================================

/// All calibration constants, rates and limits of the energy circuit in one
/// record. A run takes the record by const reference and never mutates it.
///
/// The default configuration is rated 40 A / 240 V RMS (9.6 kW full scale)
/// and is calibrated end to end so that:
///   - full-scale current and voltage peaks map to 5 V at the multiplier,
///   - the averaging filter outputs exactly 1 V per kW of active power
///     (9.6 V at full scale),
///   - the oscillator emits 1000 pulses per kWh (2.666... Hz at full scale).
struct CircuitParams {
    double dt = 1e-4;              ///< simulation step [s]
    double line_freq_hz = 50.0;    ///< mains frequency [Hz]

    /// Current front-end attenuation [V per A-peak]: 40 A RMS -> 5 V peak.
    double gain_i = 5.0 / (40.0 * std::numbers::sqrt2);
    /// Voltage front-end attenuation [V per V-peak]: 240 V RMS -> 5 V peak.
    double gain_v = 5.0 / (240.0 * std::numbers::sqrt2);
    /// Filter output trim; with the default gains this makes the steady
    /// filter output exactly 1 V per kW.
    double k_cal = 0.768 * std::numbers::sqrt2;

    double filter_tau = 0.5;       ///< smoothing stage time constant [s]
    int sh_decimation = 10;        ///< sample-and-hold trigger period [steps]

    /// Oscillator sensitivity [Hz/V]; 1 V sustained for one hour produces
    /// 1000 cycles, i.e. 1000 pulses per kWh at 1 V per kW.
    double vco_sensitivity_hz_per_v = 1000.0 / 3600.0;

    double pulse_high_v = 5.0;     ///< pulse amplitude [V]
    double pulses_per_kwh = 1000.0;

    double i_rms_limit = 40.0;     ///< protection trip threshold [A RMS]
    double v_rms_limit = 240.0;    ///< protection trip threshold [V RMS]
};

/// The rated, fully calibrated configuration described above.
CircuitParams default_params();

/// Moving-average window length in steps: one mains period, rounded.
long window_len(const CircuitParams& p);

/// Steady filter output per kW of active power [V/kW]. 1.0 by default.
double volts_per_kw(const CircuitParams& p);

/// Filter output once settled on constant active power `p_watts` [V].
double steady_filter_output_v(double p_watts, const CircuitParams& p);

/// Stepping time after which the filter output is settled for any purpose
/// served by this simulator (the residual is below one part in 1e4).
double settle_time_s(const CircuitParams& p);

/// Throws config_error unless the record is simulatable: positive rates,
/// a window of at least 8 steps, and a consistent pulse calibration
/// (vco sensitivity x volts-per-kW x 3600 == pulses per kWh).
void validate_params(const CircuitParams& p);

// =============================================================================
// Key/value access (configuration files and command-line overrides)
// =============================================================================

/// Field names accepted by set_param/get_param, one per struct member.
const std::vector<std::string_view>& param_keys();

/// Sets one field by name. Throws unknown_key_error for a name that is not
/// a field, config_error for a value that does not parse as a number (or,
/// for sh_decimation, is not an integer).
void set_param(CircuitParams& p, std::string_view key, std::string_view value);

double get_param(const CircuitParams& p, std::string_view key);

/// One "key=value" line per field, in param_keys() order. load_params on
/// the dump reproduces the record exactly.
std::string dump_params(const CircuitParams& p);

/// Reads "key=value" lines; '#' starts a comment, blank lines are skipped.
void load_params(CircuitParams& p, std::istream& in);

}  // namespace emsim
