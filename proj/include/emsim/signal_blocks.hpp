#pragma once

#include "emsim/params.hpp"

#include <cstddef>
#include <vector>

namespace emsim {

/// One signal value. Volts on the analog side of the chain; after the
/// multiplier the value is power-scaled (volts standing in for watts).
using Sample = double;

// =============================================================================
// Stateless blocks
// =============================================================================

/// amplitude_peak * sin(2*pi*freq_hz*t + phase_rad)
Sample sine_source(double amplitude_peak, double freq_hz, double phase_rad,
                   double t);

/// k * x (signal attenuator)
Sample gain(Sample x, double k);

/// a * b (digital multiplier)
Sample multiply(Sample a, Sample b);

/// x / sqrt(2)
Sample scale_inv_sqrt2(Sample x);

/// max(x, 0): eliminates the negative half-wave.
Sample half_wave_rectify(Sample x);

/// high_level when x > threshold, else 0 (electronic switch).
Sample comparator(Sample x, double threshold, double high_level);

/// True when the pulse line went from 0 to high_level between two samples.
bool rising_edge(Sample previous, Sample current, double high_level);

// =============================================================================
// Stateful blocks
// =============================================================================

/// Sample-and-hold latch. `held` changes only on trigger instants.
struct SampleHoldState {
    Sample held = 0.0;
    int samples_since_trigger = 0;
};

/// Latches x on every decimation-th call (the first call triggers) and
/// returns the held value.
Sample sample_and_hold(SampleHoldState& s, Sample x, int decimation);

/// Averaging filter state: a moving average spanning exactly one mains
/// period, cascaded with a first-order smoother.
struct FilterState {
    explicit FilterState(const CircuitParams& p);

    std::vector<Sample> window;  ///< ring buffer, one mains period of input
    std::size_t head = 0;
    double window_sum = 0.0;     ///< running sum of window contents
    double smooth = 0.0;         ///< smoother memory
    double alpha = 0.0;          ///< smoother coefficient, cached from params
};

/// One filter step: slides the window, smooths the window mean with time
/// constant filter_tau, and returns k_cal times the smoothed value.
///
/// The window mean of any periodic input is its exact cycle mean once the
/// window is full, so in steady state the output is k_cal times the average
/// of the input over one mains period.
Sample lowpass_step(FilterState& s, Sample x, const CircuitParams& p);

/// Oscillator phase, kept in [0, 2*pi).
struct VcoState {
    double phase = 0.0;
};

/// Advances the oscillator at sensitivity_hz_per_v * v_ctrl hertz and
/// returns sin(phase). Negative control voltages (possible during filter
/// transients) hold the phase still: a frequency cannot be negative.
Sample vco_step(VcoState& s, Sample v_ctrl, double dt,
                double sensitivity_hz_per_v);

}  // namespace emsim
