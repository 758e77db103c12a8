#pragma once

#include "emsim/params.hpp"
#include "emsim/signal_blocks.hpp"

#include <cstdint>
#include <string>

namespace emsim {

// =============================================================================
// BCD pulse counter
// =============================================================================

inline constexpr std::uint32_t kBcdDigits = 8;
inline constexpr std::uint32_t kBcdMax = 99'999'999;

struct BcdResult {
    std::uint32_t reg;
    bool overflow;
};

/// value + 1 in packed BCD (one decimal digit per nibble) with nibble
/// carries. Past 99,999,999 the register saturates and overflow is raised.
BcdResult bcd_increment(std::uint32_t reg);

bool bcd_valid(std::uint32_t reg);
std::uint32_t bcd_encode(std::uint32_t value);  // value <= kBcdMax
std::uint32_t bcd_decode(std::uint32_t reg);

/// 32-bit BCD register with saturation. A billing register must never
/// silently lose count, so overflow latches a flag instead of wrapping.
class BcdCounter {
public:
    void increment();
    /// n increments; stops early once saturated.
    void add(std::uint64_t n);

    std::uint32_t reg() const { return reg_; }
    std::uint32_t count() const { return bcd_decode(reg_); }
    bool overflow() const { return overflow_; }

private:
    std::uint32_t reg_ = 0;
    bool overflow_ = false;
};

// =============================================================================
// The energy circuit
// =============================================================================

/// Every stateful element of the circuit.
struct MeterState {
    explicit MeterState(const CircuitParams& p);

    FilterState filter;
    SampleHoldState sh;
    VcoState vco;
    Sample last_pulse_level = 0.0;
    BcdCounter pulses;
    bool tripped = false;
    double t = 0.0;
};

/// The labeled signals of one step, in chain order.
struct StepOutputs {
    Sample instantaneous_power = 0.0;         ///< scaled i*v
    Sample instantaneous_active_power = 0.0;  ///< after the 1/sqrt(2) stage
    Sample active_power_signal = 0.0;         ///< filter output [V]
    Sample energy_signal = 0.0;               ///< oscillator sine
    Sample energy_pulse = 0.0;                ///< 0 or pulse_high_v
    bool pulse_emitted = false;
};

/// True (trip) when either RMS input exceeds its protection limit.
/// The limits themselves are allowed operating points.
bool overload_check(double i_rms, double v_rms, const CircuitParams& p);

/// One dt step of the full chain: scale i and v, multiply, scale by
/// 1/sqrt(2), sample-and-hold, filter, drive the oscillator, rectify,
/// compare, and count one pulse per rising edge. Advances t by dt.
/// Caller gates on tripped.
StepOutputs meter_step(MeterState& m, Sample i_sample, Sample v_sample,
                       const CircuitParams& p);

/// Long-run acceleration for constant active power. Once the filter has
/// settled the oscillator frequency is constant, so the phase can be
/// advanced analytically: whole cycles become pulses, the fractional phase
/// is preserved. Equivalent to stepping within one pulse; callers must have
/// stepped the meter for at least settle_time_s first.
/// Throws std::invalid_argument for a negative duration.
void run_steady_fast(MeterState& m, double p_active_watts, double duration_s,
                     const CircuitParams& p);

/// pulse_count / 1000: the divider feeding the display. Exact to the
/// millikWh by construction.
double energy_kwh(std::uint64_t pulse_count);

/// Display rendering, three decimals: 23589 pulses read "23.589 KWh".
std::string display_format(double kwh);

}  // namespace emsim
