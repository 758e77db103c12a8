#pragma once

#include <span>

namespace emsim {

// Analytic ground truth for error computation, plus the conventional
// integrating meter it is compared against.

/// p * t / 3.6e6
double expected_energy_kwh(double p_active_watts, double duration_s);

/// v_rms * i_rms * cos(phase)
double active_power_w(double i_rms, double v_rms, double phase_rad);

/// 100 * (simulated - expected) / expected.
/// Throws std::invalid_argument when expected <= 0 (undefined).
double error_pct(double expected_kwh, double simulated_kwh);

// =============================================================================
// Conventional integrating meter
// =============================================================================

/// The direct power-times-time method: accumulate p*dt sample by sample.
/// `extended` sums in binary64 with Kahan compensation; `reduced` sums in
/// plain binary32, where the running total eventually outgrows the
/// significand and additions start rounding away.
struct NaiveMeterConfig {
    enum class Precision { extended, reduced };
    Precision precision = Precision::extended;
    double dt = 1e-4;
};

class NaiveMeter {
public:
    explicit NaiveMeter(const NaiveMeterConfig& cfg);

    void add(double p_watts);
    double energy_kwh() const;

private:
    NaiveMeterConfig cfg_;
    double sum_joules_ = 0.0;
    double compensation_ = 0.0;
    float sum_joules_f_ = 0.0f;
};

double naive_integrating_meter(std::span<const double> p_samples,
                               const NaiveMeterConfig& cfg);

}  // namespace emsim
