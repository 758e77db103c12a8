/* emsim — energy meter simulation library.
 *
 * C interface of the shared library. The simulator models a single-phase
 * electric energy meter that measures consumption by frequency: scaled
 * current and voltage signals are multiplied, averaged into an active-power
 * voltage, and fed to an oscillator whose cycles are counted as calibrated
 * energy pulses (1000 pulses per kWh). Pulse counts live in an 8-digit BCD
 * register and are read out in kWh with three decimals.
 *
 * Handles are opaque; every object is owned by the caller and freed with
 * the matching *_free function. Calls return emsim_status; on failure
 * emsim_last_error() describes the most recent error in the calling thread.
 * No global state is shared between handles, so independent handles may be
 * used from different threads concurrently.
 */

#ifndef EMSIM_H
#define EMSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EMSIM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define EMSIM_API __attribute__((visibility("default")))
#else
#define EMSIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum emsim_status {
    EMSIM_OK = 0,
    EMSIM_ERROR_INVALID_ARGUMENT = 1,
    EMSIM_ERROR_UNKNOWN_KEY = 2,
    EMSIM_ERROR_CONFIG = 3,
    EMSIM_ERROR_COUNTER_OVERFLOW = 4,
    EMSIM_ERROR_IO = 5,
    EMSIM_ERROR_INTERNAL = 6
} emsim_status;

typedef enum emsim_table_id {
    EMSIM_TABLE_T1 = 1, /* full scale (9.6 kW), durations 60 s .. 24 h */
    EMSIM_TABLE_T2 = 2, /* 220 V, one hour, currents 0.1 A .. 40 A */
    EMSIM_TABLE_T3 = 3  /* 220 V, one week, currents 1 A, 20 A, 40 A */
} emsim_table_id;

/* Circuit parameters: calibration constants, rates and limits. Created with
 * rated defaults; fields are addressed by name (see emsim_param_keys). */
typedef struct emsim_params emsim_params;

/* A meter instance for direct sample-by-sample stepping. */
typedef struct emsim_meter emsim_meter;

/* Captured signal traces from one run. */
typedef struct emsim_trace_set emsim_trace_set;

typedef struct emsim_scenario {
    double i_rms_a;
    double v_rms_v;
    double phase_rad;      /* angle by which the current lags the voltage */
    double line_freq_hz;   /* 0 = use the params value */
    double duration_s;
    const char* label;     /* optional, may be NULL */
} emsim_scenario;

typedef struct emsim_run_result {
    char label[64];
    double i_rms_a;
    double v_rms_v;
    double phase_rad;
    double line_freq_hz;
    double duration_s;
    uint64_t pulse_count;
    double energy_expected_kwh;
    double energy_simulated_kwh;
    double error_pct;
    int tripped;
    int counter_overflow;
    double wall_time_s;
} emsim_run_result;

typedef struct emsim_step_outputs {
    double instantaneous_power;
    double instantaneous_active_power;
    double active_power_signal;
    double energy_signal;
    double energy_pulse;
    int pulse_emitted;
} emsim_step_outputs;

/* ---- library ----------------------------------------------------------- */

EMSIM_API const char* emsim_version(void);

/* Message for the most recent failure in this thread. Never NULL. */
EMSIM_API const char* emsim_last_error(void);

/* Frees strings returned as char* by this library. */
EMSIM_API void emsim_string_free(char* s);

/* ---- parameters --------------------------------------------------------- */

/* A new parameter record with the rated default configuration.
 * NULL only on allocation failure. */
EMSIM_API emsim_params* emsim_params_create(void);
EMSIM_API void emsim_params_free(emsim_params* p);

/* Known field names. Fills up to capacity entries (static storage, do not
 * free) and returns the total number of fields. */
EMSIM_API size_t emsim_param_keys(const char** keys, size_t capacity);

EMSIM_API emsim_status emsim_params_set(emsim_params* p, const char* key,
                                        const char* value);
EMSIM_API emsim_status emsim_params_get(const emsim_params* p, const char* key,
                                        double* out_value);

/* key=value lines, '#' comments. The dump loads back to an identical record. */
EMSIM_API emsim_status emsim_params_load_file(emsim_params* p, const char* path);
EMSIM_API char* emsim_params_dump(const emsim_params* p);

/* EMSIM_OK when the record is simulatable, EMSIM_ERROR_CONFIG otherwise. */
EMSIM_API emsim_status emsim_params_validate(const emsim_params* p);

/* ---- scenario and table runs -------------------------------------------- */

/* 1 (trip) when either RMS value exceeds its protection limit. */
EMSIM_API int emsim_overload_check(const emsim_params* p, double i_rms_a,
                                   double v_rms_v);

/* Runs one scenario into *out. Over-limit scenarios complete with
 * out->tripped set and zero energy; that is a measurement outcome, not an
 * error. */
EMSIM_API emsim_status emsim_run_scenario(const emsim_params* p,
                                          const emsim_scenario* scenario,
                                          emsim_run_result* out);

/* Runs a built-in table into rows[0..capacity). Writes the row count to
 * *out_count (at most 12; EMSIM_ERROR_INVALID_ARGUMENT when capacity is too
 * small). */
EMSIM_API emsim_status emsim_run_table(const emsim_params* p,
                                       emsim_table_id id,
                                       emsim_run_result* rows, size_t capacity,
                                       size_t* out_count);

/* Renders rows as CSV (header line included) into *out_csv; free with
 * emsim_string_free. */
EMSIM_API emsim_status emsim_results_csv(const emsim_run_result* rows,
                                         size_t count, char** out_csv);

/* ---- signal traces ------------------------------------------------------- */

/* Traceable signal names (static storage). Same contract as
 * emsim_param_keys. */
EMSIM_API size_t emsim_trace_signals(const char** names, size_t capacity);

/* Runs one scenario with full stepping, recording the named signals every
 * `decimation` steps. On success *out_traces owns one trace per name. */
EMSIM_API emsim_status emsim_run_scenario_traced(
    const emsim_params* p, const emsim_scenario* scenario,
    const char* const* signal_names, size_t n_signals, uint32_t decimation,
    emsim_run_result* out, emsim_trace_set** out_traces);

EMSIM_API size_t emsim_trace_set_count(const emsim_trace_set* ts);
EMSIM_API const char* emsim_trace_set_name(const emsim_trace_set* ts,
                                           size_t index);
/* Renders one trace as CSV ("# signal: <name>" comment plus t_s,value
 * rows); free with emsim_string_free. */
EMSIM_API emsim_status emsim_trace_set_csv(const emsim_trace_set* ts,
                                           size_t index, char** out_csv);
EMSIM_API void emsim_trace_set_free(emsim_trace_set* ts);

/* ---- direct meter stepping ----------------------------------------------- */

/* A fresh meter wired per the given parameters. NULL when the parameters do
 * not validate (see emsim_last_error). */
EMSIM_API emsim_meter* emsim_meter_create(const emsim_params* p);
EMSIM_API void emsim_meter_free(emsim_meter* m);

/* Advances the meter by one dt step on raw instantaneous samples.
 * out_signals may be NULL. Returns EMSIM_ERROR_COUNTER_OVERFLOW once the
 * pulse register has saturated (the step itself still completes). */
EMSIM_API emsim_status emsim_meter_step(emsim_meter* m, double i_sample,
                                        double v_sample,
                                        emsim_step_outputs* out_signals);

/* Analytic steady-state advance at constant active power; the meter must
 * already be settled (step it for at least emsim_settle_time_s first). */
EMSIM_API emsim_status emsim_meter_run_steady(emsim_meter* m,
                                              double active_power_w,
                                              double duration_s);

EMSIM_API double emsim_settle_time_s(const emsim_params* p);

EMSIM_API uint64_t emsim_meter_pulse_count(const emsim_meter* m);
EMSIM_API uint32_t emsim_meter_bcd_register(const emsim_meter* m);
EMSIM_API int emsim_meter_counter_overflow(const emsim_meter* m);
EMSIM_API double emsim_meter_energy_kwh(const emsim_meter* m);

/* Display readout, e.g. "23.589 KWh". Needs a buffer of at least 32 bytes. */
EMSIM_API emsim_status emsim_meter_display(const emsim_meter* m, char* buf,
                                           size_t buflen);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EMSIM_H */
