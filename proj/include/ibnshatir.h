/* ibnshatir.h: C interface to the Ibn al-Shatir planetary-model library.
 *
 * All functions return ISH_OK (0) on success or a negative ish_status code;
 * results come back through out-parameters. Handles are opaque and must be
 * released with ish_model_free. The library is stateless apart from a
 * thread-local message slot for ish_last_error.
 */

#ifndef IBNSHATIR_H
#define IBNSHATIR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ish_status {
    ISH_OK = 0,
    ISH_EPARSE = -1,       /* malformed sexagesimal literal */
    ISH_ERANGE = -2,       /* digit or calendar field out of range */
    ISH_EPRECOND = -3,     /* precondition violated */
    ISH_EUNSUPPORTED = -4, /* unknown body/model or unsupported pair */
    ISH_EDEGENERATE = -5,  /* degenerate geometry or infeasible targets */
    ISH_EBUFFER = -6,      /* caller buffer too small */
    ISH_EIO = -7           /* malformed bulk input */
} ish_status;

typedef struct ish_model ish_model; /* opaque: one (body, model, options) pipeline */

typedef struct ish_options {
    int latitude_variant;   /* 1 (default) or 2: Venus/Mercury latitude arrangement */
    int urdi_moon_drop_q;   /* nonzero: read the Urdi Moon as a computing device */
    int sadr_alt_reading;   /* nonzero: second textual reading of the small orb */
    int venus_historical;   /* nonzero: Ptolemaic Venus radii instead of matched */
    int latitude_device;    /* Tusi superiors: 0 none, 1 twin orbs, 2 naive couple,
                               3 corrected couple */
} ish_options;

void ish_options_init(ish_options* opts);

const char* ish_version(void);
/* Message for the most recent failure on this thread. */
const char* ish_last_error(void);

/* --- sexagesimal codec ----------------------------------------------------- */

/* Grammar: [-] [<n>s] <whole> [';' d (',' d)*]; signs are 30 degrees. */
ish_status ish_parse_angle(const char* text, double* degrees);
/* rounding: 0 half-up, 1 truncate. */
ish_status ish_format_angle(double degrees, int places, int rounding, int with_zodiac,
                            char* buf, size_t buflen);

/* --- time base --------------------------------------------------------------- */

ish_status ish_yazdegerd_to_t(int year, int month, int day, int epagomenal, double* t_days);
ish_status ish_equation_of_time(double t_days, double obliquity_deg, double* hours);

/* --- positions --------------------------------------------------------------- */

/* body: sun moon saturn jupiter mars venus mercury
 * model: shatir3d shatir-planar (alias shatir) shatir-chi ptolemy ptolemy2
 *        ptolemy3 urdi tusi tusi-couple shirazi sadr */
ish_status ish_model_new(const char* body, const char* model, const ish_options* opts,
                         ish_model** out);
void ish_model_free(ish_model* model);
ish_status ish_model_position(const ish_model* model, double t_days, double* lon_deg,
                              double* lat_deg, double* dist);

/* --- equation tables ---------------------------------------------------------- */

typedef struct ish_table_row {
    double arg_deg;
    double c1_deg;
    double c2_near_deg;
    double delta_deg;
    double chi;
} ish_table_row;

ish_status ish_equation_table(const char* body, int step_deg, ish_table_row* rows, int max_rows,
                              int* n_rows);

/* --- comparison and scoring --------------------------------------------------- */

ish_status ish_equivalence_max_delta(const char* body, const char* model_a, const char* model_b,
                                     int samples, unsigned seed, double* max_delta_deg);

/* Cumulative |error| frequencies against a caller-supplied reference series. */
ish_status ish_error_table(const ish_model* model, const double* t_days, const double* ref_lon,
                           const double* ref_lat, int n, const double* thresholds, int n_thr,
                           double* freq_lon, double* freq_lat);

/* Error quantiles: for each probability in (0,1], the smallest error whose
 * cumulative frequency reaches it. */
ish_status ish_error_quantiles(const ish_model* model, const double* t_days, const double* ref_lon,
                               const double* ref_lat, int n, const double* probabilities,
                               int n_probs, double* q_lon, double* q_lat);

/* --- stations ------------------------------------------------------------------ */

typedef struct ish_station {
    double t_days;
    int to_retrograde; /* 1: direct -> retrograde, 0: retrograde -> direct */
} ish_station;

ish_status ish_find_stations(const ish_model* model, double t0, double t1, double step,
                             ish_station* out, int max_out, int* n_out);
ish_status ish_retrogradation_expected(const char* body, int* flag);

/* --- cosmology ------------------------------------------------------------------ */

typedef struct ish_ledger_row {
    const char* body;
    long long inner_num, inner_den; /* Earth radii, exact */
    long long outer_num, outer_den;
} ish_ledger_row;

ish_status ish_nesting_ledger(ish_ledger_row* rows, int max_rows, int* n_rows);
/* Full cosmology report (TSV). Returns ISH_EBUFFER and the needed size if short. */
ish_status ish_cosmo_report(char* buf, size_t buflen, size_t* needed);

/* --- verification suites --------------------------------------------------------- */

/* Proposition and equivalence suites; returns a pass/FAIL line per check. */
ish_status ish_check_report(unsigned seed, int trials, char* buf, size_t buflen, size_t* needed);

/* Mercury calibration from four observed extremes (degrees). out[0..3]:
 * P3P4+P4P5, P3P4-P4P5, P5P6-2*P6P7, P5P6+2*P6P7. */
ish_status ish_mercury_calibration(double max_c2_apogee, double max_c2_perigee,
                                   double c1_quadrature, double max_c2_quadrature, double out[4]);

#ifdef __cplusplus
}
#endif

#endif /* IBNSHATIR_H */
