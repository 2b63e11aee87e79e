#include "ibnshatir.h"

#include <cstring>
#include <string>

#include "core/cosmo.hpp"
#include "core/harness.hpp"
#include "core/models.hpp"
#include "core/rivals.hpp"
#include "core/sexagesimal.hpp"
#include "core/timebase.hpp"
#include "core/util.hpp"

using namespace shatir;

struct ish_model {
    rivals::ModelId id;
    models::Body body;
    rivals::Options opts;
};

namespace {

thread_local std::string g_last_error;

ish_status status_of(const Error& e) {
    switch (e.code()) {
        case Err::MalformedSexagesimal: return ISH_EPARSE;
        case Err::DigitOutOfRange:
        case Err::FieldOutOfRange: return ISH_ERANGE;
        case Err::PreconditionViolated: return ISH_EPRECOND;
        case Err::UnknownPointLabel:
        case Err::UnknownBody:
        case Err::UnsupportedPair: return ISH_EUNSUPPORTED;
        case Err::InfeasibleTargets:
        case Err::DegenerateGeometry: return ISH_EDEGENERATE;
        case Err::SpanMismatch: return ISH_EIO;
    }
    return ISH_EPRECOND;
}

template <typename F>
ish_status guarded(F&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ISH_EPRECOND;
    }
}

rivals::Options to_options(const ish_options* o) {
    rivals::Options r;
    if (!o) return r;
    r.urdi_moon_drop_q = o->urdi_moon_drop_q != 0;
    r.sadr_alt_reading = o->sadr_alt_reading != 0;
    r.venus_historical = o->venus_historical != 0;
    r.latitude_device = o->latitude_device;
    r.latitude_variant = o->latitude_variant == 2 ? models::LatitudeVariant::Second
                                                  : models::LatitudeVariant::First;
    return r;
}

ish_status copy_out(const std::string& text, char* buf, size_t buflen, size_t* needed) {
    if (needed) *needed = text.size() + 1;
    if (!buf || buflen < text.size() + 1) {
        g_last_error = "buffer too small";
        return ISH_EBUFFER;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return ISH_OK;
}

} // namespace

extern "C" {

void ish_options_init(ish_options* opts) {
    if (!opts) return;
    *opts = ish_options{};
    opts->latitude_variant = 1;
}

const char* ish_version(void) { return "1.0.0"; }

const char* ish_last_error(void) { return g_last_error.c_str(); }

ish_status ish_parse_angle(const char* text, double* degrees) {
    return guarded([&]() {
        if (!text || !degrees) fail(Err::PreconditionViolated, "null argument");
        *degrees = sexagesimal::to_decimal(sexagesimal::parse(text));
        return ISH_OK;
    });
}

ish_status ish_format_angle(double degrees, int places, int rounding, int with_zodiac, char* buf,
                            size_t buflen) {
    return guarded([&]() {
        auto mode = rounding == 1 ? sexagesimal::Rounding::Truncate : sexagesimal::Rounding::HalfUp;
        std::string s = sexagesimal::format(degrees, places, mode, with_zodiac != 0);
        return copy_out(s, buf, buflen, nullptr);
    });
}

ish_status ish_yazdegerd_to_t(int year, int month, int day, int epagomenal, double* t_days) {
    return guarded([&]() {
        if (!t_days) fail(Err::PreconditionViolated, "null argument");
        *t_days = timebase::t_from_yazdegerd(year, month, day, epagomenal);
        return ISH_OK;
    });
}

ish_status ish_equation_of_time(double t_days, double obliquity_deg, double* hours) {
    return guarded([&]() {
        if (!hours) fail(Err::PreconditionViolated, "null argument");
        *hours = timebase::equation_of_time(t_days, obliquity_deg);
        return ISH_OK;
    });
}

ish_status ish_model_new(const char* body, const char* model, const ish_options* opts,
                         ish_model** out) {
    return guarded([&]() {
        if (!body || !model || !out) fail(Err::PreconditionViolated, "null argument");
        auto m = new ish_model{rivals::model_from_name(model), models::body_from_name(body),
                               to_options(opts)};
        // Reject unsupported pairs at creation time.
        rivals::position_of(m->id, m->body, 0.0, m->opts);
        *out = m;
        return ISH_OK;
    });
}

void ish_model_free(ish_model* model) { delete model; }

ish_status ish_model_position(const ish_model* model, double t_days, double* lon_deg,
                              double* lat_deg, double* dist) {
    return guarded([&]() {
        if (!model || !lon_deg || !lat_deg || !dist) fail(Err::PreconditionViolated, "null argument");
        auto rec = rivals::position_of(model->id, model->body, t_days, model->opts);
        *lon_deg = rec.longitude;
        *lat_deg = rec.latitude;
        *dist = rec.distance;
        return ISH_OK;
    });
}

ish_status ish_equation_table(const char* body, int step_deg, ish_table_row* rows, int max_rows,
                              int* n_rows) {
    return guarded([&]() {
        if (!body || !rows || !n_rows) fail(Err::PreconditionViolated, "null argument");
        auto table = models::generate_table(models::body_from_name(body), step_deg);
        if (static_cast<int>(table.size()) > max_rows) {
            g_last_error = "row buffer too small";
            return ISH_EBUFFER;
        }
        for (size_t i = 0; i < table.size(); ++i)
            rows[i] = ish_table_row{table[i].arg, table[i].c1, table[i].c2_near, table[i].delta,
                                    table[i].chi};
        *n_rows = static_cast<int>(table.size());
        return ISH_OK;
    });
}

ish_status ish_equivalence_max_delta(const char* body, const char* model_a, const char* model_b,
                                     int samples, unsigned seed, double* max_delta_deg) {
    return guarded([&]() {
        if (!body || !model_a || !model_b || !max_delta_deg)
            fail(Err::PreconditionViolated, "null argument");
        *max_delta_deg =
            rivals::equivalence_report(rivals::model_from_name(model_a),
                                       rivals::model_from_name(model_b),
                                       models::body_from_name(body), samples, seed);
        return ISH_OK;
    });
}

ish_status ish_error_table(const ish_model* model, const double* t_days, const double* ref_lon,
                           const double* ref_lat, int n, const double* thresholds, int n_thr,
                           double* freq_lon, double* freq_lat) {
    return guarded([&]() {
        if (!model || !t_days || !ref_lon || !ref_lat || !thresholds || !freq_lon || !freq_lat)
            fail(Err::PreconditionViolated, "null argument");
        std::vector<harness::ReferenceRow> rows(n);
        for (int i = 0; i < n; ++i)
            rows[i] = harness::ReferenceRow{t_days[i], model->body, norm360(ref_lon[i]),
                                            ref_lat[i], std::nullopt};
        auto table = harness::error_table(model->id, model->body, rows,
                                          std::vector<double>(thresholds, thresholds + n_thr),
                                          model->opts);
        for (int i = 0; i < n_thr; ++i) {
            freq_lon[i] = table.freq_lon[i];
            freq_lat[i] = table.freq_lat[i];
        }
        return ISH_OK;
    });
}

ish_status ish_error_quantiles(const ish_model* model, const double* t_days, const double* ref_lon,
                               const double* ref_lat, int n, const double* probabilities,
                               int n_probs, double* q_lon, double* q_lat) {
    return guarded([&]() {
        if (!model || !t_days || !ref_lon || !ref_lat || !probabilities || !q_lon || !q_lat)
            fail(Err::PreconditionViolated, "null argument");
        std::vector<harness::ReferenceRow> rows(n);
        for (int i = 0; i < n; ++i)
            rows[i] = harness::ReferenceRow{t_days[i], model->body, norm360(ref_lon[i]),
                                            ref_lat[i], std::nullopt};
        auto table =
            harness::error_quantiles(model->id, model->body, rows,
                                     std::vector<double>(probabilities, probabilities + n_probs),
                                     model->opts);
        for (int i = 0; i < n_probs; ++i) {
            q_lon[i] = table.q_lon[i];
            q_lat[i] = table.q_lat[i];
        }
        return ISH_OK;
    });
}

ish_status ish_find_stations(const ish_model* model, double t0, double t1, double step,
                             ish_station* out, int max_out, int* n_out) {
    return guarded([&]() {
        if (!model || !out || !n_out) fail(Err::PreconditionViolated, "null argument");
        auto stations = harness::find_stations(model->id, model->body, t0, t1, step, model->opts);
        if (static_cast<int>(stations.size()) > max_out) {
            g_last_error = "station buffer too small";
            return ISH_EBUFFER;
        }
        for (size_t i = 0; i < stations.size(); ++i)
            out[i] = ish_station{stations[i].t,
                                 stations[i].kind == harness::StationKind::DirectToRetrograde};
        *n_out = static_cast<int>(stations.size());
        return ISH_OK;
    });
}

ish_status ish_retrogradation_expected(const char* body, int* flag) {
    return guarded([&]() {
        if (!body || !flag) fail(Err::PreconditionViolated, "null argument");
        *flag = harness::retrogradation_expected(models::body_from_name(body)) ? 1 : 0;
        return ISH_OK;
    });
}

ish_status ish_nesting_ledger(ish_ledger_row* rows, int max_rows, int* n_rows) {
    return guarded([&]() {
        if (!rows || !n_rows) fail(Err::PreconditionViolated, "null argument");
        auto ledger = cosmo::nesting_chain();
        if (static_cast<int>(ledger.rows.size()) > max_rows) {
            g_last_error = "ledger buffer too small";
            return ISH_EBUFFER;
        }
        for (size_t i = 0; i < ledger.rows.size(); ++i) {
            const auto& r = ledger.rows[i];
            rows[i] = ish_ledger_row{models::body_name(r.body), r.inner.num(), r.inner.den(),
                                     r.outer.num(), r.outer.den()};
        }
        *n_rows = static_cast<int>(ledger.rows.size());
        return ISH_OK;
    });
}

ish_status ish_cosmo_report(char* buf, size_t buflen, size_t* needed) {
    return guarded([&]() { return copy_out(harness::cosmo_report_tsv(), buf, buflen, needed); });
}

ish_status ish_check_report(unsigned seed, int trials, char* buf, size_t buflen, size_t* needed) {
    return guarded(
        [&]() { return copy_out(harness::check_report(seed, trials), buf, buflen, needed); });
}

ish_status ish_mercury_calibration(double max_c2_apogee, double max_c2_perigee,
                                   double c1_quadrature, double max_c2_quadrature, double out[4]) {
    return guarded([&]() {
        if (!out) fail(Err::PreconditionViolated, "null argument");
        auto cal = rivals::mercury_calibration(
            rivals::MercuryTargets{max_c2_apogee, max_c2_perigee, c1_quadrature, max_c2_quadrature});
        out[0] = cal.sum_p3p4_p4p5;
        out[1] = cal.diff_p3p4_p4p5;
        out[2] = cal.arm_minus;
        out[3] = cal.arm_plus;
        return ISH_OK;
    });
}

} // extern "C"
