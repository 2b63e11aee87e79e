#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <random>
#include <sstream>

#include "cosmo.hpp"
#include "sexagesimal.hpp"
#include "util.hpp"

namespace shatir::harness {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

} // namespace

ReferenceSeries ReferenceSeries::parse_csv(std::istream& in) {
    ReferenceSeries series;
    std::string line;
    if (!std::getline(in, line)) fail(Err::SpanMismatch, "empty reference file");
    auto header = split(line, ',');
    bool with_dist = header.size() == 5 && header[4] == "dist";
    if (!(header.size() >= 4 && header[0] == "t_days" && header[1] == "body" &&
          header[2] == "lon_deg" && header[3] == "lat_deg" && (header.size() == 4 || with_dist)))
        fail(Err::SpanMismatch, "reference header must be t_days,body,lon_deg,lat_deg[,dist]");

    double last_t[7];
    bool seen[7] = {};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != header.size()) fail(Err::SpanMismatch, "ragged reference row: " + line);
        ReferenceRow row;
        row.t = std::stod(f[0]);
        row.body = models::body_from_name(f[1]);
        row.lon = norm360(std::stod(f[2]));
        row.lat = std::stod(f[3]);
        if (with_dist && !f[4].empty()) row.dist = std::stod(f[4]);
        int b = static_cast<int>(row.body);
        if (seen[b] && !(row.t > last_t[b]))
            fail(Err::SpanMismatch, "reference times must strictly increase per body");
        seen[b] = true;
        last_t[b] = row.t;
        series.rows.push_back(row);
    }
    return series;
}

std::vector<ReferenceRow> ReferenceSeries::for_body(Body body) const {
    std::vector<ReferenceRow> out;
    for (const auto& r : rows)
        if (r.body == body) out.push_back(r);
    return out;
}

ErrorTable error_table(ModelId model, Body body, const std::vector<ReferenceRow>& reference,
                       const std::vector<double>& thresholds, const Options& opts) {
    if (reference.empty()) fail(Err::SpanMismatch, "reference series has no rows for this body");
    ErrorTable table;
    table.thresholds = thresholds;
    std::vector<double> dlon, dlat;
    dlon.reserve(reference.size());
    for (const auto& row : reference) {
        EphemerisRecord rec = rivals::position_of(model, body, row.t, opts);
        dlon.push_back(circular_delta(rec.longitude, row.lon));
        dlat.push_back(std::fabs(rec.latitude - row.lat));
    }
    auto cumulative = [&](const std::vector<double>& err, double thr) {
        size_t n = 0;
        for (double e : err)
            if (e < thr) ++n;
        return static_cast<double>(n) / static_cast<double>(err.size());
    };
    for (double thr : thresholds) {
        table.freq_lon.push_back(cumulative(dlon, thr));
        table.freq_lat.push_back(cumulative(dlat, thr));
    }
    return table;
}

QuantileTable error_quantiles(ModelId model, Body body,
                              const std::vector<ReferenceRow>& reference,
                              const std::vector<double>& probabilities, const Options& opts) {
    if (reference.empty()) fail(Err::SpanMismatch, "reference series has no rows for this body");
    std::vector<double> dlon, dlat;
    for (const auto& row : reference) {
        EphemerisRecord rec = rivals::position_of(model, body, row.t, opts);
        dlon.push_back(circular_delta(rec.longitude, row.lon));
        dlat.push_back(std::fabs(rec.latitude - row.lat));
    }
    std::sort(dlon.begin(), dlon.end());
    std::sort(dlat.begin(), dlat.end());
    QuantileTable out;
    out.probabilities = probabilities;
    size_t n = reference.size();
    for (double p : probabilities) {
        if (!(p > 0.0 && p <= 1.0))
            fail(Err::PreconditionViolated, "quantile probabilities lie in (0, 1]");
        size_t idx = static_cast<size_t>(std::ceil(p * static_cast<double>(n)));
        idx = std::min(std::max<size_t>(idx, 1), n) - 1;
        out.q_lon.push_back(dlon[idx]);
        out.q_lat.push_back(dlat[idx]);
    }
    return out;
}

std::vector<EphemerisRecord> ephemeris(ModelId model, Body body, double t0, double t1, double step,
                                       const Options& opts) {
    if (step <= 0.0) fail(Err::PreconditionViolated, "step must be positive");
    std::vector<EphemerisRecord> out;
    long n = static_cast<long>(std::floor((t1 - t0) / step + 1e-9));
    for (long k = 0; k <= n; ++k) out.push_back(rivals::position_of(model, body, t0 + k * step, opts));
    return out;
}

namespace {

double longitude_rate(ModelId model, Body body, double t, const Options& opts) {
    const double h = 0.05;
    double a = rivals::position_of(model, body, t - h, opts).longitude;
    double b = rivals::position_of(model, body, t + h, opts).longitude;
    return wrap180(b - a) / (2.0 * h);
}

} // namespace

std::vector<Station> find_stations(ModelId model, Body body, double t0, double t1, double step,
                                   const Options& opts) {
    if (step <= 0.0) fail(Err::PreconditionViolated, "step must be positive");
    std::vector<Station> out;
    double prev_t = t0;
    double prev_rate = longitude_rate(model, body, t0, opts);
    for (double t = t0 + step; t <= t1 + 1e-9; t += step) {
        double rate = longitude_rate(model, body, t, opts);
        if ((prev_rate < 0.0) != (rate < 0.0) && prev_rate != 0.0) {
            double lo = prev_t, hi = t, flo = prev_rate;
            while (hi - lo > 1e-4) {
                double mid = 0.5 * (lo + hi);
                double fm = longitude_rate(model, body, mid, opts);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push_back({0.5 * (lo + hi), prev_rate > 0.0 ? StationKind::DirectToRetrograde
                                                            : StationKind::RetrogradeToDirect});
        }
        prev_t = t;
        prev_rate = rate;
    }
    return out;
}

bool retrogradation_expected(Body body) {
    models::ModelConfig cfg = models::build_config(body);
    double epicycle;
    double motion_ratio;
    switch (body) {
        case Body::Sun:
            // The deferent-plus-rotator pair acts as the effective epicycle.
            epicycle = cfg.offsets[1] + cfg.offsets[2];
            motion_ratio = 1.0;
            break;
        case Body::Moon:
            epicycle = models::moon_apparent_radius(180.0);
            motion_ratio = cfg.anomaly.rate / cfg.mean_longitude.rate;
            break;
        case Body::Mercury:
            epicycle = models::mercury_apparent_radius(90.0);
            motion_ratio = cfg.anomaly.rate / cfg.mean_longitude.rate;
            break;
        case Body::Venus:
            epicycle = std::fabs(cfg.offsets[3]);
            motion_ratio = cfg.anomaly.rate / cfg.mean_longitude.rate;
            break;
        default: {
            epicycle = std::fabs(cfg.offsets[3]);
            static const auto sun = models::build_config(Body::Sun);
            motion_ratio =
                (sun.mean_longitude.rate - cfg.mean_longitude.rate) / cfg.mean_longitude.rate;
            break;
        }
    }
    double line_ratio = (60.0 - epicycle) / epicycle;
    return motion_ratio > line_ratio;
}

std::string ephemeris_csv(const std::vector<EphemerisRecord>& records) {
    std::string out = "t_days,body,lon_deg,lat_deg,dist\n";
    for (const auto& r : records) {
        out += fmt("%.6f", r.t);
        out += ',';
        out += models::body_name(r.body);
        out += ',';
        out += fmt("%.9f", r.longitude);
        out += ',';
        out += fmt("%.9f", r.latitude);
        out += ',';
        out += fmt("%.9f", r.distance);
        out += '\n';
    }
    return out;
}

std::string table_tsv(Body body, int step_deg) {
    auto rows = models::generate_table(body, step_deg);
    bool moon = body == Body::Moon;
    std::string out = moon ? "arg\tc1\tc2_near\tdelta\tchi\n" : "arg\tc1\tc2_far\tdelta\tchi\n";
    using sexagesimal::format;
    for (const auto& r : rows) {
        out += fmt("%.0f", r.arg);
        out += '\t' + format(r.c1, 1);
        out += '\t' + format(r.c2_near, 1);
        out += '\t' + format(r.delta, 1);
        out += '\t' + format(r.chi, 1);
        out += '\n';
    }
    return out;
}

std::string cosmo_report_tsv() {
    using cosmo::Rational;
    std::string out = "quantity\trational\tsexagesimal\n";
    auto line = [&](const std::string& name, const Rational& v) {
        out += name + '\t' + v.str() + '\t' + cosmo::rational_to_sexagesimal(v, 2) + '\n';
    };
    auto ledger = cosmo::nesting_chain();
    for (const auto& row : ledger.rows) {
        std::string body = models::body_name(row.body);
        line(body + ".inner_earth_radii", row.inner);
        line(body + ".outer_earth_radii", row.outer);
    }
    line("fixed_stars.floor_earth_radii", ledger.fixed_stars_floor);

    auto fir = cosmo::sun_distance_fir_tree(cosmo::moon_apparent_radius_sine(),
                                            cosmo::shadow_coefficient(), Rational(63),
                                            cosmo::sun_diameter_mean() /
                                                cosmo::moon_diameter_at_max_dist());
    line("sun.distance_equal_diameters", fir.distance_at_equal_diameter);
    line("sun.mean_distance_corrected", fir.mean_distance);
    line("sun.radius_earth_radii", fir.sun_radius);
    line("shadow.apex_earth_radii", cosmo::shadow_apex(Rational(63), cosmo::shadow_radius_as_used()));
    auto ninth = cosmo::ninth_orb_speed();
    line("ninth_orb.circumference", ninth.circumference);
    line("ninth_orb.degree_length", ninth.degree_length);
    line("ninth_orb.minute_length", ninth.minute_length);
    auto stars = cosmo::star_diameters();
    for (size_t m = 0; m < stars.size(); ++m)
        line("star.magnitude_" + std::to_string(m + 1) + "_diameter", stars[m]);
    out += "errata\tprinted\tcorrected\n";
    for (const auto& e : cosmo::errata()) out += e.id + '\t' + e.printed + '\t' + e.corrected + '\n';
    return out;
}

std::string check_report(unsigned seed, int trials) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 360.0);
    std::uniform_real_distribution<double> offset(-20.0, 20.0);
    using rotkit::Point3;

    double worst1 = 0, worst2 = 0, worst3 = 0, worst_cross = 0;
    for (int k = 0; k < trials; ++k) {
        double base = offset(rng), d = offset(rng), alpha = angle(rng);
        Point3 p1{0, base, 0}, p2{0, base + offset(rng), 0};
        Point3 p3{0, p1.y + d, 0}, p4{0, p2.y + d, 0};
        worst1 = std::max(worst1, rotkit::check_prop1(p1, p2, p3, p4, alpha));

        Point3 q1{0, base, 0}, q2{0, base + d, 0}, q3{0, offset(rng), 0};
        Point3 q4{0, q3.y - d, 0}, q5{0, q3.y + d, 0};
        auto res2 = rotkit::check_prop2(q1, q2, q3, q4, q5, alpha);
        worst2 = std::max(worst2, res2.residual);
        worst_cross = std::max(worst_cross, res2.translation_cross);

        Point3 r1{0, base, 0}, r2{0, base + d, 0}, r3{0, base - d, 0};
        worst3 = std::max(worst3, rotkit::check_prop3(r1, r2, r3, alpha));
    }

    std::string out;
    auto pass = [&](const std::string& name, double value, double bound) {
        out += (value < bound ? "pass" : "FAIL");
        out += '\t' + name + '\t' + fmt("%.3e", value) + '\n';
    };
    pass("proposition-1 residual", worst1, 1e-9);
    pass("proposition-2 residual", worst2, 1e-9);
    pass("proposition-2 couple translation", worst_cross, 1e-9);
    pass("proposition-3 residual", worst3, 1e-9);

    using rivals::ModelId;
    for (Body b : {Body::Saturn, Body::Jupiter, Body::Mars}) {
        std::string name = models::body_name(b);
        pass(name + " shatir-urdi", rivals::equivalence_report(ModelId::ShatirPlanar, ModelId::Urdi, b, 200, seed), 1e-9);
        pass(name + " urdi-tusi", rivals::equivalence_report(ModelId::Urdi, ModelId::Tusi, b, 200, seed), 1e-9);
        pass(name + " tusi-shirazi", rivals::equivalence_report(ModelId::Tusi, ModelId::Shirazi, b, 200, seed), 1e-9);
    }
    pass("moon tusi-shirazi", rivals::equivalence_report(ModelId::Tusi, ModelId::Shirazi, Body::Moon, 200, seed), 1e-9);
    return out;
}

} // namespace shatir::harness
