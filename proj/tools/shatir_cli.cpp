// Command-line front end over the C API: ephemerides, equation tables,
// error scoring, stations, cosmology, equation of time, model comparison.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ibnshatir.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

int exit_code(ish_status s) { return s == ISH_EIO ? kExitIo : kExitPrecondition; }

void check(ish_status s) {
    if (s != ISH_OK) die(exit_code(s), ish_last_error());
}

double parse_angle(const std::string& text) {
    double deg = 0.0;
    check(ish_parse_angle(text.c_str(), &deg));
    return deg;
}

// --t <decimal days> or --yz Y/M/D[/E]
struct TimeFlags {
    std::string t_text;
    std::string yz_text;

    double resolve(double fallback = 0.0) const {
        if (!t_text.empty() && !yz_text.empty()) die(kExitPrecondition, "give --t or --yz, not both");
        if (!t_text.empty()) return std::stod(t_text);
        if (yz_text.empty()) return fallback;
        int f[4] = {0, 1, 1, 0};
        int n = std::sscanf(yz_text.c_str(), "%d/%d/%d/%d", &f[0], &f[1], &f[2], &f[3]);
        if (n < 3) die(kExitPrecondition, "expected --yz Y/M/D[/E]");
        double t = 0.0;
        check(ish_yazdegerd_to_t(f[0], f[1], f[2], n == 4 ? f[3] : 0, &t));
        return t;
    }
};

ish_model* open_model(const std::string& body, const std::string& model, const ish_options& opts) {
    ish_model* m = nullptr;
    check(ish_model_new(body.c_str(), model.c_str(), &opts, &m));
    return m;
}

struct ReferenceData {
    std::vector<double> t, lon, lat;
};

ReferenceData read_reference(const std::string& path, const std::string& body) {
    std::ifstream in(path);
    if (!in) die(kExitIo, "cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) die(kExitIo, "empty reference file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t_days,body,lon_deg,lat_deg" && line != "t_days,body,lon_deg,lat_deg,dist")
        die(kExitIo, "reference header must be t_days,body,lon_deg,lat_deg[,dist]");
    ReferenceData data;
    double last_t = 0.0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string field;
        std::vector<std::string> f;
        while (std::getline(row, field, ',')) f.push_back(field);
        if (f.size() < 4) die(kExitIo, "ragged reference row: " + line);
        if (f[1] != body) continue;
        double t = std::stod(f[0]);
        if (!data.t.empty() && !(t > last_t)) die(kExitIo, "reference times must increase");
        last_t = t;
        data.t.push_back(t);
        data.lon.push_back(std::stod(f[2]));
        data.lat.push_back(std::stod(f[3]));
    }
    if (data.t.empty()) die(kExitIo, "no reference rows for body " + body);
    return data;
}

std::string fetch_report(ish_status (*fn)(char*, size_t, size_t*)) {
    size_t needed = 0;
    ish_status s = fn(nullptr, 0, &needed);
    if (s != ISH_EBUFFER && s != ISH_OK) die(exit_code(s), ish_last_error());
    std::string buf(needed, '\0');
    check(fn(buf.data(), buf.size(), &needed));
    buf.resize(needed - 1);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planetary models of Ibn al-Shatir and his rivals"};
    app.require_subcommand(1);

    ish_options opts;
    ish_options_init(&opts);
    bool flag_latvar2 = false, flag_urdi_no_q = false, flag_sadr_alt = false;
    bool flag_venus_hist = false;
    int flag_lat_device = 0;
    auto add_model_options = [&](CLI::App* cmd) {
        cmd->add_flag("--latitude-variant-2", flag_latvar2,
                      "second Venus/Mercury latitude arrangement");
        cmd->add_flag("--urdi-drop-q", flag_urdi_no_q, "read the Urdi Moon as a computing device");
        cmd->add_flag("--sadr-alt", flag_sadr_alt, "alternative reading of the Sadr small orb");
        cmd->add_flag("--venus-historical", flag_venus_hist, "Ptolemaic Venus radii");
        cmd->add_option("--latitude-device", flag_lat_device,
                        "Tusi superiors: 1 twin orbs, 2 naive couple, 3 corrected couple");
    };
    auto resolve_options = [&]() {
        opts.latitude_variant = flag_latvar2 ? 2 : 1;
        opts.urdi_moon_drop_q = flag_urdi_no_q;
        opts.sadr_alt_reading = flag_sadr_alt;
        opts.venus_historical = flag_venus_hist;
        opts.latitude_device = flag_lat_device;
    };

    std::string body, model = "shatir3d";
    TimeFlags t0_flags, t1_flags;
    double step = 1.0;

    auto* ephem = app.add_subcommand("ephem", "emit an ephemeris as CSV");
    ephem->add_option("--body", body)->required();
    ephem->add_option("--model", model);
    ephem->add_option("--t0", t0_flags.t_text, "start, decimal days since the epoch");
    ephem->add_option("--yz0", t0_flags.yz_text, "start, Yazdegerd Y/M/D[/E]");
    ephem->add_option("--t1", t1_flags.t_text, "end, decimal days");
    ephem->add_option("--yz1", t1_flags.yz_text, "end, Yazdegerd Y/M/D[/E]");
    ephem->add_option("--step", step, "sample step in days");
    add_model_options(ephem);

    std::string table_body;
    int table_step = 30;
    auto* table = app.add_subcommand("table", "equation table in the traditional layout");
    table->add_option("--body", table_body)->required();
    table->add_option("--step", table_step, "argument step in degrees");

    std::string ref_path;
    std::vector<std::string> threshold_texts;
    auto* errors = app.add_subcommand("errors", "cumulative error frequencies vs a reference");
    errors->add_option("--body", body)->required();
    errors->add_option("--model", model);
    errors->add_option("--ref", ref_path, "reference CSV (t_days,body,lon_deg,lat_deg[,dist])")
        ->required();
    errors->add_option("--threshold", threshold_texts, "threshold angle (repeatable)");
    std::vector<double> quantile_probs;
    errors->add_option("--quantile", quantile_probs,
                       "cumulative frequency in (0,1] to report the error quantile for");
    errors->add_option("--t0", t0_flags.t_text, "restrict to reference rows from t0");
    errors->add_option("--t1", t1_flags.t_text, "restrict to reference rows up to t1");
    add_model_options(errors);

    auto* stations = app.add_subcommand("stations", "station times and the ratio criterion");
    stations->add_option("--body", body)->required();
    stations->add_option("--model", model);
    stations->add_option("--t0", t0_flags.t_text);
    stations->add_option("--yz0", t0_flags.yz_text);
    stations->add_option("--t1", t1_flags.t_text);
    stations->add_option("--yz1", t1_flags.yz_text);
    stations->add_option("--step", step, "scan step in days");
    add_model_options(stations);

    bool cosmo_report = false;
    auto* cosmo = app.add_subcommand("cosmo", "solid orbs, nesting chain, cosmic distances");
    cosmo->add_flag("--report", cosmo_report, "emit the full TSV report");

    TimeFlags eq_time;
    std::string obliquity_text = "23;31";
    auto* eqtime = app.add_subcommand("eqtime", "equation of time in hours");
    eqtime->add_option("--t", eq_time.t_text);
    eqtime->add_option("--yz", eq_time.yz_text);
    eqtime->add_option("--obliquity", obliquity_text, "obliquity of the ecliptic");

    std::string model_a = "shatir", model_b;
    int samples = 1000;
    unsigned seed = 1331;
    auto* compare = app.add_subcommand("compare", "max longitude difference of two models");
    compare->add_option("--a", model_a);
    compare->add_option("--b", model_b)->required();
    compare->add_option("--body", body)->required();
    compare->add_option("--samples", samples);
    compare->add_option("--seed", seed);

    int trials = 1000;
    auto* checkcmd = app.add_subcommand("check", "proposition and equivalence suites");
    checkcmd->add_option("--seed", seed);
    checkcmd->add_option("--trials", trials);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        resolve_options();
        if (*ephem) {
            double t0 = t0_flags.resolve(0.0);
            double t1 = t1_flags.resolve(t0);
            if (step <= 0.0) die(kExitPrecondition, "step must be positive");
            ish_model* m = open_model(body, model, opts);
            std::printf("t_days,body,lon_deg,lat_deg,dist\n");
            for (long k = 0;; ++k) {
                double t = t0 + k * step;
                if (t > t1 + 1e-9) break;
                double lon, lat, dist;
                check(ish_model_position(m, t, &lon, &lat, &dist));
                std::printf("%.6f,%s,%.9f,%.9f,%.9f\n", t, body.c_str(), lon, lat, dist);
            }
            ish_model_free(m);
        } else if (*table) {
            ish_table_row rows[360];
            int n = 0;
            check(ish_equation_table(table_body.c_str(), table_step, rows, 360, &n));
            std::printf("arg\tc1\tc2\tdelta\tchi\n");
            char c1[32], c2[32], dl[32], chi[32];
            for (int i = 0; i < n; ++i) {
                check(ish_format_angle(rows[i].c1_deg, 1, 0, 0, c1, sizeof c1));
                check(ish_format_angle(rows[i].c2_near_deg, 1, 0, 0, c2, sizeof c2));
                check(ish_format_angle(rows[i].delta_deg, 1, 0, 0, dl, sizeof dl));
                check(ish_format_angle(rows[i].chi, 1, 0, 0, chi, sizeof chi));
                std::printf("%.0f\t%s\t%s\t%s\t%s\n", rows[i].arg_deg, c1, c2, dl, chi);
            }
        } else if (*errors) {
            ReferenceData ref = read_reference(ref_path, body);
            if (!t0_flags.t_text.empty() || !t1_flags.t_text.empty()) {
                double t0 = t0_flags.resolve(ref.t.front());
                double t1 = t1_flags.resolve(ref.t.back());
                if (t0 < ref.t.front() - 1e-9 || t1 > ref.t.back() + 1e-9)
                    die(kExitIo, "reference does not cover the requested span");
                ReferenceData cut;
                for (size_t i = 0; i < ref.t.size(); ++i)
                    if (ref.t[i] >= t0 && ref.t[i] <= t1) {
                        cut.t.push_back(ref.t[i]);
                        cut.lon.push_back(ref.lon[i]);
                        cut.lat.push_back(ref.lat[i]);
                    }
                if (cut.t.empty()) die(kExitIo, "no reference rows inside the requested span");
                ref = cut;
            }
            if (threshold_texts.empty() && quantile_probs.empty())
                die(kExitPrecondition, "give at least one --threshold or --quantile");
            ish_model* m = open_model(body, model, opts);
            if (!threshold_texts.empty()) {
                std::vector<double> thresholds;
                for (const auto& text : threshold_texts) thresholds.push_back(parse_angle(text));
                std::vector<double> freq_lon(thresholds.size()), freq_lat(thresholds.size());
                check(ish_error_table(m, ref.t.data(), ref.lon.data(), ref.lat.data(),
                                      static_cast<int>(ref.t.size()), thresholds.data(),
                                      static_cast<int>(thresholds.size()), freq_lon.data(),
                                      freq_lat.data()));
                std::printf("threshold_deg\tfreq_lon\tfreq_lat\n");
                for (size_t i = 0; i < thresholds.size(); ++i)
                    std::printf("%.6f\t%.4f\t%.4f\n", thresholds[i], freq_lon[i], freq_lat[i]);
            }
            if (!quantile_probs.empty()) {
                std::vector<double> q_lon(quantile_probs.size()), q_lat(quantile_probs.size());
                check(ish_error_quantiles(m, ref.t.data(), ref.lon.data(), ref.lat.data(),
                                          static_cast<int>(ref.t.size()), quantile_probs.data(),
                                          static_cast<int>(quantile_probs.size()), q_lon.data(),
                                          q_lat.data()));
                std::printf("frequency\tlon_err\tlat_err\n");
                char lon_s[32], lat_s[32];
                for (size_t i = 0; i < quantile_probs.size(); ++i) {
                    check(ish_format_angle(q_lon[i], 2, 0, 0, lon_s, sizeof lon_s));
                    check(ish_format_angle(q_lat[i], 2, 0, 0, lat_s, sizeof lat_s));
                    std::printf("%.0f%%\t%s\t%s\n", quantile_probs[i] * 100.0, lon_s, lat_s);
                }
            }
            ish_model_free(m);
        } else if (*stations) {
            double t0 = t0_flags.resolve(0.0);
            double t1 = t1_flags.resolve(t0 + 365.0);
            ish_model* m = open_model(body, model, opts);
            ish_station found[256];
            int n = 0;
            check(ish_find_stations(m, t0, t1, step, found, 256, &n));
            ish_model_free(m);
            int retro = 0;
            check(ish_retrogradation_expected(body.c_str(), &retro));
            std::printf("ratio_criterion\t%s\n", retro ? "retrogradation" : "no retrogradation");
            for (int i = 0; i < n; ++i)
                std::printf("%.4f\t%s\n", found[i].t_days,
                            found[i].to_retrograde ? "direct->retro" : "retro->direct");
        } else if (*cosmo) {
            (void)cosmo_report; // --report is implied; the flag is kept for clarity
            std::fputs(fetch_report(&ish_cosmo_report).c_str(), stdout);
        } else if (*eqtime) {
            double t = eq_time.resolve(0.0);
            double hours = 0.0;
            check(ish_equation_of_time(t, parse_angle(obliquity_text), &hours));
            std::printf("%.6f\n", hours);
        } else if (*compare) {
            double worst = 0.0;
            check(ish_equivalence_max_delta(body.c_str(), model_a.c_str(), model_b.c_str(), samples,
                                            seed, &worst));
            std::printf("max_delta_deg\t%.12e\n", worst);
        } else if (*checkcmd) {
            std::string report;
            size_t needed = 0;
            ish_status s = ish_check_report(seed, trials, nullptr, 0, &needed);
            if (s != ISH_EBUFFER && s != ISH_OK) die(exit_code(s), ish_last_error());
            report.resize(needed);
            check(ish_check_report(seed, trials, report.data(), report.size(), &needed));
            report.resize(needed - 1);
            std::fputs(report.c_str(), stdout);
            if (report.find("FAIL") != std::string::npos) return kExitPrecondition;
        }
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    }
    return kExitOk;
}
