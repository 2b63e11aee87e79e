#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rivals.hpp"

namespace shatir::harness {

using models::Body;
using models::EphemerisRecord;
using rivals::ModelId;
using rivals::Options;

struct ReferenceRow {
    double t = 0.0;
    Body body = Body::Sun;
    double lon = 0.0;
    double lat = 0.0;
    std::optional<double> dist;
};

struct ReferenceSeries {
    std::vector<ReferenceRow> rows;

    // Header must read t_days,body,lon_deg,lat_deg[,dist]; per-body times must
    // strictly increase; longitudes are normalized on load.
    static ReferenceSeries parse_csv(std::istream& in);
    std::vector<ReferenceRow> for_body(Body body) const;
};

struct ErrorTable {
    std::vector<double> thresholds; // degrees
    std::vector<double> freq_lon;   // cumulative frequencies in [0, 1]
    std::vector<double> freq_lat;
};

// |longitude error| on the minimal circular arc, plain difference in latitude.
ErrorTable error_table(ModelId model, Body body, const std::vector<ReferenceRow>& reference,
                       const std::vector<double>& thresholds, const Options& opts = {});

struct QuantileTable {
    std::vector<double> probabilities; // in (0, 1]
    std::vector<double> q_lon;         // smallest error with cumulative frequency >= p
    std::vector<double> q_lat;
};

QuantileTable error_quantiles(ModelId model, Body body, const std::vector<ReferenceRow>& reference,
                              const std::vector<double>& probabilities, const Options& opts = {});

std::vector<EphemerisRecord> ephemeris(ModelId model, Body body, double t0, double t1, double step,
                                       const Options& opts = {});

enum class StationKind { DirectToRetrograde, RetrogradeToDirect };

struct Station {
    double t;
    StationKind kind;
};

// Sign changes of the sampled longitude rate, refined by bisection to 1e-4 day.
std::vector<Station> find_stations(ModelId model, Body body, double t0, double t1, double step,
                                   const Options& opts = {});

// Chapter-26 ratio criterion: the epicycle-to-orb motion ratio against the
// perigee-line-to-epicycle-radius ratio.
bool retrogradation_expected(Body body);

// Deterministic text emission used by the command-line front end.
std::string ephemeris_csv(const std::vector<EphemerisRecord>& records);
std::string table_tsv(Body body, int step_deg);
std::string cosmo_report_tsv();
std::string check_report(unsigned seed, int trials);

} // namespace shatir::harness
