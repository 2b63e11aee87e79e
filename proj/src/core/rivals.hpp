#pragma once

#include <string>
#include <vector>

#include "models.hpp"

namespace shatir::rivals {

using models::Body;
using models::EphemerisRecord;

// Every longitude pipeline the harness can evaluate, the house models included.
enum class ModelId {
    Shatir3D,
    ShatirPlanar, // exact second equation
    ShatirChi,    // interpolated second equation
    Ptolemy,      // Moon resolves to the third model
    Ptolemy2,
    Ptolemy3,
    Urdi,
    Tusi,
    TusiCouple, // Moon with the curvilinear couple
    Shirazi,
    Sadr,
};

const char* model_name(ModelId id);
ModelId model_from_name(const std::string& name); // throws UnsupportedPair

struct Options {
    bool urdi_moon_drop_q = false; // read the Moon model as a computing device
    bool sadr_alt_reading = false; // second textual reading of the small orb
    bool venus_historical = false; // Ptolemaic radii instead of matched ones
    // Superior-planet latitude devices grafted on the Tusi model:
    // 0 none, 1 two homocentric orbs, 2 curvilinear couple (naive poles),
    // 3 curvilinear couple (poles corrected toward the ecliptic).
    int latitude_device = 0;
    models::LatitudeVariant latitude_variant = models::LatitudeVariant::First;
};

// Geometric constants of one rival arrangement.
struct RivalConfig {
    ModelId model;
    Body body;
    std::vector<double> offsets; // consecutive j-offsets from O
    double eccentricity = 0.0;
    double epicycle_radius = 0.0;
};

RivalConfig rival_config(ModelId model, Body body, const Options& opts = {});

EphemerisRecord rival_position(ModelId model, Body body, double t, const Options& opts = {});

// Dispatcher over every model id, house pipelines included.
EphemerisRecord position_of(ModelId model, Body body, double t, const Options& opts = {});

// Max |longitude difference| over `samples` uniformly random times in the
// first sixty years after the epoch (deterministic for a given seed).
double equivalence_report(ModelId a, ModelId b, Body body, int samples, unsigned seed = 1331,
                          const Options& opts = {});

// Calibration of the Mercury arrangement from four observed extremes.
struct MercuryTargets {
    double max_c2_apogee_deg;    // greatest elongation at apogee
    double max_c2_perigee_deg;   // greatest elongation at perigee
    double c1_quadrature_deg;    // |equation of center| at quadrature
    double max_c2_quadrature_deg;
};

struct MercuryCalibration {
    double sum_p3p4_p4p5;   // P3P4 + P4P5
    double diff_p3p4_p4p5;  // P3P4 - P4P5
    double arm_minus;       // P5P6 - 2 P6P7
    double arm_plus;        // P5P6 + 2 P6P7
};

MercuryCalibration mercury_calibration(const MercuryTargets& targets); // InfeasibleTargets

// Ptolemaic-side relations used in the same derivation.
double ptolemy_e_from_distance_ratio(double ratio, double R = 60.0);
double ptolemy_c1_diff_from_e(double e, double R = 60.0);

// Equation of the Moon per Urdi's own planar triangles (oracle for the chain).
double urdi_moon_q(double two_eta_deg);

} // namespace shatir::rivals
