#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotkit.hpp"
#include "timebase.hpp"

namespace shatir::models {

enum class Body { Sun, Moon, Saturn, Jupiter, Mars, Venus, Mercury };

const char* body_name(Body b);
Body body_from_name(const std::string& name); // throws UnknownBody

struct EphemerisRecord {
    double t = 0.0;
    Body body = Body::Sun;
    std::string model;
    double longitude = 0.0; // degrees, [0, 360)
    double latitude = 0.0;  // degrees
    double distance = 0.0;  // units of 60 (inclined-orb radius)
};

// How much of the latitude machinery the 3-D chain carries.
enum class TiltMode {
    Full,     // every tilt of the body's chain
    MainOnly, // inclined orb only, small-orb tilts zeroed
    None      // pure longitude chain in the ecliptic plane
};

// Venus and Mercury have a second latitude arrangement (chapter-25 variant).
enum class LatitudeVariant { First, Second };

struct ModelConfig {
    Body body;
    // Signed j-offsets between consecutive centers, starting at O (the first
    // entry is the inclined-orb radius, 60).
    std::vector<double> offsets;
    std::map<std::string, rotkit::Point3> points; // O, P1, P2, ...
    rotkit::Point3 star;                          // initial position of the body

    timebase::MeanParameter mean_longitude; // lambda_bar (Venus/Mercury: the sun's)
    timebase::MeanParameter apogee;         // lambda_A (unused for the Moon)
    timebase::MeanParameter anomaly;        // alpha_bar where it has its own rate
    timebase::MeanParameter node;           // Moon only
    bool anomaly_has_own_rate = false;

    double incl_orb_deg = 0.0;     // i of the inclined orb (signed)
    double incl_deferent_deg = 0.0;
    double incl_rotator_deg = 0.0;
    double incl_epicycle_deg = 0.0; // the +/- 0;5 pair of the inferior planets
    double node_offset_deg = 0.0;   // ascending node = apogee + node_offset

    std::vector<rotkit::RotationStep> chain(TiltMode mode,
                                            LatitudeVariant variant = LatitudeVariant::First) const;

    // Time-linear parameters of this body at t.
    rotkit::ParamSet params_at(double t) const;
};

ModelConfig build_config(Body body); // the treatise's parameter set

// Full 3-D pipeline: rotation chain, then ecliptic coordinates.
EphemerisRecord position3d(const ModelConfig& cfg, double t, TiltMode mode = TiltMode::Full,
                           LatitudeVariant variant = LatitudeVariant::First);

// --- planar equation pipeline -------------------------------------------------

double sun_equation(double alpha_bar_deg);
double sun_distance(double alpha_bar_deg);

double moon_apparent_radius(double two_eta_deg);
double moon_c1(double two_eta_deg);
// alpha = alpha_bar + c1.
double moon_c2(double alpha_deg, double two_eta_deg);
double moon_distance(double alpha_deg, double two_eta_deg);
double moon_max_c2(double two_eta_deg);
double moon_chi(double two_eta_deg);

// Correction converting arcs of an orb inclined by i into ecliptic longitude.
double displacement_en(double x_deg, double incl_deg);

double mercury_apparent_radius(double kappa_deg);
double planet_op5(Body body, double kappa_deg); // distance O -> epicycle center
double planet_c1(Body body, double kappa_deg);
// alpha = alpha_bar - c1.
double planet_c2(Body body, double kappa_deg, double alpha_deg);
double planet_distance(Body body, double kappa_deg, double alpha_deg);
double planet_max_c2(Body body, double kappa_deg);
double planet_chi(Body body, double kappa_deg);

enum class C2Mode { Exact, Interpolated };

// Longitude by the equation pipeline, with the displacement equation and the
// inclined-orb latitude; distance from the plane triangles.
EphemerisRecord position_planar(const ModelConfig& cfg, double t, C2Mode mode = C2Mode::Exact);

// Moon latitude per the chapter-11 alternative (arctan form); same result as
// the arcsin form.
double moon_latitude_alt(double arg_deg);

struct TableRow {
    double arg;     // kappa_bar (planets) or 2 eta_bar (Moon), degrees
    double c1;      // degrees
    double c2_near; // c2 at the first interpolation endpoint
    double delta;   // far-endpoint c2 minus near-endpoint c2
    double chi;     // interpolation coefficient
};

// Equation-table rows in the traditional layout, arg = step, 2*step, ..., 180.
std::vector<TableRow> generate_table(Body body, int step_deg);

} // namespace shatir::models
