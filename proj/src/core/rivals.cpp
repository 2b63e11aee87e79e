#include "rivals.hpp"

#include <cmath>
#include <random>

#include "sexagesimal.hpp"
#include "util.hpp"

namespace shatir::rivals {

using models::LatitudeVariant;
using models::ModelConfig;
using models::TiltMode;
using rotkit::AffineAngle;
using rotkit::Param;
using rotkit::ParamSet;
using rotkit::Point3;
using rotkit::RotationStep;
using rotkit::Vec3;

namespace {

double sx(const char* text) { return sexagesimal::to_decimal(sexagesimal::parse(text)); }

constexpr Vec3 kI{1, 0, 0};
constexpr Vec3 kJ{0, 1, 0};
constexpr Vec3 kK{0, 0, 1};

const double kMoonIncl = 5.0;
const double kProsneusisMax = sx("13;9"); // greatest mean-apogee swing, third Ptolemaic model

double asin_deg(double x) { return deg(std::asin(std::fmin(1.0, std::fmax(-1.0, x)))); }

AffineAngle aff(std::initializer_list<std::pair<Param, double>> terms, double c0 = 0.0) {
    AffineAngle a;
    a.c0 = c0;
    a.terms.assign(terms);
    return a;
}

Point3 at(double y) { return Point3{0, y, 0}; }

struct Chain3D {
    std::vector<RotationStep> steps;
    Point3 star;
};

// Šāṭir-matched deferent offsets (a, b) and epicycle radius for a planet.
void matched_offsets(Body body, const Options& opts, double& a, double& b, double& r) {
    ModelConfig cfg = models::build_config(body);
    a = std::fabs(cfg.offsets[1]);
    b = std::fabs(cfg.offsets[2]);
    r = std::fabs(cfg.offsets[3]);
    if (body == Body::Venus && opts.venus_historical) {
        double e = sx("1;15");
        a = 1.5 * e;
        b = 0.5 * e;
        r = sx("43;10");
    }
}

// Ptolemaic eccentricity (half the equant distance) per planet.
double ptolemy_e(Body body) {
    switch (body) {
        case Body::Saturn: return sx("3;25");
        case Body::Jupiter: return sx("2;45");
        case Body::Mars: return 6.0;
        case Body::Venus: return sx("1;15");
        case Body::Mercury: return 3.0;
        default: fail(Err::UnsupportedPair, "no eccentricity for this body");
    }
}

double ptolemy_epicycle(Body body) {
    switch (body) {
        case Body::Saturn: return sx("6;30");
        case Body::Jupiter: return sx("11;30");
        case Body::Mars: return sx("39;30");
        case Body::Venus: return sx("43;10");
        case Body::Mercury: return sx("22;30");
        default: fail(Err::UnsupportedPair, "no epicycle for this body");
    }
}

bool is_superior(Body b) { return b == Body::Saturn || b == Body::Jupiter || b == Body::Mars; }

// Ecliptic coordinates of an in-plane longitude carried by an orb inclined at
// `incl` with ascending node at `node_lon`.
void project_inclined(double lambda_in, double incl_deg, double node_lon, EphemerisRecord& rec) {
    double arg = lambda_in - node_lon;
    rec.longitude = norm360(lambda_in + models::displacement_en(arg, incl_deg));
    rec.latitude = asin_deg(std::sin(rad(incl_deg)) * std::sin(rad(arg)));
}

// --- Moon chains ---------------------------------------------------------------

Chain3D urdi_moon_chain() {
    Chain3D c;
    Point3 p1 = at(0), p2 = at(0), p3 = at(sx("10;19")), p4 = at(60);
    c.star = at(60 + sx("5;15"));
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaNode, -1.0)},
        RotationStep{p1, kJ, rotkit::fixed(kMoonIncl)},
        // lambda_node + 3 eta_bar + lambda_sun = 3 lambda_bar - 2 lambda_sun + lambda_node
        RotationStep{p2, kK,
                     aff({{Param::LambdaBar, 3.0}, {Param::LambdaSun, -2.0},
                          {Param::LambdaNode, 1.0}})},
        RotationStep{p3, kK, of(Param::TwoEtaBar, -1.0)},
        RotationStep{p4, kK, of(Param::AlphaBar, -1.0)},
    };
    return c;
}

Chain3D tusi_moon_chain(bool curvilinear) {
    Chain3D c;
    double half = sx("10;19") / 2.0;
    Point3 p1 = at(0), p2 = at(0), p3 = at(0);
    Point3 p4 = at(sx("49;41")), p5 = at(sx("49;41") + half);
    Point3 p6 = at(60), p7 = at(60);
    c.star = at(60 + sx("5;15"));
    using rotkit::fixed;
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaNode, -1.0)},
        RotationStep{p1, kJ, fixed(kMoonIncl)},
        // -(eta_bar - lambda_sun - lambda_node) = -lambda_bar + 2 lambda_sun + lambda_node
        RotationStep{p2, kK,
                     aff({{Param::LambdaBar, -1.0}, {Param::LambdaSun, 2.0},
                          {Param::LambdaNode, 1.0}})},
        RotationStep{p3, kK, of(Param::TwoEtaBar, 1.0)},
        RotationStep{p4, kK, of(Param::TwoEtaBar, 1.0)},
        RotationStep{p5, kK, of(Param::TwoEtaBar, -2.0)},
        RotationStep{p6, kK, of(Param::TwoEtaBar, 1.0)},
    };
    if (curvilinear) {
        c.steps.push_back(RotationStep{p7, kI, fixed(kProsneusisMax / 2.0)});
        c.steps.push_back(RotationStep{p7, kJ, of(Param::TwoEtaBar, -2.0)});
        c.steps.push_back(RotationStep{p7, kI, fixed(-kProsneusisMax / 2.0)});
        c.steps.push_back(RotationStep{p7, kJ, of(Param::TwoEtaBar, 1.0)});
    }
    c.steps.push_back(RotationStep{p7, kK, of(Param::AlphaBar, -1.0)});
    return c;
}

Chain3D shirazi_moon_chain() {
    Chain3D c;
    double half = sx("10;19") / 2.0;
    Point3 p1 = at(0), p2 = at(0), p3 = at(half), p4 = at(half + sx("49;41")), p5 = at(60);
    c.star = at(60 + sx("5;15"));
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaNode, -1.0)},
        RotationStep{p1, kJ, rotkit::fixed(kMoonIncl)},
        RotationStep{p2, kK,
                     aff({{Param::LambdaBar, -1.0}, {Param::LambdaSun, 2.0},
                          {Param::LambdaNode, 1.0}})},
        RotationStep{p3, kK, of(Param::TwoEtaBar, 1.0)},
        RotationStep{p4, kK, of(Param::TwoEtaBar, 1.0)},
        RotationStep{p5, kK, aff({{Param::TwoEtaBar, -1.0}, {Param::AlphaBar, -1.0}})},
    };
    return c;
}

Chain3D sadr_moon_chain(bool alt_reading) {
    Chain3D c = shirazi_moon_chain();
    Point3 p6 = c.star; // the small orb replaces the Moon of the base figure
    double arm = sx("0;52");
    using rotkit::of;
    if (!alt_reading) {
        c.star = at(p6.y + arm);
        c.steps.push_back(RotationStep{p6, kK, of(Param::TwoEtaBar, -1.0)});
    } else {
        c.star = at(p6.y - arm);
        c.steps.push_back(RotationStep{p6, kK, of(Param::TwoEtaBar, 1.0)});
    }
    return c;
}

// --- planet chains (longitudes) --------------------------------------------------

Chain3D urdi_planet_chain(Body body, const Options& opts) {
    double a, b, r;
    matched_offsets(body, opts, a, b, r);
    Chain3D c;
    Point3 p1 = at(0), p3 = at(a), p4 = at(a + 60), p5 = at(a + 60 - b);
    c.star = at(a + 60 - b + r);
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaA)},
        RotationStep{p3, kK, of(Param::KappaBar)},
        RotationStep{p4, kK, of(Param::KappaBar)},
        RotationStep{p5, kK, aff({{Param::AlphaBar, 1.0}, {Param::KappaBar, -1.0}})},
    };
    return c;
}

Chain3D tusi_planet_chain(Body body, const Options& opts) {
    double a, b, r;
    matched_offsets(body, opts, a, b, r);
    Chain3D c;
    Point3 p1 = at(0), p3 = at(a + b), p4 = at(a + b + 60), p5 = at(a + 60);
    Point3 p6 = at(a + 60 - b), p7 = p6;
    c.star = at(a + 60 - b + r);
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaA)},
        RotationStep{p3, kK, of(Param::KappaBar)},
        RotationStep{p4, kK, of(Param::KappaBar)},
        RotationStep{p5, kK, of(Param::KappaBar, -2.0)},
        RotationStep{p6, kK, of(Param::KappaBar)},
        RotationStep{p7, kK, of(Param::AlphaBar)},
    };
    return c;
}

Chain3D shirazi_planet_chain(Body body, const Options& opts) {
    double a, b, r;
    matched_offsets(body, opts, a, b, r);
    Chain3D c;
    Point3 p1 = at(0), p3 = at(a), p4 = at(a + 60), p5 = at(a + 60 - b);
    c.star = at(a + 60 - b + r);
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaA)},
        RotationStep{p3, kK, of(Param::KappaBar)},
        RotationStep{p4, kK, of(Param::KappaBar)},
        RotationStep{p5, kK, of(Param::KappaBar, -1.0)},
        RotationStep{p5, kK, of(Param::AlphaBar)},
    };
    return c;
}

Chain3D shirazi_mercury_chain() {
    Chain3D c;
    double half = 1.5; // c/2 with c = 3
    Point3 p1 = at(0), p2 = at(6), p3 = at(66), p4 = at(66 - half), p5 = at(66 - 2 * half);
    Point3 p6 = at(63 + half), p7 = at(63 + 2 * half), p8 = at(66 + 3);
    c.star = at(69 + sx("22;30"));
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaA)},
        RotationStep{p2, kK, of(Param::KappaBar)},
        RotationStep{p3, kK, of(Param::KappaBar, -1.0)},
        RotationStep{p4, kK, of(Param::KappaBar, 2.0)},
        RotationStep{p5, kK, of(Param::KappaBar)},
        RotationStep{p6, kK, of(Param::KappaBar, -4.0)},
        RotationStep{p7, kK, of(Param::KappaBar, 3.0)},
        RotationStep{p8, kK, aff({{Param::AlphaBar, 1.0}, {Param::KappaBar, -1.0}})},
    };
    return c;
}

// Latitude devices grafted on the Tusi superior-planet model. The epicycle
// tilt amplitudes follow the Almagest values (deferent tilt, total tilt).
void planet_latitude_tilts(Body body, double& i1, double& idev) {
    switch (body) {
        case Body::Saturn: i1 = sx("2;30"); idev = sx("4;30"); break;
        case Body::Jupiter: i1 = sx("1;30"); idev = sx("2;30"); break;
        case Body::Mars: i1 = 1.0; idev = sx("2;15"); break;
        default: fail(Err::UnsupportedPair, "latitude device is for the superior planets");
    }
}

Chain3D tusi_planet_chain_latitude(Body body, const ModelConfig& base, const Options& opts) {
    double a, b, r;
    matched_offsets(body, opts, a, b, r);
    double i1, idev;
    planet_latitude_tilts(body, i1, idev);
    double from_node = -base.node_offset_deg;   // arc apogee -> ascending node
    double from_limit = from_node - 90.0;       // arc apogee -> northern limit
    Chain3D c;
    Point3 p1 = at(0), p3 = at(a + b), p4 = at(a + b + 60), p5 = at(a + 60);
    Point3 p6 = at(a + 60 - b);
    c.star = at(a + 60 - b + r);
    Vec3 u = rotkit::direction(base.node_offset_deg);
    using rotkit::fixed;
    using rotkit::of;
    c.steps = {
        RotationStep{p1, kK, of(Param::LambdaA)},
        RotationStep{p1, u, fixed(i1)},
        RotationStep{p3, kK, of(Param::KappaBar)},
        RotationStep{p4, kK, of(Param::KappaBar)},
        RotationStep{p5, kK, of(Param::KappaBar, -2.0)},
    };
    if (opts.latitude_device == 3) c.steps.push_back(RotationStep{p6, u, fixed(-i1)});
    c.steps.push_back(RotationStep{p6, kK, of(Param::KappaBar)});

    if (opts.latitude_device == 1) {
        Vec3 t{std::sin(rad(idev)), std::cos(rad(idev)), 0.0};
        c.steps.push_back(RotationStep{p6, t, of(Param::KappaBar, -1.0, -from_node)});
        c.steps.push_back(RotationStep{p6, kJ, of(Param::KappaBar, 1.0, from_node)});
        c.steps.push_back(RotationStep{p6, kK, of(Param::AlphaBar)});
        return c;
    }
    double amp = opts.latitude_device == 3 ? idev - i1 : idev;
    Vec3 v{0.0, std::cos(rad(amp)), -std::sin(rad(amp))};
    Vec3 w{0.0, std::cos(rad(amp / 2.0)), -std::sin(rad(amp / 2.0))};
    c.steps.push_back(RotationStep{p6, kJ, of(Param::KappaBar, 1.0, from_limit)});
    c.steps.push_back(RotationStep{p6, w, of(Param::KappaBar, -2.0, -2.0 * from_limit)});
    c.steps.push_back(RotationStep{p6, v, of(Param::KappaBar, 1.0, from_limit)});
    c.steps.push_back(RotationStep{p6, kI, fixed(-idev)});
    c.steps.push_back(RotationStep{p6, kK, of(Param::AlphaBar)});
    return c;
}

// --- Ptolemy, closed forms -------------------------------------------------------

struct Flat {
    double x = 0.0, y = 0.0;
};
Flat dir2(double lon) { return {-std::sin(rad(lon)), std::cos(rad(lon))}; }
Flat add(Flat a, Flat b) { return {a.x + b.x, a.y + b.y}; }
Flat mul(Flat a, double s) { return {a.x * s, a.y * s}; }
double lon2(Flat a) { return norm360(deg(std::atan2(-a.x, a.y))); }
double abs2(Flat a) { return std::hypot(a.x, a.y); }
Flat rot2(Flat a, double angle_deg) {
    double c = std::cos(rad(angle_deg)), s = std::sin(rad(angle_deg));
    return {a.x * c - a.y * s, a.x * s + a.y * c};
}

EphemerisRecord ptolemy_sun(const ModelConfig& cfg, double t) {
    ParamSet p = cfg.params_at(t);
    double lamA = p[static_cast<size_t>(Param::LambdaA)];
    double alpha = p[static_cast<size_t>(Param::AlphaBar)];
    double e = sx("2;29,30");
    Flat pos = add(mul(dir2(lamA), e), mul(dir2(lamA + alpha), 60.0));
    EphemerisRecord rec;
    rec.longitude = lon2(pos);
    rec.latitude = 0.0;
    rec.distance = abs2(pos);
    return rec;
}

EphemerisRecord ptolemy_moon(const ModelConfig& cfg, double t, bool third_model) {
    ParamSet ps = cfg.params_at(t);
    auto P = [&](Param q) { return ps[static_cast<size_t>(q)]; };
    double lam = P(Param::LambdaBar), alpha = P(Param::AlphaBar);
    double two_eta = P(Param::TwoEtaBar), node = norm360(-P(Param::LambdaNode));
    const double R = sx("49;41"), e = sx("10;19"), r = sx("5;15");

    double s = std::sin(rad(two_eta));
    double oe = e * std::cos(rad(two_eta)) + std::sqrt(R * R - e * e * s * s);
    Flat E = mul(dir2(lam), oe);
    Flat apo;
    if (third_model) {
        Flat pros = mul(dir2(lam - two_eta), -e); // opposite the eccentric center
        Flat d = add(E, mul(pros, -1.0));
        apo = mul(d, 1.0 / abs2(d));
    } else {
        apo = dir2(lam);
    }
    Flat pos = add(E, mul(rot2(apo, -alpha), r));

    EphemerisRecord rec;
    project_inclined(lon2(pos), kMoonIncl, node, rec);
    rec.distance = abs2(pos);
    return rec;
}

// Equant geometry shared by the planets; returns the epicycle center in the
// flat figure and the mean-apogee direction seen from the equant.
void ptolemy_deferent(Body body, double lamA, double kappa, Flat& E, Flat& apo) {
    double e = ptolemy_e(body);
    const double R = 60.0;
    Flat w = dir2(lamA + kappa);
    if (body == Body::Mercury) {
        Flat equant = mul(dir2(lamA), e);
        Flat g = add(mul(dir2(lamA), -e), mul(dir2(lamA - kappa), -e)); // equant - center(t)
        double gw = g.x * w.x + g.y * w.y;
        double rho = -gw + std::sqrt(std::fmax(0.0, gw * gw - (g.x * g.x + g.y * g.y) + R * R));
        E = add(equant, mul(w, rho));
    } else {
        Flat equant = mul(dir2(lamA), 2.0 * e);
        double s = std::sin(rad(kappa));
        double rho = -e * std::cos(rad(kappa)) + std::sqrt(R * R - e * e * s * s);
        E = add(equant, mul(w, rho));
    }
    apo = w;
}

EphemerisRecord ptolemy_planet(const ModelConfig& cfg, double t) {
    ParamSet ps = cfg.params_at(t);
    auto P = [&](Param q) { return ps[static_cast<size_t>(q)]; };
    double lamA = P(Param::LambdaA), kappa = P(Param::KappaBar), alpha = P(Param::AlphaBar);
    double node = norm360(lamA + cfg.node_offset_deg);
    double r = ptolemy_epicycle(cfg.body);

    Flat E, apo;
    ptolemy_deferent(cfg.body, lamA, kappa, E, apo);

    // Deferent tilted by the constant inclination about the node line; the
    // epicycle's apogee diameter rides its small circle (amplitude per the
    // Almagest), its perpendicular diameter stays parallel to the ecliptic.
    double i1 = cfg.incl_orb_deg;
    double omega = lon2(E) - node;
    Vec3 E3 = rotkit::rotation_about(Point3{}, rotkit::direction(node), i1)
                  .linear(Vec3{E.x, E.y, 0.0});
    double j_tilt = 0.0;
    if (is_superior(cfg.body)) {
        double ii, idev;
        planet_latitude_tilts(cfg.body, ii, idev);
        j_tilt = (idev - ii) * std::sin(rad(omega));
    }
    Vec3 u_h{apo.x, apo.y, 0.0};
    Vec3 u = Vec3{u_h.x * std::cos(rad(j_tilt)), u_h.y * std::cos(rad(j_tilt)),
                  -std::sin(rad(j_tilt))};
    Vec3 v = rotkit::cross(Vec3{0, 0, 1}, u_h);
    Vec3 pos = E3 + u * (r * std::cos(rad(alpha))) + v * (r * std::sin(rad(alpha)));

    EphemerisRecord rec;
    rec.longitude = rotkit::longitude_of(pos);
    rec.latitude = rotkit::latitude_of(pos);
    rec.distance = rotkit::norm(pos);
    return rec;
}

} // namespace

const char* model_name(ModelId id) {
    switch (id) {
        case ModelId::Shatir3D: return "shatir3d";
        case ModelId::ShatirPlanar: return "shatir-planar";
        case ModelId::ShatirChi: return "shatir-chi";
        case ModelId::Ptolemy: return "ptolemy";
        case ModelId::Ptolemy2: return "ptolemy2";
        case ModelId::Ptolemy3: return "ptolemy3";
        case ModelId::Urdi: return "urdi";
        case ModelId::Tusi: return "tusi";
        case ModelId::TusiCouple: return "tusi-couple";
        case ModelId::Shirazi: return "shirazi";
        case ModelId::Sadr: return "sadr";
    }
    return "?";
}

ModelId model_from_name(const std::string& name) {
    if (name == "shatir") return ModelId::ShatirPlanar;
    for (ModelId id : {ModelId::Shatir3D, ModelId::ShatirPlanar, ModelId::ShatirChi,
                       ModelId::Ptolemy, ModelId::Ptolemy2, ModelId::Ptolemy3, ModelId::Urdi,
                       ModelId::Tusi, ModelId::TusiCouple, ModelId::Shirazi, ModelId::Sadr})
        if (name == model_name(id)) return id;
    fail(Err::UnsupportedPair, "unknown model: " + name);
}

RivalConfig rival_config(ModelId model, Body body, const Options& opts) {
    RivalConfig rc;
    rc.model = model;
    rc.body = body;
    double half_moon = sx("10;19") / 2.0;
    double a = 0, b = 0, r = 0;
    if (body != Body::Sun && body != Body::Moon && body != Body::Mercury) {
        matched_offsets(body, opts, a, b, r);
        rc.eccentricity = ptolemy_e(body);
        rc.epicycle_radius = r;
    }
    switch (model) {
        case ModelId::Urdi:
            if (body == Body::Moon)
                rc.offsets = {sx("10;19"), sx("49;41"), sx("5;15")};
            else
                rc.offsets = {a, 60.0, -b, r};
            break;
        case ModelId::Tusi:
        case ModelId::TusiCouple:
            if (body == Body::Moon)
                rc.offsets = {sx("49;41"), half_moon, half_moon, sx("5;15")};
            else
                rc.offsets = {a + b, 60.0, -b, -b, r};
            break;
        case ModelId::Shirazi:
            if (body == Body::Moon)
                rc.offsets = {half_moon, sx("49;41"), half_moon, sx("5;15")};
            else if (body == Body::Mercury)
                rc.offsets = {6.0, 60.0, -1.5, -1.5, 1.5, 1.5, 3.0, sx("22;30")};
            else
                rc.offsets = {a, 60.0, -b, r};
            break;
        case ModelId::Sadr:
            if (body != Body::Moon) fail(Err::UnsupportedPair, "lunar model only");
            rc.offsets = {half_moon, sx("49;41"), half_moon, sx("5;15"),
                          opts.sadr_alt_reading ? -sx("0;52") : sx("0;52")};
            break;
        default: fail(Err::UnsupportedPair, "no geometric figure for this model");
    }
    return rc;
}

double urdi_moon_q(double two_eta_deg) {
    double op3 = sx("10;19"), p3p4 = sx("49;41");
    double s = std::sin(rad(two_eta_deg)), c = std::cos(rad(two_eta_deg));
    double op4 = std::hypot(p3p4 * s, p3p4 * c + op3);
    return asin_deg(op3 * s / op4);
}

EphemerisRecord rival_position(ModelId model, Body body, double t, const Options& opts) {
    const ModelConfig cfg = models::build_config(body);
    EphemerisRecord rec;
    rec.t = t;
    rec.body = body;
    rec.model = model_name(model);

    switch (model) {
        case ModelId::Ptolemy:
        case ModelId::Ptolemy2:
        case ModelId::Ptolemy3: {
            if (body == Body::Moon) {
                bool third = model != ModelId::Ptolemy2;
                EphemerisRecord r2 = ptolemy_moon(cfg, t, third);
                rec.longitude = r2.longitude;
                rec.latitude = r2.latitude;
                rec.distance = r2.distance;
                return rec;
            }
            if (model != ModelId::Ptolemy) fail(Err::UnsupportedPair, "lunar model only");
            EphemerisRecord r2 = body == Body::Sun ? ptolemy_sun(cfg, t) : ptolemy_planet(cfg, t);
            rec.longitude = r2.longitude;
            rec.latitude = r2.latitude;
            rec.distance = r2.distance;
            return rec;
        }
        case ModelId::Urdi:
        case ModelId::Tusi:
        case ModelId::TusiCouple:
        case ModelId::Shirazi:
        case ModelId::Sadr: break;
        default: fail(Err::UnsupportedPair, "use position_of for the house pipelines");
    }

    if (body == Body::Sun) fail(Err::UnsupportedPair, "no rival chain for the sun here");
    if (body == Body::Moon) {
        if (model == ModelId::Urdi) {
            Chain3D c = urdi_moon_chain();
            ParamSet ps = cfg.params_at(t);
            Point3 p = rotkit::apply_chain(c.steps, ps, c.star);
            rec.longitude = rotkit::longitude_of(p);
            rec.latitude = rotkit::latitude_of(p);
            rec.distance = rotkit::norm(p);
            if (opts.urdi_moon_drop_q) {
                double q = urdi_moon_q(ps[static_cast<size_t>(Param::TwoEtaBar)]);
                rec.longitude = norm360(rec.longitude - q);
            }
            return rec;
        }
        Chain3D c;
        if (model == ModelId::Tusi || model == ModelId::TusiCouple)
            c = tusi_moon_chain(model == ModelId::TusiCouple);
        else if (model == ModelId::Shirazi)
            c = shirazi_moon_chain();
        else if (model == ModelId::Sadr)
            c = sadr_moon_chain(opts.sadr_alt_reading);
        else
            fail(Err::UnsupportedPair, "unsupported lunar model");
        Point3 p = rotkit::apply_chain(c.steps, cfg.params_at(t), c.star);
        rec.longitude = rotkit::longitude_of(p);
        rec.latitude = rotkit::latitude_of(p);
        rec.distance = rotkit::norm(p);
        return rec;
    }

    if (model == ModelId::Sadr || model == ModelId::TusiCouple)
        fail(Err::UnsupportedPair, "lunar model only");
    if (body == Body::Mercury && model != ModelId::Shirazi)
        fail(Err::UnsupportedPair, "only the Shirazi rival covers Mercury");

    if (opts.latitude_device < 0 || opts.latitude_device > 3)
        fail(Err::PreconditionViolated, "latitude device is 0, 1, 2 or 3");
    if (opts.latitude_device != 0 && (model != ModelId::Tusi || !is_superior(body)))
        fail(Err::UnsupportedPair, "latitude devices ride the Tusi superior-planet model");
    if (model == ModelId::Tusi && opts.latitude_device != 0) {
        Chain3D c = tusi_planet_chain_latitude(body, cfg, opts);
        Point3 p = rotkit::apply_chain(c.steps, cfg.params_at(t), c.star);
        rec.longitude = rotkit::longitude_of(p);
        rec.latitude = rotkit::latitude_of(p);
        rec.distance = rotkit::norm(p);
        return rec;
    }

    Chain3D c;
    if (model == ModelId::Urdi)
        c = urdi_planet_chain(body, opts);
    else if (model == ModelId::Tusi)
        c = tusi_planet_chain(body, opts);
    else if (body == Body::Mercury)
        c = shirazi_mercury_chain();
    else
        c = shirazi_planet_chain(body, opts);
    Point3 p = rotkit::apply_chain(c.steps, cfg.params_at(t), c.star);
    double node = norm360(timebase::mean(cfg.apogee, t) + cfg.node_offset_deg);
    project_inclined(rotkit::longitude_of(p), cfg.incl_orb_deg, node, rec);
    rec.distance = rotkit::norm(p);
    return rec;
}

EphemerisRecord position_of(ModelId model, Body body, double t, const Options& opts) {
    const ModelConfig cfg = models::build_config(body);
    switch (model) {
        case ModelId::Shatir3D: {
            EphemerisRecord rec = models::position3d(cfg, t, TiltMode::Full, opts.latitude_variant);
            return rec;
        }
        case ModelId::ShatirPlanar: return models::position_planar(cfg, t, models::C2Mode::Exact);
        case ModelId::ShatirChi: return models::position_planar(cfg, t, models::C2Mode::Interpolated);
        default: return rival_position(model, body, t, opts);
    }
}

double equivalence_report(ModelId a, ModelId b, Body body, int samples, unsigned seed,
                          const Options& opts) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 60.0 * 365.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double t = dist(rng);
        double la = position_of(a, body, t, opts).longitude;
        double lb = position_of(b, body, t, opts).longitude;
        worst = std::fmax(worst, circular_delta(la, lb));
    }
    return worst;
}

double ptolemy_e_from_distance_ratio(double ratio, double R) {
    return R * (ratio - 1.0) / (ratio + 3.0);
}

double ptolemy_c1_diff_from_e(double e, double R) {
    return R * e / (std::sqrt(R * R - e * e) - e);
}

MercuryCalibration mercury_calibration(const MercuryTargets& t) {
    auto in_range = [](double x) { return x > 0.0 && x < 90.0; };
    if (!in_range(t.max_c2_apogee_deg) || !in_range(t.max_c2_perigee_deg) ||
        !in_range(t.c1_quadrature_deg) || !in_range(t.max_c2_quadrature_deg))
        fail(Err::InfeasibleTargets, "target angles must lie in (0, 90) degrees");
    double sa = std::sin(rad(t.max_c2_apogee_deg));
    double sp = std::sin(rad(t.max_c2_perigee_deg));
    if (sp <= sa) fail(Err::InfeasibleTargets, "perigee elongation must exceed the apogee one");
    MercuryCalibration out;
    out.sum_p3p4_p4p5 = 60.0 * (sp - sa) / (sp + sa);
    out.arm_minus = (60.0 + out.sum_p3p4_p4p5) * sa;
    out.diff_p3p4_p4p5 = 60.0 * std::tan(rad(t.c1_quadrature_deg));
    out.arm_plus =
        std::sin(rad(t.max_c2_quadrature_deg)) * std::hypot(out.diff_p3p4_p4p5, 60.0);
    if (out.arm_plus < out.arm_minus)
        fail(Err::InfeasibleTargets, "quadrature elongation incompatible with the apogee one");
    return out;
}

} // namespace shatir::rivals
